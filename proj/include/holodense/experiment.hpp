// Copyright 2026 the holodense authors
//
// Licensed under the Apache License, Version 2.0 (see
// LICENSE or https://www.apache.org/licenses/LICENSE-2.0).

#ifndef HOLODENSE_EXPERIMENT_HPP
#define HOLODENSE_EXPERIMENT_HPP

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "holodense/density.hpp"
#include "holodense/rr_space.hpp"

namespace holodense {

/// An m-tuple of elements drawn from one space (m >= 2).
struct TupleSample {
  const RRSpace* space = nullptr;
  std::vector<RRElement> comps;

  TupleSample(const RRSpace& s, std::vector<RRElement> c);
};

/// Coprimality over F_q[x]: the ideal is the unit ideal iff the gcd of the
/// components is a nonzero constant.  The all-zero tuple is not coprime.
bool coprime_gcd_oracle(const TupleSample& t);

/// Per-curve scratch for the elliptic oracle: canonical extension fields by
/// degree, built lazily.  One instance per worker; not thread-shared.
class PlaceOracleContext {
 public:
  explicit PlaceOracleContext(const Curve& curve) : curve_(&curve) {}
  const Curve& curve() const { return *curve_; }
  const FieldPtr& field_of_degree(int e);

 private:
  const Curve* curve_;
  std::map<int, FieldPtr> fields_;
};

/// Coprimality in the elliptic coordinate ring: true iff no place (of any
/// degree; a common zero forces deg P <= min pole degree automatically)
/// annihilates every component.  Decided exactly through the norms
/// N_i = A_i^2 - B_i^2 (x^3+ax+b): candidate x-orbits are the roots of
/// gcd_i(N_i), located by distinct-degree splitting and root extraction in
/// F_{q^e}, then checked for a consistent common y.
bool coprime_place_oracle(const TupleSample& t, PlaceOracleContext& ctx);

/// Same decision, also reporting a witnessing place when not coprime.
/// The witness evaluates every component to zero under evaluate_at_place.
std::optional<Place> place_oracle_witness(const TupleSample& t,
                                          PlaceOracleContext& ctx);

/// Smallest-factor tables for monic polynomials of degree <= dmax, built by
/// a multiplication sieve (composites are marked as products); deliberately
/// free of any gcd machinery so it can cross-check the gcd oracle.
class IrreducibleSieve {
 public:
  IrreducibleSieve(FieldPtr field, int dmax);

  int dmax() const { return dmax_; }
  bool sieve_irreducible(const Poly& f) const;  // monic, 1 <= deg <= dmax
  std::vector<Poly> distinct_irreducible_factors(const Poly& f) const;

 private:
  std::uint64_t encode(const Poly& f, int d) const;
  Poly decode(int d, std::uint64_t idx) const;
  FieldPtr field_;
  int dmax_;
  std::vector<std::vector<std::uint64_t>> smallest_;  // [d][idx], 0 = irreducible
};

/// Irreducible-divisor coprimality over F_q[x]: true iff no monic irreducible
/// (necessarily of degree <= the minimal component degree) divides every
/// component.  Independent of the gcd oracle by construction.
bool coprime_irreducible_oracle(const TupleSample& t, const IrreducibleSieve& sieve);

/// One experiment outcome.  CSV schema (fixed):
///   space,q,n,m,mode,total,coprime,empirical,theoretical,abs_err,ci_low,ci_high,seed
/// Rationals are serialized exactly ("33/64"); ci bounds are shortest
/// round-trip doubles, empty for exhaustive runs.  wall_ms is reporting only
/// and never serialized to CSV.
struct ExperimentReport {
  std::string space;  // "rational" | "elliptic"
  mpz_class q;
  int n = 0;
  int m = 0;
  std::string mode;  // "exhaustive" | "mc"
  std::uint64_t total = 0;
  std::uint64_t coprime = 0;
  Rational empirical;
  Rational theoretical;
  Rational abs_err;
  std::optional<double> ci_low, ci_high;
  std::uint64_t seed = 0;
  double wall_ms = 0.0;
};

std::string report_csv_header();
std::string report_csv_row(const ExperimentReport& r);
ExperimentReport report_from_csv_row(const std::string& line);
std::string report_json(const ExperimentReport& r);

/// Wilson score interval for k successes out of n at the given z.
std::pair<double, double> wilson_interval(std::uint64_t k, std::uint64_t n, double z);

/// z for a confidence level in percent; only 90, 95 and 99 are offered.
double z_for_level(int level_percent);

/// Exact coprime fraction over all q^(m*dim) tuples.  The index space is
/// split into contiguous ranges across workers; the count is the only thing
/// merged, so worker count never changes the result.
ExperimentReport exhaustive_density(const RRSpacePtr& space, int m,
                                    int workers = 1,
                                    const Guards& guards = Guards::active());

/// Monte Carlo estimate with a Wilson confidence interval.  Trials are cut
/// into fixed blocks of 4096; block b draws from the substream
/// derive_stream_seed(seed, b), so any worker count produces byte-identical
/// reports.
ExperimentReport monte_carlo_density(const RRSpacePtr& space, int m,
                                     std::uint64_t trials, std::uint64_t seed,
                                     int workers = 1, int ci_level = 95,
                                     const Guards& guards = Guards::active());

/// Runs one experiment per n in [n_min, n_max] over spaces from the factory.
std::vector<ExperimentReport> convergence_scan(
    const std::function<RRSpacePtr(int)>& space_for_n, int n_min, int n_max,
    int m, const std::string& mode, std::uint64_t trials, std::uint64_t seed,
    int workers = 1, const Guards& guards = Guards::active());

struct CrossOracleResult {
  bool agree = true;
  std::uint64_t checked = 0;
  std::string disagreement;  // first differing tuple, if any
};

/// Samples random tuples from the rational space over `field` with bound n
/// and compares the gcd oracle against the irreducible-divisor oracle.
CrossOracleResult cross_oracle_check(const FieldPtr& field, int n, int m,
                                     std::uint64_t trials, std::uint64_t seed);

}  // namespace holodense

#endif  // HOLODENSE_EXPERIMENT_HPP
