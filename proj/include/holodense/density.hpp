// Copyright 2026 the holodense authors
//
// Licensed under the Apache License, Version 2.0 (see
// LICENSE or https://www.apache.org/licenses/LICENSE-2.0).

#ifndef HOLODENSE_DENSITY_HPP
#define HOLODENSE_DENSITY_HPP

#include <optional>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "holodense/curve.hpp"

namespace holodense {

// Exact density arithmetic.  Everything in this module is a rational number;
// floating point appears only when rendering decimal strings at the output
// boundary.
using Rational = mpq_class;

/// Density of coprime m-tuples of polynomials over F_q: 1 - q^(1-m).
/// Requires m >= 2 (q is any prime power; only its size enters).
Rational density_rational(const mpz_class& q, int m);

/// Density of coprime m-tuples of the elliptic coordinate ring:
/// (1 - q^(1-m)) / L(q^-m) with L(T) = 1 - a_q T + q T^2.
Rational density_elliptic(const Curve& E, int m,
                          const Guards& guards = Guards::active());

/// Density for a holomorphy ring given by an L-polynomial and the multiset of
/// degrees of the removed places:
///   (1 - q^-m)(1 - q^(1-m)) / ( L(q^-m) * prod_d (1 - q^(-m d)) ).
/// The removed set must be nonempty; m >= 2.
Rational density_finite_complement(const LPolynomial& L,
                                   const std::vector<int>& removed_degrees,
                                   int m);

/// Structural checks for user-supplied L-polynomials: c_0 = 1, even degree,
/// leading coefficient q^g, functional-equation symmetry c_{2g-i} = q^(g-i) c_i.
void validate_lpolynomial(const LPolynomial& L);

/// N_1..N_dmax from an L-polynomial via Newton power sums of the inverse
/// roots: N_d = q^d + 1 - p_d.
std::vector<mpz_class> point_counts_from_lpoly(const LPolynomial& L, int dmax);

/// Affine place counts B_1..B_dmax of the holomorphy ring: projective counts
/// from the L-polynomial minus the removed places per degree.  Throws when
/// more places are removed than exist.
std::vector<mpz_class> place_counts_from_lpoly(const LPolynomial& L,
                                               const std::vector<int>& removed_degrees,
                                               int dmax);

/// Finite Euler product prod_{d<=t} (1 - q^(-m d))^(B_d) over the place
/// counts B (t = B.size()).  Empty input gives 1.
Rational truncated_density(const std::vector<mpz_class>& place_counts,
                           const mpz_class& q, int m);

/// Rigorous upper bound on the truncation gap
///   q^(g m) * sum_{d>t} B_d q^(-m d)
/// using B_d <= (q^d + 2g q^(d/2) + 1)/d, 1/d <= 1/(t+1) on the tail, and
/// q^(d/2) <= q^d, which closes to two geometric series:
///   q^(g m)/(t+1) * [ (1+2g) r^(t+1)/(1-r) + s^(t+1)/(1-s) ],
/// r = q^(1-m), s = q^(-m).  Finite for m >= 2.
Rational euler_tail_bound(const mpz_class& q, int genus, int m, int t);

/// Exact value plus a rigorous [lower, upper] interval from the truncated
/// product and its tail bound.
struct DensityEnclosure {
  std::optional<Rational> exact;
  Rational truncated;       // the t-term Euler product (upper end)
  Rational tail;            // bound on truncated - density
  Rational lower, upper;    // [max(0, truncated - tail), truncated]
  int t = 0;

  bool contains(const Rational& v) const { return lower <= v && v <= upper; }
  Rational width() const { return upper - lower; }
};

DensityEnclosure enclosure_rational(const mpz_class& q, int m, int t);
DensityEnclosure enclosure_elliptic(const Curve& E, int m, int t,
                                    const Guards& guards = Guards::active());
DensityEnclosure enclosure_generic(const LPolynomial& L,
                                   const std::vector<int>& removed_degrees,
                                   int m, int t);

/// Truncating decimal rendering with the given number of fractional digits.
std::string decimal_string(const Rational& v, int digits);

}  // namespace holodense

#endif  // HOLODENSE_DENSITY_HPP
