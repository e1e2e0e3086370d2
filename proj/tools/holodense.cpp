// Copyright 2026 the holodense authors
//
// Licensed under the Apache License, Version 2.0 (see
// LICENSE or https://www.apache.org/licenses/LICENSE-2.0).

// holodense: exact and empirical densities of coprime m-tuples in rings of
// functions with poles only at infinity, over finite fields.
//
// Exit codes: 0 success, 2 guard-limit refusal, 1 bad input or internal error.

#include <cstdint>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "holodense/density.hpp"
#include "holodense/experiment.hpp"

using namespace holodense;

namespace {

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == sep) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur.push_back(c);
    }
  }
  out.push_back(cur);
  return out;
}

struct PrimePower {
  std::uint64_t p = 0;
  int k = 1;
};

PrimePower factor_prime_power(std::uint64_t q) {
  if (q < 2) throw std::invalid_argument("q must be >= 2");
  if (q > 1'000'000'000'000ULL)
    throw std::invalid_argument("q too large to validate as a prime power");
  std::uint64_t p = 0;
  for (std::uint64_t d = 2; d * d <= q; ++d)
    if (q % d == 0) {
      p = d;
      break;
    }
  if (p == 0) return {q, 1};  // q itself prime
  PrimePower pp{p, 0};
  std::uint64_t rest = q;
  while (rest % p == 0) {
    rest /= p;
    ++pp.k;
  }
  if (rest != 1)
    throw std::invalid_argument("q = " + std::to_string(q) + " is not a prime power");
  return pp;
}

FieldPtr field_for_q(std::uint64_t q) {
  PrimePower pp = factor_prime_power(q);
  FieldPtr F = Field::make_prime(pp.p);
  if (pp.k > 1) F = Field::make_extension(F, pp.k);
  return F;
}

Curve parse_curve(const std::string& spec) {
  auto parts = split(spec, ',');
  if (parts.size() != 3)
    throw std::invalid_argument("--curve expects q,a,b");
  const std::uint64_t q = std::stoull(parts[0]);
  PrimePower pp = factor_prime_power(q);
  if (pp.k != 1)
    throw std::invalid_argument("--curve: q must be prime (a and b are integers mod p)");
  FieldPtr F = Field::make_prime(q);
  return Curve(F, F->from_integer(std::stol(parts[1])),
               F->from_integer(std::stol(parts[2])));
}

LPolynomial parse_lpoly(const std::string& spec, std::uint64_t q) {
  std::vector<mpz_class> coeffs;
  for (const std::string& s : split(spec, ',')) coeffs.emplace_back(s);
  if (coeffs.empty() || coeffs.size() % 2 == 0)
    throw std::invalid_argument("--lpoly expects c0,...,c2g (odd count)");
  LPolynomial L{mpz_class(static_cast<unsigned long>(q)),
                static_cast<int>((coeffs.size() - 1) / 2), std::move(coeffs)};
  validate_lpolynomial(L);
  return L;
}

std::vector<int> parse_removed(const std::string& spec) {
  std::vector<int> out;
  for (const std::string& s : split(spec, ',')) out.push_back(std::stoi(s));
  return out;
}

void print_enclosure(const DensityEnclosure& enc, int digits) {
  nlohmann::json j;
  j["exact"] = enc.exact->get_str();
  j["decimal"] = decimal_string(*enc.exact, digits);
  j["truncated_t"] = enc.t;
  j["interval"] = {enc.lower.get_str(), enc.upper.get_str()};
  std::cout << j.dump() << "\n";
}

struct ExperimentArgs {
  std::string space;
  std::uint64_t q = 2;
  std::string curve_spec;
  int m = 2;
  std::string mode;
  std::uint64_t trials = 100000;
  std::uint64_t seed = 0;
  int workers = 1;
  int ci_level = 95;
  std::string out = "csv";
};

RRSpacePtr make_space(const ExperimentArgs& a, int n) {
  if (a.space == "rational") return RRSpace::rational(field_for_q(a.q), n);
  if (a.space == "elliptic") {
    if (a.curve_spec.empty())
      throw std::invalid_argument("--curve is required for elliptic spaces");
    return RRSpace::elliptic(parse_curve(a.curve_spec), n);
  }
  throw std::invalid_argument("experiments take --space rational or elliptic");
}

ExperimentReport run_one(const ExperimentArgs& a, int n) {
  RRSpacePtr space = make_space(a, n);
  if (a.mode == "exhaustive") return exhaustive_density(space, a.m, a.workers);
  if (a.mode == "mc")
    return monte_carlo_density(space, a.m, a.trials, a.seed, a.workers, a.ci_level);
  throw std::invalid_argument("--mode must be exhaustive or mc");
}

void emit_reports(const std::vector<ExperimentReport>& reports, const std::string& out) {
  if (out == "csv") {
    std::cout << report_csv_header() << "\n";
    for (const auto& r : reports) std::cout << report_csv_row(r) << "\n";
  } else if (out == "json") {
    std::cout << "[";
    for (size_t i = 0; i < reports.size(); ++i)
      std::cout << (i ? "," : "") << report_json(reports[i]);
    std::cout << "]\n";
  } else {
    throw std::invalid_argument("--out must be csv or json");
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"densities of coprime m-tuples in function rings over finite fields"};
  app.require_subcommand(1);

  // density
  std::string d_space, d_curve, d_lpoly, d_removed = "1";
  std::uint64_t d_q = 2;
  int d_m = 2, d_t = 8, d_digits = 12;
  auto* density_cmd =
      app.add_subcommand("density", "exact density with a truncated-product enclosure");
  density_cmd->add_option("--space", d_space, "rational | elliptic | generic")->required();
  density_cmd->add_option("--q", d_q, "field size (prime power)");
  density_cmd->add_option("--curve", d_curve, "elliptic curve as q,a,b");
  density_cmd->add_option("--lpoly", d_lpoly, "L-polynomial coefficients c0,c1,...");
  density_cmd->add_option("--removed", d_removed, "degrees of removed places d1,d2,...");
  density_cmd->add_option("--m", d_m, "tuple length (>= 2)")->required();
  density_cmd->add_option("--t", d_t, "Euler product truncation depth");
  density_cmd->add_option("--digits", d_digits, "decimal digits to render");

  // experiment / scan
  ExperimentArgs ex;
  int ex_n = 0, scan_lo = 0, scan_hi = 0;
  auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("--space", ex.space, "rational | elliptic")->required();
    cmd->add_option("--q", ex.q, "field size for rational spaces");
    cmd->add_option("--curve", ex.curve_spec, "elliptic curve as q,a,b");
    cmd->add_option("--m", ex.m, "tuple length (>= 2)")->required();
    cmd->add_option("--mode", ex.mode, "exhaustive | mc")->required();
    cmd->add_option("--trials", ex.trials, "Monte Carlo trials");
    cmd->add_option("--seed", ex.seed, "Monte Carlo seed");
    cmd->add_option("--workers", ex.workers, "worker threads (results are worker-invariant)");
    cmd->add_option("--ci-level", ex.ci_level, "confidence level percent (90|95|99)");
    cmd->add_option("--out", ex.out, "csv | json");
  };
  auto* experiment_cmd = app.add_subcommand("experiment", "empirical density at one bound n");
  experiment_cmd->add_option("--n", ex_n, "pole-order bound")->required();
  add_common(experiment_cmd);
  auto* scan_cmd = app.add_subcommand("scan", "empirical densities across a range of bounds");
  scan_cmd->add_option("--n-min", scan_lo, "first bound")->required();
  scan_cmd->add_option("--n-max", scan_hi, "last bound")->required();
  add_common(scan_cmd);

  // places / count
  std::string p_curve, p_out = "csv";
  int p_dmax = 1;
  auto* places_cmd =
      app.add_subcommand("places", "closed points of the affine curve by degree");
  places_cmd->add_option("--curve", p_curve, "elliptic curve as q,a,b")->required();
  places_cmd->add_option("--dmax", p_dmax, "largest place degree")->required();
  places_cmd->add_option("--out", p_out, "csv");
  auto* count_cmd =
      app.add_subcommand("count", "point counts, traces and place counts per degree");
  count_cmd->add_option("--curve", p_curve, "elliptic curve as q,a,b")->required();
  count_cmd->add_option("--dmax", p_dmax, "largest degree")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;  // --help stays 0, every parse error is 1
  }

  try {
    (void)Guards::active();  // surface a malformed HOLODENSE_GUARD immediately
    if (density_cmd->parsed()) {
      if (d_m < 2) throw std::invalid_argument("--m must be >= 2");
      if (d_space == "rational") {
        factor_prime_power(d_q);  // validation only
        print_enclosure(enclosure_rational(d_q, d_m, d_t), d_digits);
      } else if (d_space == "elliptic") {
        if (d_curve.empty()) throw std::invalid_argument("--curve is required");
        print_enclosure(enclosure_elliptic(parse_curve(d_curve), d_m, d_t), d_digits);
      } else if (d_space == "generic") {
        if (d_lpoly.empty()) throw std::invalid_argument("--lpoly is required");
        factor_prime_power(d_q);
        LPolynomial L = parse_lpoly(d_lpoly, d_q);
        print_enclosure(enclosure_generic(L, parse_removed(d_removed), d_m, d_t),
                        d_digits);
      } else {
        throw std::invalid_argument("--space must be rational, elliptic or generic");
      }
    } else if (experiment_cmd->parsed()) {
      emit_reports({run_one(ex, ex_n)}, ex.out);
    } else if (scan_cmd->parsed()) {
      std::vector<ExperimentReport> reports;
      for (int n = scan_lo; n <= scan_hi; ++n) reports.push_back(run_one(ex, n));
      emit_reports(reports, ex.out);
    } else if (places_cmd->parsed()) {
      if (p_out != "csv") throw std::invalid_argument("places: --out must be csv");
      Curve E = parse_curve(p_curve);
      const auto places = enumerate_affine_places(E, p_dmax);
      std::cout << "degree,x_rep,y_rep\n";
      for (const Place& P : places)
        std::cout << P.degree << ',' << P.rep.x.to_string() << ','
                  << P.rep.y.to_string() << "\n";
    } else if (count_cmd->parsed()) {
      Curve E = parse_curve(p_curve);
      const mpz_class& q = E.base_field()->cardinality();
      auto n = point_counts(E, p_dmax);
      auto traces = frobenius_traces(q, n[0], p_dmax);
      auto b = affine_place_counts(E, p_dmax);
      std::cout << "d,N,a,B\n";
      for (int d = 1; d <= p_dmax; ++d)
        std::cout << d << ',' << n[static_cast<size_t>(d - 1)].get_str() << ','
                  << traces[static_cast<size_t>(d - 1)].get_str() << ','
                  << b[static_cast<size_t>(d - 1)].get_str() << "\n";
    }
  } catch (const GuardError& e) {
    std::cerr << "guard refusal: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
