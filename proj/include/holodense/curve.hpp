// Copyright 2026 the holodense authors
//
// Licensed under the Apache License, Version 2.0 (see
// LICENSE or https://www.apache.org/licenses/LICENSE-2.0).

#ifndef HOLODENSE_CURVE_HPP
#define HOLODENSE_CURVE_HPP

#include <vector>

#include <gmpxx.h>

#include "holodense/common.hpp"
#include "holodense/field.hpp"
#include "holodense/poly.hpp"

namespace holodense {

/// Elliptic curve y^2 = x^3 + a*x + b over a field of characteristic >= 5.
/// Construction checks nonsingularity (4a^3 + 27b^2 != 0).
class Curve {
 public:
  Curve(FieldPtr base, FieldElem a, FieldElem b);

  const FieldPtr& base_field() const { return base_; }
  const FieldElem& a() const { return a_; }
  const FieldElem& b() const { return b_; }
  int genus() const { return 1; }

  /// x^3 + a*x + b evaluated in x's field (a, b embedded as needed).
  FieldElem rhs(const FieldElem& x) const;

  /// x^3 + a*x + b as a polynomial over the base field.
  Poly rhs_poly() const;

 private:
  FieldPtr base_;
  FieldElem a_, b_;
};

/// Affine point with coordinates in some extension of the curve's base field.
struct AffinePoint {
  FieldPtr field;  // coordinate field (keeps the tower alive)
  FieldElem x, y;
};

/// Checks the curve equation; throws std::invalid_argument otherwise.
AffinePoint make_point(const Curve& E, FieldPtr field, FieldElem x, FieldElem y);

/// Closed point of the affine coordinate ring: a Frobenius orbit of exact
/// size `degree`, stored through one representative.
struct Place {
  int degree;
  AffinePoint rep;
};

/// The full orbit {rep, rep^q, ..., rep^(q^(d-1))} of a place.
std::vector<AffinePoint> place_orbit(const Curve& E, const Place& P);

/// Projective point count over the degree-d extension by full scan of the
/// x-line: 1 + sum over x of #{y : y^2 = rhs(x)}, the fiber size read off the
/// quadratic character of rhs(x).  Guarded by q^d <= point_scan_limit.
mpz_class count_points_bruteforce(const Curve& E, int d,
                                  const Guards& guards = Guards::active());

/// Frobenius trace sequence a_1..a_dmax from a_1 = q + 1 - N_1 via
/// a_{k+1} = a_1 a_k - q a_{k-1} (a_0 = 2).
std::vector<mpz_class> frobenius_traces(const mpz_class& q, const mpz_class& n1,
                                        int dmax);

/// N_1..N_dmax: N_1 by brute force, the rest through the trace recursion.
std::vector<mpz_class> point_counts(const Curve& E, int dmax,
                                    const Guards& guards = Guards::active());

/// Numerator of the zeta function of a curve (or of user-supplied data).
/// Convention: L(T) = 1 - a_q T + q T^2 for an elliptic curve with
/// a_q = q + 1 - N_1, so that L(1) = N_1.
struct LPolynomial {
  mpz_class q;
  int genus = 0;
  std::vector<mpz_class> coeffs;  // c_0..c_{2g}, c_0 = 1

  mpq_class operator()(const mpq_class& t) const;
  mpz_class at_one() const;
  static LPolynomial trivial(const mpz_class& q);  // genus 0, L = 1
};

LPolynomial l_polynomial(const Curve& E, const Guards& guards = Guards::active());

/// Projective place counts b_1..b_dmax from N_1..N_dmax by Mobius inversion
/// of sum_{e | d} e*b_e = N_d.  Throws if the counts are inconsistent.
std::vector<mpz_class> place_counts_from_point_counts(
    const std::vector<mpz_class>& n);

/// Affine place counts B_1..B_dmax of the coordinate ring: the projective
/// counts with the single place at infinity removed from degree 1.
std::vector<mpz_class> affine_place_counts(const Curve& E, int dmax,
                                           const Guards& guards = Guards::active());

/// One representative per Frobenius orbit of exact degree d <= dmax,
/// degree-major order.  Counts per degree are checked against
/// affine_place_counts.
std::vector<Place> enumerate_affine_places(const Curve& E, int dmax,
                                           const Guards& guards = Guards::active());

/// Base field for degree-d data: the curve's own field for d = 1, otherwise
/// the canonical degree-d extension.
FieldPtr coordinate_field(const Curve& E, int d);

}  // namespace holodense

#endif  // HOLODENSE_CURVE_HPP
