// Copyright 2026 the holodense authors
//
// Licensed under the Apache License, Version 2.0 (see
// LICENSE or https://www.apache.org/licenses/LICENSE-2.0).

#ifndef HOLODENSE_RR_SPACE_HPP
#define HOLODENSE_RR_SPACE_HPP

#include <memory>
#include <optional>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "holodense/common.hpp"
#include "holodense/curve.hpp"
#include "holodense/field.hpp"
#include "holodense/poly.hpp"
#include "holodense/rng.hpp"

namespace holodense {

/// Basis monomial x^i y^j with its pole order at the place at infinity:
/// the plain degree i in the rational case (j = 0 always), 2i + 3j on an
/// elliptic curve where x and y have pole orders 2 and 3.
struct Monomial {
  int x_exp = 0;
  int y_exp = 0;
  int pole_order = 0;
};

class RRSpace;
using RRSpacePtr = std::shared_ptr<const RRSpace>;

/// Space of functions with poles only at infinity, of order at most n:
/// polynomials of degree <= n over F_q, or the span of
/// {x^i y^j : j in {0,1}, 2i + 3j <= n} in an elliptic coordinate ring.
/// Bases are ordered j-major: 1, x, x^2, ..., then y, xy, x^2 y, ...
class RRSpace {
 public:
  static RRSpacePtr rational(FieldPtr coeff_field, int n);
  static RRSpacePtr elliptic(Curve curve, int n);

  bool is_rational() const { return !curve_.has_value(); }
  const Curve& curve() const;
  const Field& coeff_field() const { return *coeff_field_; }
  const FieldPtr& coeff_field_ptr() const { return coeff_field_; }

  int bound() const { return bound_; }
  int dimension() const { return static_cast<int>(basis_.size()); }
  const std::vector<Monomial>& basis() const { return basis_; }
  mpz_class size() const;  // q^dimension

  static int rational_dimension(int n) { return n + 1; }
  static int elliptic_dimension(int n) { return n >= 1 ? n : 1; }

 private:
  RRSpace() = default;
  FieldPtr coeff_field_;
  std::optional<Curve> curve_;
  int bound_ = 0;
  std::vector<Monomial> basis_;
};

/// Element as coefficients over F_q in basis order.  Holds a raw pointer to
/// its space; the RRSpacePtr must outlive the element.
class RRElement {
 public:
  RRElement() = default;
  RRElement(const RRSpace& owner, std::vector<FieldElem> coeffs);

  const RRSpace& space() const { return *owner_; }
  const std::vector<FieldElem>& coeffs() const { return coeffs_; }
  bool is_zero() const;
  /// Nonzero constant, i.e. a unit of the coordinate ring.
  bool is_unit_constant() const;

  friend bool operator==(const RRElement&, const RRElement&);
  friend bool operator!=(const RRElement& f, const RRElement& g) { return !(f == g); }

 private:
  const RRSpace* owner_ = nullptr;
  std::vector<FieldElem> coeffs_;
};

/// Deterministic enumeration: index digits in base q, coefficient 0 least
/// significant; element_at(space, 0) is the zero element.  Restartable from
/// any index, which is what the partitioned exhaustive counts rely on.
RRElement element_at(const RRSpace& space, std::uint64_t index);

/// Total enumeration guarded by q^dim <= space_enum_limit.
std::vector<RRElement> enumerate_space(const RRSpace& space,
                                       const Guards& guards = Guards::active());

/// Uniform element: independent uniform coefficients, drawn in basis order.
RRElement sample_uniform(const RRSpace& space, Xoshiro256& rng);

/// Largest pole order among monomials with a nonzero coefficient.  Exact
/// because basis pole orders are pairwise distinct.  Throws on zero.
int pole_degree(const RRElement& f);

/// Product as a function, landing in the space with the summed pole bound
/// (y^2 is reduced through the curve equation).
RRElement multiply(const RRElement& f, const RRElement& g, RRSpacePtr& out_space);

/// f = A(x) + B(x)*y split of an elliptic element (B = 0 for rational).
std::pair<Poly, Poly> xy_parts(const RRElement& f);

/// Evaluation at a point of (an extension of) the coefficient field.
FieldElem evaluate(const RRElement& f, const FieldElem& x, const FieldElem& y);
FieldElem evaluate(const RRElement& f, const FieldElem& x);  // rational case

/// Residue-style evaluation at a place: substitute the representative's
/// coordinates; the result is zero exactly when f lies in the place's ideal.
FieldElem evaluate_at_place(const RRElement& f, const Place& P);

}  // namespace holodense

#endif  // HOLODENSE_RR_SPACE_HPP
