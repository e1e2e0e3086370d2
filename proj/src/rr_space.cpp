// Copyright 2026 the holodense authors
//
// Licensed under the Apache License, Version 2.0 (see
// LICENSE or https://www.apache.org/licenses/LICENSE-2.0).

#include "holodense/rr_space.hpp"

#include <algorithm>
#include <stdexcept>

namespace holodense {

RRSpacePtr RRSpace::rational(FieldPtr coeff_field, int n) {
  if (!coeff_field) throw std::invalid_argument("rr space: null field");
  if (n < 0) throw std::invalid_argument("rr space: bound must be >= 0");
  auto s = std::shared_ptr<RRSpace>(new RRSpace());
  s->coeff_field_ = std::move(coeff_field);
  s->bound_ = n;
  for (int i = 0; i <= n; ++i) s->basis_.push_back(Monomial{i, 0, i});
  return s;
}

RRSpacePtr RRSpace::elliptic(Curve curve, int n) {
  if (n < 0) throw std::invalid_argument("rr space: bound must be >= 0");
  auto s = std::shared_ptr<RRSpace>(new RRSpace());
  s->coeff_field_ = curve.base_field();
  s->curve_ = std::move(curve);
  s->bound_ = n;
  for (int j = 0; j <= 1; ++j)
    for (int i = 0; 2 * i + 3 * j <= n; ++i)
      s->basis_.push_back(Monomial{i, j, 2 * i + 3 * j});
  if (s->basis_.size() != static_cast<size_t>(elliptic_dimension(n)))
    throw std::logic_error("rr space: basis size disagrees with the dimension formula");
  return s;
}

const Curve& RRSpace::curve() const {
  if (!curve_) throw std::logic_error("curve(): rational space has no curve");
  return *curve_;
}

mpz_class RRSpace::size() const {
  mpz_class s;
  mpz_pow_ui(s.get_mpz_t(), coeff_field_->cardinality().get_mpz_t(),
             static_cast<unsigned long>(dimension()));
  return s;
}

RRElement::RRElement(const RRSpace& owner, std::vector<FieldElem> coeffs)
    : owner_(&owner), coeffs_(std::move(coeffs)) {
  if (coeffs_.size() != static_cast<size_t>(owner.dimension()))
    throw std::invalid_argument("rr element: coefficient count != dimension");
  for (const auto& c : coeffs_)
    if (!c.valid() || !c.field().same(owner.coeff_field()))
      throw std::invalid_argument("rr element: coefficient not over F_q");
}

bool RRElement::is_zero() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(),
                     [](const FieldElem& c) { return c.is_zero(); });
}

bool RRElement::is_unit_constant() const {
  if (coeffs_.empty() || coeffs_[0].is_zero()) return false;
  return std::all_of(coeffs_.begin() + 1, coeffs_.end(),
                     [](const FieldElem& c) { return c.is_zero(); });
}

bool operator==(const RRElement& f, const RRElement& g) {
  if (f.owner_ != g.owner_) throw std::invalid_argument("rr elements from different spaces");
  return f.coeffs_ == g.coeffs_;
}

RRElement element_at(const RRSpace& space, std::uint64_t index) {
  const Field& F = space.coeff_field();
  if (!F.fits_index())
    throw std::logic_error("element_at: coefficient field too large");
  const std::uint64_t q = F.cardinality().get_ui();
  std::vector<FieldElem> coeffs;
  coeffs.reserve(static_cast<size_t>(space.dimension()));
  for (int i = 0; i < space.dimension(); ++i) {
    coeffs.push_back(F.element_at(index % q));
    index /= q;
  }
  if (index != 0) throw std::out_of_range("element_at: index past space size");
  return RRElement(space, std::move(coeffs));
}

std::vector<RRElement> enumerate_space(const RRSpace& space, const Guards& guards) {
  if (space.size() > guards.space_enum_limit)
    throw GuardError("enumerate_space: q^dim exceeds the enumeration guard");
  const std::uint64_t total = space.size().get_ui();
  std::vector<RRElement> out;
  out.reserve(total);
  for (std::uint64_t i = 0; i < total; ++i) out.push_back(element_at(space, i));
  return out;
}

RRElement sample_uniform(const RRSpace& space, Xoshiro256& rng) {
  const Field& F = space.coeff_field();
  const std::uint64_t q = F.cardinality().get_ui();
  std::vector<FieldElem> coeffs;
  coeffs.reserve(static_cast<size_t>(space.dimension()));
  for (int i = 0; i < space.dimension(); ++i)
    coeffs.push_back(F.element_at(rng.below(q)));
  return RRElement(space, std::move(coeffs));
}

int pole_degree(const RRElement& f) {
  int best = -1;
  const auto& basis = f.space().basis();
  for (size_t i = 0; i < basis.size(); ++i)
    if (!f.coeffs()[i].is_zero()) best = std::max(best, basis[i].pole_order);
  if (best < 0) throw std::domain_error("pole_degree: zero element");
  return best;
}

std::pair<Poly, Poly> xy_parts(const RRElement& f) {
  const Field& F = f.space().coeff_field();
  std::vector<FieldElem> a, b;
  const auto& basis = f.space().basis();
  for (size_t i = 0; i < basis.size(); ++i) {
    auto& dst = basis[i].y_exp == 0 ? a : b;
    const int xe = basis[i].x_exp;
    if (static_cast<int>(dst.size()) <= xe) dst.resize(static_cast<size_t>(xe + 1), F.zero());
    dst[static_cast<size_t>(xe)] = dst[static_cast<size_t>(xe)] + f.coeffs()[i];
  }
  return {Poly(F, std::move(a)), Poly(F, std::move(b))};
}

RRElement multiply(const RRElement& f, const RRElement& g, RRSpacePtr& out_space) {
  if (&f.space() != &g.space())
    throw std::invalid_argument("multiply: elements from different spaces");
  const RRSpace& S = f.space();
  const Field& F = S.coeff_field();
  auto [fa, fb] = xy_parts(f);
  auto [ga, gb] = xy_parts(g);

  Poly a = fa * ga;
  Poly b = fa * gb + fb * ga;
  if (!S.is_rational()) {
    // y^2 reduces through the curve equation
    a = a + fb * gb * S.curve().rhs_poly();
  }

  const int n = S.bound() * 2;
  out_space = S.is_rational() ? RRSpace::rational(S.coeff_field_ptr(), n)
                              : RRSpace::elliptic(S.curve(), n);
  std::vector<FieldElem> coeffs(static_cast<size_t>(out_space->dimension()), F.zero());
  const auto& basis = out_space->basis();
  int max_a = -1, max_b = -1;
  for (size_t i = 0; i < basis.size(); ++i) {
    const Poly& src = basis[i].y_exp == 0 ? a : b;
    coeffs[i] = src.coeff(basis[i].x_exp);
    auto& hi = basis[i].y_exp == 0 ? max_a : max_b;
    hi = std::max(hi, basis[i].x_exp);
  }
  if (a.degree_or(-1) > max_a || b.degree_or(-1) > max_b)
    throw std::logic_error("multiply: product escapes the expected space");
  return RRElement(*out_space, std::move(coeffs));
}

FieldElem evaluate(const RRElement& f, const FieldElem& x, const FieldElem& y) {
  const Field& K = x.field();
  if (!K.extends(f.space().coeff_field()))
    throw std::invalid_argument("evaluate: point field does not extend F_q");
  auto [a, b] = xy_parts(f);
  return a(x) + b(x) * y;
}

FieldElem evaluate(const RRElement& f, const FieldElem& x) {
  if (!f.space().is_rational())
    throw std::invalid_argument("evaluate(x): element of an elliptic space");
  auto [a, b] = xy_parts(f);
  (void)b;
  return a(x);
}

FieldElem evaluate_at_place(const RRElement& f, const Place& P) {
  if (f.space().is_rational())
    throw std::invalid_argument("evaluate_at_place: rational elements take places of F_q[x]");
  if (!P.rep.field->extends(f.space().coeff_field()))
    throw std::invalid_argument("evaluate_at_place: place over a different curve field");
  if (!(P.rep.y * P.rep.y == f.space().curve().rhs(P.rep.x)))
    throw std::invalid_argument("evaluate_at_place: place is not on the element's curve");
  return evaluate(f, P.rep.x, P.rep.y);
}

}  // namespace holodense
