// Copyright 2026 the holodense authors
//
// Licensed under the Apache License, Version 2.0 (see
// LICENSE or https://www.apache.org/licenses/LICENSE-2.0).

#ifndef HOLODENSE_POLY_HPP
#define HOLODENSE_POLY_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "holodense/field.hpp"

namespace holodense {

/// Dense univariate polynomial over a Field.  Coefficients are stored low
/// degree first with no trailing zeros; the zero polynomial has an empty
/// coefficient vector and no degree (degree() is disengaged rather than -1,
/// so nothing can silently do arithmetic with it).
class Poly {
 public:
  Poly() = default;  // invalid until assigned
  explicit Poly(const Field& owner) : owner_(&owner) {}  // zero polynomial
  Poly(const Field& owner, std::vector<FieldElem> coeffs);

  static Poly x(const Field& owner);
  static Poly constant(const FieldElem& c);
  /// Convenience: coefficients as integers, low degree first.
  static Poly from_integers(const Field& owner, const std::vector<long>& c);

  const Field& field() const { return *owner_; }
  bool valid() const { return owner_ != nullptr; }

  bool is_zero() const { return coeffs_.empty(); }
  std::optional<int> degree() const;
  int degree_or(int if_zero) const;
  const std::vector<FieldElem>& coeffs() const { return coeffs_; }
  FieldElem coeff(int i) const;  // zero beyond the stored degree
  const FieldElem& leading() const;
  bool is_monic() const;
  Poly monic() const;  // unit-normalized; zero stays zero

  friend Poly operator+(const Poly&, const Poly&);
  friend Poly operator-(const Poly&, const Poly&);
  friend Poly operator*(const Poly&, const Poly&);
  friend Poly operator*(const FieldElem&, const Poly&);
  friend bool operator==(const Poly&, const Poly&);
  friend bool operator!=(const Poly& f, const Poly& g) { return !(f == g); }

  /// Horner evaluation; `at` may live in an extension of the coefficient
  /// field, in which case coefficients are embedded first.
  FieldElem operator()(const FieldElem& at) const;

  std::string to_string() const;  // comma-separated coefficients, low first

 private:
  void normalize();
  const Field* owner_ = nullptr;
  std::vector<FieldElem> coeffs_;
};

/// (quotient, remainder) with deg r < deg g; throws on g = 0.
std::pair<Poly, Poly> divmod(const Poly& f, const Poly& g);
Poly mod(const Poly& f, const Poly& g);
bool divides(const Poly& d, const Poly& f);

/// Monic gcd; gcd(0,0) = 0 and gcd(f,0) = monic f.
Poly gcd(const Poly& f, const Poly& g);

struct Xgcd {
  Poly g, u, v;  // g = u*f + v*h
};
Xgcd xgcd(const Poly& f, const Poly& h);

/// base^e mod m (e >= 0, m nonzero).
Poly powmod(const Poly& base, const mpz_class& e, const Poly& m);

/// Rabin's criterion: f of degree n is irreducible iff x^(q^n) = x mod f and
/// gcd(x^(q^(n/r)) - x, f) = 1 for every prime r | n.  Constant input throws.
bool is_irreducible(const Poly& f);

/// All monic irreducibles of degree exactly d, in the canonical order
/// (coefficient tuples compared low-degree-first).
std::vector<Poly> monic_irreducibles(const Field& field, int d,
                                     const Guards& guards = Guards::active());

/// Count of monic irreducibles of degree d over F_q:
/// (1/d) * sum_{e | d} mu(d/e) q^e.
mpz_class monic_irreducible_count(const mpz_class& q, int d);

}  // namespace holodense

#endif  // HOLODENSE_POLY_HPP
