// Copyright 2026 the holodense authors
//
// Licensed under the Apache License, Version 2.0 (see
// LICENSE or https://www.apache.org/licenses/LICENSE-2.0).

#ifndef HOLODENSE_FIELD_HPP
#define HOLODENSE_FIELD_HPP

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "holodense/common.hpp"

namespace holodense {

class Field;
using FieldPtr = std::shared_ptr<const Field>;

/// Element of a prime field or of a relative extension.  Elements keep a raw
/// pointer to their field; the FieldPtr returned by the factories must stay
/// alive as long as any element of the field does.
///
/// Representation is always fully reduced: a residue in [0, p) for prime
/// fields, a coefficient vector of length exactly d over the base field for
/// a degree-d extension.
class FieldElem {
 public:
  FieldElem() = default;  // invalid until assigned

  const Field& field() const { return *owner_; }
  const Field* field_ptr() const { return owner_; }
  bool valid() const { return owner_ != nullptr; }

  bool is_zero() const;
  bool is_one() const;

  std::uint64_t residue() const { return residue_; }            // prime case
  const std::vector<FieldElem>& coeffs() const { return coeffs_; }  // ext case

  friend FieldElem operator+(const FieldElem&, const FieldElem&);
  friend FieldElem operator-(const FieldElem&, const FieldElem&);
  friend FieldElem operator*(const FieldElem&, const FieldElem&);
  friend FieldElem operator/(const FieldElem&, const FieldElem&);
  friend FieldElem operator-(const FieldElem&);
  friend bool operator==(const FieldElem&, const FieldElem&);
  friend bool operator!=(const FieldElem& a, const FieldElem& b) { return !(a == b); }

  std::string to_string() const;  // residue, or ';'-joined base coefficients

 private:
  friend class Field;
  const Field* owner_ = nullptr;
  std::uint64_t residue_ = 0;
  std::vector<FieldElem> coeffs_;
};

/// Multiplicative inverse; throws std::domain_error on zero.
FieldElem inv(const FieldElem& a);

/// a^e for e >= 0 (e = 0 gives one, also for a = 0).
FieldElem pow(const FieldElem& a, const mpz_class& e);

/// a^|over| where a lives in `over` or an extension tower built on it.
FieldElem frobenius(const FieldElem& a, const Field& over);

/// Coefficient-wise embedding of a into `into`, which must be a tower over
/// a's field (base elements become constant coefficient vectors).
FieldElem embed(const FieldElem& a, const Field& into);

/// A finite field descriptor: either the prime field F_p or an extension
/// F = base[t]/(modulus) of degree d >= 2 over another descriptor.  Towers
/// are relative by construction; no absolute representation over F_p is ever
/// computed.  Descriptors are immutable and safe to share across threads.
class Field : public std::enable_shared_from_this<Field> {
 public:
  enum class Kind { prime, extension };

  /// F_p.  p is checked prime by trial division; p must fit in 32 bits so
  /// that products of residues never overflow a 64-bit word.
  static FieldPtr make_prime(std::uint64_t p);

  /// Degree-d extension of `base` with the canonical modulus: the
  /// lexicographically smallest monic irreducible of degree d, coefficients
  /// compared low-degree-first in enumeration order.  Requires d >= 2.
  static FieldPtr make_extension(const FieldPtr& base, int d);

  /// Extension with an explicit monic irreducible modulus, given as the
  /// coefficient vector c0..cd (cd = 1) over `base`.
  static FieldPtr make_extension(const FieldPtr& base,
                                 std::vector<FieldElem> monic_modulus);

  Kind kind() const { return kind_; }
  std::uint64_t characteristic() const { return characteristic_; }
  const mpz_class& cardinality() const { return cardinality_; }

  /// Extension degree over the base field (1 for prime fields).
  int degree() const { return degree_; }
  const FieldPtr& base() const;                       // extension only
  const std::vector<FieldElem>& modulus() const;      // extension only

  FieldElem zero() const;
  FieldElem one() const;
  FieldElem from_integer(long v) const;  // v * 1, i.e. reduced mod p, embedded

  /// Element from base-field coefficients (shorter vectors are zero-padded).
  FieldElem make(std::vector<FieldElem> coeffs) const;

  /// Deterministic enumeration; element_at(0) is zero, element_at(1) is one.
  /// Index i has base-|base| digits (low coefficient = least significant).
  FieldElem element_at(std::uint64_t index) const;
  std::uint64_t index_of(const FieldElem& a) const;
  bool fits_index() const;  // cardinality representable as uint64 index

  /// Structural equality of descriptors (same construction, not isomorphism).
  bool same(const Field& other) const;

  /// True when `other` appears in this field's base chain (reflexive).
  bool extends(const Field& other) const;

  std::string describe() const;  // e.g. "F_5" or "F_5^2"

 private:
  Field() = default;

  Kind kind_ = Kind::prime;
  std::uint64_t characteristic_ = 0;
  mpz_class cardinality_;
  int degree_ = 1;
  FieldPtr base_;                     // extension only
  std::vector<FieldElem> modulus_;    // monic, size degree_+1, extension only
  std::uint64_t base_card_u64_ = 0;   // 0 when base does not fit an index
};

/// All q elements in enumeration order; refuses when q exceeds the guard.
std::vector<FieldElem> all_elements(const Field& field,
                                    const Guards& guards = Guards::active());

}  // namespace holodense

#endif  // HOLODENSE_FIELD_HPP
