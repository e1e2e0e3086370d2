// Copyright 2026 the holodense authors
//
// Licensed under the Apache License, Version 2.0 (see
// LICENSE or https://www.apache.org/licenses/LICENSE-2.0).

#include "holodense/field.hpp"

#include <algorithm>
#include <cstdlib>
#include <sstream>
#include <stdexcept>

#include "holodense/poly.hpp"

namespace holodense {

Guards Guards::from_env() {
  Guards g;
  if (const char* env = std::getenv("HOLODENSE_GUARD")) {
    char* end = nullptr;
    unsigned long long v = std::strtoull(env, &end, 10);
    if (end == env || *end != '\0' || v == 0)
      throw std::invalid_argument("HOLODENSE_GUARD must be a positive integer");
    g.point_scan_limit = v;
    g.space_enum_limit = v;
    g.tuple_enum_limit = v;
  }
  return g;
}

const Guards& Guards::active() {
  static const Guards g = Guards::from_env();
  return g;
}

namespace {

bool is_prime_u64(std::uint64_t p) {
  if (p < 2) return false;
  if (p % 2 == 0) return p == 2;
  for (std::uint64_t d = 3; d * d <= p; d += 2)
    if (p % d == 0) return false;
  return true;
}

void require_same_field(const FieldElem& a, const FieldElem& b) {
  if (a.field_ptr() == b.field_ptr()) return;
  if (!a.valid() || !b.valid() || !a.field().same(b.field()))
    throw std::invalid_argument("field elements have different owners");
}

// ---- coefficient-vector arithmetic for extension representations ----
//
// Extension elements are vectors over the base field; the helpers below give
// the quotient-ring arithmetic modulo the (monic) extension modulus.  They
// recurse down the tower through the base field's element operations.

using Vec = std::vector<FieldElem>;

int vdeg(const Vec& v) {
  for (int i = static_cast<int>(v.size()) - 1; i >= 0; --i)
    if (!v[i].is_zero()) return i;
  return -1;
}

Vec vmul(const Field& base, const Vec& a, const Vec& b) {
  int da = vdeg(a), db = vdeg(b);
  if (da < 0 || db < 0) return {};
  Vec out(static_cast<size_t>(da + db + 1), base.zero());
  for (int i = 0; i <= da; ++i) {
    if (a[i].is_zero()) continue;
    for (int j = 0; j <= db; ++j)
      out[i + j] = out[i + j] + a[i] * b[j];
  }
  return out;
}

// Reduce v modulo the monic modulus in place.
void vreduce(const Vec& modulus, Vec& v) {
  const int dm = static_cast<int>(modulus.size()) - 1;
  for (int k = vdeg(v); k >= dm; k = vdeg(v)) {
    FieldElem c = v[k];
    v[k] = v[k] - c;  // zero of the right field
    for (int j = 0; j < dm; ++j)
      v[k - dm + j] = v[k - dm + j] - c * modulus[j];
  }
}

// Extended Euclid on coefficient vectors; returns (g, u) with
// u*a = g mod m and g a nonzero constant when gcd(a, m) = 1.
std::pair<Vec, Vec> vxgcd_mod(const Field& base, Vec a, Vec m) {
  Vec r0 = std::move(m), r1 = std::move(a);
  Vec u0, u1{base.one()};  // track the coefficient of `a` only
  while (vdeg(r1) >= 0) {
    // long division r0 = q*r1 + r
    int d1 = vdeg(r1);
    FieldElem lead_inv = inv(r1[d1]);
    Vec q(static_cast<size_t>(std::max(vdeg(r0) - d1 + 1, 1)), base.zero());
    Vec r = r0;
    for (int k = vdeg(r); k >= d1; k = vdeg(r)) {
      FieldElem c = r[k] * lead_inv;
      q[k - d1] = c;
      for (int j = 0; j <= d1; ++j)
        r[k - d1 + j] = r[k - d1 + j] - c * r1[j];
    }
    Vec qu1 = vmul(base, q, u1);
    Vec nu(std::max(u0.size(), qu1.size()), base.zero());
    for (size_t i = 0; i < nu.size(); ++i) {
      FieldElem x = i < u0.size() ? u0[i] : base.zero();
      FieldElem y = i < qu1.size() ? qu1[i] : base.zero();
      nu[i] = x - y;
    }
    r0 = std::move(r1);
    r1 = std::move(r);
    u0 = std::move(u1);
    u1 = std::move(nu);
  }
  return {std::move(r0), std::move(u0)};
}

}  // namespace

// ---------------------------------------------------------------- FieldElem

bool FieldElem::is_zero() const {
  if (!valid()) throw std::logic_error("use of uninitialized field element");
  if (owner_->kind() == Field::Kind::prime) return residue_ == 0;
  return std::all_of(coeffs_.begin(), coeffs_.end(),
                     [](const FieldElem& c) { return c.is_zero(); });
}

bool FieldElem::is_one() const {
  if (owner_->kind() == Field::Kind::prime) return residue_ == 1;
  if (coeffs_.empty() || !coeffs_[0].is_one()) return false;
  return std::all_of(coeffs_.begin() + 1, coeffs_.end(),
                     [](const FieldElem& c) { return c.is_zero(); });
}

bool operator==(const FieldElem& a, const FieldElem& b) {
  require_same_field(a, b);
  if (a.owner_->kind() == Field::Kind::prime) return a.residue_ == b.residue_;
  return a.coeffs_ == b.coeffs_;
}

FieldElem operator+(const FieldElem& a, const FieldElem& b) {
  require_same_field(a, b);
  FieldElem out = a;
  if (a.owner_->kind() == Field::Kind::prime) {
    out.residue_ = a.residue_ + b.residue_;
    if (out.residue_ >= a.owner_->characteristic())
      out.residue_ -= a.owner_->characteristic();
  } else {
    for (size_t i = 0; i < out.coeffs_.size(); ++i)
      out.coeffs_[i] = out.coeffs_[i] + b.coeffs_[i];
  }
  return out;
}

FieldElem operator-(const FieldElem& a, const FieldElem& b) {
  require_same_field(a, b);
  FieldElem out = a;
  if (a.owner_->kind() == Field::Kind::prime) {
    const std::uint64_t p = a.owner_->characteristic();
    out.residue_ = a.residue_ + p - b.residue_;
    if (out.residue_ >= p) out.residue_ -= p;
  } else {
    for (size_t i = 0; i < out.coeffs_.size(); ++i)
      out.coeffs_[i] = out.coeffs_[i] - b.coeffs_[i];
  }
  return out;
}

FieldElem operator-(const FieldElem& a) {
  if (!a.valid()) throw std::logic_error("use of uninitialized field element");
  return a.field().zero() - a;
}

FieldElem operator*(const FieldElem& a, const FieldElem& b) {
  require_same_field(a, b);
  FieldElem out = a;
  if (a.owner_->kind() == Field::Kind::prime) {
    out.residue_ = a.residue_ * b.residue_ % a.owner_->characteristic();
    return out;
  }
  Vec prod = vmul(*a.owner_->base(), a.coeffs_, b.coeffs_);
  vreduce(a.owner_->modulus(), prod);
  prod.resize(static_cast<size_t>(a.owner_->degree()), a.owner_->base()->zero());
  out.coeffs_ = std::move(prod);
  return out;
}

FieldElem inv(const FieldElem& a) {
  if (a.is_zero()) throw std::domain_error("inverse of zero");
  const Field& F = a.field();
  if (F.kind() == Field::Kind::prime) {
    // extended Euclid on (residue, p)
    std::int64_t t = 0, nt = 1;
    std::int64_t r = static_cast<std::int64_t>(F.characteristic());
    std::int64_t nr = static_cast<std::int64_t>(a.residue());
    while (nr != 0) {
      const std::int64_t q = r / nr;
      const std::int64_t t2 = t - q * nt;
      const std::int64_t r2 = r - q * nr;
      t = nt;
      nt = t2;
      r = nr;
      nr = r2;
    }
    if (t < 0) t += static_cast<std::int64_t>(F.characteristic());
    return F.element_at(static_cast<std::uint64_t>(t));
  }
  auto [g, u] = vxgcd_mod(*F.base(), a.coeffs(), F.modulus());
  if (vdeg(g) != 0)
    throw std::logic_error("modulus is not irreducible: gcd not constant");
  Vec out = vmul(*F.base(), u, Vec{inv(g[0])});
  out.resize(static_cast<size_t>(F.degree()), F.base()->zero());
  return F.make(std::move(out));
}

FieldElem operator/(const FieldElem& a, const FieldElem& b) {
  return a * inv(b);
}

FieldElem pow(const FieldElem& a, const mpz_class& e) {
  if (e < 0) throw std::invalid_argument("pow: negative exponent");
  FieldElem acc = a.field().one();
  FieldElem base = a;
  const mp_bitcnt_t bits = mpz_sizeinbase(e.get_mpz_t(), 2);
  if (e == 0) return acc;
  for (mp_bitcnt_t i = 0; i < bits; ++i) {
    if (mpz_tstbit(e.get_mpz_t(), i)) acc = acc * base;
    if (i + 1 < bits) base = base * base;
  }
  return acc;
}

FieldElem frobenius(const FieldElem& a, const Field& over) {
  if (!a.field().extends(over))
    throw std::invalid_argument("frobenius: element does not live over the given field");
  return pow(a, over.cardinality());
}

FieldElem embed(const FieldElem& a, const Field& into) {
  if (a.field().same(into)) return a;
  if (into.kind() != Field::Kind::extension || !into.base()->extends(a.field()))
    throw std::invalid_argument("embed: target is not a tower over the element's field");
  FieldElem low = embed(a, *into.base());
  std::vector<FieldElem> coeffs(static_cast<size_t>(into.degree()),
                                into.base()->zero());
  coeffs[0] = std::move(low);
  return into.make(std::move(coeffs));
}

std::string FieldElem::to_string() const {
  if (owner_->kind() == Field::Kind::prime) return std::to_string(residue_);
  std::ostringstream os;
  for (size_t i = 0; i < coeffs_.size(); ++i) {
    if (i) os << ';';
    os << coeffs_[i].to_string();
  }
  return os.str();
}

// -------------------------------------------------------------------- Field

FieldPtr Field::make_prime(std::uint64_t p) {
  if (!is_prime_u64(p))
    throw std::invalid_argument("make_prime: " + std::to_string(p) + " is not prime");
  if (p >> 32)
    throw std::invalid_argument("make_prime: characteristic must fit in 32 bits");
  auto f = std::shared_ptr<Field>(new Field());
  f->kind_ = Kind::prime;
  f->characteristic_ = p;
  f->cardinality_ = mpz_class(static_cast<unsigned long>(p));
  f->degree_ = 1;
  return f;
}

FieldPtr Field::make_extension(const FieldPtr& base,
                               std::vector<FieldElem> monic_modulus) {
  if (!base) throw std::invalid_argument("make_extension: null base");
  const int d = static_cast<int>(monic_modulus.size()) - 1;
  if (d < 2) throw std::invalid_argument("make_extension: degree must be >= 2");
  for (const auto& c : monic_modulus)
    if (!c.valid() || !c.field().same(*base))
      throw std::invalid_argument("make_extension: modulus coefficients not over base");
  if (!monic_modulus.back().is_one())
    throw std::invalid_argument("make_extension: modulus must be monic");
  if (!is_irreducible(Poly(*base, monic_modulus)))
    throw std::invalid_argument("make_extension: modulus is reducible");

  auto f = std::shared_ptr<Field>(new Field());
  f->kind_ = Kind::extension;
  f->characteristic_ = base->characteristic();
  mpz_pow_ui(f->cardinality_.get_mpz_t(), base->cardinality().get_mpz_t(),
             static_cast<unsigned long>(d));
  f->degree_ = d;
  f->base_ = base;
  f->modulus_ = std::move(monic_modulus);
  f->base_card_u64_ =
      base->fits_index() ? base->cardinality().get_ui() : 0;
  return f;
}

FieldPtr Field::make_extension(const FieldPtr& base, int d) {
  if (!base) throw std::invalid_argument("make_extension: null base");
  if (d < 2) throw std::invalid_argument("make_extension: degree must be >= 2");
  if (!base->fits_index())
    throw std::invalid_argument("make_extension: base too large to search a modulus");

  // Lexicographically smallest monic irreducible: candidates ordered by
  // (c0, c1, ..., c_{d-1}) with c0 the most significant comparison key.
  const std::uint64_t q = base->cardinality().get_ui();
  mpz_class total;
  mpz_ui_pow_ui(total.get_mpz_t(), static_cast<unsigned long>(q),
                static_cast<unsigned long>(d));
  if (!total.fits_ulong_p())
    throw std::invalid_argument("make_extension: modulus search space too large");
  const std::uint64_t n = total.get_ui();

  std::vector<FieldElem> coeffs(static_cast<size_t>(d + 1), base->zero());
  coeffs[static_cast<size_t>(d)] = base->one();
  for (std::uint64_t idx = 0; idx < n; ++idx) {
    // low digits of idx map to the high-degree coefficients, so c0 is the
    // most significant comparison key
    std::uint64_t rest = idx;
    for (int j = d - 1; j >= 0; --j) {
      coeffs[static_cast<size_t>(j)] = base->element_at(rest % q);
      rest /= q;
    }
    if (is_irreducible(Poly(*base, coeffs)))
      return make_extension(base, coeffs);
  }
  throw std::logic_error("make_extension: no irreducible found");  // unreachable
}

const FieldPtr& Field::base() const {
  if (kind_ != Kind::extension)
    throw std::logic_error("base(): prime field has no base");
  return base_;
}

const std::vector<FieldElem>& Field::modulus() const {
  if (kind_ != Kind::extension)
    throw std::logic_error("modulus(): prime field has no modulus");
  return modulus_;
}

FieldElem Field::zero() const {
  FieldElem e;
  e.owner_ = this;
  if (kind_ == Kind::extension)
    e.coeffs_.assign(static_cast<size_t>(degree_), base_->zero());
  return e;
}

FieldElem Field::one() const {
  FieldElem e = zero();
  if (kind_ == Kind::prime)
    e.residue_ = 1;
  else
    e.coeffs_[0] = base_->one();
  return e;
}

FieldElem Field::from_integer(long v) const {
  const std::int64_t p = static_cast<std::int64_t>(characteristic_);
  std::int64_t r = v % p;
  if (r < 0) r += p;
  if (kind_ == Kind::prime) {
    FieldElem e = zero();
    e.residue_ = static_cast<std::uint64_t>(r);
    return e;
  }
  FieldElem e = zero();
  e.coeffs_[0] = base_->from_integer(static_cast<long>(r));
  return e;
}

FieldElem Field::make(std::vector<FieldElem> coeffs) const {
  if (kind_ != Kind::extension)
    throw std::logic_error("make(): only extensions take coefficient vectors");
  if (static_cast<int>(coeffs.size()) > degree_)
    throw std::invalid_argument("make(): coefficient vector longer than degree");
  for (const auto& c : coeffs)
    if (!c.valid() || !c.field().same(*base_))
      throw std::invalid_argument("make(): coefficients not over the base field");
  coeffs.resize(static_cast<size_t>(degree_), base_->zero());
  FieldElem e;
  e.owner_ = this;
  e.coeffs_ = std::move(coeffs);
  return e;
}

bool Field::fits_index() const {
  return cardinality_.fits_ulong_p();
}

FieldElem Field::element_at(std::uint64_t index) const {
  if (kind_ == Kind::prime) {
    if (index >= characteristic_)
      throw std::out_of_range("element_at: index past field size");
    FieldElem e = zero();
    e.residue_ = index;
    return e;
  }
  if (base_card_u64_ == 0)
    throw std::logic_error("element_at: field too large for 64-bit indexing");
  FieldElem e = zero();
  for (int j = 0; j < degree_; ++j) {
    e.coeffs_[static_cast<size_t>(j)] = base_->element_at(index % base_card_u64_);
    index /= base_card_u64_;
  }
  if (index != 0) throw std::out_of_range("element_at: index past field size");
  return e;
}

std::uint64_t Field::index_of(const FieldElem& a) const {
  if (!a.field().same(*this))
    throw std::invalid_argument("index_of: element of a different field");
  if (kind_ == Kind::prime) return a.residue();
  if (base_card_u64_ == 0)
    throw std::logic_error("index_of: field too large for 64-bit indexing");
  std::uint64_t idx = 0;
  for (int j = degree_ - 1; j >= 0; --j)
    idx = idx * base_card_u64_ + base_->index_of(a.coeffs()[static_cast<size_t>(j)]);
  return idx;
}

bool Field::same(const Field& other) const {
  if (this == &other) return true;
  if (kind_ != other.kind_ || characteristic_ != other.characteristic_ ||
      degree_ != other.degree_)
    return false;
  if (kind_ == Kind::prime) return true;
  if (!base_->same(*other.base_)) return false;
  for (size_t i = 0; i < modulus_.size(); ++i)
    if (!(modulus_[i] == other.modulus_[i])) return false;
  return true;
}

bool Field::extends(const Field& other) const {
  const Field* f = this;
  while (true) {
    if (f->same(other)) return true;
    if (f->kind_ != Kind::extension) return false;
    f = f->base_.get();
  }
}

std::string Field::describe() const {
  std::ostringstream os;
  if (kind_ == Kind::prime) {
    os << "F_" << characteristic_;
  } else {
    os << "F_" << cardinality_.get_str() << " (degree " << degree_ << " over "
       << base_->describe() << ")";
  }
  return os.str();
}

std::vector<FieldElem> all_elements(const Field& field, const Guards& guards) {
  if (!field.fits_index() || field.cardinality() > guards.point_scan_limit)
    throw GuardError("all_elements: field size exceeds enumeration guard");
  const std::uint64_t q = field.cardinality().get_ui();
  std::vector<FieldElem> out;
  out.reserve(q);
  for (std::uint64_t i = 0; i < q; ++i) out.push_back(field.element_at(i));
  return out;
}

}  // namespace holodense
