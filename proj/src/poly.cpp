// Copyright 2026 the holodense authors
//
// Licensed under the Apache License, Version 2.0 (see
// LICENSE or https://www.apache.org/licenses/LICENSE-2.0).

#include "holodense/poly.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace holodense {

namespace {

void require_same_field(const Poly& f, const Poly& g) {
  if (&f.field() == &g.field()) return;
  if (!f.valid() || !g.valid() || !f.field().same(g.field()))
    throw std::invalid_argument("polynomials have different owners");
}

std::vector<int> prime_factors(int n) {
  std::vector<int> out;
  for (int p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      out.push_back(p);
      while (n % p == 0) n /= p;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

}  // namespace

Poly::Poly(const Field& owner, std::vector<FieldElem> coeffs)
    : owner_(&owner), coeffs_(std::move(coeffs)) {
  for (const auto& c : coeffs_)
    if (!c.valid() || !c.field().same(owner))
      throw std::invalid_argument("polynomial coefficient not over the owner field");
  normalize();
}

void Poly::normalize() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

Poly Poly::x(const Field& owner) {
  return Poly(owner, {owner.zero(), owner.one()});
}

Poly Poly::constant(const FieldElem& c) {
  return Poly(c.field(), {c});
}

Poly Poly::from_integers(const Field& owner, const std::vector<long>& c) {
  std::vector<FieldElem> coeffs;
  coeffs.reserve(c.size());
  for (long v : c) coeffs.push_back(owner.from_integer(v));
  return Poly(owner, std::move(coeffs));
}

std::optional<int> Poly::degree() const {
  if (coeffs_.empty()) return std::nullopt;
  return static_cast<int>(coeffs_.size()) - 1;
}

int Poly::degree_or(int if_zero) const {
  return coeffs_.empty() ? if_zero : static_cast<int>(coeffs_.size()) - 1;
}

FieldElem Poly::coeff(int i) const {
  if (i < 0) throw std::out_of_range("coeff: negative index");
  if (i >= static_cast<int>(coeffs_.size())) return owner_->zero();
  return coeffs_[static_cast<size_t>(i)];
}

const FieldElem& Poly::leading() const {
  if (coeffs_.empty()) throw std::domain_error("leading(): zero polynomial");
  return coeffs_.back();
}

bool Poly::is_monic() const {
  return !coeffs_.empty() && coeffs_.back().is_one();
}

Poly Poly::monic() const {
  if (is_zero() || is_monic()) return *this;
  return inv(leading()) * *this;
}

Poly operator+(const Poly& f, const Poly& g) {
  require_same_field(f, g);
  std::vector<FieldElem> out(std::max(f.coeffs_.size(), g.coeffs_.size()),
                             f.field().zero());
  for (size_t i = 0; i < out.size(); ++i) {
    if (i < f.coeffs_.size()) out[i] = out[i] + f.coeffs_[i];
    if (i < g.coeffs_.size()) out[i] = out[i] + g.coeffs_[i];
  }
  return Poly(f.field(), std::move(out));
}

Poly operator-(const Poly& f, const Poly& g) {
  require_same_field(f, g);
  std::vector<FieldElem> out(std::max(f.coeffs_.size(), g.coeffs_.size()),
                             f.field().zero());
  for (size_t i = 0; i < out.size(); ++i) {
    if (i < f.coeffs_.size()) out[i] = out[i] + f.coeffs_[i];
    if (i < g.coeffs_.size()) out[i] = out[i] - g.coeffs_[i];
  }
  return Poly(f.field(), std::move(out));
}

Poly operator*(const Poly& f, const Poly& g) {
  require_same_field(f, g);
  if (f.is_zero() || g.is_zero()) return Poly(f.field());
  std::vector<FieldElem> out(f.coeffs_.size() + g.coeffs_.size() - 1,
                             f.field().zero());
  for (size_t i = 0; i < f.coeffs_.size(); ++i) {
    if (f.coeffs_[i].is_zero()) continue;
    for (size_t j = 0; j < g.coeffs_.size(); ++j)
      out[i + j] = out[i + j] + f.coeffs_[i] * g.coeffs_[j];
  }
  return Poly(f.field(), std::move(out));
}

Poly operator*(const FieldElem& c, const Poly& f) {
  std::vector<FieldElem> out = f.coeffs_;
  for (auto& x : out) x = c * x;
  return Poly(f.field(), std::move(out));
}

bool operator==(const Poly& f, const Poly& g) {
  require_same_field(f, g);
  if (f.coeffs_.size() != g.coeffs_.size()) return false;
  for (size_t i = 0; i < f.coeffs_.size(); ++i)
    if (!(f.coeffs_[i] == g.coeffs_[i])) return false;
  return true;
}

FieldElem Poly::operator()(const FieldElem& at) const {
  if (!at.field().extends(*owner_))
    throw std::invalid_argument("evaluate: point field does not extend the coefficient field");
  FieldElem acc = at.field().zero();
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
    acc = acc * at + embed(*it, at.field());
  return acc;
}

std::string Poly::to_string() const {
  if (coeffs_.empty()) return "0";
  std::ostringstream os;
  for (size_t i = 0; i < coeffs_.size(); ++i) {
    if (i) os << ',';
    os << coeffs_[i].to_string();
  }
  return os.str();
}

std::pair<Poly, Poly> divmod(const Poly& f, const Poly& g) {
  require_same_field(f, g);
  if (g.is_zero()) throw std::domain_error("divmod: division by zero polynomial");
  const int dg = *g.degree();
  if (f.degree_or(-1) < dg) return {Poly(f.field()), f};

  const FieldElem lead_inv = inv(g.leading());
  std::vector<FieldElem> rem = f.coeffs();
  std::vector<FieldElem> quot(static_cast<size_t>(f.degree_or(0) - dg + 1),
                              f.field().zero());
  for (int k = static_cast<int>(rem.size()) - 1; k >= dg; --k) {
    if (rem[static_cast<size_t>(k)].is_zero()) continue;
    FieldElem c = rem[static_cast<size_t>(k)] * lead_inv;
    quot[static_cast<size_t>(k - dg)] = c;
    for (int j = 0; j <= dg; ++j)
      rem[static_cast<size_t>(k - dg + j)] =
          rem[static_cast<size_t>(k - dg + j)] - c * g.coeff(j);
  }
  return {Poly(f.field(), std::move(quot)), Poly(f.field(), std::move(rem))};
}

Poly mod(const Poly& f, const Poly& g) { return divmod(f, g).second; }

bool divides(const Poly& d, const Poly& f) {
  if (d.is_zero()) return f.is_zero();
  return mod(f, d).is_zero();
}

Poly gcd(const Poly& f, const Poly& g) {
  require_same_field(f, g);
  Poly a = f, b = g;
  while (!b.is_zero()) {
    Poly r = mod(a, b);
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

Xgcd xgcd(const Poly& f, const Poly& h) {
  require_same_field(f, h);
  const Field& F = f.field();
  Poly r0 = f, r1 = h;
  Poly u0 = Poly::constant(F.one()), u1 = Poly(F);
  Poly v0 = Poly(F), v1 = Poly::constant(F.one());
  while (!r1.is_zero()) {
    auto [q, r] = divmod(r0, r1);
    Poly nu = u0 - q * u1;
    Poly nv = v0 - q * v1;
    r0 = std::move(r1);
    r1 = std::move(r);
    u0 = std::move(u1);
    u1 = std::move(nu);
    v0 = std::move(v1);
    v1 = std::move(nv);
  }
  if (r0.is_zero()) return {r0, u0, v0};
  FieldElem s = inv(r0.leading());
  return {s * r0, s * u0, s * v0};
}

Poly powmod(const Poly& base, const mpz_class& e, const Poly& m) {
  if (e < 0) throw std::invalid_argument("powmod: negative exponent");
  if (m.is_zero()) throw std::domain_error("powmod: zero modulus");
  Poly acc = Poly::constant(base.field().one());
  if (e == 0) return mod(acc, m);
  Poly b = mod(base, m);
  const mp_bitcnt_t bits = mpz_sizeinbase(e.get_mpz_t(), 2);
  for (mp_bitcnt_t i = 0; i < bits; ++i) {
    if (mpz_tstbit(e.get_mpz_t(), i)) acc = mod(acc * b, m);
    if (i + 1 < bits) b = mod(b * b, m);
  }
  return acc;
}

bool is_irreducible(const Poly& f) {
  if (f.degree_or(-1) < 1)
    throw std::invalid_argument("is_irreducible: constant input");
  const int n = *f.degree();
  if (n == 1) return true;
  const Poly g = f.monic();
  const Field& F = f.field();
  const mpz_class& q = F.cardinality();
  const Poly X = Poly::x(F);

  // x^(q^e) mod g for e = 1..n via repeated q-th powers
  std::vector<Poly> frob(static_cast<size_t>(n + 1), Poly(F));
  frob[0] = mod(X, g);
  for (int e = 1; e <= n; ++e)
    frob[static_cast<size_t>(e)] = powmod(frob[static_cast<size_t>(e - 1)], q, g);

  if (!(frob[static_cast<size_t>(n)] == mod(X, g))) return false;
  for (int r : prime_factors(n)) {
    Poly d = gcd(frob[static_cast<size_t>(n / r)] - X, g);
    if (d.degree_or(-1) != 0) return false;
  }
  return true;
}

std::vector<Poly> monic_irreducibles(const Field& field, int d,
                                     const Guards& guards) {
  if (d < 1) throw std::invalid_argument("monic_irreducibles: degree must be >= 1");
  if (!field.fits_index())
    throw GuardError("monic_irreducibles: field too large");
  const std::uint64_t q = field.cardinality().get_ui();
  mpz_class total;
  mpz_ui_pow_ui(total.get_mpz_t(), static_cast<unsigned long>(q),
                static_cast<unsigned long>(d));
  if (total > guards.space_enum_limit)
    throw GuardError("monic_irreducibles: candidate count exceeds guard");
  const std::uint64_t n = total.get_ui();

  std::vector<Poly> out;
  std::vector<FieldElem> coeffs(static_cast<size_t>(d + 1), field.zero());
  coeffs[static_cast<size_t>(d)] = field.one();
  for (std::uint64_t idx = 0; idx < n; ++idx) {
    std::uint64_t rest = idx;
    for (int j = d - 1; j >= 0; --j) {
      coeffs[static_cast<size_t>(j)] = field.element_at(rest % q);
      rest /= q;
    }
    Poly f(field, coeffs);
    if (is_irreducible(f)) out.push_back(std::move(f));
  }
  return out;
}

mpz_class monic_irreducible_count(const mpz_class& q, int d) {
  if (d < 1) throw std::invalid_argument("monic_irreducible_count: d >= 1 required");
  auto mobius = [](int n) {
    int mu = 1;
    for (int p = 2; p * p <= n; ++p) {
      if (n % p == 0) {
        n /= p;
        if (n % p == 0) return 0;
        mu = -mu;
      }
    }
    if (n > 1) mu = -mu;
    return mu;
  };
  mpz_class sum = 0;
  for (int e = 1; e <= d; ++e) {
    if (d % e != 0) continue;
    const int mu = mobius(d / e);
    if (mu == 0) continue;
    mpz_class qe;
    mpz_pow_ui(qe.get_mpz_t(), q.get_mpz_t(), static_cast<unsigned long>(e));
    sum += mu * qe;
  }
  mpz_class count = sum / d;
  if (count * d != sum)
    throw std::logic_error("monic_irreducible_count: non-integral result");
  return count;
}

}  // namespace holodense
