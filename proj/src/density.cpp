// Copyright 2026 the holodense authors
//
// Licensed under the Apache License, Version 2.0 (see
// LICENSE or https://www.apache.org/licenses/LICENSE-2.0).

#include "holodense/density.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace holodense {

namespace {

mpz_class zpow(const mpz_class& base, unsigned long e) {
  mpz_class out;
  mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), e);
  return out;
}

Rational make_rational(const mpz_class& num, const mpz_class& den) {
  Rational r(num, den);
  r.canonicalize();
  return r;
}

// 1 - q^(-k) as an exact rational
Rational one_minus_qpow(const mpz_class& q, unsigned long k) {
  mpz_class qk = zpow(q, k);
  return make_rational(qk - 1, qk);
}

void require_m(int m) {
  if (m < 2) throw std::invalid_argument("density: m >= 2 required");
}

}  // namespace

Rational density_rational(const mpz_class& q, int m) {
  require_m(m);
  if (q < 2) throw std::invalid_argument("density: q must be a prime power >= 2");
  return one_minus_qpow(q, static_cast<unsigned long>(m - 1));
}

Rational density_elliptic(const Curve& E, int m, const Guards& guards) {
  require_m(m);
  return density_finite_complement(l_polynomial(E, guards), {1}, m);
}

Rational density_finite_complement(const LPolynomial& L,
                                   const std::vector<int>& removed_degrees,
                                   int m) {
  require_m(m);
  if (removed_degrees.empty())
    throw std::invalid_argument("density: the removed place set must be nonempty");
  const mpz_class& q = L.q;
  const Rational t = make_rational(1, zpow(q, static_cast<unsigned long>(m)));

  Rational num = one_minus_qpow(q, static_cast<unsigned long>(m)) *
                 one_minus_qpow(q, static_cast<unsigned long>(m - 1));
  Rational den = L(t);
  for (int d : removed_degrees) {
    if (d < 1) throw std::invalid_argument("density: removed degrees must be >= 1");
    den *= one_minus_qpow(q, static_cast<unsigned long>(m) * d);
  }
  if (den == 0) throw std::logic_error("density: zeta denominator vanished");
  return num / den;
}

void validate_lpolynomial(const LPolynomial& L) {
  if (L.coeffs.empty() || L.coeffs.front() != 1)
    throw std::invalid_argument("L-polynomial: constant term must be 1");
  if (L.coeffs.size() % 2 == 0)
    throw std::invalid_argument("L-polynomial: degree must be even (2g)");
  const int g = (static_cast<int>(L.coeffs.size()) - 1) / 2;
  if (L.genus != g)
    throw std::invalid_argument("L-polynomial: genus field disagrees with the degree");
  if (L.q < 2) throw std::invalid_argument("L-polynomial: q must be >= 2");
  // functional equation: c_{2g-i} = q^(g-i) c_i
  for (int i = 0; i <= g; ++i) {
    const mpz_class expect =
        zpow(L.q, static_cast<unsigned long>(g - i)) * L.coeffs[static_cast<size_t>(i)];
    if (L.coeffs[static_cast<size_t>(2 * g - i)] != expect)
      throw std::invalid_argument("L-polynomial: functional equation violated");
  }
}

std::vector<mpz_class> point_counts_from_lpoly(const LPolynomial& L, int dmax) {
  if (dmax < 1) throw std::invalid_argument("point_counts_from_lpoly: dmax >= 1");
  const int n = static_cast<int>(L.coeffs.size()) - 1;  // 2g
  // Newton's identities on the inverse roots:
  //   p_k = -sum_{j=1}^{min(k-1,n)} c_j p_{k-j} - [k <= n] k c_k
  std::vector<mpz_class> p(static_cast<size_t>(dmax + 1));
  for (int k = 1; k <= dmax; ++k) {
    mpz_class acc = 0;
    for (int j = 1; j <= std::min(k - 1, n); ++j)
      acc += L.coeffs[static_cast<size_t>(j)] * p[static_cast<size_t>(k - j)];
    if (k <= n) acc += k * L.coeffs[static_cast<size_t>(k)];
    p[static_cast<size_t>(k)] = -acc;
  }
  std::vector<mpz_class> counts(static_cast<size_t>(dmax));
  for (int d = 1; d <= dmax; ++d)
    counts[static_cast<size_t>(d - 1)] =
        zpow(L.q, static_cast<unsigned long>(d)) + 1 - p[static_cast<size_t>(d)];
  return counts;
}

std::vector<mpz_class> place_counts_from_lpoly(const LPolynomial& L,
                                               const std::vector<int>& removed_degrees,
                                               int dmax) {
  std::vector<mpz_class> b =
      place_counts_from_point_counts(point_counts_from_lpoly(L, dmax));
  for (int d : removed_degrees) {
    if (d < 1) throw std::invalid_argument("place counts: removed degree must be >= 1");
    if (d <= dmax) {
      b[static_cast<size_t>(d - 1)] -= 1;
      if (b[static_cast<size_t>(d - 1)] < 0)
        throw std::invalid_argument("place counts: removed more places than exist");
    }
  }
  return b;
}

Rational truncated_density(const std::vector<mpz_class>& place_counts,
                           const mpz_class& q, int m) {
  require_m(m);
  mpz_class num = 1, den = 1;
  for (size_t i = 0; i < place_counts.size(); ++i) {
    const mpz_class& bd = place_counts[i];
    if (bd < 0) throw std::invalid_argument("truncated_density: negative place count");
    if (bd == 0) continue;
    if (!bd.fits_ulong_p())
      throw std::invalid_argument("truncated_density: place count too large");
    const unsigned long e = bd.get_ui();
    const mpz_class qmd = zpow(q, static_cast<unsigned long>(m) * (i + 1));
    num *= zpow(qmd - 1, e);
    den *= zpow(qmd, e);
  }
  return make_rational(num, den);
}

Rational euler_tail_bound(const mpz_class& q, int genus, int m, int t) {
  require_m(m);
  if (genus < 0 || t < 0) throw std::invalid_argument("tail bound: bad genus or t");
  // sum_{d > t} x^d = x^(t+1) / (1 - x)
  auto geo_tail = [&](const Rational& x) -> Rational {
    const mpz_class num = x.get_num(), den = x.get_den();
    Rational xt = make_rational(zpow(num, static_cast<unsigned long>(t + 1)),
                                zpow(den, static_cast<unsigned long>(t + 1)));
    return Rational(xt / (1 - x));
  };
  const Rational r = make_rational(1, zpow(q, static_cast<unsigned long>(m - 1)));
  const Rational s = make_rational(1, zpow(q, static_cast<unsigned long>(m)));
  Rational sum = (1 + 2 * genus) * geo_tail(r) + geo_tail(s);
  const mpz_class scale = zpow(q, static_cast<unsigned long>(genus) *
                                      static_cast<unsigned long>(m));
  return sum * scale / (t + 1);
}

namespace {

DensityEnclosure build_enclosure(const LPolynomial& L,
                                 const std::vector<int>& removed, int m, int t) {
  if (t < 0) throw std::invalid_argument("enclosure: t >= 0 required");
  DensityEnclosure out;
  out.t = t;
  out.exact = density_finite_complement(L, removed, m);
  out.truncated =
      t == 0 ? Rational(1)
             : truncated_density(place_counts_from_lpoly(L, removed, t), L.q, m);
  out.tail = euler_tail_bound(L.q, L.genus, m, t);
  out.upper = out.truncated;
  out.lower = out.truncated - out.tail;
  if (out.lower < 0) out.lower = 0;
  if (!out.contains(*out.exact))
    throw std::logic_error("enclosure: exact density escaped the interval");
  return out;
}

}  // namespace

DensityEnclosure enclosure_rational(const mpz_class& q, int m, int t) {
  return build_enclosure(LPolynomial::trivial(q), {1}, m, t);
}

DensityEnclosure enclosure_elliptic(const Curve& E, int m, int t,
                                    const Guards& guards) {
  return build_enclosure(l_polynomial(E, guards), {1}, m, t);
}

DensityEnclosure enclosure_generic(const LPolynomial& L,
                                   const std::vector<int>& removed_degrees,
                                   int m, int t) {
  validate_lpolynomial(L);
  return build_enclosure(L, removed_degrees, m, t);
}

std::string decimal_string(const Rational& v, int digits) {
  if (digits < 0) throw std::invalid_argument("decimal_string: digits >= 0");
  mpz_class num = v.get_num(), den = v.get_den();
  std::string sign;
  if (num < 0) {
    sign = "-";
    num = -num;
  }
  mpz_class ip = num / den;
  mpz_class rem = num - ip * den;
  std::ostringstream os;
  os << sign << ip.get_str();
  if (digits > 0) {
    os << '.';
    for (int i = 0; i < digits; ++i) {
      rem *= 10;
      mpz_class digit = rem / den;
      rem -= digit * den;
      os << digit.get_str();
    }
  }
  return os.str();
}

}  // namespace holodense
