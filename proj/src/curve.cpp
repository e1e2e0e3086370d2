// Copyright 2026 the holodense authors
//
// Licensed under the Apache License, Version 2.0 (see
// LICENSE or https://www.apache.org/licenses/LICENSE-2.0).

#include "holodense/curve.hpp"

#include <algorithm>
#include <stdexcept>

namespace holodense {

Curve::Curve(FieldPtr base, FieldElem a, FieldElem b)
    : base_(std::move(base)), a_(std::move(a)), b_(std::move(b)) {
  if (!base_) throw std::invalid_argument("curve: null base field");
  if (base_->characteristic() < 5)
    throw std::invalid_argument("curve: characteristic must be >= 5");
  if (!a_.field().same(*base_) || !b_.field().same(*base_))
    throw std::invalid_argument("curve: coefficients not over the base field");
  // 4a^3 + 27b^2 != 0
  FieldElem disc = base_->from_integer(4) * a_ * a_ * a_ +
                   base_->from_integer(27) * b_ * b_;
  if (disc.is_zero()) throw std::invalid_argument("curve: singular (4a^3 + 27b^2 = 0)");
}

FieldElem Curve::rhs(const FieldElem& x) const {
  const Field& K = x.field();
  if (!K.extends(*base_))
    throw std::invalid_argument("rhs: coordinate field does not extend the curve field");
  return x * x * x + embed(a_, K) * x + embed(b_, K);
}

Poly Curve::rhs_poly() const {
  return Poly(*base_, {b_, a_, base_->zero(), base_->one()});
}

AffinePoint make_point(const Curve& E, FieldPtr field, FieldElem x, FieldElem y) {
  if (!(y * y == E.rhs(x)))
    throw std::invalid_argument("make_point: coordinates are not on the curve");
  return AffinePoint{std::move(field), std::move(x), std::move(y)};
}

std::vector<AffinePoint> place_orbit(const Curve& E, const Place& P) {
  std::vector<AffinePoint> orbit;
  orbit.reserve(static_cast<size_t>(P.degree));
  AffinePoint cur = P.rep;
  const Field& base = *E.base_field();
  for (int i = 0; i < P.degree; ++i) {
    orbit.push_back(cur);
    cur = AffinePoint{P.rep.field, frobenius(cur.x, base), frobenius(cur.y, base)};
  }
  if (!(cur.x == P.rep.x) || !(cur.y == P.rep.y))
    throw std::logic_error("place_orbit: orbit does not close after deg steps");
  return orbit;
}

FieldPtr coordinate_field(const Curve& E, int d) {
  if (d < 1) throw std::invalid_argument("coordinate_field: degree must be >= 1");
  if (d == 1) return E.base_field();
  return Field::make_extension(E.base_field(), d);
}

mpz_class count_points_bruteforce(const Curve& E, int d, const Guards& guards) {
  FieldPtr K = coordinate_field(E, d);
  if (!K->fits_index() || K->cardinality() > guards.point_scan_limit)
    throw GuardError("count_points_bruteforce: q^d exceeds the scan guard");
  const std::uint64_t Q = K->cardinality().get_ui();
  // fiber over x has 1 + chi(rhs) points, chi the quadratic character
  const mpz_class half = (K->cardinality() - 1) / 2;
  const FieldElem one = K->one();
  mpz_class affine = 0;
  for (std::uint64_t i = 0; i < Q; ++i) {
    FieldElem r = E.rhs(K->element_at(i));
    if (r.is_zero()) {
      affine += 1;
      continue;
    }
    if (pow(r, half) == one) affine += 2;
  }
  return affine + 1;  // the point at infinity
}

std::vector<mpz_class> frobenius_traces(const mpz_class& q, const mpz_class& n1,
                                        int dmax) {
  if (dmax < 1) throw std::invalid_argument("frobenius_traces: dmax >= 1 required");
  std::vector<mpz_class> a(static_cast<size_t>(dmax + 1));
  a[0] = 2;
  a[1] = q + 1 - n1;
  for (int k = 1; k < dmax; ++k)
    a[static_cast<size_t>(k + 1)] =
        a[1] * a[static_cast<size_t>(k)] - q * a[static_cast<size_t>(k - 1)];
  a.erase(a.begin());
  return a;  // a_1..a_dmax
}

std::vector<mpz_class> point_counts(const Curve& E, int dmax, const Guards& guards) {
  const mpz_class& q = E.base_field()->cardinality();
  const mpz_class n1 = count_points_bruteforce(E, 1, guards);
  std::vector<mpz_class> traces = frobenius_traces(q, n1, dmax);
  std::vector<mpz_class> n(static_cast<size_t>(dmax));
  mpz_class qd = 1;
  for (int d = 1; d <= dmax; ++d) {
    qd *= q;
    n[static_cast<size_t>(d - 1)] = qd + 1 - traces[static_cast<size_t>(d - 1)];
  }
  return n;
}

mpq_class LPolynomial::operator()(const mpq_class& t) const {
  mpq_class acc = 0;
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it)
    acc = acc * t + mpq_class(*it);
  return acc;
}

mpz_class LPolynomial::at_one() const {
  mpz_class s = 0;
  for (const auto& c : coeffs) s += c;
  return s;
}

LPolynomial LPolynomial::trivial(const mpz_class& q) {
  return LPolynomial{q, 0, {mpz_class(1)}};
}

LPolynomial l_polynomial(const Curve& E, const Guards& guards) {
  const mpz_class& q = E.base_field()->cardinality();
  const mpz_class n1 = count_points_bruteforce(E, 1, guards);
  const mpz_class aq = q + 1 - n1;
  LPolynomial L{q, 1, {mpz_class(1), -aq, q}};
  if (L.at_one() != n1)
    throw std::logic_error("l_polynomial: L(1) != N_1");
  if (aq * aq > 4 * q)
    throw std::logic_error("l_polynomial: trace violates the Hasse bound");
  return L;
}

std::vector<mpz_class> place_counts_from_point_counts(
    const std::vector<mpz_class>& n) {
  const int dmax = static_cast<int>(n.size());
  std::vector<mpz_class> b(static_cast<size_t>(dmax));
  for (int d = 1; d <= dmax; ++d) {
    mpz_class rest = 0;
    for (int e = 1; e < d; ++e)
      if (d % e == 0) rest += e * b[static_cast<size_t>(e - 1)];
    mpz_class num = n[static_cast<size_t>(d - 1)] - rest;
    mpz_class bd = num / d;
    if (bd * d != num || bd < 0)
      throw std::invalid_argument("place_counts: inconsistent point counts");
    b[static_cast<size_t>(d - 1)] = bd;
  }
  return b;
}

std::vector<mpz_class> affine_place_counts(const Curve& E, int dmax,
                                           const Guards& guards) {
  std::vector<mpz_class> b =
      place_counts_from_point_counts(point_counts(E, dmax, guards));
  b[0] -= 1;  // drop the place at infinity (degree 1)
  if (b[0] < 0) throw std::logic_error("affine_place_counts: negative B_1");
  return b;
}

namespace {

// visited slot for a point: each x carries at most two curve points,
// distinguished by comparing the index of y with that of -y
int point_slot(const Field& K, const FieldElem& y) {
  FieldElem neg = -y;
  if (neg == y) return 0;
  return K.index_of(y) < K.index_of(neg) ? 0 : 1;
}

}  // namespace

std::vector<Place> enumerate_affine_places(const Curve& E, int dmax,
                                           const Guards& guards) {
  if (dmax < 1) throw std::invalid_argument("enumerate_affine_places: dmax >= 1");
  const std::vector<mpz_class> expected = affine_place_counts(E, dmax, guards);
  const Field& base = *E.base_field();
  std::vector<Place> places;

  for (int d = 1; d <= dmax; ++d) {
    FieldPtr K = coordinate_field(E, d);
    if (!K->fits_index() || K->cardinality() > guards.point_scan_limit)
      throw GuardError("enumerate_affine_places: q^d exceeds the scan guard");
    const std::uint64_t Q = K->cardinality().get_ui();

    // square table: sorted (index of y^2, index of y)
    std::vector<std::pair<std::uint64_t, std::uint64_t>> squares;
    squares.reserve(Q);
    for (std::uint64_t yi = 0; yi < Q; ++yi) {
      FieldElem y = K->element_at(yi);
      squares.emplace_back(K->index_of(y * y), yi);
    }
    std::sort(squares.begin(), squares.end());

    std::vector<bool> visited(2 * Q, false);
    mpz_class found = 0;
    for (std::uint64_t xi = 0; xi < Q; ++xi) {
      FieldElem x = K->element_at(xi);
      const std::uint64_t rhs_idx = K->index_of(E.rhs(x));
      auto lo = std::lower_bound(squares.begin(), squares.end(),
                                 std::make_pair(rhs_idx, std::uint64_t{0}));
      for (auto it = lo; it != squares.end() && it->first == rhs_idx; ++it) {
        FieldElem y = K->element_at(it->second);
        if (visited[2 * xi + static_cast<std::uint64_t>(point_slot(*K, y))])
          continue;
        // walk the Frobenius orbit; exact degree d means orbit size d
        FieldElem cx = x, cy = y;
        int orbit = 0;
        do {
          visited[2 * K->index_of(cx) +
                  static_cast<std::uint64_t>(point_slot(*K, cy))] = true;
          cx = frobenius(cx, base);
          cy = frobenius(cy, base);
          ++orbit;
        } while (!(cx == x && cy == y));
        if (orbit == d) {
          places.push_back(Place{d, AffinePoint{K, x, y}});
          found += 1;
        }
      }
    }
    if (found != expected[static_cast<size_t>(d - 1)])
      throw std::logic_error("enumerate_affine_places: count mismatch at degree " +
                             std::to_string(d));
  }
  return places;
}

}  // namespace holodense
