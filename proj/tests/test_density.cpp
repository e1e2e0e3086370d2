// Copyright 2026 the holodense authors
//
// Licensed under the Apache License, Version 2.0 (see
// LICENSE or https://www.apache.org/licenses/LICENSE-2.0).

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "holodense/density.hpp"
#include "holodense/poly.hpp"
#include "holodense/rng.hpp"

using namespace holodense;

namespace {

Curve e_5_1_1() {
  auto F5 = Field::make_prime(5);
  return Curve(F5, F5->from_integer(1), F5->from_integer(1));
}

Rational qpow_term(unsigned long q, unsigned long e) {
  mpz_class d;
  mpz_ui_pow_ui(d.get_mpz_t(), q, e);
  Rational r(mpz_class(d - 1), d);
  r.canonicalize();
  return r;
}

}  // namespace

TEST_CASE("closed form over F_q[x]") {
  CHECK(density_rational(2, 2) == Rational(1, 2));
  CHECK(density_rational(3, 3) == Rational(8, 9));
  CHECK_THROWS_AS(density_rational(2, 1), std::invalid_argument);

  SUBCASE("inside (0,1) and increasing in m") {
    for (unsigned long q : {2ul, 3ul, 4ul, 5ul, 7ul, 9ul}) {
      Rational prev = 0;
      for (int m = 2; m <= 6; ++m) {
        Rational d = density_rational(q, m);
        CHECK(d > 0);
        CHECK(d < 1);
        CHECK(d > prev);
        prev = d;
      }
    }
  }
}

TEST_CASE("elliptic closed form") {
  Curve E = e_5_1_1();
  CHECK(density_elliptic(E, 2) == Rational(100, 141));
  CHECK_THROWS_AS(density_elliptic(E, 1), std::invalid_argument);

  SUBCASE("hand derivation from the brute-force count") {
    // N_1 = 9 so a_q = -3; denominator L(1/25) = (125 + 15 + 1)/125
    mpz_class n1 = count_points_bruteforce(E, 1);
    REQUIRE(n1 == 9);
    Rational expected = Rational(1 - Rational(1, 5)) / Rational(141, 125);
    CHECK(expected == Rational(100, 141));
  }

  SUBCASE("trace zero reduces to (1 - q^(1-m))/(1 + q^(1-2m))") {
    // supersingular-style L = 1 + qT^2
    LPolynomial L{mpz_class(7), 1, {mpz_class(1), mpz_class(0), mpz_class(7)}};
    for (int m = 2; m <= 5; ++m) {
      mpz_class qm1, q2m1;
      mpz_ui_pow_ui(qm1.get_mpz_t(), 7, static_cast<unsigned long>(m - 1));
      mpz_ui_pow_ui(q2m1.get_mpz_t(), 7, static_cast<unsigned long>(2 * m - 1));
      Rational direct = (1 - Rational(1, qm1)) / (1 + Rational(1, q2m1));
      CHECK(density_finite_complement(L, {1}, m) == direct);
    }
  }

  SUBCASE("monotone in m and inside (0,1)") {
    Rational prev = 0;
    for (int m = 2; m <= 6; ++m) {
      Rational d = density_elliptic(E, m);
      CHECK(d > 0);
      CHECK(d < 1);
      CHECK(d > prev);
      prev = d;
    }
  }
}

TEST_CASE("finite-complement formula") {
  SUBCASE("genus 0 with one removed place is the F_q[x] density") {
    for (unsigned long q : {2ul, 3ul, 5ul, 7ul, 9ul})
      for (int m = 2; m <= 5; ++m)
        CHECK(density_finite_complement(LPolynomial::trivial(q), {1}, m) ==
              density_rational(q, m));
  }

  SUBCASE("elliptic L with one removed place matches density_elliptic") {
    LPolynomial L{mpz_class(5), 1, {mpz_class(1), mpz_class(3), mpz_class(5)}};
    CHECK(density_finite_complement(L, {1}, 2) == Rational(100, 141));
  }

  SUBCASE("ten random curves, m in {2,3}") {
    Xoshiro256 rng(2024);
    int made = 0;
    while (made < 10) {
      const unsigned long ps[] = {5, 7, 11};
      auto F = Field::make_prime(ps[made % 3]);
      FieldElem a = F->element_at(rng.below(F->cardinality().get_ui()));
      FieldElem b = F->element_at(rng.below(F->cardinality().get_ui()));
      try {
        Curve E(F, a, b);
        for (int m : {2, 3})
          CHECK(density_elliptic(E, m) ==
                density_finite_complement(l_polynomial(E), {1}, m));
        ++made;
      } catch (const std::invalid_argument&) {
      }
    }
  }

  SUBCASE("errors") {
    CHECK_THROWS_AS(density_finite_complement(LPolynomial::trivial(2), {}, 2),
                    std::invalid_argument);
    CHECK_THROWS_AS(density_finite_complement(LPolynomial::trivial(2), {1}, 1),
                    std::invalid_argument);
  }
}

TEST_CASE("projective line minus two rational points, q = 2") {
  // closed form: (1 - q^-m)(1 - q^(1-m)) / (1 - q^-m)^2
  const Rational exact = density_finite_complement(LPolynomial::trivial(2), {1, 1}, 2);
  CHECK(exact == Rational(2, 3));

  // independent oracle: truncated Euler product over the monic irreducibles
  // of F_2[x] coprime to the two removed degree-1 places, to degree 12
  auto F2 = Field::make_prime(2);
  Rational product = 1;
  for (int d = 1; d <= 12; ++d) {
    std::size_t count = monic_irreducibles(*F2, d).size();
    if (d == 1) count -= 1;  // two of the three degree-1 places are removed
    for (std::size_t i = 0; i < count; ++i)
      product *= qpow_term(2, static_cast<unsigned long>(2 * d));
  }
  Rational tail = euler_tail_bound(2, 0, 2, 12);
  CHECK(product - tail <= exact);
  CHECK(exact <= product);

  // the library's own place counts agree with the enumeration
  auto b = place_counts_from_lpoly(LPolynomial::trivial(2), {1, 1}, 8);
  for (int d = 1; d <= 8; ++d) {
    mpz_class expect = monic_irreducible_count(2, d) + (d == 1 ? 1 : 0) -
                       (d == 1 ? 2 : 0);
    CHECK(b[static_cast<size_t>(d - 1)] == expect);
  }
}

TEST_CASE("point and place counts from the L-polynomial") {
  Curve E = e_5_1_1();
  LPolynomial L = l_polynomial(E);
  CHECK(point_counts_from_lpoly(L, 8) == point_counts(E, 8));
  CHECK(place_counts_from_lpoly(L, {1}, 6) == affine_place_counts(E, 6));
}

TEST_CASE("L-polynomial validation") {
  CHECK_NOTHROW(validate_lpolynomial(LPolynomial::trivial(4)));
  CHECK_NOTHROW(validate_lpolynomial(
      LPolynomial{mpz_class(5), 1, {mpz_class(1), mpz_class(3), mpz_class(5)}}));
  // wrong leading coefficient breaks the functional equation
  CHECK_THROWS_AS(validate_lpolynomial(LPolynomial{
                      mpz_class(5), 1, {mpz_class(1), mpz_class(3), mpz_class(4)}}),
                  std::invalid_argument);
  CHECK_THROWS_AS(validate_lpolynomial(LPolynomial{
                      mpz_class(5), 1, {mpz_class(2), mpz_class(3), mpz_class(5)}}),
                  std::invalid_argument);
  CHECK_THROWS_AS(
      validate_lpolynomial(LPolynomial{mpz_class(5), 0, {mpz_class(1), mpz_class(3)}}),
      std::invalid_argument);
}

TEST_CASE("truncated Euler products") {
  Curve E = e_5_1_1();
  auto b3 = affine_place_counts(E, 3);

  Rational t1 = truncated_density({b3[0]}, 5, 2);
  mpz_class num, den;
  mpz_ui_pow_ui(num.get_mpz_t(), 24, 8);
  mpz_ui_pow_ui(den.get_mpz_t(), 25, 8);
  Rational expect1(num, den);
  expect1.canonicalize();
  CHECK(t1 == expect1);  // (24/25)^8

  CHECK(truncated_density({}, 5, 2) == 1);

  SUBCASE("t = 3 product matches the per-place factorization") {
    Rational t3 = truncated_density(b3, 5, 2);
    Rational byhand = 1;
    for (int i = 0; i < 8; ++i) byhand *= Rational(24, 25);
    for (int i = 0; i < 9; ++i) byhand *= Rational(624, 625);
    for (int i = 0; i < 33; ++i) byhand *= qpow_term(5, 6);
    CHECK(t3 == byhand);
  }

  SUBCASE("strictly decreasing in t, bounded below by the exact density") {
    const Rational exact = density_elliptic(E, 2);
    auto b8 = affine_place_counts(E, 8);
    Rational prev = 2;
    for (int t = 1; t <= 8; ++t) {
      std::vector<mpz_class> prefix(b8.begin(), b8.begin() + t);
      Rational cur = truncated_density(prefix, 5, 2);
      CHECK(cur < prev);
      CHECK(cur > exact);
      prev = cur;
    }
  }
}

TEST_CASE("tail bound") {
  SUBCASE("strictly decreasing in t, vanishing for genus 0") {
    Rational prev;
    for (int t = 0; t <= 20; ++t) {
      Rational u = euler_tail_bound(2, 0, 2, t);
      CHECK(u > 0);
      if (t > 0) CHECK(u < prev);
      prev = u;
    }
    CHECK(prev < Rational(1, 100000));
  }

  SUBCASE("covers the actual truncation gap, elliptic") {
    Curve E = e_5_1_1();
    const Rational exact = density_elliptic(E, 2);
    auto b = affine_place_counts(E, 6);
    Rational trunc = truncated_density(b, 5, 2);
    Rational tail = euler_tail_bound(5, 1, 2, 6);
    CHECK(trunc - tail <= exact);
    CHECK(exact <= trunc);
  }
}

TEST_CASE("enclosures") {
  Curve E = e_5_1_1();

  SUBCASE("examples contain their exact densities") {
    auto enc = enclosure_elliptic(E, 2, 4);
    CHECK(enc.contains(Rational(100, 141)));
    auto encr = enclosure_rational(2, 3, 5);
    CHECK(encr.contains(Rational(3, 4)));
  }

  SUBCASE("width shrinks with t") {
    auto e2 = enclosure_elliptic(E, 2, 2);
    auto e6 = enclosure_elliptic(E, 2, 6);
    CHECK(e6.width() < e2.width());
  }

  SUBCASE("sandwich across t = 1..8 for m in {2,3}") {
    for (int m : {2, 3}) {
      const Rational er = density_rational(2, m);
      const Rational ee = density_elliptic(E, m);
      for (int t = 1; t <= 8; ++t) {
        CHECK(enclosure_rational(2, m, t).contains(er));
        CHECK(enclosure_elliptic(E, m, t).contains(ee));
      }
    }
  }

  SUBCASE("generic mode with two removed places") {
    auto enc = enclosure_generic(LPolynomial::trivial(2), {1, 1}, 2, 10);
    CHECK(enc.contains(Rational(2, 3)));
  }

  SUBCASE("genus-2 data through the generic path") {
    LPolynomial L{mpz_class(2), 2,
                  {mpz_class(1), mpz_class(1), mpz_class(1), mpz_class(2), mpz_class(4)}};
    CHECK_NOTHROW(validate_lpolynomial(L));
    // (1 - 2^-2)(1 - 2^-1) / (L(1/4) (1 - 2^-2)) with L(1/4) = 87/64
    CHECK(density_finite_complement(L, {1}, 2) == Rational(32, 87));
    auto enc = enclosure_generic(L, {1}, 2, 8);
    CHECK(enc.contains(Rational(32, 87)));
    // counts from the Newton recurrence satisfy the place-count identity
    auto n = point_counts_from_lpoly(L, 6);
    auto b = place_counts_from_point_counts(n);
    for (int d = 1; d <= 6; ++d) {
      mpz_class sum = 0;
      for (int e = 1; e <= d; ++e)
        if (d % e == 0) sum += e * b[static_cast<size_t>(e - 1)];
      CHECK(sum == n[static_cast<size_t>(d - 1)]);
    }
  }
}

TEST_CASE("decimal rendering") {
  CHECK(decimal_string(Rational(1, 2), 4) == "0.5000");
  CHECK(decimal_string(Rational(100, 141), 8) == "0.70921985");
  CHECK(decimal_string(Rational(-1, 3), 3) == "-0.333");
  CHECK(decimal_string(Rational(7, 1), 2) == "7.00");
  CHECK(decimal_string(Rational(1, 3), 0) == "0");
}
