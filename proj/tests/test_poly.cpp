// Copyright 2026 the holodense authors
//
// Licensed under the Apache License, Version 2.0 (see
// LICENSE or https://www.apache.org/licenses/LICENSE-2.0).

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "holodense/field.hpp"
#include "holodense/poly.hpp"
#include "holodense/rng.hpp"
#include "test_support.hpp"

using namespace holodense;

namespace {

Poly random_poly(const Field& F, int max_deg, Xoshiro256& rng) {
  const std::uint64_t q = F.cardinality().get_ui();
  const int d = static_cast<int>(rng.below(static_cast<std::uint64_t>(max_deg + 1)));
  std::vector<FieldElem> c;
  for (int i = 0; i <= d; ++i) c.push_back(F.element_at(rng.below(q)));
  return Poly(F, std::move(c));
}

}  // namespace

TEST_CASE("arithmetic examples") {
  auto F2 = Field::make_prime(2);
  Poly xp1 = Poly::from_integers(*F2, {1, 1});
  CHECK(xp1 * xp1 == Poly::from_integers(*F2, {1, 0, 1}));  // char 2

  auto F5 = Field::make_prime(5);
  Poly f = Poly::from_integers(*F5, {1, 1, 0, 1});   // x^3 + x + 1
  Poly g = Poly::from_integers(*F5, {-2, 1});        // x - 2
  auto [q, r] = divmod(f, g);
  CHECK(r == Poly::from_integers(*F5, {1}));         // f(2) = 11 = 1 mod 5
  CHECK(q * g + r == f);

  CHECK(f + Poly(*F5) == f);
  CHECK_THROWS_AS(divmod(f, Poly(*F5)), std::domain_error);
}

TEST_CASE("degree of zero polynomial is disengaged") {
  auto F2 = Field::make_prime(2);
  Poly z(*F2);
  CHECK(z.is_zero());
  CHECK_FALSE(z.degree().has_value());
  CHECK(z.degree_or(-7) == -7);
  CHECK(Poly::from_integers(*F2, {1}).degree() == 0);
}

TEST_CASE("gcd examples") {
  auto F2 = Field::make_prime(2);
  Poly a = Poly::from_integers(*F2, {0, 1, 1});  // x^2+x = x(x+1)
  Poly b = Poly::from_integers(*F2, {1, 0, 1});  // x^2+1 = (x+1)^2
  CHECK(gcd(a, b) == Poly::from_integers(*F2, {1, 1}));

  auto F5 = Field::make_prime(5);
  Poly one = Poly::from_integers(*F5, {1});
  CHECK(gcd(Poly::from_integers(*F5, {3, 0, 2}), one) == one);
  CHECK(gcd(Poly::from_integers(*F5, {-2, 1}), Poly::from_integers(*F5, {-3, 1})) == one);

  CHECK(gcd(Poly(*F5), Poly(*F5)).is_zero());
  // gcd(f, 0) is the monic normalization of f
  CHECK(gcd(Poly::from_integers(*F5, {1, 2}), Poly(*F5)) ==
        Poly::from_integers(*F5, {3, 1}));
}

TEST_CASE("divmod round-trip and xgcd witness on random inputs") {
  Xoshiro256 rng(7);
  for (auto p : {2ull, 3ull, 5ull}) {
    auto F = Field::make_prime(p);
    for (int iter = 0; iter < 150; ++iter) {
      Poly f = random_poly(*F, 8, rng);
      Poly g = random_poly(*F, 5, rng);
      if (g.is_zero()) continue;
      auto [q, r] = divmod(f, g);
      CHECK(q * g + r == f);
      CHECK(r.degree_or(-1) < *g.degree());

      auto w = xgcd(f, g);
      CHECK(w.u * f + w.v * g == w.g);
      CHECK(w.g == gcd(f, g));
      if (!f.is_zero()) CHECK(divides(w.g, f));
      CHECK(divides(w.g, g));
    }
  }
}

TEST_CASE("irreducibility examples") {
  auto F2 = Field::make_prime(2);
  CHECK(is_irreducible(Poly::from_integers(*F2, {1, 1, 1})));
  CHECK_FALSE(is_irreducible(Poly::from_integers(*F2, {1, 0, 1})));
  auto F5 = Field::make_prime(5);
  CHECK(is_irreducible(Poly::from_integers(*F5, {-2, 1})));
  CHECK_THROWS_AS(is_irreducible(Poly::from_integers(*F5, {3})), std::invalid_argument);
}

TEST_CASE("Rabin test agrees with trial division up to degree 6") {
  for (auto p : {2ull, 3ull}) {
    auto F = Field::make_prime(p);
    for (int d = 1; d <= 6; ++d)
      for (const Poly& f : testing::monic_polys(*F, d))
        CHECK(is_irreducible(f) == testing::trial_division_irreducible(f));
  }
}

TEST_CASE("irreducible enumeration matches the Mobius count") {
  auto F2 = Field::make_prime(2);
  auto deg1 = monic_irreducibles(*F2, 1);
  REQUIRE(deg1.size() == 2);  // x and x+1
  CHECK(deg1[0] == Poly::from_integers(*F2, {0, 1}));
  CHECK(deg1[1] == Poly::from_integers(*F2, {1, 1}));

  auto deg2 = monic_irreducibles(*F2, 2);
  REQUIRE(deg2.size() == 1);
  CHECK(deg2[0] == Poly::from_integers(*F2, {1, 1, 1}));

  CHECK(monic_irreducibles(*F2, 3).size() == 2);

  for (auto q : {2ul, 3ul, 5ul}) {
    auto F = Field::make_prime(q);
    for (int d = 1; d <= 5; ++d) {
      mpz_class expect = monic_irreducible_count(mpz_class(q), d);
      CHECK(mpz_class(monic_irreducibles(*F, d).size()) == expect);
    }
  }
}

TEST_CASE("evaluation") {
  auto F5 = Field::make_prime(5);
  Poly f = Poly::from_integers(*F5, {1, 1, 0, 1});
  CHECK(f(F5->from_integer(2)) == F5->from_integer(1));
  CHECK(Poly(*F5)(F5->from_integer(3)).is_zero());

  // a polynomial over F_2 evaluated at the generator of F_4 it defines
  auto F2 = Field::make_prime(2);
  auto F4 = Field::make_extension(F2, 2);
  Poly mod_poly = Poly::from_integers(*F2, {1, 1, 1});
  CHECK(mod_poly(F4->element_at(2)).is_zero());

  CHECK_THROWS_AS(f(F2->one()), std::invalid_argument);
}
