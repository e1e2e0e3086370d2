// Copyright 2026 the holodense authors
//
// Licensed under the Apache License, Version 2.0 (see
// LICENSE or https://www.apache.org/licenses/LICENSE-2.0).

// Acceptance suite: end-to-end checks of the published contract, one
// PASS/FAIL line per criterion.  Takes the path of the holodense CLI binary
// as its only argument (criteria 1 and 8 go through the CLI surface).
//
// Statistical criteria use fixed seeds.  Rerun policy: a Wilson 95% interval
// misses its target in about 5% of seeds by construction; if criterion 6
// fails after a sampling-stream change, rerun once with seed 43 before
// treating it as a defect.

#include <array>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "holodense/experiment.hpp"
#include "holodense/rng.hpp"

using namespace holodense;
using Clock = std::chrono::steady_clock;

namespace {

int g_failures = 0;
std::vector<std::string> g_notes;

void note(const std::string& s) { g_notes.push_back(s); }

void require(bool ok, const std::string& what) {
  if (!ok) {
    note("check failed: " + what);
  }
}

void finish(int id, const std::string& label, Clock::time_point t0) {
  const double ms =
      std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
  const bool ok = g_notes.empty();
  if (!ok) ++g_failures;
  std::printf("%s [%d] %s (%.1f ms)\n", ok ? "PASS" : "FAIL", id, label.c_str(), ms);
  for (const auto& n : g_notes) std::printf("       %s\n", n.c_str());
  g_notes.clear();
}

struct CliResult {
  int exit_code = -1;
  std::string out;
};

CliResult run_cli(const std::string& cli, const std::string& args) {
  CliResult res;
  const std::string cmd = cli + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return res;
  char buf[4096];
  size_t got;
  while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) res.out.append(buf, got);
  const int status = pclose(pipe);
  res.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return res;
}

Curve e_5_1_1() {
  auto F5 = Field::make_prime(5);
  return Curve(F5, F5->from_integer(1), F5->from_integer(1));
}

// ---- criterion 2's independent brute force: plain int vectors mod 2 ----

int deg_of(const std::vector<int>& v) {
  for (int i = static_cast<int>(v.size()) - 1; i >= 0; --i)
    if (v[static_cast<size_t>(i)]) return i;
  return -1;
}

bool mod2_pair_coprime(std::vector<int> a, std::vector<int> b) {
  if (deg_of(a) < 0 && deg_of(b) < 0) return false;
  while (deg_of(b) >= 0) {
    std::vector<int> r = a;
    const int db = deg_of(b);
    for (int k = deg_of(r); k >= db; k = deg_of(r))
      for (int j = 0; j <= db; ++j)
        r[static_cast<size_t>(k - db + j)] ^= b[static_cast<size_t>(j)];
    a = b;
    b = r;
  }
  return deg_of(a) == 0;
}

void criterion_1(const std::string& cli) {
  const auto t0 = Clock::now();
  auto r1 = run_cli(cli, "density --space rational --q 2 --m 2");
  require(r1.exit_code == 0, "CLI exit code 0 for q=2 m=2");
  if (r1.exit_code == 0) {
    auto j = nlohmann::json::parse(r1.out);
    require(j["exact"] == "1/2", "exact density 1/2, got " + j["exact"].dump());
  }
  auto r2 = run_cli(cli, "density --space rational --q 3 --m 3");
  require(r2.exit_code == 0, "CLI exit code 0 for q=3 m=3");
  if (r2.exit_code == 0) {
    auto j = nlohmann::json::parse(r2.out);
    require(j["exact"] == "8/9", "exact density 8/9, got " + j["exact"].dump());
  }
  // the closed form itself evaluates in well under a millisecond
  const auto c0 = Clock::now();
  volatile bool sink = density_rational(2, 2) == Rational(1, 2) &&
                       density_rational(3, 3) == Rational(8, 9);
  const double form_ms =
      std::chrono::duration<double, std::milli>(Clock::now() - c0).count();
  require(sink, "closed-form values");
  require(form_ms < 1.0, "closed form under 1 ms, took " + std::to_string(form_ms));
  finish(1, "rational closed form: 1/2 and 8/9, exact, < 1 ms", t0);
}

void criterion_2() {
  const auto t0 = Clock::now();
  int coprime_pairs = 0;
  for (int a = 0; a < 8; ++a)
    for (int b = 0; b < 8; ++b)
      if (mod2_pair_coprime({a & 1, (a >> 1) & 1, (a >> 2) & 1},
                            {b & 1, (b >> 1) & 1, (b >> 2) & 1}))
        ++coprime_pairs;
  require(coprime_pairs == 33,
          "independent gcd brute force found " + std::to_string(coprime_pairs));

  auto R = RRSpace::rational(Field::make_prime(2), 2);
  ExperimentReport rep = exhaustive_density(R, 2);
  require(rep.total == 64 && rep.coprime == 33, "library count 33 of 64");
  require(rep.empirical == Rational(33, 64), "empirical exactly 33/64");
  const double ms =
      std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
  require(ms < 1000.0, "under 1 s");
  finish(2, "exhaustive rational q=2 n=2 m=2 = 33/64, confirmed independently", t0);
}

void criterion_3() {
  const auto t0 = Clock::now();
  Curve E = e_5_1_1();
  const std::array<long, 3> expect_n{9, 27, 108};
  auto recursion = point_counts(E, 3);
  for (int d = 1; d <= 3; ++d) {
    mpz_class brute = count_points_bruteforce(E, d);
    require(brute == expect_n[static_cast<size_t>(d - 1)],
            "brute force N_" + std::to_string(d));
    require(recursion[static_cast<size_t>(d - 1)] == brute,
            "trace recursion matches brute force at d=" + std::to_string(d));
  }
  auto b = affine_place_counts(E, 3);
  require(b[0] == 8 && b[1] == 9 && b[2] == 33, "B_1,B_2,B_3 = 8,9,33");
  LPolynomial L = l_polynomial(E);
  require(L.at_one() == 9, "L(1) = N_1");
  const double ms =
      std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
  require(ms < 5000.0, "under 5 s");
  finish(3, "elliptic pipeline: N_1..N_3 = 9,27,108; B = 8,9,33; L(1) = N_1", t0);
}

void criterion_4() {
  const auto t0 = Clock::now();
  Curve E = e_5_1_1();
  require(density_elliptic(E, 2) == Rational(100, 141), "density = 100/141");
  auto enc = enclosure_elliptic(E, 2, 6);
  require(enc.contains(Rational(100, 141)), "t=6 enclosure contains 100/141");
  require(!enc.contains(Rational(100, 111)),
          "t=6 enclosure excludes 100/111 (the uncorrected sign)");
  const double ms =
      std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
  require(ms < 10000.0, "under 10 s");
  finish(4, "sign convention: 100/141 confirmed by the Euler product, 100/111 excluded", t0);
}

void criterion_5() {
  const auto t0 = Clock::now();
  Curve E = e_5_1_1();
  const Rational bound(1, 1000);
  for (int m : {2, 3}) {
    const Rational er = density_rational(2, m);
    const Rational ee = density_elliptic(E, m);
    for (int t = 1; t <= 8; ++t) {
      auto encr = enclosure_rational(2, m, t);
      auto ence = enclosure_elliptic(E, m, t);
      require(encr.contains(er),
              "rational enclosure t=" + std::to_string(t) + " m=" + std::to_string(m));
      require(ence.contains(ee),
              "elliptic enclosure t=" + std::to_string(t) + " m=" + std::to_string(m));
      if (t == 8) {
        require(encr.width() < bound, "rational width below 1/1000 at t=8");
        require(ence.width() < bound, "elliptic width below 1/1000 at t=8");
      }
    }
  }
  finish(5, "sandwich: exact density inside every enclosure, width(t=8) < 1e-3", t0);
}

void criterion_6() {
  const auto t0 = Clock::now();
  Curve E = e_5_1_1();
  auto S = RRSpace::elliptic(E, 10);
  ExperimentReport rep = monte_carlo_density(S, 2, 100000, 42, 1);
  const double target = 100.0 / 141.0;
  const bool covered = *rep.ci_low <= target && target <= *rep.ci_high;
  require(covered, "95% Wilson CI [" + std::to_string(*rep.ci_low) + ", " +
                       std::to_string(*rep.ci_high) + "] covers 100/141");
  if (!covered)
    note("rerun policy: a 95% interval misses ~5% of seeds; rerun once with seed 43");
  const double ms =
      std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
  require(ms < 60000.0, "under 60 s single-threaded");
  finish(6, "Monte Carlo n=10, 1e5 samples, seed 42: CI covers 100/141", t0);
}

void criterion_7() {
  const auto t0 = Clock::now();
  std::uint64_t checked = 0;
  bool all_agree = true;
  for (std::uint64_t q : {2ull, 3ull, 5ull}) {
    auto F = Field::make_prime(q);
    for (int m : {2, 3}) {
      for (int n = 0; n <= 8; ++n) {
        auto res = cross_oracle_check(F, n, m, 186, 40000 + 100 * q + 10 * m + n);
        checked += res.checked;
        if (!res.agree) {
          all_agree = false;
          note("disagreement: " + res.disagreement);
        }
      }
    }
  }
  require(all_agree, "oracles agree everywhere");
  require(checked >= 10000, "at least 1e4 tuples, checked " + std::to_string(checked));
  finish(7, "gcd vs irreducible-divisor oracle: " + std::to_string(checked) +
                " tuples, zero disagreements", t0);
}

void criterion_8(const std::string& cli) {
  const auto t0 = Clock::now();
  const std::string mc_args =
      "experiment --space elliptic --curve 5,1,1 --n 6 --m 2 --mode mc "
      "--trials 20000 --seed 7 --workers ";
  auto m1 = run_cli(cli, mc_args + "1");
  auto m4 = run_cli(cli, mc_args + "4");
  require(m1.exit_code == 0 && m4.exit_code == 0, "mc runs exit 0");
  require(m1.out == m4.out && !m1.out.empty(), "mc CSV byte-identical, 1 vs 4 workers");

  const std::string ex_args =
      "experiment --space rational --q 3 --n 2 --m 2 --mode exhaustive --workers ";
  auto e1 = run_cli(cli, ex_args + "1");
  auto e4 = run_cli(cli, ex_args + "4");
  require(e1.exit_code == 0 && e4.exit_code == 0, "exhaustive runs exit 0");
  require(e1.out == e4.out && !e1.out.empty(),
          "exhaustive CSV byte-identical, 1 vs 4 workers");
  finish(8, "determinism: identical CSV bytes under 1 and 4 workers", t0);
}

void criterion_9() {
  const auto t0 = Clock::now();

  // field axioms on random samples
  {
    Xoshiro256 rng(20260101);
    for (const auto& F : {Field::make_prime(7),
                          Field::make_extension(Field::make_prime(3), 2)}) {
      const std::uint64_t q = F->cardinality().get_ui();
      for (int i = 0; i < 100; ++i) {
        FieldElem a = F->element_at(rng.below(q));
        FieldElem b = F->element_at(rng.below(q));
        FieldElem c = F->element_at(rng.below(q));
        require(a * (b + c) == a * b + a * c, "distributivity");
        require(a + b == b + a && a * b == b * a, "commutativity");
        require((a + b) + c == a + (b + c) && (a * b) * c == a * (b * c),
                "associativity");
        if (!a.is_zero()) require(a * inv(a) == F->one(), "inverses");
      }
    }
  }

  // divmod round-trip
  {
    auto F5 = Field::make_prime(5);
    Xoshiro256 rng(17);
    for (int i = 0; i < 200; ++i) {
      std::vector<FieldElem> fc, gc;
      for (int k = 0; k <= static_cast<int>(rng.below(8)); ++k)
        fc.push_back(F5->element_at(rng.below(5)));
      for (int k = 0; k <= static_cast<int>(rng.below(5)); ++k)
        gc.push_back(F5->element_at(rng.below(5)));
      Poly f(*F5, fc), g(*F5, gc);
      if (g.is_zero()) continue;
      auto [quo, rem] = divmod(f, g);
      require(quo * g + rem == f, "divmod round-trip");
      require(rem.degree_or(-1) < *g.degree(), "remainder degree");
    }
  }

  // Mobius irreducible counts
  for (unsigned long q : {2ul, 3ul, 5ul}) {
    auto F = Field::make_prime(q);
    for (int d = 1; d <= 5; ++d)
      require(mpz_class(monic_irreducibles(*F, d).size()) ==
                  monic_irreducible_count(q, d),
              "Mobius count q=" + std::to_string(q) + " d=" + std::to_string(d));
  }

  // place-count identity and Hasse bound
  for (unsigned long p : {5ul, 7ul}) {
    auto F = Field::make_prime(p);
    Curve E(F, F->from_integer(1), F->from_integer(p == 5 ? 1 : 3));
    auto n = point_counts(E, 6);
    auto proj = place_counts_from_point_counts(n);
    for (int d = 1; d <= 6; ++d) {
      mpz_class sum = 0;
      for (int e = 1; e <= d; ++e)
        if (d % e == 0) sum += e * proj[static_cast<size_t>(e - 1)];
      require(sum == n[static_cast<size_t>(d - 1)], "sum e*B_e = N_d");
    }
    auto traces = frobenius_traces(F->cardinality(),
                                   count_points_bruteforce(E, 1), 8);
    mpz_class qk = 1;
    for (int k = 1; k <= 8; ++k) {
      qk *= F->cardinality();
      require(traces[static_cast<size_t>(k - 1)] * traces[static_cast<size_t>(k - 1)] <=
                  4 * qk,
              "Hasse bound at k=" + std::to_string(k));
    }
  }

  // dimension formula
  {
    Curve E = e_5_1_1();
    for (int n = 0; n <= 50; ++n)
      require(RRSpace::elliptic(E, n)->dimension() == (n >= 1 ? n : 1),
              "dim L(nP) = max(1, n) at n=" + std::to_string(n));
  }

  finish(9, "property suites: axioms, divmod, Mobius, place identity, Hasse, dimension", t0);
}

}  // namespace

int main(int argc, char** argv) {
  if (argc < 2) {
    std::cerr << "usage: acceptance <path-to-holodense-cli>\n";
    return 2;
  }
  const std::string cli = argv[1];

  criterion_1(cli);
  criterion_2();
  criterion_3();
  criterion_4();
  criterion_5();
  criterion_6();
  criterion_7();
  criterion_8(cli);
  criterion_9();

  if (g_failures == 0) {
    std::printf("all 9 acceptance criteria passed\n");
    return 0;
  }
  std::printf("%d acceptance criteria FAILED\n", g_failures);
  return 1;
}
