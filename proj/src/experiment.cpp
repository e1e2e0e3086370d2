// Copyright 2026 the holodense authors
//
// Licensed under the Apache License, Version 2.0 (see
// LICENSE or https://www.apache.org/licenses/LICENSE-2.0).

#include "holodense/experiment.hpp"

#include <atomic>
#include <charconv>
#include <chrono>
#include <cmath>
#include <sstream>
#include <stdexcept>
#include <thread>

#include <json.hpp>

#include "holodense/rng.hpp"

namespace holodense {

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

}  // namespace

TupleSample::TupleSample(const RRSpace& s, std::vector<RRElement> c)
    : space(&s), comps(std::move(c)) {
  if (comps.size() < 2)
    throw std::invalid_argument("tuple: m >= 2 components required");
  for (const auto& f : comps)
    if (&f.space() != space)
      throw std::invalid_argument("tuple: component from a different space");
}

// --------------------------------------------------------------- gcd oracle

bool coprime_gcd_oracle(const TupleSample& t) {
  if (!t.space->is_rational())
    throw std::invalid_argument("gcd oracle: rational spaces only");
  const Field& F = t.space->coeff_field();
  Poly g(F);
  bool any = false;
  for (const RRElement& f : t.comps) {
    if (f.is_zero()) continue;
    any = true;
    g = gcd(g, xy_parts(f).first);
    if (g.degree_or(-1) == 0) return true;  // unit ideal reached
  }
  if (!any) return false;  // zero ideal
  return g.degree_or(-1) == 0;
}

// ------------------------------------------------------------- place oracle

const FieldPtr& PlaceOracleContext::field_of_degree(int e) {
  auto it = fields_.find(e);
  if (it == fields_.end())
    it = fields_.emplace(e, coordinate_field(*curve_, e)).first;
  return it->second;
}

namespace {

// Deterministic stream for the randomized root splitting, derived from the
// polynomial itself so the oracle stays a pure function of its input.
std::uint64_t hash_poly(const Poly& f) {
  SplitMix64 sm(0x484f4c4f44454e53ULL ^ static_cast<std::uint64_t>(f.degree_or(0)));
  std::uint64_t h = sm.next();
  for (const FieldElem& c : f.coeffs()) {
    h ^= c.field().index_of(c) + 0x9E3779B97F4A7C15ULL + (h << 6) + (h >> 2);
    h = SplitMix64(h).next();
  }
  return h;
}

FieldElem random_element(const Field& K, SplitMix64& sm) {
  if (K.kind() == Field::Kind::prime)
    return K.element_at(sm.next() % K.characteristic());
  std::vector<FieldElem> coeffs;
  coeffs.reserve(static_cast<size_t>(K.degree()));
  for (int i = 0; i < K.degree(); ++i)
    coeffs.push_back(random_element(*K.base(), sm));
  return K.make(std::move(coeffs));
}

// All roots in K of a squarefree polynomial that splits completely over K
// (Cantor-Zassenhaus splitting with a derived deterministic stream).
std::vector<FieldElem> roots_in_field(const Poly& h, const Field& K,
                                      std::uint64_t seed) {
  std::vector<FieldElem> roots;
  std::vector<Poly> work;
  // lift coefficients into K
  {
    std::vector<FieldElem> lifted;
    for (const FieldElem& c : h.coeffs()) lifted.push_back(embed(c, K));
    work.push_back(Poly(K, std::move(lifted)).monic());
  }
  SplitMix64 sm(seed);
  const mpz_class half = (K.cardinality() - 1) / 2;
  const Poly one_poly = Poly::constant(K.one());
  while (!work.empty()) {
    Poly f = std::move(work.back());
    work.pop_back();
    const int d = f.degree_or(0);
    if (d == 0) continue;
    if (d == 1) {
      roots.push_back(-(f.coeff(0)));
      continue;
    }
    bool split = false;
    for (int tries = 0; tries < 256 && !split; ++tries) {
      Poly shifted(K, {random_element(K, sm), K.one()});
      Poly w = powmod(shifted, half, f) - one_poly;
      Poly g = gcd(w, f);
      const int dg = g.degree_or(0);
      if (dg > 0 && dg < d) {
        work.push_back(divmod(f, g).first);
        work.push_back(std::move(g));
        split = true;
      }
    }
    if (!split)
      throw std::logic_error("root splitting failed to converge");
  }
  return roots;
}

// Tonelli-Shanks square root; disengaged when a is a non-residue.
std::optional<FieldElem> sqrt_in_field(const FieldElem& a) {
  const Field& K = a.field();
  if (a.is_zero()) return a;
  const mpz_class card = K.cardinality();
  const mpz_class half = (card - 1) / 2;
  if (!pow(a, half).is_one()) return std::nullopt;

  mpz_class t = card - 1;
  unsigned long s = 0;
  while (mpz_even_p(t.get_mpz_t())) {
    t /= 2;
    ++s;
  }
  if (s == 1) return pow(a, (card + 1) / 4);

  // deterministic scan for a non-residue
  FieldElem nonres = K.one();
  for (std::uint64_t i = 2;; ++i) {
    nonres = K.element_at(i);
    if (!nonres.is_zero() && !pow(nonres, half).is_one()) break;
  }
  FieldElem c = pow(nonres, t);
  FieldElem r = pow(a, (t + 1) / 2);
  FieldElem u = pow(a, t);
  while (!u.is_one()) {
    unsigned long i = 0;
    FieldElem probe = u;
    while (!probe.is_one()) {
      probe = probe * probe;
      ++i;
    }
    FieldElem b = c;
    for (unsigned long k = 0; k + i + 1 < s; ++k) b = b * b;
    r = r * b;
    c = b * b;
    u = u * c;
    s = i;
  }
  return r;
}

struct PlaceCandidate {
  int degree = 0;        // degree of the x-orbit
  FieldElem x;           // root in F_{q^degree}
};

// The norm A^2 - B^2 (x^3+ax+b) of f = A + B y down to F_q[x]; its degree
// equals the pole order of f, so roots of the norm gcd are exactly the
// candidate x-orbits allowed by the Riemann-Roch search bound.
Poly component_norm(const Curve& E, const RRElement& f) {
  auto [a, b] = xy_parts(f);
  Poly n = a * a - b * b * E.rhs_poly();
  if (n.is_zero())
    throw std::logic_error("component norm vanished for a nonzero element");
  return n;
}

// Exact-degree factor blocks of G via distinct-degree splitting.
std::vector<std::pair<int, Poly>> distinct_degree_blocks(const Poly& G) {
  const Field& F = G.field();
  const mpz_class& q = F.cardinality();
  const Poly X = Poly::x(F);
  std::vector<std::pair<int, Poly>> blocks;
  std::vector<Poly> exact;  // exact[e-1] = product of degree-e irreducible factors
  Poly w = mod(X, G);
  const int dG = G.degree_or(0);
  for (int e = 1; e <= dG; ++e) {
    w = powmod(w, q, G);
    Poly h = gcd(w - X, G);  // factors of degree dividing e, each once
    for (int ep = 1; ep < e; ++ep) {
      if (e % ep != 0) continue;
      const Poly& lower = exact[static_cast<size_t>(ep - 1)];
      if (lower.degree_or(0) == 0) continue;
      auto [quot, rem] = divmod(h, lower);
      if (!rem.is_zero())
        throw std::logic_error("distinct-degree split: inexact division");
      h = quot;
    }
    exact.push_back(h);
    if (h.degree_or(0) > 0) blocks.emplace_back(e, h);
  }
  return blocks;
}

struct OracleOutcome {
  bool coprime = true;
  // set when not coprime and a witness was requested
  std::optional<Place> witness;
};

OracleOutcome run_place_oracle(const TupleSample& t, PlaceOracleContext& ctx,
                               bool want_witness) {
  if (t.space->is_rational())
    throw std::invalid_argument("place oracle: elliptic spaces only");
  const Curve& E = ctx.curve();

  std::vector<const RRElement*> nonzero;
  for (const RRElement& f : t.comps) {
    if (f.is_zero()) continue;
    if (f.is_unit_constant()) return {true, std::nullopt};
    nonzero.push_back(&f);
  }
  if (nonzero.empty()) return {false, std::nullopt};  // zero ideal, no witness

  std::vector<std::pair<Poly, Poly>> parts;  // (A_i, B_i)
  Poly G(t.space->coeff_field());
  for (const RRElement* f : nonzero) {
    parts.push_back(xy_parts(*f));
    G = gcd(G, component_norm(E, *f));
    if (G.degree_or(-1) == 0) return {true, std::nullopt};
  }

  for (const auto& [e, block] : distinct_degree_blocks(G)) {
    const FieldPtr& K = ctx.field_of_degree(e);
    for (const FieldElem& alpha : roots_in_field(block, *K, hash_poly(block))) {
      std::vector<FieldElem> eva, evb;
      for (const auto& [a, b] : parts) {
        eva.push_back(a(alpha));
        evb.push_back(b(alpha));
      }
      int pivot = -1;
      for (size_t i = 0; i < evb.size(); ++i)
        if (!evb[i].is_zero()) {
          pivot = static_cast<int>(i);
          break;
        }
      if (pivot >= 0) {
        // the pivot component forces the y-coordinate
        FieldElem y = -(eva[static_cast<size_t>(pivot)] /
                        evb[static_cast<size_t>(pivot)]);
        bool all = true;
        for (size_t i = 0; i < eva.size(); ++i)
          if (!(eva[i] + evb[i] * y).is_zero()) {
            all = false;
            break;
          }
        if (!all) continue;
        OracleOutcome out{false, std::nullopt};
        if (want_witness) out.witness = Place{e, make_point(E, K, alpha, y)};
        return out;
      }
      // every B_i(alpha) = 0 forces every A_i(alpha) = 0 through the norms;
      // the whole fiber over alpha annihilates the tuple
      for (const FieldElem& va : eva)
        if (!va.is_zero())
          throw std::logic_error("place oracle: norm divisibility violated");
      OracleOutcome out{false, std::nullopt};
      if (want_witness) {
        FieldElem r = E.rhs(alpha);
        if (auto y = sqrt_in_field(r)) {
          out.witness = Place{e, make_point(E, K, alpha, *y)};
        } else {
          // fiber is inert: the common zero lives one quadratic step up
          FieldPtr L = Field::make_extension(K, 2);
          FieldElem alpha_up = embed(alpha, *L);
          auto y_up = sqrt_in_field(E.rhs(alpha_up));
          if (!y_up)
            throw std::logic_error("place oracle: no square root in the quadratic extension");
          out.witness = Place{2 * e, make_point(E, L, alpha_up, *y_up)};
        }
      }
      return out;
    }
  }
  return {true, std::nullopt};
}

}  // namespace

bool coprime_place_oracle(const TupleSample& t, PlaceOracleContext& ctx) {
  return run_place_oracle(t, ctx, false).coprime;
}

std::optional<Place> place_oracle_witness(const TupleSample& t,
                                          PlaceOracleContext& ctx) {
  return run_place_oracle(t, ctx, true).witness;
}

// -------------------------------------------------------- irreducible sieve

IrreducibleSieve::IrreducibleSieve(FieldPtr field, int dmax)
    : field_(std::move(field)), dmax_(dmax) {
  if (dmax_ < 1) throw std::invalid_argument("sieve: dmax >= 1 required");
  if (!field_->fits_index())
    throw GuardError("sieve: field too large");
  const std::uint64_t q = field_->cardinality().get_ui();
  std::uint64_t size = 1;
  smallest_.resize(static_cast<size_t>(dmax_ + 1));
  for (int d = 1; d <= dmax_; ++d) {
    if (size > Guards::active().space_enum_limit / q)
      throw GuardError("sieve: table exceeds the enumeration guard");
    size *= q;
    smallest_[static_cast<size_t>(d)].assign(size, 0);
  }

  // composites of degree d are products p*h with p the smallest irreducible
  // factor, deg p <= d/2; degrees are processed upward so irreducibility of
  // the candidate p is already settled
  for (int d = 2; d <= dmax_; ++d) {
    for (int e = 1; 2 * e <= d; ++e) {
      const std::uint64_t pe = smallest_[static_cast<size_t>(e)].size();
      const std::uint64_t ph = [&] {
        std::uint64_t v = 1;
        for (int i = 0; i < d - e; ++i) v *= q;
        return v;
      }();
      for (std::uint64_t pi = 0; pi < pe; ++pi) {
        if (smallest_[static_cast<size_t>(e)][pi] != 0) continue;  // composite
        const Poly p = decode(e, pi);
        const std::uint64_t code =
            (static_cast<std::uint64_t>(e) << 48) | pi;
        for (std::uint64_t hi = 0; hi < ph; ++hi) {
          const Poly prod = p * decode(d - e, hi);
          std::uint64_t& slot =
              smallest_[static_cast<size_t>(d)][encode(prod, d)];
          if (slot == 0) slot = code;
        }
      }
    }
  }
}

std::uint64_t IrreducibleSieve::encode(const Poly& f, int d) const {
  const std::uint64_t q = field_->cardinality().get_ui();
  std::uint64_t idx = 0;
  for (int j = d - 1; j >= 0; --j)
    idx = idx * q + field_->index_of(f.coeff(j));
  return idx;
}

Poly IrreducibleSieve::decode(int d, std::uint64_t idx) const {
  const std::uint64_t q = field_->cardinality().get_ui();
  std::vector<FieldElem> coeffs(static_cast<size_t>(d + 1), field_->zero());
  coeffs[static_cast<size_t>(d)] = field_->one();
  for (int j = 0; j < d; ++j) {
    coeffs[static_cast<size_t>(j)] = field_->element_at(idx % q);
    idx /= q;
  }
  return Poly(*field_, std::move(coeffs));
}

bool IrreducibleSieve::sieve_irreducible(const Poly& f) const {
  const int d = f.degree_or(-1);
  if (d < 1 || d > dmax_ || !f.is_monic())
    throw std::invalid_argument("sieve: monic polynomial of degree 1..dmax expected");
  return smallest_[static_cast<size_t>(d)][encode(f, d)] == 0;
}

std::vector<Poly> IrreducibleSieve::distinct_irreducible_factors(const Poly& f) const {
  Poly rest = f.monic();
  if (rest.degree_or(-1) > dmax_)
    throw std::invalid_argument("sieve: degree exceeds the table bound");
  std::vector<Poly> factors;
  while (rest.degree_or(0) >= 1) {
    const int d = *rest.degree();
    const std::uint64_t code = smallest_[static_cast<size_t>(d)][encode(rest, d)];
    Poly p = code == 0 ? rest
                       : decode(static_cast<int>(code >> 48),
                                code & ((1ULL << 48) - 1));
    factors.push_back(p);
    // strip every copy of p
    while (true) {
      auto [quot, rem] = divmod(rest, p);
      if (!rem.is_zero()) break;
      rest = quot;
    }
  }
  return factors;
}

bool coprime_irreducible_oracle(const TupleSample& t, const IrreducibleSieve& sieve) {
  if (!t.space->is_rational())
    throw std::invalid_argument("irreducible oracle: rational spaces only");
  const RRElement* least = nullptr;
  int least_deg = -1;
  std::vector<Poly> polys;
  for (const RRElement& f : t.comps) {
    if (f.is_zero()) continue;
    Poly p = xy_parts(f).first;
    const int d = *p.degree();
    polys.push_back(std::move(p));
    if (least == nullptr || d < least_deg) {
      least = &f;
      least_deg = d;
    }
  }
  if (least == nullptr) return false;  // zero ideal
  if (least_deg == 0) return true;     // unit component

  Poly pivot(t.space->coeff_field());
  for (const Poly& p : polys)
    if (*p.degree() == least_deg) {
      pivot = p;
      break;
    }
  for (const Poly& p : sieve.distinct_irreducible_factors(pivot)) {
    bool common = true;
    for (const Poly& f : polys)
      if (!divides(p, f)) {
        common = false;
        break;
      }
    if (common) return false;
  }
  return true;
}

// ------------------------------------------------------------------ reports

std::string report_csv_header() {
  return "space,q,n,m,mode,total,coprime,empirical,theoretical,abs_err,"
         "ci_low,ci_high,seed";
}

namespace {

std::string double_to_string(double v) {
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
  if (ec != std::errc())
    throw std::logic_error("double rendering failed");
  return std::string(buf, ptr);
}

double double_from_string(const std::string& s) {
  double v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size())
    throw std::invalid_argument("bad double field: " + s);
  return v;
}

Rational rational_from_string(const std::string& s) {
  Rational r;
  if (mpq_set_str(r.get_mpq_t(), s.c_str(), 10) != 0)
    throw std::invalid_argument("bad rational field: " + s);
  r.canonicalize();
  return r;
}

}  // namespace

std::string report_csv_row(const ExperimentReport& r) {
  std::ostringstream os;
  os << r.space << ',' << r.q.get_str() << ',' << r.n << ',' << r.m << ','
     << r.mode << ',' << r.total << ',' << r.coprime << ','
     << r.empirical.get_str() << ',' << r.theoretical.get_str() << ','
     << r.abs_err.get_str() << ','
     << (r.ci_low ? double_to_string(*r.ci_low) : "") << ','
     << (r.ci_high ? double_to_string(*r.ci_high) : "") << ',' << r.seed;
  return os.str();
}

ExperimentReport report_from_csv_row(const std::string& line) {
  std::vector<std::string> parts;
  std::string cur;
  for (char c : line) {
    if (c == ',') {
      parts.push_back(cur);
      cur.clear();
    } else {
      cur.push_back(c);
    }
  }
  parts.push_back(cur);
  if (parts.size() != 13)
    throw std::invalid_argument("csv row: expected 13 fields");
  ExperimentReport r;
  r.space = parts[0];
  r.q = mpz_class(parts[1]);
  r.n = std::stoi(parts[2]);
  r.m = std::stoi(parts[3]);
  r.mode = parts[4];
  r.total = std::stoull(parts[5]);
  r.coprime = std::stoull(parts[6]);
  r.empirical = rational_from_string(parts[7]);
  r.theoretical = rational_from_string(parts[8]);
  r.abs_err = rational_from_string(parts[9]);
  if (!parts[10].empty()) r.ci_low = double_from_string(parts[10]);
  if (!parts[11].empty()) r.ci_high = double_from_string(parts[11]);
  r.seed = std::stoull(parts[12]);
  return r;
}

std::string report_json(const ExperimentReport& r) {
  nlohmann::json j;
  j["space"] = r.space;
  j["q"] = r.q.get_str();
  j["n"] = r.n;
  j["m"] = r.m;
  j["mode"] = r.mode;
  j["total"] = r.total;
  j["coprime"] = r.coprime;
  j["empirical"] = r.empirical.get_str();
  j["theoretical"] = r.theoretical.get_str();
  j["abs_err"] = r.abs_err.get_str();
  j["ci_low"] = r.ci_low ? nlohmann::json(*r.ci_low) : nlohmann::json(nullptr);
  j["ci_high"] = r.ci_high ? nlohmann::json(*r.ci_high) : nlohmann::json(nullptr);
  j["seed"] = r.seed;
  j["wall_ms"] = r.wall_ms;
  return j.dump();
}

double z_for_level(int level_percent) {
  switch (level_percent) {
    case 90: return 1.6448536269514722;
    case 95: return 1.9599639845400545;
    case 99: return 2.5758293035489004;
    default:
      throw std::invalid_argument("confidence level: one of 90, 95, 99");
  }
}

std::pair<double, double> wilson_interval(std::uint64_t k, std::uint64_t n,
                                          double z) {
  if (n == 0) throw std::invalid_argument("wilson interval: n >= 1");
  const double nn = static_cast<double>(n);
  const double p = static_cast<double>(k) / nn;
  const double z2 = z * z;
  const double denom = 1.0 + z2 / nn;
  const double center = (p + z2 / (2.0 * nn)) / denom;
  const double half =
      z * std::sqrt(p * (1.0 - p) / nn + z2 / (4.0 * nn * nn)) / denom;
  return {std::max(0.0, center - half), std::min(1.0, center + half)};
}

// -------------------------------------------------------------- experiments

namespace {

Rational theoretical_density(const RRSpace& space, int m, const Guards& guards) {
  if (space.is_rational())
    return density_rational(space.coeff_field().cardinality(), m);
  return density_elliptic(space.curve(), m, guards);
}

// one coprimality decision, dispatched by space kind
bool tuple_coprime(const RRSpace& space, std::vector<RRElement> comps,
                   PlaceOracleContext* ctx) {
  TupleSample t(space, std::move(comps));
  return space.is_rational() ? coprime_gcd_oracle(t)
                             : coprime_place_oracle(t, *ctx);
}

ExperimentReport base_report(const RRSpace& space, int m, const std::string& mode,
                             const Guards& guards) {
  ExperimentReport r;
  r.space = space.is_rational() ? "rational" : "elliptic";
  r.q = space.coeff_field().cardinality();
  r.n = space.bound();
  r.m = m;
  r.mode = mode;
  r.theoretical = theoretical_density(space, m, guards);
  return r;
}

void finish_report(ExperimentReport& r) {
  r.empirical = Rational(r.coprime, r.total);
  r.empirical.canonicalize();
  r.abs_err = abs(r.empirical - r.theoretical);
}

}  // namespace

ExperimentReport exhaustive_density(const RRSpacePtr& space, int m, int workers,
                                    const Guards& guards) {
  if (m < 2) throw std::invalid_argument("exhaustive: m >= 2 required");
  if (workers < 1) throw std::invalid_argument("exhaustive: workers >= 1");
  const auto t0 = Clock::now();

  mpz_class total_z;
  mpz_pow_ui(total_z.get_mpz_t(), space->size().get_mpz_t(),
             static_cast<unsigned long>(m));
  if (total_z > guards.tuple_enum_limit)
    throw GuardError("exhaustive: q^(m*dim) exceeds the enumeration guard");
  const std::uint64_t total = total_z.get_ui();
  const std::uint64_t q = space->coeff_field().cardinality().get_ui();
  const int dim = space->dimension();

  auto count_range = [&](std::uint64_t lo, std::uint64_t hi) -> std::uint64_t {
    std::optional<PlaceOracleContext> ctx;
    if (!space->is_rational()) ctx.emplace(space->curve());
    PlaceOracleContext* ctxp = ctx ? &*ctx : nullptr;
    // odometer over m*dim base-q digits, component 0 coefficient 0 fastest
    std::vector<std::uint64_t> digits(static_cast<size_t>(m) * dim, 0);
    std::uint64_t rest = lo;
    for (auto& d : digits) {
      d = rest % q;
      rest /= q;
    }
    std::uint64_t count = 0;
    for (std::uint64_t idx = lo; idx < hi; ++idx) {
      std::vector<RRElement> comps;
      comps.reserve(static_cast<size_t>(m));
      for (int j = 0; j < m; ++j) {
        std::vector<FieldElem> coeffs;
        coeffs.reserve(static_cast<size_t>(dim));
        for (int i = 0; i < dim; ++i)
          coeffs.push_back(space->coeff_field().element_at(
              digits[static_cast<size_t>(j * dim + i)]));
        comps.emplace_back(*space, std::move(coeffs));
      }
      if (tuple_coprime(*space, std::move(comps), ctxp)) ++count;
      for (auto& d : digits) {  // increment
        if (++d < q) break;
        d = 0;
      }
    }
    return count;
  };

  ExperimentReport r = base_report(*space, m, "exhaustive", guards);
  r.total = total;
  if (workers == 1 || total < 1024) {
    r.coprime = count_range(0, total);
  } else {
    std::vector<std::uint64_t> counts(static_cast<size_t>(workers), 0);
    std::vector<std::thread> pool;
    for (int w = 0; w < workers; ++w) {
      const std::uint64_t lo = total / static_cast<unsigned>(workers) * w +
                               std::min<std::uint64_t>(w, total % workers);
      const std::uint64_t hi = total / static_cast<unsigned>(workers) * (w + 1) +
                               std::min<std::uint64_t>(w + 1, total % workers);
      pool.emplace_back([&, w, lo, hi] { counts[static_cast<size_t>(w)] = count_range(lo, hi); });
    }
    for (auto& th : pool) th.join();
    for (std::uint64_t c : counts) r.coprime += c;
  }
  finish_report(r);
  r.wall_ms = ms_since(t0);
  return r;
}

namespace {
constexpr std::uint64_t kMcBlock = 4096;
}

ExperimentReport monte_carlo_density(const RRSpacePtr& space, int m,
                                     std::uint64_t trials, std::uint64_t seed,
                                     int workers, int ci_level,
                                     const Guards& guards) {
  if (m < 2) throw std::invalid_argument("monte carlo: m >= 2 required");
  if (trials < 1) throw std::invalid_argument("monte carlo: trials >= 1");
  if (workers < 1) throw std::invalid_argument("monte carlo: workers >= 1");
  const double z = z_for_level(ci_level);
  const auto t0 = Clock::now();

  const std::uint64_t nblocks = (trials + kMcBlock - 1) / kMcBlock;
  std::atomic<std::uint64_t> next_block{0};
  std::atomic<std::uint64_t> hits{0};

  auto run_blocks = [&] {
    std::optional<PlaceOracleContext> ctx;
    if (!space->is_rational()) ctx.emplace(space->curve());
    PlaceOracleContext* ctxp = ctx ? &*ctx : nullptr;
    std::uint64_t local = 0;
    for (std::uint64_t b = next_block.fetch_add(1); b < nblocks;
         b = next_block.fetch_add(1)) {
      Xoshiro256 rng(derive_stream_seed(seed, b));
      const std::uint64_t in_block = std::min(kMcBlock, trials - b * kMcBlock);
      for (std::uint64_t i = 0; i < in_block; ++i) {
        std::vector<RRElement> comps;
        comps.reserve(static_cast<size_t>(m));
        for (int j = 0; j < m; ++j) comps.push_back(sample_uniform(*space, rng));
        if (tuple_coprime(*space, std::move(comps), ctxp)) ++local;
      }
    }
    hits.fetch_add(local);
  };

  if (workers == 1) {
    run_blocks();
  } else {
    std::vector<std::thread> pool;
    for (int w = 0; w < workers; ++w) pool.emplace_back(run_blocks);
    for (auto& th : pool) th.join();
  }

  ExperimentReport r = base_report(*space, m, "mc", guards);
  r.total = trials;
  r.coprime = hits.load();
  r.seed = seed;
  finish_report(r);
  auto [lo, hi] = wilson_interval(r.coprime, r.total, z);
  r.ci_low = lo;
  r.ci_high = hi;
  r.wall_ms = ms_since(t0);
  return r;
}

std::vector<ExperimentReport> convergence_scan(
    const std::function<RRSpacePtr(int)>& space_for_n, int n_min, int n_max,
    int m, const std::string& mode, std::uint64_t trials, std::uint64_t seed,
    int workers, const Guards& guards) {
  if (n_min > n_max) return {};
  std::vector<ExperimentReport> out;
  for (int n = n_min; n <= n_max; ++n) {
    RRSpacePtr space = space_for_n(n);
    if (mode == "exhaustive")
      out.push_back(exhaustive_density(space, m, workers, guards));
    else if (mode == "mc")
      out.push_back(monte_carlo_density(space, m, trials, seed, workers, 95, guards));
    else
      throw std::invalid_argument("scan: mode must be exhaustive or mc");
  }
  return out;
}

CrossOracleResult cross_oracle_check(const FieldPtr& field, int n, int m,
                                     std::uint64_t trials, std::uint64_t seed) {
  if (m < 2) throw std::invalid_argument("cross oracle: m >= 2 required");
  RRSpacePtr space = RRSpace::rational(field, n);
  IrreducibleSieve sieve(field, std::max(1, n));
  Xoshiro256 rng(seed);
  CrossOracleResult res;
  for (std::uint64_t i = 0; i < trials; ++i) {
    std::vector<RRElement> comps;
    for (int j = 0; j < m; ++j) comps.push_back(sample_uniform(*space, rng));
    TupleSample t(*space, comps);
    const bool via_gcd = coprime_gcd_oracle(t);
    const bool via_irred = coprime_irreducible_oracle(t, sieve);
    ++res.checked;
    if (via_gcd != via_irred) {
      res.agree = false;
      std::ostringstream os;
      os << "tuple #" << i << ":";
      for (const RRElement& f : comps) os << " [" << xy_parts(f).first.to_string() << "]";
      os << " gcd=" << via_gcd << " irreducible=" << via_irred;
      res.disagreement = os.str();
      return res;
    }
  }
  return res;
}

}  // namespace holodense
