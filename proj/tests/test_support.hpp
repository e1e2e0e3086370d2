// Copyright 2026 the holodense authors
//
// Licensed under the Apache License, Version 2.0 (see
// LICENSE or https://www.apache.org/licenses/LICENSE-2.0).

// Shared helpers for the test suites: small independent oracles that avoid
// the library's own fast paths (trial division instead of Rabin,
// full pair scans instead of character sums, etc.).

#ifndef HOLODENSE_TEST_SUPPORT_HPP
#define HOLODENSE_TEST_SUPPORT_HPP

#include <cstdint>
#include <vector>

#include "holodense/field.hpp"
#include "holodense/poly.hpp"

namespace holodense::testing {

/// All monic polynomials of degree exactly d, canonical order.
inline std::vector<Poly> monic_polys(const Field& F, int d) {
  const std::uint64_t q = F.cardinality().get_ui();
  std::uint64_t n = 1;
  for (int i = 0; i < d; ++i) n *= q;
  std::vector<Poly> out;
  out.reserve(n);
  std::vector<FieldElem> coeffs(static_cast<size_t>(d + 1), F.zero());
  coeffs[static_cast<size_t>(d)] = F.one();
  for (std::uint64_t idx = 0; idx < n; ++idx) {
    std::uint64_t rest = idx;
    for (int j = d - 1; j >= 0; --j) {
      coeffs[static_cast<size_t>(j)] = F.element_at(rest % q);
      rest /= q;
    }
    out.emplace_back(F, coeffs);
  }
  return out;
}

/// Irreducibility by trial division against every monic of degree <= deg/2.
/// Deliberately independent of the Rabin test used by the library.
inline bool trial_division_irreducible(const Poly& f) {
  const int d = *f.degree();
  if (d == 1) return true;
  for (int e = 1; 2 * e <= d; ++e)
    for (const Poly& g : monic_polys(f.field(), e))
      if (divides(g, f)) return false;
  return true;
}

}  // namespace holodense::testing

#endif  // HOLODENSE_TEST_SUPPORT_HPP
