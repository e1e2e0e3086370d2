// Copyright 2026 the holodense authors
//
// Licensed under the Apache License, Version 2.0 (see
// LICENSE or https://www.apache.org/licenses/LICENSE-2.0).

#ifndef HOLODENSE_COMMON_HPP
#define HOLODENSE_COMMON_HPP

#include <cstdint>
#include <stdexcept>
#include <string>

namespace holodense {

/// Thrown when an enumeration would exceed the configured size guard.
/// The CLI maps this to exit code 2; every other error maps to exit code 1.
class GuardError : public std::runtime_error {
 public:
  explicit GuardError(const std::string& what) : std::runtime_error(what) {}
};

/// Size guards for the enumeration kernels (full field scans, space
/// enumeration, exhaustive tuple counts).  The environment variable
/// HOLODENSE_GUARD, when set to a positive integer, overrides every limit.
struct Guards {
  std::uint64_t point_scan_limit = 10'000'000;   // q^d in full-field scans
  std::uint64_t space_enum_limit = 10'000'000;   // q^l in space enumeration
  std::uint64_t tuple_enum_limit = 10'000'000;   // q^(m*l) in exhaustive counts

  static Guards from_env();

  /// Process-wide guards (env applied once).
  static const Guards& active();
};

}  // namespace holodense

#endif  // HOLODENSE_COMMON_HPP
