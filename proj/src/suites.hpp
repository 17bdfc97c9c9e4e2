/*
 * Copyright 2026 The linespace authors
 *
 * This software is licensed under the terms of the Apache Licence Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */
#pragma once

// Seeded property suites over the coordinate maps and the section families.
// Each check reports the largest residual it saw; it passes iff that
// residual is <= its tolerance (a NaN residual never passes).

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace linespace {

struct CheckResult {
  std::string suite;
  std::string name;
  double max_residual = 0.0;
  double tolerance = 0.0;
  bool passed = false;
  double wall_seconds = 0.0;
  std::string detail;  ///< error message when the check threw
};

struct RunReport {
  std::string suite;
  std::uint64_t seed = 0;
  std::vector<CheckResult> checks;

  bool passed() const;
};

/// core, spheres, ellipsoid, torus, all.
bool is_known_suite(std::string_view suite);

/// Runs `suite` with the given seed. A tolerance override replaces every
/// check's default tolerance. Throws kInvalidArgument for unknown suites.
RunReport run_suite(std::string_view suite, std::uint64_t seed,
                    std::optional<double> tolerance_override = std::nullopt);

std::string report_to_json(const RunReport& report);

}  // namespace linespace
