/*
 * Copyright 2026 The linespace authors
 *
 * This software is licensed under the terms of the Apache Licence Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */
#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "congruence.hpp"

namespace linespace {

enum class GridKind { kDisk, kAnnulus, kTwoChart };

std::optional<GridKind> parse_grid_kind(std::string_view name);
std::string_view grid_kind_name(GridKind kind);

/// Polar sample grid on the Riemann sphere.
///
///  - disk: radial_count rings at |xi| = max_modulus * k / radial_count,
///    k = 1..radial_count, each with angular_count equally spaced phases.
///  - annulus: radial_count rings evenly spaced on
///    [min_modulus, max_modulus], both ends included.
///  - two-chart: in each chart, the pole followed by the disk rings. With
///    max_modulus >= 1 the two charts together cover the sphere.
///
/// A non-zero jitter perturbs each phase by up to jitter * (half the angular
/// spacing), drawn from `seed`.
struct GridSpec {
  GridKind kind = GridKind::kDisk;
  int radial_count = 4;
  int angular_count = 4;
  double max_modulus = 1.0;
  double min_modulus = 0.5;
  double jitter = 0.0;
  std::uint64_t seed = 0;

  /// Throws kParameter on counts < 1, non-positive max_modulus, or an empty
  /// annulus.
  void validate() const;
};

std::vector<ChartPoint> build_grid(const GridSpec& spec);

struct SampleRow {
  ChartPoint xi;
  bool skipped = false;
  Complex eta{0.0, 0.0};
  double r = 0.0;
  EuclideanPoint point;
};

/// Evaluates the section at every grid sample, in grid order. Samples at a
/// branch point are marked skipped; any other failure propagates.
std::vector<SampleRow> sample_section(const LineSection& section,
                                      const std::vector<ChartPoint>& grid);

}  // namespace linespace
