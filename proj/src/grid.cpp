/*
 * Copyright 2026 The linespace authors
 *
 * This software is licensed under the terms of the Apache Licence Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */
#include "grid.hpp"

#include <cmath>
#include <numbers>

#include "sampler.hpp"

namespace linespace {

std::optional<GridKind> parse_grid_kind(std::string_view name) {
  if (name == "disk") return GridKind::kDisk;
  if (name == "annulus") return GridKind::kAnnulus;
  if (name == "two-chart") return GridKind::kTwoChart;
  return std::nullopt;
}

std::string_view grid_kind_name(GridKind kind) {
  switch (kind) {
    case GridKind::kDisk:
      return "disk";
    case GridKind::kAnnulus:
      return "annulus";
    case GridKind::kTwoChart:
      return "two-chart";
  }
  return "unknown";
}

void GridSpec::validate() const {
  if (radial_count < 1 || angular_count < 1) {
    throw Error(ErrorCode::kParameter, "grid counts must be at least 1");
  }
  if (!(max_modulus > 0.0) || !std::isfinite(max_modulus)) {
    throw Error(ErrorCode::kParameter, "grid max modulus must be positive");
  }
  if (kind == GridKind::kAnnulus && !(min_modulus >= 0.0 && min_modulus < max_modulus)) {
    throw Error(ErrorCode::kParameter, "annulus needs 0 <= min modulus < max modulus");
  }
  if (!(jitter >= 0.0 && jitter <= 1.0)) {
    throw Error(ErrorCode::kParameter, "grid jitter must lie in [0, 1]");
  }
}

std::vector<ChartPoint> build_grid(const GridSpec& spec) {
  spec.validate();
  Sampler rng(spec.seed);
  const double spacing = 2.0 * std::numbers::pi / spec.angular_count;

  std::vector<double> radii;
  if (spec.kind == GridKind::kAnnulus) {
    const double span = spec.max_modulus - spec.min_modulus;
    for (int k = 0; k < spec.radial_count; ++k) {
      const double f = spec.radial_count == 1 ? 0.0 : double(k) / (spec.radial_count - 1);
      radii.push_back(spec.min_modulus + span * f);
    }
  } else {
    for (int k = 1; k <= spec.radial_count; ++k) {
      radii.push_back(spec.max_modulus * k / spec.radial_count);
    }
  }

  std::vector<ChartPoint> out;
  auto add_rings = [&](Chart chart) {
    for (double rho : radii) {
      for (int j = 0; j < spec.angular_count; ++j) {
        double theta = spacing * j;
        if (spec.jitter > 0.0) theta += spec.jitter * spacing * (rng.unit() - 0.5);
        out.push_back({chart, std::polar(rho, theta)});
      }
    }
  };

  if (spec.kind == GridKind::kTwoChart) {
    for (Chart chart : {Chart::kStandard, Chart::kInverted}) {
      out.push_back({chart, Complex(0.0, 0.0)});
      add_rings(chart);
    }
  } else {
    add_rings(Chart::kStandard);
  }
  return out;
}

std::vector<SampleRow> sample_section(const LineSection& section,
                                      const std::vector<ChartPoint>& grid) {
  std::vector<SampleRow> rows(grid.size());
  for (std::size_t i = 0; i < grid.size(); ++i) {
    SampleRow& row = rows[i];
    row.xi = grid[i];
    try {
      const LinePoint lp = section.line_at(grid[i]);
      row.eta = lp.line.eta;
      row.r = lp.r;
      row.point = line_point(lp);
    } catch (const Error& e) {
      if (e.code() != ErrorCode::kBranchPoint) throw;
      row.skipped = true;
    }
  }
  return rows;
}

}  // namespace linespace
