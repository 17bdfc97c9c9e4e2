/*
 * Copyright 2026 The linespace authors
 *
 * This software is licensed under the terms of the Apache Licence Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */
#pragma once

// Surfaces described by their normal lines. A section assigns to every
// direction xi the normal line of the surface with that direction, plus the
// parameter r at which the line meets the surface; composing with
// line_point recovers the surface.

#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "core.hpp"

namespace linespace {

struct SectionValue {
  Complex eta{0.0, 0.0};
  double r = 0.0;
};

enum class SectionDomain {
  kFullSphere,
  kSphereMinusPoles,
};

enum class Branch { kPlus = 1, kMinus = -1 };

inline double sign_of(Branch b) { return b == Branch::kPlus ? 1.0 : -1.0; }

/// Squared semi-axes: the surface is x^2/a1 + y^2/a2 + t^2/a3 = 1.
struct EllipsoidParams {
  double a1 = 1.0;
  double a2 = 1.0;
  double a3 = 1.0;

  /// Throws kParameter unless all three are finite and positive.
  void validate() const;
};

/// Torus of revolution about the t axis: `a` is the radius of the centre
/// circle, `b` the radius of the tube. Embedded (ring torus) when a > b;
/// otherwise it is a spindle torus and still a valid section.
struct TorusParams {
  double a = 3.0;
  double b = 1.0;
  Branch branch = Branch::kPlus;

  void validate() const;
  bool embedded() const { return a > b; }
};

/// Torus evaluation rejects chart coordinates closer than this to a pole.
inline constexpr double kBranchPointRadius = 1e-12;

class LineSection {
 public:
  using ChartEval = std::function<SectionValue(Complex)>;

  LineSection(std::string name, SectionDomain domain, std::optional<Branch> branch,
              ChartEval standard, ChartEval inverted);

  const std::string& name() const { return name_; }
  SectionDomain domain() const { return domain_; }
  std::optional<Branch> branch() const { return branch_; }

  /// Fiber value in the chart of `xi` together with r.
  SectionValue eval(const ChartPoint& xi) const;
  SectionValue eval(const ExtComplex& xi) const { return eval(ChartPoint::from(xi)); }

  LinePoint line_at(const ChartPoint& xi) const;

  /// The surface point with normal direction xi.
  EuclideanPoint surface_point(const ChartPoint& xi) const;

 private:
  std::string name_;
  SectionDomain domain_;
  std::optional<Branch> branch_;
  ChartEval standard_;
  ChartEval inverted_;
};

/// Lines through p, offset by `radius` along each line: a round sphere of
/// that radius about p (the point p itself for radius 0).
LineSection point_sphere_section(const EuclideanPoint& p, double radius = 0.0);

LineSection ellipsoid_section(const EllipsoidParams& params);

/// One branch of the torus; undefined at the poles xi = 0 and xi = infinity.
LineSection torus_section(const TorusParams& params);

struct Reconstruction {
  std::optional<EuclideanPoint> point;
  std::optional<ErrorCode> error;
  std::string message;
};

/// Pointwise surface points. Failures are reported per sample.
std::vector<Reconstruction> reconstruct(const LineSection& section,
                                        std::span<const ChartPoint> samples);
std::vector<Reconstruction> reconstruct(const LineSection& section,
                                        std::span<const ExtComplex> samples);

/// x^2/a1 + y^2/a2 + t^2/a3 - 1.
double implicit_residual_ellipsoid(const EllipsoidParams& params, const EuclideanPoint& p);

/// With rho = |z|, returns whichever of (rho -/+ a)^2 + t^2 - b^2 is smaller
/// in magnitude. The second sheet is only reachable on a spindle torus; for
/// a > b near the surface this is (rho - a)^2 + t^2 - b^2.
double implicit_residual_torus(const TorusParams& params, const EuclideanPoint& p);

/// Maximum |<n, T/|T|>| over the two central-difference tangents of the
/// reconstructed surface at xi, n the direction of xi. Throws kDegenerate if
/// a tangent is shorter than h^2.
double verify_normality(const LineSection& section, const ChartPoint& xi, double h = 1e-5);
double verify_normality(const LineSection& section, const ExtComplex& xi, double h = 1e-5);

}  // namespace linespace
