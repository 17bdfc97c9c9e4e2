/*
 * Copyright 2026 The linespace authors
 *
 * This software is licensed under the terms of the Apache Licence Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */
#include "suites.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <functional>
#include <limits>

#include <json.hpp>

#include "congruence.hpp"
#include "sampler.hpp"

namespace linespace {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

struct Check {
  const char* suite;
  const char* name;
  double tolerance;
  std::function<double(Sampler&)> run;
};

double max_component_error(const EuclideanPoint& a, const EuclideanPoint& b) {
  return std::max({std::abs(a.x() - b.x()), std::abs(a.y() - b.y()), std::abs(a.t - b.t)});
}

double max_component_error(const Vector3& a, const Vector3& b) {
  return std::max({std::abs(a.vz.real() - b.vz.real()), std::abs(a.vz.imag() - b.vz.imag()),
                   std::abs(a.vt - b.vt)});
}

Chart random_chart(Sampler& rng) { return rng.coin() ? Chart::kStandard : Chart::kInverted; }

// Chart coordinate with modulus log-uniform in [lo, hi].
ChartPoint random_chart_point(Sampler& rng, double lo, double hi) {
  const Chart chart = random_chart(rng);
  return {chart, rng.log_annulus(lo, hi)};
}

OrientedLine random_line(Sampler& rng, double fiber_radius) {
  const ChartPoint cp = random_chart_point(rng, 1e-4, 1e3);
  return {cp.chart, cp.coord, rng.in_disk(fiber_radius)};
}

EuclideanPoint random_point(Sampler& rng, double half_width) {
  const double x = rng.uniform(-half_width, half_width);
  const double y = rng.uniform(-half_width, half_width);
  return EuclideanPoint::from_xyz(x, y, rng.uniform(-half_width, half_width));
}

EllipsoidParams random_ellipsoid(Sampler& rng) {
  EllipsoidParams p;
  p.a1 = rng.uniform(0.1, 100.0);
  p.a2 = rng.uniform(0.1, 100.0);
  p.a3 = rng.uniform(0.1, 100.0);
  return p;
}

TorusParams random_ring_torus(Sampler& rng, Branch branch) {
  TorusParams p;
  p.a = rng.uniform(1.0, 5.0);
  p.b = p.a * rng.uniform(0.1, 0.9);
  p.branch = branch;
  return p;
}

// -- core --------------------------------------------------------------------

double unit_direction(Sampler& rng) {
  double worst = std::abs(inner(dir_from_xi(ExtComplex::infinity()),
                                dir_from_xi(ExtComplex::infinity())) - 1.0);
  for (int i = 0; i < 10000; ++i) {
    const Vector3 d = dir_from_xi(ExtComplex(rng.log_annulus(1e-6, 1e6)));
    worst = std::max(worst, std::abs(inner(d, d) - 1.0));
  }
  return worst;
}

double projection_round_trip(Sampler& rng) {
  if (!xi_from_dir(dir_from_xi(ExtComplex::infinity())).is_infinite()) return kInf;
  double worst = 0.0;
  for (int i = 0; i < 10000; ++i) {
    const Complex xi = rng.log_annulus(1e-6, 1e6);
    const ExtComplex back = xi_from_dir(dir_from_xi(ExtComplex(xi)));
    if (back.is_infinite()) return kInf;
    worst = std::max(worst, std::abs(back.value() - xi) / std::max(1.0, std::abs(xi)));
  }
  // Near-south directions: large |xi| that maps back onto the same vector.
  for (int i = 0; i < 1000; ++i) {
    const double eps = rng.log_uniform(1e-8, 1e-2);
    const Vector3 v{std::polar(eps, rng.angle()), -std::sqrt(1.0 - eps * eps)};
    const ExtComplex xi = xi_from_dir(v);
    if (xi.is_infinite()) return kInf;
    worst = std::max(worst, max_component_error(dir_from_xi(xi), v));
  }
  return worst;
}

double line_parametrization(Sampler& rng) {
  double worst = 0.0;
  for (int i = 0; i < 10000; ++i) {
    const OrientedLine line = random_line(rng, 100.0);
    const double r1 = rng.uniform(-100.0, 100.0);
    const double r2 = rng.uniform(-100.0, 100.0);
    const Vector3 diff = line_point({line, r1}) - line_point({line, r2});
    const Vector3 expect = (r1 - r2) * dir_from_xi(ChartPoint{line.chart, line.xi});
    worst = std::max(worst, max_component_error(diff, expect));
  }
  return worst;
}

double orthogonality(Sampler& rng) {
  double worst = 0.0;
  for (int i = 0; i < 10000; ++i) {
    const OrientedLine line = random_line(rng, 100.0);
    worst = std::max(worst, std::abs(inner(perp_displacement(line),
                                           dir_from_xi(ChartPoint{line.chart, line.xi}))));
  }
  return worst;
}

double inverse_correctness(Sampler& rng) {
  double worst = 0.0;
  for (int i = 0; i < 10000; ++i) {
    const EuclideanPoint p = random_point(rng, 100.0);
    const ChartPoint xi = random_chart_point(rng, 1e-4, 1e3);
    worst = std::max(worst, max_component_error(line_point(lines_through_point(p, xi)), p));
  }
  return worst;
}

double minimal_distance_identity(Sampler& rng) {
  double worst = 0.0;
  for (int i = 0; i < 10000; ++i) {
    const EuclideanPoint p = random_point(rng, 100.0);
    const LinePoint lp = lines_through_point(p, random_chart_point(rng, 1e-4, 1e3));
    const double foot = distance_to_origin(foot_point(lp.line));
    const double dist = distance_to_origin(p);
    worst = std::max(worst, std::abs(lp.r * lp.r + foot * foot - dist * dist));
  }
  return worst;
}

// Largest amount by which a point of the line is closer to the origin than
// the foot. Infinite if a point far from r = 0 is as close as the foot.
double foot_minimality(Sampler& rng) {
  double worst = 0.0;
  for (int i = 0; i < 100; ++i) {
    const OrientedLine line = random_line(rng, 10.0);
    const double foot = distance_to_origin(foot_point(line));
    for (int k = 0; k < 100; ++k) {
      const double r = k == 0 ? 0.0 : rng.uniform(-10.0, 10.0);
      const double dist = distance_to_origin(line_point({line, r}));
      worst = std::max(worst, foot - dist);
      if (std::abs(r) > 1e-3 && dist - foot <= 1e-12) return kInf;
    }
  }
  return worst;
}

double chart_coherence(Sampler& rng) {
  double worst = 0.0;
  for (int i = 0; i < 10000; ++i) {
    const OrientedLine line{Chart::kStandard, rng.log_annulus(1e-3, 1e3), rng.in_disk(100.0)};
    const OrientedLine other = chart_transition(line);
    worst = std::max(worst, max_component_error(foot_point(line), foot_point(other)));
    const OrientedLine again = chart_transition(other);
    worst = std::max(worst, std::abs(again.xi - line.xi) / std::abs(line.xi));
    worst = std::max(worst, std::abs(again.eta - line.eta) / std::max(1.0, std::abs(line.eta)));
  }
  return worst;
}

// -- spheres -----------------------------------------------------------------

double point_sphere_exactness(Sampler& rng) {
  double worst = 0.0;
  for (int i = 0; i < 100; ++i) {
    const EuclideanPoint p = random_point(rng, 10.0);
    const ChartPoint xi = random_chart_point(rng, 1e-4, 10.0);
    worst = std::max(worst, max_component_error(point_sphere_section(p).surface_point(xi), p));
    const double radius = rng.uniform(0.1, 10.0);
    const double d = norm(point_sphere_section(p, radius).surface_point(xi) - p);
    worst = std::max(worst, std::abs(d - radius));
  }
  return worst;
}

double sphere_normality(Sampler& rng) {
  double worst = 0.0;
  for (int i = 0; i < 50; ++i) {
    const EuclideanPoint p = random_point(rng, 10.0);
    const LineSection s = point_sphere_section(p, rng.uniform(0.5, 5.0));
    worst = std::max(worst, verify_normality(s, random_chart_point(rng, 1e-3, 1.0), 1e-5));
  }
  return worst;
}

// -- ellipsoid ---------------------------------------------------------------

double ellipsoid_on_surface(Sampler& rng) {
  double worst = 0.0;
  for (int i = 0; i < 20; ++i) {
    const EllipsoidParams params = random_ellipsoid(rng);
    const LineSection s = ellipsoid_section(params);
    for (int k = 0; k < 500; ++k) {
      const ChartPoint xi =
          k < 2 ? ChartPoint{k == 0 ? Chart::kStandard : Chart::kInverted, Complex(0.0, 0.0)}
                : random_chart_point(rng, 1e-3, 50.0);
      worst = std::max(worst, std::abs(implicit_residual_ellipsoid(params, s.surface_point(xi))));
    }
  }
  return worst;
}

double ellipsoid_sphere_degeneration(Sampler& rng) {
  double worst = 0.0;
  for (int i = 0; i < 20; ++i) {
    const double a = rng.uniform(0.1, 100.0);
    const LineSection ell = ellipsoid_section({a, a, a});
    const LineSection sph = point_sphere_section({}, std::sqrt(a));
    for (int k = 0; k < 100; ++k) {
      const ChartPoint xi = random_chart_point(rng, 1e-3, 50.0);
      const SectionValue v = ell.eval(xi);
      worst = std::max({worst, std::abs(v.eta), std::abs(v.r - std::sqrt(a)),
                        max_component_error(ell.surface_point(xi), sph.surface_point(xi))});
    }
  }
  return worst;
}

// Evaluation at the south pole (inverted chart, w = 0): finite, on the
// surface, continuous with nearby values, and consistent with the standard
// chart at large |xi|.
double ellipsoid_global_section(Sampler& rng) {
  double worst = 0.0;
  for (int i = 0; i < 20; ++i) {
    const EllipsoidParams params = random_ellipsoid(rng);
    const LineSection s = ellipsoid_section(params);
    const ChartPoint pole{Chart::kInverted, Complex(0.0, 0.0)};
    const SectionValue at_pole = s.eval(pole);
    const EuclideanPoint x = s.surface_point(pole);
    if (!std::isfinite(at_pole.r) || !std::isfinite(std::abs(at_pole.eta)) ||
        !std::isfinite(x.x()) || !std::isfinite(x.y()) || !std::isfinite(x.t)) {
      return kInf;
    }
    worst = std::max(worst, std::abs(implicit_residual_ellipsoid(params, x)));
    worst = std::max(worst, max_component_error(x, EuclideanPoint{{}, -std::sqrt(params.a3)}));

    const double scale = std::max({params.a1, params.a2, params.a3});
    const ChartPoint near{Chart::kInverted, rng.polar(1e-9)};
    const SectionValue v = s.eval(near);
    worst = std::max(worst, (std::abs(v.eta - at_pole.eta) + std::abs(v.r - at_pole.r)) / scale);

    const Complex w = rng.polar(1e-3);
    const EuclideanPoint via_standard = s.surface_point({Chart::kStandard, 1.0 / w});
    const EuclideanPoint via_inverted = s.surface_point({Chart::kInverted, w});
    worst = std::max(worst, max_component_error(via_standard, via_inverted));
  }
  return worst;
}

double ellipsoid_normality(Sampler& rng) {
  double worst = 0.0;
  for (int i = 0; i < 50; ++i) {
    const LineSection s = ellipsoid_section(random_ellipsoid(rng));
    worst = std::max(worst, verify_normality(s, random_chart_point(rng, 1e-3, 1.0), 1e-5));
  }
  return worst;
}

// -- torus -------------------------------------------------------------------

double torus_on_surface(Sampler& rng) {
  double worst = 0.0;
  for (Branch branch : {Branch::kPlus, Branch::kMinus}) {
    for (int k = 0; k < 500; ++k) {
      // Ring and spindle tori alike; the residual covers both sheets.
      TorusParams params;
      params.a = rng.uniform(0.5, 5.0);
      params.b = params.a * rng.uniform(0.1, 2.0);
      params.branch = branch;
      const ChartPoint xi{random_chart(rng), rng.log_annulus(0.05, 20.0)};
      const double res = implicit_residual_torus(params, torus_section(params).surface_point(xi));
      worst = std::max(worst, std::abs(res) / (params.a * params.a + params.b * params.b));
    }
  }
  return worst;
}

double torus_equators(Sampler& rng) {
  double worst = 0.0;
  for (int i = 0; i < 200; ++i) {
    for (Branch branch : {Branch::kPlus, Branch::kMinus}) {
      TorusParams params = random_ring_torus(rng, branch);
      const SectionValue v = torus_section(params).eval(ChartPoint{random_chart(rng), rng.polar(1.0)});
      worst = std::max({worst, std::abs(v.eta), std::abs(v.r - (params.b + sign_of(branch) * params.a))});
    }
  }
  return worst;
}

// Both branches share the direction at xi; their fibers are opposite and
// the surface points differ by 2a along the horizontal direction of xi.
double torus_double_cover(Sampler& rng) {
  double worst = 0.0;
  for (int i = 0; i < 500; ++i) {
    TorusParams plus = random_ring_torus(rng, Branch::kPlus);
    TorusParams minus = plus;
    minus.branch = Branch::kMinus;
    const ChartPoint xi{Chart::kStandard, rng.log_annulus(0.05, 20.0)};
    const LinePoint lp = torus_section(plus).line_at(xi);
    const LinePoint lm = torus_section(minus).line_at(xi);
    const Vector3 diff = line_point(lp) - line_point(lm);
    const Vector3 expect{2.0 * plus.a * xi.coord / std::abs(xi.coord), 0.0};
    const double scale = plus.a + plus.b;
    worst = std::max({worst, max_component_error(diff, expect) / scale,
                      std::abs(lp.line.eta + lm.line.eta) / scale});
    if (norm(diff) < plus.a) return kInf;
  }
  return worst;
}

double torus_rotational_symmetry(Sampler& rng) {
  double worst = 0.0;
  for (int i = 0; i < 500; ++i) {
    const Branch branch = rng.coin() ? Branch::kPlus : Branch::kMinus;
    const LineSection s = torus_section(random_ring_torus(rng, branch));
    const Complex xi = rng.log_annulus(0.05, 20.0);
    const Complex rot = std::polar(1.0, rng.angle());
    const SectionValue v = s.eval(ChartPoint{Chart::kStandard, xi});
    const SectionValue w = s.eval(ChartPoint{Chart::kStandard, rot * xi});
    worst = std::max({worst, std::abs(w.r - v.r), std::abs(std::abs(w.eta) - std::abs(v.eta)),
                      std::abs(w.eta - rot * v.eta)});
  }
  return worst;
}

double torus_normality(Sampler& rng) {
  double worst = 0.0;
  for (Branch branch : {Branch::kPlus, Branch::kMinus}) {
    for (int i = 0; i < 50; ++i) {
      const LineSection s = torus_section(random_ring_torus(rng, branch));
      worst = std::max(worst, verify_normality(s, random_chart_point(rng, 0.05, 1.0), 1e-5));
    }
  }
  return worst;
}

const std::vector<Check>& all_checks() {
  static const std::vector<Check> checks = {
      {"core", "unit_direction", 1e-12, unit_direction},
      {"core", "projection_round_trip", 1e-10, projection_round_trip},
      {"core", "line_parametrization", 1e-10, line_parametrization},
      {"core", "orthogonality", 1e-12, orthogonality},
      {"core", "inverse_correctness", 1e-10, inverse_correctness},
      {"core", "minimal_distance_identity", 1e-10, minimal_distance_identity},
      {"core", "foot_minimality", 1e-12, foot_minimality},
      {"core", "chart_coherence", 1e-9, chart_coherence},
      {"spheres", "point_sphere_exactness", 1e-10, point_sphere_exactness},
      {"spheres", "sphere_normality", 1e-6, sphere_normality},
      {"ellipsoid", "ellipsoid_on_surface", 1e-8, ellipsoid_on_surface},
      {"ellipsoid", "ellipsoid_sphere_degeneration", 1e-10, ellipsoid_sphere_degeneration},
      {"ellipsoid", "ellipsoid_global_section", 1e-8, ellipsoid_global_section},
      {"ellipsoid", "ellipsoid_normality", 1e-6, ellipsoid_normality},
      {"torus", "torus_on_surface", 1e-8, torus_on_surface},
      {"torus", "torus_equators", 1e-12, torus_equators},
      {"torus", "torus_double_cover", 1e-8, torus_double_cover},
      {"torus", "torus_rotational_symmetry", 1e-10, torus_rotational_symmetry},
      {"torus", "torus_normality", 1e-6, torus_normality},
  };
  return checks;
}

}  // namespace

bool RunReport::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.passed; });
}

bool is_known_suite(std::string_view suite) {
  return suite == "core" || suite == "spheres" || suite == "ellipsoid" || suite == "torus" ||
         suite == "all";
}

RunReport run_suite(std::string_view suite, std::uint64_t seed,
                    std::optional<double> tolerance_override) {
  if (!is_known_suite(suite)) {
    throw Error(ErrorCode::kInvalidArgument, "unknown suite '" + std::string(suite) + "'");
  }
  RunReport report;
  report.suite = std::string(suite);
  report.seed = seed;

  const auto& checks = all_checks();
  for (std::size_t index = 0; index < checks.size(); ++index) {
    const Check& check = checks[index];
    if (suite != "all" && suite != check.suite) continue;

    // Per-check stream, so a check sees the same samples whichever suite
    // runs it.
    Sampler rng(seed ^ (0x9E3779B97F4A7C15ULL * (index + 1)));
    CheckResult result;
    result.suite = check.suite;
    result.name = check.name;
    result.tolerance = tolerance_override.value_or(check.tolerance);

    const auto start = std::chrono::steady_clock::now();
    try {
      result.max_residual = check.run(rng);
    } catch (const Error& e) {
      result.max_residual = kInf;
      result.detail = e.what();
    }
    result.wall_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    result.passed = result.max_residual <= result.tolerance;
    report.checks.push_back(std::move(result));
  }
  return report;
}

std::string report_to_json(const RunReport& report) {
  nlohmann::ordered_json doc;
  doc["suite"] = report.suite;
  doc["seed"] = report.seed;
  doc["passed"] = report.passed();
  auto& list = doc["checks"] = nlohmann::ordered_json::array();
  for (const CheckResult& c : report.checks) {
    nlohmann::ordered_json j;
    j["suite"] = c.suite;
    j["name"] = c.name;
    // JSON has no infinity; a check that threw reports null.
    if (std::isfinite(c.max_residual)) {
      j["max_residual"] = c.max_residual;
    } else {
      j["max_residual"] = nullptr;
    }
    j["tolerance"] = c.tolerance;
    j["passed"] = c.passed;
    j["wall_seconds"] = c.wall_seconds;
    if (!c.detail.empty()) j["detail"] = c.detail;
    list.push_back(std::move(j));
  }
  return doc.dump(2);
}

}  // namespace linespace
