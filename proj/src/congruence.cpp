/*
 * Copyright 2026 The linespace authors
 *
 * This software is licensed under the terms of the Apache Licence Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */
#include "congruence.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <utility>

namespace linespace {

namespace {

bool positive_finite(double v) { return std::isfinite(v) && v > 0.0; }

std::string format_params(std::initializer_list<std::pair<const char*, double>> kv) {
  std::ostringstream os;
  os.precision(17);
  bool first = true;
  for (const auto& [k, v] : kv) {
    if (!first) os << ", ";
    os << k << "=" << v;
    first = false;
  }
  return os.str();
}

SectionValue ellipsoid_value(const EllipsoidParams& p, Complex xi) {
  const Complex xb = std::conj(xi);
  const double m = std::norm(xi);
  const double q = 1.0 + m;

  // Radicand with (xi + conj xi)^2 = 4 Re^2 and -(xi - conj xi)^2 = 4 Im^2.
  const double radicand = 4.0 * p.a1 * xi.real() * xi.real() +
                          4.0 * p.a2 * xi.imag() * xi.imag() + p.a3 * (1.0 - m) * (1.0 - m);
  if (!(radicand > 0.0)) {
    throw Error(ErrorCode::kParameter, "ellipsoid radicand is not positive");
  }
  const Complex numer = p.a1 * (xi + xb) * (1.0 - xi * xi) +
                        p.a2 * (xi - xb) * (1.0 + xi * xi) -
                        2.0 * p.a3 * xi * (1.0 - m);

  // Support value sqrt(a1 n1^2 + a2 n2^2 + a3 n3^2) for the unit normal n.
  const double n1 = 2.0 * xi.real() / q;
  const double n2 = 2.0 * xi.imag() / q;
  const double n3 = (1.0 - m) / q;
  return {numer / (2.0 * std::sqrt(radicand)),
          std::sqrt(p.a1 * n1 * n1 + p.a2 * n2 * n2 + p.a3 * n3 * n3)};
}

SectionValue torus_value(const TorusParams& p, Complex xi) {
  const double modulus = std::abs(xi);
  if (modulus < kBranchPointRadius || modulus > 1.0 / kBranchPointRadius ||
      !std::isfinite(modulus)) {
    std::ostringstream msg;
    msg.precision(17);
    msg << "torus section is branched at the poles (|xi| = " << modulus << ")";
    throw Error(ErrorCode::kBranchPoint, msg.str());
  }
  const double s = sign_of(p.branch);
  const double m = modulus * modulus;
  // sqrt(xi / conj xi) is the unit phase xi / |xi|.
  const Complex phase = xi / modulus;
  return {s * 0.5 * p.a * phase * (1.0 - m), p.b + s * 2.0 * p.a * modulus / (1.0 + m)};
}

}  // namespace

void EllipsoidParams::validate() const {
  if (!positive_finite(a1) || !positive_finite(a2) || !positive_finite(a3)) {
    throw Error(ErrorCode::kParameter,
                "ellipsoid parameters must be positive: " +
                    format_params({{"a1", a1}, {"a2", a2}, {"a3", a3}}));
  }
}

void TorusParams::validate() const {
  if (!positive_finite(a) || !positive_finite(b)) {
    throw Error(ErrorCode::kParameter,
                "torus parameters must be positive: " + format_params({{"a", a}, {"b", b}}));
  }
}

LineSection::LineSection(std::string name, SectionDomain domain, std::optional<Branch> branch,
                         ChartEval standard, ChartEval inverted)
    : name_(std::move(name)),
      domain_(domain),
      branch_(branch),
      standard_(std::move(standard)),
      inverted_(std::move(inverted)) {}

SectionValue LineSection::eval(const ChartPoint& xi) const {
  if (!std::isfinite(xi.coord.real()) || !std::isfinite(xi.coord.imag())) {
    throw Error(ErrorCode::kDomain, "chart coordinate is not finite");
  }
  return xi.chart == Chart::kStandard ? standard_(xi.coord) : inverted_(xi.coord);
}

LinePoint LineSection::line_at(const ChartPoint& xi) const {
  const SectionValue v = eval(xi);
  return {{xi.chart, xi.coord, v.eta}, v.r};
}

EuclideanPoint LineSection::surface_point(const ChartPoint& xi) const {
  return line_point(line_at(xi));
}

LineSection point_sphere_section(const EuclideanPoint& p, double radius) {
  if (!std::isfinite(p.z.real()) || !std::isfinite(p.z.imag()) || !std::isfinite(p.t) ||
      !std::isfinite(radius)) {
    throw Error(ErrorCode::kParameter, "point sphere centre and radius must be finite");
  }
  auto in_chart = [p, radius](Chart chart) {
    return [p, radius, chart](Complex xi) {
      const LinePoint lp = lines_through_point(p, ChartPoint{chart, xi});
      return SectionValue{lp.line.eta, lp.r + radius};
    };
  };
  return LineSection("sphere", SectionDomain::kFullSphere, std::nullopt,
                     in_chart(Chart::kStandard), in_chart(Chart::kInverted));
}

LineSection ellipsoid_section(const EllipsoidParams& params) {
  params.validate();
  // The ellipsoid is invariant under (z, t) -> (conj z, -t), which carries
  // the standard chart onto the inverted one, so both charts share a formula.
  auto eval = [params](Complex xi) { return ellipsoid_value(params, xi); };
  return LineSection("ellipsoid", SectionDomain::kFullSphere, std::nullopt, eval, eval);
}

LineSection torus_section(const TorusParams& params) {
  params.validate();
  // Same symmetry argument as for the ellipsoid.
  auto eval = [params](Complex xi) { return torus_value(params, xi); };
  return LineSection("torus", SectionDomain::kSphereMinusPoles, params.branch, eval, eval);
}

std::vector<Reconstruction> reconstruct(const LineSection& section,
                                        std::span<const ChartPoint> samples) {
  std::vector<Reconstruction> out(samples.size());
  for (std::size_t i = 0; i < samples.size(); ++i) {
    try {
      out[i].point = section.surface_point(samples[i]);
    } catch (const Error& e) {
      out[i].error = e.code();
      out[i].message = e.what();
    }
  }
  return out;
}

std::vector<Reconstruction> reconstruct(const LineSection& section,
                                        std::span<const ExtComplex> samples) {
  std::vector<ChartPoint> charted;
  charted.reserve(samples.size());
  for (const auto& xi : samples) charted.push_back(ChartPoint::from(xi));
  return reconstruct(section, std::span<const ChartPoint>(charted));
}

double implicit_residual_ellipsoid(const EllipsoidParams& params, const EuclideanPoint& p) {
  return p.x() * p.x() / params.a1 + p.y() * p.y() / params.a2 + p.t * p.t / params.a3 - 1.0;
}

double implicit_residual_torus(const TorusParams& params, const EuclideanPoint& p) {
  const double rho = std::abs(p.z);
  const double near = (rho - params.a) * (rho - params.a) + p.t * p.t - params.b * params.b;
  const double far = (rho + params.a) * (rho + params.a) + p.t * p.t - params.b * params.b;
  return std::abs(near) <= std::abs(far) ? near : far;
}

double verify_normality(const LineSection& section, const ChartPoint& xi, double h) {
  if (!(h > 0.0) || !std::isfinite(h)) {
    throw Error(ErrorCode::kInvalidArgument, "finite-difference step must be positive");
  }
  section.eval(xi);
  const Vector3 normal = dir_from_xi(xi);
  auto at = [&](Complex offset) {
    return section.surface_point({xi.chart, xi.coord + offset});
  };
  double worst = 0.0;
  for (const Complex step : {Complex(h, 0.0), Complex(0.0, h)}) {
    const Vector3 tangent = (1.0 / (2.0 * h)) * (at(step) - at(-step));
    const double len = norm(tangent);
    if (len < h * h) {
      std::ostringstream msg;
      msg.precision(17);
      msg << "degenerate parametrization of " << section.name() << " (tangent length " << len
          << ")";
      throw Error(ErrorCode::kDegenerate, msg.str());
    }
    worst = std::max(worst, std::abs(inner(normal, tangent)) / len);
  }
  return worst;
}

double verify_normality(const LineSection& section, const ExtComplex& xi, double h) {
  return verify_normality(section, ChartPoint::from(xi), h);
}

}  // namespace linespace
