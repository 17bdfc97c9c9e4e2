/*
 * Copyright 2026 The linespace authors
 *
 * This software is licensed under the terms of the Apache Licence Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */
#include "core.hpp"

#include <cmath>
#include <sstream>

namespace linespace {

namespace {

// The inverted chart is the standard chart composed with the rotation by pi
// about the x axis, (z, t) -> (conj z, -t). Substituting xi = 1/w and
// eta = -eta_w / w^2 into the standard formulas gives exactly this, and the
// composed form stays finite at w = 0.
Vector3 flip(const Vector3& v) { return {std::conj(v.vz), -v.vt}; }
EuclideanPoint flip(const EuclideanPoint& p) { return {std::conj(p.z), -p.t}; }

Vector3 standard_dir(Complex xi) {
  const double m = std::norm(xi);
  const double q = 1.0 + m;
  return {2.0 * xi / q, (1.0 - m) / q};
}

Vector3 standard_perp(Complex xi, Complex eta) {
  const double q = 1.0 + std::norm(xi);
  const double q2 = q * q;
  return {2.0 * (eta - std::conj(eta) * xi * xi) / q2,
          -4.0 * std::real(eta * std::conj(xi)) / q2};
}

EuclideanPoint standard_line_point(Complex xi, Complex eta, double r) {
  const double m = std::norm(xi);
  const double q = 1.0 + m;
  const double q2 = q * q;
  const Complex z = (2.0 * (eta - std::conj(eta) * xi * xi) + 2.0 * xi * q * r) / q2;
  const double t = (-4.0 * std::real(eta * std::conj(xi)) + (1.0 - m) * q * r) / q2;
  return {z, t};
}

LinePoint standard_lines_through(const EuclideanPoint& p, Complex xi) {
  const double m = std::norm(xi);
  LinePoint lp;
  lp.line.chart = Chart::kStandard;
  lp.line.xi = xi;
  lp.line.eta = 0.5 * (p.z - 2.0 * p.t * xi - std::conj(p.z) * xi * xi);
  lp.r = (2.0 * std::real(std::conj(xi) * p.z) + (1.0 - m) * p.t) / (1.0 + m);
  return lp;
}

}  // namespace

Complex ExtComplex::value() const {
  if (infinite_) throw Error(ErrorCode::kDomain, "extended complex value is infinity");
  return value_;
}

bool ExtComplex::approx_equal(const ExtComplex& other, double tol) const {
  if (infinite_ != other.infinite_) return false;
  if (infinite_) return true;
  return std::abs(value_ - other.value_) <= tol;
}

ChartPoint ChartPoint::from(const ExtComplex& xi) {
  if (xi.is_infinite()) return {Chart::kInverted, Complex(0.0, 0.0)};
  return {Chart::kStandard, xi.value()};
}

ChartPoint ChartPoint::well_conditioned(const ExtComplex& xi) {
  if (xi.is_infinite()) return {Chart::kInverted, Complex(0.0, 0.0)};
  const Complex v = xi.value();
  if (std::abs(v) <= 1.0) return {Chart::kStandard, v};
  return {Chart::kInverted, 1.0 / v};
}

ExtComplex ChartPoint::to_ext() const {
  if (chart == Chart::kStandard) return ExtComplex(coord);
  if (coord == Complex(0.0, 0.0)) return ExtComplex::infinity();
  return ExtComplex(1.0 / coord);
}

double inner(const Vector3& u, const Vector3& v) {
  return std::real(u.vz * std::conj(v.vz)) + u.vt * v.vt;
}

double norm(const Vector3& v) { return std::sqrt(inner(v, v)); }

double distance_to_origin(const EuclideanPoint& p) {
  return std::hypot(p.z.real(), p.z.imag(), p.t);
}

OrientedLine OrientedLine::from(const ExtComplex& xi, Complex eta) {
  const ChartPoint cp = ChartPoint::from(xi);
  return {cp.chart, cp.coord, eta};
}

ExtComplex OrientedLine::direction_coordinate() const {
  return ChartPoint{chart, xi}.to_ext();
}

Vector3 dir_from_xi(const ExtComplex& xi) {
  if (xi.is_infinite()) return {Complex(0.0, 0.0), -1.0};
  return standard_dir(xi.value());
}

Vector3 dir_from_xi(const ChartPoint& xi) {
  const Vector3 v = standard_dir(xi.coord);
  return xi.chart == Chart::kStandard ? v : flip(v);
}

namespace {

void require_unit(const Vector3& v, double tol) {
  const double n = norm(v);
  if (!(std::abs(n - 1.0) <= tol)) {
    std::ostringstream msg;
    msg.precision(17);
    msg << "direction vector is not of unit length (norm " << n << ")";
    throw NormalizationError(n, msg.str());
  }
}

}  // namespace

ExtComplex xi_from_dir(const Vector3& v, double tol) {
  require_unit(v, tol);
  if (v.vt >= 0.0) return ExtComplex(v.vz / (1.0 + v.vt));
  if (v.vz == Complex(0.0, 0.0)) return ExtComplex::infinity();
  // vz / (1 + vt) == (1 - vt) / conj(vz) on the unit sphere, without the
  // cancellation in 1 + vt near the south pole.
  return ExtComplex((1.0 - v.vt) / std::conj(v.vz));
}

ChartPoint chart_point_from_dir(const Vector3& v, double tol) {
  require_unit(v, tol);
  if (v.vt >= 0.0) return {Chart::kStandard, v.vz / (1.0 + v.vt)};
  return {Chart::kInverted, std::conj(v.vz) / (1.0 - v.vt)};
}

EuclideanPoint line_point(const LinePoint& lp) {
  const EuclideanPoint p = standard_line_point(lp.line.xi, lp.line.eta, lp.r);
  return lp.line.chart == Chart::kStandard ? p : flip(p);
}

EuclideanPoint foot_point(const OrientedLine& line) {
  return line_point({line, 0.0});
}

Vector3 perp_displacement(const OrientedLine& line) {
  const Vector3 v = standard_perp(line.xi, line.eta);
  return line.chart == Chart::kStandard ? v : flip(v);
}

LinePoint lines_through_point(const EuclideanPoint& p, const ExtComplex& xi) {
  return lines_through_point(p, ChartPoint::from(xi));
}

LinePoint lines_through_point(const EuclideanPoint& p, const ChartPoint& xi) {
  if (xi.chart == Chart::kStandard) return standard_lines_through(p, xi.coord);
  LinePoint lp = standard_lines_through(flip(p), xi.coord);
  lp.line.chart = Chart::kInverted;
  return lp;
}

double incidence_r(const EuclideanPoint& p, const ExtComplex& xi) {
  return lines_through_point(p, xi).r;
}

double incidence_r(const EuclideanPoint& p, const ChartPoint& xi) {
  return lines_through_point(p, xi).r;
}

OrientedLine chart_transition(const OrientedLine& line) {
  if (line.xi == Complex(0.0, 0.0)) {
    throw Error(ErrorCode::kUndefinedTransition,
                "chart transition is undefined at coordinate 0");
  }
  OrientedLine out;
  out.chart = line.chart == Chart::kStandard ? Chart::kInverted : Chart::kStandard;
  out.xi = 1.0 / line.xi;
  out.eta = -line.eta / (line.xi * line.xi);
  return out;
}

OrientedLine to_chart(const OrientedLine& line, Chart target) {
  return line.chart == target ? line : chart_transition(line);
}

}  // namespace linespace
