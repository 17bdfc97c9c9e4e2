/*
 * Copyright 2026 The linespace authors
 *
 * This software is licensed under the terms of the Apache Licence Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */
#pragma once

// Coordinates on the space of oriented lines in R^3, identified with the
// tangent bundle of the unit sphere. A line is a pair (xi, eta): xi is the
// stereographic coordinate (projection from the south pole) of its unit
// direction, eta the fiber coordinate of the tangent vector
// eta d/dxi + conj(eta) d/dconj(xi), which is the line's closest point to the
// origin. R^3 is written as C + R with z = x + iy and t the third axis.
//
// Two charts cover the sphere of directions. The standard chart uses xi; the
// inverted chart uses w = 1/xi with fiber eta_w = -eta / xi^2, and is the
// only chart that can hold the direction (0, 0, -1) (w = 0).

#include <complex>
#include <optional>

#include "error.hpp"

namespace linespace {

using Complex = std::complex<double>;

/// A point of the extended complex plane: a finite value or infinity.
class ExtComplex {
 public:
  ExtComplex() = default;
  ExtComplex(Complex value) : value_(value) {}  // NOLINT: implicit by intent
  ExtComplex(double re, double im = 0.0) : value_(Complex(re, im)) {}

  static ExtComplex infinity() {
    ExtComplex e;
    e.infinite_ = true;
    e.value_ = Complex(0.0, 0.0);
    return e;
  }

  bool is_infinite() const noexcept { return infinite_; }
  bool is_finite() const noexcept { return !infinite_; }

  /// Finite value; throws kDomain on infinity.
  Complex value() const;

  /// Tag compared exactly, finite values to within `tol` in modulus.
  bool approx_equal(const ExtComplex& other, double tol) const;

 private:
  Complex value_{0.0, 0.0};
  bool infinite_ = false;
};

enum class Chart {
  kStandard = 1,  ///< coordinate xi
  kInverted = 2,  ///< coordinate w = 1/xi
};

/// A direction expressed in one chart. Any coordinate value is allowed.
struct ChartPoint {
  Chart chart = Chart::kStandard;
  Complex coord{0.0, 0.0};

  /// Finite xi goes to the standard chart, infinity to the inverted chart
  /// at w = 0.
  static ChartPoint from(const ExtComplex& xi);

  /// Like from(), but picks the chart with |coord| <= 1.
  static ChartPoint well_conditioned(const ExtComplex& xi);

  /// Same direction as an extended complex xi.
  ExtComplex to_ext() const;
};

/// Tangent vector of R^3 stored as its complex (x + iy) and real t parts.
struct Vector3 {
  Complex vz{0.0, 0.0};
  double vt = 0.0;

  Vector3& operator+=(const Vector3& o) {
    vz += o.vz;
    vt += o.vt;
    return *this;
  }
  Vector3& operator-=(const Vector3& o) {
    vz -= o.vz;
    vt -= o.vt;
    return *this;
  }
  Vector3& operator*=(double s) {
    vz *= s;
    vt *= s;
    return *this;
  }
  friend Vector3 operator+(Vector3 a, const Vector3& b) { return a += b; }
  friend Vector3 operator-(Vector3 a, const Vector3& b) { return a -= b; }
  friend Vector3 operator*(double s, Vector3 a) { return a *= s; }
  friend Vector3 operator*(Vector3 a, double s) { return a *= s; }
};

/// Real Euclidean product: Re(u.vz * conj(v.vz)) + u.vt * v.vt.
double inner(const Vector3& u, const Vector3& v);
double norm(const Vector3& v);

struct EuclideanPoint {
  Complex z{0.0, 0.0};
  double t = 0.0;

  static EuclideanPoint from_xyz(double x, double y, double t) {
    return {Complex(x, y), t};
  }
  double x() const { return z.real(); }
  double y() const { return z.imag(); }

  /// Position vector from the origin.
  Vector3 as_vector() const { return {z, t}; }

  friend Vector3 operator-(const EuclideanPoint& a, const EuclideanPoint& b) {
    return {a.z - b.z, a.t - b.t};
  }
  friend EuclideanPoint operator+(const EuclideanPoint& p, const Vector3& v) {
    return {p.z + v.vz, p.t + v.vt};
  }
};

double distance_to_origin(const EuclideanPoint& p);

/// An oriented line. `xi` and `eta` are coordinates in `chart`.
struct OrientedLine {
  Chart chart = Chart::kStandard;
  Complex xi{0.0, 0.0};
  Complex eta{0.0, 0.0};

  /// Standard-chart line for finite xi; inverted chart at w = 0 for infinity
  /// (then `eta` is read as the inverted-chart fiber).
  static OrientedLine from(const ExtComplex& xi, Complex eta);

  ExtComplex direction_coordinate() const;
};

/// A line together with a signed affine parameter; r = 0 is the foot point.
struct LinePoint {
  OrientedLine line;
  double r = 0.0;
};

// -- directions --------------------------------------------------------------

/// Unit direction (2 xi, 1 - |xi|^2) / (1 + |xi|^2); (0, -1) at infinity.
Vector3 dir_from_xi(const ExtComplex& xi);
Vector3 dir_from_xi(const ChartPoint& xi);

/// Inverse of dir_from_xi. Throws NormalizationError when
/// |norm(v) - 1| > tol. Returns infinity only for vz == 0 with vt < 0.
ExtComplex xi_from_dir(const Vector3& v, double tol = 1e-10);

/// Inverse of dir_from_xi(ChartPoint), choosing the chart with |coord| <= 1.
ChartPoint chart_point_from_dir(const Vector3& v, double tol = 1e-10);

// -- lines -------------------------------------------------------------------

/// Point at parameter r on the line, in either chart.
EuclideanPoint line_point(const LinePoint& lp);

/// Closest point to the origin; equals line_point({line, 0}).
EuclideanPoint foot_point(const OrientedLine& line);

/// The fixed vector determining the line, i.e. the foot point as a vector.
Vector3 perp_displacement(const OrientedLine& line);

/// The oriented line through p with direction xi, and the parameter of p on
/// it. Finite xi yields a standard-chart line; infinity the inverted chart.
LinePoint lines_through_point(const EuclideanPoint& p, const ExtComplex& xi);
LinePoint lines_through_point(const EuclideanPoint& p, const ChartPoint& xi);

double incidence_r(const EuclideanPoint& p, const ExtComplex& xi);
double incidence_r(const EuclideanPoint& p, const ChartPoint& xi);

/// Same line in the other chart: xi' = 1/xi, eta' = -eta/xi^2.
/// Throws kUndefinedTransition when xi == 0.
OrientedLine chart_transition(const OrientedLine& line);

/// Same line expressed in `target`; throws like chart_transition.
OrientedLine to_chart(const OrientedLine& line, Chart target);

}  // namespace linespace
