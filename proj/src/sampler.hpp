/*
 * Copyright 2026 The linespace authors
 *
 * This software is licensed under the terms of the Apache Licence Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */
#pragma once

#include <cmath>
#include <complex>
#include <cstdint>
#include <numbers>
#include <random>

namespace linespace {

/// Seeded random source whose output is identical on every platform.
/// The standard distributions are implementation-defined, so doubles are
/// built from the top 53 bits of mt19937_64 directly.
class Sampler {
 public:
  explicit Sampler(std::uint64_t seed) : engine_(seed) {}

  /// Uniform on [0, 1).
  double unit() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

  double uniform(double lo, double hi) { return lo + (hi - lo) * unit(); }

  /// Uniform in log space on [lo, hi], lo > 0.
  double log_uniform(double lo, double hi) {
    return std::exp(uniform(std::log(lo), std::log(hi)));
  }

  bool coin() { return (engine_() >> 63) != 0; }

  double angle() { return uniform(0.0, 2.0 * std::numbers::pi); }

  std::complex<double> polar(double modulus) { return std::polar(modulus, angle()); }

  /// Area-uniform point of the disk |c| <= radius.
  std::complex<double> in_disk(double radius) { return polar(radius * std::sqrt(unit())); }

  /// Point with modulus log-uniform on [lo, hi] and uniform phase.
  std::complex<double> log_annulus(double lo, double hi) { return polar(log_uniform(lo, hi)); }

  std::complex<double> in_square(double half_width) {
    const double re = uniform(-half_width, half_width);
    return {re, uniform(-half_width, half_width)};
  }

 private:
  std::mt19937_64 engine_;
};

}  // namespace linespace
