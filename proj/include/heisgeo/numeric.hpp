#pragma once

#include <cmath>
#include <complex>
#include <limits>
#include <numbers>
#include <span>
#include <stdexcept>
#include <vector>

namespace heisgeo {

inline constexpr double pi = std::numbers::pi;
inline constexpr double two_pi = 2.0 * std::numbers::pi;

using cplx = std::complex<double>;

/// sin(pi*s), kept accurate near integer s by reducing the argument first.
inline double sin_pi(double s) {
  if (s < 0.0) return -sin_pi(-s);
  if (s > 0.5) return std::sin(pi * (1.0 - s));  // 1-s is exact for s in [0.5,1]
  return std::sin(pi * s);
}

/// cos(pi*s) with the same argument reduction.
inline double cos_pi(double s) {
  s = std::fabs(s);
  if (s > 0.5) return -std::cos(pi * (1.0 - s));
  return std::cos(pi * s);
}

/// 1 - cos(2*pi*s) = 2 sin(pi s)^2, free of cancellation.
inline double one_minus_cos_2pi(double s) {
  const double sp = sin_pi(s);
  return 2.0 * sp * sp;
}

/// sin(2*pi*s) = 2 sin(pi s) cos(pi s).
inline double sin_2pi(double s) { return 2.0 * sin_pi(s) * cos_pi(s); }

inline bool all_finite(std::span<const double> v) {
  for (double x : v)
    if (!std::isfinite(x)) return false;
  return true;
}

inline void require(bool cond, const char* msg) {
  if (!cond) throw std::invalid_argument(msg);
}

inline double sq(double x) { return x * x; }

/// Euclidean norm of a real vector, plain sum-of-squares (no rescaling),
/// so identical inputs give bitwise identical results everywhere.
inline double norm2(std::span<const double> v) {
  double s = 0.0;
  for (double x : v) s += x * x;
  return std::sqrt(s);
}

}  // namespace heisgeo
