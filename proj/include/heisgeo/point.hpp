#pragma once

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

#include "heisgeo/numeric.hpp"

namespace heisgeo {

/**
 * A point (z, t) of the Heisenberg group H^n, z in C^n, t real.
 *
 * Coordinates are stored as the real split (x_1..x_n, y_1..y_n) with complex
 * views computed on demand.  n is fixed per instance; all group operations
 * reject mismatched dimensions.
 */
class HeisPoint {
 public:
  HeisPoint() = default;

  HeisPoint(std::vector<double> x, std::vector<double> y, double t)
      : n_(x.size()), xy_(), t_(t) {
    require(!x.empty(), "HeisPoint: n must be >= 1");
    require(x.size() == y.size(), "HeisPoint: x and y must have equal length");
    xy_.reserve(2 * n_);
    xy_.insert(xy_.end(), x.begin(), x.end());
    xy_.insert(xy_.end(), y.begin(), y.end());
    require(all_finite(xy_) && std::isfinite(t), "HeisPoint: non-finite component");
  }

  explicit HeisPoint(std::vector<cplx> z, double t) : n_(z.size()), t_(t) {
    require(!z.empty(), "HeisPoint: n must be >= 1");
    xy_.resize(2 * n_);
    for (std::size_t j = 0; j < n_; ++j) {
      xy_[j] = z[j].real();
      xy_[n_ + j] = z[j].imag();
    }
    require(all_finite(xy_) && std::isfinite(t), "HeisPoint: non-finite component");
  }

  static HeisPoint origin(std::size_t n) {
    return HeisPoint(std::vector<double>(n, 0.0), std::vector<double>(n, 0.0), 0.0);
  }

  std::size_t dim() const { return n_; }
  double x(std::size_t j) const { return xy_[j]; }
  double y(std::size_t j) const { return xy_[n_ + j]; }
  double t() const { return t_; }
  cplx z(std::size_t j) const { return {xy_[j], xy_[n_ + j]}; }

  std::span<const double> xy() const { return xy_; }

  std::vector<cplx> z_vec() const {
    std::vector<cplx> out(n_);
    for (std::size_t j = 0; j < n_; ++j) out[j] = z(j);
    return out;
  }

  /// |z|, the Euclidean norm of the horizontal part.
  double z_norm() const { return norm2(xy_); }

  bool almost_equal(const HeisPoint& o, double tol = 1e-12) const {
    if (n_ != o.n_) return false;
    for (std::size_t i = 0; i < 2 * n_; ++i)
      if (std::fabs(xy_[i] - o.xy_[i]) > tol) return false;
    return std::fabs(t_ - o.t_) <= tol;
  }

 private:
  std::size_t n_ = 0;
  std::vector<double> xy_;  // x_1..x_n, y_1..y_n
  double t_ = 0.0;
};

/// Horizontal tangent vector sum_j a_j X_j + b_j Y_j at some base point.
struct HorizontalTangent {
  std::vector<double> a;
  std::vector<double> b;

  /// Length in the horizontal metric, sqrt(sum a_j^2 + b_j^2).
  double norm_h() const {
    double s = 0.0;
    for (std::size_t j = 0; j < a.size(); ++j) s += a[j] * a[j] + b[j] * b[j];
    return std::sqrt(s);
  }

  /// The dt-coefficient forced by horizontality at p: c = 2 sum (a_j y_j - b_j x_j).
  double vertical_component_at(const HeisPoint& p) const {
    require(a.size() == p.dim() && b.size() == p.dim(),
            "HorizontalTangent: dimension mismatch");
    double c = 0.0;
    for (std::size_t j = 0; j < p.dim(); ++j) c += a[j] * p.y(j) - b[j] * p.x(j);
    return 2.0 * c;
  }

  /// Euclidean length in R^(2n+1) of the lifted vector at p.
  double norm_e_at(const HeisPoint& p) const {
    const double c = vertical_component_at(p);
    const double h = norm_h();
    return std::sqrt(h * h + c * c);
  }
};

/// Group law: (z,t)*(z',t') = (z+z', t+t'+2 Im sum z_j conj(z'_j)).
inline HeisPoint group_mul(const HeisPoint& p, const HeisPoint& q) {
  require(p.dim() == q.dim(), "group_mul: dimension mismatch");
  const std::size_t n = p.dim();
  std::vector<double> x(n), y(n);
  double twist = 0.0;
  for (std::size_t j = 0; j < n; ++j) {
    x[j] = p.x(j) + q.x(j);
    y[j] = p.y(j) + q.y(j);
    // Im(z_j conj(z'_j)) = y_j x'_j - x_j y'_j
    twist += q.x(j) * p.y(j) - p.x(j) * q.y(j);
  }
  return HeisPoint(std::move(x), std::move(y), p.t() + q.t() + 2.0 * twist);
}

/// Group inverse (-z, -t).
inline HeisPoint inverse(const HeisPoint& p) {
  const std::size_t n = p.dim();
  std::vector<double> x(n), y(n);
  for (std::size_t j = 0; j < n; ++j) {
    x[j] = -p.x(j);
    y[j] = -p.y(j);
  }
  return HeisPoint(std::move(x), std::move(y), -p.t());
}

/// The isometry (z,t) -> (conj z, -t).
inline HeisPoint conjugate_flip(const HeisPoint& p) {
  const std::size_t n = p.dim();
  std::vector<double> x(n), y(n);
  for (std::size_t j = 0; j < n; ++j) {
    x[j] = p.x(j);
    y[j] = -p.y(j);
  }
  return HeisPoint(std::move(x), std::move(y), -p.t());
}

/// The isometry (z,t) -> (z, t+c).
inline HeisPoint vertical_shift(const HeisPoint& p, double c) {
  const std::size_t n = p.dim();
  std::vector<double> x(n), y(n);
  for (std::size_t j = 0; j < n; ++j) {
    x[j] = p.x(j);
    y[j] = p.y(j);
  }
  return HeisPoint(std::move(x), std::move(y), p.t() + c);
}

}  // namespace heisgeo
