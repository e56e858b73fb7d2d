#pragma once

#include <algorithm>
#include <cstddef>
#include <functional>
#include <utility>
#include <vector>

#include "heisgeo/numeric.hpp"
#include "heisgeo/point.hpp"

namespace heisgeo {

/**
 * Uniformly sampled curve in R^2n (= C^n): M+1 samples at s_k = k/M.
 *
 * Row k stores (x_1..x_n, y_1..y_n).  A closed curve must return to its
 * starting sample within a scale-aware tolerance.
 */
class PlanarCurve {
 public:
  PlanarCurve(std::size_t n, std::vector<double> data, bool closed)
      : n_(n), data_(std::move(data)), closed_(closed) {
    require(n_ >= 1, "PlanarCurve: n must be >= 1");
    require(data_.size() % (2 * n_) == 0, "PlanarCurve: data size not a multiple of 2n");
    const std::size_t rows = data_.size() / (2 * n_);
    require(rows >= 3, "PlanarCurve: need M >= 2 (at least 3 samples)");
    require(all_finite(data_), "PlanarCurve: non-finite sample");
    if (closed_) require(gap_at_seam() <= closedness_tolerance(), "PlanarCurve: marked closed but endpoints differ");
  }

  /// Builds by sampling f : [0,1] -> R^2n at M+1 uniform parameters.
  static PlanarCurve sampled(std::size_t n, std::size_t M, bool closed,
                             const std::function<void(double, std::span<double>)>& f) {
    std::vector<double> data((M + 1) * 2 * n);
    for (std::size_t k = 0; k <= M; ++k) {
      std::span<double> row(data.data() + k * 2 * n, 2 * n);
      f(static_cast<double>(k) / static_cast<double>(M), row);
    }
    return PlanarCurve(n, std::move(data), closed);
  }

  std::size_t dim() const { return n_; }
  std::size_t panels() const { return data_.size() / (2 * n_) - 1; }  // M
  std::size_t samples() const { return panels() + 1; }
  bool closed() const { return closed_; }

  double x(std::size_t k, std::size_t j) const { return data_[k * 2 * n_ + j]; }
  double y(std::size_t k, std::size_t j) const { return data_[k * 2 * n_ + n_ + j]; }
  cplx z(std::size_t k, std::size_t j) const { return {x(k, j), y(k, j)}; }

  std::span<const double> row(std::size_t k) const {
    return {data_.data() + k * 2 * n_, 2 * n_};
  }
  std::span<const double> raw() const { return data_; }

  double& at(std::size_t k, std::size_t i) { return data_[k * 2 * n_ + i]; }

  /// Distance between first and last sample.
  double gap_at_seam() const {
    const std::size_t M = panels();
    double s = 0.0;
    for (std::size_t i = 0; i < 2 * n_; ++i) s += sq(data_[i] - data_[M * 2 * n_ + i]);
    return std::sqrt(s);
  }

  double closedness_tolerance() const { return 1e-9 * (1.0 + polyline_length()); }

  /// Polyline (chordal) length of the sampled curve.
  double polyline_length() const {
    const std::size_t M = panels();
    double len = 0.0;
    for (std::size_t k = 0; k < M; ++k) {
      double c = 0.0;
      for (std::size_t i = 0; i < 2 * n_; ++i) c += sq(data_[(k + 1) * 2 * n_ + i] - data_[k * 2 * n_ + i]);
      len += std::sqrt(c);
    }
    return len;
  }

 private:
  std::size_t n_;
  std::vector<double> data_;  // (M+1) x 2n, row-major
  bool closed_;
};

/// The panel increment the lift integral assigns to [s_k, s_k+1]:
/// 2 sum_j (dx_j * ybar_j - xbar_j * dy_j), exact for the chord polyline.
inline double lift_panel_increment(const PlanarCurve& g, std::size_t k) {
  const std::size_t n = g.dim();
  double acc = 0.0;
  for (std::size_t j = 0; j < n; ++j) {
    const double dx = g.x(k + 1, j) - g.x(k, j);
    const double dy = g.y(k + 1, j) - g.y(k, j);
    const double xb = 0.5 * (g.x(k, j) + g.x(k + 1, j));
    const double yb = 0.5 * (g.y(k, j) + g.y(k + 1, j));
    acc += dx * yb - xb * dy;
  }
  return 2.0 * acc;
}

/**
 * Sampled horizontal curve: a planar projection plus heights t_k.
 *
 * The horizontality residual is the worst panel defect
 * max_k |dt_k - 2 sum_j (dx_j ybar_j - xbar_j dy_j)|; curves produced by
 * horizontal_lift have residual at rounding level, externally supplied
 * heights are measured against the same rule.
 */
class HorizontalCurve {
 public:
  HorizontalCurve(PlanarCurve base, std::vector<double> t)
      : base_(std::move(base)), t_(std::move(t)) {
    require(t_.size() == base_.samples(), "HorizontalCurve: height count mismatch");
    require(all_finite(t_), "HorizontalCurve: non-finite height");
    residual_ = 0.0;
    for (std::size_t k = 0; k < base_.panels(); ++k) {
      const double defect = std::fabs((t_[k + 1] - t_[k]) - lift_panel_increment(base_, k));
      residual_ = std::max(residual_, defect);
    }
  }

  const PlanarCurve& base() const { return base_; }
  const std::vector<double>& t() const { return t_; }
  double horizontality_residual() const { return residual_; }
  bool is_horizontal(double bound) const { return residual_ <= bound; }

  std::size_t dim() const { return base_.dim(); }
  std::size_t panels() const { return base_.panels(); }

  HeisPoint point_at(std::size_t k) const {
    const std::size_t n = base_.dim();
    std::vector<double> x(n), y(n);
    for (std::size_t j = 0; j < n; ++j) {
      x[j] = base_.x(k, j);
      y[j] = base_.y(k, j);
    }
    return HeisPoint(std::move(x), std::move(y), t_[k]);
  }

  double height_change() const { return t_.back() - t_.front(); }

 private:
  PlanarCurve base_;
  std::vector<double> t_;
  double residual_;
};

/// Horizontal lift of a planar curve with starting height t0 (trapezoid rule).
inline HorizontalCurve horizontal_lift(const PlanarCurve& g, double t0) {
  std::vector<double> t(g.samples());
  t[0] = t0;
  for (std::size_t k = 0; k < g.panels(); ++k) t[k + 1] = t[k] + lift_panel_increment(g, k);
  return HorizontalCurve(g, std::move(t));
}

/// Euclidean polyline length of a planar curve.
inline double length_e(const PlanarCurve& g) { return g.polyline_length(); }

/// Horizontal length; equals the Euclidean length of the projection.
inline double length_h(const HorizontalCurve& c) { return length_e(c.base()); }

/// Left translation p * Gamma applied samplewise; an isometry, so lengths and
/// the horizontality residual carry over.
inline HorizontalCurve left_translate(const HeisPoint& p, const HorizontalCurve& c) {
  require(p.dim() == c.dim(), "left_translate: dimension mismatch");
  const std::size_t n = c.dim();
  const std::size_t M = c.panels();
  std::vector<double> data((M + 1) * 2 * n);
  std::vector<double> t(M + 1);
  for (std::size_t k = 0; k <= M; ++k) {
    const HeisPoint moved = group_mul(p, c.point_at(k));
    for (std::size_t j = 0; j < n; ++j) {
      data[k * 2 * n + j] = moved.x(j);
      data[k * 2 * n + n + j] = moved.y(j);
    }
    t[k] = moved.t();
  }
  return HorizontalCurve(PlanarCurve(n, std::move(data), c.base().closed()), std::move(t));
}

using DistanceFn = std::function<double(const HeisPoint&, const HeisPoint&)>;

/// Partition sum  sum_i dist(Gamma(s_i), Gamma(s_i+1))  on a uniform partition.
/// Nodes between samples are interpolated linearly.
inline double length_cc_partition(const HorizontalCurve& c, std::size_t partitions,
                                  const DistanceFn& dist) {
  require(partitions >= 1, "length_cc_partition: need at least one piece");
  const std::size_t M = c.panels();
  const std::size_t n = c.dim();

  auto node = [&](std::size_t i) -> HeisPoint {
    const double pos = static_cast<double>(i) * static_cast<double>(M) / static_cast<double>(partitions);
    const std::size_t k = std::min(static_cast<std::size_t>(pos), M - 1);
    const double u = pos - static_cast<double>(k);
    if (u == 0.0) return c.point_at(k);
    std::vector<double> x(n), y(n);
    for (std::size_t j = 0; j < n; ++j) {
      x[j] = (1.0 - u) * c.base().x(k, j) + u * c.base().x(k + 1, j);
      y[j] = (1.0 - u) * c.base().y(k, j) + u * c.base().y(k + 1, j);
    }
    const double t = (1.0 - u) * c.t()[k] + u * c.t()[k + 1];
    return HeisPoint(std::move(x), std::move(y), t);
  };

  double sum = 0.0;
  HeisPoint prev = node(0);
  for (std::size_t i = 1; i <= partitions; ++i) {
    HeisPoint cur = node(i);
    sum += dist(prev, cur);
    prev = std::move(cur);
  }
  return sum;
}

/// Resamples so consecutive chords have equal length (arc-length by cumulative
/// chordlength inversion with linear interpolation).  Image unchanged up to
/// sample spacing; throws on zero-length input.
inline PlanarCurve reparametrize_constant_speed(const PlanarCurve& g) {
  const std::size_t M = g.panels();
  const std::size_t n = g.dim();
  std::vector<double> cum(M + 1, 0.0);
  for (std::size_t k = 0; k < M; ++k) {
    double c = 0.0;
    for (std::size_t i = 0; i < 2 * n; ++i) c += sq(g.row(k + 1)[i] - g.row(k)[i]);
    cum[k + 1] = cum[k] + std::sqrt(c);
  }
  const double total = cum[M];
  require(total > 0.0, "reparametrize_constant_speed: zero-length curve");

  std::vector<double> data((M + 1) * 2 * n);
  std::size_t seg = 0;
  for (std::size_t k = 0; k <= M; ++k) {
    const double target = total * static_cast<double>(k) / static_cast<double>(M);
    while (seg + 1 < M && cum[seg + 1] < target) ++seg;
    const double span = cum[seg + 1] - cum[seg];
    const double u = span > 0.0 ? std::clamp((target - cum[seg]) / span, 0.0, 1.0) : 0.0;
    for (std::size_t i = 0; i < 2 * n; ++i)
      data[k * 2 * n + i] = (1.0 - u) * g.row(seg)[i] + u * g.row(seg + 1)[i];
  }
  // keep the seam bitwise closed for closed inputs
  if (g.closed())
    for (std::size_t i = 0; i < 2 * n; ++i) data[M * 2 * n + i] = data[i];
  return PlanarCurve(n, std::move(data), g.closed());
}

/// Signed areas (D_1..D_n) of the per-plane projections, shoelace formula.
inline std::vector<double> signed_areas(const PlanarCurve& g) {
  require(g.closed(), "signed_areas: curve is not closed");
  const std::size_t M = g.panels();
  std::vector<double> d(g.dim(), 0.0);
  for (std::size_t j = 0; j < g.dim(); ++j) {
    double acc = 0.0;
    for (std::size_t k = 0; k < M; ++k)
      acc += g.x(k, j) * g.y(k + 1, j) - g.x(k + 1, j) * g.y(k, j);
    d[j] = 0.5 * acc;
  }
  return d;
}

/// Chord speeds |Gamma(s_k+1)-Gamma(s_k)| * M of the projection.
inline std::vector<double> chord_speeds(const PlanarCurve& g) {
  const std::size_t M = g.panels();
  std::vector<double> v(M);
  for (std::size_t k = 0; k < M; ++k) {
    double c = 0.0;
    for (std::size_t i = 0; i < 2 * g.dim(); ++i) c += sq(g.row(k + 1)[i] - g.row(k)[i]);
    v[k] = std::sqrt(c) * static_cast<double>(M);
  }
  return v;
}

}  // namespace heisgeo
