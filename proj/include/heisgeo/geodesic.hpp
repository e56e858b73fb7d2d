#pragma once

#include <cmath>
#include <complex>
#include <cstddef>
#include <optional>
#include <vector>

#include "heisgeo/curve.hpp"
#include "heisgeo/hfunc.hpp"
#include "heisgeo/numeric.hpp"
#include "heisgeo/point.hpp"

namespace heisgeo {

/**
 * Parameters (A, B, sign, T, s_end) of a geodesic leaving the origin whose
 * full extension ends on the t-axis at (0, 0, sign*T):
 *
 *   gamma(s) = (1 - e^{-sign 2 pi i s}) (A + iB),   t(s) = sign T (s - sin(2 pi s)/(2 pi))
 *
 * with 4 pi sum_j (A_j^2 + B_j^2) = T.  s_end in (0,1] cuts the curve where it
 * reaches an off-axis target (1 for full t-axis geodesics).
 */
struct GeodesicParams {
  std::size_t n = 0;
  std::vector<double> A;
  std::vector<double> B;
  int sign = +1;
  double T = 0.0;
  double s_end = 1.0;

  double radius_sq() const {
    double r = 0.0;
    for (std::size_t j = 0; j < n; ++j) r += A[j] * A[j] + B[j] * B[j];
    return r;
  }
};

/// Closed-form geodesic from the origin, exposed as a sampler on [0,1].
/// Circular geodesics cover targets off the plane t = 0; planar targets get
/// the straight segment; the origin itself degenerates to a constant curve.
class Geodesic {
 public:
  enum class Kind { circular, segment, null_curve };

  static Geodesic circular(GeodesicParams p) {
    Geodesic g;
    g.kind_ = Kind::circular;
    g.params_ = std::move(p);
    return g;
  }

  static Geodesic straight_segment(HeisPoint target) {
    Geodesic g;
    g.kind_ = Kind::segment;
    g.target_ = std::move(target);
    return g;
  }

  static Geodesic constant(std::size_t n) {
    Geodesic g;
    g.kind_ = Kind::null_curve;
    g.target_ = HeisPoint::origin(n);
    return g;
  }

  Kind kind() const { return kind_; }
  const std::optional<GeodesicParams>& params() const { return params_; }

  std::size_t dim() const {
    return kind_ == Kind::circular ? params_->n : target_->dim();
  }

  /// Curve point at normalized parameter u in [0,1] (u = 1 is the target).
  HeisPoint at(double u) const {
    switch (kind_) {
      case Kind::segment: {
        const std::size_t n = target_->dim();
        std::vector<double> x(n), y(n);
        for (std::size_t j = 0; j < n; ++j) {
          x[j] = u * target_->x(j);
          y[j] = u * target_->y(j);
        }
        return HeisPoint(std::move(x), std::move(y), 0.0);
      }
      case Kind::null_curve:
        return *target_;
      case Kind::circular:
      default: {
        const GeodesicParams& p = *params_;
        const double s = u * p.s_end;
        const double omc = one_minus_cos_2pi(s);
        const double sgs = static_cast<double>(p.sign) * sin_2pi(s);
        std::vector<double> x(p.n), y(p.n);
        for (std::size_t j = 0; j < p.n; ++j) {
          x[j] = p.A[j] * omc - p.B[j] * sgs;
          y[j] = p.B[j] * omc + p.A[j] * sgs;
        }
        const double t = p.sign * p.T * (s - sin_2pi(s) / two_pi);
        return HeisPoint(std::move(x), std::move(y), t);
      }
    }
  }

  HeisPoint endpoint() const { return at(1.0); }

  /// Exact curve length (the cc distance from the origin to the endpoint).
  double length() const {
    switch (kind_) {
      case Kind::segment:
        return target_->z_norm();
      case Kind::null_curve:
        return 0.0;
      case Kind::circular:
      default:
        return params_->s_end * std::sqrt(pi * params_->T);
    }
  }

  /// Uniform sampling into a horizontal curve with M panels.
  HorizontalCurve sample(std::size_t M) const {
    require(M >= 2, "Geodesic::sample: need M >= 2");
    const std::size_t n = dim();
    std::vector<double> data((M + 1) * 2 * n);
    std::vector<double> t(M + 1);
    for (std::size_t k = 0; k <= M; ++k) {
      const HeisPoint pt = at(static_cast<double>(k) / static_cast<double>(M));
      for (std::size_t j = 0; j < n; ++j) {
        data[k * 2 * n + j] = pt.x(j);
        data[k * 2 * n + n + j] = pt.y(j);
      }
      t[k] = pt.t();
    }
    const bool closed =
        kind_ == Kind::null_curve || (kind_ == Kind::circular && params_->s_end == 1.0);
    return HorizontalCurve(PlanarCurve(n, std::move(data), closed), std::move(t));
  }

 private:
  Kind kind_ = Kind::null_curve;
  std::optional<GeodesicParams> params_;
  std::optional<HeisPoint> target_;
};

/// Geodesic from the origin to (0, 0, sign*T) with T = 4 pi sum (A_j^2+B_j^2).
inline Geodesic geodesic_to_axis(std::vector<double> A, std::vector<double> B, int sign) {
  require(!A.empty() && A.size() == B.size(), "geodesic_to_axis: bad parameter vectors");
  require(sign == 1 || sign == -1, "geodesic_to_axis: sign must be +1 or -1");
  GeodesicParams p;
  p.n = A.size();
  p.A = std::move(A);
  p.B = std::move(B);
  p.sign = sign;
  p.s_end = 1.0;
  p.T = 4.0 * pi * p.radius_sq();
  require(p.T > 0.0, "geodesic_to_axis: (A,B) must be nonzero");
  return Geodesic::circular(std::move(p));
}

namespace detail {
// Fallback threshold: beyond H(1 - 1e-9) the cut parameter is numerically 1
// and the t-axis formula takes over.
inline double h_guard() {
  static const double g = h_eval(1.0 - 1e-9);
  return g;
}
}  // namespace detail

/// Carnot-Caratheodory distance from the origin,
///   d0(z,h) = h sin(pi s0)/|z| + |z| cos(pi s0),  s0 = H^-1(h/|z|^2),
/// with d0 = sqrt(pi |h|) on the t-axis and d0 = |z| in the plane h = 0.
inline double distance_from_origin(const HeisPoint& q) {
  const double az = q.z_norm();
  const double h = q.t();
  if (az == 0.0) return std::sqrt(pi * std::fabs(h));
  const double v = h / (az * az);
  if (std::fabs(v) > detail::h_guard()) return std::sqrt(pi * std::fabs(h));
  const double s0 = h_inverse(v);
  return h * sin_pi(s0) / az + az * cos_pi(s0);
}

/// Same distance through the arc-length form  2 pi s0 |z| / sqrt(2(1-cos 2 pi s0)).
inline double distance_from_origin_arc(const HeisPoint& q) {
  const double az = q.z_norm();
  const double h = q.t();
  if (az == 0.0) return std::sqrt(pi * std::fabs(h));
  const double v = h / (az * az);
  if (std::fabs(v) > detail::h_guard()) return std::sqrt(pi * std::fabs(h));
  const double s0 = std::fabs(h_inverse(v));
  if (s0 == 0.0) return az;
  return pi * s0 * az / sin_pi(s0);
}

/// d_cc(p, q) = d0(q^-1 * p); symmetric and left-invariant.
inline double distance(const HeisPoint& p, const HeisPoint& q) {
  require(p.dim() == q.dim(), "distance: dimension mismatch");
  return distance_from_origin(group_mul(inverse(q), p));
}

/**
 * Geodesic from the origin to q.
 *
 * Off the plane and off the axis the unique geodesic is the cut of an axis
 * geodesic:  s0 = H^-1(h/|z|^2)  and  A+iB = z / (1 - e^{-sign 2 pi i s0}).
 * Planar targets take the straight segment; axis targets take the canonical
 * representative A = (sqrt(T/4pi), 0, ..., 0), B = 0 of the rotation family.
 */
inline Geodesic geodesic_to_point(const HeisPoint& q) {
  const std::size_t n = q.dim();
  const double az = q.z_norm();
  const double h = q.t();

  if (az == 0.0 && h == 0.0) return Geodesic::constant(n);
  if (h == 0.0) return Geodesic::straight_segment(q);

  const int sign = h > 0.0 ? +1 : -1;
  if (az == 0.0) {
    GeodesicParams p;
    p.n = n;
    p.A.assign(n, 0.0);
    p.B.assign(n, 0.0);
    p.A[0] = std::sqrt(std::fabs(h) / (4.0 * pi));
    p.sign = sign;
    p.T = std::fabs(h);
    p.s_end = 1.0;
    return Geodesic::circular(std::move(p));
  }

  const double s0 = std::fabs(h_inverse(h / (az * az)));
  // 1 - e^{-sign 2 pi i s0}
  const cplx denom(one_minus_cos_2pi(s0), static_cast<double>(sign) * sin_2pi(s0));
  GeodesicParams p;
  p.n = n;
  p.A.resize(n);
  p.B.resize(n);
  for (std::size_t j = 0; j < n; ++j) {
    const cplx ab = q.z(j) / denom;
    p.A[j] = ab.real();
    p.B[j] = ab.imag();
  }
  p.sign = sign;
  p.T = 4.0 * pi * p.radius_sq();
  p.s_end = s0;
  return Geodesic::circular(std::move(p));
}

/// Dense complex n x n matrix, column-major.
struct UnitaryMatrix {
  std::size_t n = 0;
  std::vector<cplx> a;  // a[i + j*n] = entry (row i, col j)

  cplx operator()(std::size_t i, std::size_t j) const { return a[i + j * n]; }
  cplx& operator()(std::size_t i, std::size_t j) { return a[i + j * n]; }

  std::vector<cplx> apply(const std::vector<cplx>& v) const {
    std::vector<cplx> out(n, cplx{0.0, 0.0});
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t i = 0; i < n; ++i) out[i] += a[i + j * n] * v[j];
    return out;
  }

  /// max |(U* U - I)_{ij}|
  double unitarity_defect() const {
    double worst = 0.0;
    for (std::size_t c1 = 0; c1 < n; ++c1)
      for (std::size_t c2 = 0; c2 < n; ++c2) {
        cplx dot{0.0, 0.0};
        for (std::size_t i = 0; i < n; ++i) dot += std::conj(a[i + c1 * n]) * a[i + c2 * n];
        if (c1 == c2) dot -= 1.0;
        worst = std::max(worst, std::abs(dot));
      }
    return worst;
  }
};

/// Unitary W_z with first column z/|z|, completed by Gram-Schmidt over the
/// standard basis (greedy pick of the largest residual, re-orthogonalized).
inline UnitaryMatrix unitary_extend(const std::vector<cplx>& z) {
  const std::size_t n = z.size();
  require(n >= 1, "unitary_extend: empty vector");
  double nz = 0.0;
  for (const cplx& c : z) nz += std::norm(c);
  nz = std::sqrt(nz);
  require(nz > 0.0, "unitary_extend: zero vector");

  UnitaryMatrix w;
  w.n = n;
  w.a.assign(n * n, cplx{0.0, 0.0});
  for (std::size_t i = 0; i < n; ++i) w.a[i] = z[i] / nz;

  auto orthogonalize = [&](std::vector<cplx>& v, std::size_t ncols) {
    for (int pass = 0; pass < 2; ++pass)
      for (std::size_t c = 0; c < ncols; ++c) {
        cplx dot{0.0, 0.0};
        for (std::size_t i = 0; i < n; ++i) dot += std::conj(w.a[i + c * n]) * v[i];
        for (std::size_t i = 0; i < n; ++i) v[i] -= dot * w.a[i + c * n];
      }
  };

  std::vector<bool> used(n, false);
  for (std::size_t col = 1; col < n; ++col) {
    std::vector<cplx> best;
    double best_norm = -1.0;
    std::size_t best_i = 0;
    for (std::size_t i = 0; i < n; ++i) {
      if (used[i]) continue;
      std::vector<cplx> v(n, cplx{0.0, 0.0});
      v[i] = 1.0;
      orthogonalize(v, col);
      double vn = 0.0;
      for (const cplx& c : v) vn += std::norm(c);
      vn = std::sqrt(vn);
      if (vn > best_norm) {
        best_norm = vn;
        best = std::move(v);
        best_i = i;
      }
    }
    used[best_i] = true;
    for (std::size_t i = 0; i < n; ++i) w.a[i + col * n] = best[i] / best_norm;
  }
  return w;
}

/// Unitary U = W_{C+iD} W_{A+iB}^-1 mapping the parameter vector of g1 onto
/// that of g2; (z,t) -> (Uz, t) then carries the first geodesic onto the second.
inline UnitaryMatrix align_geodesics(const GeodesicParams& g1, const GeodesicParams& g2) {
  require(g1.n == g2.n, "align_geodesics: dimension mismatch");
  require(g1.sign == g2.sign, "align_geodesics: sign mismatch");
  require(std::fabs(g1.T - g2.T) <= 1e-10 * (1.0 + std::max(g1.T, g2.T)),
          "align_geodesics: endpoint heights differ");
  const std::size_t n = g1.n;
  std::vector<cplx> z1(n), z2(n);
  for (std::size_t j = 0; j < n; ++j) {
    z1[j] = {g1.A[j], g1.B[j]};
    z2[j] = {g2.A[j], g2.B[j]};
  }
  const UnitaryMatrix w1 = unitary_extend(z1);
  const UnitaryMatrix w2 = unitary_extend(z2);
  UnitaryMatrix u;
  u.n = n;
  u.a.assign(n * n, cplx{0.0, 0.0});
  // U = W2 * W1^dagger
  for (std::size_t jj = 0; jj < n; ++jj)
    for (std::size_t ii = 0; ii < n; ++ii) {
      cplx s{0.0, 0.0};
      for (std::size_t k = 0; k < n; ++k) s += w2.a[ii + k * n] * std::conj(w1.a[jj + k * n]);
      u.a[ii + jj * n] = s;
    }
  return u;
}

/// (z, t) -> (Uz, t) applied samplewise.
inline HorizontalCurve apply_unitary(const UnitaryMatrix& u, const HorizontalCurve& c) {
  require(u.n == c.dim(), "apply_unitary: dimension mismatch");
  const std::size_t n = c.dim();
  const std::size_t M = c.panels();
  std::vector<double> data((M + 1) * 2 * n);
  for (std::size_t k = 0; k <= M; ++k) {
    std::vector<cplx> zk(n);
    for (std::size_t j = 0; j < n; ++j) zk[j] = c.base().z(k, j);
    const std::vector<cplx> wz = u.apply(zk);
    for (std::size_t j = 0; j < n; ++j) {
      data[k * 2 * n + j] = wz[j].real();
      data[k * 2 * n + n + j] = wz[j].imag();
    }
  }
  return HorizontalCurve(PlanarCurve(n, std::move(data), c.base().closed()),
                         std::vector<double>(c.t()));
}

}  // namespace heisgeo
