#pragma once

#include <algorithm>
#include <cmath>
#include <limits>

#include "heisgeo/numeric.hpp"

namespace heisgeo {

// H(s) = (2 pi s - sin 2 pi s) / (1 - cos 2 pi s), an odd increasing real
// analytic diffeomorphism of (-1,1) onto R.  H^-1 locates the cut parameter
// of the geodesic through a given point.

namespace detail {

// Power-series quotient of H with the common (2 pi s)^2 factor removed:
//   numerator   p(u) = u/3! - u^3/5! + u^5/7! - ...
//   denominator q(u) = 1/2! - u^2/4! + u^4/6! - ...
// with u = 2 pi s; both converge fast for |s| <= 0.1 (|u| < 0.63).
struct HSeries {
  double p, dp, q, dq;  // values and d/du derivatives
};

inline HSeries h_series_terms(double u) {
  const double u2 = u * u;
  double p = 0.0, dp = 0.0, q = 0.0, dq = 0.0;
  double fact = 2.0;        // (2m+2)! running factorial, m = 0
  double upow = 1.0;        // u^(2m)
  double upow_odd = 0.0;    // u^(2m-1), zero contribution at m = 0
  double sign = 1.0;
  for (int m = 0; m < 24; ++m) {
    const double qterm = sign * upow / fact;            // u^2m / (2m+2)!
    q += qterm;
    if (m >= 1) dq += sign * (2.0 * m) * upow_odd / fact;
    const double pfact = fact * (2.0 * m + 3.0);        // (2m+3)!
    const double pterm = sign * upow * u / pfact;       // u^(2m+1) / (2m+3)!
    p += pterm;
    dp += sign * (2.0 * m + 1.0) * upow / pfact;
    if (std::fabs(pterm) < 1e-18 && std::fabs(qterm) < 1e-18 && m > 1) break;
    sign = -sign;
    upow_odd = upow * u;
    upow *= u2;
    fact *= (2.0 * m + 3.0) * (2.0 * m + 4.0);
  }
  return {p, dp, q, dq};
}

}  // namespace detail

/// H(s) for |s| < 1.  Series quotient near 0, trigonometric form elsewhere.
inline double h_eval(double s) {
  require(std::fabs(s) < 1.0, "h_eval: |s| must be < 1");
  if (std::fabs(s) <= 0.1) {
    const double u = two_pi * s;
    const auto t = detail::h_series_terms(u);
    return t.p / t.q;
  }
  const double num = two_pi * s - sin_2pi(s);
  return num / one_minus_cos_2pi(s);
}

/// dH/ds, same branch split as h_eval.
inline double h_deriv(double s) {
  require(std::fabs(s) < 1.0, "h_deriv: |s| must be < 1");
  if (std::fabs(s) <= 0.1) {
    const double u = two_pi * s;
    const auto t = detail::h_series_terms(u);
    return two_pi * (t.dp * t.q - t.p * t.dq) / (t.q * t.q);
  }
  const double den = one_minus_cos_2pi(s);
  const double num = two_pi * s - sin_2pi(s);
  return two_pi - two_pi * sin_2pi(s) * num / (den * den);
}

/**
 * Inverse of H on all of R: the unique s in (-1,1) with H(s) = v.
 *
 * Bracketed Newton with bisection fallback; the bracket exists because H is
 * strictly increasing.  Runs the residual down to the resolution the double
 * grid of s permits (s saturates at 1-ulp for |v| beyond ~1e31).
 */
inline double h_inverse(double v) {
  if (v == 0.0) return 0.0;
  if (v < 0.0) return -h_inverse(-v);

  const double s_max = std::nextafter(1.0, 0.0);
  if (h_eval(s_max) <= v) return s_max;

  // initial guess: H(s) ~ (2pi/3) s near 0,  H(s) ~ 1/(pi (1-s)^2) near 1
  double s = v < 2.0 ? 3.0 * v / (two_pi + 3.0 * v) : 1.0 - 1.0 / std::sqrt(pi * v);
  s = std::clamp(s, std::numeric_limits<double>::min(), s_max);

  double lo = 0.0, hi = s_max;
  for (int it = 0; it < 200; ++it) {
    const double f = h_eval(s) - v;
    if (f == 0.0) return s;
    (f > 0.0 ? hi : lo) = s;
    if (lo >= hi || std::nextafter(lo, 1.0) >= hi) break;  // bracket exhausted
    double snew = s - f / h_deriv(s);
    if (!(snew > lo && snew < hi)) snew = 0.5 * (lo + hi);
    if (snew == s) break;
    s = snew;
  }
  // pick the bracket endpoint with the smaller residual
  if (std::fabs(h_eval(lo) - v) < std::fabs(h_eval(s) - v)) s = lo;
  if (hi < 1.0 && std::fabs(h_eval(hi) - v) < std::fabs(h_eval(s) - v)) s = hi;
  return s;
}

}  // namespace heisgeo
