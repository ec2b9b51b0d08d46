// SPDX-License-Identifier: Apache-2.0
//
// Reference integrators for the tests, kept separate from the library's
// adaptive quadrature so that the two can check each other.
#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <numbers>
#include <vector>

namespace oracle {

/// Composite Simpson rule with n (even) panels.
template <class F>
double simpson(const F& f, double a, double b, std::size_t n = 200'000) {
  if (n % 2 != 0) ++n;
  const double h = (b - a) / static_cast<double>(n);
  double odd = 0.0;
  double even = 0.0;
  for (std::size_t i = 1; i < n; ++i) {
    const double v = f(a + h * static_cast<double>(i));
    (i % 2 == 1 ? odd : even) += v;
  }
  return h / 3.0 * (f(a) + f(b) + 4.0 * odd + 2.0 * even);
}

/// Midpoint rule with n panels.
template <class F>
double midpoint(const F& f, double a, double b, std::size_t n) {
  const double h = (b - a) / static_cast<double>(n);
  double sum = 0.0;
  for (std::size_t i = 0; i < n; ++i) sum += f(a + h * (static_cast<double>(i) + 0.5));
  return sum * h;
}

/// Integral of f over [a, b] when f behaves like sqrt(x - a) near a: the
/// substitution x = a + u^2 makes the integrand smooth.
template <class F>
double simpson_sqrt_left(const F& f, double a, double b, std::size_t n = 200'000) {
  auto g = [&](double u) { return 2.0 * u * f(a + u * u); };
  return simpson(g, 0.0, std::sqrt(b - a), n);
}

/// Simpson over consecutive breakpoints.
template <class F>
double simpson_pieces(const F& f, const std::vector<double>& pts, std::size_t n = 200'000) {
  double total = 0.0;
  for (std::size_t i = 0; i + 1 < pts.size(); ++i) {
    if (pts[i + 1] > pts[i]) total += simpson(f, pts[i], pts[i + 1], n);
  }
  return total;
}

/// Tanh-sinh rule on (a, b); tolerates integrable power singularities at
/// both ends. f receives the abscissa and its distances to a and b.
template <class F>
double tanh_sinh(const F& f, double a, double b, double h = 1.0 / 128) {
  const double half = 0.5 * (b - a);
  double sum = 0.0;
  for (int k = -static_cast<int>(6.0 / h); k <= static_cast<int>(6.0 / h); ++k) {
    const double t = k * h;
    const double u = 0.5 * std::numbers::pi * std::sinh(t);
    const double c = std::cosh(u);
    // 1 - tanh(u) and 1 + tanh(u) without cancellation.
    const double lo = std::exp(-u) / c;
    const double hi = std::exp(u) / c;
    const double weight = 0.5 * std::numbers::pi * std::cosh(t) / (c * c);
    const double dl = half * hi;  // x - a
    const double dr = half * lo;  // b - x
    if (dl <= 0.0 || dr <= 0.0) continue;
    const double x = dl < dr ? a + dl : b - dr;
    const double v = f(x, dl, dr) * weight;
    if (std::isfinite(v)) sum += v;
  }
  return sum * h * half;
}

inline double rel_diff(double a, double b) {
  const double scale = std::max(std::abs(a), std::abs(b));
  return scale == 0.0 ? 0.0 : std::abs(a - b) / scale;
}

}  // namespace oracle
