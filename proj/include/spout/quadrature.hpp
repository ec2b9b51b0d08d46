// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <queue>
#include <vector>

namespace spout {

struct QuadControl {
  double abs_tol = 1e-10;
  double rel_tol = 1e-10;
  int max_subdivisions = 200;
};

struct QuadResult {
  double value = 0.0;
  double abs_error = 0.0;
  int intervals = 0;
  bool converged = true;
};

namespace detail {

// 15-point Kronrod extension of the 7-point Gauss rule on [-1, 1].
// Odd indices are the Gauss abscissae.
inline constexpr std::array<double, 8> kronrod_nodes = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};

inline constexpr std::array<double, 8> kronrod_weights = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};

inline constexpr std::array<double, 4> gauss_weights = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

struct Segment {
  double a;
  double b;
  double value;
  double error;

  bool operator<(const Segment& other) const { return error < other.error; }
};

template <class F>
Segment gauss_kronrod_15(const F& f, double a, double b) {
  const double center = 0.5 * (a + b);
  const double half = 0.5 * (b - a);
  const double fc = f(center);
  double kronrod = fc * kronrod_weights[7];
  double gauss = fc * gauss_weights[3];
  double abs_sum = std::abs(kronrod);
  std::array<double, 7> f_lo{};
  std::array<double, 7> f_hi{};
  for (int j = 0; j < 7; ++j) {
    const double dx = half * kronrod_nodes[j];
    f_lo[j] = f(center - dx);
    f_hi[j] = f(center + dx);
    const double pair = f_lo[j] + f_hi[j];
    kronrod += kronrod_weights[j] * pair;
    abs_sum += kronrod_weights[j] * (std::abs(f_lo[j]) + std::abs(f_hi[j]));
    if (j % 2 == 1) gauss += gauss_weights[j / 2] * pair;
  }
  // QUADPACK error heuristic.
  const double mean = 0.5 * kronrod;
  double asc = kronrod_weights[7] * std::abs(fc - mean);
  for (int j = 0; j < 7; ++j) {
    asc += kronrod_weights[j] * (std::abs(f_lo[j] - mean) + std::abs(f_hi[j] - mean));
  }
  asc *= std::abs(half);
  double err = std::abs((kronrod - gauss) * half);
  if (asc != 0.0 && err != 0.0) err = asc * std::min(1.0, std::pow(200.0 * err / asc, 1.5));
  const double round_floor =
      50.0 * std::numeric_limits<double>::epsilon() * abs_sum * std::abs(half);
  err = std::max(err, round_floor);
  return Segment{a, b, kronrod * half, err};
}

}  // namespace detail

/// Globally adaptive Gauss-Kronrod (7/15) integration of f over [a, b].
///
/// The segment with the largest error estimate is bisected until the summed
/// estimate meets max(abs_tol, rel_tol * |value|) or the subdivision budget
/// runs out, in which case `converged` is false and the best value is kept.
template <class F>
QuadResult integrate(const F& f, double a, double b, const QuadControl& ctl = {}) {
  if (a == b) return {};
  if (a > b) {
    QuadResult r = integrate(f, b, a, ctl);
    r.value = -r.value;
    return r;
  }
  std::priority_queue<detail::Segment> heap;
  heap.push(detail::gauss_kronrod_15(f, a, b));
  double value = heap.top().value;
  double error = heap.top().error;
  int intervals = 1;
  auto done = [&] { return error <= std::max(ctl.abs_tol, ctl.rel_tol * std::abs(value)); };
  while (!done() && intervals < ctl.max_subdivisions) {
    const detail::Segment worst = heap.top();
    const double mid = 0.5 * (worst.a + worst.b);
    if (!(mid > worst.a && mid < worst.b)) break;  // interval at machine resolution
    heap.pop();
    const detail::Segment left = detail::gauss_kronrod_15(f, worst.a, mid);
    const detail::Segment right = detail::gauss_kronrod_15(f, mid, worst.b);
    heap.push(left);
    heap.push(right);
    ++intervals;
    value += left.value + right.value - worst.value;
    error += left.error + right.error - worst.error;
  }
  const bool converged = done();
  value = 0.0;
  error = 0.0;
  for (; !heap.empty(); heap.pop()) {
    value += heap.top().value;
    error += heap.top().error;
  }
  return QuadResult{value, error, intervals, converged};
}

/// Integrates over consecutive intervals [points[i], points[i+1]].
template <class F>
QuadResult integrate_pieces(const F& f, const std::vector<double>& points,
                            const QuadControl& ctl = {}) {
  QuadResult total;
  for (std::size_t i = 0; i + 1 < points.size(); ++i) {
    const QuadResult part = integrate(f, points[i], points[i + 1], ctl);
    total.value += part.value;
    total.abs_error += part.abs_error;
    total.intervals += part.intervals;
    total.converged = total.converged && part.converged;
  }
  return total;
}

}  // namespace spout
