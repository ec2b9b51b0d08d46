// SPDX-License-Identifier: Apache-2.0
#include "spout/special.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <string>
#include <utility>
#include <vector>

#include "spout/error.hpp"

namespace spout {

using std::numbers::pi;

namespace {

constexpr double eps = std::numeric_limits<double>::epsilon();

bool is_nonpositive_integer(double v) { return v <= 0.0 && v == std::floor(v); }

double rgamma(double v) {
  if (is_nonpositive_integer(v)) return 0.0;
  return 1.0 / std::tgamma(v);
}

// Power series of 2F1 for 0 <= z < 1.
double series_2f1(double a, double b, double c, double z, long max_terms) {
  double term = 1.0;
  double sum = 1.0;
  int small = 0;
  for (long n = 0; n < max_terms; ++n) {
    term *= (a + n) * (b + n) / ((c + n) * (n + 1.0)) * z;
    sum += term;
    if (term == 0.0) return sum;
    if (std::abs(term) <= eps * std::abs(sum)) {
      // Two quiet terms in a row guard against a transient dip.
      if (++small == 2) return sum;
    } else {
      small = 0;
    }
  }
  throw NumericError("2F1 series did not converge within " + std::to_string(max_terms) +
                         " terms",
                     sum);
}

// Euler integral; needs c > b > 0. The integrand peaks at t = 1 on a scale w,
// so breakpoints are graded geometrically toward it.
double euler_2f1(double a, double b, double c, double z, double w) {
  auto f = [=](double t) {
    return std::pow(t, b - 1.0) * std::pow(1.0 - t, c - b - 1.0) * std::pow(w + z * (1.0 - t), -a);
  };
  std::vector<double> points{0.0};
  for (double gap = 0.5; gap > 0.1 * w && gap > 1e-300; gap *= 0.125) points.push_back(1.0 - gap);
  points.push_back(1.0);
  const QuadResult q = integrate_pieces(f, points, QuadControl{0.0, 1e-14, 2000});
  const double scale = std::exp(std::lgamma(c) - std::lgamma(b) - std::lgamma(c - b));
  if (!(q.abs_error <= 1e-12 * std::abs(q.value))) {
    throw NumericError("2F1 Euler integral did not converge", scale * q.value);
  }
  return scale * q.value;
}

// 2F1(a, b; c; z) for z in [0, 1), with w = 1 - z supplied separately so that
// it keeps its precision when z rounds to 1.
double hyp2f1_unit(double a, double b, double c, double z, double w) {
  constexpr double switch_point = 0.75;
  const double s = c - a - b;
  const bool degenerate = std::abs(s - std::round(s)) < 1e-6;
  if (z <= switch_point) return series_2f1(a, b, c, z, 10'000'000);
  if (degenerate) {
    auto usable = [c](double v) { return c > v && v > 0.0; };
    if (usable(a) && (!usable(b) || a > b)) std::swap(a, b);
    if (usable(b)) return euler_2f1(a, b, c, z, w);
    return series_2f1(a, b, c, z, 10'000'000);
  }
  const double first = std::tgamma(c) * std::tgamma(s) * rgamma(c - a) * rgamma(c - b) *
                       series_2f1(a, b, 1.0 - s, w, 100'000);
  const double second = std::pow(w, s) * std::tgamma(c) * std::tgamma(-s) * rgamma(a) *
                        rgamma(b) * series_2f1(c - a, c - b, 1.0 + s, w, 100'000);
  return first + second;
}

void check_channel(double alpha, double beta) {
  if (!(alpha > 2.0) || !std::isfinite(alpha)) throw DomainError("alpha must be > 2");
  if (!(beta > 0.0) || !std::isfinite(beta)) throw DomainError("beta must be finite and > 0");
}

}  // namespace

double gauss_2f1(double a, double b, double c, double x) {
  if (is_nonpositive_integer(c)) {
    throw DomainError("2F1 is undefined for c a non-positive integer");
  }
  if (!(x <= 0.0)) throw DomainError("gauss_2f1 supports x <= 0 only");
  if (x == 0.0) return 1.0;
  // Pfaff: 2F1(a, b; c; x) = (1 - x)^-a 2F1(a, c - b; c; x / (x - 1)).
  const double z = x / (x - 1.0);
  const double w = 1.0 / (1.0 - x);
  return std::pow(1.0 - x, -a) * hyp2f1_unit(a, c - b, c, z, w);
}

double psi(double k, double y, double alpha, double beta, PsiMethod how,
           const QuadControl& quad) {
  check_channel(alpha, beta);
  if (!(y >= 0.0)) throw DomainError("psi requires y >= 0");
  if (!(alpha + k > -1.0)) {
    throw DomainError("psi diverges at 0 for alpha + k <= -1; use psi_diff");
  }
  if (y == 0.0) return 0.0;
  if (how == PsiMethod::quadrature) {
    auto f = [=](double r) { return std::pow(r, alpha + k) / (1.0 + std::pow(r, alpha) / beta); };
    return integrate(f, 0.0, y, quad).value;
  }
  const double s = (1.0 + k) / alpha;
  return std::pow(y, alpha + k + 1.0) / (1.0 + k + alpha) *
         gauss_2f1(1.0, s + 1.0, s + 2.0, -std::pow(y, alpha) / beta);
}

double psi_diff(double k, double y0, double y1, double alpha, double beta,
                const QuadControl& quad) {
  check_channel(alpha, beta);
  if (!(y0 <= y1)) throw DomainError("psi_diff requires y0 <= y1");
  if (!(y0 > 0.0) && !(y0 == 0.0 && alpha + k > -1.0)) {
    throw DomainError("psi_diff requires y0 > 0 when alpha + k <= -1");
  }
  if (y0 == y1) return 0.0;
  auto f = [=](double r) { return std::pow(r, alpha + k) / (1.0 + std::pow(r, alpha) / beta); };
  return integrate(f, y0, y1, quad).value;
}

KernelValue big_k_diff(double y0, double y1, double r_c, double alpha, double beta,
                       const SeriesControl& ctl, const QuadControl& quad) {
  check_channel(alpha, beta);
  if (ctl.max_terms < 1 || !(ctl.rel_tol > 0.0)) {
    throw DomainError("series control needs max_terms >= 1 and rel_tol > 0");
  }
  if (!(r_c > 0.0)) throw DomainError("big_k_diff requires r_c > 0");
  if (!(y0 >= r_c)) throw DomainError("big_k_diff requires y0 >= r_c");
  if (!(y1 >= y0)) throw DomainError("big_k_diff requires y1 >= y0");
  if (y0 == y1) return {};

  KernelValue out;
  auto accumulate = [&](const QuadResult& q) {
    out.quad_error += q.abs_error;
    return q.value;
  };
  auto weight = [=](double r) { return std::pow(r, alpha + 1.0) / (1.0 + std::pow(r, alpha) / beta); };

  double value = 0.5 * pi * accumulate(integrate(weight, y0, y1, quad));
  // c_n = (2n)! / (4^n (n!)^2 (2n + 1)); the Psi_{-2n} difference carries
  // r_c^(2n+1), folded into the integrand as r_c (r_c / r)^(2n).
  double central = 1.0;  // (2n)! / (4^n (n!)^2)
  int terms = 0;
  for (int n = 0; n < ctl.max_terms; ++n) {
    if (n > 0) central *= (2.0 * n - 1.0) / (2.0 * n);
    const double coeff = central / (2.0 * n + 1.0);
    auto integrand = [=](double r) {
      return r_c * std::pow(r_c / r, 2.0 * n) * std::pow(r, alpha) /
             (1.0 + std::pow(r, alpha) / beta);
    };
    const double term = coeff * accumulate(integrate(integrand, y0, y1, quad));
    value -= term;
    terms = n + 1;
    if (std::abs(term) <= ctl.rel_tol * std::abs(value)) break;
  }

  if (ctl.tail == SeriesTail::remainder) {
    // arcsin(x) minus its first `terms` Taylor terms, integrated against the
    // weight in theta = arccos(r_c / r), which removes the sqrt behaviour at r_c.
    auto remainder = [=](double theta) {
      const double x = std::cos(theta);
      double central_n = 1.0;
      double power = x;
      double partial = 0.0;
      for (int n = 0; n < terms; ++n) {
        if (n > 0) central_n *= (2.0 * n - 1.0) / (2.0 * n);
        partial += central_n / (2.0 * n + 1.0) * power;
        power *= x * x;
      }
      const double r = r_c / x;
      const double jacobian = r_c * std::sin(theta) / (x * x);
      return weight(r) * ((0.5 * pi - theta) - partial) * jacobian;
    };
    const double t0 = std::acos(std::min(1.0, r_c / y0));
    const double t1 = std::acos(std::min(1.0, r_c / y1));
    value -= accumulate(integrate(remainder, t0, t1, quad));
  }
  out.value = value;
  out.terms = terms;
  return out;
}

KernelValue big_k_diff_quadrature(double y0, double y1, double r_c, double alpha, double beta,
                                  const QuadControl& quad) {
  check_channel(alpha, beta);
  if (!(r_c > 0.0) || !(y0 >= r_c) || !(y1 >= y0)) {
    throw DomainError("big_k_diff_quadrature requires 0 < r_c <= y0 <= y1");
  }
  auto integrand = [=](double theta) {
    const double x = std::cos(theta);
    const double r = r_c / x;
    return std::pow(r, alpha + 1.0) / (1.0 + std::pow(r, alpha) / beta) * theta * r_c *
           std::sin(theta) / (x * x);
  };
  const double t0 = std::acos(std::min(1.0, r_c / y0));
  const double t1 = std::acos(std::min(1.0, r_c / y1));
  const QuadResult q = integrate(integrand, t0, t1, quad);
  return KernelValue{q.value, 0, q.abs_error};
}

double phi(double x, double alpha, double beta) {
  check_channel(alpha, beta);
  if (!(x >= 0.0)) throw DomainError("phi requires x >= 0");
  if (x == 0.0) return 0.0;
  const double s = 2.0 / alpha;
  return -x * x * gauss_2f1(1.0, s, 1.0 + s, -std::pow(x, alpha) / beta);
}

double plane_limit_phi(double alpha, double beta) {
  if (!(alpha > 2.0)) throw DomainError("plane limit diverges for alpha <= 2");
  if (!(beta > 0.0)) throw DomainError("beta must be > 0");
  const double angle = 2.0 * pi / alpha;
  return -angle * std::pow(beta, 2.0 / alpha) / std::sin(angle);
}

double corner_term(double x, int sides) {
  if (sides < 3) throw DomainError("corner_term requires L >= 3");
  const double L = sides;
  return x * x * (0.5 * L * std::sin(2.0 * pi / L) - pi);
}

KernelValue theta(double r_in, double r_c, double r_out, int sides, double alpha, double beta,
                  const SeriesControl& ctl, const QuadControl& quad) {
  if (sides < 3) throw DomainError("theta requires L >= 3");
  if (!(0.0 <= r_in && r_in <= r_c && r_c <= r_out)) {
    throw DomainError("theta requires 0 <= r_in <= r_c <= r_out");
  }
  KernelValue k;
  if (r_c < r_out) k = big_k_diff(r_c, r_out, r_c, alpha, beta, ctl, quad);
  const double value = pi * (phi(r_out, alpha, beta) - phi(r_in, alpha, beta)) -
                       2.0 * sides / beta * k.value - corner_term(r_out, sides);
  return KernelValue{value, k.terms, k.quad_error};
}

}  // namespace spout
