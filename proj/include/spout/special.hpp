// SPDX-License-Identifier: Apache-2.0
//
// Special-function kernels behind the closed-form outage expressions.
//
// With path-loss exponent alpha and threshold beta,
//
//   Psi_k(y)  = int_0^y r^(alpha+k) / (1 + r^alpha / beta) dr
//   Phi(x)    = (2 / beta) Psi_1(x) - x^2
//   K(z)-K(y) = int_y^z r^(alpha+1) / (1 + r^alpha / beta) arccos(r_c / r) dr
//   C(x)      = x^2 [L sin(2 pi / L) / 2 - pi]
//   Theta     = pi [Phi(r_out) - Phi(r_in)] - (2L / beta) [K(r_out) - K(r_c)] - C(r_out)
#pragma once

#include "spout/quadrature.hpp"

namespace spout {

/// How the arccos series in K is closed off after its explicit terms.
enum class SeriesTail {
  /// Plain truncation after max_terms terms.
  truncate,
  /// Adds the exact remainder of the arcsin series, integrated numerically.
  remainder,
};

struct SeriesControl {
  int max_terms = 25;
  double rel_tol = 1e-12;
  SeriesTail tail = SeriesTail::remainder;
};

/// Tolerances used when a special function falls back to quadrature.
inline constexpr QuadControl precise_quad{1e-15, 1e-13, 2000};

enum class PsiMethod { hypergeometric, quadrature };

/// Value of a series- or quadrature-backed kernel with its diagnostics.
struct KernelValue {
  double value = 0.0;
  int terms = 0;
  double quad_error = 0.0;
};

/// Gauss hypergeometric 2F1([a, b]; c; x) for x <= 0.
///
/// Uses the Pfaff transformation to move x onto [0, 1) and, when the image
/// is close to 1, the 1 - z connection formula. Throws DomainError for x > 0
/// or c a non-positive integer, NumericError if the series cap is reached.
double gauss_2f1(double a, double b, double c, double x);

/// Psi_k(y). Requires alpha + k > -1 so the integral converges at 0.
double psi(double k, double y, double alpha, double beta,
           PsiMethod how = PsiMethod::hypergeometric, const QuadControl& quad = precise_quad);

/// Psi_k(y1) - Psi_k(y0) by quadrature; finite for every k when y0 > 0.
double psi_diff(double k, double y0, double y1, double alpha, double beta,
                const QuadControl& quad = precise_quad);

/// K(y1) - K(y0) from the arccos Taylor series, for r_c <= y0 <= y1.
KernelValue big_k_diff(double y0, double y1, double r_c, double alpha, double beta,
                       const SeriesControl& ctl = {}, const QuadControl& quad = precise_quad);

/// K(y1) - K(y0) by direct quadrature of its defining integral.
KernelValue big_k_diff_quadrature(double y0, double y1, double r_c, double alpha, double beta,
                                  const QuadControl& quad = precise_quad);

/// Phi(x), evaluated as -x^2 2F1([1, 2/alpha]; 1 + 2/alpha; -x^alpha / beta),
/// which equals (2 / beta) Psi_1(x) - x^2 without its cancellation at large x.
double phi(double x, double alpha, double beta);

/// lim_{x -> inf} Phi(x) = -(2 pi / alpha) beta^(2/alpha) csc(2 pi / alpha).
double plane_limit_phi(double alpha, double beta);

/// C(x) for an L-sided polygon.
double corner_term(double x, int sides);

/// Theta(r_in, r_c, r_out) for an L-gon with exclusion radius r_in.
KernelValue theta(double r_in, double r_c, double r_out, int sides, double alpha, double beta,
                  const SeriesControl& ctl = {}, const QuadControl& quad = precise_quad);

}  // namespace spout
