// Copyright (c) annulus-toolkit contributors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <vector>

#include "annulus/alpha_class.hpp"
#include "annulus/complex_matrix.hpp"

namespace annulus {

/// Limit gramians representing the asymptotic quadratic forms
///   L+(T,x) = lim ||T^n x||^2        = x* Q+ x,
///   L-(T,x) = lim ||r^n T^{-n} x||^2 = x* Q- x.
/// Both are fixed points: T* Q+ T = Q+ and r^2 (T^{-1})* Q- T^{-1} = Q-.
struct AsymptoticData {
  CMatrix q_plus;
  CMatrix q_minus;
  int iterations = 0;   // doubling steps used (max over the two limits)
  double residual = 0.0;  // max of the two fixed-point residuals
};

/// Computes Q+- by repeated squaring (P <- P^2, Q = P*P) until successive
/// iterates differ by at most tol. Throws NoConvergenceError after
/// max_doublings, reporting the last difference.
AsymptoticData limit_gramians(const OperatorInstance& op, double tol = kDefaultTol,
                              int max_doublings = 60);

double l_plus(const AsymptoticData& asym, const CVector& x);
double l_minus(const AsymptoticData& asym, const CVector& x);
double l_plus(const OperatorInstance& op, const CVector& x);
double l_minus(const OperatorInstance& op, const CVector& x);

/// One side of the defect series identity: partial sum over a finite window,
/// exact closed-form remainder for the tail, and the closed-form value of
/// the full series. |partial + remainder - rhs| is the consistency residual.
struct SeriesCheck {
  double partial = 0.0;
  double remainder = 0.0;
  double rhs = 0.0;
  double residual() const;
};

/// sum_{n>=0} ||D T^n x||^2 = ||Tx||^2 - r^2 ||x||^2 + (r^2-1) L+(T,x).
/// The tail past N terms is ||T^{N+1}x||^2 - r^2 ||T^N x||^2 + (r^2-1) L+.
SeriesCheck series_defect_pos(const OperatorInstance& op, const CVector& x, int n_terms);
SeriesCheck series_defect_pos(const OperatorInstance& op, const DefectData& defect_data,
                              const AsymptoticData& asym, const CVector& x, int n_terms);

/// sum_{n<=-1} r^{-2n-2} ||D T^n x||^2 = ||x||^2 - ||Tx||^2 + (r^2-1) L-(T,x),
/// with the tail expressed through powers of the contraction r T^{-1}.
SeriesCheck series_defect_neg(const OperatorInstance& op, const CVector& x, int n_terms);
SeriesCheck series_defect_neg(const OperatorInstance& op, const DefectData& defect_data,
                              const AsymptoticData& asym, const CVector& x, int n_terms);

/// Gramian of the defect series:
///   G = 1/(1-r^2) [ sum_{n>=0} (T^n)* D^2 T^n
///                 + sum_{n<=-1} r^{-2n-2} (T^n)* D^2 T^n ],
/// summed over a finite window with exact operator-form remainders.
CMatrix defect_series_gramian(const OperatorInstance& op, const DefectData& defect_data,
                              const AsymptoticData& asym, int n_terms = 32);

/// || I - G - Q+ - Q- ||, the operator form of the norm decomposition.
double norm_identity_residual(const OperatorInstance& op, int n_terms = 32);
double norm_identity_residual(const OperatorInstance& op, const DefectData& defect_data,
                              const AsymptoticData& asym, int n_terms = 32);

/// Vertices (r^{2n}, ||T^n x||^2) for n in [n_min, n_max]. For class members
/// the broken line through them is concave in the x-coordinate.
struct BrokenPoint {
  int n = 0;
  double x = 0.0;
  double y = 0.0;
};

struct BrokenLine {
  std::vector<BrokenPoint> points;
  bool concave = true;
  // Most negative normalized second difference
  // ((1+r^2) y_{n+1} - y_{n+2} - r^2 y_n) / max(1, local scale).
  double min_slack = 0.0;
};

/// Concavity is judged by the sign of (1+r^2) y_{n+1} - y_{n+2} - r^2 y_n,
/// within 1e-10 relative; a false verdict is a finding, not an error.
BrokenLine broken_line(const OperatorInstance& op, const CVector& x, int n_min, int n_max);

}  // namespace annulus
