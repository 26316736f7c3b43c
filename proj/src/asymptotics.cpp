// Copyright (c) annulus-toolkit contributors.
// SPDX-License-Identifier: Apache-2.0
#include "annulus/asymptotics.hpp"

#include <algorithm>
#include <cmath>

#include "annulus/errors.hpp"

namespace annulus {

namespace {

// Limit of (A^n)* A^n by repeated squaring; valid for power-bounded A.
struct GramLimit {
  CMatrix q;
  int iterations = 0;
};

GramLimit gram_limit(const CMatrix& a, double tol, int max_doublings, const char* what) {
  CMatrix p = a;
  CMatrix q = adjoint(p) * p;
  for (int k = 1; k <= max_doublings; ++k) {
    p = p * p;
    if (max_abs(p) > 1e6)
      throw NoConvergenceError(std::string(what) + ": powers diverge (operator outside C_{1,r}?)",
                               k, max_abs(p));
    CMatrix next = adjoint(p) * p;
    const double diff = opnorm(next - q);
    q = std::move(next);
    if (diff <= tol) return {std::move(q), k};
  }
  throw NoConvergenceError(std::string(what) + ": no convergence within doubling budget",
                           max_doublings, 0.0);
}

}  // namespace

AsymptoticData limit_gramians(const OperatorInstance& op, double tol, int max_doublings) {
  AsymptoticData out;
  GramLimit plus = gram_limit(op.t, tol, max_doublings, "limit_gramians");
  const CMatrix t_inv = inverse(op.t);
  GramLimit minus = gram_limit(op.r * t_inv, tol, max_doublings, "limit_gramians");
  out.q_plus = std::move(plus.q);
  out.q_minus = std::move(minus.q);
  out.iterations = std::max(plus.iterations, minus.iterations);
  const double res_plus = opnorm(adjoint(op.t) * out.q_plus * op.t - out.q_plus);
  const double res_minus =
      opnorm((op.r * op.r) * (adjoint(t_inv) * out.q_minus * t_inv) - out.q_minus);
  out.residual = std::max(res_plus, res_minus);
  return out;
}

double l_plus(const AsymptoticData& asym, const CVector& x) { return quad_form(asym.q_plus, x); }
double l_minus(const AsymptoticData& asym, const CVector& x) { return quad_form(asym.q_minus, x); }
double l_plus(const OperatorInstance& op, const CVector& x) {
  return l_plus(limit_gramians(op), x);
}
double l_minus(const OperatorInstance& op, const CVector& x) {
  return l_minus(limit_gramians(op), x);
}

double SeriesCheck::residual() const { return std::abs(partial + remainder - rhs); }

SeriesCheck series_defect_pos(const OperatorInstance& op, const CVector& x, int n_terms) {
  return series_defect_pos(op, defect(op), limit_gramians(op), x, n_terms);
}

SeriesCheck series_defect_pos(const OperatorInstance& op, const DefectData& defect_data,
                              const AsymptoticData& asym, const CVector& x, int n_terms) {
  const double r2 = op.r * op.r;
  const double lp = l_plus(asym, x);
  SeriesCheck check;
  CVector y = x;      // T^n x
  CVector y_next = mat_vec(op.t, x);
  check.rhs = vec_norm2(y_next) - r2 * vec_norm2(y) + (r2 - 1.0) * lp;
  for (int n = 0; n < n_terms; ++n) {
    check.partial += vec_norm2(mat_vec(defect_data.d, y));
    y = std::move(y_next);
    y_next = mat_vec(op.t, y);
  }
  // After the loop y = T^N x and y_next = T^{N+1} x.
  check.remainder = vec_norm2(y_next) - r2 * vec_norm2(y) + (r2 - 1.0) * lp;
  return check;
}

SeriesCheck series_defect_neg(const OperatorInstance& op, const CVector& x, int n_terms) {
  return series_defect_neg(op, defect(op), limit_gramians(op), x, n_terms);
}

SeriesCheck series_defect_neg(const OperatorInstance& op, const DefectData& defect_data,
                              const AsymptoticData& asym, const CVector& x, int n_terms) {
  const double r2 = op.r * op.r;
  const double lm = l_minus(asym, x);
  const CMatrix rt_inv = op.r * inverse(op.t);
  SeriesCheck check;
  check.rhs = vec_norm2(x) - vec_norm2(mat_vec(op.t, x)) + (r2 - 1.0) * lm;
  // z_m = (r T^{-1})^m x stays bounded; the term at n = -m is
  // r^{-2n-2} ||D T^n x||^2 = r^{-2} ||D z_m||^2.
  CVector z_prev = x;
  CVector z = x;
  for (int m = 1; m <= n_terms; ++m) {
    z_prev = z;
    z = mat_vec(rt_inv, z);
    check.partial += vec_norm2(mat_vec(defect_data.d, z)) / r2;
  }
  check.remainder = vec_norm2(z) - r2 * vec_norm2(z_prev) + (r2 - 1.0) * lm;
  return check;
}

CMatrix defect_series_gramian(const OperatorInstance& op, const DefectData& defect_data,
                              const AsymptoticData& asym, int n_terms) {
  const int n = op.dim();
  const double r2 = op.r * op.r;
  const CMatrix identity = CMatrix::identity(n);
  const CMatrix d2 = defect_data.d * defect_data.d;

  // Positive side: sum_{k=0}^{N-1} (T^k)* D^2 T^k plus the exact tail
  // (T^N)* (T*T - r^2 I + (r^2-1) Q+) T^N.
  CMatrix sum_pos(n, n);
  CMatrix power = identity;  // T^k
  for (int k = 0; k < n_terms; ++k) {
    sum_pos = sum_pos + adjoint(power) * d2 * power;
    power = op.t * power;
  }
  const CMatrix head_pos =
      adjoint(op.t) * op.t - r2 * identity + (r2 - 1.0) * asym.q_plus;
  const CMatrix tail_pos = adjoint(power) * head_pos * power;

  // Negative side through Z_m = (r T^{-1})^m:
  // sum_{m=1}^{N} r^{-2} Z_m* D^2 Z_m plus tail
  // Z_N* Z_N - r^2 Z_{N-1}* Z_{N-1} + (r^2-1) Q-.
  const CMatrix rt_inv = op.r * inverse(op.t);
  CMatrix sum_neg(n, n);
  CMatrix z_prev = identity;
  CMatrix z = rt_inv;
  for (int m = 1; m <= n_terms; ++m) {
    sum_neg = sum_neg + (1.0 / r2) * (adjoint(z) * d2 * z);
    if (m < n_terms) {
      z_prev = z;
      z = rt_inv * z;
    }
  }
  const CMatrix tail_neg =
      adjoint(z) * z - r2 * (adjoint(z_prev) * z_prev) + (r2 - 1.0) * asym.q_minus;

  CMatrix gramian = (1.0 / (1.0 - r2)) * (sum_pos + tail_pos + sum_neg + tail_neg);
  return 0.5 * (gramian + adjoint(gramian));
}

double norm_identity_residual(const OperatorInstance& op, int n_terms) {
  return norm_identity_residual(op, defect(op), limit_gramians(op), n_terms);
}

double norm_identity_residual(const OperatorInstance& op, const DefectData& defect_data,
                              const AsymptoticData& asym, int n_terms) {
  const CMatrix gramian = defect_series_gramian(op, defect_data, asym, n_terms);
  return opnorm(CMatrix::identity(op.dim()) - gramian - asym.q_plus - asym.q_minus);
}

BrokenLine broken_line(const OperatorInstance& op, const CVector& x, int n_min, int n_max) {
  if (n_min > n_max) throw Error("broken_line(): window is empty");
  BrokenLine line;
  const double r2 = op.r * op.r;
  // Forward powers.
  std::vector<double> y(static_cast<std::size_t>(n_max - n_min) + 1, 0.0);
  CVector v = x;
  for (int n = 0; n <= n_max; ++n) {
    if (n >= n_min) y[static_cast<std::size_t>(n - n_min)] = vec_norm2(v);
    v = mat_vec(op.t, v);
  }
  if (n_min < 0) {
    const CMatrix t_inv = inverse(op.t);
    v = x;
    for (int n = -1; n >= n_min; --n) {
      v = mat_vec(t_inv, v);
      if (n <= n_max) y[static_cast<std::size_t>(n - n_min)] = vec_norm2(v);
    }
  }
  for (int n = n_min; n <= n_max; ++n) {
    line.points.push_back({n, std::pow(r2, n), y[static_cast<std::size_t>(n - n_min)]});
  }
  line.min_slack = 0.0;
  for (std::size_t i = 0; i + 2 < line.points.size(); ++i) {
    const double y0 = line.points[i].y;
    const double y1 = line.points[i + 1].y;
    const double y2 = line.points[i + 2].y;
    const double second = (1.0 + r2) * y1 - y2 - r2 * y0;
    const double scale = std::max({1.0, y0, y1, y2});
    line.min_slack = std::min(line.min_slack, second / scale);
  }
  line.concave = line.min_slack >= -1e-10;
  return line;
}

}  // namespace annulus
