// Copyright (c) annulus-toolkit contributors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <map>
#include <vector>

#include "annulus/complex_matrix.hpp"

namespace annulus {

/// The four weighted bilateral sequence spaces used by the shift models.
/// weight(n) is the squared norm of the coordinate basis vector at index n.
///   ell2_r:       1/(1-r^2) for n >= 0,     r^{-2n-2}/(1-r^2) for n <= -1
///   ell2_r_minus: (1-r^2)/r^{2n} for n >= 0, (1-r^2) for n <= -1
///   ell2_a:       1/(1 + a^2 r^{-2n-2})
///   ell2_a_dual:  1 + a^2 r^{2n}
enum class WeightKind { ell2_r, ell2_r_minus, ell2_a, ell2_a_dual };

enum class ShiftDirection { forward, backward };  // g_n = f_{n-1} / g_n = f_{n+1}

struct WeightFamily {
  WeightKind kind = WeightKind::ell2_r;
  double r = 0.5;
  double a = 0.0;  // used by the ell2_a kinds only

  static WeightFamily make(WeightKind kind, double r, double a = 0.0);

  /// Throws Error if the weight under- or overflows at this index.
  double weight(long n) const;

  /// weight(to) / weight(from) for adjacent indices, evaluated in a closed
  /// form that stays finite for any window.
  double adjacent_ratio(long from, ShiftDirection direction) const;
};

/// Finitely supported two-sided sequence of complex vectors of length
/// dim_e. Exactly-zero vectors are never stored.
class SeqVector {
 public:
  explicit SeqVector(int dim_e) : dim_e_(dim_e) {}

  static SeqVector delta(long n, Complex value);           // scalar basis sequence
  static SeqVector delta(long n, const CVector& value);

  int dim_e() const { return dim_e_; }
  const std::map<long, CVector>& terms() const { return terms_; }
  bool empty() const { return terms_.empty(); }

  void set(long n, const CVector& value);
  const CVector* at(long n) const;

 private:
  int dim_e_ = 1;
  std::map<long, CVector> terms_;
};

/// sum_n weight(n) ||f_n||^2; exact finite sum.
double seq_norm2(const SeqVector& f, const WeightFamily& w);

SeqVector shift_forward(const SeqVector& f);   // g_n = f_{n-1}
SeqVector shift_backward(const SeqVector& f);  // g_n = f_{n+1}

/// (1+rho^2) ||Sf||^2_w - ||S^2 f||^2_w - rho^2 ||f||^2_w for the chosen
/// shift S; exact finite arithmetic. For (ell2_r, backward, rho = r) this
/// equals ||f_0||^2 identically.
double hereditary_form_on_shift(const SeqVector& f, const WeightFamily& w,
                                ShiftDirection direction, double rho);

/// Per-coefficient bracket of the same form: the multiplier of ||f_n||^2.
/// The total form is the weighted sum of brackets over the support.
double hereditary_bracket(const WeightFamily& w, ShiftDirection direction, double rho, long n);

/// sum_n <f_n, g_{-n-1}>; pairs index n with -n-1. Under this pairing each
/// shift is dual to the same-direction shift on the partner space:
/// <S f, g> = <f, S g> exactly, for S either shift.
Complex duality_pairing(const SeqVector& f, const SeqVector& g);

/// Inclusion of the r-weighted space into the a-weighted one, identity on
/// coefficients.
SeqVector j_a_apply(const SeqVector& f, double r, double a);

/// Closed forms ||J_a||^2 = (1-r^2)/min{a^2 r^{-2}, 1} and
/// ||J_a^{-1}||^2 = (1 + a^2 r^{-2})/(1-r^2).
struct JaNorms {
  double norm2 = 0.0;
  double inv_norm2 = 0.0;
};
JaNorms j_a_norms(double r, double a);

/// Brute-force value of the same two sups over basis ratios restricted to
/// |n| <= window; both sups are monotone in the tail, so a window this wide
/// matches the closed forms to full precision for moderate r.
JaNorms j_a_norms_windowed(double r, double a, long window = 200);

/// K_a = ||J_a|| * ||J_a^{-1}||; minimized exactly at a = r with value
/// sqrt(2).
double k_a(double r, double a);

/// Geometric grid scan of K_a centered at a = r.
struct KaGridResult {
  std::vector<double> a_values;
  std::vector<double> k_values;
  int argmin = 0;
  double min_k = 0.0;
};
KaGridResult k_a_grid_min(double r, double span_decades = 2.0, int count = 81);

/// Matrix of the shift compressed to the coordinate window [n_min, n_max]
/// with respect to the orthonormalized basis e_n / sqrt(weight(n)).
/// Boundary columns are truncated, so the matrix is never invertible;
/// boundary_defect records that.
struct WindowCompression {
  CMatrix matrix;
  double r = 0.5;
  bool boundary_defect = true;
};
WindowCompression window_compression(const WeightFamily& w, ShiftDirection direction, long n_min,
                                     long n_max, int dim_e = 1);

}  // namespace annulus
