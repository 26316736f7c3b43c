// Copyright (c) annulus-toolkit contributors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <optional>
#include <vector>

#include "annulus/complex_matrix.hpp"
#include "annulus/linalg.hpp"

namespace annulus {

/// An invertible operator T together with the inner radius r of the annulus
/// r < |z| < 1 it is analyzed against. Squareness, finiteness and the r
/// range are checked at construction; invertibility is enforced lazily by
/// the operations that need T^{-1}.
struct OperatorInstance {
  CMatrix t;
  double r = 0.5;

  static OperatorInstance make(CMatrix t, double r);
  int dim() const { return t.rows(); }
};

enum class Verdict { In, Out, Borderline };

/// Three-valued membership report. margin is oriented positive-inside
/// (minimum eigenvalue of the form, or norm slack); tolerance is the
/// effective absolute threshold. Borderline means |margin| <= tolerance,
/// so class membership in the closed (non-strict) sense is verdict != Out.
struct Membership {
  Verdict verdict = Verdict::Borderline;
  double margin = 0.0;
  double tolerance = 0.0;

  bool in_class() const { return verdict != Verdict::Out; }
};

Membership classify_margin(double margin, double tolerance);

/// Hereditary form of the polynomial (1-t)(t-r^2) with adjoints on the
/// left: -T*^2 T^2 + (1+r^2) T*T - r^2 I, symmetrized after assembly.
CMatrix alpha_form(const OperatorInstance& op);

/// Same with parameter s in place of r: -T*^2 T^2 + (1+s^2) T*T - s^2 I.
CMatrix beta_form(const OperatorInstance& op, double s);

/// PSD test of alpha_form; margin is its minimum eigenvalue.
Membership is_in_c_alpha(const OperatorInstance& op, double tol = kDefaultTol);

/// PSD test of beta_form.
Membership is_in_c_beta(const OperatorInstance& op, double s, double tol = kDefaultTol);

/// ||T|| <= 1 and ||T^{-1}|| <= 1/r; margin is the smaller slack
/// min(1 - ||T||, 1/r - ||T^{-1}||).
Membership is_in_c_1r(const OperatorInstance& op, double tol = kDefaultTol);

/// (T, r) -> (r T^{-1}, r); an involution up to rounding.
OperatorInstance invert_scale(const OperatorInstance& op);

/// Defect operator D = psd_sqrt(alpha_form) and the associated data.
struct DefectData {
  CMatrix alpha;                       // symmetrized hereditary form
  CMatrix d;                           // PSD square root
  int defect_rank = 0;                 // eigenvalues above tol * scale
  std::optional<CMatrix> defect_basis; // orthonormal columns spanning range(D)
  double min_eig = 0.0;                // positivity margin of alpha
  double reflection_residual = 0.0;    // || r^{-2} (T^2)* D~^2 T^2 - D^2 ||
};

/// Throws NotPsdError when is_in_c_alpha is Out. The reflection residual
/// cross-checks D against the defect D~ of (r T^{-1}, r) through the exact
/// identity r^{-2} ||D~ T^2 x||^2 = ||D x||^2.
DefectData defect(const OperatorInstance& op, double tol = kDefaultTol);

/// Spectral-rank bookkeeping shared by defect(): clip negatives of a
/// hermitian form and report rank/basis against tol * max(1, ||form||).
struct FormRank {
  int rank = 0;
  double min_eig = 0.0;
  double scale = 1.0;
  std::optional<CMatrix> basis;
};
FormRank form_rank(const CMatrix& herm_form, double tol = kDefaultTol);

/// Diagnostics for the alpha(T*,T) = 0 case: such operators are normal with
/// every eigenvalue modulus at r or 1.
struct ZeroDefectReport {
  bool is_zero_defect = false;
  bool is_normal = false;
  std::vector<double> eigenvalue_moduli;
  double alpha_norm = 0.0;
  double commutator_norm = 0.0;       // ||T*T - TT*||
  double max_modulus_deviation = 0.0; // max distance of |lambda| from {r, 1}
};

ZeroDefectReport classify_zero_defect(const OperatorInstance& op, double tol = kDefaultTol);

}  // namespace annulus
