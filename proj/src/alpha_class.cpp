// Copyright (c) annulus-toolkit contributors.
// SPDX-License-Identifier: Apache-2.0
#include "annulus/alpha_class.hpp"

#include <algorithm>
#include <cmath>

#include "annulus/errors.hpp"

namespace annulus {

OperatorInstance OperatorInstance::make(CMatrix t, double r) {
  t.validate("OperatorInstance");
  if (!t.is_square()) throw DimMismatchError("OperatorInstance: T must be square");
  if (!(r > 0.0 && r < 1.0)) throw Error("OperatorInstance: r must lie in (0, 1)");
  return OperatorInstance{std::move(t), r};
}

Membership classify_margin(double margin, double tolerance) {
  Membership m;
  m.margin = margin;
  m.tolerance = tolerance;
  if (std::abs(margin) <= tolerance) {
    m.verdict = Verdict::Borderline;
  } else {
    m.verdict = margin > 0.0 ? Verdict::In : Verdict::Out;
  }
  return m;
}

namespace {

CMatrix hereditary_form(const CMatrix& t, double s) {
  const CMatrix t2 = t * t;
  const CMatrix form =
      (1.0 + s * s) * (adjoint(t) * t) - adjoint(t2) * t2 - (s * s) * CMatrix::identity(t.rows());
  return 0.5 * (form + adjoint(form));
}

}  // namespace

CMatrix alpha_form(const OperatorInstance& op) { return hereditary_form(op.t, op.r); }

CMatrix beta_form(const OperatorInstance& op, double s) {
  if (!(s > 0.0 && s < 1.0)) throw Error("beta_form(): s must lie in (0, 1)");
  return hereditary_form(op.t, s);
}

namespace {

Membership psd_membership(const CMatrix& form, double tol) {
  const HermEig eig = herm_eig(form);
  double top = 0.0;
  for (double v : eig.eigenvalues) top = std::max(top, std::abs(v));
  const double scale = std::max(1.0, top);
  const double min_eig = eig.eigenvalues.empty() ? 0.0 : eig.eigenvalues.front();
  return classify_margin(min_eig, tol * scale);
}

}  // namespace

Membership is_in_c_alpha(const OperatorInstance& op, double tol) {
  return psd_membership(alpha_form(op), tol);
}

Membership is_in_c_beta(const OperatorInstance& op, double s, double tol) {
  return psd_membership(beta_form(op, s), tol);
}

Membership is_in_c_1r(const OperatorInstance& op, double tol) {
  const double norm_slack = 1.0 - opnorm(op.t);
  const double inv_slack = 1.0 / op.r - opnorm(inverse(op.t));
  return classify_margin(std::min(norm_slack, inv_slack), tol);
}

OperatorInstance invert_scale(const OperatorInstance& op) {
  return OperatorInstance{op.r * inverse(op.t), op.r};
}

FormRank form_rank(const CMatrix& herm_form, double tol) {
  const HermEig eig = herm_eig(herm_form);
  const int n = herm_form.rows();
  double top = 0.0;
  for (double v : eig.eigenvalues) top = std::max(top, std::abs(v));
  FormRank out;
  out.scale = std::max(1.0, top);
  out.min_eig = eig.eigenvalues.empty() ? 0.0 : eig.eigenvalues.front();
  std::vector<int> kept;
  for (int i = 0; i < n; ++i)
    if (eig.eigenvalues[i] > tol * out.scale) kept.push_back(i);
  out.rank = static_cast<int>(kept.size());
  if (!kept.empty()) {
    CMatrix basis(n, out.rank);
    for (int c = 0; c < out.rank; ++c)
      for (int i = 0; i < n; ++i) basis(i, c) = eig.eigenvectors(i, kept[c]);
    out.basis = std::move(basis);
  }
  return out;
}

DefectData defect(const OperatorInstance& op, double tol) {
  DefectData data;
  data.alpha = alpha_form(op);
  const FormRank rank = form_rank(data.alpha, tol);
  if (rank.min_eig < -tol * rank.scale)
    throw NotPsdError("defect(): operator is outside the class (alpha form not PSD)",
                      rank.min_eig);
  data.d = psd_sqrt(data.alpha, tol);
  data.defect_rank = rank.rank;
  data.defect_basis = rank.basis;
  data.min_eig = rank.min_eig;

  // Cross-check against the reflected operator's defect.
  const OperatorInstance reflected = invert_scale(op);
  const CMatrix alpha_tilde = alpha_form(reflected);
  const CMatrix t2 = op.t * op.t;
  const CMatrix lhs = (1.0 / (op.r * op.r)) * (adjoint(t2) * alpha_tilde * t2);
  data.reflection_residual = opnorm(lhs - data.alpha);
  return data;
}

ZeroDefectReport classify_zero_defect(const OperatorInstance& op, double tol) {
  ZeroDefectReport report;
  report.alpha_norm = opnorm(alpha_form(op));
  report.is_zero_defect = report.alpha_norm <= tol;
  report.commutator_norm = opnorm(adjoint(op.t) * op.t - op.t * adjoint(op.t));
  report.is_normal = report.commutator_norm <= 1e-7;
  for (const Complex& lam : eigenvalues(op.t)) {
    const double mod = std::abs(lam);
    report.eigenvalue_moduli.push_back(mod);
    report.max_modulus_deviation =
        std::max(report.max_modulus_deviation, std::min(std::abs(mod - op.r), std::abs(mod - 1.0)));
  }
  std::sort(report.eigenvalue_moduli.begin(), report.eigenvalue_moduli.end());
  return report;
}

}  // namespace annulus
