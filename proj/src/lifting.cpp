// Copyright (c) annulus-toolkit contributors.
// SPDX-License-Identifier: Apache-2.0
#include "annulus/lifting.hpp"

#include <algorithm>
#include <cmath>

#include "annulus/errors.hpp"

namespace annulus {

OutputCoefficients output_transform(const OperatorInstance& op, const CVector& x, int n_terms) {
  const DefectData dd = defect(op);
  return output_transform(op, dd, limit_gramians(op), x, n_terms);
}

OutputCoefficients output_transform(const OperatorInstance& op, const DefectData& defect_data,
                                    const AsymptoticData& asym, const CVector& x, int n_terms) {
  if (n_terms < 1) throw Error("output_transform(): n_terms must be positive");
  OutputCoefficients oc;
  oc.r = op.r;
  oc.n_min = -n_terms;
  oc.defect_rank = defect_data.defect_rank;
  oc.coeffs.assign(static_cast<std::size_t>(2 * n_terms), CVector{});

  // Coefficient at n is D T^{-n-1} x: inverse powers for n >= 0, forward
  // powers T^m x (m = -n-1) for n <= -1.
  const CMatrix t_inv = inverse(op.t);
  CVector y = x;
  for (int n = 0; n < n_terms; ++n) {
    y = mat_vec(t_inv, y);
    oc.coeffs[static_cast<std::size_t>(n - oc.n_min)] = mat_vec(defect_data.d, y);
  }
  y = x;
  for (int n = -1; n >= -n_terms; --n) {
    oc.coeffs[static_cast<std::size_t>(n - oc.n_min)] = mat_vec(defect_data.d, y);
    y = mat_vec(op.t, y);
  }

  // The two weighted branches of the squared norm coincide with the defect
  // series partial sums, and the exact tails close them.
  const SeriesCheck pos = series_defect_pos(op, defect_data, asym, x, n_terms);
  const SeriesCheck neg = series_defect_neg(op, defect_data, asym, x, n_terms);
  oc.weighted_partial = pos.partial + neg.partial;
  oc.remainder = pos.remainder + neg.remainder;
  return oc;
}

double output_norm2(const OutputCoefficients& oc) {
  double value = (oc.weighted_partial + oc.remainder) / (1.0 - oc.r * oc.r);
  if (value < 0.0 && value > -1e-9) value = 0.0;
  return value;
}

double lifting_isometry_residual(const OperatorInstance& op, const CVector& x) {
  const DefectData dd = defect(op);
  return lifting_isometry_residual(op, dd, limit_gramians(op), x);
}

double lifting_isometry_residual(const OperatorInstance& op, const DefectData& defect_data,
                                 const AsymptoticData& asym, const CVector& x) {
  const OutputCoefficients oc = output_transform(op, defect_data, asym, x);
  return std::abs(vec_norm2(x) - output_norm2(oc) - l_plus(asym, x) - l_minus(asym, x));
}

double intertwining_residual(const OperatorInstance& op, const CVector& x, int n_terms) {
  const DefectData dd = defect(op);
  return intertwining_residual(op, dd, limit_gramians(op), x, n_terms);
}

double intertwining_residual(const OperatorInstance& op, const DefectData& defect_data,
                             const AsymptoticData& asym, const CVector& x, int n_terms) {
  const OutputCoefficients ox = output_transform(op, defect_data, asym, x, n_terms);
  const OutputCoefficients otx =
      output_transform(op, defect_data, asym, mat_vec(op.t, x), n_terms);
  // O(Tx) should be the forward-shifted coefficient sequence of O(x);
  // compare in the weighted metric of the model space.
  double worst = 0.0;
  for (int n = ox.n_min + 1; n <= ox.n_max(); ++n) {
    const CVector diff = otx.at(n) - ox.at(n - 1);
    const double w = n >= 0 ? std::pow(op.r, n) : 1.0;
    worst = std::max(worst, w * std::sqrt(vec_norm2(diff)));
  }
  const double scale = std::max(1.0, std::sqrt(vec_norm2(x)));
  return worst / (std::sqrt(1.0 - op.r * op.r) * scale);
}

double output_gramian_residual(const OperatorInstance& op, const DefectData& defect_data,
                               const AsymptoticData& asym, int n_terms) {
  // O*O equals the defect series gramian, window plus exact tails.
  return norm_identity_residual(op, defect_data, asym, n_terms);
}

SeqVector to_seq_vector(const OutputCoefficients& oc, const DefectData& defect_data) {
  const int rank = defect_data.defect_rank;
  SeqVector f(std::max(1, rank));
  if (rank == 0 || !defect_data.defect_basis.has_value()) return f;
  const CMatrix& basis = *defect_data.defect_basis;
  const CMatrix basis_adj = adjoint(basis);
  for (int n = oc.n_min; n <= oc.n_max(); ++n) {
    f.set(n, mat_vec(basis_adj, oc.at(n)));
  }
  return f;
}

}  // namespace annulus
