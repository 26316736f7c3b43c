// Copyright (c) annulus-toolkit contributors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <vector>

#include "annulus/alpha_class.hpp"
#include "annulus/asymptotics.hpp"
#include "annulus/complex_matrix.hpp"
#include "annulus/model_spaces.hpp"

namespace annulus {

/// Coefficients of the output transform x -> D (z - T)^{-1} x, stored
/// unsigned as c_n = D T^{-n-1} x for n in [-n_terms, n_terms - 1].
/// (The two series branches of the function carry signs -/+ for the inner
/// and outer expansion; norms do not see them.) The weighted partial sums
/// and the exact series remainders are captured at construction so the
/// squared norm never touches the raw (possibly large) coefficients.
struct OutputCoefficients {
  double r = 0.5;
  int n_min = 0;  // window is [n_min, n_min + coeffs.size() - 1]
  std::vector<CVector> coeffs;
  int defect_rank = 0;

  // 1/(1-r^2)-normalized pieces of the squared model-space norm.
  double weighted_partial = 0.0;  // windowed sum of both branches
  double remainder = 0.0;         // exact tails from the series identities

  const CVector& at(int n) const { return coeffs.at(static_cast<std::size_t>(n - n_min)); }
  int n_max() const { return n_min + static_cast<int>(coeffs.size()) - 1; }
};

/// Throws NotPsdError for operators outside the class and SingularError if
/// T cannot be inverted.
OutputCoefficients output_transform(const OperatorInstance& op, const CVector& x,
                                    int n_terms = 64);
OutputCoefficients output_transform(const OperatorInstance& op, const DefectData& defect_data,
                                    const AsymptoticData& asym, const CVector& x,
                                    int n_terms = 64);

/// Squared model-space norm of the output transform; always <= ||x||^2 up
/// to rounding.
double output_norm2(const OutputCoefficients& oc);

/// | ||x||^2 - ||O x||^2 - L+(T,x) - L-(T,x) |; the transform
/// x -> (O x, W x) is an isometry, so this vanishes for class members.
double lifting_isometry_residual(const OperatorInstance& op, const CVector& x);
double lifting_isometry_residual(const OperatorInstance& op, const DefectData& defect_data,
                                 const AsymptoticData& asym, const CVector& x);

/// Shift intertwining: the coefficient sequence of O(Tx) equals the
/// forward-shifted sequence of O(x). Returns the weighted sup-norm mismatch
/// over interior window indices, normalized by max(1, ||x||).
double intertwining_residual(const OperatorInstance& op, const CVector& x, int n_terms = 32);
double intertwining_residual(const OperatorInstance& op, const DefectData& defect_data,
                             const AsymptoticData& asym, const CVector& x, int n_terms = 32);

/// Gramian identity O*O + Q+ + Q- = I in matrix form; returns the spectral
/// norm of the difference.
double output_gramian_residual(const OperatorInstance& op, const DefectData& defect_data,
                               const AsymptoticData& asym, int n_terms = 32);

/// Coefficients expressed in the defect basis as a finitely supported
/// sequence (dim_E = defect rank); empty when the defect space is trivial.
SeqVector to_seq_vector(const OutputCoefficients& oc, const DefectData& defect_data);

}  // namespace annulus
