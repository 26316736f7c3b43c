// Copyright (c) annulus-toolkit contributors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <vector>

#include "annulus/complex_matrix.hpp"

namespace annulus {

/// Default clipping/membership tolerance used across the toolkit.
inline constexpr double kDefaultTol = 1e-10;

/// Hermitian eigendecomposition A = V diag(eigenvalues) V*, eigenvalues
/// ascending, V unitary with eigenvectors as columns.
struct HermEig {
  std::vector<double> eigenvalues;
  CMatrix eigenvectors;
};

/// Throws NotHermitianError when ||A - A*|| > 1e-8 max(1, ||A||), and
/// NoConvergenceError if the eigensolver fails.
HermEig herm_eig(const CMatrix& a);

/// Non-negative square root of a hermitian PSD matrix. Eigenvalues in
/// [-tol*max(1,||A||), 0] are clipped to zero; anything lower throws
/// NotPsdError.
CMatrix psd_sqrt(const CMatrix& a, double tol = kDefaultTol);

/// Spectral norm, computed as the square root of the top eigenvalue of A*A.
double opnorm(const CMatrix& a);

/// Throws SingularError when the condition estimate exceeds 1e14.
CMatrix inverse(const CMatrix& a);

/// Eigenvalues of a general square matrix.
std::vector<Complex> eigenvalues(const CMatrix& a);

/// Real part of x* A x (exact for hermitian A).
double quad_form(const CMatrix& a, const CVector& x);

}  // namespace annulus
