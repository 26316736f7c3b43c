// Copyright (c) annulus-toolkit contributors.
// SPDX-License-Identifier: Apache-2.0
#include "annulus/linalg.hpp"

#include <algorithm>
#include <cmath>

#include <Eigen/Dense>

#include "annulus/errors.hpp"

namespace annulus {

namespace {

Eigen::MatrixXcd to_eigen(const CMatrix& a) {
  Eigen::MatrixXcd m(a.rows(), a.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) m(i, j) = a(i, j);
  return m;
}

CMatrix from_eigen(const Eigen::MatrixXcd& m) {
  CMatrix a(static_cast<int>(m.rows()), static_cast<int>(m.cols()));
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) a(i, j) = m(i, j);
  return a;
}

// Internal spectral norm without the hermiticity gate, used by the gates
// themselves.
double opnorm_eigen(const Eigen::MatrixXcd& m) {
  if (m.rows() == 0 || m.cols() == 0) return 0.0;
  Eigen::MatrixXcd gram = m.adjoint() * m;
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(gram, Eigen::EigenvaluesOnly);
  if (es.info() != Eigen::Success)
    throw NoConvergenceError("opnorm(): eigensolver failed", 0, 0.0);
  const double top = es.eigenvalues().maxCoeff();
  return std::sqrt(std::max(top, 0.0));
}

}  // namespace

HermEig herm_eig(const CMatrix& a) {
  if (!a.is_square()) throw DimMismatchError("herm_eig(): matrix must be square");
  const Eigen::MatrixXcd m = to_eigen(a);
  const double scale = std::max(1.0, opnorm_eigen(m));
  const double herm_defect = opnorm_eigen(m - m.adjoint());
  if (herm_defect > 1e-8 * scale)
    throw NotHermitianError("herm_eig(): matrix is not hermitian within tolerance");
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(m);
  if (es.info() != Eigen::Success)
    throw NoConvergenceError("herm_eig(): eigensolver failed", 0, 0.0);
  HermEig out;
  out.eigenvalues.assign(es.eigenvalues().data(), es.eigenvalues().data() + a.rows());
  out.eigenvectors = from_eigen(es.eigenvectors());
  return out;
}

CMatrix psd_sqrt(const CMatrix& a, double tol) {
  const HermEig eig = herm_eig(a);
  double top = 0.0;
  for (double v : eig.eigenvalues) top = std::max(top, std::abs(v));
  const double scale = std::max(1.0, top);
  const double min_eig = eig.eigenvalues.empty() ? 0.0 : eig.eigenvalues.front();
  if (min_eig < -tol * scale)
    throw NotPsdError("psd_sqrt(): matrix has a negative eigenvalue beyond tolerance", min_eig);
  const int n = a.rows();
  CMatrix root(n, n);
  // V sqrt(clip(D)) V*
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      Complex acc{0.0, 0.0};
      for (int k = 0; k < n; ++k) {
        const double lam = std::max(eig.eigenvalues[k], 0.0);
        acc += eig.eigenvectors(i, k) * std::sqrt(lam) * std::conj(eig.eigenvectors(j, k));
      }
      root(i, j) = acc;
    }
  }
  // rehermitize to kill rounding skew
  CMatrix sym = 0.5 * (root + adjoint(root));
  return sym;
}

double opnorm(const CMatrix& a) { return opnorm_eigen(to_eigen(a)); }

CMatrix inverse(const CMatrix& a) {
  if (!a.is_square()) throw DimMismatchError("inverse(): matrix must be square");
  const Eigen::MatrixXcd m = to_eigen(a);
  Eigen::PartialPivLU<Eigen::MatrixXcd> lu(m);
  const Eigen::MatrixXcd inv = lu.inverse();
  if (!inv.allFinite()) throw SingularError("inverse(): matrix is singular");
  const double cond = opnorm_eigen(m) * opnorm_eigen(inv);
  if (!(cond < 1e14))
    throw SingularError("inverse(): condition estimate exceeds 1e14");
  return from_eigen(inv);
}

std::vector<Complex> eigenvalues(const CMatrix& a) {
  if (!a.is_square()) throw DimMismatchError("eigenvalues(): matrix must be square");
  Eigen::ComplexEigenSolver<Eigen::MatrixXcd> es(to_eigen(a), /*computeEigenvectors=*/false);
  if (es.info() != Eigen::Success)
    throw NoConvergenceError("eigenvalues(): eigensolver failed", 0, 0.0);
  return {es.eigenvalues().data(), es.eigenvalues().data() + a.rows()};
}

double quad_form(const CMatrix& a, const CVector& x) {
  return vdot(x, mat_vec(a, x)).real();
}

}  // namespace annulus
