// Copyright (c) annulus-toolkit contributors.
// SPDX-License-Identifier: Apache-2.0
#include "annulus/complex_matrix.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "annulus/errors.hpp"
#include "annulus/kernels.hpp"

namespace annulus {

CMatrix CMatrix::identity(int n) {
  CMatrix m(n, n);
  for (int i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

CMatrix CMatrix::diagonal(const CVector& d) {
  const int n = static_cast<int>(d.size());
  CMatrix m(n, n);
  for (int i = 0; i < n; ++i) m(i, i) = d[i];
  return m;
}

CMatrix CMatrix::from_rows(int rows, int cols, std::initializer_list<Complex> entries) {
  CMatrix m(rows, cols);
  if (static_cast<int>(entries.size()) != rows * cols)
    throw DimMismatchError("CMatrix::from_rows(): entry count does not match shape");
  std::copy(entries.begin(), entries.end(), m.data_.begin());
  return m;
}

void CMatrix::validate(const char* what) const {
  if (rows_ <= 0 || cols_ <= 0)
    throw Error(std::string(what) + ": matrix has non-positive dimensions");
  for (const Complex& z : data_) {
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag()))
      throw Error(std::string(what) + ": matrix has a non-finite entry");
  }
}

namespace {
void check_same_shape(const CMatrix& a, const CMatrix& b, const char* what) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw DimMismatchError(std::string(what) + ": shape mismatch");
}
}  // namespace

CMatrix operator+(const CMatrix& a, const CMatrix& b) {
  check_same_shape(a, b, "operator+");
  CMatrix c(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.entries().size(); ++i) c.data()[i] = a.data()[i] + b.data()[i];
  return c;
}

CMatrix operator-(const CMatrix& a, const CMatrix& b) {
  check_same_shape(a, b, "operator-");
  CMatrix c(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.entries().size(); ++i) c.data()[i] = a.data()[i] - b.data()[i];
  return c;
}

CMatrix operator*(const CMatrix& a, const CMatrix& b) {
  if (a.cols() != b.rows()) throw DimMismatchError("operator*: inner dimension mismatch");
  CMatrix c(a.rows(), b.cols());
  kernels::matmul(a.data(), b.data(), c.data(), a.rows(), a.cols(), b.cols());
  return c;
}

CMatrix operator*(Complex s, const CMatrix& a) {
  CMatrix c(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.entries().size(); ++i) c.data()[i] = s * a.data()[i];
  return c;
}

CMatrix operator*(double s, const CMatrix& a) { return Complex{s, 0.0} * a; }

CMatrix adjoint(const CMatrix& a) {
  CMatrix c(a.cols(), a.rows());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) c(j, i) = std::conj(a(i, j));
  return c;
}

CVector mat_vec(const CMatrix& a, const CVector& x) {
  if (a.cols() != static_cast<int>(x.size()))
    throw DimMismatchError("mat_vec(): dimension mismatch");
  CVector y(a.rows());
  for (int i = 0; i < a.rows(); ++i) {
    Complex acc{0.0, 0.0};
    for (int j = 0; j < a.cols(); ++j) acc += a(i, j) * x[j];
    y[i] = acc;
  }
  return y;
}

Complex vdot(const CVector& x, const CVector& y) {
  if (x.size() != y.size()) throw DimMismatchError("vdot(): dimension mismatch");
  Complex acc{0.0, 0.0};
  for (std::size_t i = 0; i < x.size(); ++i) acc += std::conj(x[i]) * y[i];
  return acc;
}

double vec_norm2(const CVector& x) {
  double acc = 0.0;
  for (const Complex& z : x) acc += std::norm(z);
  return acc;
}

CVector operator+(const CVector& x, const CVector& y) {
  if (x.size() != y.size()) throw DimMismatchError("vector operator+: dimension mismatch");
  CVector z(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) z[i] = x[i] + y[i];
  return z;
}

CVector operator-(const CVector& x, const CVector& y) {
  if (x.size() != y.size()) throw DimMismatchError("vector operator-: dimension mismatch");
  CVector z(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) z[i] = x[i] - y[i];
  return z;
}

CVector operator*(Complex s, const CVector& x) {
  CVector z(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) z[i] = s * x[i];
  return z;
}

double max_abs(const CMatrix& a) {
  double best = 0.0;
  for (const Complex& z : a.entries()) best = std::max(best, std::abs(z));
  return best;
}

double frobenius_norm(const CMatrix& a) {
  double acc = 0.0;
  for (const Complex& z : a.entries()) acc += std::norm(z);
  return std::sqrt(acc);
}

}  // namespace annulus
