// Copyright (c) annulus-toolkit contributors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <complex>
#include <cstddef>
#include <vector>

namespace annulus {

using Complex = std::complex<double>;
using CVector = std::vector<Complex>;

/// Dense complex matrix, row-major storage. Entries are expected to stay
/// finite; validate() enforces it at construction boundaries (I/O, user
/// input). Values are immutable by convention once built and safe to share
/// across threads.
class CMatrix {
 public:
  CMatrix() = default;
  CMatrix(int rows, int cols)
      : rows_(rows), cols_(cols), data_(static_cast<std::size_t>(rows) * cols) {}

  static CMatrix identity(int n);
  static CMatrix diagonal(const CVector& d);
  static CMatrix from_rows(int rows, int cols, std::initializer_list<Complex> entries);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  Complex& operator()(int i, int j) { return data_[static_cast<std::size_t>(i) * cols_ + j]; }
  const Complex& operator()(int i, int j) const {
    return data_[static_cast<std::size_t>(i) * cols_ + j];
  }

  const Complex* data() const { return data_.data(); }
  Complex* data() { return data_.data(); }
  const std::vector<Complex>& entries() const { return data_; }

  /// Throws Error if any entry is NaN or infinite.
  void validate(const char* what) const;

  bool operator==(const CMatrix& other) const = default;

 private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<Complex> data_;
};

CMatrix operator+(const CMatrix& a, const CMatrix& b);
CMatrix operator-(const CMatrix& a, const CMatrix& b);
CMatrix operator*(const CMatrix& a, const CMatrix& b);
CMatrix operator*(Complex s, const CMatrix& a);
CMatrix operator*(double s, const CMatrix& a);

/// Conjugate transpose.
CMatrix adjoint(const CMatrix& a);

CVector mat_vec(const CMatrix& a, const CVector& x);

/// <x, y> = sum conj(x_i) y_i.
Complex vdot(const CVector& x, const CVector& y);
double vec_norm2(const CVector& x);  // squared euclidean norm

CVector operator+(const CVector& x, const CVector& y);
CVector operator-(const CVector& x, const CVector& y);
CVector operator*(Complex s, const CVector& x);

double max_abs(const CMatrix& a);
double frobenius_norm(const CMatrix& a);

}  // namespace annulus
