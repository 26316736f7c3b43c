// Copyright (c) annulus-toolkit contributors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <functional>

#include "annulus/complex_matrix.hpp"

namespace annulus::kernels {

// Dense complex matrix product kernels, C = A * B with A m-by-k, B k-by-n,
// all row-major. The OpenMP variant distributes output rows; each output
// element is accumulated in the same order as the serial reference, so the
// two produce bit-identical results. C must not alias A or B.
void matmul_serial(const Complex* a, const Complex* b, Complex* c, int m, int k, int n);
void matmul_omp(const Complex* a, const Complex* b, Complex* c, int m, int k, int n);
void matmul(const Complex* a, const Complex* b, Complex* c, int m, int k, int n);

// Maximum of f(i) over i in [0, n). max is order-independent, so the OpenMP
// variant is deterministic and matches the serial reference exactly.
double max_scan_serial(std::int64_t n, const std::function<double(std::int64_t)>& f);
double max_scan_omp(std::int64_t n, const std::function<double(std::int64_t)>& f);
double max_scan(std::int64_t n, const std::function<double(std::int64_t)>& f);

}  // namespace annulus::kernels
