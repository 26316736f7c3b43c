// Copyright (c) annulus-toolkit contributors.
// SPDX-License-Identifier: Apache-2.0
#include "annulus/kernels.hpp"

#include <algorithm>

#include "annulus/parallel.hpp"

namespace annulus::kernels {

namespace {

// Row block of the product; identical accumulation order for both variants.
void matmul_rows(const Complex* a, const Complex* b, Complex* c, int k, int n,
                 int row_begin, int row_end) {
  for (int i = row_begin; i < row_end; ++i) {
    Complex* ci = c + static_cast<std::size_t>(i) * n;
    std::fill(ci, ci + n, Complex{0.0, 0.0});
    const Complex* ai = a + static_cast<std::size_t>(i) * k;
    for (int l = 0; l < k; ++l) {
      const Complex ail = ai[l];
      if (ail == Complex{0.0, 0.0}) continue;
      const Complex* bl = b + static_cast<std::size_t>(l) * n;
      for (int j = 0; j < n; ++j) ci[j] += ail * bl[j];
    }
  }
}

constexpr std::int64_t kMatmulParallelThreshold = 32768;  // ~32^3 flops

}  // namespace

void matmul_serial(const Complex* a, const Complex* b, Complex* c, int m, int k, int n) {
  matmul_rows(a, b, c, k, n, 0, m);
}

void matmul_omp(const Complex* a, const Complex* b, Complex* c, int m, int k, int n) {
#pragma omp parallel for schedule(static)
  for (int i = 0; i < m; ++i) matmul_rows(a, b, c, k, n, i, i + 1);
}

void matmul(const Complex* a, const Complex* b, Complex* c, int m, int k, int n) {
  const std::int64_t work = static_cast<std::int64_t>(m) * k * n;
  if (threading::enabled() && work >= kMatmulParallelThreshold) {
    matmul_omp(a, b, c, m, k, n);
  } else {
    matmul_serial(a, b, c, m, k, n);
  }
}

double max_scan_serial(std::int64_t n, const std::function<double(std::int64_t)>& f) {
  double best = 0.0;
  for (std::int64_t i = 0; i < n; ++i) best = std::max(best, f(i));
  return best;
}

double max_scan_omp(std::int64_t n, const std::function<double(std::int64_t)>& f) {
  double best = 0.0;
#pragma omp parallel
  {
    double local = 0.0;
#pragma omp for nowait schedule(static)
    for (std::int64_t i = 0; i < n; ++i) local = std::max(local, f(i));
#pragma omp critical
    best = std::max(best, local);
  }
  return best;
}

double max_scan(std::int64_t n, const std::function<double(std::int64_t)>& f) {
  if (threading::enabled() && n >= threading::kDefaultGrain) return max_scan_omp(n, f);
  return max_scan_serial(n, f);
}

}  // namespace annulus::kernels
