// Copyright (c) annulus-toolkit contributors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <vector>

#include "annulus/alpha_class.hpp"
#include "annulus/complex_matrix.hpp"

namespace annulus {

/// Matrix-valued rational function on the annulus:
///   f(z) = sum_n C_n z^n + sum_j C_j (z - p_j)^{-k_j},
/// with every pole held at least kPoleMargin away from the closed annulus.
struct LaurentTerm {
  long n = 0;
  CMatrix c;
};

struct PoleTerm {
  Complex p;
  int k = 1;
  CMatrix c;
};

struct LaurentRational {
  int dim = 1;  // p for p-by-p matrix values; 1 = scalar
  std::vector<LaurentTerm> laurent;
  std::vector<PoleTerm> poles;

  static constexpr double kPoleMargin = 1e-6;

  /// Structural checks (shapes, finite entries, pole orders).
  void validate() const;
  /// Additionally requires |p| <= r - kPoleMargin or |p| >= 1 + kPoleMargin.
  void validate_for_radius(double r) const;

  /// Value at a scalar point (dim-by-dim matrix).
  CMatrix eval(Complex z) const;
};

/// f(T) on the tensor space of dimension dim * dim(T):
/// sum C_n (x) T^n + sum C_j (x) (T - p_j I)^{-k_j}.
/// Throws SingularError if a pole sits within 1e-8 of an eigenvalue of T.
CMatrix eval_at_matrix(const LaurentRational& f, const OperatorInstance& op);

/// Max of the largest singular value of f over 2M uniform samples of the
/// two boundary circles |z| = 1 and |z| = r. Requires M >= 256.
double boundary_sup(const LaurentRational& f, double r, int samples_per_circle);

/// Doubles the sample count until the value changes by less than rel_tol
/// (relatively); for functions that are smooth on the circles this
/// converges quadratically in the grid spacing.
double boundary_sup_refined(const LaurentRational& f, double r, int initial_samples = 4096,
                            double rel_tol = 1e-8, int max_doublings = 8);

struct KReport {
  double ratio = 0.0;
  double f_norm_at_t = 0.0;
  double boundary_sup = 0.0;
  int samples_per_circle = 0;
};

/// ||f(T)|| / boundary sup; for class members this never exceeds sqrt(2)
/// beyond the boundary-sampling error.
KReport k_ratio(const LaurentRational& f, const OperatorInstance& op, int samples_per_circle = 4096);

/// Seeded local search over rational functions maximizing the ratio for a
/// fixed operator; each improving candidate is re-evaluated with a refined
/// boundary sup. Deterministic for a fixed seed.
KReport k_search(const OperatorInstance& op, int budget, std::uint64_t seed = 1,
                 int samples_per_circle = 4096);

}  // namespace annulus
