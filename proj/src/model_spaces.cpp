// Copyright (c) annulus-toolkit contributors.
// SPDX-License-Identifier: Apache-2.0
#include "annulus/model_spaces.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "annulus/errors.hpp"

namespace annulus {

WeightFamily WeightFamily::make(WeightKind kind, double r, double a) {
  if (!(r > 0.0 && r < 1.0)) throw Error("WeightFamily: r must lie in (0, 1)");
  const bool needs_a = kind == WeightKind::ell2_a || kind == WeightKind::ell2_a_dual;
  if (needs_a && !(a > 0.0)) throw Error("WeightFamily: a must be positive");
  return WeightFamily{kind, r, needs_a ? a : 0.0};
}

double WeightFamily::weight(long n) const {
  double w = 0.0;
  switch (kind) {
    case WeightKind::ell2_r:
      w = (n >= 0) ? 1.0 / (1.0 - r * r)
                   : std::pow(r, static_cast<double>(-2 * n - 2)) / (1.0 - r * r);
      break;
    case WeightKind::ell2_r_minus:
      w = (n >= 0) ? (1.0 - r * r) / std::pow(r, static_cast<double>(2 * n)) : (1.0 - r * r);
      break;
    case WeightKind::ell2_a:
      w = 1.0 / (1.0 + a * a * std::pow(r, static_cast<double>(-2 * n - 2)));
      break;
    case WeightKind::ell2_a_dual:
      w = 1.0 + a * a * std::pow(r, static_cast<double>(2 * n));
      break;
  }
  if (!(w > 0.0) || !std::isfinite(w))
    throw Error("WeightFamily::weight(): weight under/overflows at this index");
  return w;
}

namespace {

// (1 + c x) / (1 + x), stable as x -> inf.
double ratio_linear(double x, double c) {
  if (std::isfinite(x) && x < 1e100) return (1.0 + c * x) / (1.0 + x);
  const double u = std::isfinite(x) ? 1.0 / x : 0.0;
  return (c + u) / (1.0 + u);
}

}  // namespace

double WeightFamily::adjacent_ratio(long from, ShiftDirection direction) const {
  const bool fwd = direction == ShiftDirection::forward;
  switch (kind) {
    case WeightKind::ell2_r:
      if (fwd) return (from >= -1) ? 1.0 : 1.0 / (r * r);
      return (from >= 0) ? 1.0 : r * r;
    case WeightKind::ell2_r_minus:
      if (fwd) return (from >= 0) ? 1.0 / (r * r) : 1.0;
      return (from >= 1) ? r * r : 1.0;
    case WeightKind::ell2_a: {
      // weight(n) = 1/(1+x_n), x_n = a^2 r^{-2n-2}; x_{n+1} = x_n / r^2.
      const double x = a * a * std::pow(r, static_cast<double>(-2 * from - 2));
      // w(to)/w(from) = (1 + x_from)/(1 + x_to)
      if (fwd) return 1.0 / ratio_linear(x, 1.0 / (r * r));
      return 1.0 / ratio_linear(x, r * r);
    }
    case WeightKind::ell2_a_dual: {
      // weight(n) = 1 + y_n, y_n = a^2 r^{2n}; y_{n+1} = y_n r^2.
      const double y = a * a * std::pow(r, static_cast<double>(2 * from));
      if (fwd) return ratio_linear(y, r * r);
      return ratio_linear(y, 1.0 / (r * r));
    }
  }
  throw Error("WeightFamily::adjacent_ratio(): unreachable");
}

SeqVector SeqVector::delta(long n, Complex value) {
  SeqVector f(1);
  f.set(n, CVector{value});
  return f;
}

SeqVector SeqVector::delta(long n, const CVector& value) {
  SeqVector f(static_cast<int>(value.size()));
  f.set(n, value);
  return f;
}

void SeqVector::set(long n, const CVector& value) {
  if (static_cast<int>(value.size()) != dim_e_)
    throw DimMismatchError("SeqVector::set(): value has wrong length");
  const bool all_zero =
      std::all_of(value.begin(), value.end(), [](Complex z) { return z == Complex{0.0, 0.0}; });
  if (all_zero) {
    terms_.erase(n);
  } else {
    terms_[n] = value;
  }
}

const CVector* SeqVector::at(long n) const {
  auto it = terms_.find(n);
  return it == terms_.end() ? nullptr : &it->second;
}

double seq_norm2(const SeqVector& f, const WeightFamily& w) {
  double acc = 0.0;
  for (const auto& [n, v] : f.terms()) acc += w.weight(n) * vec_norm2(v);
  return acc;
}

SeqVector shift_forward(const SeqVector& f) {
  SeqVector g(f.dim_e());
  for (const auto& [n, v] : f.terms()) g.set(n + 1, v);
  return g;
}

SeqVector shift_backward(const SeqVector& f) {
  SeqVector g(f.dim_e());
  for (const auto& [n, v] : f.terms()) g.set(n - 1, v);
  return g;
}

double hereditary_form_on_shift(const SeqVector& f, const WeightFamily& w,
                                ShiftDirection direction, double rho) {
  if (!(rho > 0.0 && rho < 1.0))
    throw Error("hereditary_form_on_shift(): rho must lie in (0, 1)");
  const SeqVector s1 = direction == ShiftDirection::forward ? shift_forward(f) : shift_backward(f);
  const SeqVector s2 =
      direction == ShiftDirection::forward ? shift_forward(s1) : shift_backward(s1);
  return (1.0 + rho * rho) * seq_norm2(s1, w) - seq_norm2(s2, w) - rho * rho * seq_norm2(f, w);
}

double hereditary_bracket(const WeightFamily& w, ShiftDirection direction, double rho, long n) {
  const long step = direction == ShiftDirection::forward ? 1 : -1;
  return (1.0 + rho * rho) * w.weight(n + step) - w.weight(n + 2 * step) -
         rho * rho * w.weight(n);
}

Complex duality_pairing(const SeqVector& f, const SeqVector& g) {
  if (f.dim_e() != g.dim_e())
    throw DimMismatchError("duality_pairing(): sequences have different vector dimensions");
  Complex acc{0.0, 0.0};
  for (const auto& [n, fv] : f.terms()) {
    const CVector* gv = g.at(-n - 1);
    if (!gv) continue;
    for (int i = 0; i < f.dim_e(); ++i) acc += fv[i] * std::conj((*gv)[i]);
  }
  return acc;
}

SeqVector j_a_apply(const SeqVector& f, double r, double a) {
  if (!(r > 0.0 && r < 1.0) || !(a > 0.0)) throw Error("j_a_apply(): invalid parameters");
  return f;
}

JaNorms j_a_norms(double r, double a) {
  if (!(r > 0.0 && r < 1.0) || !(a > 0.0)) throw Error("j_a_norms(): invalid parameters");
  const double u = a * a / (r * r);
  JaNorms out;
  out.norm2 = (1.0 - r * r) / std::min(u, 1.0);
  out.inv_norm2 = (1.0 + u) / (1.0 - r * r);
  return out;
}

JaNorms j_a_norms_windowed(double r, double a, long window) {
  if (!(r > 0.0 && r < 1.0) || !(a > 0.0) || window < 1)
    throw Error("j_a_norms_windowed(): invalid parameters");
  const double one_minus = 1.0 - r * r;
  const double shifted_a2 = a * a / (r * r);
  double sup_ratio = 0.0;      // ||J_a||^2 candidate
  double sup_inv_ratio = 0.0;  // ||J_a^{-1}||^2 candidate
  for (long n = -window; n <= window; ++n) {
    // Basis norm ratio between the a-weighted and r-weighted spaces,
    // written without intermediate over/underflow.
    double denom;  // (1 + a^2 r^{-2n-2}) * (r-weighted basis norm)^2 * (1-r^2)
    if (n >= 0) {
      denom = std::pow(r, static_cast<double>(2 * n)) + shifted_a2;
    } else {
      denom = 1.0 + a * a * std::pow(r, static_cast<double>(-2 * n - 2));
    }
    sup_ratio = std::max(sup_ratio, one_minus / denom);
    sup_inv_ratio = std::max(sup_inv_ratio, denom / one_minus);
  }
  return JaNorms{sup_ratio, sup_inv_ratio};
}

double k_a(double r, double a) {
  const JaNorms norms = j_a_norms(r, a);
  return std::sqrt(norms.norm2 * norms.inv_norm2);
}

KaGridResult k_a_grid_min(double r, double span_decades, int count) {
  if (count < 3 || count % 2 == 0)
    throw Error("k_a_grid_min(): count must be odd and at least 3");
  KaGridResult out;
  const int half = (count - 1) / 2;
  out.min_k = std::numeric_limits<double>::infinity();
  for (int i = 0; i < count; ++i) {
    const double exponent = span_decades * static_cast<double>(i - half) / half;
    const double a = r * std::pow(10.0, exponent);
    const double k = k_a(r, a);
    out.a_values.push_back(a);
    out.k_values.push_back(k);
    if (k < out.min_k) {
      out.min_k = k;
      out.argmin = i;
    }
  }
  return out;
}

WindowCompression window_compression(const WeightFamily& w, ShiftDirection direction, long n_min,
                                     long n_max, int dim_e) {
  if (n_min > n_max) throw Error("window_compression(): empty window");
  if (dim_e < 1) throw Error("window_compression(): dim_e must be positive");
  const long width = n_max - n_min + 1;
  const int dim = static_cast<int>(width) * dim_e;
  const long step = direction == ShiftDirection::forward ? 1 : -1;
  WindowCompression out;
  out.matrix = CMatrix(dim, dim);
  out.r = w.r;
  out.boundary_defect = true;
  for (long n = n_min; n <= n_max; ++n) {
    const long target = n + step;
    if (target < n_min || target > n_max) continue;
    const double amplitude = std::sqrt(w.adjacent_ratio(n, direction));
    const int col0 = static_cast<int>(n - n_min) * dim_e;
    const int row0 = static_cast<int>(target - n_min) * dim_e;
    for (int i = 0; i < dim_e; ++i) out.matrix(row0 + i, col0 + i) = amplitude;
  }
  return out;
}

}  // namespace annulus
