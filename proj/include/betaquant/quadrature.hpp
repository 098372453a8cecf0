// Copyright 2026 The betaquant authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef BETAQUANT_QUADRATURE_HPP
#define BETAQUANT_QUADRATURE_HPP

#include <cmath>
#include <cstddef>

#include "betaquant/errors.hpp"

namespace betaquant {
namespace quad_detail {

// 15-point Kronrod extension of the 7-point Gauss rule on [-1, 1]
// (QUADPACK dqk15 nodes/weights; positive half, node 7 is the midpoint).
inline constexpr double kron_x[8] = {
    0.991455371120812639206854697526329,
    0.949107912342758524526189684047851,
    0.864864423359769072789712788640926,
    0.741531185599394439863864773280788,
    0.586087235467691130294144838258730,
    0.405845151377397166906606412076961,
    0.207784955007898467600689403773245,
    0.000000000000000000000000000000000};
inline constexpr double kron_w[8] = {
    0.022935322010529224963732008058970,
    0.063092092629978553290700663189204,
    0.104790010322250183839876322541518,
    0.140653259715525918745189590510238,
    0.169004726639267902826583426598550,
    0.190350578064785409913256402421014,
    0.204432940075298892414161999234649,
    0.209482141084727828012999174891714};
inline constexpr double gauss_w[4] = {
    0.129484966168869693270611432679082,
    0.279705391489276667901467771423780,
    0.381830050505118944950369775488975,
    0.417959183673469387755102040816327};

struct PanelResult {
  double k15;     // Kronrod estimate
  double err;     // |K15 - G7|
  double resabs;  // Kronrod estimate of integral of |f|
};

template <typename F>
PanelResult panel(F&& f, double lo, double hi) {
  const double mid = 0.5 * (lo + hi);
  const double hl = 0.5 * (hi - lo);
  double k15 = 0.0, g7 = 0.0, resabs = 0.0;
  for (int i = 0; i < 7; ++i) {
    const double dx = hl * kron_x[i];
    const double f1 = f(mid - dx);
    const double f2 = f(mid + dx);
    k15 += kron_w[i] * (f1 + f2);
    resabs += kron_w[i] * (std::fabs(f1) + std::fabs(f2));
    if (i % 2 == 1) g7 += gauss_w[(i - 1) / 2] * (f1 + f2);
  }
  const double fc = f(mid);
  k15 += kron_w[7] * fc;
  resabs += kron_w[7] * std::fabs(fc);
  g7 += gauss_w[3] * fc;
  return {hl * k15, std::fabs(hl * (k15 - g7)), hl * resabs};
}

template <typename F>
double integrate_rec(F&& f, double lo, double hi, double abs_tol, int depth) {
  const auto r = panel(f, lo, hi);
  // Accept on tolerance, or once the discrepancy is at roundoff level
  // relative to the integral of |f| (no further bisection can help).
  if (r.err <= abs_tol || r.err <= 100.0 * 2.220446049250313e-16 * r.resabs)
    return r.k15;
  if (depth <= 0)
    throw convergence_error("integrate: adaptive bisection depth exhausted");
  const double mid = 0.5 * (lo + hi);
  return integrate_rec(f, lo, mid, 0.5 * abs_tol, depth - 1) +
         integrate_rec(f, mid, hi, 0.5 * abs_tol, depth - 1);
}

}  // namespace quad_detail

// Adaptive Gauss-Kronrod (G7/K15) integration of f over [lo, hi] to absolute
// tolerance abs_tol.  Throws convergence_error when bisection cannot reach
// the tolerance.  Integrable endpoint singularities must be transformed away
// by the caller.
template <typename F>
double integrate(F&& f, double lo, double hi, double abs_tol,
                 int max_depth = 60) {
  if (!(hi >= lo)) throw std::domain_error("integrate: hi < lo");
  if (hi == lo) return 0.0;
  if (!(abs_tol > 0.0)) throw std::domain_error("integrate: abs_tol <= 0");
  return quad_detail::integrate_rec(f, lo, hi, abs_tol, max_depth);
}

}  // namespace betaquant

#endif  // BETAQUANT_QUADRATURE_HPP
