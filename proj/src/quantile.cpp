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

#include "betaquant/quantile.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

#include "betaquant/errors.hpp"
#include "betaquant/gamma_functions.hpp"

namespace betaquant {

namespace {

// Residual r(psi) = I(e^{-psi}; a, b) - p, strictly decreasing in psi.
double residual_at(double psi, const BetaParams& params) {
  return reg_inc_beta_from_neg_log(psi, params) - params.p;
}

// dr/dpsi = -x * density(x) = -exp(a*(-psi) + (b-1)*log(1-x) - log B).
double residual_deriv(double psi, const BetaParams& params, double lnbeta) {
  const double lncx = std::log(-std::expm1(-psi));
  return -std::exp(-params.a * psi + (params.b - 1.0) * lncx - lnbeta);
}

}  // namespace

QuantileResult quantile(const BetaParams& params, const ToleranceConfig& tol) {
  params.validate();
  tol.validate();

  // Initial guess: the mean a/(a+b), mapped to psi.
  double psi0 = std::log1p(params.b / params.a);
  double f0 = residual_at(psi0, params);
  if (f0 == 0.0) {
    // Level exactly representable at the guess: deterministic short-circuit.
    QuantileResult res;
    res.psi = psi0;
    res.q = std::exp(-psi0);
    res.residual = 0.0;
    res.iterations = 0;
    res.bracket_width = 0.0;
    return res;
  }

  // Geometric bracket expansion: r(lo) > 0 > r(hi).
  double lo, hi;
  int expansions = 0;
  if (f0 > 0.0) {
    lo = psi0;
    hi = 2.0 * psi0 + 1.0;
    while (residual_at(hi, params) >= 0.0) {
      lo = hi;
      hi = 2.0 * hi + 1.0;
      if (++expansions > 200)
        throw convergence_error("quantile: upper bracket expansion failed");
    }
  } else {
    hi = psi0;
    lo = 0.5 * psi0;
    while (residual_at(lo, params) <= 0.0) {
      hi = lo;
      lo *= 0.5;
      if (++expansions > 2200)
        throw convergence_error("quantile: lower bracket expansion failed");
    }
  }

  const double lnbeta = log_beta(params.a, params.b);
  double psi = 0.5 * (lo + hi);
  double f = residual_at(psi, params);
  int iterations = 0;
  bool converged = false;
  for (; iterations < tol.max_newton_iters; ++iterations) {
    if (f > 0.0) lo = psi; else hi = psi;
    if (std::fabs(f) <= tol.quantile_abs_tol) { converged = true; break; }
    const double df = residual_deriv(psi, params, lnbeta);
    double next = (df < 0.0) ? psi - f / df : lo;
    if (!(next > lo && next < hi)) next = 0.5 * (lo + hi);  // safeguard
    psi = next;
    f = residual_at(psi, params);
  }
  if (!converged) {
    std::ostringstream msg;
    msg << "quantile: no convergence for a=" << params.a << " b=" << params.b
        << " p=" << params.p << ", best bracket psi in [" << lo << ", " << hi
        << "]";
    throw convergence_error(msg.str());
  }

  // Newton polish toward machine-level residual; keep the best iterate.
  double best_psi = psi, best_f = std::fabs(f);
  for (int k = 0; k < 3 && best_f > 0.0; ++k) {
    const double df = residual_deriv(psi, params, lnbeta);
    if (!(df < 0.0)) break;
    const double next = psi - f / df;
    if (!(next > 0.0) || !std::isfinite(next)) break;
    psi = next;
    f = residual_at(psi, params);
    if (std::fabs(f) < best_f) { best_f = std::fabs(f); best_psi = psi; }
  }

  QuantileResult res;
  res.psi = best_psi;
  res.q = std::exp(-best_psi);
  res.residual = best_f;
  res.iterations = iterations;
  res.bracket_width = std::exp(-lo) - std::exp(-hi);
  return res;
}

double quantile_phi(const BetaParams& params, const ToleranceConfig& tol) {
  return params.a * quantile(params, tol).psi;
}

double quantile_psi(const BetaParams& params, const ToleranceConfig& tol) {
  return quantile(params, tol).psi;
}

QuantileResult quantile_wrt_b(const BetaParams& params,
                              const ToleranceConfig& tol) {
  params.validate();
  const BetaParams mirrored{params.b, params.a, 1.0 - params.p};
  const QuantileResult inner = quantile(mirrored, tol);
  QuantileResult res;
  res.q = -std::expm1(-inner.psi);  // 1 - q_{1-p}(b, a), cancellation-free
  res.psi = -std::log(res.q);
  // Residual of the *original* equation; 1 - q = e^{-inner.psi} exactly.
  const double cx = std::exp(-inner.psi);
  const double lnx = std::log(res.q);
  res.residual = std::fabs(
      detail::ibeta_core(params.a, params.b, res.q, cx, lnx, -inner.psi) -
      params.p);
  res.iterations = inner.iterations;
  res.bracket_width = inner.bracket_width;
  return res;
}

double exp_form_density(double a, double b, double s) {
  if (!(a > 0.0) || !(b > 0.0))
    throw std::domain_error("exp_form_density: a, b must be positive");
  if (!(s > 0.0)) throw std::domain_error("exp_form_density: s must be > 0");
  return std::exp(-s + (b - 1.0) * std::log(-std::expm1(-s / a)));
}

}  // namespace betaquant
