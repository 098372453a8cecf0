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

#ifndef BETAQUANT_QUANTILE_HPP
#define BETAQUANT_QUANTILE_HPP

#include "betaquant/incomplete_beta.hpp"
#include "betaquant/tolerances.hpp"

namespace betaquant {

// p-quantile of the beta distribution together with solve diagnostics.
// psi = -log q is carried explicitly: q itself underflows for very small
// first parameter while psi stays in range.
struct QuantileResult {
  double q = 0.0;             // e^{-psi}, in (0,1) (0 iff it underflows)
  double psi = 0.0;           // -log q, > 0
  double residual = 0.0;      // |I(q;a,b) - p| at the returned point
  int iterations = 0;
  double bracket_width = 0.0; // final bracket size, x-space
};

// Solve I(q; a, b) = p.  Safeguarded Newton in psi = -log q (the residual is
// strictly decreasing in psi), bisection fallback, geometric bracketing from
// the mean-based initial guess.
QuantileResult quantile(const BetaParams& params,
                        const ToleranceConfig& tol = ToleranceConfig{});

// phi(a) = -a log q(a) = a * psi(a).
double quantile_phi(const BetaParams& params,
                    const ToleranceConfig& tol = ToleranceConfig{});

// psi(a) = -log q(a).
double quantile_psi(const BetaParams& params,
                    const ToleranceConfig& tol = ToleranceConfig{});

// The same quantile through the reflected route 1 - q_{1-p}(b, a); agrees
// with quantile() within 2 * quantile_abs_tol.
QuantileResult quantile_wrt_b(const BetaParams& params,
                              const ToleranceConfig& tol = ToleranceConfig{});

// Substituted-variable density e^{-s} (1 - e^{-s/a})^{b-1}, s > 0, computed
// in log space; finite for every s > 0 even when b < 1 makes it blow up as
// s -> 0.
double exp_form_density(double a, double b, double s);

}  // namespace betaquant

#endif  // BETAQUANT_QUANTILE_HPP
