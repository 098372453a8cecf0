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

#ifndef BETAQUANT_INCOMPLETE_BETA_HPP
#define BETAQUANT_INCOMPLETE_BETA_HPP

namespace betaquant {

// Shape parameters and target level of every quantile computation.
struct BetaParams {
  double a = 1.0;  // first shape, > 0
  double b = 1.0;  // second shape, > 0
  double p = 0.5;  // quantile level, in (0, 1)

  void validate() const;
};

// log B(a,b) = ln_gamma(a) + ln_gamma(b) - ln_gamma(a+b).
double log_beta(double a, double b);

// Regularized incomplete beta I(x; a, b) in [0, 1] (params.p is unused).
// Continued fraction on whichever of x, 1-x lies below the crossover
// (a+1)/(a+b+2), the other side via the reflection identity.
double reg_inc_beta(double x, const BetaParams& params);

// 1 - reg_inc_beta(1-x; b, a): the complementary evaluation path.
double reflect(double x, const BetaParams& params);

// I(e^{-psi}; a, b) evaluated without forming 1 - e^{-psi} naively: both
// log x = -psi and 1 - x = -expm1(-psi) stay accurate for psi near 0 and
// for psi so large that e^{-psi} underflows.
double reg_inc_beta_from_neg_log(double psi, const BetaParams& params);

namespace detail {
// Core evaluator taking x, its complement and both logs as exact inputs.
double ibeta_core(double a, double b, double x, double cx, double lnx,
                  double lncx);
}  // namespace detail

}  // namespace betaquant

#endif  // BETAQUANT_INCOMPLETE_BETA_HPP
