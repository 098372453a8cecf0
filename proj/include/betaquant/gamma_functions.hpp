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

#ifndef BETAQUANT_GAMMA_FUNCTIONS_HPP
#define BETAQUANT_GAMMA_FUNCTIONS_HPP

#include "betaquant/tolerances.hpp"

namespace betaquant {

// Parameters of a gamma-distribution quantile query: the prob-quantile of the
// gamma distribution with the given shape (unit scale).
struct GammaQuantileQuery {
  double shape = 1.0;  // > 0
  double prob = 0.5;   // in (0, 1)

  void validate() const;
};

// log Gamma(x) for x > 0.  Relative error <= 1e-13 on [1e-3, 1e6].
double ln_gamma(double x);

// Digamma Psi(x) = Gamma'(x)/Gamma(x) for x not in {0, -1, -2, ...}.
// Negative non-integer arguments go through the reflection formula.
double digamma(double x);

// Regularized lower incomplete gamma P(shape, x) in [0, 1]; monotone
// nondecreasing in x, P(shape, 0) = 0.
double reg_lower_gamma(double shape, double x);

// x such that |reg_lower_gamma(shape, x) - prob| <= 1e-12, by bracketed
// Newton with bisection safeguard.
double gamma_quantile(const GammaQuantileQuery& query,
                      const ToleranceConfig& tol = ToleranceConfig{});

}  // namespace betaquant

#endif  // BETAQUANT_GAMMA_FUNCTIONS_HPP
