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

#include "betaquant/incomplete_beta.hpp"

#include <cmath>
#include <stdexcept>

#include "betaquant/errors.hpp"
#include "betaquant/gamma_functions.hpp"

namespace betaquant {

void BetaParams::validate() const {
  if (!(a > 0.0)) throw std::domain_error("BetaParams: a must be positive");
  if (!(b > 0.0)) throw std::domain_error("BetaParams: b must be positive");
  if (!(p > 0.0 && p < 1.0))
    throw std::domain_error("BetaParams: p must be in (0,1)");
}

double log_beta(double a, double b) {
  if (!(a > 0.0 && b > 0.0))
    throw std::domain_error("log_beta: parameters must be positive");
  return ln_gamma(a) + ln_gamma(b) - ln_gamma(a + b);
}

namespace {

// Modified Lentz evaluation of the standard continued fraction for
// I(x; a, b); valid (fast-converging) for x below the crossover.
double betacf(double a, double b, double x) {
  constexpr double tiny = 1e-300;
  constexpr double eps = 1e-16;
  constexpr int cap = 500;
  const double qab = a + b, qap = a + 1.0, qam = a - 1.0;
  double c = 1.0;
  double d = 1.0 - qab * x / qap;
  if (std::fabs(d) < tiny) d = tiny;
  d = 1.0 / d;
  double h = d;
  for (int m = 1; m <= cap; ++m) {
    const int m2 = 2 * m;
    double aa = m * (b - m) * x / ((qam + m2) * (a + m2));
    d = 1.0 + aa * d;
    if (std::fabs(d) < tiny) d = tiny;
    c = 1.0 + aa / c;
    if (std::fabs(c) < tiny) c = tiny;
    d = 1.0 / d;
    h *= d * c;
    aa = -(a + m) * (qab + m) * x / ((a + m2) * (qap + m2));
    d = 1.0 + aa * d;
    if (std::fabs(d) < tiny) d = tiny;
    c = 1.0 + aa / c;
    if (std::fabs(c) < tiny) c = tiny;
    d = 1.0 / d;
    const double del = d * c;
    h *= del;
    if (std::fabs(del - 1.0) < eps) return h;
  }
  throw convergence_error("reg_inc_beta: continued fraction did not converge");
}

}  // namespace

namespace detail {

double ibeta_core(double a, double b, double x, double cx, double lnx,
                  double lncx) {
  const double lnfront = a * lnx + b * lncx - log_beta(a, b);
  double v;
  if (x < (a + 1.0) / (a + b + 2.0))
    v = std::exp(lnfront) * betacf(a, b, x) / a;
  else
    v = 1.0 - std::exp(lnfront) * betacf(b, a, cx) / b;
  if (v < 0.0) v = 0.0;
  if (v > 1.0) v = 1.0;
  return v;
}

}  // namespace detail

double reg_inc_beta(double x, const BetaParams& params) {
  params.validate();
  if (!(x >= 0.0 && x <= 1.0))
    throw std::domain_error("reg_inc_beta: x must be in [0,1]");
  if (x == 0.0) return 0.0;
  if (x == 1.0) return 1.0;
  return detail::ibeta_core(params.a, params.b, x, 1.0 - x, std::log(x),
                            std::log1p(-x));
}

double reflect(double x, const BetaParams& params) {
  params.validate();
  if (!(x >= 0.0 && x <= 1.0))
    throw std::domain_error("reflect: x must be in [0,1]");
  const BetaParams swapped{params.b, params.a, params.p};
  return 1.0 - reg_inc_beta(1.0 - x, swapped);
}

double reg_inc_beta_from_neg_log(double psi, const BetaParams& params) {
  params.validate();
  if (!(psi >= 0.0))
    throw std::domain_error("reg_inc_beta_from_neg_log: psi must be >= 0");
  if (psi == 0.0) return 1.0;
  const double x = std::exp(-psi);           // may underflow to 0; logs stay exact
  const double cx = -std::expm1(-psi);
  const double lncx = std::log(cx);
  return detail::ibeta_core(params.a, params.b, x, cx, -psi, lncx);
}

}  // namespace betaquant
