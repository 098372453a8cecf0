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

#include "betaquant/gamma_functions.hpp"

#include <cmath>
#include <limits>
#include <sstream>
#include <stdexcept>

#include "betaquant/errors.hpp"

namespace betaquant {

void GammaQuantileQuery::validate() const {
  if (!(shape > 0.0))
    throw std::domain_error("GammaQuantileQuery: shape must be positive");
  if (!(prob > 0.0 && prob < 1.0))
    throw std::domain_error("GammaQuantileQuery: prob must be in (0,1)");
}

double ln_gamma(double x) {
  if (!(x > 0.0)) throw std::domain_error("ln_gamma: x must be positive");
  return std::lgamma(x);
}

namespace {

// Asymptotic series for Psi(x), valid to < 1 ulp for x >= 10:
// Psi(x) = ln x - 1/(2x) - sum_k B_{2k}/(2k x^{2k}).
double digamma_asymptotic(double x) {
  const double inv = 1.0 / x;
  const double inv2 = inv * inv;
  const double series =
      inv2 * (1.0 / 12.0 -
      inv2 * (1.0 / 120.0 -
      inv2 * (1.0 / 252.0 -
      inv2 * (1.0 / 240.0 -
      inv2 * (1.0 / 132.0 -
      inv2 * (691.0 / 32760.0 -
      inv2 * (1.0 / 12.0)))))));
  return std::log(x) - 0.5 * inv - series;
}

}  // namespace

double digamma(double x) {
  if (x <= 0.0 && x == std::floor(x))
    throw std::domain_error("digamma: pole at non-positive integer");
  // Reflection: Psi(x) = Psi(1-x) - pi*cot(pi*x).  cot(pi*x) has period 1, so
  // reduce to the exactly-representable fractional part before the tangent.
  if (x < 0.5) {
    const double frac = x - std::floor(x);
    return digamma(1.0 - x) - M_PI / std::tan(M_PI * frac);
  }
  double acc = 0.0;
  while (x < 10.0) {  // Psi(x) = Psi(x+1) - 1/x
    acc -= 1.0 / x;
    x += 1.0;
  }
  return acc + digamma_asymptotic(x);
}

namespace {

// Lower series: P(a,x) = x^a e^{-x}/Gamma(a) * sum_n x^n / (a(a+1)...(a+n)).
double reg_lower_gamma_series(double shape, double x) {
  double term = 1.0 / shape;
  double sum = term;
  for (int n = 1; n < 10000; ++n) {
    term *= x / (shape + n);
    sum += term;
    if (std::fabs(term) < std::fabs(sum) * 1e-17) {
      const double lnfront = shape * std::log(x) - x - ln_gamma(shape);
      return std::exp(lnfront) * sum;
    }
  }
  throw convergence_error("reg_lower_gamma: series did not converge");
}

// Upper continued fraction (modified Lentz): Q(a,x) = front * CF.
double reg_upper_gamma_cf(double shape, double x) {
  constexpr double tiny = 1e-300;
  constexpr double eps = 1e-16;
  double b = x + 1.0 - shape;
  double c = 1.0 / tiny;
  double d = 1.0 / b;
  double h = d;
  for (int i = 1; i <= 10000; ++i) {
    const double an = -i * (i - shape);
    b += 2.0;
    d = an * d + b;
    if (std::fabs(d) < tiny) d = tiny;
    c = b + an / c;
    if (std::fabs(c) < tiny) c = tiny;
    d = 1.0 / d;
    const double del = d * c;
    h *= del;
    if (std::fabs(del - 1.0) < eps) {
      const double lnfront = shape * std::log(x) - x - ln_gamma(shape);
      return std::exp(lnfront) * h;
    }
  }
  throw convergence_error("reg_lower_gamma: continued fraction did not converge");
}

}  // namespace

double reg_lower_gamma(double shape, double x) {
  if (!(shape > 0.0))
    throw std::domain_error("reg_lower_gamma: shape must be positive");
  if (!(x >= 0.0)) throw std::domain_error("reg_lower_gamma: x must be >= 0");
  if (x == 0.0) return 0.0;
  double p;
  if (x < shape + 1.0)
    p = reg_lower_gamma_series(shape, x);
  else
    p = 1.0 - reg_upper_gamma_cf(shape, x);
  if (p < 0.0) p = 0.0;
  if (p > 1.0) p = 1.0;
  return p;
}

double gamma_quantile(const GammaQuantileQuery& query,
                      const ToleranceConfig& tol) {
  query.validate();
  tol.validate();
  const double shape = query.shape;
  const double prob = query.prob;

  // Bracket [lo, hi] with P(lo) < prob < P(hi); P(0) = 0 seeds lo.
  double lo = 0.0;
  double hi = shape + 1.0;
  int expansions = 0;
  while (reg_lower_gamma(shape, hi) <= prob) {
    lo = hi;
    hi *= 2.0;
    if (++expansions > 200)
      throw convergence_error("gamma_quantile: bracket expansion failed");
  }

  double x = 0.5 * (lo + hi);
  double f = reg_lower_gamma(shape, x) - prob;
  const double lng = ln_gamma(shape);
  for (int iter = 1; iter <= tol.max_newton_iters; ++iter) {
    if (f > 0.0) hi = x; else lo = x;
    if (std::fabs(f) <= 1e-13) {
      // Newton polish toward machine residual; keep the best iterate.
      double best_x = x, best_f = std::fabs(f);
      for (int k = 0; k < 3; ++k) {
        const double dens = std::exp((shape - 1.0) * std::log(x) - x - lng);
        if (!(dens > 0.0)) break;
        const double xn = x - f / dens;
        if (!(xn > lo && xn < hi)) break;
        x = xn;
        f = reg_lower_gamma(shape, x) - prob;
        if (std::fabs(f) < best_f) { best_f = std::fabs(f); best_x = x; }
      }
      return best_x;
    }
    const double dens = std::exp((shape - 1.0) * std::log(x) - x - lng);
    double xn = (dens > 0.0) ? x - f / dens : lo;
    if (!(xn > lo && xn < hi)) xn = 0.5 * (lo + hi);  // bisection safeguard
    x = xn;
    f = reg_lower_gamma(shape, x) - prob;
  }
  std::ostringstream msg;
  msg << "gamma_quantile: no convergence, best bracket [" << lo << ", " << hi
      << "]";
  throw convergence_error(msg.str());
}

}  // namespace betaquant
