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

#ifndef BETAQUANT_SERIES_HPP
#define BETAQUANT_SERIES_HPP

#include <cstddef>
#include <utility>

#include "betaquant/incomplete_beta.hpp"
#include "betaquant/tolerances.hpp"

namespace betaquant {

// Root data for the exponential-polynomial w(x) = (1-x/2)e^x + (b-1)x/2 - 1:
// w vanishes at 0, rises to a single maximum, then decreases through its
// unique positive root rho.
struct WRootResult {
  double rho = 0.0;             // unique positive root of w
  double w_max_location = 0.0;  // stationary point of w (in (0, rho))
  double bracket_lo = 0.0;      // final bisection bracket around rho
  double bracket_hi = 0.0;
};

// Convergence diagnostics of a truncated series evaluation.
// tail_estimate is *relative* to the returned value; converged means
// tail_estimate <= series_tail_tol.  Evaluations that finish through exact
// integral resummation report terms_used = 0 and the quadrature target as
// tail_estimate.
struct SeriesDiagnostics {
  std::size_t terms_used = 0;
  double tail_estimate = 0.0;
  bool converged = false;
};

// w(x) for x >= 0; series form below x = 0.25 avoids the cancellation of
// the three O(1) pieces near the origin (w ~ (b/2) x there).
double w_eval(double x, double b);

// Unique positive root of w, with the sign pattern w(rho/2) > 0 > w(2 rho)
// verified before returning.
WRootResult find_rho(double b);

// h0(s) = s w(s) / (e^s - 1)^2, continuously extended by h0(0) = b/2.
double h0_eval(double s, double b);

// x e^{-2x} (1 - e^{-x})^{b-3} w(x); integrand of the vanishing-integral
// identity, sign-synchronized with w.
double eta_eval(double x, double b);

// Computes \int_0^\infty eta and returns it; the identity asserts the value
// is 0 for every b > 0.  At b within 1e-9 of 1 or 2 the integral is taken as
// the average over b -/+ 1e-4 (limit policy).
double eta_integral_identity(double b,
                             const ToleranceConfig& tol = ToleranceConfig{});

// Ratio integral  Y_c(psi) = int_0^psi e^{ct}(1-e^{-t})^{b-1} dt
//                            / (e^{c psi} (1-e^{-psi})^{b-1}),
// evaluated through the stabilized form int_0^psi e^{-cv} G(v) dv with
// G(v) = ((1-e^{v-psi})/(1-e^{-psi}))^{b-1}.  Requires c >= 0 (c = 0 is
// needed by the derivative series), psi > 0, b > 0.
double y_ratio(double c, double psi, double b,
               const ToleranceConfig& tol = ToleranceConfig{});

// Independent cross-check route in the original x variable:
// Y_c = int_q^1 x^{-c-1}(1-x)^{b-1} dx / (q^{-c}(1-q)^{b-1}), q = e^{-psi}.
// Valid for psi <= ~23 (q >= 1e-10); beyond that the mass band next to
// x = q drops under double resolution and convergence_error is thrown.
double y_ratio_alt(double c, double psi, double b,
                   const ToleranceConfig& tol = ToleranceConfig{});

// psi'(a) by the exact series
//   psi' = sum_n Y_{n+b}/(a+b+n) - sum_n Y_n/(a+n),
// summed over the paired terms T_n = Y_{n+b}/(a+b+n) - Y_n/(a+n) with the
// Y-ladder recurrence; for small psi the same series is evaluated through
// its exact integral resummation (see q_prime/psi_prime notes in the
// implementation).  Always negative.
std::pair<double, SeriesDiagnostics> psi_prime_series(
    const BetaParams& params, const ToleranceConfig& tol = ToleranceConfig{});

// q'(a) > 0 via the x-variable form of the same series (integrals over
// [q, 1]); equals -q * psi'(a).
double q_prime_series(const BetaParams& params,
                      const ToleranceConfig& tol = ToleranceConfig{});

// Residual |sum_k C(b-1,k)(-1)^k / (n+b-k)|; the identity asserts 0.
double sum1_check(int n, double b,
                  const ToleranceConfig& tol = ToleranceConfig{});

// Residual |LHS - RHS| of
//   sum_{k != n} C(b-1,k)(-1)^k/(k-n)
//     = -C(b-1,n)(-1)^n (sum_{k != n} (1/(k-n) - 1/(k+b-n)) - 1/b).
// Integer b requires n < b (otherwise both sides degenerate to an
// indeterminate 0 * pole limit and a domain error is thrown).
double sum2_check(int n, double b,
                  const ToleranceConfig& tol = ToleranceConfig{});

// Relative residual of the hypergeometric expansion of the defining
// equation:  q^a sum_n (1-b)_n q^n / ((a+n) n!) = p B(a, b).
double hyper1_check(const BetaParams& params,
                    const ToleranceConfig& tol = ToleranceConfig{});

namespace detail {
// Signed binomial-series coefficient m_k = C(b-1,k)(-1)^k via the ratio
// recurrence m_k = m_{k-1} (k-b)/k; exposed for tests.
double binom_signed(int k, double b);
// The two left-hand-side routes of the hypergeometric expansion (direct
// series for q <= 0.9, exact integral representation otherwise); exposed for
// cross-checking.
double hyper1_lhs_series(const BetaParams& params, double psi,
                         const ToleranceConfig& tol);
double hyper1_lhs_integral(const BetaParams& params, double psi,
                           const ToleranceConfig& tol);
}  // namespace detail

}  // namespace betaquant

#endif  // BETAQUANT_SERIES_HPP
