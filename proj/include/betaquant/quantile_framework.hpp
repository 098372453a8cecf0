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

#ifndef BETAQUANT_QUANTILE_FRAMEWORK_HPP
#define BETAQUANT_QUANTILE_FRAMEWORK_HPP

#include <cstddef>
#include <functional>
#include <vector>

namespace betaquant {

// A one-parameter family of (un-normalized) densities on [lo, hi].
// density(a, x) must be finite and nonnegative on the whole interval.
// log_deriv_a(a, x) = d/da log density — the object whose monotonicity in x
// drives every comparison result below; checks that need it throw
// std::domain_error when it is absent.
struct DensityFamily {
  double lo = 0.0;
  double hi = 1.0;
  std::function<double(double, double)> density;
  std::function<double(double, double)> log_deriv_a;
};

// Uniform-grid trapezoid discretization.  weights[i] is the node mass
// (h * f_i, halved at the two ends); density values below 1e-16 of the peak
// are truncated to zero.
struct DiscretizedMeasure {
  std::vector<double> nodes;
  std::vector<double> weights;
};

DiscretizedMeasure discretize(const DensityFamily& family, double a,
                              std::size_t node_count);

// p-quantile of the discretized measure: the trapezoid CDF is evaluated at
// the nodes and inverted by monotone piecewise-linear interpolation
// (leftmost crossing on flat segments).
double measure_quantile(const DiscretizedMeasure& measure, double p);

// Outcome of a hypothesis-checked comparison property.  The hypotheses
// (sign/monotonicity preconditions) are verified numerically to 1e-12; when
// they fail the conclusion is not asserted and the check is inconclusive.
struct FrameworkCheckResult {
  bool hypothesis_ok = false;
  bool conclusion_ok = false;
  double worst_violation = 0.0;  // largest monotonicity defect observed
};

// Ratio-of-integrals comparison: R(a) = sum u w_a / sum v w_a is monotone in
// a whenever u/v is monotone and d/da log density is monotone in x, with
// direction the product of the two; a constant ratio u/v forces R constant.
FrameworkCheckResult ratio_monotonicity_check(
    const DensityFamily& family, const std::vector<double>& a_values,
    const std::function<double(double)>& u,
    const std::function<double(double)>& v, std::size_t node_count);

// Quantile comparison: when d/da log density is monotone in x, the p-quantile
// of the discretized family moves in that direction as a grows.
FrameworkCheckResult quantile_monotonicity_check(
    const DensityFamily& family, const std::vector<double>& a_values, double p,
    std::size_t node_count);

// Limit recovery: every listed a must give a discretized p-quantile within
// slack of the expected limit.
struct ConvergenceResult {
  double worst_gap = 0.0;
  bool within_slack = false;
};

ConvergenceResult quantile_convergence_check(const DensityFamily& family,
                                             const std::vector<double>& a_values,
                                             double p, double limit,
                                             double slack,
                                             std::size_t node_count);

}  // namespace betaquant

#endif  // BETAQUANT_QUANTILE_FRAMEWORK_HPP
