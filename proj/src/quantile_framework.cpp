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

#include "betaquant/quantile_framework.hpp"

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <vector>

namespace betaquant {
namespace {

constexpr double kHypothesisTol = 1e-12;  // sign slack for numeric hypotheses
constexpr double kConclusionTol = 1e-10;  // slack for the asserted property

std::vector<double> uniform_grid(double lo, double hi, std::size_t count) {
  std::vector<double> x(count);
  const double h = (hi - lo) / static_cast<double>(count - 1);
  for (std::size_t i = 0; i < count; ++i) {
    x[i] = lo + h * static_cast<double>(i);
  }
  x.back() = hi;
  return x;
}

struct MonotoneScan {
  int direction = 0;   // +1 rising, -1 falling, 0 constant
  bool monotone = false;
};

// Direction from the endpoints, then every consecutive step checked against
// it with absolute slack tol * max(1, |values|).
MonotoneScan scan_monotone(const std::vector<double>& v, double tol) {
  double peak = 0.0;
  for (double value : v) peak = std::max(peak, std::abs(value));
  const double slack = tol * std::max(1.0, peak);
  MonotoneScan scan;
  const double span = v.back() - v.front();
  scan.direction = span > slack ? 1 : (span < -slack ? -1 : 0);
  scan.monotone = true;
  if (scan.direction == 0) {
    for (double value : v) {
      if (std::abs(value - v.front()) > slack) {
        scan.monotone = false;
        break;
      }
    }
    return scan;
  }
  for (std::size_t i = 0; i + 1 < v.size(); ++i) {
    if ((v[i + 1] - v[i]) * static_cast<double>(scan.direction) < -slack) {
      scan.monotone = false;
      break;
    }
  }
  return scan;
}

// Shared hypothesis: x -> d/da log density is monotone in x for every listed
// a, all in one direction.  Returns false on any violation or direction
// conflict; direction_out = 0 means constant in x for every a.
bool log_deriv_direction(const DensityFamily& family,
                         const std::vector<double>& a_values,
                         const std::vector<double>& grid, int* direction_out) {
  int direction = 0;
  for (double a : a_values) {
    std::vector<double> g(grid.size());
    for (std::size_t i = 0; i < grid.size(); ++i) {
      g[i] = family.log_deriv_a(a, grid[i]);
      if (!std::isfinite(g[i])) return false;
    }
    const MonotoneScan scan = scan_monotone(g, kHypothesisTol);
    if (!scan.monotone) return false;
    if (scan.direction != 0) {
      if (direction != 0 && direction != scan.direction) return false;
      direction = scan.direction;
    }
  }
  *direction_out = direction;
  return true;
}

void check_family(const DensityFamily& family, std::size_t node_count) {
  if (!family.density) {
    throw std::domain_error("framework: family.density must be set");
  }
  if (!(family.hi > family.lo) || !std::isfinite(family.lo) ||
      !std::isfinite(family.hi)) {
    throw std::domain_error("framework: requires finite hi > lo");
  }
  if (node_count < 3) {
    throw std::domain_error("framework: requires at least 3 nodes");
  }
}

}  // namespace

DiscretizedMeasure discretize(const DensityFamily& family, double a,
                              std::size_t node_count) {
  check_family(family, node_count);
  if (!std::isfinite(a)) throw std::domain_error("discretize: a must be finite");
  DiscretizedMeasure measure;
  measure.nodes = uniform_grid(family.lo, family.hi, node_count);
  const double h = measure.nodes[1] - measure.nodes[0];
  std::vector<double> f(node_count);
  double peak = 0.0;
  for (std::size_t i = 0; i < node_count; ++i) {
    f[i] = family.density(a, measure.nodes[i]);
    if (!std::isfinite(f[i]) || f[i] < 0.0) {
      throw std::domain_error(
          "discretize: density must be finite and nonnegative on [lo, hi]");
    }
    peak = std::max(peak, f[i]);
  }
  if (peak <= 0.0) {
    throw std::domain_error("discretize: density vanishes identically");
  }
  measure.weights.resize(node_count);
  for (std::size_t i = 0; i < node_count; ++i) {
    if (f[i] < 1e-16 * peak) f[i] = 0.0;  // truncation of negligible mass
    const bool edge = i == 0 || i + 1 == node_count;
    measure.weights[i] = (edge ? 0.5 : 1.0) * h * f[i];
  }
  return measure;
}

double measure_quantile(const DiscretizedMeasure& measure, double p) {
  const std::size_t n = measure.nodes.size();
  if (n < 3 || measure.weights.size() != n) {
    throw std::domain_error("measure_quantile: malformed measure");
  }
  if (!(p > 0.0) || !(p < 1.0)) {
    throw std::domain_error("measure_quantile: requires 0 < p < 1");
  }
  const double h = measure.nodes[1] - measure.nodes[0];
  // Node masses back to density values, then the trapezoid CDF at the nodes.
  std::vector<double> f(n);
  for (std::size_t i = 0; i < n; ++i) {
    const bool edge = i == 0 || i + 1 == n;
    f[i] = (edge ? 2.0 : 1.0) * measure.weights[i] / h;
  }
  std::vector<double> cdf(n);
  cdf[0] = 0.0;
  for (std::size_t i = 1; i < n; ++i) {
    cdf[i] = cdf[i - 1] + 0.5 * h * (f[i - 1] + f[i]);
  }
  const double total = cdf.back();
  if (!(total > 0.0)) {
    throw std::domain_error("measure_quantile: zero total mass");
  }
  const double target = p * total;
  std::size_t j = n - 1;
  for (std::size_t i = 1; i < n; ++i) {
    if (cdf[i] >= target) {
      j = i;
      break;
    }
  }
  const double segment = cdf[j] - cdf[j - 1];
  if (segment <= 0.0) return measure.nodes[j - 1];  // leftmost crossing
  return measure.nodes[j - 1] + h * (target - cdf[j - 1]) / segment;
}

FrameworkCheckResult ratio_monotonicity_check(
    const DensityFamily& family, const std::vector<double>& a_values,
    const std::function<double(double)>& u,
    const std::function<double(double)>& v, std::size_t node_count) {
  check_family(family, node_count);
  if (!family.log_deriv_a) {
    throw std::domain_error(
        "ratio_monotonicity_check: family.log_deriv_a must be set");
  }
  if (!u || !v || a_values.size() < 2) {
    throw std::domain_error(
        "ratio_monotonicity_check: needs u, v and at least two a values");
  }
  const std::vector<double> grid =
      uniform_grid(family.lo, family.hi, node_count);

  FrameworkCheckResult result;
  bool hypothesis = true;

  // Weight hypothesis: u, v >= 0 and u/v monotone where v carries mass.
  std::vector<double> uvals(node_count), vvals(node_count);
  std::vector<double> ratio;
  ratio.reserve(node_count);
  for (std::size_t i = 0; i < node_count; ++i) {
    uvals[i] = u(grid[i]);
    vvals[i] = v(grid[i]);
    if (!std::isfinite(uvals[i]) || !std::isfinite(vvals[i]) ||
        uvals[i] < 0.0 || vvals[i] < 0.0) {
      hypothesis = false;
    }
    if (vvals[i] > 0.0) ratio.push_back(uvals[i] / vvals[i]);
  }
  int dir_ratio = 0;
  if (hypothesis && ratio.size() >= 2) {
    const MonotoneScan scan = scan_monotone(ratio, kHypothesisTol);
    hypothesis = scan.monotone;
    dir_ratio = scan.direction;
  }

  int dir_g = 0;
  if (hypothesis) {
    hypothesis = log_deriv_direction(family, a_values, grid, &dir_g);
  }
  result.hypothesis_ok = hypothesis;

  std::vector<double> r(a_values.size());
  double peak = 0.0;
  for (std::size_t j = 0; j < a_values.size(); ++j) {
    const DiscretizedMeasure measure =
        discretize(family, a_values[j], node_count);
    double num = 0.0;
    double den = 0.0;
    for (std::size_t i = 0; i < node_count; ++i) {
      num += uvals[i] * measure.weights[i];
      den += vvals[i] * measure.weights[i];
    }
    if (!(den > 0.0)) {
      throw std::domain_error("ratio_monotonicity_check: v sees no mass");
    }
    r[j] = num / den;
    peak = std::max(peak, std::abs(r[j]));
  }

  const int expected = dir_ratio * dir_g;
  double worst = 0.0;
  if (expected == 0) {
    for (double value : r) worst = std::max(worst, std::abs(value - r.front()));
  } else {
    for (std::size_t j = 0; j + 1 < r.size(); ++j) {
      worst = std::max(worst,
                       (r[j] - r[j + 1]) * static_cast<double>(expected));
    }
  }
  result.worst_violation = worst;
  result.conclusion_ok =
      hypothesis && worst <= kConclusionTol * std::max(1.0, peak);
  return result;
}

FrameworkCheckResult quantile_monotonicity_check(
    const DensityFamily& family, const std::vector<double>& a_values, double p,
    std::size_t node_count) {
  check_family(family, node_count);
  if (!family.log_deriv_a) {
    throw std::domain_error(
        "quantile_monotonicity_check: family.log_deriv_a must be set");
  }
  if (a_values.size() < 2) {
    throw std::domain_error(
        "quantile_monotonicity_check: needs at least two a values");
  }
  const std::vector<double> grid =
      uniform_grid(family.lo, family.hi, node_count);

  FrameworkCheckResult result;
  int dir_g = 0;
  result.hypothesis_ok = log_deriv_direction(family, a_values, grid, &dir_g);

  std::vector<double> quantiles(a_values.size());
  for (std::size_t j = 0; j < a_values.size(); ++j) {
    quantiles[j] =
        measure_quantile(discretize(family, a_values[j], node_count), p);
  }

  const double span = family.hi - family.lo;
  double worst = 0.0;
  if (dir_g == 0) {
    for (double value : quantiles) {
      worst = std::max(worst, std::abs(value - quantiles.front()));
    }
  } else {
    for (std::size_t j = 0; j + 1 < quantiles.size(); ++j) {
      worst = std::max(worst, (quantiles[j] - quantiles[j + 1]) *
                                  static_cast<double>(dir_g));
    }
  }
  result.worst_violation = worst;
  result.conclusion_ok = result.hypothesis_ok &&
                         worst <= kConclusionTol * std::max(1.0, span);
  return result;
}

ConvergenceResult quantile_convergence_check(const DensityFamily& family,
                                             const std::vector<double>& a_values,
                                             double p, double limit,
                                             double slack,
                                             std::size_t node_count) {
  check_family(family, node_count);
  if (a_values.empty() || !std::isfinite(limit) || !(slack > 0.0)) {
    throw std::domain_error(
        "quantile_convergence_check: needs a values, finite limit, slack > 0");
  }
  ConvergenceResult result;
  for (double a : a_values) {
    const double quantile_value =
        measure_quantile(discretize(family, a, node_count), p);
    result.worst_gap =
        std::max(result.worst_gap, std::abs(quantile_value - limit));
  }
  result.within_slack = result.worst_gap <= slack;
  return result;
}

}  // namespace betaquant
