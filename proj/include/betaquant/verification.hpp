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

#ifndef BETAQUANT_VERIFICATION_HPP
#define BETAQUANT_VERIFICATION_HPP

#include <cstddef>
#include <vector>

#include "betaquant/report.hpp"
#include "betaquant/tolerances.hpp"

namespace betaquant {

// Default evaluation grid: 60 log-spaced a on [1e-2, 1e3] crossed with the
// b and p lists below.
std::vector<double> standard_a_grid();
std::vector<double> standard_b_grid();  // {0.3, 0.5, 0.9, 1, 1.5, 3, 7}
std::vector<double> standard_p_grid();  // {0.1, 0.5, 0.9}

// One quantile-curve sweep over a at fixed (b, p).
enum class SweepScale { linear, log };

struct SweepSpec {
  double b = 1.0;
  double p = 0.5;
  double a_min = 1e-2;
  double a_max = 1e3;
  std::size_t points = 60;
  SweepScale scale = SweepScale::log;
};

struct SweepRow {
  double a = 0.0;
  double q = 0.0;
  double log_q = 0.0;
  double phi = 0.0;
  double psi_prime_series = 0.0;
  double psi_second_fd = 0.0;
};

std::vector<SweepRow> run_sweep(const SweepSpec& spec,
                                const ToleranceConfig& tol = ToleranceConfig{});

// Property suites.  Each runs its grid checks against tolerances pinned in
// the implementation and returns one record per property; run_all
// concatenates every suite in a fixed order.
VerificationReport run_identities(const ToleranceConfig& tol = ToleranceConfig{});
VerificationReport run_monotonicity(const ToleranceConfig& tol = ToleranceConfig{});
VerificationReport run_convexity(const ToleranceConfig& tol = ToleranceConfig{});
VerificationReport run_logconcavity(const ToleranceConfig& tol = ToleranceConfig{});
VerificationReport run_framework(const ToleranceConfig& tol = ToleranceConfig{});
VerificationReport run_all(const ToleranceConfig& tol = ToleranceConfig{});

}  // namespace betaquant

#endif  // BETAQUANT_VERIFICATION_HPP
