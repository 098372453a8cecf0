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

#ifndef BETAQUANT_TOLERANCES_HPP
#define BETAQUANT_TOLERANCES_HPP

#include <cstddef>
#include <stdexcept>

namespace betaquant {

// Every numeric knob in one auditable record.  Defaults are the contract the
// verification suites are tuned against; override via CLI flags only.
struct ToleranceConfig {
  double quantile_abs_tol = 1e-13;   // |I(q;a,b) - p| on success
  int max_newton_iters = 100;        // quantile / gamma-quantile iteration cap
  double fd_rel_step = 1e-4;         // relative step h = fd_rel_step * a
  double series_tail_tol = 1e-12;    // relative tail target for series sums
  std::size_t series_max_terms = 200000;
  double quad_abs_tol = 1e-10;       // adaptive quadrature absolute target

  void validate() const {
    if (!(quantile_abs_tol > 0) || !(fd_rel_step > 0) ||
        !(series_tail_tol > 0) || !(quad_abs_tol > 0))
      throw std::domain_error("ToleranceConfig: tolerances must be positive");
    if (max_newton_iters < 10)
      throw std::domain_error("ToleranceConfig: max_newton_iters < 10");
    if (series_max_terms < 100)
      throw std::domain_error("ToleranceConfig: series_max_terms < 100");
  }
};

}  // namespace betaquant

#endif  // BETAQUANT_TOLERANCES_HPP
