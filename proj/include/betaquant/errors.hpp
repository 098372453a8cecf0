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

#ifndef BETAQUANT_ERRORS_HPP
#define BETAQUANT_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace betaquant {

// Iterative scheme (root finder, continued fraction, quadrature, series)
// failed to reach its tolerance within its budget.  Distinct from
// std::domain_error, which we throw for invalid inputs.
class convergence_error : public std::runtime_error {
 public:
  explicit convergence_error(const std::string& what)
      : std::runtime_error(what) {}
};

}  // namespace betaquant

#endif  // BETAQUANT_ERRORS_HPP
