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

#ifndef BETAQUANT_REPORT_HPP
#define BETAQUANT_REPORT_HPP

#include <string>
#include <vector>

#include "betaquant/tolerances.hpp"

namespace betaquant {

// One verified property.  `residual` and `tolerance` are reporting data (the
// measured worst value and the pinned threshold it was compared against);
// `pass` is authoritative.  Informational checks never gate a suite.
struct CheckRecord {
  std::string name;
  std::string params;
  double residual = 0.0;
  double tolerance = 0.0;
  bool pass = false;
  std::string witness;  // worst-point detail, empty when not meaningful
  bool informational = false;
};

struct VerificationReport {
  std::string suite;
  std::vector<CheckRecord> checks;
  ToleranceConfig tolerances;

  bool overall_pass() const;

  // Deterministic JSON: fixed key order, no timestamps, shortest-roundtrip
  // number formatting.  Two runs over identical inputs are byte-identical.
  std::string to_json_string(int indent = 2) const;
};

}  // namespace betaquant

#endif  // BETAQUANT_REPORT_HPP
