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

#include "betaquant/report.hpp"

#include <json.hpp>

namespace betaquant {

bool VerificationReport::overall_pass() const {
  for (const CheckRecord& check : checks) {
    if (!check.informational && !check.pass) return false;
  }
  return true;
}

std::string VerificationReport::to_json_string(int indent) const {
  nlohmann::ordered_json doc;
  doc["schema"] = 1;
  doc["suite"] = suite;
  nlohmann::ordered_json tol;
  tol["quantile_abs_tol"] = tolerances.quantile_abs_tol;
  tol["max_newton_iters"] = tolerances.max_newton_iters;
  tol["fd_rel_step"] = tolerances.fd_rel_step;
  tol["series_tail_tol"] = tolerances.series_tail_tol;
  tol["series_max_terms"] = tolerances.series_max_terms;
  tol["quad_abs_tol"] = tolerances.quad_abs_tol;
  doc["tolerances"] = tol;
  nlohmann::ordered_json list = nlohmann::ordered_json::array();
  for (const CheckRecord& check : checks) {
    nlohmann::ordered_json item;
    item["name"] = check.name;
    item["params"] = check.params;
    item["residual"] = check.residual;
    item["tolerance"] = check.tolerance;
    item["pass"] = check.pass;
    item["witness"] = check.witness;
    item["informational"] = check.informational;
    list.push_back(item);
  }
  doc["checks"] = list;
  doc["overall_pass"] = overall_pass();
  return doc.dump(indent) + "\n";
}

}  // namespace betaquant
