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

#ifndef BETAQUANT_TESTS_TEST_COMMON_H
#define BETAQUANT_TESTS_TEST_COMMON_H

#include <cmath>

#include <doctest.h>

// |value - expected| <= tol
#define CHECK_ABS(value, expected, tol)                                      \
  do {                                                                       \
    const double check_abs_v_ = (value);                                     \
    const double check_abs_e_ = (expected);                                  \
    CHECK_MESSAGE(std::abs(check_abs_v_ - check_abs_e_) <= (tol),            \
                  "value=" << check_abs_v_ << " expected=" << check_abs_e_   \
                           << " |diff|="                                     \
                           << std::abs(check_abs_v_ - check_abs_e_));        \
  } while (0)

// |value - expected| <= tol * |expected|
#define CHECK_REL(value, expected, tol)                                      \
  do {                                                                       \
    const double check_rel_v_ = (value);                                     \
    const double check_rel_e_ = (expected);                                  \
    CHECK_MESSAGE(std::abs(check_rel_v_ - check_rel_e_) <=                   \
                      (tol) * std::abs(check_rel_e_),                        \
                  "value=" << check_rel_v_ << " expected=" << check_rel_e_   \
                           << " rel="                                        \
                           << std::abs(check_rel_v_ - check_rel_e_) /        \
                                  std::abs(check_rel_e_));                   \
  } while (0)

#endif  // BETAQUANT_TESTS_TEST_COMMON_H
