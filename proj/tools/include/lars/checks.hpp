// Copyright 2026 The lars Authors
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

#pragma once

/**
 * @file checks.hpp
 * @brief End-to-end checks, one per acceptance criterion, shared by the
 * `suite` verb and the acceptance test binary.
 */

#include <random>
#include <string>
#include <vector>

#include "lars/io.hpp"

namespace lars {

struct CheckResult {
  int id = 0;
  std::string name;
  bool pass = false;
  std::string detail;
  double seconds = 0;
};

Json to_json(const CheckResult& r);

CheckResult check_axiom_suite();
CheckResult check_realization_match();
CheckResult check_coroot_formula();
CheckResult check_two_affine(std::mt19937_64& rng);
CheckResult check_grading(std::mt19937_64& rng);
CheckResult check_weight_sets();
CheckResult check_gcm();
CheckResult check_p3_obstruction(std::mt19937_64& rng);
CheckResult check_iso_certificates();
CheckResult check_unitary();
CheckResult check_jacobi(std::mt19937_64& rng);

/// Runs the selected checks (all when `only` is empty) in id order.
std::vector<CheckResult> run_suite(std::mt19937_64& rng, const std::vector<int>& only = {});

}  // namespace lars
