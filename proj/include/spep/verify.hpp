/*
 * Copyright 2026 The spep Authors.
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace spep {

struct VerifyOptions {
  std::vector<double> efficiencies{0.3, 0.6, 0.95};
  int configurations = 200;  ///< random protocol settings per randomized check
  std::uint64_t seed = 7;
  /// Fault injection for testing the checker: negates B- in the predicted
  /// conditional states.
  bool flip_b_minus_sign = false;
};

struct CheckResult {
  std::string name;
  double max_deviation = 0.0;
  double tolerance = 0.0;
  bool passed = false;
};

struct VerifyReport {
  std::vector<CheckResult> checks;
  std::string sample_state;  ///< debug dump of one heralded state

  bool passed() const;
  std::string format() const;
};

/// Cross-checks the closed forms against the Fock-space simulation:
/// conditional coefficients, branch traces and fidelities, the one-angle
/// family, optimal angle, success probabilities, detector-efficiency
/// invariance and the V = 1 reduction of the visibility model.
VerifyReport run_verification(const VerifyOptions& options = {});

}  // namespace spep
