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

#include <span>
#include <string>
#include <vector>

#include "spep/optimizer.hpp"

namespace spep {

/// Evenly spaced input fidelities, both ends included.
struct FidelityGrid {
  double f_min = 0.5;
  double f_max = 1.0;
  int points = 51;

  /// Throws DomainError unless 0 <= f_min <= f_max <= 1 and points >= 2.
  void validate() const;
  std::vector<double> values() const;
};

// CSV dialect shared by every dataset: ',' separator, '.' decimal point,
// '\n' line ends, leading '#' provenance lines, one header line, numbers at
// 15 significant digits. Rows whose evaluation is degenerate are replaced
// by a "# skipped F=..." comment.

/// F, f_opt, f_1, theta_opt, p_opt, p_1
std::string curves_csv(const FidelityGrid& grid);

/// F, then f_1(F; V) - F for every visibility V (theta = pi/8).
std::string visibility_csv(const FidelityGrid& grid, std::span<const double> visibilities, int workers = 0);

/// F, ancilla_per_side, best_fidelity, f_opt, gap, evaluations. The search
/// runs with `config` except for its ancilla field, taken from `ancillas`.
std::string optimize_csv(std::span<const double> fidelities, std::span<const std::size_t> ancillas,
                         const SearchConfig& config);

}  // namespace spep
