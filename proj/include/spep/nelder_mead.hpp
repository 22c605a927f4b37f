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

#include <functional>
#include <span>
#include <vector>

namespace spep {

struct NelderMeadOptions {
  int max_iterations = 20000;
  /// Converged when the simplex's value spread is below this and a fresh
  /// simplex around the best vertex no longer improves by more than it.
  double tolerance = 1e-12;
  double initial_step = 0.5;
};

struct NelderMeadResult {
  std::vector<double> x;
  double value = 0.0;
  int iterations = 0;
  int evaluations = 0;
  bool converged = false;
};

using Objective = std::function<double(std::span<const double>)>;

/// Minimizes `f` by simplex descent (reflection 1, expansion 2, contraction
/// 1/2, shrink 1/2) starting from an axis-aligned simplex around `start`.
NelderMeadResult nelder_mead_minimize(const Objective& f, std::vector<double> start,
                                      const NelderMeadOptions& options);

}  // namespace spep
