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
#include <utility>
#include <vector>

#include "spep/linear_optics.hpp"

namespace spep {

/// Givens-rotation mesh covering U(M).
///
/// U = R_1 R_2 ... R_K D with K = M(M-1)/2. Rotation R_k acts on the mode
/// pair listed by mesh_pairs() with the block
///   [[e^{-i phi} cos t, e^{-i phi} sin t], [-sin t, cos t]]
/// and D = diag(e^{i delta_m}). The pairs sweep the columns of a triangular
/// mesh: for c = 0..M-2, pairs (j-1, j) for j = M-1 down to c+1.
///
/// Angle vector layout: theta_1, phi_1, ..., theta_K, phi_K, delta_0, ...,
/// delta_{M-1}; M^2 entries in total.
class UnitaryParameterization {
 public:
  explicit UnitaryParameterization(std::size_t mode_count);
  UnitaryParameterization(std::size_t mode_count, std::vector<double> angles);

  static std::size_t parameter_count(std::size_t mode_count) { return mode_count * mode_count; }
  static std::vector<std::pair<ModeIndex, ModeIndex>> mesh_pairs(std::size_t mode_count);

  /// Exact inverse of build() up to angle periodicity.
  static UnitaryParameterization decompose(const ModeUnitary& u);

  std::size_t mode_count() const { return mode_count_; }
  std::span<const double> angles() const { return angles_; }

  ModeUnitary build() const;

 private:
  std::size_t mode_count_;
  std::vector<double> angles_;
};

}  // namespace spep
