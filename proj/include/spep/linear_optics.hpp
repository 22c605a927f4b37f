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

#include <Eigen/Dense>
#include <span>

#include "spep/fock.hpp"

namespace spep {

inline constexpr double kUnitarityTolerance = 1e-10;

/// Angles (theta, phi, xi) of the general two-mode transformation
///   [[cos t e^{i xi}, -sin t e^{-i phi}], [sin t e^{i phi}, cos t e^{-i xi}]].
struct BeamSplitterParams {
  double theta = 0.0;
  double phi = 0.0;
  double xi = 0.0;
};

/// M x M unitary acting on mode creation operators.
///
/// Convention: input creation operator a_i^dagger is replaced by
/// sum_j U(i, j) b_j^dagger, where b_j are the output modes. Row i of the
/// matrix therefore lists where a photon entering mode i ends up.
class ModeUnitary {
 public:
  /// Validates ||U U^dagger - I||_F <= tolerance; throws DomainError otherwise.
  explicit ModeUnitary(Eigen::MatrixXcd matrix, double tolerance = kUnitarityTolerance);

  static ModeUnitary identity(std::size_t mode_count);

  std::size_t mode_count() const { return static_cast<std::size_t>(matrix_.rows()); }
  const Eigen::MatrixXcd& matrix() const { return matrix_; }
  Complex operator()(std::size_t row, std::size_t col) const { return matrix_(row, col); }

 private:
  Eigen::MatrixXcd matrix_;
};

/// Frobenius norm of U U^dagger - I (infinity for non-square input).
double unitarity_defect(const Eigen::MatrixXcd& m);

ModeUnitary u_of(const BeamSplitterParams& p);

/// Places `u` on `target_modes` (in order) of a `total_modes` identity.
ModeUnitary embed(const ModeUnitary& u, std::span<const ModeIndex> target_modes,
                  std::size_t total_modes);

/// The device "v, then u". Its matrix is V * U under the substitution
/// convention, so apply(compose(u, v), s) == apply(u, apply(v, s)).
ModeUnitary compose(const ModeUnitary& u, const ModeUnitary& v);
ModeUnitary adjoint(const ModeUnitary& u);

/// Rewrites every input creation operator by its row combination of output
/// operators and expands the product exactly (bosonic sqrt(n!) factors
/// included). Cost grows as (modes)^(photons) per basis term.
PureState apply(const ModeUnitary& u, const PureState& state);
MixedState apply(const ModeUnitary& u, const MixedState& state);

}  // namespace spep
