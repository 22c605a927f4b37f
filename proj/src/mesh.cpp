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

#include "spep/mesh.hpp"

#include <cmath>
#include <numbers>

#include "spep/errors.hpp"

namespace spep {

UnitaryParameterization::UnitaryParameterization(std::size_t mode_count)
    : UnitaryParameterization(mode_count, std::vector<double>(parameter_count(mode_count), 0.0)) {}

UnitaryParameterization::UnitaryParameterization(std::size_t mode_count, std::vector<double> angles)
    : mode_count_(mode_count), angles_(std::move(angles)) {
  if (mode_count == 0 || mode_count > kMaxModes) throw IndexError("mesh mode count out of range");
  if (angles_.size() != parameter_count(mode_count)) {
    throw DomainError("mesh needs " + std::to_string(parameter_count(mode_count)) + " angles, got " +
                      std::to_string(angles_.size()));
  }
}

std::vector<std::pair<ModeIndex, ModeIndex>> UnitaryParameterization::mesh_pairs(std::size_t mode_count) {
  std::vector<std::pair<ModeIndex, ModeIndex>> pairs;
  for (std::size_t c = 0; c + 1 < mode_count; ++c) {
    for (std::size_t j = mode_count - 1; j > c; --j) pairs.emplace_back(j - 1, j);
  }
  return pairs;
}

ModeUnitary UnitaryParameterization::build() const {
  const auto n = static_cast<Eigen::Index>(mode_count_);
  const auto pairs = mesh_pairs(mode_count_);
  const std::size_t rotations = pairs.size();

  Eigen::MatrixXcd u = Eigen::MatrixXcd::Zero(n, n);
  for (Eigen::Index m = 0; m < n; ++m) {
    u(m, m) = std::exp(Complex{0.0, angles_[2 * rotations + static_cast<std::size_t>(m)]});
  }
  // Left-multiply R_K first so that the product reads R_1 ... R_K D.
  for (std::size_t k = rotations; k-- > 0;) {
    const auto i = static_cast<Eigen::Index>(pairs[k].first);
    const auto j = static_cast<Eigen::Index>(pairs[k].second);
    const double c = std::cos(angles_[2 * k]);
    const double s = std::sin(angles_[2 * k]);
    const Complex e = std::exp(Complex{0.0, -angles_[2 * k + 1]});
    const Eigen::RowVectorXcd ri = u.row(i);
    const Eigen::RowVectorXcd rj = u.row(j);
    u.row(i) = e * c * ri + e * s * rj;
    u.row(j) = -s * ri + c * rj;
  }
  return ModeUnitary(std::move(u));
}

UnitaryParameterization UnitaryParameterization::decompose(const ModeUnitary& target) {
  const std::size_t m = target.mode_count();
  const auto pairs = mesh_pairs(m);
  std::vector<double> angles(parameter_count(m), 0.0);
  Eigen::MatrixXcd w = target.matrix();

  // Null the sub-diagonal column by column with T_k = R_k^dagger acting on
  // rows (i, j); what remains is the diagonal D.
  std::size_t k = 0;
  for (std::size_t col = 0; col + 1 < m; ++col) {
    for (std::size_t row = m - 1; row > col; --row, ++k) {
      const auto i = static_cast<Eigen::Index>(pairs[k].first);
      const auto j = static_cast<Eigen::Index>(pairs[k].second);
      const auto c = static_cast<Eigen::Index>(col);
      const Complex upper = w(i, c);
      const Complex lower = w(j, c);
      double theta = 0.0;
      double phi = 0.0;
      if (std::abs(lower) > 0.0) {
        theta = std::atan2(std::abs(lower), std::abs(upper));
        phi = std::abs(upper) > 0.0 ? std::numbers::pi + std::arg(lower) - std::arg(upper) : 0.0;
      }
      angles[2 * k] = theta;
      angles[2 * k + 1] = phi;
      const double ct = std::cos(theta);
      const double st = std::sin(theta);
      const Complex e = std::exp(Complex{0.0, phi});
      const Eigen::RowVectorXcd ri = w.row(i);
      const Eigen::RowVectorXcd rj = w.row(j);
      w.row(i) = e * ct * ri - st * rj;
      w.row(j) = e * st * ri + ct * rj;
    }
  }
  for (std::size_t d = 0; d < m; ++d) {
    const auto idx = static_cast<Eigen::Index>(d);
    angles[2 * pairs.size() + d] = std::arg(w(idx, idx));
  }
  return UnitaryParameterization(m, std::move(angles));
}

}  // namespace spep
