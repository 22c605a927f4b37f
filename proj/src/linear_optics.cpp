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

#include "spep/linear_optics.hpp"

#include <cmath>
#include <limits>
#include <string>

#include "spep/errors.hpp"

namespace spep {

namespace {

// sqrt(n!) for small n.
double sqrt_factorial(int n) {
  double f = 1.0;
  for (int k = 2; k <= n; ++k) f *= k;
  return std::sqrt(f);
}

struct Expander {
  const Eigen::MatrixXcd& u;
  std::size_t modes;
  std::vector<ModeIndex> photon_inputs;  // input mode of each photon
  std::array<int, kMaxModes> out{};
  std::vector<PureState::Term>* sink;

  void run(std::size_t photon, Complex coeff) {
    if (photon == photon_inputs.size()) {
      double bosonic = 1.0;
      for (std::size_t j = 0; j < modes; ++j) bosonic *= sqrt_factorial(out[j]);
      sink->emplace_back(FockBasisState(std::span<const int>(out.data(), modes)), coeff * bosonic);
      return;
    }
    const ModeIndex in = photon_inputs[photon];
    for (std::size_t j = 0; j < modes; ++j) {
      const Complex w = u(static_cast<Eigen::Index>(in), static_cast<Eigen::Index>(j));
      if (w == Complex{}) continue;
      ++out[j];
      run(photon + 1, coeff * w);
      --out[j];
    }
  }
};

}  // namespace

ModeUnitary::ModeUnitary(Eigen::MatrixXcd matrix, double tolerance) : matrix_(std::move(matrix)) {
  if (matrix_.rows() != matrix_.cols()) throw DomainError("mode unitary must be square");
  if (static_cast<std::size_t>(matrix_.rows()) > kMaxModes) {
    throw IndexError("mode unitary exceeds the mode limit");
  }
  const double defect = unitarity_defect(matrix_);
  if (!(defect <= tolerance)) {
    throw DomainError("matrix is not unitary (defect " + std::to_string(defect) + ")");
  }
}

ModeUnitary ModeUnitary::identity(std::size_t mode_count) {
  const auto n = static_cast<Eigen::Index>(mode_count);
  return ModeUnitary(Eigen::MatrixXcd::Identity(n, n));
}

double unitarity_defect(const Eigen::MatrixXcd& m) {
  if (m.rows() != m.cols()) return std::numeric_limits<double>::infinity();
  return (m * m.adjoint() - Eigen::MatrixXcd::Identity(m.rows(), m.cols())).norm();
}

ModeUnitary u_of(const BeamSplitterParams& p) {
  const double c = std::cos(p.theta);
  const double s = std::sin(p.theta);
  Eigen::Matrix2cd m;
  m(0, 0) = c * std::exp(Complex{0.0, p.xi});
  m(0, 1) = -s * std::exp(Complex{0.0, -p.phi});
  m(1, 0) = s * std::exp(Complex{0.0, p.phi});
  m(1, 1) = c * std::exp(Complex{0.0, -p.xi});
  return ModeUnitary(m);
}

ModeUnitary embed(const ModeUnitary& u, std::span<const ModeIndex> target_modes,
                  std::size_t total_modes) {
  if (target_modes.size() != u.mode_count()) {
    throw IndexError("embed: target mode list length must equal the unitary's mode count");
  }
  std::vector<bool> used(total_modes, false);
  for (ModeIndex m : target_modes) {
    if (m >= total_modes) throw IndexError("embed: target mode " + std::to_string(m) + " out of range");
    if (used[m]) throw IndexError("embed: target modes overlap at " + std::to_string(m));
    used[m] = true;
  }
  const auto n = static_cast<Eigen::Index>(total_modes);
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Identity(n, n);
  for (std::size_t i = 0; i < target_modes.size(); ++i) {
    for (std::size_t j = 0; j < target_modes.size(); ++j) {
      m(static_cast<Eigen::Index>(target_modes[i]), static_cast<Eigen::Index>(target_modes[j])) =
          u(i, j);
    }
  }
  return ModeUnitary(std::move(m));
}

ModeUnitary compose(const ModeUnitary& u, const ModeUnitary& v) {
  if (u.mode_count() != v.mode_count()) throw IndexError("compose: mode count mismatch");
  return ModeUnitary(v.matrix() * u.matrix());
}

ModeUnitary adjoint(const ModeUnitary& u) { return ModeUnitary(u.matrix().adjoint()); }

PureState apply(const ModeUnitary& u, const PureState& state) {
  if (u.mode_count() != state.mode_count()) throw IndexError("apply: mode count mismatch");
  const std::size_t modes = state.mode_count();
  std::vector<PureState::Term> terms;
  Expander ex{u.matrix(), modes, {}, {}, &terms};
  for (const auto& [ket, amp] : state.terms()) {
    ex.photon_inputs.clear();
    double norm = 1.0;
    for (std::size_t i = 0; i < modes; ++i) {
      const int n = ket.occupation(i);
      norm *= sqrt_factorial(n);
      for (int k = 0; k < n; ++k) ex.photon_inputs.push_back(i);
    }
    ex.run(0, amp / norm);
  }
  return PureState::from_terms(modes, std::move(terms));
}

MixedState apply(const ModeUnitary& u, const MixedState& state) {
  std::vector<MixedComponent> out;
  out.reserve(state.components().size());
  for (const auto& c : state.components()) out.push_back({c.weight, apply(u, c.state)});
  return MixedState(state.mode_count(), std::move(out));
}

}  // namespace spep
