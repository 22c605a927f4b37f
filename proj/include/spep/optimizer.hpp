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
#include <span>
#include <vector>

#include "spep/mesh.hpp"

namespace spep {

inline constexpr std::size_t kMaxAncillaPerSide = 2;

struct SearchConfig {
  int restarts = 50;
  int max_iterations = 4000;  ///< Nelder-Mead iterations per restart
  double tolerance = 1e-12;
  std::uint64_t seed = 1;
  std::size_t ancilla_per_side = 0;
  int workers = 0;            ///< 0 = hardware concurrency; never changes the result
};

struct SearchResult {
  double best_fidelity = 0.5;
  UnitaryParameterization alice{2};
  UnitaryParameterization bob{2};
  long long evaluations = 0;  ///< summed over all restarts
  bool converged = false;     ///< of the winning restart
  int best_restart = 0;
};

/// Post-selected output fidelity for mesh-parameterized Alice and Bob
/// devices with `ancilla_per_side` vacuum inputs each.
///
/// Heralding: exactly one photon in a single detector mode (any output other
/// than a~ and b~), all other detector modes empty; branches are combined by
/// probability with the heralded phase correction. Returns 1/2 when no
/// branch can occur.
class PurificationObjective {
 public:
  PurificationObjective(double input_fidelity, std::size_t ancilla_per_side);

  std::size_t modes_per_side() const { return modes_per_side_; }
  /// Length of the parameter vector: Alice's M^2 angles then Bob's.
  std::size_t dimension() const { return 2 * UnitaryParameterization::parameter_count(modes_per_side_); }

  double operator()(std::span<const double> params) const;
  double operator()(const UnitaryParameterization& alice, const UnitaryParameterization& bob) const;

 private:
  std::size_t modes_per_side_;
  MixedState input_;
};

double objective(double input_fidelity, const UnitaryParameterization& alice,
                 const UnitaryParameterization& bob, std::size_t ancilla_per_side);

/// Random-restart simplex search maximizing the objective. Restart r starts
/// from angles drawn by a generator seeded from (seed, r), so the result is
/// bit-identical for any worker count.
SearchResult search(double input_fidelity, const SearchConfig& config);

}  // namespace spep
