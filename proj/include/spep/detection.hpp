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

#include <initializer_list>
#include <utility>
#include <vector>

#include "spep/fock.hpp"

namespace spep {

/// Required photon count per measured mode.
class DetectionPattern {
 public:
  using Requirement = std::pair<ModeIndex, int>;

  DetectionPattern() = default;
  DetectionPattern(std::initializer_list<Requirement> requirements);
  explicit DetectionPattern(std::vector<Requirement> requirements);

  /// Sorted by mode.
  const std::vector<Requirement>& requirements() const { return requirements_; }
  std::vector<ModeIndex> modes() const;

 private:
  std::vector<Requirement> requirements_;
};

/// Unnormalized post-measurement state on the unmeasured modes (kept in
/// their original relative order) together with the outcome probability,
/// which equals the state's trace.
struct ConditionalResult {
  MixedState state;
  double probability = 0.0;
};

struct DetectorModel {
  double efficiency = 1.0;  ///< probability that a present photon is registered
  bool resolving = true;    ///< photon-number resolving, otherwise click/no-click
};

/// Projects `state` onto the exact counts of the measured modes.
PureState project(const PureState& state, const DetectionPattern& pattern);

ConditionalResult condition(const MixedState& state, const DetectionPattern& pattern);

/// Partial trace over one mode; each occupation of the traced mode becomes
/// its own ensemble component.
MixedState trace_out(const MixedState& state, ModeIndex mode);

/// Detection of `observed` photons in `mode` by an inefficient detector.
///
/// Loss is a beam splitter of intensity transmission `efficiency` into a
/// hidden vacuum mode that is traced out; an ideal detector follows. In
/// threshold mode `observed` is 0 (no click) or 1 (click).
ConditionalResult lossy_detect(const MixedState& state, ModeIndex mode, const DetectorModel& model,
                               int observed);

}  // namespace spep
