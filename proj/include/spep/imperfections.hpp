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

#include "spep/detection.hpp"
#include "spep/protocol.hpp"

namespace spep {

/// Hong-Ou-Mandel dip visibility of the two photons that meet on each
/// party's beam splitter (1 = perfectly indistinguishable).
///
/// Model: every photon carries an internal label. The photon of copy 2
/// shares copy 1's internal mode with probability V and sits in an
/// orthogonal one with probability 1 - V (classical mixture). Detectors do
/// not resolve the label, and the label is traced out before fidelities are
/// evaluated. For otherwise ideal single photons the HOM visibility equals
/// this overlap probability.
struct VisibilityModel {
  double visibility = 1.0;
};

struct ImperfectOutcome {
  double single_photon_fidelity = 0.5;  ///< fidelity of the normalized one-photon part of (a~, b~)
  double vacuum_weight = 0.0;           ///< vacuum share of the normalized heralded state
  double success_probability = 0.0;     ///< raw heralding probability, both branches
};

/// Traces out an internal label from a state whose modes are ordered
/// label-major (mode = label * path_count + path). Every basis term must
/// keep its photons within a single label; vacuum terms stay with label 0.
MixedState trace_internal(const MixedState& state, std::size_t path_count, std::size_t label_count);

/// Simplified protocol family (theta, theta - pi/2, zero phases) with
/// partially distinguishable photons; combined branch outcome.
ProtocolOutcome run_with_visibility(double input_fidelity, double theta, const VisibilityModel& vis);

/// Simplified protocol family read out by inefficient detectors on d_a, d_b.
ImperfectOutcome run_with_efficiency(double input_fidelity, double theta, const DetectorModel& detectors);

}  // namespace spep
