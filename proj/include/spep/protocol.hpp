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

#include <vector>

#include "spep/detection.hpp"
#include "spep/fock.hpp"
#include "spep/linear_optics.hpp"

namespace spep {

/// Joint mode layout of the two-copy protocol. Inputs (a1, a2, b1, b2) map
/// to outputs (a~, d_a, b~, d_b) under U on Alice's pair and V on Bob's.
namespace layout {
inline constexpr ModeIndex kA1 = 0;
inline constexpr ModeIndex kA2 = 1;
inline constexpr ModeIndex kB1 = 2;
inline constexpr ModeIndex kB2 = 3;
inline constexpr ModeIndex kATilde = 0;
inline constexpr ModeIndex kDetectA = 1;
inline constexpr ModeIndex kBTilde = 2;
inline constexpr ModeIndex kDetectB = 3;
inline constexpr std::size_t kModes = 4;
}  // namespace layout

enum class Branch { detect_da, detect_db, combined };

/// Heralding probabilities at or below this count as impossible events.
inline constexpr double kZeroProbability = 1e-30;

struct ProtocolSpec {
  double input_fidelity = 1.0;
  BeamSplitterParams alice;
  BeamSplitterParams bob;
};

/// Alice at (theta, 0, 0), Bob at (theta - pi/2, 0, 0): the one-parameter
/// family with B+ = 0 and real B-.
ProtocolSpec simplified_spec(double input_fidelity, double theta);

/// Amplitudes of the heralded single-photon states. For the d_a branch the
/// conditional state of psi(s1) x psi(s2) is (A a~ + beta b~)|0>/2 with
/// beta = B- for (+,+), -B+ for (-,+), B+ for (+,-), -B- for (-,-).
/// The d_b branch exchanges the roles of U and V: A = cos 2theta' and both
/// B's are complex-conjugated.
struct ConditionalCoefficients {
  double a = 0.0;
  Complex b_plus;
  Complex b_minus;
};

ConditionalCoefficients coefficients(const ProtocolSpec& spec, Branch branch = Branch::detect_da);

/// Probability of one heralding branch (trace of its conditional state).
double trace_closed_form(const ProtocolSpec& spec, Branch branch = Branch::detect_da);

/// Fidelity of the heralded state with psi+ before any correction.
/// Throws DegenerateError when the branch has zero probability.
double fidelity_closed_form(const ProtocolSpec& spec, Branch branch = Branch::detect_da);

/// Fidelity after the heralded phase correction: a branch whose state is
/// closer to psi- than to psi+ gets a pi phase on b~. For Branch::combined
/// this is the probability-weighted average of both branches.
double heralded_fidelity_closed_form(const ProtocolSpec& spec, Branch branch);

/// Total success probability (both branches).
double success_probability_closed_form(const ProtocolSpec& spec);

/// Output fidelity of the simplified family as a function of theta, written
/// in sin/cos form so that 2 theta = pi/2 is regular.
double simplified_fidelity(double input_fidelity, double theta);

/// Optimal angle: tan 2 theta = 1 / sqrt(F^2 + (1 - F)^2), 2 theta in (0, pi/2].
double theta_opt(double input_fidelity);
double f_opt(double input_fidelity);
double p_opt(double input_fidelity);
/// theta = pi/8 for every input fidelity.
double f_1(double input_fidelity);
double p_1(double input_fidelity);

struct ProtocolOutcome {
  Branch branch = Branch::combined;
  double output_fidelity = 0.5;      ///< after the heralded phase correction
  double raw_fidelity = 0.5;         ///< before it
  double success_probability = 0.0;
  bool phase_corrected = false;
  MixedState conditional_state{2};   ///< (a~, b~), unnormalized, corrected
};

struct SimulationResult {
  ProtocolOutcome detect_da;
  ProtocolOutcome detect_db;
  ProtocolOutcome combined;
};

/// rho(F) x rho(F) with copy 1 on (a1, b1) and copy 2 on (a2, b2), padded
/// with `ancilla_per_side` vacuum modes per party. Alice owns modes [0, M),
/// Bob owns [M, 2M), M = 2 + ancilla_per_side; a1, a2 are Alice's first two
/// modes and b1, b2 Bob's.
MixedState two_copy_input(double input_fidelity, std::size_t ancilla_per_side = 0);

/// One heralding event of the generalized pipeline: exactly one photon in
/// `detector` and none in the other detector modes.
struct HeraldedBranch {
  ModeIndex detector = 0;
  bool bob_side = false;
  ProtocolOutcome outcome;
};

/// Generalized pipeline over M modes per side: apply `alice` on [0, M) and
/// `bob` on [M, 2M), keep outputs 0 (a~) and M (b~), treat the other outputs
/// as detectors. Returns one branch per detector mode, Alice's first.
std::vector<HeraldedBranch> run_heralded(const MixedState& input, const ModeUnitary& alice,
                                         const ModeUnitary& bob, const DetectorModel& detectors = {});

/// Post-measurement handling of one branch: decides the phase correction
/// and fills fidelities. `state` lives on (a~, b~).
ProtocolOutcome finish_branch(Branch branch, const MixedState& state, double probability);

/// Probability-weighted merge of branch outcomes. Throws DegenerateError
/// when every branch has zero probability.
ProtocolOutcome combine_branches(const std::vector<ProtocolOutcome>& branches);

/// Full Fock-space run of the two-mode protocol on both branches.
SimulationResult run_simulated(const ProtocolSpec& spec, const DetectorModel& detectors = {});

/// The closed-form conditional state on (a~, b~) for the d_a branch and pure
/// input psi(sign1) on (a1, b1) times psi(sign2) on (a2, b2). Unnormalized.
PureState predicted_conditional_state(int sign1, int sign2, const ProtocolSpec& spec);
PureState predicted_conditional_state(int sign1, int sign2, const ConditionalCoefficients& k);

/// The same state obtained by simulation (ideal detectors, d_a branch, no
/// correction).
PureState simulated_conditional_state(int sign1, int sign2, const ProtocolSpec& spec);

}  // namespace spep
