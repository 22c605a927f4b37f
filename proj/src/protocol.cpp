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

#include "spep/protocol.hpp"

#include <cmath>
#include <numbers>

#include "spep/errors.hpp"

namespace spep {

namespace {

void check_fidelity(double f) {
  if (!(f >= 0.0 && f <= 1.0)) throw DomainError("input fidelity must lie in [0, 1]");
}

// F^2 + (1 - F)^2
double g_of(double f) { return f * f + (1.0 - f) * (1.0 - f); }
// F^2 - (1 - F)^2
double delta_of(double f) { return f * f - (1.0 - f) * (1.0 - f); }

const PureState& psi_plus() {
  static const PureState s = make_bell(+1, 0, 1, 2);
  return s;
}

const PureState& psi_minus() {
  static const PureState s = make_bell(-1, 0, 1, 2);
  return s;
}

ModeUnitary block_diagonal(const ModeUnitary& alice, const ModeUnitary& bob) {
  const auto m = static_cast<Eigen::Index>(alice.mode_count());
  Eigen::MatrixXcd w = Eigen::MatrixXcd::Zero(2 * m, 2 * m);
  w.topLeftCorner(m, m) = alice.matrix();
  w.bottomRightCorner(m, m) = bob.matrix();
  return ModeUnitary(std::move(w));
}

double denominator(const ConditionalCoefficients& k, double f) {
  return k.a * k.a + g_of(f) * std::norm(k.b_minus) + 2.0 * f * (1.0 - f) * std::norm(k.b_plus);
}

}  // namespace

ProtocolSpec simplified_spec(double input_fidelity, double theta) {
  return {input_fidelity, {theta, 0.0, 0.0}, {theta - std::numbers::pi / 2.0, 0.0, 0.0}};
}

ConditionalCoefficients coefficients(const ProtocolSpec& spec, Branch branch) {
  const BeamSplitterParams& u = spec.alice;
  const BeamSplitterParams& v = spec.bob;
  const auto phase = [](double angle) { return std::exp(Complex{0.0, angle}); };
  const Complex cos_term = std::cos(u.theta) * phase(-u.xi) * std::cos(v.theta) * phase(v.xi);
  const Complex sin_term = std::sin(u.theta) * phase(-u.phi) * std::sin(v.theta) * phase(v.phi);
  ConditionalCoefficients k{std::cos(2.0 * u.theta), cos_term + sin_term, cos_term - sin_term};
  switch (branch) {
    case Branch::detect_da:
      return k;
    case Branch::detect_db:
      return {std::cos(2.0 * v.theta), std::conj(k.b_plus), std::conj(k.b_minus)};
    case Branch::combined:
      break;
  }
  throw DomainError("coefficients are defined per detection branch");
}

double trace_closed_form(const ProtocolSpec& spec, Branch branch) {
  const double f = spec.input_fidelity;
  if (branch == Branch::combined) return success_probability_closed_form(spec);
  const auto k = coefficients(spec, branch);
  return k.a * k.a / 4.0 + g_of(f) * std::norm(k.b_minus) / 4.0 +
         f * (1.0 - f) * std::norm(k.b_plus) / 2.0;
}

double fidelity_closed_form(const ProtocolSpec& spec, Branch branch) {
  const double f = spec.input_fidelity;
  check_fidelity(f);
  const auto k = coefficients(spec, branch);
  const double den = denominator(k, f);
  if (!(den > 4.0 * kZeroProbability)) throw DegenerateError("branch has zero success probability");
  return 0.5 + k.a * delta_of(f) * k.b_minus.real() / den;
}

double heralded_fidelity_closed_form(const ProtocolSpec& spec, Branch branch) {
  if (branch != Branch::combined) {
    return 0.5 + std::abs(fidelity_closed_form(spec, branch) - 0.5);
  }
  const double pa = trace_closed_form(spec, Branch::detect_da);
  const double pb = trace_closed_form(spec, Branch::detect_db);
  if (!(pa + pb > kZeroProbability)) throw DegenerateError("both branches have zero success probability");
  const double fa = pa > kZeroProbability ? heralded_fidelity_closed_form(spec, Branch::detect_da) : 0.5;
  const double fb = pb > kZeroProbability ? heralded_fidelity_closed_form(spec, Branch::detect_db) : 0.5;
  return (pa * fa + pb * fb) / (pa + pb);
}

double success_probability_closed_form(const ProtocolSpec& spec) {
  return trace_closed_form(spec, Branch::detect_da) + trace_closed_form(spec, Branch::detect_db);
}

double simplified_fidelity(double input_fidelity, double theta) {
  check_fidelity(input_fidelity);
  const double s = std::sin(2.0 * theta);
  const double c = std::cos(2.0 * theta);
  return 0.5 + delta_of(input_fidelity) * s * c / (c * c + g_of(input_fidelity) * s * s);
}

double theta_opt(double input_fidelity) {
  check_fidelity(input_fidelity);
  return 0.5 * std::atan(1.0 / std::sqrt(g_of(input_fidelity)));
}

double f_opt(double input_fidelity) {
  check_fidelity(input_fidelity);
  return 0.5 + (2.0 * input_fidelity - 1.0) / (2.0 * std::sqrt(g_of(input_fidelity)));
}

double p_opt(double input_fidelity) {
  check_fidelity(input_fidelity);
  const double g = g_of(input_fidelity);
  return g / (1.0 + g);
}

double f_1(double input_fidelity) {
  check_fidelity(input_fidelity);
  const double f = input_fidelity;
  return (f * f + f) / (1.0 + g_of(f));
}

double p_1(double input_fidelity) {
  check_fidelity(input_fidelity);
  return (1.0 + g_of(input_fidelity)) / 4.0;
}

MixedState two_copy_input(double input_fidelity, std::size_t ancilla_per_side) {
  const std::size_t m = 2 + ancilla_per_side;
  // Built as (a1, b1, a2, b2, ancillas...) and permuted into the party layout.
  MixedState joint = tensor(make_rho(input_fidelity, 0, 1, 2), make_rho(input_fidelity, 0, 1, 2));
  if (ancilla_per_side > 0) {
    joint = tensor(joint, MixedState::pure(PureState::vacuum(2 * ancilla_per_side)));
  }
  std::vector<ModeIndex> source(2 * m);
  source[0] = 0;
  source[1] = 2;
  source[m] = 1;
  source[m + 1] = 3;
  for (std::size_t k = 0; k < ancilla_per_side; ++k) {
    source[2 + k] = 4 + k;
    source[m + 2 + k] = 4 + ancilla_per_side + k;
  }
  return permute_modes(joint, source);
}

ProtocolOutcome finish_branch(Branch branch, const MixedState& state, double probability) {
  ProtocolOutcome out;
  out.branch = branch;
  if (!(probability > kZeroProbability) || !(state.trace() > kZeroProbability)) {
    out.conditional_state = MixedState(2);
    return out;
  }
  const double plus = overlap(psi_plus(), state);
  const double minus = overlap(psi_minus(), state);
  out.raw_fidelity = fidelity(psi_plus(), state);
  out.success_probability = probability;
  out.phase_corrected = minus > plus;
  if (out.phase_corrected) {
    Eigen::Matrix2cd flip;
    flip << 1.0, 0.0, 0.0, -1.0;
    out.conditional_state = apply(ModeUnitary(flip), state);
  } else {
    out.conditional_state = state;
  }
  out.output_fidelity = fidelity(psi_plus(), out.conditional_state);
  return out;
}

ProtocolOutcome combine_branches(const std::vector<ProtocolOutcome>& branches) {
  ProtocolOutcome out;
  out.branch = Branch::combined;
  double raw = 0.0;
  for (const auto& b : branches) {
    out.success_probability += b.success_probability;
    raw += b.success_probability * b.raw_fidelity;
    out.phase_corrected = out.phase_corrected || b.phase_corrected;
    out.conditional_state = mix(out.conditional_state, b.conditional_state);
  }
  if (!(out.success_probability > kZeroProbability)) {
    throw DegenerateError("every heralding branch has zero success probability");
  }
  out.raw_fidelity = raw / out.success_probability;
  out.output_fidelity = fidelity(psi_plus(), out.conditional_state);
  return out;
}

std::vector<HeraldedBranch> run_heralded(const MixedState& input, const ModeUnitary& alice,
                                         const ModeUnitary& bob, const DetectorModel& detectors) {
  const std::size_t m = alice.mode_count();
  if (bob.mode_count() != m || input.mode_count() != 2 * m) {
    throw IndexError("run_heralded: Alice, Bob and the input must agree on the mode count");
  }
  const MixedState evolved = apply(block_diagonal(alice, bob), input);

  std::vector<ModeIndex> detector_modes;
  for (ModeIndex k = 1; k < m; ++k) detector_modes.push_back(k);
  for (ModeIndex k = m + 1; k < 2 * m; ++k) detector_modes.push_back(k);
  const bool ideal = detectors.efficiency == 1.0 && detectors.resolving;

  std::vector<HeraldedBranch> branches;
  branches.reserve(detector_modes.size());
  for (ModeIndex fired : detector_modes) {
    ConditionalResult r;
    if (ideal) {
      std::vector<DetectionPattern::Requirement> req;
      for (ModeIndex d : detector_modes) req.emplace_back(d, d == fired ? 1 : 0);
      r = condition(evolved, DetectionPattern(std::move(req)));
    } else {
      r.state = evolved;
      for (auto it = detector_modes.rbegin(); it != detector_modes.rend(); ++it) {
        r = lossy_detect(r.state, *it, detectors, *it == fired ? 1 : 0);
      }
    }
    const bool bob_side = fired > m;
    branches.push_back({fired, bob_side,
                        finish_branch(bob_side ? Branch::detect_db : Branch::detect_da, r.state,
                                      r.probability)});
  }
  return branches;
}

SimulationResult run_simulated(const ProtocolSpec& spec, const DetectorModel& detectors) {
  check_fidelity(spec.input_fidelity);
  const auto branches = run_heralded(two_copy_input(spec.input_fidelity), u_of(spec.alice),
                                     u_of(spec.bob), detectors);
  SimulationResult out;
  out.detect_da = branches[0].outcome;
  out.detect_db = branches[1].outcome;
  out.combined = combine_branches({out.detect_da, out.detect_db});
  return out;
}

PureState predicted_conditional_state(int sign1, int sign2, const ProtocolSpec& spec) {
  return predicted_conditional_state(sign1, sign2, coefficients(spec, Branch::detect_da));
}

PureState predicted_conditional_state(int sign1, int sign2, const ConditionalCoefficients& k) {
  Complex beta;
  if (sign1 > 0 && sign2 > 0) {
    beta = k.b_minus;
  } else if (sign1 < 0 && sign2 > 0) {
    beta = -k.b_plus;
  } else if (sign1 > 0 && sign2 < 0) {
    beta = k.b_plus;
  } else {
    beta = -k.b_minus;
  }
  return PureState::from_terms(2, {{FockBasisState{1, 0}, 0.5 * k.a}, {FockBasisState{0, 1}, 0.5 * beta}});
}

PureState simulated_conditional_state(int sign1, int sign2, const ProtocolSpec& spec) {
  const PureState joint = tensor(make_bell(sign1, 0, 1, 2), make_bell(sign2, 0, 1, 2));
  const ModeIndex source[] = {0, 2, 1, 3};
  const PureState input = permute_modes(joint, source);
  const PureState out = apply(block_diagonal(u_of(spec.alice), u_of(spec.bob)), input);
  return project(out, {{layout::kDetectA, 1}, {layout::kDetectB, 0}});
}

}  // namespace spep
