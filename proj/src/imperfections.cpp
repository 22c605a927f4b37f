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

#include "spep/imperfections.hpp"

#include <string>

#include "spep/errors.hpp"

namespace spep {

namespace {

constexpr std::size_t kPaths = layout::kModes;
constexpr std::size_t kLabels = 2;
constexpr std::size_t kLabelledModes = kPaths * kLabels;

ModeIndex labelled(ModeIndex path, std::size_t label) { return label * kPaths + path; }

// rho(F) x rho(F) where copy 1 uses label 0 and copy 2 uses `label2`.
MixedState labelled_input(double input_fidelity, std::size_t label2) {
  const MixedState pair =
      tensor(make_rho(input_fidelity, 0, 1, 2), make_rho(input_fidelity, 0, 1, 2));
  const MixedState joint = tensor(pair, MixedState::pure(PureState::vacuum(kLabelledModes - 4)));
  // joint modes: a1, b1, a2, b2, then vacuum fillers.
  std::vector<ModeIndex> source(kLabelledModes, kLabelledModes);
  source[labelled(layout::kA1, 0)] = 0;
  source[labelled(layout::kB1, 0)] = 1;
  source[labelled(layout::kA2, label2)] = 2;
  source[labelled(layout::kB2, label2)] = 3;
  ModeIndex filler = 4;
  for (auto& s : source) {
    if (s == kLabelledModes) s = filler++;
  }
  return permute_modes(joint, source);
}

ModeUnitary labelled_device(const ProtocolSpec& spec) {
  Eigen::MatrixXcd w = Eigen::MatrixXcd::Identity(kLabelledModes, kLabelledModes);
  const auto u = u_of(spec.alice);
  const auto v = u_of(spec.bob);
  for (std::size_t label = 0; label < kLabels; ++label) {
    const auto a = static_cast<Eigen::Index>(labelled(layout::kA1, label));
    const auto b = static_cast<Eigen::Index>(labelled(layout::kB1, label));
    w.block(a, a, 2, 2) = u.matrix();
    w.block(b, b, 2, 2) = v.matrix();
  }
  return ModeUnitary(std::move(w));
}

}  // namespace

MixedState trace_internal(const MixedState& state, std::size_t path_count, std::size_t label_count) {
  if (state.mode_count() != path_count * label_count) {
    throw IndexError("trace_internal: mode count must equal paths x labels");
  }
  std::vector<MixedComponent> out;
  for (const auto& c : state.components()) {
    std::vector<std::vector<PureState::Term>> by_label(label_count);
    for (const auto& [ket, amp] : c.state.terms()) {
      std::size_t owner = 0;
      bool seen = false;
      std::vector<int> paths(path_count, 0);
      for (std::size_t label = 0; label < label_count; ++label) {
        for (std::size_t p = 0; p < path_count; ++p) {
          const int n = ket.occupation(label * path_count + p);
          if (n == 0) continue;
          if (seen && owner != label) {
            throw DomainError("trace_internal: photons spread over several internal labels");
          }
          owner = label;
          seen = true;
          paths[p] += n;
        }
      }
      by_label[owner].emplace_back(FockBasisState(paths), amp);
    }
    for (auto& terms : by_label) {
      if (terms.empty()) continue;
      out.push_back({c.weight, PureState::from_terms(path_count, std::move(terms))});
    }
  }
  return MixedState(path_count, std::move(out));
}

ProtocolOutcome run_with_visibility(double input_fidelity, double theta, const VisibilityModel& vis) {
  if (!(vis.visibility >= 0.0 && vis.visibility <= 1.0)) {
    throw DomainError("HOM visibility must lie in [0, 1]");
  }
  const ProtocolSpec spec = simplified_spec(input_fidelity, theta);
  if (!(input_fidelity >= 0.0 && input_fidelity <= 1.0)) {
    throw DomainError("input fidelity must lie in [0, 1]");
  }

  std::vector<MixedComponent> parts;
  for (std::size_t label2 = 0; label2 < kLabels; ++label2) {
    const double w = label2 == 0 ? vis.visibility : 1.0 - vis.visibility;
    if (w == 0.0) continue;
    const MixedState input = labelled_input(input_fidelity, label2);
    for (const auto& c : input.components()) {
      parts.push_back({w * c.weight, c.state});
    }
  }
  const MixedState evolved = apply(labelled_device(spec), MixedState(kLabelledModes, std::move(parts)));

  const ModeIndex detectors[] = {layout::kDetectA, layout::kDetectB};
  std::vector<ProtocolOutcome> branches;
  for (ModeIndex fired : detectors) {
    // The click may come from either label; the outcomes are orthogonal and add.
    MixedState heralded(kLabelledModes - 2 * kLabels);
    double probability = 0.0;
    for (std::size_t fired_label = 0; fired_label < kLabels; ++fired_label) {
      std::vector<DetectionPattern::Requirement> req;
      for (ModeIndex d : detectors) {
        for (std::size_t label = 0; label < kLabels; ++label) {
          req.emplace_back(labelled(d, label), d == fired && label == fired_label ? 1 : 0);
        }
      }
      const ConditionalResult r = condition(evolved, DetectionPattern(std::move(req)));
      heralded = mix(heralded, r.state);
      probability += r.probability;
    }
    // Survivors are (a~, b~) per label, label-major.
    const MixedState paths = trace_internal(heralded, 2, kLabels);
    branches.push_back(finish_branch(fired == layout::kDetectA ? Branch::detect_da : Branch::detect_db,
                                     paths, probability));
  }
  return combine_branches(branches);
}

ImperfectOutcome run_with_efficiency(double input_fidelity, double theta, const DetectorModel& detectors) {
  const ProtocolSpec spec = simplified_spec(input_fidelity, theta);
  if (!(input_fidelity >= 0.0 && input_fidelity <= 1.0)) {
    throw DomainError("input fidelity must lie in [0, 1]");
  }
  const auto branches =
      run_heralded(two_copy_input(input_fidelity), u_of(spec.alice), u_of(spec.bob), detectors);
  std::vector<ProtocolOutcome> outcomes;
  for (const auto& b : branches) outcomes.push_back(b.outcome);
  const ProtocolOutcome combined = combine_branches(outcomes);

  const MixedState& state = combined.conditional_state;
  const MixedState single = photon_number_sector(state, 1);
  const MixedState vacuum = photon_number_sector(state, 0);
  ImperfectOutcome out;
  out.success_probability = combined.success_probability;
  out.vacuum_weight = vacuum.trace() / state.trace();
  out.single_photon_fidelity = fidelity(make_bell(+1, 0, 1, 2), single);
  return out;
}

}  // namespace spep
