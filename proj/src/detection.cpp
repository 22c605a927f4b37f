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

#include "spep/detection.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <string>

#include "spep/errors.hpp"
#include "spep/linear_optics.hpp"

namespace spep {

DetectionPattern::DetectionPattern(std::initializer_list<Requirement> requirements)
    : DetectionPattern(std::vector<Requirement>(requirements)) {}

DetectionPattern::DetectionPattern(std::vector<Requirement> requirements)
    : requirements_(std::move(requirements)) {
  std::sort(requirements_.begin(), requirements_.end());
  for (std::size_t i = 0; i < requirements_.size(); ++i) {
    if (requirements_[i].second < 0) throw DomainError("required photon counts must be non-negative");
    if (i > 0 && requirements_[i].first == requirements_[i - 1].first) {
      throw IndexError("detection pattern measures mode " + std::to_string(requirements_[i].first) +
                       " twice");
    }
  }
}

std::vector<ModeIndex> DetectionPattern::modes() const {
  std::vector<ModeIndex> out;
  out.reserve(requirements_.size());
  for (const auto& r : requirements_) out.push_back(r.first);
  return out;
}

PureState project(const PureState& state, const DetectionPattern& pattern) {
  for (const auto& [mode, count] : pattern.requirements()) {
    if (mode >= state.mode_count()) {
      throw IndexError("detection mode " + std::to_string(mode) + " out of range");
    }
  }
  const auto measured = pattern.modes();
  std::vector<PureState::Term> kept;
  for (const auto& [ket, amp] : state.terms()) {
    const bool match = std::all_of(pattern.requirements().begin(), pattern.requirements().end(),
                                   [&](const auto& r) { return ket.occupation(r.first) == r.second; });
    if (match) kept.emplace_back(ket.without_modes(measured), amp);
  }
  return PureState::from_terms(state.mode_count() - measured.size(), std::move(kept));
}

ConditionalResult condition(const MixedState& state, const DetectionPattern& pattern) {
  const std::size_t remaining = state.mode_count() - std::min(state.mode_count(), pattern.modes().size());
  std::vector<MixedComponent> out;
  double probability = 0.0;
  for (const auto& c : state.components()) {
    PureState p = project(c.state, pattern);
    if (p.empty()) continue;
    probability += c.weight * p.squared_norm();
    out.push_back({c.weight, std::move(p)});
  }
  return {MixedState(remaining, std::move(out)), probability};
}

MixedState trace_out(const MixedState& state, ModeIndex mode) {
  if (mode >= state.mode_count()) throw IndexError("trace_out: mode out of range");
  std::vector<MixedComponent> out;
  const ModeIndex dropped[] = {mode};
  for (const auto& c : state.components()) {
    std::map<int, std::vector<PureState::Term>> by_count;
    for (const auto& [ket, amp] : c.state.terms()) {
      by_count[ket.occupation(mode)].emplace_back(ket.without_modes(dropped), amp);
    }
    for (auto& [count, terms] : by_count) {
      out.push_back({c.weight, PureState::from_terms(state.mode_count() - 1, std::move(terms))});
    }
  }
  return MixedState(state.mode_count() - 1, std::move(out));
}

namespace {

int max_occupation(const MixedState& state, ModeIndex mode) {
  int n = 0;
  for (const auto& c : state.components()) {
    for (const auto& [ket, amp] : c.state.terms()) n = std::max(n, ket.occupation(mode));
  }
  return n;
}

MixedState apply_loss(const MixedState& state, ModeIndex mode, double efficiency) {
  const std::size_t m = state.mode_count();
  const MixedState ancilla = MixedState::pure(PureState::vacuum(1));
  const MixedState extended = tensor(state, ancilla);
  const ModeIndex targets[] = {mode, m};
  const auto loss = embed(u_of({std::acos(std::sqrt(efficiency)), 0.0, 0.0}), targets, m + 1);
  return trace_out(apply(loss, extended), m);
}

}  // namespace

ConditionalResult lossy_detect(const MixedState& state, ModeIndex mode, const DetectorModel& model,
                               int observed) {
  if (!(model.efficiency >= 0.0 && model.efficiency <= 1.0)) {
    throw DomainError("detector efficiency must lie in [0, 1]");
  }
  if (observed < 0) throw DomainError("observed photon count must be non-negative");
  if (!model.resolving && observed > 1) {
    throw DomainError("threshold detectors only report 0 (no click) or 1 (click)");
  }
  if (mode >= state.mode_count()) throw IndexError("lossy_detect: mode out of range");

  const MixedState lossy = model.efficiency == 1.0 ? state : apply_loss(state, mode, model.efficiency);
  if (model.resolving || observed == 0) return condition(lossy, {{mode, observed}});

  ConditionalResult click{MixedState(state.mode_count() - 1), 0.0};
  for (int k = 1; k <= max_occupation(lossy, mode); ++k) {
    ConditionalResult r = condition(lossy, {{mode, k}});
    click.state = mix(click.state, r.state);
    click.probability += r.probability;
  }
  return click;
}

}  // namespace spep
