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

#include "spep/fock.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

#include "numfmt.hpp"
#include "spep/errors.hpp"

namespace spep {

namespace {

void check_mode_count(std::size_t mode_count) {
  if (mode_count > kMaxModes) {
    throw IndexError("mode count " + std::to_string(mode_count) + " exceeds limit " +
                     std::to_string(kMaxModes));
  }
}

void check_mode(ModeIndex mode, std::size_t mode_count) {
  if (mode >= mode_count) {
    throw IndexError("mode " + std::to_string(mode) + " out of range for " +
                     std::to_string(mode_count) + " modes");
  }
}

void check_permutation(std::span<const ModeIndex> source, std::size_t mode_count) {
  if (source.size() != mode_count) throw IndexError("permutation length does not match mode count");
  std::vector<bool> seen(mode_count, false);
  for (ModeIndex m : source) {
    check_mode(m, mode_count);
    if (seen[m]) throw IndexError("permutation repeats mode " + std::to_string(m));
    seen[m] = true;
  }
}

}  // namespace

// ---------------------------------------------------------------------------
// FockBasisState

FockBasisState::FockBasisState(std::span<const int> occupations) {
  check_mode_count(occupations.size());
  size_ = static_cast<std::uint8_t>(occupations.size());
  for (std::size_t i = 0; i < occupations.size(); ++i) {
    if (occupations[i] < 0 || occupations[i] > 255) {
      throw DomainError("occupation numbers must lie in [0, 255]");
    }
    occ_[i] = static_cast<std::uint8_t>(occupations[i]);
  }
}

FockBasisState::FockBasisState(std::initializer_list<int> occupations)
    : FockBasisState(std::span<const int>(occupations.begin(), occupations.size())) {}

FockBasisState FockBasisState::vacuum(std::size_t mode_count) {
  check_mode_count(mode_count);
  FockBasisState s;
  s.size_ = static_cast<std::uint8_t>(mode_count);
  return s;
}

int FockBasisState::occupation(ModeIndex mode) const {
  check_mode(mode, size_);
  return occ_[mode];
}

int FockBasisState::photon_count() const {
  return std::accumulate(occ_.begin(), occ_.begin() + size_, 0);
}

std::vector<int> FockBasisState::occupations() const {
  return std::vector<int>(occ_.begin(), occ_.begin() + size_);
}

FockBasisState FockBasisState::with_occupation(ModeIndex mode, int count) const {
  check_mode(mode, size_);
  if (count < 0 || count > 255) throw DomainError("occupation numbers must lie in [0, 255]");
  FockBasisState s = *this;
  s.occ_[mode] = static_cast<std::uint8_t>(count);
  return s;
}

FockBasisState FockBasisState::without_modes(std::span<const ModeIndex> modes) const {
  FockBasisState s;
  std::size_t out = 0;
  for (std::size_t i = 0; i < size_; ++i) {
    if (std::find(modes.begin(), modes.end(), i) != modes.end()) continue;
    s.occ_[out++] = occ_[i];
  }
  s.size_ = static_cast<std::uint8_t>(out);
  return s;
}

FockBasisState FockBasisState::concat(const FockBasisState& other) const {
  check_mode_count(std::size_t{size_} + other.size_);
  FockBasisState s = *this;
  std::copy(other.occ_.begin(), other.occ_.begin() + other.size_, s.occ_.begin() + size_);
  s.size_ = static_cast<std::uint8_t>(size_ + other.size_);
  return s;
}

// ---------------------------------------------------------------------------
// PureState

PureState::PureState(std::size_t mode_count) : mode_count_(mode_count) {
  check_mode_count(mode_count);
}

PureState PureState::from_terms(std::size_t mode_count, std::vector<Term> terms,
                                double prune_threshold) {
  PureState s(mode_count);
  for (const auto& [ket, amp] : terms) {
    if (ket.mode_count() != mode_count) {
      throw IndexError("basis state mode count does not match the state's");
    }
  }
  std::sort(terms.begin(), terms.end(),
            [](const Term& a, const Term& b) { return a.first < b.first; });
  for (auto& term : terms) {
    if (!s.terms_.empty() && s.terms_.back().first == term.first) {
      s.terms_.back().second += term.second;
    } else {
      s.terms_.push_back(std::move(term));
    }
  }
  std::erase_if(s.terms_, [&](const Term& t) { return std::abs(t.second) < prune_threshold; });
  return s;
}

PureState PureState::basis(const FockBasisState& ket) {
  PureState s(ket.mode_count());
  s.terms_.emplace_back(ket, Complex{1.0, 0.0});
  s.normalized_ = true;
  return s;
}

PureState PureState::vacuum(std::size_t mode_count) {
  return basis(FockBasisState::vacuum(mode_count));
}

Complex PureState::amplitude(const FockBasisState& ket) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), ket,
                             [](const Term& t, const FockBasisState& k) { return t.first < k; });
  if (it != terms_.end() && it->first == ket) return it->second;
  return {};
}

double PureState::squared_norm() const {
  double sum = 0.0;
  for (const auto& t : terms_) sum += std::norm(t.second);
  return sum;
}

double PureState::norm() const { return std::sqrt(squared_norm()); }

PureState PureState::normalized_copy() const {
  const double n = norm();
  if (n == 0.0) throw DegenerateError("cannot normalize the zero state");
  PureState s = scaled(1.0 / n);
  s.normalized_ = true;
  return s;
}

PureState PureState::scaled(Complex factor) const {
  std::vector<Term> terms(terms_.begin(), terms_.end());
  for (auto& t : terms) t.second *= factor;
  return from_terms(mode_count_, std::move(terms));
}

int PureState::max_photon_count() const {
  int n = 0;
  for (const auto& t : terms_) n = std::max(n, t.first.photon_count());
  return n;
}

PureState operator+(const PureState& a, const PureState& b) {
  if (a.mode_count() != b.mode_count()) throw IndexError("adding states with different mode counts");
  std::vector<PureState::Term> terms(a.terms().begin(), a.terms().end());
  terms.insert(terms.end(), b.terms().begin(), b.terms().end());
  return PureState::from_terms(a.mode_count(), std::move(terms));
}

Complex inner(const PureState& a, const PureState& b) {
  if (a.mode_count() != b.mode_count()) throw IndexError("inner product of states with different mode counts");
  // Both term lists are sorted: merge walk.
  Complex sum{};
  auto ia = a.terms().begin();
  auto ib = b.terms().begin();
  while (ia != a.terms().end() && ib != b.terms().end()) {
    if (ia->first < ib->first) {
      ++ia;
    } else if (ib->first < ia->first) {
      ++ib;
    } else {
      sum += std::conj(ia->second) * ib->second;
      ++ia;
      ++ib;
    }
  }
  return sum;
}

double norm(const PureState& a) { return a.norm(); }

PureState apply_creation(const PureState& state, ModeIndex mode) {
  check_mode(mode, state.mode_count());
  std::vector<PureState::Term> terms;
  terms.reserve(state.terms().size());
  for (const auto& [ket, amp] : state.terms()) {
    const int n = ket.occupation(mode);
    terms.emplace_back(ket.with_occupation(mode, n + 1), amp * std::sqrt(static_cast<double>(n + 1)));
  }
  return PureState::from_terms(state.mode_count(), std::move(terms));
}

PureState make_bell(int sign, ModeIndex mode_a, ModeIndex mode_b, std::size_t mode_count) {
  if (sign != 1 && sign != -1) throw DomainError("Bell state sign must be +1 or -1");
  check_mode_count(mode_count);
  check_mode(mode_a, mode_count);
  check_mode(mode_b, mode_count);
  if (mode_a == mode_b) throw IndexError("Bell state needs two distinct modes");
  const double h = 1.0 / std::sqrt(2.0);
  const auto vac = FockBasisState::vacuum(mode_count);
  PureState s = PureState::from_terms(mode_count, {{vac.with_occupation(mode_a, 1), h},
                                                   {vac.with_occupation(mode_b, 1), sign * h}});
  return s.normalized_copy();
}

PureState tensor(const PureState& a, const PureState& b) {
  const std::size_t modes = a.mode_count() + b.mode_count();
  check_mode_count(modes);
  std::vector<PureState::Term> terms;
  terms.reserve(a.terms().size() * b.terms().size());
  for (const auto& [ka, xa] : a.terms()) {
    for (const auto& [kb, xb] : b.terms()) terms.emplace_back(ka.concat(kb), xa * xb);
  }
  return PureState::from_terms(modes, std::move(terms));
}

PureState permute_modes(const PureState& state, std::span<const ModeIndex> source) {
  check_permutation(source, state.mode_count());
  std::vector<PureState::Term> terms;
  terms.reserve(state.terms().size());
  std::vector<int> occ(state.mode_count());
  for (const auto& [ket, amp] : state.terms()) {
    for (std::size_t k = 0; k < source.size(); ++k) occ[k] = ket.occupation(source[k]);
    terms.emplace_back(FockBasisState(occ), amp);
  }
  return PureState::from_terms(state.mode_count(), std::move(terms));
}

std::string to_debug_string(const PureState& state) {
  std::ostringstream out;
  for (const auto& [ket, amp] : state.terms()) {
    out << '(';
    const auto occ = ket.occupations();
    for (std::size_t i = 0; i < occ.size(); ++i) out << (i ? "," : "") << occ[i];
    out << "): " << detail::format_g15(amp.real()) << ", " << detail::format_g15(amp.imag())
        << '\n';
  }
  return out.str();
}

// ---------------------------------------------------------------------------
// MixedState

MixedState::MixedState(std::size_t mode_count) : mode_count_(mode_count) {
  check_mode_count(mode_count);
}

MixedState::MixedState(std::size_t mode_count, std::vector<MixedComponent> components)
    : mode_count_(mode_count), components_(std::move(components)) {
  check_mode_count(mode_count);
  for (const auto& c : components_) {
    if (!(c.weight >= 0.0)) throw DomainError("mixture weights must be non-negative");
    if (c.state.mode_count() != mode_count) {
      throw IndexError("mixture component mode count does not match the mixture's");
    }
  }
}

MixedState MixedState::pure(PureState state) {
  const std::size_t modes = state.mode_count();
  return MixedState(modes, {{1.0, std::move(state)}});
}

double MixedState::trace() const {
  double t = 0.0;
  for (const auto& c : components_) t += c.weight * c.state.squared_norm();
  return t;
}

MixedState make_rho(double fidelity, ModeIndex mode_a, ModeIndex mode_b, std::size_t mode_count) {
  if (!(fidelity >= 0.0 && fidelity <= 1.0)) throw DomainError("input fidelity must lie in [0, 1]");
  return MixedState(mode_count, {{fidelity, make_bell(+1, mode_a, mode_b, mode_count)},
                                 {1.0 - fidelity, make_bell(-1, mode_a, mode_b, mode_count)}});
}

MixedState tensor(const MixedState& a, const MixedState& b) {
  std::vector<MixedComponent> out;
  out.reserve(a.components().size() * b.components().size());
  for (const auto& ca : a.components()) {
    for (const auto& cb : b.components()) {
      out.push_back({ca.weight * cb.weight, tensor(ca.state, cb.state)});
    }
  }
  return MixedState(a.mode_count() + b.mode_count(), std::move(out));
}

MixedState mix(const MixedState& a, const MixedState& b) {
  if (a.mode_count() != b.mode_count()) throw IndexError("mixing states with different mode counts");
  std::vector<MixedComponent> out(a.components().begin(), a.components().end());
  out.insert(out.end(), b.components().begin(), b.components().end());
  return MixedState(a.mode_count(), std::move(out));
}

MixedState permute_modes(const MixedState& state, std::span<const ModeIndex> source) {
  std::vector<MixedComponent> out;
  out.reserve(state.components().size());
  for (const auto& c : state.components()) out.push_back({c.weight, permute_modes(c.state, source)});
  return MixedState(state.mode_count(), std::move(out));
}

MixedState photon_number_sector(const MixedState& state, int photons) {
  std::vector<MixedComponent> out;
  for (const auto& c : state.components()) {
    std::vector<PureState::Term> kept;
    for (const auto& t : c.state.terms()) {
      if (t.first.photon_count() == photons) kept.push_back(t);
    }
    if (!kept.empty()) out.push_back({c.weight, PureState::from_terms(state.mode_count(), std::move(kept))});
  }
  return MixedState(state.mode_count(), std::move(out));
}

double overlap(const PureState& target, const MixedState& state) {
  double sum = 0.0;
  for (const auto& c : state.components()) sum += c.weight * std::norm(inner(target, c.state));
  return sum;
}

double fidelity(const PureState& target, const MixedState& state) {
  if (target.mode_count() != state.mode_count()) {
    throw IndexError("fidelity of states with different mode counts");
  }
  const double tr = state.trace() * target.squared_norm();
  if (!(tr > 0.0)) throw DegenerateError("fidelity of a zero-trace state");
  return std::clamp(overlap(target, state) / tr, 0.0, 1.0);
}

}  // namespace spep
