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

#include <array>
#include <compare>
#include <complex>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace spep {

using Complex = std::complex<double>;
using ModeIndex = std::size_t;

/// Upper bound on the number of optical modes a basis state can carry.
inline constexpr std::size_t kMaxModes = 16;
/// Amplitudes with magnitude below this are dropped from sparse states.
inline constexpr double kDefaultPruneThreshold = 1e-15;
/// Tolerance on the norm of states flagged as normalized.
inline constexpr double kNormalizationTolerance = 1e-12;

/// Occupation-number ket |n_0, n_1, ..., n_{M-1}>.
///
/// Ordering is lexicographic on the occupation list; states with different
/// mode counts order by mode count first.
class FockBasisState {
 public:
  FockBasisState() = default;
  explicit FockBasisState(std::span<const int> occupations);
  FockBasisState(std::initializer_list<int> occupations);

  static FockBasisState vacuum(std::size_t mode_count);

  std::size_t mode_count() const { return size_; }
  int occupation(ModeIndex mode) const;
  int photon_count() const;
  std::vector<int> occupations() const;

  FockBasisState with_occupation(ModeIndex mode, int count) const;
  /// Drops the listed modes; survivors keep their relative order.
  FockBasisState without_modes(std::span<const ModeIndex> modes) const;
  /// Appends the modes of `other` after this state's modes.
  FockBasisState concat(const FockBasisState& other) const;

  friend auto operator<=>(const FockBasisState&, const FockBasisState&) = default;
  friend bool operator==(const FockBasisState&, const FockBasisState&) = default;

 private:
  std::uint8_t size_ = 0;
  std::array<std::uint8_t, kMaxModes> occ_{};
};

/// Sparse complex superposition of Fock basis states over a fixed mode set.
///
/// Terms are stored sorted by basis state, duplicates merged and amplitudes
/// below the prune threshold removed. Values are immutable once built.
class PureState {
 public:
  using Term = std::pair<FockBasisState, Complex>;

  explicit PureState(std::size_t mode_count = 0);

  static PureState from_terms(std::size_t mode_count, std::vector<Term> terms,
                              double prune_threshold = kDefaultPruneThreshold);
  static PureState basis(const FockBasisState& ket);
  static PureState vacuum(std::size_t mode_count);

  std::size_t mode_count() const { return mode_count_; }
  std::span<const Term> terms() const { return terms_; }
  bool empty() const { return terms_.empty(); }
  Complex amplitude(const FockBasisState& ket) const;

  double squared_norm() const;
  double norm() const;
  /// True for states built by a normalizing factory; such states satisfy
  /// |norm - 1| <= kNormalizationTolerance.
  bool normalized() const { return normalized_; }

  /// Returns this state divided by its norm. Throws DegenerateError on zero.
  PureState normalized_copy() const;
  PureState scaled(Complex factor) const;

  /// Largest total photon number among the stored terms.
  int max_photon_count() const;

  friend PureState operator+(const PureState& a, const PureState& b);

 private:
  std::size_t mode_count_ = 0;
  std::vector<Term> terms_;
  bool normalized_ = false;
};

/// <a|b>, conjugate-linear in the first argument.
Complex inner(const PureState& a, const PureState& b);
double norm(const PureState& a);

/// a_mode^dagger |psi>, with the bosonic factor sqrt(n + 1).
PureState apply_creation(const PureState& state, ModeIndex mode);

/// (|1>_a|0>_b + sign |0>_a|1>_b)/sqrt(2), all other modes in vacuum.
PureState make_bell(int sign, ModeIndex mode_a, ModeIndex mode_b, std::size_t mode_count);

PureState tensor(const PureState& a, const PureState& b);

/// Output mode k carries what input mode `source[k]` carried. `source` must
/// be a permutation of 0..M-1.
PureState permute_modes(const PureState& state, std::span<const ModeIndex> source);

/// Text lines "(n0,n1,...): re, im" in basis order, 15 significant digits.
std::string to_debug_string(const PureState& state);

struct MixedComponent {
  double weight = 0.0;
  PureState state;
};

/// Weighted ensemble of (not necessarily normalized) pure states, standing
/// for the operator sum_i w_i |psi_i><psi_i|.
class MixedState {
 public:
  explicit MixedState(std::size_t mode_count = 0);
  MixedState(std::size_t mode_count, std::vector<MixedComponent> components);

  static MixedState pure(PureState state);

  std::size_t mode_count() const { return mode_count_; }
  std::span<const MixedComponent> components() const { return components_; }
  bool empty() const { return components_.empty(); }

  /// sum_i w_i ||psi_i||^2
  double trace() const;

 private:
  std::size_t mode_count_ = 0;
  std::vector<MixedComponent> components_;
};

/// F |psi+><psi+| + (1 - F) |psi-><psi-| on the given pair of modes.
MixedState make_rho(double fidelity, ModeIndex mode_a, ModeIndex mode_b, std::size_t mode_count);

/// Product state; modes of `b` follow the modes of `a`.
MixedState tensor(const MixedState& a, const MixedState& b);

/// Operator sum of two ensembles over the same modes.
MixedState mix(const MixedState& a, const MixedState& b);

MixedState permute_modes(const MixedState& state, std::span<const ModeIndex> source);

/// Keeps only basis terms with exactly `photons` photons in total.
MixedState photon_number_sector(const MixedState& state, int photons);

/// sum_i w_i |<target|psi_i>|^2, without any normalization.
double overlap(const PureState& target, const MixedState& state);

/// Fidelity of the normalized `state` with the normalized `target`.
/// Throws DegenerateError when the state has zero trace.
double fidelity(const PureState& target, const MixedState& state);

}  // namespace spep
