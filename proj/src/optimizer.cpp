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

#include "spep/optimizer.hpp"

#include <numbers>
#include <random>

#include "parallel.hpp"
#include "spep/errors.hpp"
#include "spep/nelder_mead.hpp"
#include "spep/protocol.hpp"

namespace spep {

namespace {

constexpr double kNoInformation = 0.5;

// SplitMix64 finalizer; decorrelates per-restart seeds.
std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t index) {
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (index + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

// Uniform in [0, 1) from the top 53 bits; unlike std::uniform_real_distribution
// this is the same on every standard library.
double unit_draw(std::mt19937_64& rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }

void check_config(const SearchConfig& c) {
  if (c.restarts < 1 || c.max_iterations < 1) throw DomainError("search needs restarts >= 1 and max_iterations >= 1");
  if (!(c.tolerance > 0.0)) throw DomainError("search tolerance must be positive");
  if (c.ancilla_per_side > kMaxAncillaPerSide) throw DomainError("ancilla_per_side must be 0, 1 or 2");
}

}  // namespace

PurificationObjective::PurificationObjective(double input_fidelity, std::size_t ancilla_per_side)
    : modes_per_side_(2 + ancilla_per_side), input_(two_copy_input(input_fidelity, ancilla_per_side)) {
  if (ancilla_per_side > kMaxAncillaPerSide) throw DomainError("ancilla_per_side must be 0, 1 or 2");
}

double PurificationObjective::operator()(std::span<const double> params) const {
  const std::size_t half = UnitaryParameterization::parameter_count(modes_per_side_);
  if (params.size() != 2 * half) throw DomainError("objective parameter vector has the wrong length");
  const UnitaryParameterization alice(modes_per_side_, {params.begin(), params.begin() + half});
  const UnitaryParameterization bob(modes_per_side_, {params.begin() + half, params.end()});
  return (*this)(alice, bob);
}

double PurificationObjective::operator()(const UnitaryParameterization& alice,
                                         const UnitaryParameterization& bob) const {
  const auto branches = run_heralded(input_, alice.build(), bob.build());
  std::vector<ProtocolOutcome> outcomes;
  outcomes.reserve(branches.size());
  double probability = 0.0;
  for (const auto& b : branches) {
    probability += b.outcome.success_probability;
    outcomes.push_back(b.outcome);
  }
  if (!(probability > kZeroProbability)) return kNoInformation;
  return combine_branches(outcomes).output_fidelity;
}

double objective(double input_fidelity, const UnitaryParameterization& alice,
                 const UnitaryParameterization& bob, std::size_t ancilla_per_side) {
  return PurificationObjective(input_fidelity, ancilla_per_side)(alice, bob);
}

SearchResult search(double input_fidelity, const SearchConfig& config) {
  check_config(config);
  const PurificationObjective objective(input_fidelity, config.ancilla_per_side);
  const std::size_t dim = objective.dimension();
  const std::size_t restarts = static_cast<std::size_t>(config.restarts);

  std::vector<NelderMeadResult> runs(restarts);
  detail::parallel_for(restarts, config.workers, [&](std::size_t r) {
    std::mt19937_64 rng(mix_seed(config.seed, r));
    std::vector<double> start(dim);
    for (double& x : start) x = 2.0 * std::numbers::pi * unit_draw(rng);
    NelderMeadOptions options;
    options.max_iterations = config.max_iterations;
    options.tolerance = config.tolerance;
    runs[r] = nelder_mead_minimize([&](std::span<const double> p) { return -objective(p); },
                                   std::move(start), options);
  });

  // Highest fidelity wins; ties go to the lowest restart index.
  std::size_t best = 0;
  SearchResult out;
  for (std::size_t r = 0; r < restarts; ++r) {
    out.evaluations += runs[r].evaluations;
    if (-runs[r].value > -runs[best].value) best = r;
  }
  const std::size_t half = dim / 2;
  const auto& x = runs[best].x;
  out.best_fidelity = -runs[best].value;
  out.alice = UnitaryParameterization(objective.modes_per_side(), {x.begin(), x.begin() + half});
  out.bob = UnitaryParameterization(objective.modes_per_side(), {x.begin() + half, x.end()});
  out.converged = runs[best].converged;
  out.best_restart = static_cast<int>(best);
  return out;
}

}  // namespace spep
