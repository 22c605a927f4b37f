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

#include <cmath>
#include <numbers>
#include <random>
#include <vector>

#include "doctest.h"
#include "spep/detection.hpp"
#include "spep/errors.hpp"
#include "spep/linear_optics.hpp"
#include "spep/protocol.hpp"

using namespace spep;

namespace {

constexpr double kPi = std::numbers::pi;

MixedState random_mixture(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  std::vector<MixedComponent> comps;
  for (int k = 0; k < 3; ++k) {
    std::vector<PureState::Term> terms;
    for (int n0 = 0; n0 <= 2; ++n0)
      for (int n1 = 0; n1 + n0 <= 2; ++n1)
        for (int n2 = 0; n2 + n1 + n0 <= 2; ++n2)
          terms.push_back({FockBasisState{n0, n1, n2}, Complex{u(rng), u(rng)}});
    comps.push_back({std::abs(u(rng)), PureState::from_terms(3, terms).normalized_copy()});
  }
  return MixedState(3, comps);
}

}  // namespace

TEST_CASE("condition examples") {
  const ConditionalResult r = condition(MixedState::pure(PureState::basis({1, 0})), {{1, 0}});
  CHECK(r.probability == doctest::Approx(1.0));
  CHECK(r.state.mode_count() == 1);
  CHECK(r.state.components()[0].state.amplitude({1}).real() == doctest::Approx(1.0));

  const PureState hom = apply(u_of({kPi / 4, 0, 0}), PureState::basis({1, 1}));
  CHECK(condition(MixedState::pure(hom), {{1, 1}}).probability < 1e-30);
}

TEST_CASE("protocol branch at F=1 heralds with probability one quarter") {
  const ProtocolSpec spec = simplified_spec(1.0, kPi / 8);
  const std::vector<ModeIndex> alice{0, 1};
  const std::vector<ModeIndex> bob{2, 3};
  const ModeUnitary device = compose(embed(u_of(spec.bob), bob, 4), embed(u_of(spec.alice), alice, 4));
  const MixedState out = apply(device, two_copy_input(1.0));
  CHECK(condition(out, {{1, 1}, {3, 0}}).probability == doctest::Approx(0.25).epsilon(1e-14));
}

TEST_CASE("pattern validation") {
  CHECK_THROWS_AS(DetectionPattern({{0, 1}, {0, 0}}), IndexError);
  CHECK_THROWS_AS(DetectionPattern({{0, -1}}), DomainError);
  CHECK_THROWS_AS(condition(MixedState::pure(PureState::basis({1, 0})), {{2, 0}}), IndexError);
  const DetectionPattern p{{3, 0}, {1, 1}};
  CHECK(p.modes() == std::vector<ModeIndex>{1, 3});
}

TEST_CASE("outcome probabilities are complete") {
  std::mt19937_64 rng(21);
  for (int n = 0; n < 20; ++n) {
    const MixedState s = random_mixture(rng);
    double total = 0.0;
    for (int c0 = 0; c0 <= 2; ++c0) {
      for (int c2 = 0; c2 <= 2; ++c2) {
        const double p = condition(s, {{0, c0}, {2, c2}}).probability;
        CHECK(p >= 0.0);
        CHECK(p <= s.trace() + 1e-12);
        total += p;
      }
    }
    CHECK(std::abs(total - s.trace()) <= 1e-12);
  }
}

TEST_CASE("condition commutes with mixing") {
  std::mt19937_64 rng(22);
  const MixedState a = random_mixture(rng);
  const MixedState b = random_mixture(rng);
  const DetectionPattern p{{1, 1}};
  CHECK(condition(mix(a, b), p).probability ==
        doctest::Approx(condition(a, p).probability + condition(b, p).probability).epsilon(1e-14));
}

TEST_CASE("lossless detection equals ideal conditioning") {
  std::mt19937_64 rng(23);
  const MixedState s = random_mixture(rng);
  for (int k = 0; k <= 2; ++k) {
    const ConditionalResult ideal = condition(s, {{1, k}});
    const ConditionalResult lossy = lossy_detect(s, 1, {1.0, true}, k);
    CHECK(lossy.probability == ideal.probability);
    CHECK(lossy.state.components().size() == ideal.state.components().size());
  }
}

TEST_CASE("loss follows the binomial law") {
  for (double eta : {0.2, 0.5, 0.9}) {
    const MixedState one = MixedState::pure(PureState::basis({1}));
    const MixedState two = MixedState::pure(PureState::basis({2}));
    CHECK(lossy_detect(one, 0, {eta, true}, 1).probability == doctest::Approx(eta).epsilon(1e-14));
    CHECK(lossy_detect(two, 0, {eta, true}, 1).probability ==
          doctest::Approx(2 * eta * (1 - eta)).epsilon(1e-14));
    CHECK(lossy_detect(two, 0, {eta, true}, 2).probability == doctest::Approx(eta * eta).epsilon(1e-14));
    CHECK(lossy_detect(two, 0, {eta, false}, 1).probability ==
          doctest::Approx(1 - (1 - eta) * (1 - eta)).epsilon(1e-14));
    CHECK(lossy_detect(two, 0, {eta, false}, 0).probability == doctest::Approx((1 - eta) * (1 - eta)).epsilon(1e-14));
  }
}

TEST_CASE("lossy detection validates its arguments") {
  const MixedState one = MixedState::pure(PureState::basis({1}));
  CHECK_THROWS_AS(lossy_detect(one, 0, {1.5, true}, 1), DomainError);
  CHECK_THROWS_AS(lossy_detect(one, 0, {0.5, false}, 2), DomainError);
  CHECK_THROWS_AS(lossy_detect(one, 0, {0.5, true}, -1), DomainError);
  CHECK_THROWS_AS(lossy_detect(one, 1, {0.5, true}, 1), IndexError);
}

TEST_CASE("trace_out splits by occupation") {
  const PureState s = PureState::from_terms(2, {{FockBasisState{1, 0}, 0.6}, {FockBasisState{0, 1}, 0.8}});
  const MixedState t = trace_out(MixedState::pure(s), 1);
  CHECK(t.mode_count() == 1);
  CHECK(t.trace() == doctest::Approx(1.0));
  CHECK(t.components().size() == 2);
}
