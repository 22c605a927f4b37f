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

#include <Eigen/QR>

#include "doctest.h"
#include "spep/errors.hpp"
#include "spep/linear_optics.hpp"

using namespace spep;

namespace {

constexpr double kPi = std::numbers::pi;

ModeUnitary haar(std::size_t m, std::mt19937_64& rng) {
  std::normal_distribution<double> g;
  Eigen::MatrixXcd z(m, m);
  for (Eigen::Index i = 0; i < z.rows(); ++i)
    for (Eigen::Index j = 0; j < z.cols(); ++j) z(i, j) = {g(rng), g(rng)};
  Eigen::HouseholderQR<Eigen::MatrixXcd> qr(z);
  Eigen::MatrixXcd q = qr.householderQ();
  const Eigen::MatrixXcd r = qr.matrixQR();
  for (Eigen::Index j = 0; j < q.cols(); ++j) q.col(j) *= r(j, j) / std::abs(r(j, j));
  return ModeUnitary(q);
}

PureState random_state(std::size_t modes, int max_photons, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  std::uniform_int_distribution<int> occ(0, max_photons);
  std::vector<PureState::Term> terms;
  for (int k = 0; k < 5; ++k) {
    std::vector<int> n(modes, 0);
    int budget = occ(rng);
    for (std::size_t m = 0; m < modes && budget > 0; ++m) {
      std::uniform_int_distribution<int> take(0, budget);
      n[m] = (m + 1 == modes) ? budget : take(rng);
      budget -= n[m];
    }
    terms.push_back({FockBasisState(n), Complex{u(rng), u(rng)}});
  }
  return PureState::from_terms(modes, terms);
}

double distance(const PureState& a, const PureState& b) { return (a + b.scaled(-1.0)).norm(); }

}  // namespace

TEST_CASE("u_of examples") {
  CHECK(unitarity_defect(u_of({0.4, 1.3, -2.2}).matrix()) < 1e-15);
  CHECK((u_of({0, 0, 0}).matrix() - Eigen::MatrixXcd::Identity(2, 2)).norm() < 1e-15);
  const ModeUnitary u = u_of({kPi / 8, 0, 0});
  CHECK(u(0, 0).real() == doctest::Approx(std::cos(kPi / 8)));
  CHECK(u(0, 1).real() == doctest::Approx(-std::sin(kPi / 8)));
  CHECK(u(1, 0).real() == doctest::Approx(std::sin(kPi / 8)));
  CHECK(std::norm(u(0, 0)) == doctest::Approx(0.8536).epsilon(1e-4));
  CHECK(std::norm(u_of({-3 * kPi / 8, 0, 0})(0, 0)) == doctest::Approx(0.1464).epsilon(1e-3));
}

TEST_CASE("construction rejects non-unitary matrices") {
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Identity(2, 2);
  m(0, 1) = 0.1;
  CHECK_THROWS_AS(ModeUnitary{m}, DomainError);
}

TEST_CASE("embed places the block on the target modes") {
  const std::vector<ModeIndex> first{0, 1};
  CHECK((embed(ModeUnitary::identity(2), first, 4).matrix() - Eigen::MatrixXcd::Identity(4, 4)).norm() == 0.0);
  const ModeUnitary u = u_of({kPi / 8, 0.3, 0.2});
  const std::vector<ModeIndex> spread{0, 2};
  const ModeUnitary e = embed(u, spread, 4);
  CHECK(e(0, 0) == u(0, 0));
  CHECK(e(0, 2) == u(0, 1));
  CHECK(e(2, 0) == u(1, 0));
  CHECK(e(2, 2) == u(1, 1));
  CHECK(e(1, 1) == Complex{1.0, 0.0});
  CHECK(e(3, 3) == Complex{1.0, 0.0});
  CHECK(e(0, 1) == Complex{});
  const std::vector<ModeIndex> overlap{1, 1};
  const std::vector<ModeIndex> outside{0, 4};
  CHECK_THROWS_AS(embed(u, overlap, 4), IndexError);
  CHECK_THROWS_AS(embed(u, outside, 4), IndexError);
}

TEST_CASE("vacuum is invariant") {
  const PureState vac = PureState::vacuum(2);
  CHECK(distance(apply(u_of({0.7, 1.1, -0.4}), vac), vac) < 1e-15);
}

TEST_CASE("HOM bunching at a balanced splitter") {
  // Substitution oracle: a1 -> c a - s d, a2 -> s a + c d at c = s = 1/sqrt2.
  // a1 a2 |0> = (a^2 - d^2)/2 |0> = (|2,0> - |0,2>)/sqrt2.
  const PureState out = apply(u_of({kPi / 4, 0, 0}), PureState::basis({1, 1}));
  CHECK(out.amplitude({2, 0}).real() == doctest::Approx(1.0 / std::sqrt(2.0)).epsilon(1e-14));
  CHECK(out.amplitude({0, 2}).real() == doctest::Approx(-1.0 / std::sqrt(2.0)).epsilon(1e-14));
  CHECK(std::abs(out.amplitude({1, 1})) < 1e-15);
}

TEST_CASE("single-photon sector reads the matrix rows") {
  std::mt19937_64 rng(11);
  for (int n = 0; n < 20; ++n) {
    const ModeUnitary u = haar(3, rng);
    for (int i = 0; i < 3; ++i) {
      std::vector<int> occ(3, 0);
      occ[i] = 1;
      const PureState out = apply(u, PureState::basis(FockBasisState(occ)));
      for (int j = 0; j < 3; ++j) {
        std::vector<int> o(3, 0);
        o[j] = 1;
        CHECK(std::abs(out.amplitude(FockBasisState(o)) - u(i, j)) < 1e-14);
      }
    }
  }
  const double t = 0.3;
  CHECK(apply(u_of({t, 0, 0}), PureState::basis({1, 0})).amplitude({1, 0}).real() ==
        doctest::Approx(std::cos(t)));
}

TEST_CASE("apply preserves norm and photon number") {
  std::mt19937_64 rng(5);
  for (int n = 0; n < 100; ++n) {
    const std::size_t m = 2 + n % 3;
    const ModeUnitary u = haar(m, rng);
    const PureState s = random_state(m, 3, rng);
    const PureState out = apply(u, s);
    CHECK(std::abs(out.norm() - s.norm()) <= 1e-12);
    for (int photons = 0; photons <= 3; ++photons) {
      double in_weight = 0.0;
      double out_weight = 0.0;
      for (const auto& [ket, amp] : s.terms())
        if (ket.photon_count() == photons) in_weight += std::norm(amp);
      for (const auto& [ket, amp] : out.terms())
        if (ket.photon_count() == photons) out_weight += std::norm(amp);
      CHECK(std::abs(in_weight - out_weight) <= 1e-12);
    }
  }
}

TEST_CASE("compose is a homomorphism") {
  std::mt19937_64 rng(8);
  for (int n = 0; n < 30; ++n) {
    const ModeUnitary u = haar(3, rng);
    const ModeUnitary v = haar(3, rng);
    const PureState s = random_state(3, 3, rng);
    CHECK(distance(apply(compose(u, v), s), apply(u, apply(v, s))) <= 1e-12);
    CHECK((compose(u, adjoint(u)).matrix() - Eigen::MatrixXcd::Identity(3, 3)).norm() <= 1e-10);
  }
  CHECK((adjoint(ModeUnitary::identity(3)).matrix() - Eigen::MatrixXcd::Identity(3, 3)).norm() == 0.0);
}

TEST_CASE("mismatched mode counts are rejected") {
  CHECK_THROWS_AS(apply(ModeUnitary::identity(3), PureState::vacuum(2)), IndexError);
  CHECK_THROWS_AS(compose(ModeUnitary::identity(3), ModeUnitary::identity(2)), IndexError);
}
