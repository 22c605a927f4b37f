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
#include "spep/mesh.hpp"
#include "spep/nelder_mead.hpp"
#include "spep/optimizer.hpp"
#include "spep/protocol.hpp"

using namespace spep;

namespace {

constexpr double kPi = std::numbers::pi;

std::vector<double> random_angles(std::size_t m, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(0.0, 2 * kPi);
  std::vector<double> a(UnitaryParameterization::parameter_count(m));
  for (double& x : a) x = u(rng);
  return a;
}

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

}  // namespace

TEST_CASE("mesh layout") {
  CHECK(UnitaryParameterization::parameter_count(3) == 9);
  using Pairs = std::vector<std::pair<ModeIndex, ModeIndex>>;
  CHECK(UnitaryParameterization::mesh_pairs(3) == Pairs{{1, 2}, {0, 1}, {1, 2}});
  CHECK_THROWS(UnitaryParameterization(3, std::vector<double>(4, 0.0)));
}

TEST_CASE("mesh round trip on random parameters") {
  std::mt19937_64 rng(41);
  for (std::size_t m : {2u, 3u}) {
    for (int n = 0; n < 100; ++n) {
      const ModeUnitary target = UnitaryParameterization(m, random_angles(m, rng)).build();
      const ModeUnitary rebuilt = UnitaryParameterization::decompose(target).build();
      CHECK((rebuilt.matrix() - target.matrix()).norm() <= 1e-10);
    }
  }
}

TEST_CASE("mesh reaches Haar-random unitaries") {
  std::mt19937_64 rng(42);
  for (std::size_t m : {2u, 3u, 4u}) {
    for (int n = 0; n < 50; ++n) {
      const ModeUnitary target = haar(m, rng);
      const ModeUnitary rebuilt = UnitaryParameterization::decompose(target).build();
      CHECK((rebuilt.matrix() - target.matrix()).norm() <= 1e-10);
    }
  }
}

TEST_CASE("nelder-mead finds a quadratic minimum") {
  const auto f = [](std::span<const double> x) { return (x[0] - 1) * (x[0] - 1) + 3 * (x[1] + 2) * (x[1] + 2); };
  const std::vector<double> start{0.0, 0.0};
  const NelderMeadResult r = nelder_mead_minimize(f, start, {});
  CHECK(r.converged);
  CHECK(r.x[0] == doctest::Approx(1.0).epsilon(1e-5));
  CHECK(r.x[1] == doctest::Approx(-2.0).epsilon(1e-5));
}

TEST_CASE("identity devices leave the fidelity unchanged") {
  const UnitaryParameterization id(2);
  for (double f : {0.6, 0.8}) {
    CHECK(objective(f, id, id, 0) == doctest::Approx(f).epsilon(1e-14));
  }
}

TEST_CASE("objective reproduces the optimal two-mode protocol") {
  for (double f : {0.6, 0.75, 0.9}) {
    const ProtocolSpec spec = simplified_spec(f, theta_opt(f));
    const auto alice = UnitaryParameterization::decompose(u_of(spec.alice));
    const auto bob = UnitaryParameterization::decompose(u_of(spec.bob));
    CHECK(std::abs(objective(f, alice, bob, 0) - f_opt(f)) <= 1e-12);
  }
}

TEST_CASE("ancilla modes embed the two-mode devices") {
  const double f = 0.8;
  const ProtocolSpec spec = simplified_spec(f, theta_opt(f));
  const std::vector<ModeIndex> first{0, 1};
  const auto alice = UnitaryParameterization::decompose(embed(u_of(spec.alice), first, 3));
  const auto bob = UnitaryParameterization::decompose(embed(u_of(spec.bob), first, 3));
  CHECK(std::abs(objective(f, alice, bob, 1) - f_opt(f)) <= 1e-12);
}

TEST_CASE("objective stays within bounds") {
  std::mt19937_64 rng(43);
  for (std::size_t anc : {0u, 1u}) {
    const PurificationObjective obj(0.7, anc);
    for (int n = 0; n < 50; ++n) {
      std::uniform_real_distribution<double> u(0.0, 2 * kPi);
      std::vector<double> x(obj.dimension());
      for (double& v : x) v = u(rng);
      const double val = obj(x);
      CHECK(val >= 0.0);
      CHECK(val <= 1.0);
    }
  }
}

TEST_CASE("search attains the optimum without ancillas") {
  SearchConfig config;
  config.restarts = 20;
  config.seed = 1;
  const SearchResult r = search(0.75, config);
  CHECK(std::abs(r.best_fidelity - f_opt(0.75)) <= 1e-8);
  CHECK(r.best_fidelity <= f_opt(0.75) + 1e-6);

  // At the optimum the unwanted amplitude vanishes and B- is real.
  const Eigen::MatrixXcd u = r.alice.build().matrix();
  const Eigen::MatrixXcd v = r.bob.build().matrix();
  const Complex bp = u(1, 1) * v(0, 0) - u(0, 1) * v(1, 0);
  CHECK(std::abs(bp) < 1e-3);
}

TEST_CASE("search results do not depend on the worker count") {
  SearchConfig config;
  config.restarts = 6;
  config.ancilla_per_side = 1;
  config.seed = 9;
  config.workers = 1;
  const SearchResult one = search(0.8, config);
  config.workers = 8;
  const SearchResult eight = search(0.8, config);
  CHECK(one.best_fidelity == eight.best_fidelity);
  CHECK(one.evaluations == eight.evaluations);
  CHECK(one.best_restart == eight.best_restart);
  CHECK(std::vector<double>(one.alice.angles().begin(), one.alice.angles().end()) ==
        std::vector<double>(eight.alice.angles().begin(), eight.alice.angles().end()));
  CHECK(std::vector<double>(one.bob.angles().begin(), one.bob.angles().end()) ==
        std::vector<double>(eight.bob.angles().begin(), eight.bob.angles().end()));
}

TEST_CASE("one ancilla per side does not beat the optimum") {
  SearchConfig config;
  config.restarts = 10;
  config.ancilla_per_side = 1;
  config.seed = 42;
  CHECK(search(0.8, config).best_fidelity <= f_opt(0.8) + 1e-6);
}

TEST_CASE("search configuration is validated") {
  SearchConfig config;
  config.ancilla_per_side = 3;
  CHECK_THROWS(search(0.8, config));
  config.ancilla_per_side = 0;
  config.restarts = 0;
  CHECK_THROWS(search(0.8, config));
}
