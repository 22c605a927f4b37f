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

#include "spep/verify.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numbers>
#include <random>
#include <sstream>

#include "numfmt.hpp"
#include "spep/errors.hpp"
#include "spep/imperfections.hpp"
#include "spep/protocol.hpp"

namespace spep {

namespace {

constexpr double kAnalyticTolerance = 1e-12;
constexpr double kPi = std::numbers::pi;

class Sampler {
 public:
  explicit Sampler(std::uint64_t seed) : rng_(seed) {}
  double uniform(double lo, double hi) { return lo + (hi - lo) * static_cast<double>(rng_() >> 11) * 0x1.0p-53; }
  ProtocolSpec spec() {
    ProtocolSpec s;
    s.input_fidelity = uniform(0.0, 1.0);
    s.alice = {uniform(0.0, 2 * kPi), uniform(0.0, 2 * kPi), uniform(0.0, 2 * kPi)};
    s.bob = {uniform(0.0, 2 * kPi), uniform(0.0, 2 * kPi), uniform(0.0, 2 * kPi)};
    return s;
  }

 private:
  std::mt19937_64 rng_;
};

// Distance between two vectors after removing the best global phase.
double phase_free_distance(const PureState& a, const PureState& b) {
  const Complex ov = inner(b, a);
  const Complex phase = std::abs(ov) > 0.0 ? ov / std::abs(ov) : Complex{1.0, 0.0};
  return (a + b.scaled(-phase)).norm();
}

CheckResult make_check(std::string name, double deviation) {
  return {std::move(name), deviation, kAnalyticTolerance, deviation <= kAnalyticTolerance};
}

}  // namespace

bool VerifyReport::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.passed; });
}

std::string VerifyReport::format() const {
  std::ostringstream out;
  out << "spep verify: " << checks.size() << " checks\n";
  for (const auto& c : checks) {
    out << (c.passed ? "PASS " : "FAIL ") << c.name << "  max_deviation=" << detail::format_g15(c.max_deviation)
        << "  tolerance=" << detail::format_g15(c.tolerance) << '\n';
  }
  out << "heralded state (d_a branch, F=1, theta=pi/8), modes (a~, b~):\n" << sample_state;
  out << (passed() ? "all checks passed\n" : "verification FAILED\n");
  return out.str();
}

VerifyReport run_verification(const VerifyOptions& options) {
  if (options.configurations < 1) throw DomainError("verification needs at least one configuration");
  for (double eta : options.efficiencies) {
    if (!(eta > 0.0 && eta <= 1.0)) throw DomainError("efficiencies must lie in (0, 1]");
  }
  VerifyReport report;
  Sampler sampler(options.seed);

  {
    double dev = 0.0;
    for (int n = 0; n < options.configurations; ++n) {
      const ProtocolSpec spec = sampler.spec();
      auto k = coefficients(spec, Branch::detect_da);
      if (options.flip_b_minus_sign) k.b_minus = -k.b_minus;
      for (int s1 : {+1, -1}) {
        for (int s2 : {+1, -1}) {
          dev = std::max(dev, phase_free_distance(simulated_conditional_state(s1, s2, spec),
                                                  predicted_conditional_state(s1, s2, k)));
        }
      }
    }
    report.checks.push_back(make_check("conditional-coefficients", dev));
  }

  {
    double dev_trace = 0.0;
    double dev_fid = 0.0;
    for (int n = 0; n < options.configurations; ++n) {
      const ProtocolSpec spec = sampler.spec();
      const SimulationResult sim = run_simulated(spec);
      for (auto [branch, outcome] : {std::pair{Branch::detect_da, &sim.detect_da},
                                     std::pair{Branch::detect_db, &sim.detect_db}}) {
        dev_trace = std::max(dev_trace, std::abs(outcome->success_probability - trace_closed_form(spec, branch)));
        dev_fid = std::max(dev_fid, std::abs(outcome->raw_fidelity - fidelity_closed_form(spec, branch)));
        dev_fid = std::max(dev_fid, std::abs(outcome->output_fidelity - heralded_fidelity_closed_form(spec, branch)));
      }
      dev_fid = std::max(dev_fid, std::abs(sim.combined.output_fidelity -
                                           heralded_fidelity_closed_form(spec, Branch::combined)));
    }
    report.checks.push_back(make_check("branch-trace", dev_trace));
    report.checks.push_back(make_check("branch-fidelity", dev_fid));
  }

  {
    double dev = 0.0;
    for (int n = 0; n < options.configurations; ++n) {
      const double f = sampler.uniform(0.0, 1.0);
      const double theta = sampler.uniform(-kPi, kPi);
      dev = std::max(dev, std::abs(simplified_fidelity(f, theta) - fidelity_closed_form(simplified_spec(f, theta))));
    }
    report.checks.push_back(make_check("one-angle-family", dev));
  }

  {
    double dev_angle = std::abs(theta_opt(1.0) - kPi / 8.0);
    double dev_prob = std::abs(p_1(1.0) - 0.5);
    for (int i = 0; i <= 100; ++i) {
      const double f = 0.5 + 0.005 * i;
      dev_angle = std::max(dev_angle, std::abs(f_opt(f) - simplified_fidelity(f, theta_opt(f))));
      dev_angle = std::max(dev_angle, std::abs(f_1(f) - simplified_fidelity(f, kPi / 8.0)));
      dev_prob = std::max(dev_prob, std::abs(p_opt(f) - 2.0 * trace_closed_form(simplified_spec(f, theta_opt(f)))));
      dev_prob = std::max(dev_prob, std::abs(p_1(f) - 2.0 * trace_closed_form(simplified_spec(f, kPi / 8.0))));
    }
    report.checks.push_back(make_check("optimal-angle", dev_angle));
    report.checks.push_back(make_check("success-probabilities", dev_prob));
  }

  {
    double dev = 0.0;
    for (double f : {0.6, 0.8, 0.95}) {
      for (double eta : options.efficiencies) {
        const auto r = run_with_efficiency(f, kPi / 8.0, {eta, true});
        dev = std::max(dev, std::abs(r.single_photon_fidelity - f_1(f)));
      }
    }
    report.checks.push_back(make_check("efficiency-invariance", dev));
  }

  {
    double dev = 0.0;
    for (double f : {0.6, 0.7, 0.8, 0.9}) {
      const auto vis = run_with_visibility(f, kPi / 8.0, {1.0});
      const auto ideal = run_simulated(simplified_spec(f, kPi / 8.0)).combined;
      dev = std::max({dev, std::abs(vis.output_fidelity - ideal.output_fidelity),
                      std::abs(vis.success_probability - ideal.success_probability)});
    }
    report.checks.push_back(make_check("visibility-reduction", dev));
  }

  const auto sample = run_simulated(simplified_spec(1.0, kPi / 8.0)).detect_da.conditional_state;
  for (const auto& c : sample.components()) {
    if (c.weight > 0.0) report.sample_state += to_debug_string(c.state);
  }
  return report;
}

}  // namespace spep
