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

// spep: command-line front end. Emits CSV datasets and runs the
// verification suite through the C interface of libspep.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "spep/spep.h"

namespace {

enum ExitCode : int { kSuccess = 0, kCheckFailure = 1, kUsage = 2, kIo = 3 };

struct Options {
  double f_min = 0.5;
  double f_max = 1.0;
  int points = 51;
  std::vector<double> visibilities{1.0, 0.99, 0.98};
  std::vector<double> efficiencies{0.3, 0.6, 0.95};
  std::vector<double> fidelities{0.6, 0.75, 0.9};
  std::vector<int> ancilla{0, 1, 2};
  int restarts = 50;
  int max_iterations = 4000;
  std::uint64_t seed = 1;
  double tolerance = 1e-12;
  int workers = 0;
  int configurations = 200;
  std::string out = "-";
  std::string inject_fault;
};

int api_failure(spep_status status) {
  std::cerr << "spep: " << spep_last_error() << '\n';
  switch (status) {
    case SPEP_ERR_INDEX:
    case SPEP_ERR_DOMAIN:
    case SPEP_ERR_INVALID:
      return kUsage;
    default:
      return kCheckFailure;
  }
}

int emit(const std::string& path, const char* data, std::size_t size) {
  if (path == "-") {
    std::cout.write(data, static_cast<std::streamsize>(size));
    std::cout.flush();
    return std::cout ? kSuccess : kIo;
  }
  std::ofstream file(path, std::ios::binary | std::ios::trunc);
  if (file) file.write(data, static_cast<std::streamsize>(size));
  if (file) file.close();
  if (!file) {
    std::cerr << "spep: cannot write output file '" << path << "'\n";
    return kIo;
  }
  return kSuccess;
}

int emit_buffer(const std::string& path, spep_buffer* buffer) {
  const int rc = emit(path, spep_buffer_data(buffer), spep_buffer_size(buffer));
  spep_buffer_free(buffer);
  return rc;
}

spep_grid grid_of(const Options& o) { return {o.f_min, o.f_max, o.points}; }

int run_curves(const Options& o) {
  const spep_grid grid = grid_of(o);
  spep_buffer* buffer = nullptr;
  if (auto st = spep_curves_csv(&grid, &buffer); st != SPEP_OK) return api_failure(st);
  return emit_buffer(o.out, buffer);
}

int run_visibility(const Options& o) {
  const spep_grid grid = grid_of(o);
  spep_buffer* buffer = nullptr;
  if (auto st = spep_visibility_csv(&grid, o.visibilities.data(), o.visibilities.size(), o.workers, &buffer);
      st != SPEP_OK) {
    return api_failure(st);
  }
  return emit_buffer(o.out, buffer);
}

int run_optimize(const Options& o) {
  spep_search_config config;
  spep_search_config_default(&config);
  config.restarts = o.restarts;
  config.max_iterations = o.max_iterations;
  config.tolerance = o.tolerance;
  config.seed = o.seed;
  config.workers = o.workers;
  spep_buffer* buffer = nullptr;
  if (auto st = spep_optimize_csv(o.fidelities.data(), o.fidelities.size(), o.ancilla.data(), o.ancilla.size(),
                                  &config, &buffer);
      st != SPEP_OK) {
    return api_failure(st);
  }
  return emit_buffer(o.out, buffer);
}

int run_verify(const Options& o) {
  spep_verify_options options;
  spep_verify_options_default(&options);
  options.efficiencies = o.efficiencies.data();
  options.efficiency_count = o.efficiencies.size();
  options.configurations = o.configurations;
  if (o.inject_fault == "b-minus-sign") {
    options.inject_b_minus_flip = 1;
  } else if (!o.inject_fault.empty()) {
    std::cerr << "spep: unknown fault '" << o.inject_fault << "'\n";
    return kUsage;
  }
  spep_verify_report* report = nullptr;
  if (auto st = spep_verify(&options, &report); st != SPEP_OK) return api_failure(st);
  const std::string text = spep_verify_report_text(report);
  const bool passed = spep_verify_report_passed(report) != 0;
  if (!passed) {
    for (std::size_t i = 0; i < spep_verify_report_check_count(report); ++i) {
      const char* name = nullptr;
      int ok = 0;
      spep_verify_report_check(report, i, &name, nullptr, nullptr, &ok);
      if (!ok) std::cerr << "spep: check failed: " << name << '\n';
    }
  }
  spep_verify_report_free(report);
  const int rc = emit(o.out, text.data(), text.size());
  if (rc != kSuccess) return rc;
  return passed ? kSuccess : kCheckFailure;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Single-photon entanglement purification: datasets and verification"};
  app.require_subcommand(1);
  app.set_version_flag("--version", spep_version());
  Options o;

  auto grid_flags = [&](CLI::App* cmd) {
    cmd->add_option("--f-min", o.f_min, "Smallest input fidelity")->capture_default_str();
    cmd->add_option("--f-max", o.f_max, "Largest input fidelity")->capture_default_str();
    cmd->add_option("--points", o.points, "Number of grid points (>= 2)")->capture_default_str();
  };
  auto out_flag = [&](CLI::App* cmd) {
    cmd->add_option("--out", o.out, "Output file, '-' for stdout")->capture_default_str();
  };

  auto* curves = app.add_subcommand("curves", "Output fidelity and success probability versus input fidelity");
  grid_flags(curves);
  out_flag(curves);

  auto* visibility = app.add_subcommand("visibility", "Fidelity improvement for several HOM visibilities");
  grid_flags(visibility);
  visibility->add_option("--visibilities", o.visibilities, "Comma-separated HOM visibilities")
      ->delimiter(',')
      ->capture_default_str();
  visibility->add_option("--workers", o.workers, "Worker threads (0 = all cores)");
  out_flag(visibility);

  auto* optimize = app.add_subcommand("optimize", "Search general devices with vacuum ancillas for higher fidelity");
  optimize->add_option("--fidelities", o.fidelities, "Comma-separated input fidelities")
      ->delimiter(',')
      ->capture_default_str();
  optimize->add_option("--ancilla", o.ancilla, "Comma-separated ancilla modes per side (0..2)")
      ->delimiter(',')
      ->capture_default_str();
  optimize->add_option("--restarts", o.restarts, "Random restarts per search")->capture_default_str();
  optimize->add_option("--max-iterations", o.max_iterations, "Simplex iterations per restart")
      ->capture_default_str();
  optimize->add_option("--seed", o.seed, "Base seed")->capture_default_str();
  optimize->add_option("--tolerance", o.tolerance, "Simplex convergence tolerance")->capture_default_str();
  optimize->add_option("--workers", o.workers, "Worker threads (0 = all cores)");
  out_flag(optimize);

  auto* verify = app.add_subcommand("verify", "Cross-check closed forms against the Fock-space simulation");
  verify->add_option("--efficiencies", o.efficiencies, "Comma-separated detector efficiencies")
      ->delimiter(',')
      ->capture_default_str();
  verify->add_option("--configurations", o.configurations, "Random settings per randomized check")
      ->capture_default_str();
  verify->add_option("--inject-fault", o.inject_fault)->group("");
  out_flag(verify);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kSuccess : kUsage;
  }

  if (*curves) return run_curves(o);
  if (*visibility) return run_visibility(o);
  if (*optimize) return run_optimize(o);
  return run_verify(o);
}
