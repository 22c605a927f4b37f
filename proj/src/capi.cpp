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

#include <exception>
#include <new>
#include <string>

#include "spep/datasets.hpp"
#include "spep/errors.hpp"
#include "spep/imperfections.hpp"
#include "spep/optimizer.hpp"
#include "spep/protocol.hpp"
#include "spep/spep.h"
#include "spep/verify.hpp"

struct spep_search_result {
  spep::SearchResult value;
};

struct spep_buffer {
  std::string text;
};

struct spep_verify_report {
  spep::VerifyReport value;
  std::string text;
};

namespace {

thread_local std::string g_last_error;

spep_status fail(spep_status status, const char* message) {
  g_last_error = message;
  return status;
}

// Runs `fn`, translating exceptions into status codes.
template <typename Fn>
spep_status guarded(Fn&& fn) {
  try {
    fn();
    g_last_error.clear();
    return SPEP_OK;
  } catch (const spep::IndexError& e) {
    return fail(SPEP_ERR_INDEX, e.what());
  } catch (const spep::DomainError& e) {
    return fail(SPEP_ERR_DOMAIN, e.what());
  } catch (const spep::DegenerateError& e) {
    return fail(SPEP_ERR_DEGENERATE, e.what());
  } catch (const std::bad_alloc&) {
    return fail(SPEP_ERR_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return fail(SPEP_ERR_INTERNAL, e.what());
  } catch (...) {
    return fail(SPEP_ERR_INTERNAL, "unknown error");
  }
}

spep::BeamSplitterParams to_cpp(const spep_bs_params& p) { return {p.theta, p.phi, p.xi}; }

spep::ProtocolSpec to_cpp(const spep_protocol_spec& s) {
  return {s.input_fidelity, to_cpp(s.alice), to_cpp(s.bob)};
}

spep::Branch to_cpp(spep_branch b) {
  switch (b) {
    case SPEP_BRANCH_DA:
      return spep::Branch::detect_da;
    case SPEP_BRANCH_DB:
      return spep::Branch::detect_db;
    case SPEP_BRANCH_COMBINED:
      return spep::Branch::combined;
  }
  throw spep::DomainError("unknown branch");
}

spep::DetectorModel to_cpp(const spep_detector* d) {
  if (d == nullptr) return {};
  return {d->efficiency, d->resolving != 0};
}

spep::SearchConfig to_cpp(const spep_search_config& c) {
  if (c.ancilla_per_side < 0) throw spep::DomainError("ancilla_per_side must be 0, 1 or 2");
  spep::SearchConfig out;
  out.restarts = c.restarts;
  out.max_iterations = c.max_iterations;
  out.tolerance = c.tolerance;
  out.seed = c.seed;
  out.ancilla_per_side = static_cast<std::size_t>(c.ancilla_per_side);
  out.workers = c.workers;
  return out;
}

void to_c(const spep::ProtocolOutcome& o, spep_outcome* out) {
  if (out == nullptr) return;
  out->output_fidelity = o.output_fidelity;
  out->raw_fidelity = o.raw_fidelity;
  out->success_probability = o.success_probability;
  out->phase_corrected = o.phase_corrected ? 1 : 0;
}

template <typename Fn>
spep_status scalar(double* out, Fn&& fn) {
  if (out == nullptr) return fail(SPEP_ERR_INVALID, "null output pointer");
  return guarded([&] { *out = fn(); });
}

}  // namespace

extern "C" {

const char* spep_version(void) { return "1.0.0"; }

const char* spep_last_error(void) { return g_last_error.c_str(); }

spep_status spep_f_opt(double f, double* out) { return scalar(out, [&] { return spep::f_opt(f); }); }
spep_status spep_p_opt(double f, double* out) { return scalar(out, [&] { return spep::p_opt(f); }); }
spep_status spep_f_1(double f, double* out) { return scalar(out, [&] { return spep::f_1(f); }); }
spep_status spep_p_1(double f, double* out) { return scalar(out, [&] { return spep::p_1(f); }); }
spep_status spep_theta_opt(double f, double* out) { return scalar(out, [&] { return spep::theta_opt(f); }); }

spep_status spep_simplified_fidelity(double f, double theta, double* out) {
  return scalar(out, [&] { return spep::simplified_fidelity(f, theta); });
}

spep_status spep_coefficients_of(const spep_protocol_spec* spec, spep_branch branch, spep_coefficients* out) {
  if (spec == nullptr || out == nullptr) return fail(SPEP_ERR_INVALID, "null argument");
  return guarded([&] {
    const auto k = spep::coefficients(to_cpp(*spec), to_cpp(branch));
    *out = {k.a, k.b_plus.real(), k.b_plus.imag(), k.b_minus.real(), k.b_minus.imag()};
  });
}

spep_status spep_trace_closed_form(const spep_protocol_spec* spec, spep_branch branch, double* out) {
  if (spec == nullptr) return fail(SPEP_ERR_INVALID, "null argument");
  return scalar(out, [&] { return spep::trace_closed_form(to_cpp(*spec), to_cpp(branch)); });
}

spep_status spep_fidelity_closed_form(const spep_protocol_spec* spec, spep_branch branch, double* out) {
  if (spec == nullptr) return fail(SPEP_ERR_INVALID, "null argument");
  return scalar(out, [&] { return spep::fidelity_closed_form(to_cpp(*spec), to_cpp(branch)); });
}

spep_status spep_run_simulated(const spep_protocol_spec* spec, const spep_detector* detector,
                               spep_outcome* detect_da, spep_outcome* detect_db, spep_outcome* combined) {
  if (spec == nullptr) return fail(SPEP_ERR_INVALID, "null argument");
  return guarded([&] {
    const auto r = spep::run_simulated(to_cpp(*spec), to_cpp(detector));
    to_c(r.detect_da, detect_da);
    to_c(r.detect_db, detect_db);
    to_c(r.combined, combined);
  });
}

spep_status spep_run_with_visibility(double f, double theta, double visibility, spep_outcome* combined) {
  if (combined == nullptr) return fail(SPEP_ERR_INVALID, "null output pointer");
  return guarded([&] { to_c(spep::run_with_visibility(f, theta, {visibility}), combined); });
}

spep_status spep_run_with_efficiency(double f, double theta, const spep_detector* detector,
                                     spep_imperfect_outcome* out) {
  if (out == nullptr) return fail(SPEP_ERR_INVALID, "null output pointer");
  return guarded([&] {
    const auto r = spep::run_with_efficiency(f, theta, to_cpp(detector));
    *out = {r.single_photon_fidelity, r.vacuum_weight, r.success_probability};
  });
}

void spep_search_config_default(spep_search_config* config) {
  if (config == nullptr) return;
  const spep::SearchConfig d;
  *config = {d.restarts, d.max_iterations, d.tolerance, d.seed, static_cast<int>(d.ancilla_per_side), d.workers};
}

spep_status spep_search(double f, const spep_search_config* config, spep_search_result** out) {
  if (config == nullptr || out == nullptr) return fail(SPEP_ERR_INVALID, "null argument");
  *out = nullptr;
  return guarded([&] { *out = new spep_search_result{spep::search(f, to_cpp(*config))}; });
}

double spep_search_result_best_fidelity(const spep_search_result* r) { return r ? r->value.best_fidelity : 0.0; }

long long spep_search_result_evaluations(const spep_search_result* r) { return r ? r->value.evaluations : 0; }

int spep_search_result_converged(const spep_search_result* r) { return r && r->value.converged ? 1 : 0; }

size_t spep_search_result_param_count(const spep_search_result* r) {
  return r ? r->value.alice.angles().size() : 0;
}

spep_status spep_search_result_params(const spep_search_result* r, int party, double* out, size_t capacity) {
  if (r == nullptr || out == nullptr) return fail(SPEP_ERR_INVALID, "null argument");
  if (party != 0 && party != 1) return fail(SPEP_ERR_INDEX, "party must be 0 (Alice) or 1 (Bob)");
  const auto angles = party == 0 ? r->value.alice.angles() : r->value.bob.angles();
  if (capacity < angles.size()) return fail(SPEP_ERR_INVALID, "output buffer too small");
  std::copy(angles.begin(), angles.end(), out);
  return SPEP_OK;
}

void spep_search_result_free(spep_search_result* r) { delete r; }

const char* spep_buffer_data(const spep_buffer* b) { return b ? b->text.c_str() : ""; }

size_t spep_buffer_size(const spep_buffer* b) { return b ? b->text.size() : 0; }

void spep_buffer_free(spep_buffer* b) { delete b; }

spep_status spep_curves_csv(const spep_grid* grid, spep_buffer** out) {
  if (grid == nullptr || out == nullptr) return fail(SPEP_ERR_INVALID, "null argument");
  *out = nullptr;
  return guarded([&] { *out = new spep_buffer{spep::curves_csv({grid->f_min, grid->f_max, grid->points})}; });
}

spep_status spep_visibility_csv(const spep_grid* grid, const double* visibilities, size_t count, int workers,
                                spep_buffer** out) {
  if (grid == nullptr || out == nullptr || (visibilities == nullptr && count > 0)) {
    return fail(SPEP_ERR_INVALID, "null argument");
  }
  *out = nullptr;
  return guarded([&] {
    const std::vector<double> v = count > 0 ? std::vector<double>(visibilities, visibilities + count)
                                            : std::vector<double>{1.0, 0.99, 0.98};
    *out = new spep_buffer{spep::visibility_csv({grid->f_min, grid->f_max, grid->points}, v, workers)};
  });
}

spep_status spep_optimize_csv(const double* fidelities, size_t fidelity_count, const int* ancillas,
                              size_t ancilla_count, const spep_search_config* config, spep_buffer** out) {
  if (fidelities == nullptr || ancillas == nullptr || config == nullptr || out == nullptr) {
    return fail(SPEP_ERR_INVALID, "null argument");
  }
  *out = nullptr;
  return guarded([&] {
    std::vector<std::size_t> anc;
    for (size_t i = 0; i < ancilla_count; ++i) {
      if (ancillas[i] < 0) throw spep::DomainError("ancilla_per_side must be 0, 1 or 2");
      anc.push_back(static_cast<std::size_t>(ancillas[i]));
    }
    *out = new spep_buffer{spep::optimize_csv({fidelities, fidelity_count}, anc, to_cpp(*config))};
  });
}

void spep_verify_options_default(spep_verify_options* options) {
  if (options == nullptr) return;
  const spep::VerifyOptions d;
  *options = {nullptr, 0, d.configurations, d.seed, 0};
}

spep_status spep_verify(const spep_verify_options* options, spep_verify_report** out) {
  if (out == nullptr) return fail(SPEP_ERR_INVALID, "null argument");
  *out = nullptr;
  return guarded([&] {
    spep::VerifyOptions o;
    if (options != nullptr) {
      if (options->efficiencies != nullptr && options->efficiency_count > 0) {
        o.efficiencies.assign(options->efficiencies, options->efficiencies + options->efficiency_count);
      }
      if (options->configurations > 0) o.configurations = options->configurations;
      o.seed = options->seed;
      o.flip_b_minus_sign = options->inject_b_minus_flip != 0;
    }
    auto report = spep::run_verification(o);
    std::string text = report.format();
    *out = new spep_verify_report{std::move(report), std::move(text)};
  });
}

int spep_verify_report_passed(const spep_verify_report* r) { return r && r->value.passed() ? 1 : 0; }

size_t spep_verify_report_check_count(const spep_verify_report* r) { return r ? r->value.checks.size() : 0; }

spep_status spep_verify_report_check(const spep_verify_report* r, size_t index, const char** name,
                                     double* max_deviation, double* tolerance, int* passed) {
  if (r == nullptr) return fail(SPEP_ERR_INVALID, "null argument");
  if (index >= r->value.checks.size()) return fail(SPEP_ERR_INDEX, "check index out of range");
  const auto& c = r->value.checks[index];
  if (name) *name = c.name.c_str();
  if (max_deviation) *max_deviation = c.max_deviation;
  if (tolerance) *tolerance = c.tolerance;
  if (passed) *passed = c.passed ? 1 : 0;
  return SPEP_OK;
}

const char* spep_verify_report_text(const spep_verify_report* r) { return r ? r->text.c_str() : ""; }

void spep_verify_report_free(spep_verify_report* r) { delete r; }

}  // extern "C"
