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

#include "spep/datasets.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

#include "numfmt.hpp"
#include "parallel.hpp"
#include "spep/errors.hpp"
#include "spep/imperfections.hpp"
#include "spep/protocol.hpp"

namespace spep {

namespace {

using detail::format_g15;

bool all_finite(const std::vector<double>& row) {
  for (double x : row) {
    if (!std::isfinite(x)) return false;
  }
  return true;
}

void write_row(std::ostringstream& out, double f, const std::vector<double>& row) {
  if (!all_finite(row)) {
    out << "# skipped F=" << format_g15(f) << " (non-finite value)\n";
    return;
  }
  for (std::size_t i = 0; i < row.size(); ++i) out << (i ? "," : "") << format_g15(row[i]);
  out << '\n';
}

void write_skip(std::ostringstream& out, double f) {
  out << "# skipped F=" << format_g15(f) << " (zero success probability)\n";
}

std::string grid_line(const FidelityGrid& g) {
  return "# f_min=" + format_g15(g.f_min) + " f_max=" + format_g15(g.f_max) +
         " points=" + std::to_string(g.points) + "\n";
}

}  // namespace

void FidelityGrid::validate() const {
  if (!(f_min >= 0.0 && f_max <= 1.0 && f_min <= f_max)) {
    throw DomainError("fidelity grid must satisfy 0 <= f_min <= f_max <= 1");
  }
  if (points < 2) throw DomainError("fidelity grid needs at least 2 points");
}

std::vector<double> FidelityGrid::values() const {
  validate();
  std::vector<double> v(static_cast<std::size_t>(points));
  const double step = (f_max - f_min) / (points - 1);
  for (int i = 0; i < points; ++i) v[static_cast<std::size_t>(i)] = f_min + i * step;
  v.back() = f_max;
  return v;
}

std::string curves_csv(const FidelityGrid& grid) {
  const auto fs = grid.values();
  std::ostringstream out;
  out << "# spep curves: optimized and fixed-angle (theta = pi/8) purification\n" << grid_line(grid);
  out << "F,f_opt,f_1,theta_opt,p_opt,p_1\n";
  for (double f : fs) {
    write_row(out, f, {f, f_opt(f), f_1(f), theta_opt(f), p_opt(f), p_1(f)});
  }
  return out.str();
}

std::string visibility_csv(const FidelityGrid& grid, std::span<const double> visibilities, int workers) {
  const auto fs = grid.values();
  if (visibilities.empty()) throw DomainError("visibility list must not be empty");
  for (double v : visibilities) {
    if (!(v >= 0.0 && v <= 1.0)) throw DomainError("visibilities must lie in [0, 1]");
  }
  struct Row {
    bool degenerate = false;
    std::vector<double> values;
  };
  std::vector<Row> rows(fs.size());
  detail::parallel_for(fs.size(), workers, [&](std::size_t i) {
    Row& row = rows[i];
    row.values.push_back(fs[i]);
    for (double v : visibilities) {
      try {
        row.values.push_back(run_with_visibility(fs[i], std::numbers::pi / 8.0, {v}).output_fidelity - fs[i]);
      } catch (const DegenerateError&) {
        row.degenerate = true;
      }
    }
  });

  std::ostringstream out;
  out << "# spep visibility: fidelity improvement at theta = pi/8 with partially distinguishable photons\n"
      << grid_line(grid) << "# visibilities=";
  for (std::size_t i = 0; i < visibilities.size(); ++i) out << (i ? "," : "") << format_g15(visibilities[i]);
  out << "\nF";
  for (double v : visibilities) out << ",dF_V" << format_g15(v);
  out << '\n';
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].degenerate) {
      write_skip(out, fs[i]);
    } else {
      write_row(out, fs[i], rows[i].values);
    }
  }
  return out.str();
}

std::string optimize_csv(std::span<const double> fidelities, std::span<const std::size_t> ancillas,
                         const SearchConfig& config) {
  std::ostringstream out;
  out << "# spep optimize: random-restart simplex search over linear-optical devices with vacuum ancillas\n"
      << "# seed=" << config.seed << " restarts=" << config.restarts
      << " max_iterations=" << config.max_iterations << " tolerance=" << format_g15(config.tolerance) << '\n'
      << "F,ancilla_per_side,best_fidelity,f_opt,gap,evaluations\n";
  for (double f : fidelities) {
    for (std::size_t anc : ancillas) {
      SearchConfig c = config;
      c.ancilla_per_side = anc;
      const SearchResult r = search(f, c);
      const double target = f_opt(f);
      const std::vector<double> row{f, static_cast<double>(anc), r.best_fidelity, target,
                                    r.best_fidelity - target, static_cast<double>(r.evaluations)};
      write_row(out, f, row);
    }
  }
  return out.str();
}

}  // namespace spep
