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

#include "spep/nelder_mead.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include "spep/errors.hpp"

namespace spep {

namespace {

struct Simplex {
  std::vector<std::vector<double>> points;
  std::vector<double> values;
};

Simplex make_simplex(const Objective& f, const std::vector<double>& center, double step, int& evals) {
  const std::size_t n = center.size();
  Simplex s;
  s.points.assign(n + 1, center);
  for (std::size_t i = 0; i < n; ++i) s.points[i + 1][i] += step;
  s.values.resize(n + 1);
  for (std::size_t i = 0; i <= n; ++i) {
    s.values[i] = f(s.points[i]);
    ++evals;
  }
  return s;
}

void order(Simplex& s) {
  std::vector<std::size_t> idx(s.points.size());
  std::iota(idx.begin(), idx.end(), 0);
  std::stable_sort(idx.begin(), idx.end(),
                   [&](std::size_t a, std::size_t b) { return s.values[a] < s.values[b]; });
  Simplex sorted;
  for (std::size_t i : idx) {
    sorted.points.push_back(std::move(s.points[i]));
    sorted.values.push_back(s.values[i]);
  }
  s = std::move(sorted);
}

std::vector<double> along(const std::vector<double>& from, const std::vector<double>& to, double t) {
  std::vector<double> out(from.size());
  for (std::size_t i = 0; i < from.size(); ++i) out[i] = from[i] + t * (to[i] - from[i]);
  return out;
}

}  // namespace

NelderMeadResult nelder_mead_minimize(const Objective& f, std::vector<double> start,
                                      const NelderMeadOptions& options) {
  if (start.empty()) throw DomainError("Nelder-Mead needs at least one parameter");
  if (!(options.tolerance > 0.0) || options.max_iterations < 1) {
    throw DomainError("Nelder-Mead needs a positive tolerance and iteration budget");
  }
  const std::size_t n = start.size();
  NelderMeadResult result;
  Simplex s = make_simplex(f, start, options.initial_step, result.evaluations);
  double last_restart_value = std::numeric_limits<double>::infinity();

  while (result.iterations < options.max_iterations) {
    order(s);
    if (s.values[n] - s.values[0] <= options.tolerance) {
      // Re-seed around the best vertex; stop once that no longer helps.
      if (last_restart_value - s.values[0] <= options.tolerance) {
        result.converged = true;
        break;
      }
      last_restart_value = s.values[0];
      s = make_simplex(f, s.points[0], options.initial_step * 1e-2, result.evaluations);
      continue;
    }
    ++result.iterations;

    std::vector<double> centroid(n, 0.0);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t d = 0; d < n; ++d) centroid[d] += s.points[i][d] / static_cast<double>(n);
    }
    const auto& worst = s.points[n];
    auto reflected = along(centroid, worst, -1.0);
    const double fr = f(reflected);
    ++result.evaluations;

    if (fr < s.values[0]) {
      auto expanded = along(centroid, worst, -2.0);
      const double fe = f(expanded);
      ++result.evaluations;
      if (fe < fr) {
        s.points[n] = std::move(expanded);
        s.values[n] = fe;
      } else {
        s.points[n] = std::move(reflected);
        s.values[n] = fr;
      }
      continue;
    }
    if (fr < s.values[n - 1]) {
      s.points[n] = std::move(reflected);
      s.values[n] = fr;
      continue;
    }
    const bool outside = fr < s.values[n];
    auto contracted = outside ? along(centroid, reflected, 0.5) : along(centroid, worst, 0.5);
    const double fc = f(contracted);
    ++result.evaluations;
    if (fc < (outside ? fr : s.values[n])) {
      s.points[n] = std::move(contracted);
      s.values[n] = fc;
      continue;
    }
    for (std::size_t i = 1; i <= n; ++i) {
      s.points[i] = along(s.points[0], s.points[i], 0.5);
      s.values[i] = f(s.points[i]);
      ++result.evaluations;
    }
  }
  order(s);
  result.x = s.points[0];
  result.value = s.values[0];
  return result;
}

}  // namespace spep
