// Copyright 2026 The qcorr Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


// Multi-start Nelder-Mead minimization over unconstrained angle vectors.
//
// Restarts are independent and may run on several threads. Each restart
// draws its start point from a child of the master seed indexed by the
// restart number, and the reduction takes the minimum with ties going to
// the lowest restart index, so the result does not depend on scheduling.

#pragma once

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdint>
#include <functional>
#include <limits>
#include <numbers>
#include <thread>
#include <vector>

#include "qcorr/random.hpp"

namespace qcorr {

struct OptimizerConfig {
  int restarts = 32;
  int max_iterations = 2000;  // per restart
  double tolerance = 1e-9;    // spread of simplex values at convergence
  double simplex_scale = 0.3; // initial edge length, radians
  std::uint64_t seed = 0;
  int threads = 0;            // 0: hardware concurrency
};

struct OptimizerResult {
  double value = std::numeric_limits<double>::infinity();
  std::vector<double> parameters;
  int best_restart = -1;
  int iterations = 0;            // of the best restart
  double achieved_tolerance = 0; // final simplex spread of the best restart
  std::vector<double> restart_values;

  /// Gap between the best and second best restart; small values indicate
  /// that independent starts agree on the optimum.
  double restart_gap() const {
    if (restart_values.size() < 2) return 0.0;
    auto v = restart_values;
    std::partial_sort(v.begin(), v.begin() + 2, v.end());
    return v[1] - v[0];
  }
};

using Objective = std::function<double(const std::vector<double>&)>;

struct LocalResult {
  double value;
  std::vector<double> x;
  int iterations;
  double spread;
};

/// Plain Nelder-Mead (reflection 1, expansion 2, contraction 1/2, shrink
/// 1/2) followed by one restart of the simplex around the best vertex.
inline LocalResult nelder_mead(const Objective& f, std::vector<double> x0,
                               const OptimizerConfig& config) {
  const std::size_t n = x0.size();
  if (n == 0) return {f(x0), x0, 0, 0.0};

  auto run = [&](const std::vector<double>& start, double scale, int budget) {
    std::vector<std::vector<double>> simplex(n + 1, start);
    std::vector<double> values(n + 1);
    for (std::size_t i = 0; i < n; ++i) simplex[i + 1][i] += scale;
    for (std::size_t i = 0; i <= n; ++i) values[i] = f(simplex[i]);

    std::vector<std::size_t> order(n + 1);
    std::vector<double> centroid(n), trial(n), trial2(n);
    int it = 0;
    double spread = 0.0;
    for (; it < budget; ++it) {
      for (std::size_t i = 0; i <= n; ++i) order[i] = i;
      std::sort(order.begin(), order.end(), [&](auto a, auto b) { return values[a] < values[b]; });
      const std::size_t best = order.front(), worst = order.back(), second = order[n - 1];
      spread = values[worst] - values[best];
      double extent = 0.0;
      for (std::size_t i = 0; i <= n; ++i)
        for (std::size_t j = 0; j < n; ++j)
          extent = std::max(extent, std::abs(simplex[i][j] - simplex[best][j]));
      if (spread <= config.tolerance && extent <= 1e-7) break;

      std::fill(centroid.begin(), centroid.end(), 0.0);
      for (std::size_t i = 0; i <= n; ++i)
        if (i != worst)
          for (std::size_t j = 0; j < n; ++j) centroid[j] += simplex[i][j] / double(n);

      for (std::size_t j = 0; j < n; ++j) trial[j] = centroid[j] + (centroid[j] - simplex[worst][j]);
      const double fr = f(trial);
      if (fr < values[best]) {
        for (std::size_t j = 0; j < n; ++j)
          trial2[j] = centroid[j] + 2.0 * (centroid[j] - simplex[worst][j]);
        const double fe = f(trial2);
        if (fe < fr) {
          simplex[worst] = trial2;
          values[worst] = fe;
        } else {
          simplex[worst] = trial;
          values[worst] = fr;
        }
        continue;
      }
      if (fr < values[second]) {
        simplex[worst] = trial;
        values[worst] = fr;
        continue;
      }
      const bool outside = fr < values[worst];
      for (std::size_t j = 0; j < n; ++j)
        trial2[j] = outside ? centroid[j] + 0.5 * (trial[j] - centroid[j])
                            : centroid[j] + 0.5 * (simplex[worst][j] - centroid[j]);
      const double fc = f(trial2);
      if (fc < std::min(fr, values[worst])) {
        simplex[worst] = trial2;
        values[worst] = fc;
        continue;
      }
      for (std::size_t i = 0; i <= n; ++i) {
        if (i == best) continue;
        for (std::size_t j = 0; j < n; ++j)
          simplex[i][j] = simplex[best][j] + 0.5 * (simplex[i][j] - simplex[best][j]);
        values[i] = f(simplex[i]);
      }
    }
    const auto best = std::min_element(values.begin(), values.end()) - values.begin();
    return LocalResult{values[best], simplex[best], it, spread};
  };

  LocalResult first = run(x0, config.simplex_scale, config.max_iterations);
  // A collapsed simplex can stall away from the minimum; restart once small.
  LocalResult second = run(first.x, 0.05 * config.simplex_scale, config.max_iterations / 2 + 1);
  if (second.value <= first.value) {
    second.iterations += first.iterations;
    return second;
  }
  first.iterations += second.iterations;
  return first;
}

/// Minimizes `f` over R^dimension. `seeds` are tried first (restart indices
/// 0..seeds-1), followed by `config.restarts` starts drawn uniformly from
/// [0, 2 pi)^dimension.
inline OptimizerResult multistart_minimize(const Objective& f, int dimension,
                                           const OptimizerConfig& config,
                                           const std::vector<std::vector<double>>& seeds = {}) {
  const int total = static_cast<int>(seeds.size()) + std::max(config.restarts, 0);
  std::vector<LocalResult> results(total);
  const RandomSource master(config.seed);

  auto work = [&](int r) {
    std::vector<double> start;
    if (r < static_cast<int>(seeds.size())) {
      start = seeds[r];
    } else {
      RandomSource rng = master.child(static_cast<std::uint64_t>(r - seeds.size()));
      start.resize(dimension);
      for (auto& s : start) s = rng.uniform(0.0, 2.0 * std::numbers::pi);
    }
    results[r] = nelder_mead(f, std::move(start), config);
  };

  int threads = config.threads > 0 ? config.threads
                                   : static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
  threads = std::min(threads, total);
  if (threads <= 1) {
    for (int r = 0; r < total; ++r) work(r);
  } else {
    std::atomic<int> next{0};
    std::vector<std::jthread> pool;
    for (int t = 0; t < threads; ++t)
      pool.emplace_back([&] {
        for (int r = next++; r < total; r = next++) work(r);
      });
  }

  OptimizerResult out;
  for (int r = 0; r < total; ++r) {
    out.restart_values.push_back(results[r].value);
    if (results[r].value < out.value) {
      out.value = results[r].value;
      out.parameters = results[r].x;
      out.best_restart = r;
      out.iterations = results[r].iterations;
      out.achieved_tolerance = results[r].spread;
    }
  }
  return out;
}

}  // namespace qcorr
