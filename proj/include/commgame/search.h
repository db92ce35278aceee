// Copyright 2026 The commgame Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Derivative-free local search and seeding helpers shared by the numeric
// searches. Everything here is deterministic given its inputs.

#ifndef COMMGAME_SEARCH_H_
#define COMMGAME_SEARCH_H_

#include <algorithm>
#include <cstdint>
#include <random>
#include <span>
#include <vector>

namespace commgame {

inline constexpr std::uint64_t kDefaultSeed = 20260417;

// SplitMix64 finalizer: independent per-task seeds from a master seed, so
// results do not depend on how tasks are scheduled.
inline std::uint64_t derive_seed(std::uint64_t master, std::uint64_t index) {
  std::uint64_t z = master + 0x9E3779B97F4A7C15ULL * (index + 1);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

using Rng = std::mt19937_64;

// Reads `k` box parameters starting at `from` as an unnormalized
// distribution. An all-zero block maps to uniform.
inline void params_to_distribution(std::span<const double> x, size_t from,
                                   size_t k, double* out) {
  double s = 0.0;
  for (size_t i = 0; i < k; ++i) s += x[from + i];
  for (size_t i = 0; i < k; ++i) {
    out[i] = s > 0.0 ? x[from + i] / s : 1.0 / static_cast<double>(k);
  }
}

struct DescentOptions {
  double initial_step = 0.25;
  double min_step = 1e-10;
  double shrink = 0.5;
  long max_evals = 200000;
};

struct DescentResult {
  std::vector<double> x;
  double value = 0.0;
  long evals = 0;
};

// Compass search on the box [0,1]^d: try +/- step along each coordinate,
// keep improvements, shrink the step after an unproductive sweep.
template <typename F>
DescentResult coordinate_descent(F&& f, std::vector<double> x,
                                 const DescentOptions& opt = {}) {
  DescentResult res;
  double best = f(std::span<const double>(x));
  long evals = 1;
  double step = opt.initial_step;
  while (step >= opt.min_step && evals < opt.max_evals) {
    bool improved = false;
    for (size_t i = 0; i < x.size() && evals < opt.max_evals; ++i) {
      for (double dir : {1.0, -1.0}) {
        const double old = x[i];
        const double cand = std::clamp(old + dir * step, 0.0, 1.0);
        if (cand == old) continue;
        x[i] = cand;
        const double v = f(std::span<const double>(x));
        ++evals;
        if (v < best) {
          best = v;
          improved = true;
          break;
        }
        x[i] = old;
      }
    }
    if (!improved) step *= opt.shrink;
  }
  res.x = std::move(x);
  res.value = best;
  res.evals = evals;
  return res;
}

inline std::vector<double> random_box_point(Rng& rng, size_t d) {
  std::uniform_real_distribution<double> u(0.0, 1.0);
  std::vector<double> x(d);
  for (double& v : x) v = u(rng);
  return x;
}

}  // namespace commgame

#endif  // COMMGAME_SEARCH_H_
