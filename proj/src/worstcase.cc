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

#include "commgame/worstcase.h"

#include <algorithm>
#include <limits>

namespace commgame {

namespace {

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

MixedStrategy one_against_rest(int n, int x) {
  std::vector<double> alpha(static_cast<size_t>(n), 0.0);
  alpha[static_cast<size_t>(x)] = 1.0;
  std::vector<double> rest(static_cast<size_t>(n), 1.0 / (n - 1));
  rest[static_cast<size_t>(x)] = 0.0;
  return MixedStrategy(alpha, ProbVector::point_mass(n, x), ProbVector(rest));
}

double min_diagonal(const VisitMatrix& vm) {
  double lo = std::numeric_limits<double>::infinity();
  for (int x = 0; x < vm.n(); ++x) lo = std::min(lo, vm.at(x, x));
  return lo;
}

}  // namespace

VisitMatrix guess_correlation(const GuessStrategy& s) {
  return std::visit(
      Overloaded{[](const MixedStrategy& m) { return visit_matrix_mixed(m); },
                 [](const CorrelatedStrategy& c) { return visit_matrix_correlated(c); },
                 [](const QubitStrategy& q) { return visit_matrix_qubit(q); }},
      s);
}

double worst_case_success(const GuessStrategy& s) { return min_diagonal(guess_correlation(s)); }

MixedStrategy explicit_guess_strategy() { return one_against_rest(3, 0); }

CorrelatedStrategy sr_guess_strategy() {
  std::vector<Branch> branches;
  for (int x = 0; x < 3; ++x) branches.push_back({1.0 / 3.0, one_against_rest(3, x)});
  return CorrelatedStrategy(std::move(branches));
}

QubitStrategy quantum_guess_strategy() { return synth_trine_aligned(); }

WorstCaseBound classical_worstcase_bound(int n, long starts, std::uint64_t seed) {
  if (n < 2 || starts < 1) {
    throw Error(ErrorKind::kInvalidArgument, "need n >= 2 and starts >= 1");
  }
  WorstCaseBound out;
  out.n = n;
  out.starts = starts;
  out.value = n == 2 ? 1.0 : 0.5;

  const size_t d = static_cast<size_t>(n);
  auto decode = [d](std::span<const double> x, std::vector<double>& a, std::vector<double>& r,
                    std::vector<double>& q) {
    a.assign(x.begin(), x.begin() + static_cast<long>(d));
    r.resize(d);
    q.resize(d);
    params_to_distribution(x, d, d, r.data());
    params_to_distribution(x, 2 * d, d, q.data());
  };
  // Minimum diagonal of alpha_x r_x + (1 - alpha_x) q_x, negated.
  auto f = [&](std::span<const double> x) {
    std::vector<double> a, r, q;
    decode(x, a, r, q);
    double lo = 1.0;
    for (size_t i = 0; i < d; ++i) lo = std::min(lo, a[i] * r[i] + (1 - a[i]) * q[i]);
    return -lo;
  };
  DescentOptions opt;
  opt.initial_step = 0.25;
  opt.min_step = 1e-12;
  opt.max_evals = 20000;
  out.numeric_max = -1.0;
  for (long s = 0; s < starts; ++s) {
    std::vector<double> x;
    if (s == 0) {
      // The explicit strategy, generalized: input 1 alone on bit 0.
      const MixedStrategy m = one_against_rest(n, 0);
      x = m.alpha();
      for (double v : m.r().entries()) x.push_back(v);
      for (double v : m.q().entries()) x.push_back(v);
    } else {
      Rng rng(derive_seed(seed, static_cast<std::uint64_t>(s)));
      x = random_box_point(rng, 3 * d);
    }
    const DescentResult res = coordinate_descent(f, std::move(x), opt);
    if (-res.value > out.numeric_max) {
      out.numeric_max = -res.value;
      decode(res.x, out.alpha, out.r, out.q);
    }
  }
  return out;
}

}  // namespace commgame
