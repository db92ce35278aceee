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

#include <gtest/gtest.h>

#include <array>
#include <cmath>

namespace commgame {
namespace {

TEST(WorstCase, ExplicitClassicalStrategy) {
  const VisitMatrix p = guess_correlation(explicit_guess_strategy());
  EXPECT_EQ(p.at(0, 0), 1.0);
  EXPECT_EQ(p.at(1, 1), 0.5);
  EXPECT_EQ(p.at(2, 2), 0.5);
  EXPECT_EQ(worst_case_success(explicit_guess_strategy()), 0.5);
}

TEST(WorstCase, SharedRandomnessMixture) {
  const auto sr = sr_guess_strategy();
  EXPECT_NEAR(sr.sr_bits(), std::log2(3.0), 1e-15);
  const VisitMatrix p = guess_correlation(sr);
  for (int b = 0; b < 3; ++b)
    for (int x = 0; x < 3; ++x) EXPECT_NEAR(p.at(b, x), b == x ? 2.0 / 3 : 1.0 / 6, 1e-15);
  EXPECT_NEAR(worst_case_success(sr), 2.0 / 3, 1e-15);
}

TEST(WorstCase, AlignedTrine) {
  const VisitMatrix p = guess_correlation(quantum_guess_strategy());
  for (int x = 0; x < 3; ++x) EXPECT_NEAR(p.at(x, x), 2.0 / 3, 1e-14);
  EXPECT_NEAR(worst_case_success(quantum_guess_strategy()), 2.0 / 3, 1e-12);
}

TEST(WorstCase, ClassicalBound) {
  const auto b = classical_worstcase_bound(3, 100, 9);
  EXPECT_EQ(b.value, 0.5);
  EXPECT_LE(b.numeric_max, 0.5 + 1e-9);
  EXPECT_NEAR(b.numeric_max, 0.5, 1e-12);
  EXPECT_EQ(classical_worstcase_bound(2, 10).value, 1.0);
  EXPECT_NEAR(classical_worstcase_bound(2, 10).numeric_max, 1.0, 1e-9);
  EXPECT_THROW(classical_worstcase_bound(1), Error);
}

TEST(WorstCase, MixingNeverDropsBelowWeightedMinimum) {
  Rng rng(5);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  const std::array<VisitMatrix, 3> ms{guess_correlation(explicit_guess_strategy()),
                                      guess_correlation(sr_guess_strategy()),
                                      guess_correlation(quantum_guess_strategy())};
  auto min_diag = [](const VisitMatrix& v) {
    return std::min({v.at(0, 0), v.at(1, 1), v.at(2, 2)});
  };
  for (int i = 0; i < 200; ++i) {
    double w0 = u(rng), w1 = u(rng), w2 = u(rng);
    const double s = w0 + w1 + w2;
    const ProbVector w({w0 / s, w1 / s, 1.0 - w0 / s - w1 / s});
    const double mixed = min_diag(convex_mix(ms, w));
    const double floor = w[0] * min_diag(ms[0]) + w[1] * min_diag(ms[1]) + w[2] * min_diag(ms[2]);
    EXPECT_GE(mixed, floor - 1e-14);
  }
}

}  // namespace
}  // namespace commgame
