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

#include "commgame/nsbox.h"

#include <gtest/gtest.h>

#include <cmath>

#include "commgame/games.h"

namespace commgame {
namespace {

// Uniform-marginal box with a xor b = f(x, y), f given as a 4-bit table.
NsBox parity_box(int f) {
  NsBox b;
  for (int x = 0; x < 2; ++x)
    for (int y = 0; y < 2; ++y) b.c[x][y] = (f >> (2 * x + y)) & 1 ? 0.0 : 0.5;
  return b;
}

TEST(NsBox, TableRowsAreDistributions) {
  Rng rng(3);
  for (int i = 0; i < 1000; ++i) {
    const NsBox b = NsBox::random(rng);
    b.validate();
    for (const auto& row : b.table()) {
      double s = 0;
      for (double p : row) {
        EXPECT_GE(p, -1e-12);
        s += p;
      }
      EXPECT_NEAR(s, 1.0, 1e-12);
    }
  }
}

TEST(NsBox, ValidationRejectsOutOfRangeJoint) {
  NsBox b;
  b.c[0][1] = 0.6;  // above min(m, n) = 0.5
  EXPECT_THROW(b.validate(), Error);
  b.c[0][1] = 0.0;
  b.m[0] = 0.9;
  b.n[1] = 0.9;  // now c01 must be at least 0.8
  EXPECT_THROW(b.validate(), Error);
  b.m = {1.5, 0.5};
  EXPECT_THROW(b.validate(), Error);
}

TEST(NsBox, ChshFormulaMatchesCorrelators) {
  Rng rng(11);
  for (int i = 0; i < 10000; ++i) {
    const NsBox b = NsBox::random(rng);
    EXPECT_NEAR(chsh(b), chsh_from_table(b), 1e-12);
  }
}

TEST(NsBox, PrBoxFoundByBruteForce) {
  int hits = 0, which = -1;
  for (int f = 0; f < 16; ++f) {
    if (std::abs(chsh(parity_box(f)) - 4.0) < 1e-12) ++hits, which = f;
  }
  ASSERT_EQ(hits, 1);
  // Only (x, y) = (0, 1) flips the parity.
  EXPECT_EQ(which, 1 << 1);
  EXPECT_EQ(NsBox::pr().c, parity_box(which).c);
  EXPECT_DOUBLE_EQ(chsh(NsBox::pr()), 4.0);
}

TEST(NsBox, NamedBoxes) {
  EXPECT_DOUBLE_EQ(chsh(NsBox::product()), 0.0);
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 2; ++b)
      EXPECT_DOUBLE_EQ(chsh(NsBox::deterministic(a, b)), a == b ? 2.0 : -2.0);
  const auto pr = cup_game_success(NsBox::pr());
  EXPECT_DOUBLE_EQ(pr.average, 1.0);
  const auto prod = cup_game_success(NsBox::product());
  EXPECT_NEAR(prod.average, 8.0 / 12, 1e-15);
  EXPECT_EQ(prod.success[0], 1.0);
  EXPECT_EQ(prod.success[1], 1.0);
}

TEST(NsBox, SuccessLawOnRandomBoxes) {
  Rng rng(20260417);
  double worst = 0;
  for (int i = 0; i < 10000; ++i) {
    const NsBox b = NsBox::random(rng);
    const auto out = cup_game_success(b);
    worst = std::max(worst, std::abs(out.average - (8.0 + chsh(b)) / 12.0));
    EXPECT_NEAR(out.success[0], 1.0, 1e-15);
    EXPECT_NEAR(out.success[1], 1.0, 1e-15);
  }
  EXPECT_LT(worst, 1e-12);
}

TEST(NsBox, PairSuccessesMatchClosedForms) {
  Rng rng(7);
  for (int i = 0; i < 100; ++i) {
    const NsBox b = NsBox::random(rng);
    const auto t = b.table();  // t[2x + y][2a + b]
    const auto s = cup_game_success(b).success;
    EXPECT_NEAR(s[2], t[0][0] + t[1][2], 1e-14);  // 13
    EXPECT_NEAR(s[3], t[0][3] + t[1][1], 1e-14);  // 24
    EXPECT_NEAR(s[4], t[2][0] + t[3][3], 1e-14);  // 14
    EXPECT_NEAR(s[5], t[2][3] + t[3][0], 1e-14);  // 23
  }
}

TEST(NsBox, ClassicalBound) {
  EXPECT_EQ(classical_cup_bound(), 5.0 / 6);
  EXPECT_EQ(classical_cup_bound(true), 0.5);
  // Aligned local boxes reach CHSH 2 and therefore exactly the classical value.
  EXPECT_NEAR(cup_game_success(NsBox::deterministic(1, 1)).average, 5.0 / 6, 1e-15);
}

}  // namespace
}  // namespace commgame
