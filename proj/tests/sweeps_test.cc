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

#include "commgame/sweeps.h"

#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <numbers>

#include "commgame/games.h"

namespace commgame {
namespace {

const GameSpacePoint& at(const std::vector<GameSpacePoint>& pts, int i, int j) {
  return *std::find_if(pts.begin(), pts.end(),
                       [&](const GameSpacePoint& p) { return p.i == i && p.j == j; });
}

TEST(Sweeps, GameSpaceNamedPoints) {
  const auto pts = sweep_game_space(30);
  EXPECT_EQ(pts.size(), 31u * 32u / 2u);
  EXPECT_EQ(at(pts, 10, 10).label, RegionLabel::kSrWinnable);
  EXPECT_EQ(at(pts, 21, 6).label, RegionLabel::kUnphysical);     // (0.7, 0.2, 0.1)
  EXPECT_EQ(at(pts, 20, 6).label, RegionLabel::kMixedWinnable);  // (2/3, 0.2, 2/15)
  EXPECT_EQ(at(pts, 0, 12).label, RegionLabel::kMixedWinnable);
}

TEST(Sweeps, GameSpaceMatchesCharacterization) {
  const int res = 141;
  const auto pts = sweep_game_space(res);
  for (const auto& p : pts) {
    const int mx = std::max({p.i, p.j, p.k});
    const bool unphysical = 3 * mx > 2 * res;
    const bool edge = !unphysical && (p.i == 0 || p.j == 0 || p.k == 0 || 3 * mx == 2 * res);
    const RegionLabel want = unphysical ? RegionLabel::kUnphysical
                             : edge     ? RegionLabel::kMixedWinnable
                                        : RegionLabel::kSrWinnable;
    EXPECT_EQ(p.label, want) << p.i << "," << p.j << "," << p.k;
  }
}

TEST(Sweeps, LocusCurvesReverify) {
  const auto pts = sweep_locus({0.1, 0.2, 0.3, 0.4, 0.5, 0.6}, 21);
  EXPECT_EQ(pts.size(), 6u * 21u);
  for (const auto& p : pts) EXPECT_LT(p.residual, 1e-9) << p.gamma[0] << " " << p.gamma[1];
  // gamma1 = 1/3 passes through the symmetric trine.
  const auto mid = sweep_locus({1.0 / 3.0}, 21)[10];
  EXPECT_NEAR(mid.gamma[1], 1.0 / 3.0, 1e-15);
  EXPECT_NEAR(mid.theta2, 2 * std::numbers::pi / 3, 1e-9);
  EXPECT_NEAR(mid.theta3, 2 * std::numbers::pi / 3, 1e-9);
  EXPECT_NEAR(mid.mid_x, 0.0, 1e-9);
  EXPECT_NEAR(mid.mid_z, -0.5, 1e-9);
  EXPECT_THROW(sweep_locus({0.7}), Error);
}

TEST(Sweeps, CsvShapes) {
  const std::string noise = noise_csv(20);
  EXPECT_EQ(noise.rfind("eps_e,eps_d,boundary_value,advantage\n", 0), 0u);
  EXPECT_EQ(std::count(noise.begin(), noise.end(), '\n'), 401);
  const std::string gs = game_space_csv(sweep_game_space(12));
  EXPECT_EQ(gs.rfind("gamma1,gamma2,gamma3,label\n", 0), 0u);
  EXPECT_EQ(gs, game_space_csv(sweep_game_space(12)));
  EXPECT_THROW(sweep_game_space(5), Error);
}

}  // namespace
}  // namespace commgame
