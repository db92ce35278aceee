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

#include "commgame/polygon.h"

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <random>

namespace commgame {
namespace {

using std::numbers::pi;

TEST(Polygon, SquareCoordinates) {
  const PolygonTheory sq(4);
  const double r = std::pow(2.0, 0.25);
  EXPECT_NEAR(sq.radius(), r, 1e-15);
  for (int i = 1; i <= 4; ++i) {
    const double a = (2 * i - 1) * pi / 4;
    EXPECT_NEAR(sq.effect(i)[0], 0.5 * r * std::cos(a), 1e-15);
    EXPECT_NEAR(sq.effect(i)[1], 0.5 * r * std::sin(a), 1e-15);
    EXPECT_EQ(sq.effect(i)[2], 0.5);
    EXPECT_NEAR(sq.state(i)[0], r * std::cos(i * pi / 2), 1e-15);
  }
  // Square table: e_i . omega_j is 0 or 1 at the vertices (1/2 only on the
  // edge midpoints).
  for (int i = 1; i <= 4; ++i) {
    for (int j = 1; j <= 4; ++j) {
      const double p = dot(sq.effect(i), sq.state(j));
      EXPECT_TRUE(std::abs(p) < 1e-15 || std::abs(p - 1) < 1e-15) << i << "," << j;
    }
    const Vec3 mid = sq.boundary_point((i - 0.5) / 4);
    for (int j = 1; j <= 4; ++j) {
      const double p = dot(sq.effect(j), mid);
      EXPECT_TRUE(std::abs(p) < 1e-15 || std::abs(p - 0.5) < 1e-15 || std::abs(p - 1) < 1e-15);
    }
  }
}

TEST(Polygon, HexagonCoordinates) {
  const PolygonTheory hex(6);
  EXPECT_NEAR(hex.radius(), std::sqrt(2 / std::sqrt(3.0)), 1e-15);
  EXPECT_NEAR(hex.state(6)[0], hex.radius(), 1e-15);
  EXPECT_NEAR(hex.effect(1)[1], 0.5 * hex.radius() * std::sin(pi / 6), 1e-15);
  EXPECT_EQ(hex.state(7), hex.state(1));
}

TEST(Polygon, EffectValidity) {
  for (int n = 3; n <= 16; ++n) {
    const PolygonTheory t(n);
    for (int i = 1; i <= n; ++i) {
      EXPECT_TRUE(t.valid_effect(t.effect(i))) << n;
      EXPECT_TRUE(t.valid_effect(t.complement(i))) << n;
      for (int j = 1; j <= n; ++j) {
        EXPECT_NEAR(dot(t.complement(i), t.state(j)), 1.0 - dot(t.effect(i), t.state(j)), 1e-15);
      }
    }
  }
  EXPECT_THROW(PolygonTheory(2), Error);
}

TEST(Polygon, EffectProbabilityBasics) {
  const PolygonTheory t(6);
  EXPECT_EQ(effect_probability(t, t.state(2), PolygonTheory::unit()), 1.0);
  EXPECT_EQ(effect_probability(t, t.state(2), Vec3{0, 0, 0}), 0.0);
  const Vec3 s1 = t.boundary_point(0.5 / 6);  // midpoint of omega_1, omega_2
  EXPECT_NEAR(effect_probability(t, s1, t.complement(2)), 0.0, 1e-15);
  EXPECT_THROW(effect_probability(t, s1, Vec3{0, 0, 2}), Error);
}

TEST(Polygon, MirrorSymmetry) {
  // Reflection across the axis of e_i maps the polygon to itself and keeps
  // e_i's statistics.
  for (int n : {4, 5, 6, 9}) {
    const PolygonTheory t(n);
    for (int i = 1; i <= n; ++i) {
      const double phi = std::atan2(t.effect(i)[1], t.effect(i)[0]);
      for (int j = 1; j <= n; ++j) {
        const Vec3& w = t.state(j);
        const double c = std::cos(2 * phi), s = std::sin(2 * phi);
        const Vec3 m{c * w[0] + s * w[1], s * w[0] - c * w[1], 1.0};
        EXPECT_TRUE(t.contains(m, 1e-9));
        EXPECT_NEAR(dot(t.effect(i), w), dot(t.effect(i), m), 1e-14);
      }
    }
  }
}

TEST(Polygon, InteriorStatesNeverGiveZero) {
  for (int n : {4, 5, 6, 8}) {
    const PolygonTheory t(n);
    for (int a = 1; a < 20; ++a) {
      for (int b = 1; b < 20; ++b) {
        const double x = (a - 10) / 10.0 * t.radius(), y = (b - 10) / 10.0 * t.radius();
        const Vec3 v{x, y, 1.0};
        if (!t.contains(v, -1e-6)) continue;  // strictly interior only
        double lo = 1.0;
        for (int i = 1; i <= n; ++i) {
          lo = std::min({lo, dot(t.effect(i), v), dot(t.complement(i), v)});
        }
        EXPECT_GT(lo, 0.0);
      }
    }
  }
}

TEST(Polygon, EvenGonWinsUniformGames) {
  for (int n = 3; n <= 8; ++n) {
    const auto s = synth_even_gon(n);
    const Verdict v = check_game(GameSpec::uniform(n), visit_matrix_polygon(s), 1e-12);
    EXPECT_TRUE(v.wins) << n << " " << v.max_violation;
  }
}

TEST(Polygon, SquareBitNamedCases) {
  const auto u = synth_square_h3(GameSpec::uniform(3));
  EXPECT_NEAR(u.p, 0.5, 1e-15);
  EXPECT_LT(u.residual, 1e-12);
  const auto edge = synth_square_h3(GameSpec(ProbVector({1.0 / 6, 1.0 / 6, 2.0 / 3})));
  EXPECT_LT(edge.residual, 1e-12);
  const auto top = synth_square_h3(GameSpec(ProbVector({0.0, 1.0 / 3, 2.0 / 3})));
  EXPECT_LT(top.residual, 1e-12);
  const auto g = synth_square_h3(GameSpec(ProbVector({0.4, 0.35, 0.25})));
  EXPECT_LT(g.residual, 1e-12);
  EXPECT_EQ(g.mixed_role, 2);
  // gamma = 2/3 on the mixed role forces p = 1.
  EXPECT_EQ(edge.mixed_role, 2);
  EXPECT_NEAR(edge.p, 1.0, 1e-15);
  EXPECT_LT(synth_square_h3(GameSpec(ProbVector({0.0, 0.4, 0.6}))).residual, 1e-12);
}

TEST(Polygon, SquareBitRandomGames) {
  std::mt19937_64 rng(41);
  std::exponential_distribution<double> e;
  int done = 0;
  while (done < 500) {
    double a = e(rng), b = e(rng), c = e(rng);
    const double s = a + b + c;
    a /= s, b /= s;
    c = 1.0 - a - b;
    if (a > 2.0 / 3 || b > 2.0 / 3 || c > 2.0 / 3) continue;
    const GameSpec spec{ProbVector({a, b, c})};
    EXPECT_LT(synth_square_h3(spec).residual, 1e-9) << spec.label();
    ++done;
  }
}

TEST(Polygon, SearchRecoversHexagonStrategy) {
  const auto r = strict_polygon_search(6, 3, 8, 5);
  EXPECT_LT(r.min_residual, 1e-9);
  // The even-gon encodings themselves need no search.
  EXPECT_LT(best_decoding_residual(PolygonTheory(6), synth_even_gon(3).encodings), 1e-12);
}

TEST(Polygon, StrictFourRestaurantSearchStaysAway) {
  for (int n : {4, 6}) {
    const auto r = strict_polygon_infeasibility(n, 3, 5);
    EXPECT_TRUE(r.infeasible_numerically) << n << " " << r.min_residual;
  }
}

}  // namespace
}  // namespace commgame
