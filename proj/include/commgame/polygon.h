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

// Regular-polygon toy theories. States and effects are 3-vectors; the
// probability of an effect on a state is their dot product. Indices are
// 1-based in the public API to match the usual omega_i / e_i labels.

#ifndef COMMGAME_POLYGON_H_
#define COMMGAME_POLYGON_H_

#include <array>
#include <cstdint>
#include <vector>

#include "commgame/games.h"
#include "commgame/search.h"

namespace commgame {

using Vec3 = std::array<double, 3>;

inline double dot(const Vec3& a, const Vec3& b) {
  return a[0] * b[0] + a[1] * b[1] + a[2] * b[2];
}

class PolygonTheory {
 public:
  explicit PolygonTheory(int n);

  int n() const { return n_; }
  double radius() const { return r_; }  // sqrt(sec(pi/n))

  // 1-based, wrapping modulo n.
  const Vec3& state(int i) const { return states_[wrap(i)]; }
  const Vec3& effect(int i) const { return effects_[wrap(i)]; }
  Vec3 complement(int i) const;  // u - e_i
  static Vec3 unit() { return {0.0, 0.0, 1.0}; }

  // Boundary point at perimeter coordinate x in [0, 1): edge floor(x n) from
  // omega_k to omega_{k+1} (k = floor(x n) + 1), convex parameter frac(x n).
  Vec3 boundary_point(double x) const;

  // Whether v (last coordinate 1) lies in the state polygon.
  bool contains(const Vec3& v, double tol = 1e-12) const;

  // Whether e evaluates into [0,1] on every pure state.
  bool valid_effect(const Vec3& e, double tol = 1e-12) const;

 private:
  size_t wrap(int i) const { return static_cast<size_t>(((i - 1) % n_ + n_) % n_); }

  int n_;
  double r_;
  std::vector<Vec3> states_;
  std::vector<Vec3> effects_;
};

// Throws kContractViolation when `effect` is not a valid effect of `theory`.
double effect_probability(const PolygonTheory& theory, const Vec3& state, const Vec3& effect);

struct PolygonStrategy {
  PolygonTheory theory;
  std::vector<Vec3> encodings;        // one per closed Restaurant
  std::vector<Vec3> effects;          // weighted effects, summing to u
  // visit[o][m]: probability of visiting Restaurant m after outcome o.
  std::vector<std::vector<double>> visit;

  int restaurants() const { return static_cast<int>(encodings.size()); }
  void validate() const;
};

VisitMatrix visit_matrix_polygon(const PolygonStrategy& s);

// P(2n) with edge-midpoint encodings and the measurement (2/n) ebar_{2k}.
PolygonStrategy synth_even_gon(int n);

struct SquareH3Solution {
  int mixed_role = 0;  // 0-based Restaurant encoded in the mixed state
  double p = 0.0, q = 0.0, r = 0.0;
  PolygonStrategy strategy;
  double residual = 0.0;
};

// Square-bit strategy for any physical H^3 game. One Restaurant is encoded
// in a mixed edge state, chosen so the remaining two stay reachable.
SquareH3Solution synth_square_h3(const GameSpec& spec);

struct PolygonSearchResult {
  int n = 0;             // polygon size
  int restaurants = 0;   // target H^N[1/(N-1)]
  long starts = 0;
  double min_residual = 0.0;  // sup-norm
  std::vector<double> perimeter;  // best encodings as perimeter coordinates
  bool infeasible_numerically = false;  // min_residual > 1e-3
};

// For fixed encodings, the best decoding is a linear program over cone
// combinations of {u, e_i, ebar_i}; the encodings are boundary points found
// by multi-start compass search on their perimeter coordinates.
PolygonSearchResult strict_polygon_search(int n, int restaurants, long starts,
                                          std::uint64_t seed = kDefaultSeed);

// The H^4[1/3] instance.
PolygonSearchResult strict_polygon_infeasibility(int n, long search_budget = 64,
                                                 std::uint64_t seed = kDefaultSeed);

// Sup-norm residual of the best decoding for the given encodings.
double best_decoding_residual(const PolygonTheory& theory, const std::vector<Vec3>& encodings);

}  // namespace commgame

#endif  // COMMGAME_POLYGON_H_
