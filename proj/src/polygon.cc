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

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "commgame/lp.h"

namespace commgame {

namespace {

constexpr double kPi = std::numbers::pi;

Vec3 axpy(double a, const Vec3& x, double b, const Vec3& y) {
  return {a * x[0] + b * y[0], a * x[1] + b * y[1], a * x[2] + b * y[2]};
}

}  // namespace

PolygonTheory::PolygonTheory(int n) : n_(n) {
  if (n < 3) {
    throw Error(ErrorKind::kInvalidArgument,
                "polygon theories need n >= 3, got " + std::to_string(n));
  }
  r_ = std::sqrt(1.0 / std::cos(kPi / n));
  for (int i = 1; i <= n; ++i) {
    const double a = 2.0 * kPi * i / n;
    states_.push_back({r_ * std::cos(a), r_ * std::sin(a), 1.0});
    if (n % 2 == 1) {
      const double s = 1.0 / (1.0 + r_ * r_);
      effects_.push_back({s * r_ * std::cos(a), s * r_ * std::sin(a), s});
    } else {
      const double b = (2.0 * i - 1.0) * kPi / n;
      effects_.push_back({0.5 * r_ * std::cos(b), 0.5 * r_ * std::sin(b), 0.5});
    }
  }
}

Vec3 PolygonTheory::complement(int i) const { return axpy(1.0, unit(), -1.0, effect(i)); }

Vec3 PolygonTheory::boundary_point(double x) const {
  x -= std::floor(x);
  const double pos = x * n_;
  int k = static_cast<int>(std::floor(pos));
  double f = pos - k;
  if (k >= n_) k = n_ - 1, f = 1.0;
  return axpy(1.0 - f, state(k + 1), f, state(k + 2));
}

bool PolygonTheory::contains(const Vec3& v, double tol) const {
  if (std::abs(v[2] - 1.0) > tol) return false;
  for (int i = 1; i <= n_; ++i) {
    const Vec3& a = state(i);
    const Vec3& b = state(i + 1);
    // States run counter-clockwise, so interior points sit to the left.
    const double cross = (b[0] - a[0]) * (v[1] - a[1]) - (b[1] - a[1]) * (v[0] - a[0]);
    if (cross < -tol) return false;
  }
  return true;
}

bool PolygonTheory::valid_effect(const Vec3& e, double tol) const {
  for (const auto& w : states_) {
    const double p = dot(e, w);
    if (p < -tol || p > 1.0 + tol) return false;
  }
  return true;
}

double effect_probability(const PolygonTheory& theory, const Vec3& state, const Vec3& effect) {
  if (!theory.valid_effect(effect)) {
    throw Error(ErrorKind::kContractViolation, "not a valid effect of the theory");
  }
  return dot(state, effect);
}

void PolygonStrategy::validate() const {
  const size_t k = encodings.size();
  if (k < 2) throw Error(ErrorKind::kInvalidArgument, "need at least 2 Restaurants");
  if (effects.size() != visit.size()) {
    throw Error(ErrorKind::kDimensionMismatch, "one visit rule per effect required");
  }
  for (const auto& s : encodings) {
    if (!theory.contains(s)) {
      throw Error(ErrorKind::kInvalidArgument, "encoding outside the state polygon");
    }
  }
  Vec3 sum{0, 0, 0};
  for (size_t o = 0; o < effects.size(); ++o) {
    if (!theory.valid_effect(effects[o])) {
      throw Error(ErrorKind::kInvalidArgument, "effect " + std::to_string(o + 1) + " is not valid");
    }
    sum = axpy(1.0, sum, 1.0, effects[o]);
    if (visit[o].size() != k) {
      throw Error(ErrorKind::kDimensionMismatch, "visit rule has the wrong length");
    }
    ProbVector check(visit[o]);
  }
  if (std::abs(sum[0]) > 1e-12 || std::abs(sum[1]) > 1e-12 || std::abs(sum[2] - 1.0) > 1e-12) {
    throw Error(ErrorKind::kInvalidArgument, "effects do not sum to the unit effect");
  }
}

VisitMatrix visit_matrix_polygon(const PolygonStrategy& s) {
  s.validate();
  const int k = s.restaurants();
  std::vector<std::vector<double>> p(k, std::vector<double>(k, 0.0));
  for (size_t o = 0; o < s.effects.size(); ++o) {
    for (int c = 0; c < k; ++c) {
      const double pr = dot(s.effects[o], s.encodings[c]);
      for (int m = 0; m < k; ++m) p[m][c] += pr * s.visit[o][m];
    }
  }
  for (auto& row : p)
    for (double& v : row) v = v < 1e-15 ? 0.0 : std::min(v, 1.0);
  return VisitMatrix(p);
}

PolygonStrategy synth_even_gon(int n) {
  if (n < 3) {
    throw Error(ErrorKind::kInvalidArgument, "synth_even_gon needs n >= 3");
  }
  PolygonStrategy s{PolygonTheory(2 * n), {}, {}, {}};
  for (int i = 1; i <= n; ++i) {
    s.encodings.push_back(axpy(0.5, s.theory.state(2 * i - 1), 0.5, s.theory.state(2 * i)));
    const Vec3 eb = s.theory.complement(2 * i);
    s.effects.push_back(axpy(2.0 / n, eb, 0.0, eb));
    std::vector<double> rule(n, 0.0);
    rule[i - 1] = 1.0;
    s.visit.push_back(rule);
  }
  return s;
}

SquareH3Solution synth_square_h3(const GameSpec& spec) {
  if (spec.n() != 3) {
    throw Error(ErrorKind::kDimensionMismatch, "synth_square_h3 needs n = 3");
  }
  const auto g = spec.gamma();
  // The mixed-encoded Restaurant C fixes p = 3 gamma_C / 2; the other two
  // are reachable iff both are >= 1/3 - gamma_C / 2. Either the smallest or
  // the largest gamma always qualifies, so take the role with most slack.
  int c = 0;
  double best = -1.0;
  for (int i = 0; i < 3; ++i) {
    const double slack = std::min(g[(i + 1) % 3], g[(i + 2) % 3]) - (1.0 / 3.0 - g[i] / 2.0);
    if (slack > best) best = slack, c = i;
  }
  const int a = c == 0 ? 1 : 0;
  const int b = 3 - a - c;
  SquareH3Solution sol{c, 0, 0, 0, {PolygonTheory(4), {}, {}, {}}, 0.0};
  sol.p = std::min(1.0, 1.5 * g[c]);
  const double x = std::clamp(3.0 * g[a] - (1.0 - sol.p), 0.0, 1.0);
  sol.r = x;
  sol.q = 1.0 - x;
  PolygonStrategy& s = sol.strategy;
  const PolygonTheory& t = s.theory;
  s.encodings.resize(3);
  s.encodings[a] = t.state(1);
  s.encodings[b] = t.state(4);
  s.encodings[c] = axpy(sol.q, t.state(2), 1.0 - sol.q, t.state(3));
  auto rule = [](int m, double w) {
    std::vector<double> v(3, 0.0);
    v[m] = w;
    return v;
  };
  s.effects = {axpy(sol.p, t.effect(1), 0.0, t.effect(1)),
               axpy(1.0 - sol.p, t.effect(2), 0.0, t.effect(2)),
               axpy(sol.p, t.effect(3), 0.0, t.effect(3)),
               axpy(1.0 - sol.p, t.effect(4), 0.0, t.effect(4))};
  std::vector<double> split = rule(a, sol.r);
  split[b] = 1.0 - sol.r;
  s.visit = {rule(c, 1.0), rule(b, 1.0), split, rule(a, 1.0)};
  const Verdict v = check_game(spec, visit_matrix_polygon(s));
  sol.residual = v.max_violation;
  if (!v.wins) {
    throw Error(ErrorKind::kNumericFailure,
                "square-bit construction missed " + spec.label());
  }
  return sol;
}

double best_decoding_residual(const PolygonTheory& theory, const std::vector<Vec3>& encodings) {
  const int k = static_cast<int>(encodings.size());
  const double target = 1.0 / (k - 1);
  std::vector<Vec3> gens{PolygonTheory::unit()};
  for (int i = 1; i <= theory.n(); ++i) {
    gens.push_back(theory.effect(i));
    gens.push_back(theory.complement(i));
  }
  const int g = static_cast<int>(gens.size());
  LinearProgram<double> lp;
  std::vector<int> c(static_cast<size_t>(k * g));
  for (auto& v : c) v = lp.add_variable();
  const int t = lp.add_variable(1.0);
  for (int d = 0; d < 3; ++d) {
    std::vector<std::pair<int, double>> row;
    for (int o = 0; o < k; ++o)
      for (int j = 0; j < g; ++j)
        if (gens[j][d] != 0.0) row.emplace_back(c[o * g + j], gens[j][d]);
    lp.add_constraint(row, Sense::kEqual, d == 2 ? 1.0 : 0.0);
  }
  for (int o = 0; o < k; ++o) {
    for (int s = 0; s < k; ++s) {
      std::vector<std::pair<int, double>> row;
      for (int j = 0; j < g; ++j) {
        const double pr = dot(gens[j], encodings[s]);
        if (pr != 0.0) row.emplace_back(c[o * g + j], pr);
      }
      const double want = o == s ? 0.0 : target;
      row.emplace_back(t, -1.0);
      lp.add_constraint(row, Sense::kLessEqual, want);
      row.back().second = 1.0;
      lp.add_constraint(row, Sense::kGreaterEqual, want);
    }
  }
  const auto res = lp.minimize();
  if (res.status != LpStatus::kOptimal) {
    throw Error(ErrorKind::kNumericFailure, "decoding LP did not solve");
  }
  return std::max(0.0, res.objective);
}

PolygonSearchResult strict_polygon_search(int n, int restaurants, long starts,
                                          std::uint64_t seed) {
  if (restaurants < 3 || starts < 1) {
    throw Error(ErrorKind::kInvalidArgument, "need restaurants >= 3 and starts >= 1");
  }
  const PolygonTheory theory(n);
  auto f = [&](std::span<const double> x) {
    std::vector<Vec3> enc;
    for (double v : x) enc.push_back(theory.boundary_point(v));
    return best_decoding_residual(theory, enc);
  };
  DescentOptions opt;
  opt.initial_step = 0.5 / n;
  opt.min_step = 1e-10;
  opt.max_evals = 4000;
  PolygonSearchResult out;
  out.n = n;
  out.restaurants = restaurants;
  out.starts = starts;
  out.min_residual = 1e300;
  for (long s = 0; s < starts; ++s) {
    Rng rng(derive_seed(seed, static_cast<std::uint64_t>(s)));
    std::vector<double> x = random_box_point(rng, static_cast<size_t>(restaurants));
    // Rotations act transitively on edges, so the first encoding can stay
    // on the first edge.
    x[0] /= n;
    DescentResult d = coordinate_descent(f, std::move(x), opt);
    if (d.value < out.min_residual) {
      out.min_residual = d.value;
      out.perimeter = d.x;
    }
    if (out.min_residual < 1e-12) break;
  }
  out.infeasible_numerically = out.min_residual > 1e-3;
  return out;
}

PolygonSearchResult strict_polygon_infeasibility(int n, long search_budget, std::uint64_t seed) {
  return strict_polygon_search(n, 4, search_budget, seed);
}

}  // namespace commgame
