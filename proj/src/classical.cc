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

#include "commgame/classical.h"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "commgame/lp.h"
#include "commgame/rational.h"

namespace commgame {

namespace {

ProbVector restricted_normalized(const ProbVector& gamma,
                                 const std::vector<int>& support) {
  std::vector<double> v(static_cast<size_t>(gamma.size()), 0.0);
  double total = 0.0;
  for (int m : support) total += gamma[m];
  for (int m : support) v[static_cast<size_t>(m)] = gamma[m] / total;
  return ProbVector(std::move(v));
}

// Visit map of a fixed-point-free deterministic strategy with image {a, b}.
struct VisitMap {
  int a;
  int b;
  std::vector<int> f;  // closed -> visited
};

std::vector<VisitMap> winning_candidate_maps(int n) {
  std::vector<VisitMap> maps;
  for (int a = 0; a < n; ++a) {
    for (int b = a + 1; b < n; ++b) {
      std::vector<int> rest;
      for (int k = 0; k < n; ++k) {
        if (k != a && k != b) rest.push_back(k);
      }
      const long combos = 1L << rest.size();
      for (long mask = 0; mask < combos; ++mask) {
        VisitMap vm{a, b, std::vector<int>(static_cast<size_t>(n))};
        vm.f[static_cast<size_t>(a)] = b;
        vm.f[static_cast<size_t>(b)] = a;
        for (size_t t = 0; t < rest.size(); ++t) {
          vm.f[static_cast<size_t>(rest[t])] = (mask >> t) & 1 ? b : a;
        }
        maps.push_back(std::move(vm));
      }
    }
  }
  return maps;
}

DeterministicStrategy to_strategy(const VisitMap& m) {
  DeterministicStrategy s;
  s.encode.resize(m.f.size());
  for (size_t k = 0; k < m.f.size(); ++k) s.encode[k] = m.f[k] == m.a ? 0 : 1;
  s.decode = {m.a, m.b};
  return s;
}

template <typename T>
LpResult<T> solve_hull_lp(const GameSpec& spec, const std::vector<VisitMap>& maps,
                          const std::vector<T>& gamma) {
  const int n = spec.n();
  LinearProgram<T> lp;
  for (size_t c = 0; c < maps.size(); ++c) lp.add_variable();
  std::vector<std::pair<int, T>> all;
  for (size_t c = 0; c < maps.size(); ++c) all.emplace_back(static_cast<int>(c), T(1));
  lp.add_constraint(all, Sense::kEqual, T(1));
  if (spec.strict()) {
    const T target = T(1) / T(n - 1);
    for (int j = 0; j < n; ++j) {
      for (int i = 0; i < n; ++i) {
        if (i == j) continue;
        std::vector<std::pair<int, T>> row;
        for (size_t c = 0; c < maps.size(); ++c) {
          if (maps[c].f[static_cast<size_t>(j)] == i) row.emplace_back(static_cast<int>(c), T(1));
        }
        lp.add_constraint(std::move(row), Sense::kEqual, target);
      }
    }
  } else {
    for (int i = 0; i < n; ++i) {
      std::vector<std::pair<int, T>> row;
      for (size_t c = 0; c < maps.size(); ++c) {
        const long cnt = std::count(maps[c].f.begin(), maps[c].f.end(), i);
        if (cnt > 0) row.emplace_back(static_cast<int>(c), T(cnt));
      }
      lp.add_constraint(std::move(row), Sense::kEqual, T(n) * gamma[static_cast<size_t>(i)]);
    }
  }
  return lp.minimize();
}

MixedStrategy extreme_point_strategy(int n, int a, int b) {
  // Closing a sends 0 and Bob visits b; anything else sends 1 and Bob
  // visits a.
  std::vector<double> alpha(static_cast<size_t>(n), 0.0);
  alpha[static_cast<size_t>(a)] = 1.0;
  return MixedStrategy(std::move(alpha), ProbVector::point_mass(n, b),
                       ProbVector::point_mass(n, a));
}

}  // namespace

VisitMatrix visit_matrix_deterministic(const DeterministicStrategy& s) {
  const int n = static_cast<int>(s.encode.size());
  std::vector<std::vector<double>> p(static_cast<size_t>(n),
                                     std::vector<double>(static_cast<size_t>(n), 0.0));
  for (int k = 0; k < n; ++k) {
    const int bit = s.encode[static_cast<size_t>(k)];
    if (bit != 0 && bit != 1) {
      throw Error(ErrorKind::kInvalidArgument, "encoding must output a bit");
    }
    const int visited = s.decode[static_cast<size_t>(bit)];
    if (visited < 0 || visited >= n) {
      throw Error(ErrorKind::kInvalidArgument, "decoding out of range");
    }
    p[static_cast<size_t>(visited)][static_cast<size_t>(k)] = 1.0;
  }
  return VisitMatrix(p);
}

MixedStrategy::MixedStrategy(std::vector<double> alpha, ProbVector r,
                             ProbVector q)
    : alpha_(std::move(alpha)), r_(std::move(r)), q_(std::move(q)) {
  if (alpha_.empty() || r_.size() != n() || q_.size() != n()) {
    throw Error(ErrorKind::kDimensionMismatch,
                "alpha has " + std::to_string(alpha_.size()) + " entries, r " +
                    std::to_string(r_.size()) + ", q " +
                    std::to_string(q_.size()));
  }
  for (double& a : alpha_) {
    if (!std::isfinite(a) || a < -kSumTolerance || a > 1.0 + kSumTolerance) {
      throw Error(ErrorKind::kInvalidArgument, "alpha outside [0,1]");
    }
    a = std::clamp(a, 0.0, 1.0);
  }
}

VisitMatrix visit_matrix_mixed(const MixedStrategy& s) {
  const int n = s.n();
  std::vector<std::vector<double>> p(static_cast<size_t>(n),
                                     std::vector<double>(static_cast<size_t>(n)));
  for (int m = 0; m < n; ++m) {
    for (int k = 0; k < n; ++k) {
      const double a = s.alpha()[static_cast<size_t>(k)];
      p[static_cast<size_t>(m)][static_cast<size_t>(k)] =
          a * s.r()[m] + (1.0 - a) * s.q()[m];
    }
  }
  return VisitMatrix(p);
}

CorrelatedStrategy::CorrelatedStrategy(std::vector<Branch> branches) {
  double total = 0.0;
  for (auto& b : branches) {
    if (!std::isfinite(b.weight) || b.weight < 0.0) {
      throw Error(ErrorKind::kInvalidArgument, "negative branch weight");
    }
    if (b.weight > 0.0) {
      total += b.weight;
      branches_.push_back(std::move(b));
    }
  }
  if (branches_.empty()) {
    throw Error(ErrorKind::kInvalidArgument, "no branch with positive weight");
  }
  sr_bits_ = 0.0;
  for (auto& b : branches_) {
    if (b.strategy.n() != branches_.front().strategy.n()) {
      throw Error(ErrorKind::kDimensionMismatch, "branches disagree on n");
    }
    b.weight /= total;
    sr_bits_ -= b.weight * std::log2(b.weight);
  }
  if (branches_.size() == 1) sr_bits_ = 0.0;
}

VisitMatrix visit_matrix_correlated(const CorrelatedStrategy& s) {
  std::vector<VisitMatrix> mats;
  std::vector<double> w;
  for (const auto& b : s.branches()) {
    mats.push_back(visit_matrix_mixed(b.strategy));
    w.push_back(b.weight);
  }
  return convex_mix(mats, ProbVector(std::move(w)));
}

double sr_amount(const CorrelatedStrategy& s) { return s.sr_bits(); }

const char* feasibility_name(Feasibility f) {
  switch (f) {
    case Feasibility::kFeasible:
      return "feasible";
    case Feasibility::kInfeasible:
      return "infeasible";
    case Feasibility::kBoundaryIndeterminate:
      return "boundary-indeterminate";
  }
  return "?";
}

FeasibilityReport mixed_feasibility_report(const GameSpec& spec) {
  if (spec.strict()) {
    throw Error(ErrorKind::kUnsupportedGame,
                "mixed_feasibility handles non-strict games only; " +
                    spec.label() + " is strict");
  }
  const int n = spec.n();
  const ProbVector& g = spec.gamma();
  std::vector<int> pos, zero;
  for (int k = 0; k < n; ++k) (g[k] > kSumTolerance ? pos : zero).push_back(k);
  const int a = static_cast<int>(pos.size());
  if (a > kMaxPartitionSupport) {
    throw Error(ErrorKind::kResourceLimit,
                "partition enumeration capped at " +
                    std::to_string(kMaxPartitionSupport) +
                    " positive entries, got " + std::to_string(a));
  }
  FeasibilityReport report;
  const long limit = (1L << a) - 1;
  long best_mask = -1;
  double best_res = 0.0;
  for (long mask = 1; mask < limit; ++mask) {
    ++report.partitions_checked;
    double sx = 0.0;
    int nx = 0;
    for (int t = 0; t < a; ++t) {
      if ((mask >> t) & 1) {
        sx += g[pos[static_cast<size_t>(t)]];
        ++nx;
      }
    }
    const int ny = a - nx;
    const double lo = static_cast<double>(ny) / n;
    const double hi = static_cast<double>(ny + static_cast<int>(zero.size())) / n;
    const double res = std::max({0.0, lo - sx, sx - hi});
    if (best_mask < 0 || res < best_res) {
      best_mask = mask;
      best_res = res;
    }
  }
  if (best_mask < 0) return report;

  std::vector<int> X, Y;
  double sx = 0.0;
  for (int t = 0; t < a; ++t) {
    if ((best_mask >> t) & 1) {
      X.push_back(pos[static_cast<size_t>(t)]);
      sx += g[pos[static_cast<size_t>(t)]];
    } else {
      Y.push_back(pos[static_cast<size_t>(t)]);
    }
  }
  double abar = 0.0;
  if (!zero.empty()) {
    abar = std::clamp((n * sx - static_cast<double>(Y.size())) /
                          static_cast<double>(zero.size()),
                      0.0, 1.0);
  }
  report.best = PartitionCertificate{X,
                                     Y,
                                     zero,
                                     restricted_normalized(g, X),
                                     restricted_normalized(g, Y),
                                     abar,
                                     best_res};
  if (best_res <= kExactFeasibility) {
    report.status = Feasibility::kFeasible;
  } else if (best_res <= kDefaultTolerance) {
    report.status = Feasibility::kBoundaryIndeterminate;
  } else {
    report.status = Feasibility::kInfeasible;
  }
  return report;
}

std::optional<PartitionCertificate> mixed_feasibility(const GameSpec& spec) {
  FeasibilityReport r = mixed_feasibility_report(spec);
  if (r.status != Feasibility::kFeasible) return std::nullopt;
  return r.best;
}

MixedStrategy mixed_strategy_from_certificate(const PartitionCertificate& cert,
                                              const GameSpec& spec) {
  const int n = spec.n();
  std::vector<int> owner(static_cast<size_t>(n), -1);
  auto claim = [&](const std::vector<int>& set, int tag) {
    for (int k : set) {
      if (k < 0 || k >= n || owner[static_cast<size_t>(k)] != -1) {
        throw Error(ErrorKind::kContractViolation,
                    "certificate sets are not a partition of the Restaurants");
      }
      owner[static_cast<size_t>(k)] = tag;
    }
  };
  claim(cert.X, 0);
  claim(cert.Y, 1);
  claim(cert.Z, 2);
  if (std::count(owner.begin(), owner.end(), -1) != 0 ||
      cert.r.size() != n || cert.q.size() != n) {
    throw Error(ErrorKind::kContractViolation,
                "certificate does not cover all " + std::to_string(n) +
                    " Restaurants");
  }
  std::vector<double> alpha(static_cast<size_t>(n));
  for (int k = 0; k < n; ++k) {
    const int o = owner[static_cast<size_t>(k)];
    alpha[static_cast<size_t>(k)] = o == 0 ? 0.0 : o == 1 ? 1.0 : cert.alpha_bar_z;
  }
  MixedStrategy s(std::move(alpha), cert.r, cert.q);
  const Verdict v = check_game(spec, visit_matrix_mixed(s));
  if (!v.wins) {
    throw Error(ErrorKind::kContractViolation,
                "certificate does not win " + spec.label() + ": " + v.witness);
  }
  return s;
}

HullResult hull_membership_oracle(const GameSpec& spec) {
  const int n = spec.n();
  if (n > kMaxHullN) {
    throw Error(ErrorKind::kResourceLimit,
                "hull enumeration supports n <= " + std::to_string(kMaxHullN) +
                    ", got n = " + std::to_string(n));
  }
  const std::vector<VisitMap> maps = winning_candidate_maps(n);
  HullResult out;
  out.columns = static_cast<int>(maps.size());
  std::vector<double> w;
  if (n <= kMaxExactHullN) {
    out.exact = true;
    std::vector<double> gd(spec.gamma().entries().begin(), spec.gamma().entries().end());
    const auto res = solve_hull_lp<Rational>(spec, maps, snap_distribution(gd));
    if (res.status != LpStatus::kOptimal) return out;
    for (const auto& x : res.x) w.push_back(to_double(x));
  } else {
    std::vector<double> gd(spec.gamma().entries().begin(), spec.gamma().entries().end());
    const auto res = solve_hull_lp<double>(spec, maps, gd);
    if (res.status != LpStatus::kOptimal) return out;
    w = res.x;
  }
  out.feasible_with_unbounded_sr = true;
  for (size_t c = 0; c < maps.size(); ++c) {
    if (w[c] > 1e-12) out.weights.push_back({to_strategy(maps[c]), w[c]});
  }
  return out;
}

CorrelatedStrategy synth_sr_strategy(const GameSpec& spec) {
  if (spec.strict()) {
    throw Error(ErrorKind::kUnsupportedGame,
                "synth_sr_strategy handles non-strict games; use the strict "
                "protocol for " + spec.label());
  }
  const int n = spec.n();
  if (auto cert = mixed_feasibility(spec)) {
    return CorrelatedStrategy({{1.0, mixed_strategy_from_certificate(*cert, spec)}});
  }
  const ProbVector& g = spec.gamma();

  if (n == 3) {
    // Slide along e0 - e1 (gamma_2 fixed) until a facet of the mixed-winnable
    // set is hit in each direction: gamma_0 = 2/3 or gamma_1 = 0 going one
    // way, gamma_0 = 0 or gamma_1 = 2/3 going the other.
    const double cap = 2.0 / 3.0;
    const double tp = std::min(cap - g[0], g[1]);
    const double tm = std::min(g[0], cap - g[1]);
    auto endpoint = [&](bool plus) {
      std::vector<double> e{g[0], g[1], g[2]};
      if (plus) {
        if (cap - g[0] <= g[1]) {
          e[0] = cap;
          e[1] = 1.0 - cap - g[2];
        } else {
          e[1] = 0.0;
          e[0] = 1.0 - g[2];
        }
      } else {
        if (g[0] <= cap - g[1]) {
          e[0] = 0.0;
          e[1] = 1.0 - g[2];
        } else {
          e[1] = cap;
          e[0] = 1.0 - cap - g[2];
        }
      }
      for (double& x : e) x = std::clamp(x, 0.0, 1.0);
      GameSpec end{ProbVector(e)};
      auto cert = mixed_feasibility(end);
      if (!cert) {
        throw Error(ErrorKind::kNumericFailure,
                    "facet endpoint " + end.label() + " is not mixed-winnable");
      }
      return mixed_strategy_from_certificate(*cert, end);
    };
    MixedStrategy a = endpoint(true);
    MixedStrategy b = endpoint(false);
    // gamma = (tm * A + tp * B) / (tp + tm).
    return CorrelatedStrategy({{tm / (tp + tm), a}, {tp / (tp + tm), b}});
  }

  // General n: express gamma over the n(n-1) extreme games.
  std::vector<std::pair<int, int>> pts;
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      if (a != b) pts.emplace_back(a, b);
    }
  }
  std::vector<double> w(pts.size(), 0.0);
  auto build = [&](auto zero, const auto& gamma) {
    using T = decltype(zero);
    LinearProgram<T> lp;
    for (size_t c = 0; c < pts.size(); ++c) lp.add_variable();
    for (int i = 0; i < n; ++i) {
      std::vector<std::pair<int, T>> row;
      for (size_t c = 0; c < pts.size(); ++c) {
        if (pts[c].first == i) row.emplace_back(static_cast<int>(c), T(n - 1));
        if (pts[c].second == i) row.emplace_back(static_cast<int>(c), T(1));
      }
      lp.add_constraint(std::move(row), Sense::kEqual, T(n) * gamma[static_cast<size_t>(i)]);
    }
    return lp.minimize();
  };
  std::vector<double> gd(g.entries().begin(), g.entries().end());
  bool ok = false;
  if (n <= kMaxExactHullN) {
    auto res = build(Rational(0), snap_distribution(gd));
    if (res.status == LpStatus::kOptimal) {
      ok = true;
      for (size_t c = 0; c < pts.size(); ++c) w[c] = to_double(res.x[c]);
    }
  } else {
    auto res = build(0.0, gd);
    if (res.status == LpStatus::kOptimal) {
      ok = true;
      w = res.x;
    }
  }
  if (!ok) {
    throw Error(ErrorKind::kInvalidArgument,
                spec.label() + " lies outside the physical game polytope");
  }
  std::vector<Branch> branches;
  for (size_t c = 0; c < pts.size(); ++c) {
    if (w[c] > 1e-14) {
      branches.push_back({w[c], extreme_point_strategy(n, pts[c].first, pts[c].second)});
    }
  }
  return CorrelatedStrategy(std::move(branches));
}

CorrelatedStrategy strict_sr_protocol(int n) {
  if (n < 3) {
    throw Error(ErrorKind::kInvalidArgument,
                "strict protocol needs n >= 3, got " + std::to_string(n));
  }
  std::vector<Branch> branches;
  if (n == 4) {
    // Three balanced bipartitions {0,k | rest}; Alice names the side the
    // closed Restaurant is not on and Bob picks uniformly from that side.
    for (int partner = 1; partner < 4; ++partner) {
      std::vector<int> X{0, partner}, Y;
      for (int k = 1; k < 4; ++k) {
        if (k != partner) Y.push_back(k);
      }
      std::vector<double> alpha(4, 0.0), r(4, 0.0), q(4, 0.0);
      for (int k : X) {
        alpha[static_cast<size_t>(k)] = 1.0;
        q[static_cast<size_t>(k)] = 0.5;
      }
      for (int k : Y) r[static_cast<size_t>(k)] = 0.5;
      branches.push_back({1.0 / 3.0, MixedStrategy(alpha, ProbVector(r), ProbVector(q))});
    }
    return CorrelatedStrategy(std::move(branches));
  }
  // Branch k: closing anything above k sends 0 (visit k), otherwise 1
  // (visit k + 1).
  for (int k = 0; k + 1 < n; ++k) {
    std::vector<double> alpha(static_cast<size_t>(n), 0.0);
    for (int m = k + 1; m < n; ++m) alpha[static_cast<size_t>(m)] = 1.0;
    branches.push_back({1.0 / (n - 1), MixedStrategy(std::move(alpha),
                                                      ProbVector::point_mass(n, k),
                                                      ProbVector::point_mass(n, k + 1))});
  }
  return CorrelatedStrategy(std::move(branches));
}

}  // namespace commgame
