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

#include "commgame/sr_audit.h"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <set>
#include <sstream>

#include "commgame/games.h"
#include "commgame/lp.h"
#include "commgame/rational.h"

namespace commgame {

namespace {

constexpr int kRestaurants = 4;

struct FreeAlpha {
  int branch;
  int closed;
};

struct Box {
  std::vector<Rational> lo, hi;
};

// LP relaxation of the strict winning equations for a fixed string
// assignment, restricted to a box of the free alphas. Variables are scaled
// by the branch weight (R = w r, Q = w q) so every equation is linear
// except X = alpha R and Y = (1 - alpha) Q, which get McCormick envelopes.
bool relaxation_feasible(const std::vector<std::string>& strs, int branches,
                         const std::vector<FreeAlpha>& free_alphas,
                         const Box& box) {
  const int n = kRestaurants;
  LinearProgram<Rational> lp;
  std::vector<int> w(static_cast<size_t>(branches));
  std::vector<std::vector<int>> R(static_cast<size_t>(branches)), Q(static_cast<size_t>(branches));
  for (int s = 0; s < branches; ++s) {
    w[s] = lp.add_variable();
    // Entries forced to zero by the strings get no variable (index -1).
    for (int i = 0; i < n; ++i) {
      R[s].push_back(strs[i][2 * s] == '1' ? -1 : lp.add_variable());
      Q[s].push_back(strs[i][2 * s + 1] == '1' ? -1 : lp.add_variable());
    }
  }
  {
    std::vector<std::pair<int, Rational>> row;
    for (int s = 0; s < branches; ++s) row.emplace_back(w[s], 1);
    lp.add_constraint(row, Sense::kEqual, Rational(1));
  }
  for (int s = 0; s < branches; ++s) {
    std::vector<std::pair<int, Rational>> rr{{w[s], -1}}, qq{{w[s], -1}};
    for (int i = 0; i < n; ++i) {
      if (R[s][i] >= 0) rr.emplace_back(R[s][i], 1);
      if (Q[s][i] >= 0) qq.emplace_back(Q[s][i], 1);
    }
    lp.add_constraint(rr, Sense::kEqual, Rational(0));
    lp.add_constraint(qq, Sense::kEqual, Rational(0));
  }

  // contrib[j][i]: terms making up p(i | j).
  std::vector<std::vector<std::vector<std::pair<int, Rational>>>> contrib(
      n, std::vector<std::vector<std::pair<int, Rational>>>(n));
  for (int s = 0; s < branches; ++s) {
    for (int j = 0; j < n; ++j) {
      const char a0 = strs[j][2 * s], a1 = strs[j][2 * s + 1];
      if (a0 == '0') {  // alpha = 0: Bob always uses q
        for (int i = 0; i < n; ++i)
          if (Q[s][i] >= 0) contrib[j][i].emplace_back(Q[s][i], 1);
      } else if (a1 == '0') {  // alpha = 1: Bob always uses r
        for (int i = 0; i < n; ++i)
          if (R[s][i] >= 0) contrib[j][i].emplace_back(R[s][i], 1);
      }
    }
  }
  for (size_t f = 0; f < free_alphas.size(); ++f) {
    const int s = free_alphas[f].branch, j = free_alphas[f].closed;
    const Rational& lo = box.lo[f];
    const Rational& hi = box.hi[f];
    const int a = lp.add_variable();
    lp.add_constraint({{a, 1}}, Sense::kGreaterEqual, lo);
    lp.add_constraint({{a, 1}}, Sense::kLessEqual, hi);
    std::vector<std::pair<int, Rational>> total{{w[s], -1}};
    for (int i = 0; i < n; ++i) {
      const int r = R[s][i], q = Q[s][i];
      if (r >= 0) {
        const int X = lp.add_variable();
        // X = a R with a in [lo, hi], R in [0, 1].
        lp.add_constraint({{X, 1}, {r, -lo}}, Sense::kGreaterEqual, Rational(0));
        lp.add_constraint({{X, 1}, {r, -hi}, {a, -1}}, Sense::kGreaterEqual, -hi);
        lp.add_constraint({{X, 1}, {r, -hi}}, Sense::kLessEqual, Rational(0));
        lp.add_constraint({{X, 1}, {r, -lo}, {a, -1}}, Sense::kLessEqual, -lo);
        contrib[j][i].emplace_back(X, 1);
        total.emplace_back(X, 1);
      }
      if (q >= 0) {
        const int Y = lp.add_variable();
        // Y = (1 - a) Q with 1 - a in [1 - hi, 1 - lo].
        lp.add_constraint({{Y, 1}, {q, -(1 - hi)}}, Sense::kGreaterEqual, Rational(0));
        lp.add_constraint({{Y, 1}, {q, -(1 - lo)}, {a, 1}}, Sense::kGreaterEqual, lo);
        lp.add_constraint({{Y, 1}, {q, -(1 - lo)}}, Sense::kLessEqual, Rational(0));
        lp.add_constraint({{Y, 1}, {q, -(1 - hi)}, {a, 1}}, Sense::kLessEqual, hi);
        contrib[j][i].emplace_back(Y, 1);
        total.emplace_back(Y, 1);
      }
    }
    // alpha r + (1 - alpha) q is a distribution, so the scaled column sums
    // to the branch weight.
    lp.add_constraint(total, Sense::kEqual, Rational(0));
  }
  const Rational third(1, n - 1);
  for (int j = 0; j < n; ++j) {
    for (int i = 0; i < n; ++i) {
      lp.add_constraint(contrib[j][i], Sense::kEqual, i == j ? Rational(0) : third);
    }
  }
  return lp.minimize().status == LpStatus::kOptimal;
}

AssignmentCertificate refute(const std::vector<std::string>& strs,
                             const std::vector<int>& idx, int branches,
                             int max_boxes) {
  AssignmentCertificate cert;
  cert.strings = idx;
  std::vector<FreeAlpha> free_alphas;
  for (int s = 0; s < branches; ++s) {
    for (int j = 0; j < kRestaurants; ++j) {
      if (strs[j][2 * s] == '1' && strs[j][2 * s + 1] == '1') free_alphas.push_back({s, j});
    }
  }
  std::vector<Box> stack{{std::vector<Rational>(free_alphas.size(), Rational(0)),
                          std::vector<Rational>(free_alphas.size(), Rational(1))}};
  const Rational min_width(1, 1 << 20);
  while (!stack.empty()) {
    if (cert.boxes >= max_boxes) return cert;
    Box box = std::move(stack.back());
    stack.pop_back();
    ++cert.boxes;
    if (!relaxation_feasible(strs, branches, free_alphas, box)) continue;
    if (free_alphas.empty()) return cert;
    size_t widest = 0;
    for (size_t f = 1; f < free_alphas.size(); ++f) {
      if (box.hi[f] - box.lo[f] > box.hi[widest] - box.lo[widest]) widest = f;
    }
    if (box.hi[widest] - box.lo[widest] < min_width) return cert;
    const Rational mid = (box.lo[widest] + box.hi[widest]) / 2;
    Box left = box, right = box;
    left.hi[widest] = mid;
    right.lo[widest] = mid;
    stack.push_back(std::move(right));
    stack.push_back(std::move(left));
  }
  cert.refuted = true;
  return cert;
}

// Sum of squared deviations of a branch mixture from the strict target.
class MixtureObjective {
 public:
  MixtureObjective(int n, int branches)
      : n_(n), b_(branches), target_(1.0 / (n - 1)),
        w_(branches), r_(branches * n), q_(branches * n), p_(n * n) {}

  size_t dimension() const { return static_cast<size_t>(b_ + 3 * b_ * n_); }

  void evaluate(std::span<const double> x) const {
    params_to_distribution(x, 0, b_, w_.data());
    const size_t off_a = b_, off_r = b_ + b_ * n_, off_q = b_ + 2 * b_ * n_;
    for (int s = 0; s < b_; ++s) {
      params_to_distribution(x, off_r + s * n_, n_, &r_[s * n_]);
      params_to_distribution(x, off_q + s * n_, n_, &q_[s * n_]);
    }
    std::fill(p_.begin(), p_.end(), 0.0);
    for (int s = 0; s < b_; ++s) {
      for (int j = 0; j < n_; ++j) {
        const double a = x[off_a + s * n_ + j];
        const double wa = w_[s] * a, wb = w_[s] * (1.0 - a);
        for (int i = 0; i < n_; ++i) {
          p_[i * n_ + j] += wa * r_[s * n_ + i] + wb * q_[s * n_ + i];
        }
      }
    }
  }

  double squared(std::span<const double> x) const {
    evaluate(x);
    double s = 0.0;
    for (int i = 0; i < n_; ++i) {
      for (int j = 0; j < n_; ++j) {
        const double d = p_[i * n_ + j] - (i == j ? 0.0 : target_);
        s += d * d;
      }
    }
    return s;
  }

  double sup(std::span<const double> x) const {
    evaluate(x);
    double m = 0.0;
    for (int i = 0; i < n_; ++i) {
      for (int j = 0; j < n_; ++j) {
        m = std::max(m, std::abs(p_[i * n_ + j] - (i == j ? 0.0 : target_)));
      }
    }
    return m;
  }

  const std::vector<double>& weights() const { return w_; }
  std::vector<std::vector<double>> matrix() const {
    std::vector<std::vector<double>> out(n_, std::vector<double>(n_));
    for (int i = 0; i < n_; ++i)
      for (int j = 0; j < n_; ++j) out[i][j] = p_[i * n_ + j];
    return out;
  }

 private:
  int n_, b_;
  double target_;
  mutable std::vector<double> w_, r_, q_, p_;
};

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.6g", v);
  return buf;
}

}  // namespace

std::vector<std::string> admissible_strings(int branches) {
  if (branches < 1 || branches > 4) {
    throw Error(ErrorKind::kInvalidArgument, "branches must be in 1..4");
  }
  const int bits = 2 * branches;
  std::vector<std::string> out;
  for (int m = 0; m < (1 << bits); ++m) {
    std::string s(bits, '0');
    for (int t = 0; t < bits; ++t) s[t] = (m >> (bits - 1 - t)) & 1 ? '1' : '0';
    bool ok = s != std::string(bits, '1');
    for (int p = 0; p < branches; ++p) ok = ok && !(s[2 * p] == '0' && s[2 * p + 1] == '0');
    if (ok) out.push_back(s);
  }
  std::stable_sort(out.begin(), out.end(), [](const std::string& a, const std::string& b) {
    const auto ca = std::count(a.begin(), a.end(), '1');
    const auto cb = std::count(b.begin(), b.end(), '1');
    return ca != cb ? ca > cb : a < b;
  });
  return out;
}

bool strings_compatible(const std::string& visited, const std::string& closed) {
  // Each product term survives only if the closed Restaurant's alpha-side
  // factor is not forced to zero ('1') and the visited Restaurant's coin
  // entry is not forced to zero ('0').
  for (size_t t = 0; t < visited.size(); ++t) {
    if (closed[t] == '1' && visited[t] == '0') return true;
  }
  return false;
}

SymbolicAudit strict_symbolic_audit(int branches, int max_boxes) {
  SymbolicAudit audit;
  audit.branches = branches;
  audit.strings = admissible_strings(branches);
  const int k = static_cast<int>(audit.strings.size());
  audit.compatible.resize(k);
  for (int a = 0; a < k; ++a) {
    for (int b = 0; b < k; ++b) {
      if (a != b && strings_compatible(audit.strings[a], audit.strings[b])) {
        audit.compatible[a].push_back(b);
      }
    }
  }
  auto ok = [&](int v, int c) { return strings_compatible(audit.strings[v], audit.strings[c]); };
  std::set<std::vector<int>> sets;
  std::vector<int> idx(kRestaurants, 0);
  long total = 1;
  for (int i = 0; i < kRestaurants; ++i) total *= k;
  for (long code = 0; code < total; ++code) {
    long c = code;
    for (int i = 0; i < kRestaurants; ++i) {
      idx[i] = static_cast<int>(c % k);
      c /= k;
    }
    bool good = true;
    for (int i = 0; i < kRestaurants && good; ++i)
      for (int j = 0; j < kRestaurants && good; ++j)
        if (i != j && !ok(idx[i], idx[j])) good = false;
    if (!good) continue;
    std::vector<int> key = idx;
    std::sort(key.begin(), key.end());
    sets.insert(key);
    std::vector<std::string> strs;
    for (int v : idx) strs.push_back(audit.strings[v]);
    audit.assignments.push_back(refute(strs, idx, branches, max_boxes));
  }
  audit.candidate_sets.assign(sets.begin(), sets.end());
  audit.all_refuted = std::all_of(audit.assignments.begin(), audit.assignments.end(),
                                  [](const AssignmentCertificate& a) { return a.refuted; });
  return audit;
}

NumericSearchResult strict_numeric_search(int n, int branches, long starts,
                                          std::uint64_t seed) {
  if (n < 3 || branches < 1 || starts < 1) {
    throw Error(ErrorKind::kInvalidArgument, "need n >= 3, branches >= 1, starts >= 1");
  }
  MixtureObjective obj(n, branches);
  auto f = [&](std::span<const double> x) { return obj.squared(x); };
  DescentOptions opt;
  opt.min_step = 1e-8;
  opt.max_evals = 20000;
  // Grid over the first branch weight; descent is free to move it.
  const std::vector<double> lambda_grid{0.05, 0.15, 0.25, 0.35, 0.45, 0.5,
                                        0.55, 0.65, 0.75, 0.85, 0.95};
  NumericSearchResult out;
  out.n = n;
  out.branches = branches;
  out.starts = starts;
  out.min_residual = 1e300;
  std::vector<double> best_x;
  for (long s = 0; s < starts; ++s) {
    Rng rng(derive_seed(seed, static_cast<std::uint64_t>(s)));
    std::vector<double> x = random_box_point(rng, obj.dimension());
    if (branches == 2) {
      const double lam = lambda_grid[static_cast<size_t>(s) % lambda_grid.size()];
      x[0] = lam;
      x[1] = 1.0 - lam;
    }
    DescentResult res = coordinate_descent(f, std::move(x), opt);
    const double sup = obj.sup(res.x);
    if (sup < out.min_residual) {
      out.min_residual = sup;
      best_x = res.x;
    }
  }
  obj.evaluate(best_x);
  out.weights = obj.weights();
  out.visit = obj.matrix();
  return out;
}

StrictInfeasibilityReport strict_1bitsr_infeasibility(long starts, std::uint64_t seed) {
  StrictInfeasibilityReport rep;
  rep.symbolic = strict_symbolic_audit(2);
  rep.symbolic_no_sr = strict_symbolic_audit(1);
  rep.numeric = strict_numeric_search(kRestaurants, 2, starts, seed);
  rep.min_residual = rep.numeric.min_residual;
  rep.infeasible = rep.min_residual > kInfeasibilityThreshold;

  std::ostringstream out;
  out << "game H^4[1/3], resource 1 cbit + 1 bit shared randomness\n";
  out << "admissible strings:";
  for (size_t k = 0; k < rep.symbolic.strings.size(); ++k) {
    out << " S" << k + 1 << "=" << rep.symbolic.strings[k];
  }
  out << "\ncompatibility (visited S_k, closed S_j not forced to zero):\n";
  for (size_t k = 0; k < rep.symbolic.compatible.size(); ++k) {
    out << "  S" << k + 1 << ":";
    for (int j : rep.symbolic.compatible[k]) out << " S" << j + 1;
    out << "\n";
  }
  out << "mutually compatible string sets:";
  for (const auto& set : rep.symbolic.candidate_sets) {
    out << " {";
    for (size_t t = 0; t < set.size(); ++t) out << (t ? "," : "") << "S" << set[t] + 1;
    out << "}";
  }
  int refuted = 0, boxes = 0;
  for (const auto& a : rep.symbolic.assignments) {
    refuted += a.refuted;
    boxes += a.boxes;
  }
  out << "\nassignments refuted exactly: " << refuted << "/" << rep.symbolic.assignments.size()
      << " (" << boxes << " rational LPs)\n";
  out << "no shared randomness (lambda in {0,1}): "
      << rep.symbolic_no_sr.assignments.size() << " compatible assignments\n";
  out << "numeric search: " << rep.numeric.starts << " starts, min sup residual "
      << fmt(rep.numeric.min_residual) << " (threshold " << fmt(kInfeasibilityThreshold) << ")\n";
  out << "verdict: " << (rep.infeasible && rep.symbolic.all_refuted ? "not winnable" : "inconclusive")
      << "\n";
  rep.certificate = out.str();
  return rep;
}

}  // namespace commgame
