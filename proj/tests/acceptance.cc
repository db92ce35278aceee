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

// Acceptance suite: one PASS/FAIL line per criterion.
//
//   acceptance            run all thirteen, exit 1 if any fails
//   acceptance --only N   run criterion N alone

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "commgame/classical.h"
#include "commgame/games.h"
#include "commgame/nsbox.h"
#include "commgame/order_of_merit.h"
#include "commgame/polygon.h"
#include "commgame/qubit.h"
#include "commgame/sr_audit.h"
#include "commgame/worstcase.h"

namespace {

using namespace commgame;

// Pinned tolerances and budgets.
constexpr double kWinTol = 1e-9;          // criteria 3, 9 (square)
constexpr double kTightTol = 1e-12;       // criteria 4, 5, 9 (even gon), 10, 11
constexpr double kMachineTol = 1e-14;     // criteria 7, 12
constexpr double kExactTol = 1e-15;       // "exact" values (criteria 6, 11)
constexpr double kInfeasibleGap = 1e-3;   // criteria 6, 9
constexpr int kGridResolution = 177;      // > 10^4 physical lattice points
constexpr long kStrictStarts = 100000;    // criterion 6
constexpr long kMonteCarloSamples = 1000000;
constexpr double kFloorLo = 0.10, kFloorHi = 0.12;
constexpr long kPolygonStarts = 16;       // per polygon, criterion 9
constexpr int kRandomInstances = 1000;    // criteria 9 (500 used), 12

struct Outcome {
  bool pass = true;
  std::string detail;
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

std::string fmt(const char* f, double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, f, v);
  return buf;
}

double max_diff(const VisitMatrix& a, const VisitMatrix& b) {
  double m = 0;
  for (int i = 0; i < a.n(); ++i)
    for (int j = 0; j < a.n(); ++j) m = std::max(m, std::abs(a.at(i, j) - b.at(i, j)));
  return m;
}

BlochVector random_ball(std::mt19937_64& rng, bool pure) {
  std::normal_distribution<double> g;
  std::uniform_real_distribution<double> u;
  BlochVector b{g(rng), g(rng), g(rng)};
  const double r = pure ? 1.0 : std::cbrt(u(rng));
  return b.scaled(r / b.norm());
}

ProbVector random_simplex(std::mt19937_64& rng, int n) {
  std::exponential_distribution<double> e;
  std::vector<double> v(static_cast<size_t>(n));
  double s = 0;
  for (double& x : v) s += x = e(rng);
  for (double& x : v) x /= s;
  double rest = 1.0;
  for (int i = 1; i < n; ++i) rest -= v[static_cast<size_t>(i)];
  v[0] = rest;
  return ProbVector(v);
}

// Shared by criterion 13.
MeritEvidence g_evidence;

Outcome c1() {
  const auto t0 = Clock::now();
  Outcome o;
  const bool h3_infeasible =
      mixed_feasibility_report(GameSpec::uniform(3)).status == Feasibility::kInfeasible;
  int points = 0, mismatches = 0;
  const int R = kGridResolution;
  for (int i = 0; i <= R; ++i) {
    for (int j = 0; i + j <= R; ++j) {
      const int k = R - i - j;
      if (3 * std::max({i, j, k}) > 2 * R) continue;
      ++points;
      const bool predicted = i == 0 || j == 0 || k == 0 || 3 * std::max({i, j, k}) == 2 * R;
      const GameSpec g(ProbVector({double(i) / R, double(j) / R, double(k) / R}));
      const bool got = mixed_feasibility_report(g).status == Feasibility::kFeasible;
      mismatches += got != predicted;
    }
  }
  const double secs = seconds_since(t0);
  o.pass = h3_infeasible && points >= 10000 && mismatches == 0 && secs < 10.0;
  g_evidence.h3_uniform_cbit_infeasible = h3_infeasible;
  g_evidence.h3_uniform_sr_wins =
      check_game(GameSpec::uniform(3), visit_matrix_correlated(synth_sr_strategy(GameSpec::uniform(3))))
          .wins;
  o.detail = std::string("H^3(1/3) ") + (h3_infeasible ? "infeasible" : "FEASIBLE") + ", " +
             std::to_string(points) + " physical grid games, " + std::to_string(mismatches) +
             " mismatches, " + fmt("%.2f s", secs);
  return o;
}

Outcome c2() {
  const auto t0 = Clock::now();
  Outcome o;
  std::string bad;
  for (int n : {2, 4, 6, 8, 10})
    if (!mixed_feasibility(GameSpec::uniform(n))) bad += " even" + std::to_string(n);
  for (int n : {3, 5, 7, 9})
    if (mixed_feasibility(GameSpec::uniform(n))) bad += " odd" + std::to_string(n);
  const double secs = seconds_since(t0);
  o.pass = bad.empty() && secs < 1.0;
  g_evidence.odd_uniform_cbit_infeasible = bad.find("odd") == std::string::npos;
  o.detail = (bad.empty() ? std::string("even feasible, odd infeasible") : "wrong:" + bad) + ", " +
             fmt("%.3f s", secs);
  return o;
}

Outcome c3() {
  const auto t0 = Clock::now();
  Outcome o;
  const GameSpec g(ProbVector({0.4, 0.2, 0.2, 0.2}));
  const FeasibilityReport rep = mixed_feasibility_report(g);
  const H4Solution h = synth_h4_symmetric(0.4);
  const Verdict v = check_game(g, visit_matrix_qubit(h.strategy), kWinTol);
  const double da = std::abs(h.alpha[0] - 16.0 / 23), dc = std::abs(h.cos_theta + 8.0 / 15);
  const double secs = seconds_since(t0);
  o.pass = rep.status == Feasibility::kInfeasible && rep.partitions_checked == 14 && da < kWinTol &&
           dc < kWinTol && v.wins && secs < 1.0;
  const H3Solution h3 = synth_h3_general(GameSpec::uniform(3));
  g_evidence.h3_qubit_wins =
      v.wins && check_game(GameSpec::uniform(3), visit_matrix_qubit(h3.strategy)).wins;
  o.detail = std::to_string(rep.partitions_checked) + " partitions, status " +
             feasibility_name(rep.status) + fmt(", |alpha1-16/23| %.1e", da) +
             fmt(", |cos+8/15| %.1e", dc) + fmt(", violation %.1e", v.max_violation);
  return o;
}

Outcome c4() {
  Outcome o;
  const VisitMatrix m = visit_matrix_qubit(synth_uniform_odd(3));
  double diag = 0, col = 0;
  for (int k = 0; k < 3; ++k) {
    diag = std::max(diag, std::abs(m.at(k, k)));
    col = std::max(col, std::abs(m.marginal(k) - 1.0 / 3));
  }
  bool odd = true;
  for (int n : {3, 5, 7}) {
    odd &= check_game(GameSpec::uniform(n), visit_matrix_qubit(synth_uniform_odd(n)), kTightTol).wins;
  }
  o.pass = diag == 0.0 && col < kTightTol && odd;
  o.detail = fmt("max diagonal %.1e", diag) + fmt(", column-average error %.1e", col) +
             (odd ? ", n=3,5,7 win" : ", odd generalization FAILS");
  return o;
}

Outcome c5() {
  Outcome o;
  const QubitStrategy s = synth_sic_strict();
  const VisitMatrix m = visit_matrix_qubit(s);
  double dev = 0;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) dev = std::max(dev, std::abs(m.at(i, j) - (i == j ? 0.0 : 1.0 / 3)));
  const double comp = s.decoding.completeness_residual();
  o.pass = dev < kTightTol && comp < kTightTol;
  g_evidence.strict4_qubit_wins = o.pass;
  o.detail = fmt("entrywise error %.1e", dev) + fmt(", completeness residual %.1e", comp);
  return o;
}

Outcome c6() {
  const auto t0 = Clock::now();
  Outcome o;
  const StrictInfeasibilityReport rep = strict_1bitsr_infeasibility(kStrictStarts);
  const double secs = seconds_since(t0);
  const auto sr = strict_sr_protocol(4);
  const Verdict v = check_game(GameSpec::strict_uniform(4), visit_matrix_correlated(sr), kExactTol);
  const double bits = std::abs(sr.sr_bits() - std::log2(3.0));
  const bool symbolic = rep.symbolic.all_refuted && rep.symbolic.candidate_sets.size() == 2;
  const bool numeric = rep.infeasible && rep.min_residual > kInfeasibleGap &&
                       rep.numeric.starts >= kStrictStarts;
  o.pass = numeric && symbolic && v.wins && bits < kExactTol && secs < 300.0;
  g_evidence.strict4_1sr_infeasible = numeric && symbolic;
  g_evidence.strict4_log3sr_wins = v.wins && bits < kExactTol;
  o.detail = fmt("min residual %.4f", rep.min_residual) + " over " +
             std::to_string(rep.numeric.starts) + " starts, " +
             std::to_string(rep.symbolic.candidate_sets.size()) + " candidate sets " +
             (rep.symbolic.all_refuted ? "refuted" : "NOT refuted") +
             fmt(", log3-SR violation %.1e", v.max_violation) + fmt(", %.1f s", secs);
  return o;
}

Outcome c7() {
  Outcome o;
  const QubitStrategy trine = synth_uniform_odd(3);
  double law = 0;
  int region_mismatch = 0;
  const auto region = noise_advantage_region(100);
  for (const auto& p : region) {
    QubitStrategy s = trine;
    s.noise = Noise{p.eps_e, p.eps_d};
    const VisitMatrix m = visit_matrix_qubit(s);
    for (int k = 0; k < 3; ++k) {
      law = std::max(law, std::abs(m.at(k, k) - (p.eps_e + p.eps_d - p.eps_e * p.eps_d) / 3));
    }
    // Advantage means the noisy diagonal stays below 1/6.
    region_mismatch += p.advantage != (m.at(0, 0) < 1.0 / 6 - 1e-12);
  }
  // On the curve itself the diagonal is exactly 1/6.
  double curve = 0;
  for (int i = 0; i <= 50; ++i) {
    const double e = 0.5 * i / 50, d = (0.5 - e) / (1 - e);
    QubitStrategy s = trine;
    s.noise = Noise{e, d};
    curve = std::max(curve, std::abs(visit_matrix_qubit(s).at(1, 1) - 1.0 / 6));
  }
  o.pass = region.size() == 10000 && law < kMachineTol && region_mismatch == 0 && curve < kMachineTol;
  o.detail = fmt("law error %.1e on 100x100", law) + ", " + std::to_string(region_mismatch) +
             " region mismatches" + fmt(", boundary error %.1e", curve);
  return o;
}

Outcome c8() {
  const auto t0 = Clock::now();
  Outcome o;
  const MonteCarloResult r = montecarlo_classical_floor(kMonteCarloSamples);
  const double secs = seconds_since(t0);
  const MonteCarloResult a = montecarlo_classical_floor(20000, 99, 10, 1);
  const MonteCarloResult b = montecarlo_classical_floor(20000, 99, 10, 3);
  const bool deterministic = a.min_error == b.min_error && a.raw_min_error == b.raw_min_error;
  const bool in_band = r.min_error >= kFloorLo && r.min_error <= kFloorHi;
  o.pass = in_band && secs < 120.0 && deterministic;
  o.detail = fmt("refined min %.6f", r.min_error) + fmt(", raw min %.6f", r.raw_min_error) +
             fmt(", band [%.2f,", kFloorLo) + fmt(" %.2f]", kFloorHi) + (in_band ? "" : " MISSED") +
             fmt(", %.1f s", secs) + (deterministic ? ", deterministic" : ", NONDETERMINISTIC");
  return o;
}

Outcome c9() {
  const auto t0 = Clock::now();
  Outcome o;
  bool even = true;
  for (int n = 3; n <= 8; ++n) {
    even &= check_game(GameSpec::uniform(n), visit_matrix_polygon(synth_even_gon(n)), kTightTol).wins;
  }
  std::mt19937_64 rng(41);
  std::exponential_distribution<double> ex;
  int square_ok = 0, games = 0;
  while (games < 500) {
    double x = ex(rng), y = ex(rng), z = ex(rng);
    const double s = x + y + z;
    x /= s, y /= s;
    z = 1.0 - x - y;
    if (std::max({x, y, z}) > 2.0 / 3) continue;
    ++games;
    const GameSpec g(ProbVector({x, y, z}));
    square_ok += check_game(g, visit_matrix_polygon(synth_square_h3(g).strategy), kWinTol).wins;
  }
  double worst = 1e300;
  for (int n = 4; n <= 12; ++n) {
    worst = std::min(worst, strict_polygon_infeasibility(n, kPolygonStarts).min_residual);
  }
  const double hex = strict_polygon_search(6, 3, kPolygonStarts).min_residual;
  o.pass = even && square_ok == 500 && worst > kInfeasibleGap && hex < kWinTol;
  g_evidence.even_gon_wins = even;
  g_evidence.strict4_polygon_infeasible = worst > kInfeasibleGap;
  o.detail = std::string(even ? "even gons win" : "even gon FAILS") + ", square " +
             std::to_string(square_ok) + "/500" + fmt(", min H^4[1/3] residual n=4..12 %.4f", worst) +
             fmt(", hexagon sanity %.1e", hex) + fmt(", %.1f s", seconds_since(t0));
  return o;
}

Outcome c10() {
  const auto t0 = Clock::now();
  Outcome o;
  Rng rng(kDefaultSeed);
  double law = 0;
  for (int i = 0; i < 10000; ++i) {
    const NsBox b = NsBox::random(rng);
    law = std::max(law, std::abs(cup_game_success(b).average - (8.0 + chsh(b)) / 12.0));
  }
  const auto tb = Clock::now();
  const double bound = classical_cup_bound();
  const double bound_secs = seconds_since(tb);
  const double pr = cup_game_success(NsBox::pr()).average;
  o.pass = law < kTightTol && bound == 5.0 / 6.0 && bound_secs < 1.0 && pr == 1.0;
  o.detail = fmt("law error %.1e", law) + fmt(", classical bound %.17g", bound) +
             fmt(", PR success %.17g", pr) + fmt(", %.2f s", seconds_since(t0));
  return o;
}

Outcome c11() {
  Outcome o;
  const WorstCaseBound b = classical_worstcase_bound(3, 200);
  const double sr = worst_case_success(sr_guess_strategy());
  const double q = worst_case_success(quantum_guess_strategy());
  o.pass = b.value == 0.5 && b.numeric_max <= 0.5 + kWinTol && std::abs(sr - 2.0 / 3) < kExactTol &&
           std::abs(q - 2.0 / 3) < kTightTol;
  o.detail = fmt("classical bound %.3f", b.value) + fmt(" (numeric max %.12f)", b.numeric_max) +
             fmt(", SR %.16f", sr) + fmt(", trine %.16f", q);
  return o;
}

Outcome c12() {
  Outcome o;
  std::mt19937_64 rng(23);
  std::uniform_int_distribution<int> coin(0, 1), nd(2, 6);
  double p1 = 0, p2 = 0;
  for (int trial = 0; trial < kRandomInstances; ++trial) {
    const int n = nd(rng);
    const BlochVector m = random_ball(rng, true);
    QubitStrategy s;
    for (int k = 0; k < n; ++k) s.encodings.push_back(coin(rng) ? m : m.scaled(-1));
    std::vector<QubitEffect> effs;
    BlochVector acc;
    double t = 0;
    for (int k = 0; k < n; ++k) {
      const BlochVector u = random_ball(rng, true);
      const double a = 0.25 / n;
      effs.push_back({a, u.scaled(a)});
      t += a;
      acc = {acc.x + a * u.x, acc.y + a * u.y, acc.z + a * u.z};
    }
    for (auto& e : effs) {
      e.t += (1.0 - t) / n;
      e.v = {e.v.x - acc.x / n, e.v.y - acc.y / n, e.v.z - acc.z / n};
    }
    s.decoding.effects = effs;
    p1 = std::max(p1, max_diff(visit_matrix_mixed(simulate_orthogonal_encoding(s)), visit_matrix_qubit(s)));
  }
  for (int trial = 0; trial < kRandomInstances; ++trial) {
    const int n = nd(rng);
    std::vector<BlochVector> enc;
    for (int k = 0; k < n; ++k) enc.push_back(random_ball(rng, trial % 2 == 0));
    const BlochVector axis = random_ball(rng, true);
    const ProbVector a = random_simplex(rng, n), b = random_simplex(rng, n);
    std::vector<std::array<double, 2>> post;
    for (int k = 0; k < n; ++k) post.push_back({a[k], b[k]});
    p2 = std::max(p2, max_diff(visit_matrix_mixed(simulate_projective_decoding(enc, axis, post)),
                               visit_matrix_qubit(projective_strategy(enc, axis, post))));
  }
  o.pass = p1 < kMachineTol && p2 < kMachineTol;
  o.detail = fmt("orthogonal-encoding residual %.1e", p1) + fmt(", projective-decoding residual %.1e", p2);
  return o;
}

Outcome c13(bool evidence_from_run) {
  Outcome o;
  MeritEvidence e = g_evidence;
  if (!evidence_from_run) {
    // Standalone: collect with reduced budgets.
    AuditBudget b;
    b.sr_starts = 2000;
    b.polygon_starts = 4;
    b.polygon_max_n = 8;
    e = collect_merit_evidence(b);
  }
  const auto rows = order_of_merit_table(e);
  std::string failing;
  for (const auto& r : rows)
    if (!r.holds()) failing += " [" + r.relation + "]";
  o.pass = rows.size() == 6 && failing.empty();
  std::printf("%s", format_merit_table(rows).c_str());
  o.detail = std::to_string(rows.size()) + " rows" +
             (failing.empty() ? std::string(", all backed") : ", unbacked:" + failing) +
             (evidence_from_run ? "" : " (reduced-budget evidence)");
  return o;
}

}  // namespace

int main(int argc, char** argv) {
  int only = 0;
  for (int i = 1; i < argc; ++i) {
    const std::string a = argv[i];
    if (a == "--only" && i + 1 < argc) {
      only = std::atoi(argv[++i]);
    } else {
      std::fprintf(stderr, "usage: acceptance [--only N]\n");
      return 1;
    }
  }
  if (only < 0 || only > 13) {
    std::fprintf(stderr, "criterion must be 1..13\n");
    return 1;
  }
  const std::vector<std::function<Outcome()>> criteria{
      c1, c2, c3, c4, c5, c6, c7, c8, c9, c10, c11, c12, [only] { return c13(only == 0); }};
  int failures = 0;
  for (int k = 1; k <= 13; ++k) {
    if (only != 0 && only != k) continue;
    Outcome o;
    try {
      o = criteria[static_cast<size_t>(k - 1)]();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    failures += !o.pass;
    std::printf("%s criterion %2d: %s\n", o.pass ? "PASS" : "FAIL", k, o.detail.c_str());
    std::fflush(stdout);
  }
  return failures == 0 ? 0 : 1;
}
