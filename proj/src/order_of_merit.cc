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

#include "commgame/order_of_merit.h"

#include <cmath>
#include <cstdio>

#include "commgame/classical.h"
#include "commgame/games.h"
#include "commgame/polygon.h"
#include "commgame/qubit.h"
#include "commgame/sr_audit.h"

namespace commgame {

std::vector<MeritRow> order_of_merit_table(const MeritEvidence& e) {
  return {
      {"C <= C+SR", "H^3(1/3)", "1 cbit: no mixed strategy", "1 cbit + SR: hull strategy",
       e.h3_uniform_cbit_infeasible, e.h3_uniform_sr_wins, "1"},
      {"C <= Q", "H^3(gamma)", "1 cbit: H^3(1/3) infeasible", "1 qubit: trine and H^4 families",
       e.h3_uniform_cbit_infeasible, e.h3_qubit_wins, "1,3,4"},
      {"C <= 2n-gon", "H^n(1/n)", "1 cbit: odd n infeasible", "P(2n): edge-midpoint strategy",
       e.odd_uniform_cbit_infeasible, e.even_gon_wins, "2,9"},
      {"C+1SR <inst Q", "H^4[1/3]", "1 cbit + 1 SR bit: audit", "1 qubit: tetrahedron",
       e.strict4_1sr_infeasible, e.strict4_qubit_wins, "5,6"},
      {"C+1SR <= C+log3SR", "H^4[1/3]", "1 cbit + 1 SR bit: audit", "1 cbit + log2(3) SR bits",
       e.strict4_1sr_infeasible, e.strict4_log3sr_wins, "6"},
      {"Polygon <inst Q", "H^4[1/3]", "polygon bit: search residual", "1 qubit: tetrahedron",
       e.strict4_polygon_infeasible, e.strict4_qubit_wins, "5,9"},
  };
}

MeritEvidence collect_merit_evidence(const AuditBudget& b) {
  MeritEvidence e;
  const GameSpec h3 = GameSpec::uniform(3);
  e.h3_uniform_cbit_infeasible = !mixed_feasibility(h3).has_value();
  e.h3_uniform_sr_wins = check_game(h3, visit_matrix_correlated(synth_sr_strategy(h3))).wins;

  const GameSpec h4(ProbVector({0.4, 0.2, 0.2, 0.2}));
  e.h3_qubit_wins = check_game(h3, visit_matrix_qubit(synth_h3_general(h3).strategy)).wins &&
                    check_game(h4, visit_matrix_qubit(synth_h4_symmetric(0.4).strategy)).wins;

  e.odd_uniform_cbit_infeasible = true;
  for (int n : {3, 5, 7, 9}) {
    e.odd_uniform_cbit_infeasible &= !mixed_feasibility(GameSpec::uniform(n)).has_value();
  }
  e.even_gon_wins = true;
  for (int n = 3; n <= 8; ++n) {
    e.even_gon_wins &= check_game(GameSpec::uniform(n), visit_matrix_polygon(synth_even_gon(n)), 1e-12).wins;
  }

  const GameSpec strict4 = GameSpec::strict_uniform(4);
  const auto audit = strict_1bitsr_infeasibility(b.sr_starts, b.seed);
  e.strict4_1sr_infeasible = audit.infeasible && audit.symbolic.all_refuted;
  const auto sr = strict_sr_protocol(4);
  e.strict4_log3sr_wins = check_game(strict4, visit_matrix_correlated(sr)).wins &&
                          std::abs(sr.sr_bits() - std::log2(3.0)) < 1e-12;
  e.strict4_qubit_wins = check_game(strict4, visit_matrix_qubit(synth_sic_strict()), 1e-12).wins;

  e.strict4_polygon_infeasible = true;
  for (int n = 4; n <= b.polygon_max_n; ++n) {
    e.strict4_polygon_infeasible &=
        strict_polygon_infeasibility(n, b.polygon_starts, b.seed).infeasible_numerically;
  }
  return e;
}

std::string format_merit_table(const std::vector<MeritRow>& rows) {
  std::string out;
  char line[256];
  std::snprintf(line, sizeof line, "%-18s %-11s %-5s %-5s %-8s %s\n", "relation", "task", "fail",
                "win", "criteria", "verdict");
  out += line;
  for (const auto& r : rows) {
    std::snprintf(line, sizeof line, "%-18s %-11s %-5s %-5s %-8s %s\n", r.relation.c_str(),
                  r.task.c_str(), r.weaker_fails_ok ? "ok" : "NO", r.stronger_wins_ok ? "ok" : "NO",
                  r.criteria.c_str(), r.holds() ? "holds" : "NOT ESTABLISHED");
    out += line;
  }
  return out;
}

}  // namespace commgame
