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

// Resource ordering audit. Each row "R1 <= R2" is backed by a separating
// task: one check that R1 cannot win it and one that R2 can. The "never
// worse" half of a relation holds by embedding (R2 can imitate R1) and is
// not re-checked.

#ifndef COMMGAME_ORDER_OF_MERIT_H_
#define COMMGAME_ORDER_OF_MERIT_H_

#include <cstdint>
#include <string>
#include <vector>

#include "commgame/search.h"

namespace commgame {

struct MeritEvidence {
  bool h3_uniform_cbit_infeasible = false;  // no mixed strategy wins H^3(1/3)
  bool h3_uniform_sr_wins = false;          // correlated strategy wins it
  bool h3_qubit_wins = false;               // qubit wins H^3(1/3) and H^4(2/5,...)
  bool odd_uniform_cbit_infeasible = false; // H^n(1/n), n = 3, 5, 7, 9
  bool even_gon_wins = false;               // P(2n) wins H^n(1/n), n = 3..8
  bool strict4_1sr_infeasible = false;      // 1 cbit + 1 SR bit fails H^4[1/3]
  bool strict4_log3sr_wins = false;         // log2(3) SR bits suffice
  bool strict4_qubit_wins = false;          // tetrahedron strategy
  bool strict4_polygon_infeasible = false;  // polygon search stays away
};

struct MeritRow {
  std::string relation;
  std::string task;
  std::string weaker_fails;   // description of the failing check
  std::string stronger_wins;  // description of the winning check
  bool weaker_fails_ok = false;
  bool stronger_wins_ok = false;
  std::string criteria;  // acceptance criteria backing the row

  bool holds() const { return weaker_fails_ok && stronger_wins_ok; }
};

std::vector<MeritRow> order_of_merit_table(const MeritEvidence& e);

struct AuditBudget {
  long sr_starts = 2000;       // multi-starts for the 1-bit-SR search
  long polygon_starts = 4;     // per polygon size
  int polygon_max_n = 8;       // polygons 4..polygon_max_n
  std::uint64_t seed = kDefaultSeed;
};

MeritEvidence collect_merit_evidence(const AuditBudget& budget);

// Fixed-width text table, one line per row plus a header.
std::string format_merit_table(const std::vector<MeritRow>& rows);

}  // namespace commgame

#endif  // COMMGAME_ORDER_OF_MERIT_H_
