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

// Guessing game: Bob must output Alice's input x in {1,2,3}; the figure of
// merit is min_x P(b = x | x). The correlation P(b|x) is stored as a
// VisitMatrix with x in the "closed" slot and b in the "visited" slot.

#ifndef COMMGAME_WORSTCASE_H_
#define COMMGAME_WORSTCASE_H_

#include <cstdint>
#include <variant>
#include <vector>

#include "commgame/classical.h"
#include "commgame/qubit.h"
#include "commgame/search.h"

namespace commgame {

using GuessStrategy = std::variant<MixedStrategy, CorrelatedStrategy, QubitStrategy>;

VisitMatrix guess_correlation(const GuessStrategy& s);
double worst_case_success(const GuessStrategy& s);

// Input 1 sends 0, otherwise 1; Bob answers 1 on 0 and 2 or 3 evenly on 1.
MixedStrategy explicit_guess_strategy();
// Equal mixture of the three "one input against two" splits (log2 3 bits).
CorrelatedStrategy sr_guess_strategy();
// Trine states with aligned effects (1/3)(I + n_x . sigma).
QubitStrategy quantum_guess_strategy();

struct WorstCaseBound {
  int n = 3;
  double value = 0.0;        // certified supremum over mixed strategies
  double numeric_max = 0.0;  // best worst-case success found by search
  std::vector<double> alpha, r, q;  // argmax of the search
  long starts = 0;
};

// For n >= 3 no mixed strategy beats 1/2: a diagonal entry above 1/2 needs
// r_x > 1/2 or q_x > 1/2, and each distribution has at most one such entry,
// so at most two inputs qualify. For n = 2 sending x is perfect. The search
// part maximizes the minimum diagonal with multi-start compass search, one
// start seeded at the explicit strategy.
WorstCaseBound classical_worstcase_bound(int n = 3, long starts = 200,
                                         std::uint64_t seed = kDefaultSeed);

}  // namespace commgame

#endif  // COMMGAME_WORSTCASE_H_
