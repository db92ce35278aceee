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

// Audit of the strict four-Restaurant game under one cbit plus a shared
// coin: the strategy is a two-branch mixture of mixed strategies.
//
// Symbolic side. p(i|i) = 0 with both branch weights positive forces, for
// every Restaurant i and branch s, alpha_i^s r_i^s = 0 and
// (1 - alpha_i^s) q_i^s = 0. A Restaurant's "string" records which factor
// vanishes in each of these products (bit '0': the alpha factor, bit '1':
// the coin factor), two bits per branch. An ordered pair of strings is
// compatible when p(visited | closed) is not forced to zero by them.
// Every mutually compatible assignment is then refuted exactly: the
// bilinear equations are linearized with McCormick envelopes over boxes of
// the free alphas and solved in rational arithmetic. Boxes are bisected
// until every one is infeasible.
//
// Numeric side. Multi-start compass search over all branch parameters,
// reporting the smallest sup-norm distance to the strict target found.

#ifndef COMMGAME_SR_AUDIT_H_
#define COMMGAME_SR_AUDIT_H_

#include <cstdint>
#include <string>
#include <vector>

#include "commgame/search.h"

namespace commgame {

inline constexpr double kInfeasibilityThreshold = 1e-3;

// Admissible strings for `branches` shared-coin outcomes: no pair "00"
// (alpha cannot be 0 and 1 at once) and not all ones (never visited).
// Sorted by number of ones, descending, then lexicographically.
std::vector<std::string> admissible_strings(int branches);

// Whether p(visited | closed) can be nonzero when the visited Restaurant
// carries `visited` and the closed one carries `closed`.
bool strings_compatible(const std::string& visited, const std::string& closed);

struct AssignmentCertificate {
  std::vector<int> strings;  // index into admissible_strings, per Restaurant
  bool refuted = false;
  int boxes = 0;             // LPs solved
};

struct SymbolicAudit {
  int branches = 0;
  std::vector<std::string> strings;
  // compatible[k] lists j such that (visited S_k, closed S_j) is compatible.
  std::vector<std::vector<int>> compatible;
  // Distinct string sets admitting a mutually compatible assignment.
  std::vector<std::vector<int>> candidate_sets;
  std::vector<AssignmentCertificate> assignments;
  bool all_refuted = false;
};

// Four Restaurants, `branches` in {1, 2}.
SymbolicAudit strict_symbolic_audit(int branches = 2, int max_boxes = 4096);

struct NumericSearchResult {
  int n = 0;
  int branches = 0;
  long starts = 0;
  double min_residual = 0.0;   // sup-norm
  std::vector<double> weights;  // best branch weights
  std::vector<std::vector<double>> visit;  // best matrix, visited-major
};

// Minimizes the sup-norm distance between a `branches`-way mixture of mixed
// strategies and the strict target (1 - delta_ij)/(n - 1).
NumericSearchResult strict_numeric_search(int n, int branches, long starts,
                                          std::uint64_t seed = kDefaultSeed);

struct StrictInfeasibilityReport {
  bool infeasible = false;  // numeric min_residual > kInfeasibilityThreshold
  double min_residual = 0.0;
  SymbolicAudit symbolic;
  SymbolicAudit symbolic_no_sr;  // lambda in {0, 1}
  NumericSearchResult numeric;
  std::string certificate;       // human-readable report
};

StrictInfeasibilityReport strict_1bitsr_infeasibility(
    long starts = 100000, std::uint64_t seed = kDefaultSeed);

}  // namespace commgame

#endif  // COMMGAME_SR_AUDIT_H_
