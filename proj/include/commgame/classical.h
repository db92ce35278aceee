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

// Classical strategies over a one-bit channel, with and without shared
// randomness.

#ifndef COMMGAME_CLASSICAL_H_
#define COMMGAME_CLASSICAL_H_

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "commgame/games.h"

namespace commgame {

// Upper bound on the number of positive-gamma Restaurants for which the
// 2^a - 2 ordered splits are enumerated.
inline constexpr int kMaxPartitionSupport = 20;
// Deterministic-map enumeration for the hull oracle stops here.
inline constexpr int kMaxHullN = 12;
// Up to this n the hull LP runs in exact rational arithmetic.
inline constexpr int kMaxExactHullN = 5;

struct DeterministicStrategy {
  std::vector<int> encode;    // closed Restaurant -> bit
  std::array<int, 2> decode;  // bit -> visited Restaurant
};

VisitMatrix visit_matrix_deterministic(const DeterministicStrategy& s);

class MixedStrategy {
 public:
  // alpha_k = probability that Alice sends 0 when k is closed; Bob samples
  // r on receiving 0 and q on receiving 1.
  MixedStrategy(std::vector<double> alpha, ProbVector r, ProbVector q);

  int n() const { return static_cast<int>(alpha_.size()); }
  const std::vector<double>& alpha() const { return alpha_; }
  const ProbVector& r() const { return r_; }
  const ProbVector& q() const { return q_; }

 private:
  std::vector<double> alpha_;
  ProbVector r_;
  ProbVector q_;
};

VisitMatrix visit_matrix_mixed(const MixedStrategy& s);

struct Branch {
  double weight;
  MixedStrategy strategy;
};

class CorrelatedStrategy {
 public:
  // Drops non-positive weights and renormalizes the rest. Throws if nothing
  // survives or the branches disagree on n.
  explicit CorrelatedStrategy(std::vector<Branch> branches);

  int n() const { return branches_.front().strategy.n(); }
  const std::vector<Branch>& branches() const { return branches_; }
  // Shannon entropy of the branch weights, in bits.
  double sr_bits() const { return sr_bits_; }

 private:
  std::vector<Branch> branches_;
  double sr_bits_;
};

VisitMatrix visit_matrix_correlated(const CorrelatedStrategy& s);
double sr_amount(const CorrelatedStrategy& s);

// Witness for a mixed-strategy win. Index sets are 0-based.
struct PartitionCertificate {
  std::vector<int> X;  // closing one of these makes Alice send 1
  std::vector<int> Y;  // closing one of these makes Alice send 0
  std::vector<int> Z;  // zero-gamma Restaurants
  ProbVector r;        // supported on X
  ProbVector q;        // supported on Y
  double alpha_bar_z;
  double residual;     // distance of sum_X gamma from its admissible interval
};

enum class Feasibility { kFeasible, kInfeasible, kBoundaryIndeterminate };
const char* feasibility_name(Feasibility f);

struct FeasibilityReport {
  Feasibility status = Feasibility::kInfeasible;
  // Best split found (smallest residual); present whenever any split exists.
  std::optional<PartitionCertificate> best;
  int partitions_checked = 0;
};

// Residuals at or below this are exact; up to kDefaultTolerance they are
// boundary-indeterminate.
inline constexpr double kExactFeasibility = 1e-12;

FeasibilityReport mixed_feasibility_report(const GameSpec& spec);

// The certificate when the game is mixed-winnable, nothing otherwise
// (boundary-indeterminate games yield nothing here; use the report).
std::optional<PartitionCertificate> mixed_feasibility(const GameSpec& spec);

MixedStrategy mixed_strategy_from_certificate(const PartitionCertificate& cert,
                                              const GameSpec& spec);

struct HullTerm {
  DeterministicStrategy strategy;
  double weight;
};

struct HullResult {
  bool feasible_with_unbounded_sr = false;
  std::vector<HullTerm> weights;
  bool exact = false;  // solved in rational arithmetic
  int columns = 0;
};

HullResult hull_membership_oracle(const GameSpec& spec);

CorrelatedStrategy synth_sr_strategy(const GameSpec& spec);
CorrelatedStrategy strict_sr_protocol(int n);

}  // namespace commgame

#endif  // COMMGAME_CLASSICAL_H_
