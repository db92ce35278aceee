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

// Restaurant games: Charlie closes one of n Restaurants uniformly at random,
// tells Alice which one, and Alice sends a single system to Bob who must pick
// a Restaurant to visit. A game fixes the target visiting probabilities and
// whether the stricter entrywise condition applies.
//
// Restaurants are 0-based in memory. File formats and human-readable
// witnesses use 1-based labels.

#ifndef COMMGAME_GAMES_H_
#define COMMGAME_GAMES_H_

#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace commgame {

// Exactness tolerance used when deciding whether a strategy wins a game.
// Analytic strategies land around 1e-14; composed constructions accumulate
// a little more.
inline constexpr double kDefaultTolerance = 1e-9;

// Normalization tolerance for probability vectors and visit-matrix columns.
inline constexpr double kSumTolerance = 1e-12;

enum class ErrorKind {
  kInvalidArgument,
  kDimensionMismatch,
  kUnsupportedGame,
  kResourceLimit,
  kNumericFailure,
  kContractViolation,
  kParse,
  kCapability,
};

const char* error_kind_name(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what);
  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

class ProbVector {
 public:
  // Entries within kSumTolerance of [0,1] are clamped; anything further out,
  // or a sum off by more than kSumTolerance, throws kInvalidArgument.
  explicit ProbVector(std::vector<double> entries);

  static ProbVector uniform(int n);
  static ProbVector point_mass(int n, int index);

  int size() const { return static_cast<int>(entries_.size()); }
  double operator[](int i) const { return entries_[static_cast<size_t>(i)]; }
  std::span<const double> entries() const { return entries_; }

  friend bool operator==(const ProbVector&, const ProbVector&) = default;

 private:
  std::vector<double> entries_;
};

class GameSpec {
 public:
  // Non-strict game H^n(gamma). Validates gamma_k <= 1 - 1/n and, when
  // strict, that gamma is uniform.
  GameSpec(ProbVector gamma, bool strict = false);

  // H^n(1/n).
  static GameSpec uniform(int n);
  // H^n[1/(n-1)]: entrywise (1 - delta_ij)/(n-1).
  static GameSpec strict_uniform(int n);

  int n() const { return gamma_.size(); }
  const ProbVector& gamma() const { return gamma_; }
  bool strict() const { return strict_; }

  // Short label such as "H^3(0.5,0.25,0.25)" or "H^4[1/3]".
  std::string label() const;

  friend bool operator==(const GameSpec&, const GameSpec&) = default;

 private:
  ProbVector gamma_;
  bool strict_;
};

// p(visited | closed). Stored visited-major: at(i, j) = p(i_b | j_c), so a
// conditioning distribution (fixed closed j) is a column. The serialized
// form is closed-major, row j holding p(. | j_c), mirroring how the game's
// visit table is usually written.
class VisitMatrix {
 public:
  // `visited_major[i][j]` = p(i | j). Every column must be a distribution.
  explicit VisitMatrix(const std::vector<std::vector<double>>& visited_major);

  static VisitMatrix from_closed_major(
      const std::vector<std::vector<double>>& closed_major);

  int n() const { return n_; }
  double at(int visited, int closed) const {
    return p_[static_cast<size_t>(visited * n_ + closed)];
  }
  // Distribution over visited Restaurants when `closed` is closed.
  ProbVector given_closed(int closed) const;
  // (1/n) sum_j p(i | j).
  double marginal(int visited) const;

  std::vector<std::vector<double>> visited_major() const;
  std::vector<std::vector<double>> closed_major() const;

 private:
  VisitMatrix() = default;
  void validate();

  int n_ = 0;
  std::vector<double> p_;
};

struct Verdict {
  bool wins = false;
  double max_violation = 0.0;
  // Empty when the game is won.
  std::string witness;
};

// Sup-norm residual against the winning conditions of `spec`. Non-strict:
// p(i|i) = 0 and (1/n) sum_j p(i|j) = gamma_i. Strict: p(i|j) =
// (1 - delta_ij)/(n-1) entrywise.
Verdict check_game(const GameSpec& spec, const VisitMatrix& vm,
                   double tol = kDefaultTolerance);

// All n(n-1) orderings of ((n-1)/n, 1/n, 0, ..., 0). Listed once per ordered
// pair of positions, so n = 2 yields the symmetric game twice.
std::vector<GameSpec> game_space_extreme_points(int n);

VisitMatrix convex_mix(std::span<const VisitMatrix> matrices,
                       const ProbVector& weights);

}  // namespace commgame

#endif  // COMMGAME_GAMES_H_
