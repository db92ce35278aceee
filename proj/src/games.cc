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

#include "commgame/games.h"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>

namespace commgame {

namespace {

std::string fmt_num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.6g", v);
  return buf;
}

}  // namespace

const char* error_kind_name(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::kInvalidArgument:
      return "invalid-argument";
    case ErrorKind::kDimensionMismatch:
      return "dimension-mismatch";
    case ErrorKind::kUnsupportedGame:
      return "unsupported-game";
    case ErrorKind::kResourceLimit:
      return "resource-limit";
    case ErrorKind::kNumericFailure:
      return "numeric-failure";
    case ErrorKind::kContractViolation:
      return "contract-violation";
    case ErrorKind::kParse:
      return "parse-error";
    case ErrorKind::kCapability:
      return "capability-error";
  }
  return "error";
}

Error::Error(ErrorKind kind, const std::string& what)
    : std::runtime_error(std::string(error_kind_name(kind)) + ": " + what),
      kind_(kind) {}

ProbVector::ProbVector(std::vector<double> entries)
    : entries_(std::move(entries)) {
  if (entries_.empty()) {
    throw Error(ErrorKind::kInvalidArgument, "empty probability vector");
  }
  double sum = 0.0;
  for (double& e : entries_) {
    if (!std::isfinite(e) || e < -kSumTolerance || e > 1.0 + kSumTolerance) {
      throw Error(ErrorKind::kInvalidArgument,
                  "probability entry out of [0,1]: " + fmt_num(e));
    }
    e = std::clamp(e, 0.0, 1.0);
    sum += e;
  }
  if (std::abs(sum - 1.0) > kSumTolerance) {
    throw Error(ErrorKind::kInvalidArgument,
                "probability vector sums to " + fmt_num(sum));
  }
}

ProbVector ProbVector::uniform(int n) {
  if (n < 1) throw Error(ErrorKind::kInvalidArgument, "uniform over n < 1");
  return ProbVector(std::vector<double>(static_cast<size_t>(n), 1.0 / n));
}

ProbVector ProbVector::point_mass(int n, int index) {
  if (index < 0 || index >= n) {
    throw Error(ErrorKind::kInvalidArgument, "point mass index out of range");
  }
  std::vector<double> e(static_cast<size_t>(n), 0.0);
  e[static_cast<size_t>(index)] = 1.0;
  return ProbVector(std::move(e));
}

GameSpec::GameSpec(ProbVector gamma, bool strict)
    : gamma_(std::move(gamma)), strict_(strict) {
  const int n = gamma_.size();
  if (n < 2) {
    throw Error(ErrorKind::kInvalidArgument, "a game needs n >= 2");
  }
  const double cap = 1.0 - 1.0 / n;
  for (int k = 0; k < n; ++k) {
    if (gamma_[k] > cap + kSumTolerance) {
      throw Error(ErrorKind::kInvalidArgument,
                  "unphysical game: gamma_" + std::to_string(k + 1) + " = " +
                      fmt_num(gamma_[k]) + " exceeds 1 - 1/n = " +
                      fmt_num(cap));
    }
  }
  if (strict_) {
    for (int k = 0; k < n; ++k) {
      if (std::abs(gamma_[k] - 1.0 / n) > kSumTolerance) {
        throw Error(ErrorKind::kInvalidArgument,
                    "strict games require uniform gamma");
      }
    }
  }
}

GameSpec GameSpec::uniform(int n) { return GameSpec(ProbVector::uniform(n)); }

GameSpec GameSpec::strict_uniform(int n) {
  return GameSpec(ProbVector::uniform(n), true);
}

std::string GameSpec::label() const {
  std::ostringstream out;
  out << "H^" << n();
  if (strict_) {
    out << "[1/" << n() - 1 << "]";
    return out.str();
  }
  bool uniform = true;
  for (int k = 0; k < n(); ++k) {
    uniform = uniform && std::abs(gamma_[k] - 1.0 / n()) < kSumTolerance;
  }
  if (uniform) {
    out << "(1/" << n() << ")";
    return out.str();
  }
  out << "(";
  for (int k = 0; k < n(); ++k) {
    out << (k ? "," : "") << fmt_num(gamma_[k]);
  }
  out << ")";
  return out.str();
}

VisitMatrix::VisitMatrix(
    const std::vector<std::vector<double>>& visited_major) {
  n_ = static_cast<int>(visited_major.size());
  p_.reserve(static_cast<size_t>(n_ * n_));
  for (const auto& row : visited_major) {
    if (static_cast<int>(row.size()) != n_) {
      throw Error(ErrorKind::kDimensionMismatch, "visit matrix is not square");
    }
    p_.insert(p_.end(), row.begin(), row.end());
  }
  validate();
}

VisitMatrix VisitMatrix::from_closed_major(
    const std::vector<std::vector<double>>& closed_major) {
  VisitMatrix vm;
  vm.n_ = static_cast<int>(closed_major.size());
  vm.p_.assign(static_cast<size_t>(vm.n_ * vm.n_), 0.0);
  for (int j = 0; j < vm.n_; ++j) {
    const auto& row = closed_major[static_cast<size_t>(j)];
    if (static_cast<int>(row.size()) != vm.n_) {
      throw Error(ErrorKind::kDimensionMismatch, "visit matrix is not square");
    }
    for (int i = 0; i < vm.n_; ++i) {
      vm.p_[static_cast<size_t>(i * vm.n_ + j)] = row[static_cast<size_t>(i)];
    }
  }
  vm.validate();
  return vm;
}

void VisitMatrix::validate() {
  if (n_ < 1) throw Error(ErrorKind::kInvalidArgument, "empty visit matrix");
  for (int j = 0; j < n_; ++j) {
    double sum = 0.0;
    for (int i = 0; i < n_; ++i) {
      double& e = p_[static_cast<size_t>(i * n_ + j)];
      if (!std::isfinite(e) || e < -kSumTolerance || e > 1.0 + kSumTolerance) {
        throw Error(ErrorKind::kInvalidArgument,
                    "visit probability out of [0,1]: " + fmt_num(e));
      }
      e = std::clamp(e, 0.0, 1.0);
      sum += e;
    }
    if (std::abs(sum - 1.0) > kSumTolerance) {
      throw Error(ErrorKind::kInvalidArgument,
                  "p(. | " + std::to_string(j + 1) + ") sums to " +
                      fmt_num(sum));
    }
  }
}

ProbVector VisitMatrix::given_closed(int closed) const {
  std::vector<double> col(static_cast<size_t>(n_));
  for (int i = 0; i < n_; ++i) col[static_cast<size_t>(i)] = at(i, closed);
  return ProbVector(std::move(col));
}

double VisitMatrix::marginal(int visited) const {
  double sum = 0.0;
  for (int j = 0; j < n_; ++j) sum += at(visited, j);
  return sum / n_;
}

std::vector<std::vector<double>> VisitMatrix::visited_major() const {
  std::vector<std::vector<double>> out(static_cast<size_t>(n_));
  for (int i = 0; i < n_; ++i) {
    for (int j = 0; j < n_; ++j) out[static_cast<size_t>(i)].push_back(at(i, j));
  }
  return out;
}

std::vector<std::vector<double>> VisitMatrix::closed_major() const {
  std::vector<std::vector<double>> out(static_cast<size_t>(n_));
  for (int j = 0; j < n_; ++j) {
    for (int i = 0; i < n_; ++i) out[static_cast<size_t>(j)].push_back(at(i, j));
  }
  return out;
}

Verdict check_game(const GameSpec& spec, const VisitMatrix& vm, double tol) {
  if (!(tol > 0.0)) {
    throw Error(ErrorKind::kInvalidArgument, "tolerance must be positive");
  }
  const int n = spec.n();
  if (vm.n() != n) {
    throw Error(ErrorKind::kDimensionMismatch,
                "game has n = " + std::to_string(n) +
                    " but visit matrix has n = " + std::to_string(vm.n()));
  }
  Verdict v;
  auto consider = [&](double deviation, const std::string& witness) {
    if (deviation > v.max_violation) {
      v.max_violation = deviation;
      v.witness = witness;
    }
  };
  if (spec.strict()) {
    const double off = 1.0 / (n - 1);
    for (int j = 0; j < n; ++j) {
      for (int i = 0; i < n; ++i) {
        const double target = i == j ? 0.0 : off;
        const double p = vm.at(i, j);
        consider(std::abs(p - target),
                 "p(" + std::to_string(i + 1) + "|" + std::to_string(j + 1) +
                     ")=" + fmt_num(p) + "≠" + fmt_num(target));
      }
    }
  } else {
    for (int i = 0; i < n; ++i) {
      const double p = vm.at(i, i);
      consider(p, "p(" + std::to_string(i + 1) + "|" + std::to_string(i + 1) +
                      ")=" + fmt_num(p) + "≠0");
    }
    for (int i = 0; i < n; ++i) {
      const double m = vm.marginal(i);
      consider(std::abs(m - spec.gamma()[i]),
               "p(" + std::to_string(i + 1) + ")=" + fmt_num(m) + "≠" +
                   fmt_num(spec.gamma()[i]));
    }
  }
  v.wins = v.max_violation <= tol;
  if (v.wins) v.witness.clear();
  return v;
}

std::vector<GameSpec> game_space_extreme_points(int n) {
  if (n < 2) throw Error(ErrorKind::kInvalidArgument, "n must be >= 2");
  std::vector<GameSpec> out;
  out.reserve(static_cast<size_t>(n * (n - 1)));
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      if (a == b) continue;
      std::vector<double> g(static_cast<size_t>(n), 0.0);
      g[static_cast<size_t>(a)] += (n - 1.0) / n;
      g[static_cast<size_t>(b)] += 1.0 / n;
      out.emplace_back(ProbVector(std::move(g)));
    }
  }
  return out;
}

VisitMatrix convex_mix(std::span<const VisitMatrix> matrices,
                       const ProbVector& weights) {
  if (matrices.empty()) {
    throw Error(ErrorKind::kInvalidArgument, "convex_mix of an empty list");
  }
  if (weights.size() != static_cast<int>(matrices.size())) {
    throw Error(ErrorKind::kDimensionMismatch,
                std::to_string(matrices.size()) + " matrices but " +
                    std::to_string(weights.size()) + " weights");
  }
  const int n = matrices.front().n();
  std::vector<std::vector<double>> acc(static_cast<size_t>(n),
                                       std::vector<double>(n, 0.0));
  for (size_t m = 0; m < matrices.size(); ++m) {
    if (matrices[m].n() != n) {
      throw Error(ErrorKind::kDimensionMismatch,
                  "convex_mix over matrices of different size");
    }
    const double w = weights[static_cast<int>(m)];
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        acc[static_cast<size_t>(i)][static_cast<size_t>(j)] +=
            w * matrices[m].at(i, j);
      }
    }
  }
  return VisitMatrix(acc);
}

}  // namespace commgame
