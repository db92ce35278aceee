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

// Small dense two-phase simplex. Templated on the scalar so the same code
// runs in double precision and in exact rational arithmetic
// (boost::multiprecision::cpp_rational). Intended for the modest LPs that
// appear here: a few dozen rows, up to ~10^5 columns.

#ifndef COMMGAME_LP_H_
#define COMMGAME_LP_H_

#include <cmath>
#include <cstddef>
#include <limits>
#include <type_traits>
#include <utility>
#include <vector>

namespace commgame {

enum class Sense { kLessEqual, kEqual, kGreaterEqual };
enum class LpStatus { kOptimal, kInfeasible, kUnbounded, kIterationLimit };

template <typename T>
struct LpResult {
  LpStatus status = LpStatus::kInfeasible;
  T objective{};
  std::vector<T> x;  // one entry per add_variable() call
};

namespace lp_internal {

template <typename T>
struct Arith {
  // Exact scalars compare against zero; floating ones against a pivot
  // tolerance.
  static constexpr bool kExact = !std::is_floating_point_v<T>;
  static T eps() {
    if constexpr (kExact) {
      return T(0);
    } else {
      return T(1e-10);
    }
  }
  static bool pos(const T& v) { return v > eps(); }
  static bool neg(const T& v) { return v < -eps(); }
  static bool zero(const T& v) { return !pos(v) && !neg(v); }
  static T abs(const T& v) { return v < T(0) ? T(-v) : v; }
};

}  // namespace lp_internal

template <typename T>
class LinearProgram {
 public:
  // Returns the variable index. Non-free variables are >= 0.
  int add_variable(T cost = T(0), bool free = false) {
    vars_.push_back({std::move(cost), free});
    return static_cast<int>(vars_.size()) - 1;
  }

  void add_constraint(std::vector<std::pair<int, T>> terms, Sense sense,
                      T rhs) {
    rows_.push_back({std::move(terms), sense, std::move(rhs)});
  }

  int num_variables() const { return static_cast<int>(vars_.size()); }
  int num_constraints() const { return static_cast<int>(rows_.size()); }

  LpResult<T> minimize(long max_iterations = 1000000) const;

 private:
  struct Var {
    T cost;
    bool free;
  };
  struct Row {
    std::vector<std::pair<int, T>> terms;
    Sense sense;
    T rhs;
  };
  std::vector<Var> vars_;
  std::vector<Row> rows_;
};

namespace lp_internal {

template <typename T>
class Tableau {
 public:
  using A = Arith<T>;

  Tableau(int m, int ncols)
      : m_(m), ncols_(ncols), a_(static_cast<size_t>(m) * (ncols + 1)) {}

  T& at(int r, int c) { return a_[static_cast<size_t>(r) * (ncols_ + 1) + c]; }
  const T& at(int r, int c) const {
    return a_[static_cast<size_t>(r) * (ncols_ + 1) + c];
  }
  T& rhs(int r) { return at(r, ncols_); }

  void pivot(int pr, int pc) {
    const T inv = T(1) / at(pr, pc);
    for (int c = 0; c <= ncols_; ++c) {
      if (!A::zero(at(pr, c))) at(pr, c) *= inv;
    }
    at(pr, pc) = T(1);
    for (int r = 0; r < m_; ++r) {
      if (r == pr) continue;
      const T f = at(r, pc);
      if (A::zero(f)) {
        at(r, pc) = T(0);
        continue;
      }
      for (int c = 0; c <= ncols_; ++c) {
        const T& v = at(pr, c);
        if (!A::zero(v)) at(r, c) -= f * v;
      }
      at(r, pc) = T(0);
    }
    basis_[static_cast<size_t>(pr)] = pc;
  }

  // Minimizes cost . x over the columns allowed by `allowed`. Returns false
  // on unboundedness. `iterations` is decremented per pivot.
  LpStatus optimize(const std::vector<T>& cost, const std::vector<bool>& allowed,
                    long& iterations) {
    std::vector<T> reduced(static_cast<size_t>(ncols_));
    long stall = 0;
    bool bland = A::kExact;
    T last_obj = current_objective(cost);
    while (true) {
      if (iterations-- <= 0) return LpStatus::kIterationLimit;
      for (int c = 0; c < ncols_; ++c) {
        T d = cost[static_cast<size_t>(c)];
        for (int r = 0; r < m_; ++r) {
          const T& v = at(r, c);
          if (!A::zero(v)) d -= cost[static_cast<size_t>(basis_[r])] * v;
        }
        reduced[static_cast<size_t>(c)] = d;
      }
      int enter = -1;
      T best = T(0);
      for (int c = 0; c < ncols_; ++c) {
        if (!allowed[static_cast<size_t>(c)]) continue;
        const T& d = reduced[static_cast<size_t>(c)];
        if (!A::neg(d)) continue;
        if (bland) {
          enter = c;
          break;
        }
        if (enter < 0 || d < best) {
          enter = c;
          best = d;
        }
      }
      if (enter < 0) return LpStatus::kOptimal;
      int leave = -1;
      T best_ratio{};
      for (int r = 0; r < m_; ++r) {
        const T& v = at(r, enter);
        if (!A::pos(v)) continue;
        T ratio = rhs(r) / v;
        if (leave < 0 || ratio < best_ratio ||
            (!(best_ratio < ratio) && basis_[r] < basis_[leave])) {
          leave = r;
          best_ratio = ratio;
        }
      }
      if (leave < 0) return LpStatus::kUnbounded;
      pivot(leave, enter);
      if (!A::kExact) {
        // Dantzig can cycle on degenerate vertices; fall back to Bland's
        // rule once progress stalls.
        T obj = current_objective(cost);
        if (!(obj < last_obj - A::eps())) {
          if (++stall > 50) bland = true;
        } else {
          stall = 0;
        }
        last_obj = obj;
      }
    }
  }

  T current_objective(const std::vector<T>& cost) {
    T obj(0);
    for (int r = 0; r < m_; ++r) {
      obj += cost[static_cast<size_t>(basis_[r])] * rhs(r);
    }
    return obj;
  }

  void remove_row(int r) {
    const size_t w = static_cast<size_t>(ncols_ + 1);
    a_.erase(a_.begin() + static_cast<std::ptrdiff_t>(r * w),
             a_.begin() + static_cast<std::ptrdiff_t>((r + 1) * w));
    basis_.erase(basis_.begin() + r);
    --m_;
  }

  int m_;
  int ncols_;
  std::vector<T> a_;
  std::vector<int> basis_;
};

}  // namespace lp_internal

template <typename T>
LpResult<T> LinearProgram<T>::minimize(long max_iterations) const {
  using A = lp_internal::Arith<T>;
  const int nv = num_variables();
  const int m = num_constraints();

  // Column layout: structural (free vars split into +/-), then one slack per
  // inequality row, then one artificial per row.
  std::vector<int> plus_col(static_cast<size_t>(nv));
  std::vector<int> minus_col(static_cast<size_t>(nv), -1);
  int ncols = 0;
  for (int v = 0; v < nv; ++v) {
    plus_col[static_cast<size_t>(v)] = ncols++;
    if (vars_[static_cast<size_t>(v)].free) minus_col[static_cast<size_t>(v)] = ncols++;
  }
  std::vector<int> slack_col(static_cast<size_t>(m), -1);
  for (int r = 0; r < m; ++r) {
    if (rows_[static_cast<size_t>(r)].sense != Sense::kEqual) {
      slack_col[static_cast<size_t>(r)] = ncols++;
    }
  }
  const int first_art = ncols;
  ncols += m;

  lp_internal::Tableau<T> tab(m, ncols);
  tab.basis_.resize(static_cast<size_t>(m));
  for (int r = 0; r < m; ++r) {
    const Row& row = rows_[static_cast<size_t>(r)];
    for (const auto& [v, coef] : row.terms) {
      tab.at(r, plus_col[static_cast<size_t>(v)]) += coef;
      if (minus_col[static_cast<size_t>(v)] >= 0) {
        tab.at(r, minus_col[static_cast<size_t>(v)]) -= coef;
      }
    }
    if (row.sense == Sense::kLessEqual) tab.at(r, slack_col[static_cast<size_t>(r)]) = T(1);
    if (row.sense == Sense::kGreaterEqual) tab.at(r, slack_col[static_cast<size_t>(r)]) = T(-1);
    tab.rhs(r) = row.rhs;
    if (tab.rhs(r) < T(0)) {
      for (int c = 0; c <= ncols; ++c) tab.at(r, c) = -tab.at(r, c);
    }
    tab.at(r, first_art + r) = T(1);
    tab.basis_[static_cast<size_t>(r)] = first_art + r;
  }

  long iterations = max_iterations;
  LpResult<T> result;

  // Phase one: minimise the sum of artificials.
  std::vector<T> phase1(static_cast<size_t>(ncols), T(0));
  for (int c = first_art; c < ncols; ++c) phase1[static_cast<size_t>(c)] = T(1);
  std::vector<bool> allowed(static_cast<size_t>(ncols), true);
  LpStatus st = tab.optimize(phase1, allowed, iterations);
  if (st == LpStatus::kIterationLimit) {
    result.status = st;
    return result;
  }
  T infeas = tab.current_objective(phase1);
  // Floating residuals scale with the data, so loosen the test slightly.
  T feas_tol = A::kExact ? T(0) : T(1e-9);
  if (infeas > feas_tol) {
    result.status = LpStatus::kInfeasible;
    return result;
  }

  // Drive remaining artificials out of the basis; drop redundant rows.
  for (int r = 0; r < tab.m_;) {
    if (tab.basis_[static_cast<size_t>(r)] < first_art) {
      ++r;
      continue;
    }
    int pc = -1;
    T best(0);
    for (int c = 0; c < first_art; ++c) {
      T mag = A::abs(tab.at(r, c));
      if (A::pos(mag) && (pc < 0 || (!A::kExact && best < mag))) {
        pc = c;
        best = mag;
        if (A::kExact) break;
      }
    }
    if (pc < 0) {
      tab.remove_row(r);
    } else {
      tab.pivot(r, pc);
      ++r;
    }
  }

  // Phase two over structural and slack columns.
  std::vector<T> phase2(static_cast<size_t>(ncols), T(0));
  for (int v = 0; v < nv; ++v) {
    const T& c = vars_[static_cast<size_t>(v)].cost;
    phase2[static_cast<size_t>(plus_col[static_cast<size_t>(v)])] = c;
    if (minus_col[static_cast<size_t>(v)] >= 0) {
      phase2[static_cast<size_t>(minus_col[static_cast<size_t>(v)])] = -c;
    }
  }
  for (int c = first_art; c < ncols; ++c) allowed[static_cast<size_t>(c)] = false;
  st = tab.optimize(phase2, allowed, iterations);
  if (st != LpStatus::kOptimal) {
    result.status = st;
    return result;
  }

  std::vector<T> col_value(static_cast<size_t>(ncols), T(0));
  for (int r = 0; r < tab.m_; ++r) {
    col_value[static_cast<size_t>(tab.basis_[static_cast<size_t>(r)])] = tab.rhs(r);
  }
  result.x.assign(static_cast<size_t>(nv), T(0));
  for (int v = 0; v < nv; ++v) {
    T val = col_value[static_cast<size_t>(plus_col[static_cast<size_t>(v)])];
    if (minus_col[static_cast<size_t>(v)] >= 0) {
      val -= col_value[static_cast<size_t>(minus_col[static_cast<size_t>(v)])];
    }
    result.x[static_cast<size_t>(v)] = val;
  }
  result.objective = tab.current_objective(phase2);
  result.status = LpStatus::kOptimal;
  return result;
}

}  // namespace commgame

#endif  // COMMGAME_LP_H_
