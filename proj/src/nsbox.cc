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

#include "commgame/nsbox.h"

#include <algorithm>
#include <cmath>

#include "commgame/games.h"

namespace commgame {

void NsBox::validate() const {
  constexpr double tol = 1e-12;
  for (int i = 0; i < 2; ++i) {
    if (!(m[i] >= -tol && m[i] <= 1 + tol && n[i] >= -tol && n[i] <= 1 + tol)) {
      throw Error(ErrorKind::kInvalidArgument, "box marginals must lie in [0,1]");
    }
  }
  for (int x = 0; x < 2; ++x) {
    for (int y = 0; y < 2; ++y) {
      const double lo = std::max(0.0, m[x] + n[y] - 1.0), hi = std::min(m[x], n[y]);
      if (!(c[x][y] >= lo - tol && c[x][y] <= hi + tol)) {
        throw Error(ErrorKind::kInvalidArgument,
                    "c" + std::to_string(x) + std::to_string(y) +
                        " outside [max(0, m+n-1), min(m, n)]");
      }
    }
  }
}

std::array<std::array<double, 4>, 4> NsBox::table() const {
  std::array<std::array<double, 4>, 4> t{};
  for (int x = 0; x < 2; ++x) {
    for (int y = 0; y < 2; ++y) {
      const double cc = c[x][y];
      t[2 * x + y] = {cc, m[x] - cc, n[y] - cc, 1.0 - m[x] - n[y] + cc};
    }
  }
  return t;
}

NsBox NsBox::product() {
  NsBox b;
  for (auto& row : b.c) row = {0.25, 0.25};
  return b;
}

NsBox NsBox::deterministic(int a, int b) {
  NsBox box;
  const double ma = a == 0 ? 1.0 : 0.0, nb = b == 0 ? 1.0 : 0.0;
  box.m = {ma, ma};
  box.n = {nb, nb};
  for (auto& row : box.c) row = {ma * nb, ma * nb};
  return box;
}

NsBox NsBox::pr() {
  NsBox b;
  for (int x = 0; x < 2; ++x)
    for (int y = 0; y < 2; ++y) b.c[x][y] = (1 - x) * y == 0 ? 0.5 : 0.0;
  return b;
}

NsBox NsBox::random(Rng& rng) {
  std::uniform_real_distribution<double> u(0.0, 1.0);
  NsBox b;
  b.m = {u(rng), u(rng)};
  b.n = {u(rng), u(rng)};
  for (int x = 0; x < 2; ++x) {
    for (int y = 0; y < 2; ++y) {
      const double lo = std::max(0.0, b.m[x] + b.n[y] - 1.0), hi = std::min(b.m[x], b.n[y]);
      b.c[x][y] = lo + (hi - lo) * u(rng);
    }
  }
  return b;
}

double chsh(const NsBox& b) {
  b.validate();
  return 2.0 + 4.0 * (b.c[0][0] - b.c[0][1] + b.c[1][0] + b.c[1][1] - b.m[1] - b.n[0]);
}

double chsh_from_table(const NsBox& box) {
  box.validate();
  const auto t = box.table();
  auto corr = [&](int x, int y) {
    const auto& row = t[2 * x + y];
    return row[0] - row[1] - row[2] + row[3];
  };
  return corr(0, 0) - corr(0, 1) + corr(1, 0) + corr(1, 1);
}

CupGameOutcome cup_game_success(const NsBox& box) {
  box.validate();
  const auto t = box.table();
  struct Action {
    int cups[2];
    int constant;  // bit sent, or -1 when the box is used
    int x;
    int flip;
  };
  static constexpr Action kActions[6] = {
      {{1, 2}, 0, 0, 0}, {{3, 4}, 1, 0, 0}, {{1, 3}, -1, 0, 0},
      {{2, 4}, -1, 0, 1}, {{1, 4}, -1, 1, 0}, {{2, 3}, -1, 1, 1}};
  CupGameOutcome out;
  for (int k = 0; k < 6; ++k) {
    const Action& act = kActions[k];
    auto wins = [&](int cup) { return cup == act.cups[0] || cup == act.cups[1]; };
    double s = 0.0;
    for (int a = 0; a < 2; ++a) {
      for (int b = 0; b < 2; ++b) {
        // Alice's own box use only matters when she consults it; with a
        // constant message her input is irrelevant, so take x = 0 and sum
        // out her output.
        const int bit = act.constant >= 0 ? act.constant : (a ^ act.flip);
        const int y = bit;
        const double p = t[2 * act.x + y][2 * a + b];
        if (wins(2 * y + b + 1)) s += p;
      }
    }
    out.success[k] = s;
    out.average += s;
  }
  out.average /= 6.0;
  return out;
}

double classical_cup_bound(bool constant_only) {
  static constexpr int kPairCups[6][2] = {{1, 2}, {3, 4}, {1, 3}, {2, 4}, {1, 4}, {2, 3}};
  int best = 0;
  for (int enc = 0; enc < 64; ++enc) {
    if (constant_only && enc != 0 && enc != 63) continue;
    for (int c0 = 1; c0 <= 4; ++c0) {
      for (int c1 = 1; c1 <= 4; ++c1) {
        int wins = 0;
        for (int k = 0; k < 6; ++k) {
          const int cup = (enc >> k) & 1 ? c1 : c0;
          wins += cup == kPairCups[k][0] || cup == kPairCups[k][1];
        }
        best = std::max(best, wins);
      }
    }
  }
  return best / 6.0;
}

}  // namespace commgame
