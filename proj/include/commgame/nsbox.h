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

// Two-input two-output no-signaling boxes and the 4-cup 2-ball game played
// with one classical bit plus a box.

#ifndef COMMGAME_NSBOX_H_
#define COMMGAME_NSBOX_H_

#include <array>
#include <string>

#include "commgame/search.h"

namespace commgame {

// Stored through marginals and joint zeros, which cannot express signaling:
// m[x] = p(a=0|x), n[y] = p(b=0|y), c[x][y] = p(a=0,b=0|x,y).
struct NsBox {
  std::array<double, 2> m{0.5, 0.5};
  std::array<double, 2> n{0.5, 0.5};
  std::array<std::array<double, 2>, 2> c{};

  // max(0, m_x + n_y - 1) <= c_xy <= min(m_x, n_y) within 1e-12.
  void validate() const;

  // table[2x + y][2a + b] = p(ab|xy).
  std::array<std::array<double, 4>, 4> table() const;

  static NsBox product();  // p(ab|xy) = 1/4
  // Local deterministic box with outputs a and b for every input.
  static NsBox deterministic(int a, int b);
  // a xor b = (1 - x) y, uniform marginals: the box reaching CHSH = 4 under
  // the sign pattern used by chsh().
  static NsBox pr();
  // Marginals uniform on [0,1], then each c_xy uniform on its allowed range.
  static NsBox random(Rng& rng);
};

// 2 + 4 (c00 - c01 + c10 + c11 - m1 - n0).
double chsh(const NsBox& box);
// <x0y0> - <x0y1> + <x1y0> + <x1y1> from the expanded table, outcome 0 = +1.
double chsh_from_table(const NsBox& box);

struct CupGameOutcome {
  // Cup pairs in the order 12, 34, 13, 24, 14, 23.
  static constexpr std::array<const char*, 6> kPairs{"12", "34", "13", "24", "14", "23"};
  std::array<double, 6> success{};
  double average = 0.0;
};

// Alice sends 0 for {1,2}, 1 for {3,4}, and otherwise feeds x into the box
// (x = 0 for {1,3},{2,4}; x = 1 for {1,4},{2,3}) and sends a, flipped for
// the pairs containing cup 2. Bob uses the received bit as y and picks cup
// 2y + b + 1.
CupGameOutcome cup_game_success(const NsBox& box);

// Best average over the 2^6 deterministic encodings and 4^2 decodings of
// one bit; `constant_only` restricts Alice to constant messages.
double classical_cup_bound(bool constant_only = false);

}  // namespace commgame

#endif  // COMMGAME_NSBOX_H_
