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

#include "commgame/rational.h"

#include <algorithm>
#include <cmath>

namespace commgame {

Rational snap_rational(double x, long max_den, double tol) {
  const Rational exact(x);
  // Convergents h/k of the continued fraction of |x|.
  const bool neg = x < 0;
  double rem = std::abs(x);
  long long h_prev = 1, h = static_cast<long long>(std::floor(rem));
  long long k_prev = 0, k = 1;
  rem -= std::floor(rem);
  for (int iter = 0; iter < 64 && rem > 1e-18; ++iter) {
    if (std::abs(static_cast<double>(h) / k - std::abs(x)) <= tol * 1e-3) break;
    rem = 1.0 / rem;
    const long long a = static_cast<long long>(std::floor(rem));
    rem -= static_cast<double>(a);
    const long long h_next = a * h + h_prev;
    const long long k_next = a * k + k_prev;
    if (k_next > max_den) break;
    h_prev = h;
    k_prev = k;
    h = h_next;
    k = k_next;
  }
  Rational approx(h, k);
  if (neg) approx = -approx;
  if (std::abs(static_cast<double>(approx) - x) > tol) return exact;
  return approx;
}

std::vector<Rational> snap_distribution(const std::vector<double>& p) {
  std::vector<Rational> out;
  out.reserve(p.size());
  for (double v : p) out.push_back(snap_rational(v));
  if (out.empty()) return out;
  const size_t big = static_cast<size_t>(
      std::max_element(p.begin(), p.end()) - p.begin());
  Rational rest(0);
  for (size_t i = 0; i < out.size(); ++i) {
    if (i != big) rest += out[i];
  }
  out[big] = Rational(1) - rest;
  return out;
}

}  // namespace commgame
