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

#ifndef COMMGAME_RATIONAL_H_
#define COMMGAME_RATIONAL_H_

#include <boost/multiprecision/cpp_int.hpp>

#include <vector>

namespace commgame {

using Rational = boost::multiprecision::cpp_rational;

// Best rational approximation with denominator <= max_den (continued
// fractions). If it is farther than `tol` from x, the exact binary value of
// x is returned instead.
Rational snap_rational(double x, long max_den = 1000000, double tol = 1e-12);

// Snaps every entry and then lets the largest entry absorb whatever is left
// so that the result sums to exactly one.
std::vector<Rational> snap_distribution(const std::vector<double>& p);

inline double to_double(const Rational& r) {
  return static_cast<double>(r);
}

}  // namespace commgame

#endif  // COMMGAME_RATIONAL_H_
