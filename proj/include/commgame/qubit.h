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

// Qubit strategies in the Bloch parametrization. A state is a vector n
// with |n| <= 1 (operator (I + n.sigma)/2); an effect is a pair (t, v)
// standing for t I + v.sigma. The Born probability is then t + v.n, so no
// 2x2 complex matrix is ever formed.

#ifndef COMMGAME_QUBIT_H_
#define COMMGAME_QUBIT_H_

#include <array>
#include <cstdint>
#include <optional>
#include <vector>

#include "commgame/classical.h"
#include "commgame/games.h"
#include "commgame/search.h"

namespace commgame {

inline constexpr double kBlochTolerance = 1e-12;

struct BlochVector {
  double x = 0.0, y = 0.0, z = 0.0;

  double norm() const;
  double dot(const BlochVector& o) const { return x * o.x + y * o.y + z * o.z; }
  BlochVector scaled(double s) const { return {s * x, s * y, s * z}; }
  bool pure() const;
  // Throws kInvalidArgument when |n| > 1 + kBlochTolerance.
  void validate() const;
};

struct QubitEffect {
  double t = 0.0;
  BlochVector v;

  // 0 <= t - |v| and t + |v| <= 1, both within kBlochTolerance.
  bool positive() const;
  // alpha |psi_perp><psi_perp| for the pure state n: (alpha/2, -alpha n/2).
  static QubitEffect antiprojector(const BlochVector& n, double alpha);
};

struct Povm {
  std::vector<QubitEffect> effects;

  // Largest deviation of sum(effects) from the identity, over t and v.
  double completeness_residual() const;
  void validate() const;
};

struct Noise {
  double eps_e = 0.0;  // encoding depolarization
  double eps_d = 0.0;  // decoding depolarization
};

struct QubitStrategy {
  std::vector<BlochVector> encodings;  // one per closed Restaurant
  Povm decoding;                       // one effect per visited Restaurant
  std::optional<Noise> noise;

  int n() const { return static_cast<int>(encodings.size()); }
  void validate() const;
};

double born_probability(const BlochVector& state, const QubitEffect& effect);

// Applies the stored noise, if any, before evaluating.
VisitMatrix visit_matrix_qubit(const QubitStrategy& s);

// Encodings shrink by (1 - eps_e); effect vectors by (1 - eps_d) with t kept.
// The result carries no pending noise.
QubitStrategy apply_noise(const QubitStrategy& s, double eps_e, double eps_d);

// n equally spaced pure states in the x-z plane, decoded with
// (1/n)(I - n_k.sigma). Wins H^n(1/n) for odd n >= 3.
QubitStrategy synth_uniform_odd(int n);

// Trine encodings with effects aligned to them, (1/3)(I + n_k.sigma): the
// outcome tends to name the input instead of avoiding it.
QubitStrategy synth_trine_aligned();

struct H3Solution {
  double theta2 = 0.0, theta3 = 0.0;
  std::array<double, 3> alpha{};
  QubitStrategy strategy;
  double residual = 0.0;  // check_game max violation
  bool used_fallback = false;
};

// psi_1 on the north pole, psi_2 and psi_3 at polar angles theta2 (toward
// -x) and theta3 (toward +x); effects alpha_i |psi_i_perp><psi_i_perp|.
H3Solution synth_h3_general(const GameSpec& spec);

struct H4Solution {
  double cos_theta = 0.0;
  std::array<double, 4> alpha{};
  QubitStrategy strategy;
};

// H^4(g, (1-g)/3, (1-g)/3, (1-g)/3) for g in (0, 3/4].
H4Solution synth_h4_symmetric(double gamma1);

// Tetrahedron encodings decoded by the inverted tetrahedron: wins H^4[1/3].
QubitStrategy synth_sic_strict();

// Classical simulation of a qubit strategy whose encodings are all one of
// two antipodal pure states +m / -m: sending +m becomes sending bit 0.
// Throws kContractViolation otherwise.
MixedStrategy simulate_orthogonal_encoding(const QubitStrategy& s);

// Two-outcome projective measurement along `axis` (unit), outcome 0 for +axis,
// followed by Bob's postprocess: postprocess[m][b] = p(visit m | outcome b).
// The classical source for Restaurant k emits 0 with prob (1 + axis.n_k)/2.
MixedStrategy simulate_projective_decoding(
    const std::vector<BlochVector>& encodings, const BlochVector& axis,
    const std::vector<std::array<double, 2>>& postprocess);

// The qubit strategy that simulate_projective_decoding reproduces.
QubitStrategy projective_strategy(
    const std::vector<BlochVector>& encodings, const BlochVector& axis,
    const std::vector<std::array<double, 2>>& postprocess);

struct NoisePoint {
  double eps_e, eps_d;
  double boundary_value;  // eps_e + eps_d - eps_e eps_d
  bool advantage;         // boundary_value < 1/2
};

// resolution x resolution grid over [0,1]^2.
std::vector<NoisePoint> noise_advantage_region(int resolution);

struct ErrorReport {
  double value = 0.0;
  std::array<double, 3> diagonal{};  // p(i|i)
  std::array<double, 3> marginal{};  // (gamma_i - 1/3)^2
};

// (1/3) sum_i [p(i|i) + (gamma_i - 1/3)^2], gamma_i = (1/3) sum_j p(i|j).
ErrorReport error_functional(const VisitMatrix& vm);

struct MonteCarloResult {
  long samples = 0;
  double min_error = 0.0;      // after refinement
  double raw_min_error = 0.0;  // best plain sample
  MixedStrategy argmin;
  MixedStrategy raw_argmin;
};

// Uniform sampling of 3-Restaurant mixed strategies (alphas in [0,1], coins
// uniform on the simplex), then compass-search refinement of the best
// `refine_top` samples. Chunks are seeded independently, so the result does
// not depend on `workers`.
MonteCarloResult montecarlo_classical_floor(long samples,
                                            std::uint64_t seed = kDefaultSeed,
                                            int refine_top = 100, int workers = 1);

}  // namespace commgame

#endif  // COMMGAME_QUBIT_H_
