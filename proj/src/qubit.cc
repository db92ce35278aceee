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

#include "commgame/qubit.h"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <random>
#include <string>
#include <thread>

namespace commgame {

namespace {

constexpr double kPi = std::numbers::pi;

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.6g", v);
  return buf;
}

}  // namespace

double BlochVector::norm() const { return std::sqrt(dot(*this)); }

bool BlochVector::pure() const { return std::abs(norm() - 1.0) <= kBlochTolerance; }

void BlochVector::validate() const {
  if (!std::isfinite(x) || !std::isfinite(y) || !std::isfinite(z) ||
      norm() > 1.0 + kBlochTolerance) {
    throw Error(ErrorKind::kInvalidArgument,
                "Bloch vector outside the unit ball (norm " + fmt(norm()) + ")");
  }
}

bool QubitEffect::positive() const {
  const double m = v.norm();
  return t - m >= -kBlochTolerance && t + m <= 1.0 + kBlochTolerance;
}

QubitEffect QubitEffect::antiprojector(const BlochVector& n, double alpha) {
  return {alpha / 2.0, n.scaled(-alpha / 2.0)};
}

double Povm::completeness_residual() const {
  double t = 0.0;
  BlochVector v;
  for (const auto& e : effects) {
    t += e.t;
    v.x += e.v.x;
    v.y += e.v.y;
    v.z += e.v.z;
  }
  return std::max({std::abs(t - 1.0), std::abs(v.x), std::abs(v.y), std::abs(v.z)});
}

void Povm::validate() const {
  for (size_t k = 0; k < effects.size(); ++k) {
    if (!effects[k].positive()) {
      throw Error(ErrorKind::kInvalidArgument, "effect " + std::to_string(k + 1) +
                                                   " is not between 0 and I");
    }
  }
  const double res = completeness_residual();
  if (res > kBlochTolerance) {
    throw Error(ErrorKind::kInvalidArgument,
                "effects do not sum to the identity (residual " + fmt(res) + ")");
  }
}

void QubitStrategy::validate() const {
  if (encodings.size() != decoding.effects.size()) {
    throw Error(ErrorKind::kDimensionMismatch,
                std::to_string(encodings.size()) + " encodings but " +
                    std::to_string(decoding.effects.size()) + " effects");
  }
  if (encodings.size() < 2) {
    throw Error(ErrorKind::kInvalidArgument, "need at least 2 Restaurants");
  }
  for (const auto& e : encodings) e.validate();
  decoding.validate();
  if (noise) {
    for (double e : {noise->eps_e, noise->eps_d}) {
      if (!(e >= 0.0 && e <= 1.0)) {
        throw Error(ErrorKind::kInvalidArgument, "noise parameter outside [0,1]");
      }
    }
  }
}

double born_probability(const BlochVector& state, const QubitEffect& effect) {
  return effect.t + effect.v.dot(state);
}

QubitStrategy apply_noise(const QubitStrategy& s, double eps_e, double eps_d) {
  if (!(eps_e >= 0.0 && eps_e <= 1.0 && eps_d >= 0.0 && eps_d <= 1.0)) {
    throw Error(ErrorKind::kInvalidArgument, "noise parameters must lie in [0,1]");
  }
  QubitStrategy out;
  for (const auto& e : s.encodings) out.encodings.push_back(e.scaled(1.0 - eps_e));
  for (const auto& f : s.decoding.effects) {
    out.decoding.effects.push_back({f.t, f.v.scaled(1.0 - eps_d)});
  }
  return out;
}

VisitMatrix visit_matrix_qubit(const QubitStrategy& s) {
  s.validate();
  if (s.noise) {
    return visit_matrix_qubit(apply_noise(s, s.noise->eps_e, s.noise->eps_d));
  }
  const int n = s.n();
  std::vector<std::vector<double>> p(n, std::vector<double>(n));
  for (int m = 0; m < n; ++m) {
    for (int k = 0; k < n; ++k) {
      // Clip rounding residue; positivity was validated above. Values below
      // 1e-15 are cancellation noise (e.g. t - |v| for an antiprojector).
      const double b = born_probability(s.encodings[k], s.decoding.effects[m]);
      p[m][k] = b < 1e-15 ? 0.0 : std::min(b, 1.0);
    }
  }
  return VisitMatrix(p);
}

QubitStrategy synth_uniform_odd(int n) {
  if (n < 3 || n % 2 == 0) {
    throw Error(ErrorKind::kInvalidArgument,
                "synth_uniform_odd needs odd n >= 3 (even n is won classically), got " +
                    std::to_string(n));
  }
  QubitStrategy s;
  for (int k = 0; k < n; ++k) {
    const double phi = 2.0 * kPi * k / n;
    const BlochVector b{std::sin(phi), 0.0, std::cos(phi)};
    s.encodings.push_back(b);
    s.decoding.effects.push_back(QubitEffect::antiprojector(b, 2.0 / n));
  }
  return s;
}

QubitStrategy synth_trine_aligned() {
  QubitStrategy s = synth_uniform_odd(3);
  for (size_t k = 0; k < 3; ++k) {
    s.decoding.effects[k] = {1.0 / 3.0, s.encodings[k].scaled(1.0 / 3.0)};
  }
  return s;
}

namespace {

struct H3Point {
  double g1, g2, g3;
  std::array<double, 3> alpha;
};

H3Point h3_point(double t2, double t3) {
  const double d = std::sin(t2 + t3) - std::sin(t2) - std::sin(t3);
  H3Point p;
  p.alpha = {2.0 * std::sin(t2 + t3) / d, -2.0 * std::sin(t3) / d, -2.0 * std::sin(t2) / d};
  const double c23 = std::cos(t2 + t3);
  p.g1 = p.alpha[0] / 6.0 * (2.0 - std::cos(t2) - std::cos(t3));
  p.g2 = p.alpha[1] / 6.0 * (2.0 - std::cos(t2) - c23);
  p.g3 = p.alpha[2] / 6.0 * (2.0 - std::cos(t3) - c23);
  return p;
}

// Bisection on a function increasing over (lo, hi); only interior points
// are evaluated, since the endpoints can be degenerate configurations.
template <typename F>
double bisect_increasing(F&& f, double lo, double hi, double target) {
  for (int it = 0; it < 200 && hi - lo > 0.0; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    if (f(mid) < target) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

QubitStrategy h3_strategy(double t2, double t3, const std::array<double, 3>& alpha) {
  QubitStrategy s;
  s.encodings = {{0.0, 0.0, 1.0},
                 {-std::sin(t2), 0.0, std::cos(t2)},
                 {std::sin(t3), 0.0, std::cos(t3)}};
  for (int i = 0; i < 3; ++i) {
    s.decoding.effects.push_back(QubitEffect::antiprojector(s.encodings[i], alpha[i]));
  }
  return s;
}

// Weights with sum(alpha) = 2 and sum(alpha_i n_i) = 0 for three vectors in
// the x-z plane, by Gaussian elimination with partial pivoting.
std::array<double, 3> completeness_weights(const std::vector<BlochVector>& n) {
  double a[3][4] = {{1, 1, 1, 2}, {n[0].x, n[1].x, n[2].x, 0}, {n[0].z, n[1].z, n[2].z, 0}};
  for (int c = 0; c < 3; ++c) {
    int piv = c;
    for (int r = c + 1; r < 3; ++r)
      if (std::abs(a[r][c]) > std::abs(a[piv][c])) piv = r;
    std::swap(a[c], a[piv]);
    for (int r = c + 1; r < 3; ++r) {
      const double f = a[r][c] / a[c][c];
      for (int k = c; k < 4; ++k) a[r][k] -= f * a[c][k];
    }
  }
  std::array<double, 3> x{};
  for (int r = 2; r >= 0; --r) {
    double v = a[r][3];
    for (int k = r + 1; k < 3; ++k) v -= a[r][k] * x[k];
    x[r] = v / a[r][r];
  }
  return x;
}

// Plain Nelder-Mead in two variables.
template <typename F>
std::array<double, 2> nelder_mead2(F&& f, std::array<double, 2> x0, double scale) {
  std::array<std::array<double, 2>, 3> s{x0, x0, x0};
  s[1][0] += scale;
  s[2][1] += scale;
  std::array<double, 3> fv{f(s[0]), f(s[1]), f(s[2])};
  for (int it = 0; it < 4000; ++it) {
    std::array<int, 3> o{0, 1, 2};
    std::sort(o.begin(), o.end(), [&](int a, int b) { return fv[a] < fv[b]; });
    const int b = o[0], m = o[1], w = o[2];
    if (fv[w] - fv[b] < 1e-30) break;
    const std::array<double, 2> c{(s[b][0] + s[m][0]) / 2, (s[b][1] + s[m][1]) / 2};
    auto along = [&](double k) {
      return std::array<double, 2>{c[0] + k * (s[w][0] - c[0]), c[1] + k * (s[w][1] - c[1])};
    };
    const auto xr = along(-1.0);
    const double fr = f(xr);
    if (fr < fv[b]) {
      const auto xe = along(-2.0);
      const double fe = f(xe);
      if (fe < fr) {
        s[w] = xe, fv[w] = fe;
      } else {
        s[w] = xr, fv[w] = fr;
      }
    } else if (fr < fv[m]) {
      s[w] = xr, fv[w] = fr;
    } else {
      const auto xc = along(0.5);
      const double fc = f(xc);
      if (fc < fv[w]) {
        s[w] = xc, fv[w] = fc;
      } else {
        for (int i : {m, w}) {
          s[i] = {(s[i][0] + s[b][0]) / 2, (s[i][1] + s[b][1]) / 2};
          fv[i] = f(s[i]);
        }
      }
    }
  }
  return s[static_cast<size_t>(std::min_element(fv.begin(), fv.end()) - fv.begin())];
}

}  // namespace

H3Solution synth_h3_general(const GameSpec& spec) {
  if (spec.n() != 3) {
    throw Error(ErrorKind::kDimensionMismatch,
                "synth_h3_general needs n = 3, got n = " + std::to_string(spec.n()));
  }
  const double g1 = spec.gamma()[0], g2 = spec.gamma()[1], g3 = spec.gamma()[2];
  H3Solution sol;
  const int top = static_cast<int>(std::max_element(spec.gamma().entries().begin(),
                                                    spec.gamma().entries().end()) -
                                   spec.gamma().entries().begin());
  if (spec.gamma()[top] >= 2.0 / 3.0 - 1e-12) {
    // Restaurant `top` sits on the north pole and the other two share the
    // south pole; the antipodal effect is split so that closing `top` sends
    // Bob to the others in ratio gamma_a : gamma_b.
    sol.theta2 = sol.theta3 = kPi;
    QubitStrategy s;
    for (int i = 0; i < 3; ++i) {
      const BlochVector b{0.0, 0.0, i == top ? 1.0 : -1.0};
      sol.alpha[i] = i == top ? 1.0 : 3.0 * spec.gamma()[i];
      s.encodings.push_back(b);
      s.decoding.effects.push_back(QubitEffect::antiprojector(b, sol.alpha[i]));
    }
    sol.strategy = s;
  } else {
    // For fixed theta2, gamma_1 grows with theta3 on (pi - theta2, pi) up to
    // (3 - cos theta2)/6; along the resulting constant-gamma_1 locus gamma_2
    // grows with theta2 from 0 to 1 - gamma_1.
    const double t2_lo = std::acos(std::clamp(3.0 - 6.0 * g1, -1.0, 1.0));
    auto theta3_for = [&](double t2) {
      return bisect_increasing([&](double t3) { return h3_point(t2, t3).g1; }, kPi - t2, kPi, g1);
    };
    const double t2 = bisect_increasing(
        [&](double t) { return h3_point(t, theta3_for(t)).g2; }, t2_lo, kPi, g2);
    double t3 = theta3_for(t2);
    sol.theta2 = t2;
    sol.theta3 = t3;
    H3Point p = h3_point(t2, t3);
    const double err =
        std::max({std::abs(p.g1 - g1), std::abs(p.g2 - g2), std::abs(p.g3 - g3)});
    if (!(err <= 1e-10)) {
      auto obj = [&](const std::array<double, 2>& x) {
        const H3Point q = h3_point(x[0], x[1]);
        if (!std::isfinite(q.g1) || x[0] + x[1] < kPi || x[0] > kPi || x[1] > kPi ||
            q.alpha[0] < 0 || q.alpha[1] < 0 || q.alpha[2] < 0) {
          return 1e9;
        }
        return (q.g1 - g1) * (q.g1 - g1) + (q.g2 - g2) * (q.g2 - g2);
      };
      const auto x = nelder_mead2(obj, {t2, t3}, 1e-3);
      sol.theta2 = x[0];
      sol.theta3 = x[1];
      sol.used_fallback = true;
      p = h3_point(x[0], x[1]);
    }
    // The closed-form alphas cancel badly near degenerate triangles, so they
    // are recomputed from the completeness system itself.
    sol.strategy = h3_strategy(sol.theta2, sol.theta3, {0.0, 0.0, 0.0});
    sol.alpha = completeness_weights(sol.strategy.encodings);
    for (double& a : sol.alpha) {
      if (a < 0.0 && a > -1e-12) a = 0.0;
    }
    sol.strategy = h3_strategy(sol.theta2, sol.theta3, sol.alpha);
  }
  const Verdict v = check_game(spec, visit_matrix_qubit(sol.strategy));
  sol.residual = v.max_violation;
  if (!v.wins) {
    throw Error(ErrorKind::kNumericFailure, "H^3 root-find did not converge for " +
                                                spec.label() + " (residual " +
                                                fmt(v.max_violation) + ")");
  }
  return sol;
}

H4Solution synth_h4_symmetric(double gamma1) {
  // Effects alpha_i |psi_i_perp><psi_i_perp| with alpha_2 = alpha_3 = alpha_4
  // = beta. Completeness gives alpha_1 + 3 beta = 2 and alpha_1 + 3 beta c = 0,
  // the gamma_1 condition alpha_1 (1 - c) = 8 gamma_1 / 3, hence c = -4 gamma_1 / 3.
  if (!(gamma1 > 0.0 && gamma1 <= 0.75 + 1e-12)) {
    throw Error(ErrorKind::kInvalidArgument,
                "H^4 symmetric synthesis needs gamma_1 in (0, 3/4], got " + fmt(gamma1));
  }
  const double c = std::max(-1.0, -4.0 * gamma1 / 3.0);
  const double s = std::sqrt(std::max(0.0, 1.0 - c * c));
  H4Solution out;
  out.cos_theta = c;
  const double beta = 2.0 / (3.0 * (1.0 - c));
  out.alpha = {-2.0 * c / (1.0 - c), beta, beta, beta};
  const double r3 = std::sqrt(3.0) / 2.0;
  out.strategy.encodings = {{0, 0, 1}, {s, 0, c}, {-0.5 * s, r3 * s, c}, {-0.5 * s, -r3 * s, c}};
  for (int i = 0; i < 4; ++i) {
    out.strategy.decoding.effects.push_back(
        QubitEffect::antiprojector(out.strategy.encodings[i], out.alpha[i]));
  }
  return out;
}

QubitStrategy synth_sic_strict() {
  const double a = 2.0 * std::sqrt(2.0) / 3.0;
  QubitStrategy s;
  s.encodings = {{0, 0, 1},
                 {a, 0, -1.0 / 3.0},
                 {a * std::cos(2 * kPi / 3), a * std::sin(2 * kPi / 3), -1.0 / 3.0},
                 {a * std::cos(4 * kPi / 3), a * std::sin(4 * kPi / 3), -1.0 / 3.0}};
  for (const auto& b : s.encodings) {
    s.decoding.effects.push_back(QubitEffect::antiprojector(b, 0.5));
  }
  return s;
}

MixedStrategy simulate_orthogonal_encoding(const QubitStrategy& s) {
  s.validate();
  if (s.noise) {
    throw Error(ErrorKind::kContractViolation, "orthogonal-encoding simulation needs noiseless encodings");
  }
  const BlochVector m = s.encodings[0];
  if (!m.pure()) {
    throw Error(ErrorKind::kContractViolation, "encodings must be pure");
  }
  std::vector<double> alpha;
  for (const auto& e : s.encodings) {
    const double d = e.dot(m);
    if (!e.pure() || std::abs(std::abs(d) - 1.0) > kBlochTolerance) {
      throw Error(ErrorKind::kContractViolation,
                  "encodings must be a single antipodal pair of pure states");
    }
    alpha.push_back(d > 0 ? 1.0 : 0.0);
  }
  std::vector<double> r, q;
  for (const auto& f : s.decoding.effects) {
    r.push_back(std::clamp(born_probability(m, f), 0.0, 1.0));
    q.push_back(std::clamp(born_probability(m.scaled(-1.0), f), 0.0, 1.0));
  }
  return MixedStrategy(alpha, ProbVector(r), ProbVector(q));
}

namespace {

void check_postprocess(const std::vector<std::array<double, 2>>& post, const BlochVector& axis) {
  if (std::abs(axis.norm() - 1.0) > kBlochTolerance) {
    throw Error(ErrorKind::kInvalidArgument, "measurement axis must be a unit vector");
  }
  for (int b = 0; b < 2; ++b) {
    double s = 0.0;
    for (const auto& row : post) {
      if (row[b] < -kSumTolerance) throw Error(ErrorKind::kInvalidArgument, "negative postprocess entry");
      s += row[b];
    }
    if (std::abs(s - 1.0) > kSumTolerance) {
      throw Error(ErrorKind::kInvalidArgument, "postprocess columns must sum to 1");
    }
  }
}

}  // namespace

MixedStrategy simulate_projective_decoding(const std::vector<BlochVector>& encodings,
                                           const BlochVector& axis,
                                           const std::vector<std::array<double, 2>>& postprocess) {
  check_postprocess(postprocess, axis);
  std::vector<double> alpha, r, q;
  for (const auto& e : encodings) {
    e.validate();
    alpha.push_back(std::clamp((1.0 + axis.dot(e)) / 2.0, 0.0, 1.0));
  }
  for (const auto& row : postprocess) {
    r.push_back(row[0]);
    q.push_back(row[1]);
  }
  return MixedStrategy(alpha, ProbVector(r), ProbVector(q));
}

QubitStrategy projective_strategy(const std::vector<BlochVector>& encodings,
                                  const BlochVector& axis,
                                  const std::vector<std::array<double, 2>>& postprocess) {
  check_postprocess(postprocess, axis);
  QubitStrategy s;
  s.encodings = encodings;
  // E_m = post[m][0] (I + a.sigma)/2 + post[m][1] (I - a.sigma)/2.
  for (const auto& row : postprocess) {
    s.decoding.effects.push_back(
        {(row[0] + row[1]) / 2.0, axis.scaled((row[0] - row[1]) / 2.0)});
  }
  return s;
}

std::vector<NoisePoint> noise_advantage_region(int resolution) {
  if (resolution < 2) {
    throw Error(ErrorKind::kInvalidArgument, "resolution must be at least 2");
  }
  std::vector<NoisePoint> out;
  for (int i = 0; i < resolution; ++i) {
    for (int j = 0; j < resolution; ++j) {
      const double e = static_cast<double>(i) / (resolution - 1);
      const double d = static_cast<double>(j) / (resolution - 1);
      const double b = e + d - e * d;
      // Points on the curve itself are not an advantage; the margin keeps
      // grid rounding from deciding that.
      out.push_back({e, d, b, b < 0.5 - 1e-12});
    }
  }
  return out;
}

ErrorReport error_functional(const VisitMatrix& vm) {
  if (vm.n() != 3) {
    throw Error(ErrorKind::kInvalidArgument,
                "error functional is defined for n = 3, got n = " + std::to_string(vm.n()));
  }
  ErrorReport rep;
  for (int i = 0; i < 3; ++i) {
    rep.diagonal[i] = vm.at(i, i);
    const double g = vm.marginal(i) - 1.0 / 3.0;
    rep.marginal[i] = g * g;
    rep.value += (rep.diagonal[i] + rep.marginal[i]) / 3.0;
  }
  return rep;
}

namespace {

// x = (alpha[3], r[3], q[3]) with r, q read through params_to_distribution.
double mixed_error(std::span<const double> x) {
  double r[3], q[3];
  params_to_distribution(x, 3, 3, r);
  params_to_distribution(x, 6, 3, q);
  double e = 0.0;
  for (int i = 0; i < 3; ++i) {
    double g = 0.0;
    for (int j = 0; j < 3; ++j) g += x[j] * r[i] + (1.0 - x[j]) * q[i];
    g = g / 3.0 - 1.0 / 3.0;
    e += x[i] * r[i] + (1.0 - x[i]) * q[i] + g * g;
  }
  return e / 3.0;
}

MixedStrategy to_mixed(std::span<const double> x) {
  std::vector<double> r(3), q(3);
  params_to_distribution(x, 3, 3, r.data());
  params_to_distribution(x, 6, 3, q.data());
  return MixedStrategy({x[0], x[1], x[2]}, ProbVector(r), ProbVector(q));
}

struct Candidate {
  double value;
  long index;
  std::array<double, 9> x;
  bool operator<(const Candidate& o) const {
    return value != o.value ? value < o.value : index < o.index;
  }
};

constexpr long kChunk = 1 << 14;

// Best `keep` samples of one chunk.
std::vector<Candidate> sample_chunk(long chunk, long begin, long end, std::uint64_t seed,
                                    size_t keep) {
  Rng rng(derive_seed(seed, static_cast<std::uint64_t>(chunk)));
  std::uniform_real_distribution<double> u(0.0, 1.0);
  std::exponential_distribution<double> ex(1.0);
  std::vector<Candidate> best;
  for (long i = begin; i < end; ++i) {
    Candidate c;
    c.index = i;
    for (int k = 0; k < 3; ++k) c.x[k] = u(rng);
    for (int b : {3, 6}) {
      double s = 0.0;
      for (int k = 0; k < 3; ++k) s += c.x[b + k] = ex(rng);
      for (int k = 0; k < 3; ++k) c.x[b + k] /= s;
    }
    c.value = mixed_error(c.x);
    if (best.size() < keep) {
      best.push_back(c);
      std::push_heap(best.begin(), best.end());
    } else if (c < best.front()) {
      std::pop_heap(best.begin(), best.end());
      best.back() = c;
      std::push_heap(best.begin(), best.end());
    }
  }
  return best;
}

}  // namespace

MonteCarloResult montecarlo_classical_floor(long samples, std::uint64_t seed, int refine_top,
                                            int workers) {
  if (samples < 1) throw Error(ErrorKind::kInvalidArgument, "samples must be >= 1");
  if (refine_top < 0) throw Error(ErrorKind::kInvalidArgument, "refine_top must be >= 0");
  workers = std::max(1, workers);
  const long chunks = (samples + kChunk - 1) / kChunk;
  const size_t keep = static_cast<size_t>(std::max(1, refine_top));
  std::vector<std::vector<Candidate>> per_chunk(static_cast<size_t>(chunks));
  auto run = [&](int w) {
    for (long c = w; c < chunks; c += workers) {
      per_chunk[c] = sample_chunk(c, c * kChunk, std::min(samples, (c + 1) * kChunk), seed, keep);
    }
  };
  if (workers == 1) {
    run(0);
  } else {
    std::vector<std::thread> pool;
    for (int w = 0; w < workers; ++w) pool.emplace_back(run, w);
    for (auto& t : pool) t.join();
  }
  std::vector<Candidate> all;
  for (auto& v : per_chunk) all.insert(all.end(), v.begin(), v.end());
  std::sort(all.begin(), all.end());
  all.resize(std::min(all.size(), keep));

  const Candidate& raw = all.front();
  std::array<double, 9> best_x = raw.x;
  double best = raw.value;
  DescentOptions opt;
  opt.initial_step = 0.05;
  opt.min_step = 1e-9;
  opt.max_evals = 50000;
  for (int k = 0; k < refine_top && k < static_cast<int>(all.size()); ++k) {
    DescentResult d = coordinate_descent(mixed_error,
                                         std::vector<double>(all[k].x.begin(), all[k].x.end()), opt);
    if (d.value < best) {
      best = d.value;
      std::copy(d.x.begin(), d.x.end(), best_x.begin());
    }
  }
  return MonteCarloResult{samples, best, raw.value, to_mixed(best_x), to_mixed(raw.x)};
}

}  // namespace commgame
