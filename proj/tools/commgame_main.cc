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

// commgame: command-line front end.
//
// Exit status: 0 win / feasible, 2 expected infeasibility (the resource
// cannot win), 3 boundary-indeterminate feasibility, 1 any error.

#include <cmath>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "commgame/classical.h"
#include "commgame/games.h"
#include "commgame/json_io.h"
#include "commgame/nsbox.h"
#include "commgame/order_of_merit.h"
#include "commgame/polygon.h"
#include "commgame/qubit.h"
#include "commgame/sr_audit.h"
#include "commgame/sweeps.h"
#include "commgame/worstcase.h"

namespace {

using namespace commgame;

constexpr int kExitOk = 0;
constexpr int kExitError = 1;
constexpr int kExitInfeasible = 2;
constexpr int kExitIndeterminate = 3;

const char* kSupportedPairs =
    "supported (resource, game) pairs:\n"
    "  cbit        any non-strict H^n(gamma)\n"
    "  cbit-sr     any non-strict H^n(gamma); strict H^n[1/(n-1)], n >= 3\n"
    "  qubit       H^3(gamma); H^4(g,(1-g)/3,(1-g)/3,(1-g)/3), g <= 3/4;\n"
    "              H^n(1/n) for odd n; strict H^4[1/3]\n"
    "  polygon:4   H^3(gamma)\n"
    "  polygon:2k  H^k(1/k)";

struct Options {
  std::uint64_t seed = kDefaultSeed;
  double tol = kDefaultTolerance;
  std::string output;
  std::string format = "json";
};

void emit(const Options& o, const std::string& text) {
  if (o.output.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(o.output);
  if (!out) throw Error(ErrorKind::kInvalidArgument, "cannot write " + o.output);
  out << text;
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

GameSpec load_game(const std::string& path) { return game_from_json(read_json_file(path)); }

[[noreturn]] void unsupported(const std::string& resource, const GameSpec& g) {
  throw Error(ErrorKind::kCapability,
              "resource '" + resource + "' cannot be synthesized for " + g.label() + "\n" +
                  kSupportedPairs);
}

std::string matrix_csv(const VisitMatrix& m) {
  std::string s = "closed";
  for (int v = 0; v < m.n(); ++v) s += ",visit" + std::to_string(v + 1);
  s += "\n";
  const auto rows = m.closed_major();
  for (size_t c = 0; c < rows.size(); ++c) {
    s += std::to_string(c + 1);
    for (double p : rows[c]) {
      char buf[32];
      std::snprintf(buf, sizeof buf, ",%.17g", p);
      s += buf;
    }
    s += "\n";
  }
  return s;
}

Json verdict_json(const GameSpec& g, const VisitMatrix& m, const Verdict& v) {
  Json j{{"game", to_json(g)},
         {"label", g.label()},
         {"wins", v.wins},
         {"max_violation", v.max_violation},
         {"matrix", to_json(m)}};
  if (!v.wins) j["witness"] = v.witness;
  return j;
}

int run_check(const Options& o, const std::string& game_path, const std::string& strat_path) {
  const GameSpec g = load_game(game_path);
  const AnyStrategy s = strategy_from_json(read_json_file(strat_path));
  const VisitMatrix m = visit_matrix_of(s);
  if (m.n() != g.n()) {
    throw Error(ErrorKind::kDimensionMismatch, "strategy has " + std::to_string(m.n()) +
                                                   " Restaurants, game has " + std::to_string(g.n()));
  }
  const Verdict v = check_game(g, m, o.tol);
  emit(o, o.format == "csv" ? matrix_csv(m) : dump(verdict_json(g, m, v)));
  return v.wins ? kExitOk : kExitInfeasible;
}

std::optional<int> polygon_sides(const std::string& resource) {
  if (resource.rfind("polygon:", 0) != 0) return std::nullopt;
  try {
    size_t used = 0;
    const int n = std::stoi(resource.substr(8), &used);
    if (used + 8 == resource.size()) return n;
  } catch (const std::exception&) {
  }
  throw Error(ErrorKind::kInvalidArgument, "polygon resource must look like polygon:<n>");
}

bool is_uniform(const GameSpec& g) {
  for (int i = 0; i < g.n(); ++i)
    if (std::abs(g.gamma()[i] - 1.0 / g.n()) > 1e-12) return false;
  return true;
}

int run_synth(const Options& o, const std::string& resource, const std::string& game_path) {
  const GameSpec g = load_game(game_path);
  std::optional<AnyStrategy> s;
  Json extra = Json::object();
  if (resource == "cbit") {
    if (g.strict()) unsupported(resource, g);
    const FeasibilityReport rep = mixed_feasibility_report(g);
    if (rep.status == Feasibility::kInfeasible) {
      emit(o, dump({{"game", to_json(g)}, {"feasible", false},
                    {"partitions_checked", rep.partitions_checked}}));
      return kExitInfeasible;
    }
    if (rep.status == Feasibility::kBoundaryIndeterminate) {
      emit(o, dump({{"game", to_json(g)}, {"feasibility", "boundary-indeterminate"},
                    {"best", to_json(*rep.best)}}));
      return kExitIndeterminate;
    }
    extra["certificate"] = to_json(*rep.best);
    s = mixed_strategy_from_certificate(*rep.best, g);
  } else if (resource == "cbit-sr") {
    s = g.strict() ? strict_sr_protocol(g.n()) : synth_sr_strategy(g);
  } else if (resource == "qubit") {
    const auto& y = g.gamma();
    if (g.strict()) {
      if (g.n() != 4) unsupported(resource, g);
      s = synth_sic_strict();
    } else if (g.n() == 3) {
      const H3Solution h = synth_h3_general(g);
      extra["theta2"] = h.theta2;
      extra["theta3"] = h.theta3;
      extra["alpha"] = h.alpha;
      s = h.strategy;
    } else if (g.n() == 4 && std::abs(y[1] - y[2]) < 1e-12 && std::abs(y[2] - y[3]) < 1e-12 &&
               y[0] > 0.0 && y[0] <= 0.75 + 1e-12) {
      const H4Solution h = synth_h4_symmetric(y[0]);
      extra["cos_theta"] = h.cos_theta;
      extra["alpha"] = h.alpha;
      s = h.strategy;
    } else if (g.n() % 2 == 1 && is_uniform(g)) {
      s = synth_uniform_odd(g.n());
    } else {
      unsupported(resource, g);
    }
  } else if (const auto sides = polygon_sides(resource)) {
    if (!g.strict() && *sides == 4 && g.n() == 3) {
      const SquareH3Solution sq = synth_square_h3(g);
      extra["mixed_role"] = sq.mixed_role + 1;
      extra["p"] = sq.p;
      extra["q"] = sq.q;
      extra["r"] = sq.r;
      s = sq.strategy;
    } else if (!g.strict() && *sides == 2 * g.n() && is_uniform(g)) {
      s = synth_even_gon(g.n());
    } else {
      unsupported(resource, g);
    }
  } else {
    throw Error(ErrorKind::kInvalidArgument, "unknown resource '" + resource + "'\n" + kSupportedPairs);
  }
  const VisitMatrix m = visit_matrix_of(*s);
  const Verdict v = check_game(g, m, o.tol);
  Json j = verdict_json(g, m, v);
  j["resource"] = resource;
  j["strategy"] = to_json(*s);
  if (!extra.empty()) j["details"] = extra;
  emit(o, dump(j));
  return v.wins ? kExitOk : kExitInfeasible;
}

int run_feasibility(const Options& o, const std::string& resource, const std::string& game_path) {
  const GameSpec g = load_game(game_path);
  Json j{{"game", to_json(g)}, {"label", g.label()}, {"resource", resource}};
  if (resource == "cbit" && !g.strict()) {
    const FeasibilityReport rep = mixed_feasibility_report(g);
    j["feasibility"] = feasibility_name(rep.status);
    j["partitions_checked"] = rep.partitions_checked;
    if (rep.best) j["best"] = to_json(*rep.best);
    emit(o, dump(j));
    switch (rep.status) {
      case Feasibility::kFeasible: return kExitOk;
      case Feasibility::kInfeasible: return kExitInfeasible;
      case Feasibility::kBoundaryIndeterminate: return kExitIndeterminate;
    }
  }
  if (resource == "cbit-sr" && !g.strict()) {
    const HullResult h = hull_membership_oracle(g);
    j["feasibility"] = h.feasible_with_unbounded_sr ? "feasible" : "infeasible";
    j["exact"] = h.exact;
    j["columns"] = h.columns;
    emit(o, dump(j));
    return h.feasible_with_unbounded_sr ? kExitOk : kExitInfeasible;
  }
  throw Error(ErrorKind::kCapability,
              "feasibility decisions exist for cbit and cbit-sr on non-strict games; use "
              "strict-audit for H^4[1/3] or synth for the other resources");
}

int run_sweep(const Options& o, const std::string& figure, int resolution,
              const std::vector<double>& gamma1, int samples) {
  if (figure == "game-space") {
    emit(o, game_space_csv(sweep_game_space(resolution)));
  } else if (figure == "locus") {
    emit(o, locus_csv(sweep_locus(gamma1, samples)));
  } else if (figure == "noise") {
    emit(o, noise_csv(resolution));
  } else {
    throw Error(ErrorKind::kInvalidArgument, "unknown figure '" + figure + "'");
  }
  return kExitOk;
}

Json mixed_json(const MixedStrategy& s) {
  Json j = to_json(s);
  j.erase("type");
  return j;
}

int run_montecarlo(const Options& o, long samples, int refine_top, int workers) {
  const MonteCarloResult r = montecarlo_classical_floor(samples, o.seed, refine_top, workers);
  const ErrorReport best = error_functional(visit_matrix_mixed(r.argmin));
  emit(o, dump({{"samples", r.samples},
                {"seed", o.seed},
                {"refine_top", refine_top},
                {"min_error", r.min_error},
                {"raw_min_error", r.raw_min_error},
                {"argmin", mixed_json(r.argmin)},
                {"raw_argmin", mixed_json(r.raw_argmin)},
                {"diagonal", best.diagonal},
                {"marginal_penalty", best.marginal}}));
  return kExitOk;
}

Json cup_json(const NsBox& b) {
  const CupGameOutcome c = cup_game_success(b);
  Json pairs = Json::object();
  for (size_t k = 0; k < 6; ++k) pairs[CupGameOutcome::kPairs[k]] = c.success[k];
  const double ch = chsh(b);
  return {{"box", to_json(b)},
          {"chsh", ch},
          {"pairs", pairs},
          {"average", c.average},
          {"law_residual", std::abs(c.average - (8.0 + ch) / 12.0)}};
}

int run_nsbox(const Options& o, const std::string& box_path, const std::string& named, int random) {
  Json j;
  j["classical_bound"] = classical_cup_bound();
  if (!box_path.empty()) {
    j["result"] = cup_json(box_from_json(read_json_file(box_path)));
  } else if (random > 0) {
    Rng rng(o.seed);
    double worst = 0.0;
    for (int i = 0; i < random; ++i) {
      const NsBox b = NsBox::random(rng);
      worst = std::max(worst, std::abs(cup_game_success(b).average - (8.0 + chsh(b)) / 12.0));
    }
    j["random_boxes"] = random;
    j["seed"] = o.seed;
    j["max_law_residual"] = worst;
  } else {
    NsBox b;
    if (named == "pr") {
      b = NsBox::pr();
    } else if (named == "product") {
      b = NsBox::product();
    } else if (named == "local") {
      b = NsBox::deterministic(0, 0);
    } else {
      throw Error(ErrorKind::kInvalidArgument, "named box must be pr, product or local");
    }
    j["result"] = cup_json(b);
  }
  emit(o, dump(j));
  return kExitOk;
}

int run_worstcase(const Options& o, long starts) {
  auto entry = [](const GuessStrategy& s, const char* resource) {
    return Json{{"resource", resource},
                {"worst_case_success", worst_case_success(s)},
                {"correlation", to_json(guess_correlation(s))}};
  };
  const WorstCaseBound b = classical_worstcase_bound(3, starts, o.seed);
  emit(o, dump({{"strategies",
                 {entry(explicit_guess_strategy(), "cbit"), entry(sr_guess_strategy(), "cbit-sr"),
                  entry(quantum_guess_strategy(), "qubit")}},
                {"classical_bound", b.value},
                {"numeric_max", b.numeric_max},
                {"starts", b.starts}}));
  return kExitOk;
}

int run_strict_audit(const Options& o, const AuditBudget& budget) {
  const auto rows = order_of_merit_table(collect_merit_evidence(budget));
  bool all = true;
  for (const auto& r : rows) all &= r.holds();
  if (o.format == "json") {
    Json arr = Json::array();
    for (const auto& r : rows) {
      arr.push_back({{"relation", r.relation},
                     {"task", r.task},
                     {"weaker_fails", r.weaker_fails},
                     {"stronger_wins", r.stronger_wins},
                     {"weaker_fails_ok", r.weaker_fails_ok},
                     {"stronger_wins_ok", r.stronger_wins_ok},
                     {"criteria", r.criteria},
                     {"holds", r.holds()}});
    }
    emit(o, dump({{"rows", arr}, {"all_hold", all}}));
  } else {
    emit(o, format_merit_table(rows));
  }
  return all ? kExitOk : kExitInfeasible;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Restaurant-game strategies across communication resources"};
  app.require_subcommand(1);
  app.fallthrough();
  Options o;
  app.add_option("--seed", o.seed, "RNG seed")->envname("COMMGAME_SEED");
  app.add_option("--tol", o.tol, "win tolerance")->check(CLI::PositiveNumber);
  app.add_option("-o,--output", o.output, "write to a file instead of stdout");
  app.add_option("--format", o.format, "json or csv")->check(CLI::IsMember({"json", "csv"}));

  std::string game, strategy, resource, figure = "game-space", box, named = "pr";
  int resolution = 141, samples_per_curve = 40, refine_top = 100, workers = 1, random = 0;
  long samples = 1000000, starts = 200;
  std::vector<double> gamma1{0.1, 0.2, 0.3, 0.4, 0.5, 0.6};
  AuditBudget budget;

  auto* check = app.add_subcommand("check", "verify a strategy against a game");
  check->add_option("--game", game, "game JSON")->required();
  check->add_option("--strategy", strategy, "strategy JSON")->required();

  auto* synth = app.add_subcommand("synth", "construct a winning strategy");
  synth->add_option("--resource", resource, "cbit, cbit-sr, qubit or polygon:<n>")->required();
  synth->add_option("--game", game, "game JSON")->required();

  auto* feas = app.add_subcommand("feasibility", "decide winnability for a classical resource");
  feas->add_option("--resource", resource, "cbit or cbit-sr")->required();
  feas->add_option("--game", game, "game JSON")->required();

  auto* sweep = app.add_subcommand("sweep", "figure data as CSV");
  sweep->add_option("--figure", figure, "game-space, locus or noise")
      ->check(CLI::IsMember({"game-space", "locus", "noise"}));
  sweep->add_option("--resolution", resolution, "grid resolution");
  sweep->add_option("--gamma1", gamma1, "locus gamma1 values");
  sweep->add_option("--samples", samples_per_curve, "points per locus curve");

  auto* mc = app.add_subcommand("montecarlo", "classical floor of the error functional");
  mc->add_option("--samples", samples, "uniform samples")->check(CLI::PositiveNumber);
  mc->add_option("--refine-top", refine_top, "samples refined by compass search");
  mc->add_option("--workers", workers, "threads")->check(CLI::PositiveNumber);

  auto* ns = app.add_subcommand("nsbox", "cup game with a no-signaling box");
  ns->add_option("--box", box, "box JSON");
  ns->add_option("--named", named, "pr, product or local");
  ns->add_option("--random", random, "check the success law on this many random boxes");

  auto* wc = app.add_subcommand("worstcase", "worst-case guessing game");
  wc->add_option("--starts", starts, "multi-starts for the classical bound")->check(CLI::PositiveNumber);

  auto* audit = app.add_subcommand("strict-audit", "order-of-merit table");
  audit->add_option("--starts", budget.sr_starts, "1-bit-SR numeric multi-starts");
  audit->add_option("--polygon-starts", budget.polygon_starts, "starts per polygon");
  audit->add_option("--polygon-max", budget.polygon_max_n, "largest polygon checked");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitError;
  }
  budget.seed = o.seed;
  if (o.format == "csv" && !(check->parsed() || sweep->parsed())) {
    std::cerr << "error: csv output exists for check and sweep only\n";
    return kExitError;
  }
  if (audit->parsed() && !app.get_option("--format")->count()) o.format = "text";

  try {
    if (check->parsed()) return run_check(o, game, strategy);
    if (synth->parsed()) return run_synth(o, resource, game);
    if (feas->parsed()) return run_feasibility(o, resource, game);
    if (sweep->parsed()) return run_sweep(o, figure, resolution, gamma1, samples_per_curve);
    if (mc->parsed()) return run_montecarlo(o, samples, refine_top, workers);
    if (ns->parsed()) return run_nsbox(o, box, named, random);
    if (wc->parsed()) return run_worstcase(o, starts);
    if (audit->parsed()) return run_strict_audit(o, budget);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitError;
  }
  return kExitError;
}
