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

#include "commgame/sweeps.h"

#include <algorithm>
#include <cstdio>

#include "commgame/classical.h"
#include "commgame/games.h"
#include "commgame/qubit.h"

namespace commgame {

namespace {

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

}  // namespace

const char* region_label_name(RegionLabel l) {
  switch (l) {
    case RegionLabel::kUnphysical: return "unphysical";
    case RegionLabel::kMixedWinnable: return "mixed-winnable";
    case RegionLabel::kSrWinnable: return "sr-winnable";
    case RegionLabel::kUnwinnable: return "unwinnable";
  }
  return "?";
}

std::vector<GameSpacePoint> sweep_game_space(int resolution) {
  if (resolution < 10) {
    throw Error(ErrorKind::kInvalidArgument, "game-space sweep needs resolution >= 10");
  }
  std::vector<GameSpacePoint> out;
  const double res = resolution;
  for (int i = 0; i <= resolution; ++i) {
    for (int j = 0; i + j <= resolution; ++j) {
      GameSpacePoint p;
      p.i = i, p.j = j, p.k = resolution - i - j;
      p.gamma[0] = i / res, p.gamma[1] = j / res, p.gamma[2] = p.k / res;
      // Integer test for gamma > 2/3 keeps the boundary exact.
      if (3 * std::max({p.i, p.j, p.k}) > 2 * resolution) {
        p.label = RegionLabel::kUnphysical;
      } else {
        const GameSpec spec(ProbVector({p.gamma[0], p.gamma[1], p.gamma[2]}));
        if (mixed_feasibility_report(spec).status == Feasibility::kFeasible) {
          p.label = RegionLabel::kMixedWinnable;
        } else if (hull_membership_oracle(spec).feasible_with_unbounded_sr) {
          p.label = RegionLabel::kSrWinnable;
        } else {
          p.label = RegionLabel::kUnwinnable;
        }
      }
      out.push_back(p);
    }
  }
  return out;
}

std::vector<LocusPoint> sweep_locus(const std::vector<double>& gamma1_values, int samples) {
  if (samples < 1) throw Error(ErrorKind::kInvalidArgument, "locus needs samples >= 1");
  std::vector<LocusPoint> out;
  for (double g1 : gamma1_values) {
    if (!(g1 > 0.0 && g1 <= 2.0 / 3.0 + 1e-12)) {
      throw Error(ErrorKind::kInvalidArgument, "locus gamma1 must lie in (0, 2/3]");
    }
    const double lo = std::max(0.0, 1.0 - g1 - 2.0 / 3.0), hi = std::min(2.0 / 3.0, 1.0 - g1);
    for (int s = 1; s <= samples; ++s) {
      LocusPoint p;
      p.gamma[0] = g1;
      p.gamma[1] = lo + (hi - lo) * s / (samples + 1);
      p.gamma[2] = 1.0 - g1 - p.gamma[1];
      const H3Solution sol = synth_h3_general(GameSpec(ProbVector({p.gamma[0], p.gamma[1], p.gamma[2]})));
      p.theta2 = sol.theta2;
      p.theta3 = sol.theta3;
      const auto& e = sol.strategy.encodings;
      p.mid_x = 0.5 * (e[1].x + e[2].x);
      p.mid_z = 0.5 * (e[1].z + e[2].z);
      p.residual = sol.residual;
      out.push_back(p);
    }
  }
  return out;
}

std::string game_space_csv(const std::vector<GameSpacePoint>& pts) {
  std::string s = "gamma1,gamma2,gamma3,label\n";
  for (const auto& p : pts) {
    s += num(p.gamma[0]) + "," + num(p.gamma[1]) + "," + num(p.gamma[2]) + "," +
         region_label_name(p.label) + "\n";
  }
  return s;
}

std::string locus_csv(const std::vector<LocusPoint>& pts) {
  std::string s = "gamma1,gamma2,gamma3,theta2,theta3,mid_x,mid_z,residual\n";
  for (const auto& p : pts) {
    s += num(p.gamma[0]) + "," + num(p.gamma[1]) + "," + num(p.gamma[2]) + "," + num(p.theta2) +
         "," + num(p.theta3) + "," + num(p.mid_x) + "," + num(p.mid_z) + "," + num(p.residual) +
         "\n";
  }
  return s;
}

std::string noise_csv(int resolution) {
  std::string s = "eps_e,eps_d,boundary_value,advantage\n";
  for (const auto& p : noise_advantage_region(resolution)) {
    s += num(p.eps_e) + "," + num(p.eps_d) + "," + num(p.boundary_value) + "," +
         (p.advantage ? "1" : "0") + "\n";
  }
  return s;
}

}  // namespace commgame
