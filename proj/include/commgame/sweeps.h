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

// Figure data as CSV. Headers are frozen:
//
//   game-space  gamma1,gamma2,gamma3,label
//   locus       gamma1,gamma2,gamma3,theta2,theta3,mid_x,mid_z,residual
//   noise       eps_e,eps_d,boundary_value,advantage
//
// Rows come out in grid order regardless of how they were computed.

#ifndef COMMGAME_SWEEPS_H_
#define COMMGAME_SWEEPS_H_

#include <string>
#include <vector>

namespace commgame {

enum class RegionLabel { kUnphysical, kMixedWinnable, kSrWinnable, kUnwinnable };
const char* region_label_name(RegionLabel l);

struct GameSpacePoint {
  int i = 0, j = 0, k = 0;  // gamma = (i, j, k) / resolution
  double gamma[3] = {0, 0, 0};
  RegionLabel label = RegionLabel::kUnphysical;
};

// Every lattice point of the 3-simplex with denominator `resolution`,
// ordered by i then j. Use a multiple of 3 so 2/3 lies on the grid.
std::vector<GameSpacePoint> sweep_game_space(int resolution);

struct LocusPoint {
  double gamma[3] = {0, 0, 0};
  double theta2 = 0, theta3 = 0;
  double mid_x = 0, mid_z = 0;  // midpoint of the psi_2, psi_3 Bloch vectors
  double residual = 0;
};

// For each gamma1, `samples` games with gamma2 spread over the open range
// that keeps all three gammas in [0, 2/3].
std::vector<LocusPoint> sweep_locus(const std::vector<double>& gamma1_values, int samples = 40);

std::string game_space_csv(const std::vector<GameSpacePoint>& pts);
std::string locus_csv(const std::vector<LocusPoint>& pts);
std::string noise_csv(int resolution);

}  // namespace commgame

#endif  // COMMGAME_SWEEPS_H_
