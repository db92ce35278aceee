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

#include "commgame/order_of_merit.h"

#include <gtest/gtest.h>

namespace commgame {
namespace {

TEST(OrderOfMerit, RowsFollowEvidence) {
  MeritEvidence e;
  auto rows = order_of_merit_table(e);
  ASSERT_EQ(rows.size(), 6u);
  for (const auto& r : rows) EXPECT_FALSE(r.holds());
  e.strict4_qubit_wins = true;
  e.strict4_polygon_infeasible = true;
  rows = order_of_merit_table(e);
  EXPECT_TRUE(rows[5].holds());
  EXPECT_FALSE(rows[3].holds());  // still missing the 1-bit-SR failure
  const std::string text = format_merit_table(rows);
  EXPECT_NE(text.find("Polygon <inst Q"), std::string::npos);
  EXPECT_NE(text.find("NOT ESTABLISHED"), std::string::npos);
}

TEST(OrderOfMerit, SmallBudgetEstablishesEveryRow) {
  AuditBudget b;
  b.sr_starts = 200;
  b.polygon_starts = 2;
  b.polygon_max_n = 5;
  const auto rows = order_of_merit_table(collect_merit_evidence(b));
  for (const auto& r : rows) EXPECT_TRUE(r.holds()) << r.relation;
}

}  // namespace
}  // namespace commgame
