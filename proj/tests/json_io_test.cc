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

#include "commgame/json_io.h"

#include <gtest/gtest.h>

#include <string>

namespace commgame {
namespace {

void ExpectRoundTrip(const GameSpec& spec, const AnyStrategy& s) {
  const Verdict before = check_game(spec, visit_matrix_of(s));
  const std::string text = to_json(s).dump();
  const AnyStrategy back = strategy_from_json(parse_json(text));
  const Verdict after = check_game(spec, visit_matrix_of(back));
  EXPECT_EQ(before.wins, after.wins) << spec.label();
  EXPECT_EQ(before.max_violation, after.max_violation) << spec.label();
  EXPECT_EQ(to_json(back).dump(), text);
}

TEST(JsonIo, GameRoundTrip) {
  const GameSpec g(ProbVector({0.4, 0.2, 0.2, 0.2}));
  EXPECT_EQ(game_from_json(parse_json(to_json(g).dump())), g);
  const GameSpec s = GameSpec::strict_uniform(4);
  EXPECT_EQ(game_from_json(to_json(s)), s);
  EXPECT_EQ(game_from_json(parse_json(R"({"gamma":[0.5,0.5]})")), GameSpec::uniform(2));
}

TEST(JsonIo, VisitMatrixOrientation) {
  const VisitMatrix m = visit_matrix_qubit(synth_uniform_odd(3));
  const VisitMatrix back = visit_matrix_from_json(parse_json(to_json(m).dump()));
  EXPECT_EQ(back.visited_major(), m.visited_major());
  Json vm = {{"p", m.visited_major()}, {"orientation", "visited-major"}};
  EXPECT_EQ(visit_matrix_from_json(vm).visited_major(), m.visited_major());
  vm["orientation"] = "sideways";
  EXPECT_THROW(visit_matrix_from_json(vm), Error);
}

TEST(JsonIo, StrategiesRoundTripWithIdenticalVerdicts) {
  const GameSpec g4(ProbVector({0.4, 0.2, 0.2, 0.2}));
  const auto cert = mixed_feasibility(GameSpec::uniform(4));
  ASSERT_TRUE(cert.has_value());
  ExpectRoundTrip(GameSpec::uniform(4), mixed_strategy_from_certificate(*cert, GameSpec::uniform(4)));
  ExpectRoundTrip(GameSpec::uniform(3), synth_sr_strategy(GameSpec::uniform(3)));
  ExpectRoundTrip(GameSpec::strict_uniform(4), strict_sr_protocol(4));
  ExpectRoundTrip(GameSpec::uniform(3), synth_uniform_odd(3));
  ExpectRoundTrip(g4, synth_h4_symmetric(0.4).strategy);
  ExpectRoundTrip(GameSpec::strict_uniform(4), synth_sic_strict());
  ExpectRoundTrip(GameSpec::uniform(3), apply_noise(synth_uniform_odd(3), 0.1, 0.2));
  ExpectRoundTrip(GameSpec::uniform(5), synth_even_gon(5));
}

TEST(JsonIo, NoiseFieldSurvives) {
  QubitStrategy s = synth_uniform_odd(3);
  s.noise = Noise{0.1, 0.3};
  const QubitStrategy back = qubit_from_json(parse_json(to_json(s).dump()));
  ASSERT_TRUE(back.noise.has_value());
  EXPECT_EQ(back.noise->eps_d, 0.3);
}

TEST(JsonIo, BoxRoundTrip) {
  const NsBox pr = NsBox::pr();
  EXPECT_EQ(box_from_json(parse_json(to_json(pr).dump())).c, pr.c);
  EXPECT_THROW(box_from_json(parse_json(R"({"m":[0.5,0.5],"n":[0.5,0.5],"c":[[0.9,0],[0,0]]})")),
               Error);
  EXPECT_THROW(box_from_json(parse_json(R"({"m":[0.5],"n":[0.5,0.5],"c":[[0,0],[0,0]]})")), Error);
}

TEST(JsonIo, ParseErrorsCarryLineAndColumn) {
  try {
    parse_json("{\n  \"gamma\": [0.5,\n  0.5,,]\n}", "game.json");
    FAIL() << "no throw";
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::kParse);
    EXPECT_NE(std::string(e.what()).find("game.json:3:7:"), std::string::npos) << e.what();
  }
  try {
    parse_json("[1, 2", "t");
    FAIL() << "no throw";
  } catch (const Error& e) {
    EXPECT_NE(std::string(e.what()).find("t:1:6:"), std::string::npos) << e.what();
  }
}

TEST(JsonIo, ShapeErrorsNameTheField) {
  try {
    game_from_json(parse_json(R"({"n": 3})"));
    FAIL() << "no throw";
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::kParse);
    EXPECT_NE(std::string(e.what()).find("gamma"), std::string::npos);
  }
  EXPECT_THROW(game_from_json(parse_json(R"({"n": 2, "gamma": [0.3,0.3,0.4]})")), Error);
  EXPECT_THROW(game_from_json(parse_json(R"({"gamma": ["a"]})")), Error);
  EXPECT_THROW(strategy_from_json(parse_json(R"({"type": "telepathy"})")), Error);
  EXPECT_THROW(read_json_file("/nonexistent/game.json"), Error);
}

}  // namespace
}  // namespace commgame
