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

#include <fstream>
#include <sstream>

namespace commgame {

namespace {

[[noreturn]] void shape_error(const std::string& what) {
  throw Error(ErrorKind::kParse, what);
}

const Json& field(const Json& j, const char* key) {
  if (!j.is_object()) shape_error("expected a JSON object");
  const auto it = j.find(key);
  if (it == j.end()) shape_error(std::string("missing field \"") + key + "\"");
  return *it;
}

std::vector<double> numbers(const Json& j, const char* key) {
  const Json& a = field(j, key);
  if (!a.is_array()) shape_error(std::string("\"") + key + "\" must be an array of numbers");
  std::vector<double> out;
  for (const auto& v : a) {
    if (!v.is_number()) shape_error(std::string("\"") + key + "\" must be an array of numbers");
    out.push_back(v.get<double>());
  }
  return out;
}

std::vector<std::vector<double>> rows(const Json& j, const char* key) {
  const Json& a = field(j, key);
  if (!a.is_array()) shape_error(std::string("\"") + key + "\" must be a 2-d array");
  std::vector<std::vector<double>> out;
  for (const auto& r : a) {
    if (!r.is_array()) shape_error(std::string("\"") + key + "\" must be a 2-d array");
    std::vector<double> row;
    for (const auto& v : r) {
      if (!v.is_number()) shape_error(std::string("\"") + key + "\" holds a non-number");
      row.push_back(v.get<double>());
    }
    out.push_back(std::move(row));
  }
  return out;
}

Vec3 vec3(const Json& j) {
  if (!j.is_array() || j.size() != 3) shape_error("expected a 3-vector [x, y, z]");
  for (const auto& v : j)
    if (!v.is_number()) shape_error("expected a 3-vector [x, y, z]");
  return {j[0].get<double>(), j[1].get<double>(), j[2].get<double>()};
}

BlochVector bloch(const Json& j) {
  const Vec3 v = vec3(j);
  return {v[0], v[1], v[2]};
}

Json mixed_body(const MixedStrategy& s) {
  return {{"alpha", s.alpha()},
          {"r", std::vector<double>(s.r().entries().begin(), s.r().entries().end())},
          {"q", std::vector<double>(s.q().entries().begin(), s.q().entries().end())}};
}

}  // namespace

Json parse_json(std::string_view text, const std::string& source) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    // Recompute line and column from the byte offset so the message does not
    // depend on the library's wording.
    size_t line = 1, col = 1;
    const size_t stop = std::min(static_cast<size_t>(e.byte), text.size() + 1);
    for (size_t i = 0; i + 1 < stop && i < text.size(); ++i) {
      if (text[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    std::string msg = e.what();
    const auto colon = msg.find(": ");
    if (colon != std::string::npos) msg = msg.substr(colon + 2);
    throw Error(ErrorKind::kParse, source + ":" + std::to_string(line) + ":" +
                                       std::to_string(col) + ": " + msg);
  }
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::kInvalidArgument, "cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_json(ss.str(), path);
}

Json to_json(const GameSpec& g) {
  const auto e = g.gamma().entries();
  return {{"n", g.n()}, {"gamma", std::vector<double>(e.begin(), e.end())}, {"strict", g.strict()}};
}

GameSpec game_from_json(const Json& j) {
  const std::vector<double> gamma = numbers(j, "gamma");
  if (j.contains("n") && field(j, "n").get<int>() != static_cast<int>(gamma.size())) {
    throw Error(ErrorKind::kDimensionMismatch, "\"n\" disagrees with the length of \"gamma\"");
  }
  bool strict = false;
  if (j.contains("strict")) {
    if (!j["strict"].is_boolean()) shape_error("\"strict\" must be a boolean");
    strict = j["strict"].get<bool>();
  }
  return GameSpec(ProbVector(gamma), strict);
}

Json to_json(const VisitMatrix& m) {
  return {{"n", m.n()}, {"p", m.closed_major()}, {"orientation", "closed-major"}};
}

VisitMatrix visit_matrix_from_json(const Json& j) {
  const auto p = rows(j, "p");
  std::string orientation = "closed-major";
  if (j.contains("orientation")) orientation = j["orientation"].get<std::string>();
  if (j.contains("n") && field(j, "n").get<size_t>() != p.size()) {
    throw Error(ErrorKind::kDimensionMismatch, "\"n\" disagrees with the size of \"p\"");
  }
  if (orientation == "closed-major") return VisitMatrix::from_closed_major(p);
  if (orientation == "visited-major") return VisitMatrix(p);
  shape_error("unknown orientation \"" + orientation + "\"");
}

Json to_json(const MixedStrategy& s) {
  Json j = mixed_body(s);
  j["type"] = "mixed";
  return j;
}

Json to_json(const CorrelatedStrategy& s) {
  Json branches = Json::array();
  for (const auto& b : s.branches()) {
    Json e = mixed_body(b.strategy);
    e["weight"] = b.weight;
    branches.push_back(std::move(e));
  }
  return {{"type", "correlated"}, {"branches", branches}, {"sr_bits", s.sr_bits()}};
}

Json to_json(const QubitStrategy& s) {
  Json enc = Json::array(), eff = Json::array();
  for (const auto& e : s.encodings) enc.push_back({e.x, e.y, e.z});
  for (const auto& e : s.decoding.effects) {
    eff.push_back({{"t", e.t}, {"v", {e.v.x, e.v.y, e.v.z}}});
  }
  Json j{{"type", "qubit"}, {"encodings", enc}, {"effects", eff}};
  if (s.noise) j["noise"] = {{"eps_e", s.noise->eps_e}, {"eps_d", s.noise->eps_d}};
  return j;
}

Json to_json(const PolygonStrategy& s) {
  Json enc = Json::array(), eff = Json::array();
  for (const auto& e : s.encodings) enc.push_back(e);
  for (const auto& e : s.effects) eff.push_back(e);
  return {{"type", "polygon"}, {"n", s.theory.n()}, {"encodings", enc},
          {"effects", eff}, {"visit", s.visit}};
}

Json to_json(const PartitionCertificate& c) {
  const auto r = c.r.entries(), q = c.q.entries();
  return {{"X", c.X},
          {"Y", c.Y},
          {"Z", c.Z},
          {"r", std::vector<double>(r.begin(), r.end())},
          {"q", std::vector<double>(q.begin(), q.end())},
          {"alpha_bar_z", c.alpha_bar_z},
          {"residual", c.residual}};
}

Json to_json(const NsBox& b) { return {{"m", b.m}, {"n", b.n}, {"c", b.c}}; }

MixedStrategy mixed_from_json(const Json& j) {
  return MixedStrategy(numbers(j, "alpha"), ProbVector(numbers(j, "r")),
                       ProbVector(numbers(j, "q")));
}

CorrelatedStrategy correlated_from_json(const Json& j) {
  const Json& bs = field(j, "branches");
  if (!bs.is_array()) shape_error("\"branches\" must be an array");
  std::vector<Branch> branches;
  for (const auto& b : bs) {
    const Json& w = field(b, "weight");
    if (!w.is_number()) shape_error("\"weight\" must be a number");
    branches.push_back({w.get<double>(), mixed_from_json(b)});
  }
  if (branches.empty()) shape_error("\"branches\" is empty");
  return CorrelatedStrategy(std::move(branches));
}

QubitStrategy qubit_from_json(const Json& j) {
  QubitStrategy s;
  for (const auto& e : field(j, "encodings")) s.encodings.push_back(bloch(e));
  for (const auto& e : field(j, "effects")) {
    const Json& t = field(e, "t");
    if (!t.is_number()) shape_error("effect \"t\" must be a number");
    s.decoding.effects.push_back({t.get<double>(), bloch(field(e, "v"))});
  }
  if (j.contains("noise")) {
    const Json& nz = j["noise"];
    s.noise = Noise{field(nz, "eps_e").get<double>(), field(nz, "eps_d").get<double>()};
  }
  s.validate();
  return s;
}

PolygonStrategy polygon_from_json(const Json& j) {
  const Json& n = field(j, "n");
  if (!n.is_number_integer()) shape_error("\"n\" must be an integer");
  PolygonStrategy s{PolygonTheory(n.get<int>()), {}, {}, rows(j, "visit")};
  for (const auto& e : field(j, "encodings")) s.encodings.push_back(vec3(e));
  for (const auto& e : field(j, "effects")) s.effects.push_back(vec3(e));
  s.validate();
  return s;
}

NsBox box_from_json(const Json& j) {
  NsBox b;
  const auto m = numbers(j, "m"), n = numbers(j, "n");
  const auto c = rows(j, "c");
  if (m.size() != 2 || n.size() != 2 || c.size() != 2 || c[0].size() != 2 || c[1].size() != 2) {
    throw Error(ErrorKind::kDimensionMismatch, "box needs m[2], n[2] and c[2][2]");
  }
  b.m = {m[0], m[1]};
  b.n = {n[0], n[1]};
  b.c = {{{c[0][0], c[0][1]}, {c[1][0], c[1][1]}}};
  b.validate();
  return b;
}

AnyStrategy strategy_from_json(const Json& j) {
  if (!j.is_object()) shape_error("strategy must be a JSON object");
  const std::string type = j.contains("type") ? j["type"].get<std::string>() : "mixed";
  if (type == "mixed") return mixed_from_json(j);
  if (type == "correlated") return correlated_from_json(j);
  if (type == "qubit") return qubit_from_json(j);
  if (type == "polygon") return polygon_from_json(j);
  shape_error("unknown strategy type \"" + type + "\"");
}

Json to_json(const AnyStrategy& s) {
  return std::visit([](const auto& v) { return to_json(v); }, s);
}

VisitMatrix visit_matrix_of(const AnyStrategy& s) {
  struct {
    VisitMatrix operator()(const MixedStrategy& v) const { return visit_matrix_mixed(v); }
    VisitMatrix operator()(const CorrelatedStrategy& v) const { return visit_matrix_correlated(v); }
    VisitMatrix operator()(const QubitStrategy& v) const { return visit_matrix_qubit(v); }
    VisitMatrix operator()(const PolygonStrategy& v) const { return visit_matrix_polygon(v); }
  } visitor;
  return std::visit(visitor, s);
}

}  // namespace commgame
