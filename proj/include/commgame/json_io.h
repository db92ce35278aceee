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

// JSON forms of the library types.
//
//   game      {"n": 3, "gamma": [...], "strict": false}
//   matrix    {"n": 3, "p": [[...]], "orientation": "closed-major"}
//   mixed     {"type": "mixed", "alpha": [...], "r": [...], "q": [...]}
//   correlated{"type": "correlated", "branches": [{"weight": w, "alpha": ...}]}
//   qubit     {"type": "qubit", "encodings": [[x,y,z]...],
//              "effects": [{"t": t, "v": [x,y,z]}...], "noise": {...}}
//   polygon   {"type": "polygon", "n": sides, "encodings": [[x,y,z]...],
//              "effects": [[x,y,z]...], "visit": [[...]...]}
//   box       {"m": [m0,m1], "n": [n0,n1], "c": [[c00,c01],[c10,c11]]}
//
// Malformed text raises ErrorKind::kParse naming line and column; well-formed
// JSON with the wrong shape raises kParse naming the offending field.

#ifndef COMMGAME_JSON_IO_H_
#define COMMGAME_JSON_IO_H_

#include <string>
#include <string_view>
#include <variant>

#include "commgame/classical.h"
#include "commgame/games.h"
#include "commgame/nsbox.h"
#include "commgame/polygon.h"
#include "commgame/qubit.h"
#include "json.hpp"

namespace commgame {

using Json = nlohmann::json;

Json parse_json(std::string_view text, const std::string& source = "<input>");
Json read_json_file(const std::string& path);

Json to_json(const GameSpec& g);
GameSpec game_from_json(const Json& j);

Json to_json(const VisitMatrix& m);
// Accepts "closed-major" (default) and "visited-major".
VisitMatrix visit_matrix_from_json(const Json& j);

Json to_json(const MixedStrategy& s);
Json to_json(const CorrelatedStrategy& s);
Json to_json(const QubitStrategy& s);
Json to_json(const PolygonStrategy& s);
Json to_json(const PartitionCertificate& c);
Json to_json(const NsBox& b);

MixedStrategy mixed_from_json(const Json& j);
CorrelatedStrategy correlated_from_json(const Json& j);
QubitStrategy qubit_from_json(const Json& j);
PolygonStrategy polygon_from_json(const Json& j);
NsBox box_from_json(const Json& j);

using AnyStrategy = std::variant<MixedStrategy, CorrelatedStrategy, QubitStrategy, PolygonStrategy>;

// Dispatches on "type"; a document without one is read as a mixed strategy.
AnyStrategy strategy_from_json(const Json& j);
Json to_json(const AnyStrategy& s);
VisitMatrix visit_matrix_of(const AnyStrategy& s);

}  // namespace commgame

#endif  // COMMGAME_JSON_IO_H_
