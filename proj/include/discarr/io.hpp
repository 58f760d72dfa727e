// Copyright 2026 The Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "discarr/constructions.hpp"
#include "discarr/gale.hpp"
#include "json.hpp"

namespace discarr {

using Json = nlohmann::ordered_json;

// Scalars: rational values are "p/q" strings (integers are accepted on
// input); quadratic values are {"a": "p/q", "b": "p/q", "d": d}.
Json scalar_to_json(const Scalar& s);
Scalar scalar_from_json(const Json& j);

// Arrangement file:
//   {"k": k, "field": "rational" | {"quadratic": d}, "labels": [...],
//    "normals": [[scalar, ...], ...]}
// "normals" holds one entry per hyperplane (the columns of the k x n normal
// matrix), each of length k. "labels" is optional and defaults to 1..n.
Json arrangement_to_json(const Arrangement& a);
Arrangement arrangement_from_json(const Json& j);

// Same layout with "points" in place of "normals" and "dimension" in place
// of "k".
Json points_to_json(const PointConfiguration& p);
PointConfiguration points_from_json(const Json& j);

// Index sets are written as sorted label lists.
Json index_set_to_json(const Arrangement& a, IndexSet s);

Json certificate_to_json(const ConstructionResult& c);

Json intersection_to_json(const DiscriminantalArrangement& b,
                          const Intersection& x,
                          const ClassificationReport& r);

// Throws ParseError on unreadable files or malformed JSON.
Json read_json_file(const std::filesystem::path& path);
// Two-space indent and a trailing newline.
void write_json_file(const std::filesystem::path& path, const Json& j);
std::string dump(const Json& j);

}  // namespace discarr
