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

#include "discarr/io.hpp"

#include <fstream>
#include <sstream>

#include "discarr/errors.hpp"

namespace discarr {

namespace {

Rational rational_from_json(const Json& j) {
  if (j.is_number_integer()) return Rational(j.get<long>());
  if (j.is_string()) return parse_rational(j.get<std::string>());
  throw ParseError("expected a rational as \"p/q\" or an integer, got " +
                   j.dump());
}

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) {
    throw ParseError(std::string("missing field \"") + key + "\"");
  }
  return j.at(key);
}

std::size_t natural(const Json& j, const char* key) {
  const Json& v = field(j, key);
  if (!v.is_number_integer() || v.get<long>() < 0) {
    throw ParseError(std::string("field \"") + key +
                     "\" must be a non-negative integer");
  }
  return v.get<std::size_t>();
}

long radicand_from_json(const Json& j) {
  if (!j.contains("field")) return 0;
  const Json& f = j.at("field");
  if (f.is_string() && f.get<std::string>() == "rational") return 0;
  if (f.is_object() && f.contains("quadratic") &&
      f.at("quadratic").is_number_integer()) {
    const long d = f.at("quadratic").get<long>();
    Scalar::check_radicand(d);
    return d;
  }
  throw ParseError("field must be \"rational\" or {\"quadratic\": d}");
}

Json field_to_json(long d) {
  if (d == 0) return "rational";
  Json f;
  f["quadratic"] = d;
  return f;
}

std::vector<Vector> vectors_from_json(const Json& list, std::size_t dim,
                                      long d, const char* what) {
  if (!list.is_array()) throw ParseError(std::string(what) + " must be a list");
  std::vector<Vector> out;
  for (const auto& row : list) {
    if (!row.is_array() || row.size() != dim) {
      throw ParseError(std::string("each entry of ") + what + " needs " +
                       std::to_string(dim) + " coordinates");
    }
    Vector v;
    for (const auto& e : row) {
      Scalar s = scalar_from_json(e);
      if (s.radicand() != 0 && s.radicand() != d) {
        throw FieldMismatch("coordinate " + s.to_string() +
                            " lies outside the declared field");
      }
      v.push_back(s.in_field(d));
    }
    out.push_back(std::move(v));
  }
  return out;
}

std::vector<int> labels_from_json(const Json& j, std::size_t n) {
  std::vector<int> labels;
  if (!j.contains("labels")) return labels;
  const Json& l = j.at("labels");
  if (!l.is_array() || l.size() != n) {
    throw ParseError("labels must list one integer per hyperplane");
  }
  for (const auto& e : l) {
    if (!e.is_number_integer()) throw ParseError("labels must be integers");
    labels.push_back(e.get<int>());
  }
  return labels;
}

Json vectors_to_json(std::span<const Vector> vs) {
  Json out = Json::array();
  for (const auto& v : vs) {
    Json row = Json::array();
    for (const auto& e : v) row.push_back(scalar_to_json(e));
    out.push_back(std::move(row));
  }
  return out;
}

}  // namespace

Json scalar_to_json(const Scalar& s) {
  if (s.is_rational_value()) return rational_to_string(s.a());
  Json j;
  j["a"] = rational_to_string(s.a());
  j["b"] = rational_to_string(s.b());
  j["d"] = s.radicand();
  return j;
}

Scalar scalar_from_json(const Json& j) {
  if (j.is_object()) {
    const Json& d = field(j, "d");
    if (!d.is_number_integer()) throw ParseError("radicand must be an integer");
    return Scalar::quadratic(rational_from_json(field(j, "a")),
                             rational_from_json(field(j, "b")), d.get<long>());
  }
  return Scalar(rational_from_json(j));
}

Json arrangement_to_json(const Arrangement& a) {
  Json j;
  j["k"] = a.k();
  j["field"] = field_to_json(a.radicand());
  j["labels"] = a.labels();
  j["normals"] = vectors_to_json(a.normals());
  return j;
}

Arrangement arrangement_from_json(const Json& j) {
  const std::size_t k = natural(j, "k");
  const long d = radicand_from_json(j);
  auto normals = vectors_from_json(field(j, "normals"), k, d, "normals");
  auto labels = labels_from_json(j, normals.size());
  return Arrangement(k, std::move(normals), std::move(labels));
}

Json points_to_json(const PointConfiguration& p) {
  long d = 0;
  for (const auto& v : p.points)
    for (const auto& e : v)
      if (e.radicand() != 0) d = e.radicand();
  Json j;
  j["dimension"] = p.dimension;
  j["field"] = field_to_json(d);
  j["labels"] = p.labels;
  j["points"] = vectors_to_json(p.points);
  return j;
}

PointConfiguration points_from_json(const Json& j) {
  PointConfiguration p;
  p.dimension = natural(j, "dimension");
  const long d = radicand_from_json(j);
  p.points = vectors_from_json(field(j, "points"), p.dimension, d, "points");
  p.labels = labels_from_json(j, p.points.size());
  if (p.labels.empty()) {
    for (std::size_t i = 1; i <= p.points.size(); ++i) {
      p.labels.push_back(static_cast<int>(i));
    }
  }
  return p;
}

Json index_set_to_json(const Arrangement& a, IndexSet s) {
  auto labels = a.labels_of(s);
  std::sort(labels.begin(), labels.end());
  return labels;
}

Json certificate_to_json(const ConstructionResult& c) {
  const Arrangement& a = c.arrangement;
  Json j;
  j["family"] = c.family;
  j["seed"] = c.seed;
  j["retries_used"] = c.retries_used;
  Json target = Json::array();
  for (auto s : c.target) target.push_back(index_set_to_json(a, s));
  j["target"] = std::move(target);
  const auto& e = c.expected;
  Json ex;
  Json pres = Json::array();
  for (auto s : e.presentation) pres.push_back(index_set_to_json(a, s));
  ex["components"] = std::move(pres);
  ex["rank"] = e.rank;
  ex["a"] = e.a;
  ex["multiplicity"] = e.multiplicity;
  ex["class"] = to_string(e.cls);
  ex["minimal"] = e.minimal;
  ex["sparse"] = e.sparse;
  ex["dense"] = e.dense;
  j["expected"] = std::move(ex);
  if (c.witness) {
    j["witness_translation"] = vectors_to_json(std::vector<Vector>{*c.witness})[0];
  }
  return j;
}

Json intersection_to_json(const DiscriminantalArrangement& b,
                          const Intersection& x,
                          const ClassificationReport& r) {
  const Arrangement& a = b.base();
  Json j;
  Json cl = Json::array();
  for (auto id : x.closure) cl.push_back(index_set_to_json(a, b[id].L));
  j["closure"] = std::move(cl);
  j["rank"] = x.rank;
  Json comps = Json::array();
  for (auto s : r.presentation.components) {
    comps.push_back(index_set_to_json(a, s));
  }
  j["components"] = std::move(comps);
  j["a"] = r.a;
  j["class"] = to_string(r.cls);
  j["ell"] = r.ell;
  j["multiplicity"] = r.multiplicity;
  j["bba"] = r.bba;
  j["minimal"] = r.minimal;
  j["sparse"] = r.sparse;
  j["dense"] = r.dense;
  Json audit = Json::array();
  for (const auto& o : r.audit) {
    Json e;
    e["name"] = o.name;
    e["pass"] = o.pass;
    audit.push_back(std::move(e));
  }
  j["audit"] = std::move(audit);
  return j;
}

Json read_json_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path.string());
  try {
    return Json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(path.string() + ": " + e.what());
  }
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

void write_json_file(const std::filesystem::path& path, const Json& j) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ParseError("cannot write " + path.string());
  out << dump(j);
  if (!out) throw ParseError("write failed for " + path.string());
}

}  // namespace discarr
