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

#include <filesystem>
#include <fstream>
#include <sstream>

#include "discarr/cli.hpp"
#include "discarr/errors.hpp"
#include "discarr/io.hpp"
#include "doctest.h"
#include "fixtures.hpp"

using namespace discarr;
namespace fs = std::filesystem;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  args.insert(args.begin(), "discarr");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out;
  std::ostringstream err;
  const int code =
      run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

fs::path workdir() {
  const fs::path p = fs::temp_directory_path() / "discarr_io_cli_test";
  fs::create_directories(p);
  return p;
}

std::string write(const fs::path& p, const std::string& text) {
  std::ofstream(p) << text;
  return p.string();
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p);
  std::stringstream s;
  s << in.rdbuf();
  return s.str();
}

}  // namespace

TEST_CASE("scalar JSON") {
  CHECK(scalar_to_json(Scalar(Rational(-3, 4))) == "-3/4");
  const Scalar q = Scalar::quadratic(Rational(1, 2), -2, 5);
  const Json j = scalar_to_json(q);
  CHECK(j["d"] == 5);
  CHECK(scalar_from_json(j) == q);
  CHECK(scalar_from_json(Json(7)) == Scalar(7));
  CHECK_THROWS_AS(scalar_from_json(Json(1.5)), ParseError);
}

TEST_CASE("arrangement files round trip") {
  for (const auto& a : {fixture::random_generic(6, 3, 2),
                        a2m(3, Rational(1)).arrangement,
                        dense_uk(2, 1).arrangement}) {
    const Json j = arrangement_to_json(a);
    const Arrangement back = arrangement_from_json(Json::parse(j.dump()));
    CHECK(back.k() == a.k());
    CHECK(back.labels() == a.labels());
    CHECK(back.normals() == a.normals());
    CHECK(back.radicand() == a.radicand());
  }
  const Json bare = Json::parse(R"({"k": 1, "normals": [[1], ["2/3"]]})");
  const Arrangement b = arrangement_from_json(bare);
  CHECK(b.labels() == std::vector<int>{1, 2});
  CHECK(b.normal(1)[0] == Scalar(Rational(2, 3)));
}

TEST_CASE("malformed arrangement files") {
  CHECK_THROWS_AS(arrangement_from_json(Json::parse(R"({"normals": []})")),
                  ParseError);
  CHECK_THROWS_AS(
      arrangement_from_json(Json::parse(R"({"k": 2, "normals": [[1]]})")),
      ParseError);
  CHECK_THROWS_AS(arrangement_from_json(Json::parse(
                      R"({"k": 1, "field": "complex", "normals": [[1],[2]]})")),
                  ParseError);
  CHECK_THROWS_AS(
      arrangement_from_json(Json::parse(
          R"({"k": 1, "field": {"quadratic": 3},
              "normals": [[1], [{"a": "0", "b": "1", "d": 2}]]})")),
      FieldMismatch);
}

TEST_CASE("point files round trip") {
  const PointConfiguration g = gale_diagram(fixture::random_generic(6, 2, 5));
  const PointConfiguration back = points_from_json(points_to_json(g));
  CHECK(back.dimension == g.dimension);
  CHECK(back.points == g.points);
  CHECK(back.labels == g.labels);
}

TEST_CASE("check: the 8 hyperplane example") {
  const fs::path dir = workdir();
  const std::string file = (dir / "ex85.json").string();
  write_json_file(file, arrangement_to_json(example_8_5().arrangement));
  const Run r = run({"check", "-i", file, "--max-rank", "2"});
  REQUIRE(r.code == kExitOk);
  const Json report = Json::parse(r.out);
  CHECK(report["verdict"] == "ANVG");
  CHECK(report["max_rank"] == 2);
  bool found = false;
  for (const auto& x : report["intersections"]) {
    if (x["class"] == "ANVG" && x["rank"] == 2 && x["multiplicity"] == 4 &&
        x["components"] == Json::parse("[[1,2,3,4,5,6],[1,2,3,4,7,8],"
                                       "[1,2,5,6,7,8],[3,4,5,6,7,8]]")) {
      found = true;
      CHECK(x["a"] == 4);
      CHECK(x["dense"] == false);
    }
  }
  CHECK(found);
  const Run text = run({"check", "-i", file, "--format", "text"});
  CHECK(text.code == kExitOk);
  CHECK(text.out.find("verdict: ANVG") != std::string::npos);
  CHECK(text.out.find("[pass] a_X >= m") != std::string::npos);
}

TEST_CASE("check: a very generic arrangement") {
  const std::string file = (workdir() / "vg.json").string();
  write_json_file(file, arrangement_to_json(fixture::random_generic(5, 2, 7, 50)));
  const Run r = run({"check", "-i", file});
  REQUIRE(r.code == kExitOk);
  const Json report = Json::parse(r.out);
  CHECK(report["verdict"] == "VG");
  CHECK(report["max_rank"] == 2);  // min(n-k-1, 4)
  CHECK(report["hyperplanes"].size() == 10);
  for (const auto& x : report["intersections"]) {
    CHECK(x["class"] == "VG");
    CHECK(x["a"] == x["rank"]);
  }
}

TEST_CASE("exit codes") {
  const fs::path dir = workdir();
  CHECK(run({"check", "-i", write(dir / "bad.json", "{ not json")}).code ==
        kExitParse);
  CHECK(run({"check", "-i", (dir / "missing.json").string()}).code ==
        kExitParse);
  const std::string flat = write(
      dir / "flat.json", R"({"k": 2, "normals": [[1,0],[2,0],[0,1],[1,1]]})");
  CHECK(run({"check", "-i", flat}).code == kExitDomain);
  const std::string mixed = write(
      dir / "mixed.json",
      R"({"k": 1, "normals": [[{"a":"0","b":"1","d":2}], [{"a":"0","b":"1","d":3}]]})");
  CHECK(run({"check", "-i", mixed}).code == kExitParse);
  CHECK(run({"check"}).code == kExitParse);
  CHECK(run({"check", "-i", flat, "--format", "xml"}).code == kExitParse);
  CHECK(run({"check", "-i", flat, "--max-rank", "0"}).code == kExitParse);
  const Run bad_m = run({"generate", "--family", "a2m", "--m", "5", "-o",
                         (dir / "a10.json").string()});
  CHECK(bad_m.code != kExitOk);
  CHECK(bad_m.err.find("m in {3, 4, 6}") != std::string::npos);
  CHECK(run({"generate", "--family", "nope", "-o", "x.json"}).code ==
        kExitParse);
}

TEST_CASE("generate writes files and self-verifies") {
  const fs::path dir = workdir();
  const std::string out = (dir / "dense3.json").string();
  const Run r = run({"generate", "--family", "dense-uk", "--k", "3", "--seed",
                     "7", "-o", out});
  CHECK(r.code == kExitOk);
  CHECK(r.out.find("verification: pass") != std::string::npos);
  const Json cert = read_json_file(dir / "dense3.cert.json");
  CHECK(cert["family"] == "dense-uk");
  CHECK(cert["seed"] == 7);
  CHECK(cert["expected"]["dense"] == true);
  CHECK(cert["expected"]["a"] == 6);
  const Arrangement a = arrangement_from_json(read_json_file(out));
  CHECK(a.n() == 8);

  const std::string ex1 = (dir / "ex_a.json").string();
  const std::string ex2 = (dir / "ex_b.json").string();
  CHECK(run({"generate", "--family", "example-8-5", "-o", ex1}).code == kExitOk);
  CHECK(run({"generate", "--family", "example-8-5", "-o", ex2}).code == kExitOk);
  CHECK(slurp(ex1) == slurp(ex2));
  CHECK(slurp(dir / "ex_a.cert.json") == slurp(dir / "ex_b.cert.json"));
}

TEST_CASE("gale and falk subcommands") {
  const fs::path dir = workdir();
  const std::string ex = (dir / "ex85_g.json").string();
  CHECK(run({"generate", "--family", "example-8-5", "-o", ex}).code == kExitOk);
  const std::string pts = (dir / "ex85_pts.json").string();
  const Run g = run({"gale", "-i", ex, "-o", pts});
  CHECK(g.code == kExitOk);
  CHECK(g.out.find("double dual row space: pass") != std::string::npos);
  CHECK(points_from_json(read_json_file(pts)).dimension == 3);

  const Run f = run({"falk", "-i", ex, "--max-family", "2", "--cert",
                     (dir / "ex85_g.cert.json").string()});
  CHECK(f.code == kExitOk);
  const Json report = Json::parse(f.out);
  CHECK(report["mode"] == "exhaustive");
  CHECK(report["fail"] == 0);
  CHECK(report["checked"] == 28 + 378 + 1);
  CHECK(report["target_family"]["discriminantal_rank"] == 2);
  CHECK(report["target_family"]["adjoint_rank"] == 2);

  const Run s = run({"falk", "-i", ex, "--budget", "500", "--seed", "3"});
  CHECK(s.code == kExitOk);
  const Json sampled = Json::parse(s.out);
  CHECK(sampled["mode"] == "sampled");
  CHECK(sampled["checked"] == 500);
  CHECK(sampled["fail"] == 0);
  CHECK(run({"falk", "-i", ex, "--budget", "500", "--seed", "3"}).out == s.out);
}
