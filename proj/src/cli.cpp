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

#include "discarr/cli.hpp"

#include <algorithm>
#include <fstream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "discarr/constructions.hpp"
#include "discarr/errors.hpp"
#include "discarr/gale.hpp"
#include "discarr/io.hpp"

namespace discarr {

namespace {

struct RunConfig {
  std::string input;
  std::string output;
  std::size_t max_rank = 0;  // 0: derive from n and k
  std::uint64_t seed = 0;
  std::string format = "json";
  std::string family;
  int k = 3;
  int m = 3;
  int n = 8;
  std::string p = "1";
  std::size_t max_family = 4;
  std::size_t budget = 100000;
  std::string cert;
};

void emit(const RunConfig& cfg, const std::string& text, std::ostream& out) {
  if (cfg.output.empty()) {
    out << text;
    return;
  }
  std::ofstream f(cfg.output, std::ios::binary);
  if (!f) throw ParseError("cannot write " + cfg.output);
  f << text;
}

std::string format_set(const Arrangement& a, IndexSet s) {
  auto labels = a.labels_of(s);
  std::sort(labels.begin(), labels.end());
  std::string out = "{";
  for (std::size_t i = 0; i < labels.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(labels[i]);
  }
  return out + "}";
}

Arrangement load_arrangement(const std::string& path) {
  return arrangement_from_json(read_json_file(path));
}

int cmd_check(const RunConfig& cfg, std::ostream& out) {
  const Arrangement a = load_arrangement(cfg.input);
  const DiscriminantalArrangement b(a);
  std::size_t max_rank = cfg.max_rank;
  if (max_rank == 0) {
    const std::size_t top = a.n() - a.k() - 1;
    max_rank = std::max<std::size_t>(1, std::min<std::size_t>(top, 4));
  }
  const auto xs = enumerate_intersections(b, max_rank);
  std::vector<ClassificationReport> reports;
  bool any_nvg = false;
  bool any_gnvg = false;
  std::size_t failures = 0;
  for (const auto& x : xs) {
    reports.push_back(classify(b, x));
    any_nvg |= reports.back().non_very_generic();
    any_gnvg |= reports.back().cls == IntersectionClass::GNVG;
    failures += reports.back().audit_passed() ? 0 : 1;
  }
  const std::string verdict = !any_nvg ? "VG" : (any_gnvg ? "GNVG" : "ANVG");

  if (cfg.format == "text") {
    std::ostringstream t;
    t << "B(n,k,A) with n = " << a.n() << ", k = " << a.k() << ": "
      << b.size() << " hyperplanes, " << xs.size()
      << " intersections up to rank " << max_rank << "\n";
    for (std::size_t i = 0; i < xs.size(); ++i) {
      const auto& r = reports[i];
      if (!r.non_very_generic() && r.audit_passed()) continue;
      t << to_string(r.cls) << " rank " << r.rank << " a_X " << r.a
        << " multiplicity " << r.multiplicity << " ell " << r.ell
        << (r.minimal ? " minimal" : "") << (r.sparse ? " sparse" : "")
        << (r.dense ? " dense" : "") << "\n  components";
      for (auto s : r.presentation.components) t << " " << format_set(a, s);
      t << "\n";
      for (const auto& o : r.audit) {
        t << "  [" << (o.pass ? "pass" : "FAIL") << "] " << o.name;
        if (!o.pass) t << " (" << o.detail << ")";
        t << "\n";
      }
    }
    t << "very generic intersections omitted; audit failures: " << failures
      << "\nverdict: " << verdict << "\n";
    emit(cfg, t.str(), out);
  } else {
    Json j;
    j["n"] = a.n();
    j["k"] = a.k();
    j["max_rank"] = max_rank;
    Json hyperplanes = Json::array();
    for (const auto& h : b.hyperplanes()) {
      Json e;
      e["L"] = index_set_to_json(a, h.L);
      Json normal = Json::array();
      for (const auto& c : h.normal) normal.push_back(scalar_to_json(c));
      e["normal"] = std::move(normal);
      hyperplanes.push_back(std::move(e));
    }
    j["hyperplanes"] = std::move(hyperplanes);
    Json list = Json::array();
    for (std::size_t i = 0; i < xs.size(); ++i) {
      list.push_back(intersection_to_json(b, xs[i], reports[i]));
    }
    j["intersections"] = std::move(list);
    j["audit_failures"] = failures;
    j["verdict"] = verdict;
    emit(cfg, dump(j), out);
  }
  return failures == 0 ? kExitOk : kExitTheoremViolation;
}

ConstructionResult build_family(const RunConfig& cfg) {
  if (cfg.family == "dense-uk") return dense_uk(cfg.k, cfg.seed);
  if (cfg.family == "a2m") return a2m(cfg.m, parse_rational(cfg.p));
  if (cfg.family == "rank2-symmetric") return rank2_symmetric(cfg.n, cfg.seed);
  if (cfg.family == "rank2-general") {
    return rank2_general(cfg.n, cfg.k, cfg.seed);
  }
  if (cfg.family == "example-8-5") return example_8_5();
  throw ConstructionError("unknown family " + cfg.family);
}

std::string sidecar_path(const std::string& output) {
  std::filesystem::path p(output);
  p.replace_extension(".cert.json");
  return p.string();
}

int cmd_generate(const RunConfig& cfg, std::ostream& out) {
  const ConstructionResult c = build_family(cfg);
  write_json_file(cfg.output, arrangement_to_json(c.arrangement));
  write_json_file(sidecar_path(cfg.output), certificate_to_json(c));
  const VerificationOutcome v = verify(c);
  out << "wrote " << cfg.output << " and " << sidecar_path(cfg.output) << "\n";
  out << "verification: " << (v.ok ? "pass" : "FAIL") << "\n";
  for (const auto& m : v.mismatches) out << "  mismatch: " << m << "\n";
  return v.ok ? kExitOk : kExitTheoremViolation;
}

int cmd_gale(const RunConfig& cfg, std::ostream& out) {
  const Arrangement a = load_arrangement(cfg.input);
  const PointConfiguration g = gale_diagram(a);
  const Matrix na = a.normal_matrix();
  const Matrix gb = g.matrix();
  const bool orthogonal = (na * gb.transpose()).is_zero();
  const bool full_rank = rank(gb) == a.n() - a.k();
  const PointConfiguration back = gale_diagram(as_arrangement(g));
  const bool double_dual = same_row_space(back.matrix(), na);
  write_json_file(cfg.output, points_to_json(g));
  out << "wrote " << cfg.output << "\n";
  out << "A*B^T = 0: " << (orthogonal ? "pass" : "FAIL") << "\n";
  out << "rank(B) = n-k: " << (full_rank ? "pass" : "FAIL") << "\n";
  out << "double dual row space: " << (double_dual ? "pass" : "FAIL") << "\n";
  return orthogonal && full_rank && double_dual ? kExitOk
                                                : kExitTheoremViolation;
}

// Number of families of size 1..cap drawn from n hyperplanes, saturating.
std::size_t family_count(std::size_t n, std::size_t cap, std::size_t limit) {
  std::size_t total = 0;
  for (std::size_t s = 1; s <= cap && s <= n; ++s) {
    total += binomial(n, s);
    if (total > limit) return limit + 1;
  }
  return total;
}

int cmd_falk(const RunConfig& cfg, std::ostream& out) {
  const Arrangement a = load_arrangement(cfg.input);
  const FalkComparison falk(a);
  const std::size_t count = falk.discriminantal().size();
  std::size_t checked = 0;
  std::size_t failed = 0;
  auto check = [&](std::span<const std::size_t> ids) {
    ++checked;
    if (!falk.agrees(ids)) ++failed;
  };
  const bool exhaustive =
      family_count(count, cfg.max_family, cfg.budget) <= cfg.budget;
  if (exhaustive) {
    for (std::size_t s = 1; s <= cfg.max_family && s <= count; ++s) {
      std::vector<std::size_t> ids(s);
      for (std::size_t i = 0; i < s; ++i) ids[i] = i;
      while (true) {
        check(ids);
        std::size_t i = s;
        while (i > 0 && ids[i - 1] == count - s + i - 1) --i;
        if (i == 0) break;
        ++ids[i - 1];
        for (std::size_t j = i; j < s; ++j) ids[j] = ids[j - 1] + 1;
      }
    }
  } else {
    SeededRng rng(cfg.seed);
    for (std::size_t t = 0; t < cfg.budget; ++t) {
      const std::size_t s = 1 + t % std::min(cfg.max_family, count);
      std::vector<std::size_t> ids;
      while (ids.size() < s) {
        const auto id = static_cast<std::size_t>(
            rng.uniform(0, static_cast<long>(count) - 1));
        if (std::find(ids.begin(), ids.end(), id) == ids.end()) {
          ids.push_back(id);
        }
      }
      std::sort(ids.begin(), ids.end());
      check(ids);
    }
  }
  Json j;
  j["mode"] = exhaustive ? "exhaustive" : "sampled";
  j["max_family"] = cfg.max_family;
  if (!exhaustive) j["seed"] = cfg.seed;
  if (!cfg.cert.empty()) {
    const Json cert = read_json_file(cfg.cert);
    std::vector<std::size_t> ids;
    for (const auto& L : cert.at("target")) {
      ids.push_back(falk.discriminantal().id_of(
          a.index_set(L.get<std::vector<int>>())));
    }
    const bool ok = falk.agrees(ids);
    j["target_family"] = {{"discriminantal_rank", falk.discriminantal_rank(ids)},
                          {"adjoint_rank", falk.adjoint_rank(ids)},
                          {"pass", ok}};
    failed += ok ? 0 : 1;
    ++checked;
  }
  j["checked"] = checked;
  j["pass"] = checked - failed;
  j["fail"] = failed;
  emit(cfg, dump(j), out);
  return failed == 0 ? kExitOk : kExitTheoremViolation;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"Discriminantal arrangements: lattice, classification, "
               "constructions"};
  app.require_subcommand(1);
  RunConfig cfg;

  auto* check = app.add_subcommand("check", "classify every intersection");
  check->add_option("-i,--input", cfg.input, "arrangement file")->required();
  check->add_option("-o,--output", cfg.output, "report file (default stdout)");
  check->add_option("--max-rank", cfg.max_rank,
                    "highest rank enumerated (default min(n-k-1, 4))")
      ->check(CLI::PositiveNumber);
  check->add_option("--format", cfg.format, "json or text")
      ->check(CLI::IsMember({"json", "text"}));
  check->add_option("--seed", cfg.seed, "unused; accepted for uniformity");

  auto* generate = app.add_subcommand("generate", "write a construction");
  generate->add_option("--family", cfg.family, "construction family")
      ->required()
      ->check(CLI::IsMember({"dense-uk", "a2m", "rank2-symmetric",
                             "rank2-general", "example-8-5"}));
  generate->add_option("-o,--output", cfg.output, "arrangement file")
      ->required();
  generate->add_option("--k", cfg.k, "dimension k");
  generate->add_option("--m", cfg.m, "a2m: number of plane pairs");
  generate->add_option("--n", cfg.n, "number of hyperplanes");
  generate->add_option("--p", cfg.p, "a2m: slope p as p/q");
  generate->add_option("--seed", cfg.seed, "RNG seed");

  auto* gale = app.add_subcommand("gale", "write the Gale diagram");
  gale->add_option("-i,--input", cfg.input, "arrangement file")->required();
  gale->add_option("-o,--output", cfg.output, "point file")->required();

  auto* falk = app.add_subcommand("falk", "compare B(n,k,A) with the adjoint");
  falk->add_option("-i,--input", cfg.input, "arrangement file")->required();
  falk->add_option("-o,--output", cfg.output, "report file (default stdout)");
  falk->add_option("--max-family", cfg.max_family, "largest family size")
      ->check(CLI::PositiveNumber);
  falk->add_option("--budget", cfg.budget,
                   "families checked before switching to sampling")
      ->check(CLI::PositiveNumber);
  falk->add_option("--seed", cfg.seed, "RNG seed for sampling");
  falk->add_option("--cert", cfg.cert, "certificate whose target is checked");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n";
    return kExitParse;
  }

  try {
    if (*check) return cmd_check(cfg, out);
    if (*generate) return cmd_generate(cfg, out);
    if (*gale) return cmd_gale(cfg, out);
    return cmd_falk(cfg, out);
  } catch (const TheoremViolation& e) {
    err << "theorem violation: " << e.what() << "\n";
    return kExitTheoremViolation;
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << "\n";
    return kExitParse;
  } catch (const FieldMismatch& e) {
    err << "field mismatch: " << e.what() << "\n";
    return kExitParse;
  } catch (const nlohmann::json::exception& e) {
    err << "parse error: " << e.what() << "\n";
    return kExitParse;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitDomain;
  }
}

}  // namespace discarr
