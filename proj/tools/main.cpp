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

// Command line front end: classification of cover singularities, numerical
// invariants of the preset covers, the maximal-cell and tiling enumeration
// of the weight polytope, arrangement scanning, boundary catalogs and the
// full verification suite.  Output is a single JSON report on stdout.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "stablecover/acceptance.hpp"
#include "stablecover/json_io.hpp"

namespace sc = stablecover;

namespace {

int g_threads = 0;

void print_report(const std::string& command, const std::string& status, const sc::Json& payload,
                  const std::vector<std::string>& diagnostics) {
  sc::Json report;
  report["command"] = command;
  report["status"] = status;
  report["payload"] = payload;
  sc::Json diag = sc::Json::array();
  for (const auto& d : diagnostics) diag.push_back(d);
  report["diagnostics"] = diag;
  std::cout << report.dump(2) << "\n";
}

int ok(const std::string& command, const sc::Json& payload) {
  print_report(command, "ok", payload, {});
  return 0;
}

int fail(const std::string& command, const std::string& message) {
  print_report(command, "error", sc::Json::object(), {message});
  return 1;
}

// "110:1,101:1,011:2" -> list of (label, componentId)
std::vector<std::pair<sc::GroupElt, int>> parse_branch_list(const std::string& text) {
  std::vector<std::pair<sc::GroupElt, int>> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    const auto colon = item.find(':');
    const std::string label = item.substr(0, colon);
    int comp = static_cast<int>(out.size());
    if (colon != std::string::npos) comp = std::stoi(item.substr(colon + 1));
    out.emplace_back(sc::parse_group_elt(label), comp);
  }
  return out;
}

sc::Json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw sc::InvalidInput("cannot open file: " + path);
  sc::Json j;
  in >> j;
  return j;
}

sc::BuildingData preset_by_name(const std::string& name) {
  if (name == "campedelli") return sc::campedelli_preset();
  if (name == "burniat") return sc::burniat_preset();
  if (name.rfind("uniform:", 0) == 0) {
    const auto comma = name.find(',', 8);
    if (comma == std::string::npos)
      throw sc::InvalidInput("uniform preset syntax: uniform:m,k");
    const int m = std::stoi(name.substr(8, comma - 8));
    const int k = std::stoi(name.substr(comma + 1));
    return sc::uniform_preset(m, k);
  }
  throw sc::InvalidInput("unknown preset: " + name);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact machinery for degenerations of double-cover surfaces"};
  app.require_subcommand(1);
  app.add_option("--threads", g_threads, "worker threads for enumerations (0 = all cores)");

  int exitCode = 0;
  auto run = [&](const std::string& name, const std::function<int()>& body) {
    try {
      exitCode = body();
    } catch (const std::exception& ex) {
      exitCode = fail(name, ex.what());
    }
  };

  // ---- classify ----
  auto* classify = app.add_subcommand("classify", "classify cover singularities");
  classify->require_subcommand(1);

  auto* point = classify->add_subcommand("point", "point of a smooth surface");
  int pointRank = 0;
  std::string pointBranches;
  point->add_option("--rank", pointRank, "group rank k")->required();
  point->add_option("--branches", pointBranches, "label:componentId list")->required();
  point->callback([&] {
    run("classify point", [&] {
      sc::LocalBranchConfig cfg;
      cfg.k = pointRank;
      cfg.branches = parse_branch_list(pointBranches);
      for (const auto& [label, comp] : cfg.branches)
        if (label.len != pointRank) throw sc::InvalidInput("label length differs from rank");
      return ok("classify point", sc::singularity_record_to_json(sc::classify_smooth(cfg)));
    });
  });

  auto* ncpoint = classify->add_subcommand("ncpoint", "point of a normal-crossing double curve");
  std::string ncRamified, ncSide1, ncSide2;
  ncpoint->add_option("--ramified", ncRamified, "double-curve label when it is branch");
  ncpoint->add_option("--side1", ncSide1, "label:componentId list");
  ncpoint->add_option("--side2", ncSide2, "label:componentId list");
  ncpoint->callback([&] {
    run("classify ncpoint", [&] {
      sc::NCLocalConfig cfg;
      if (!ncRamified.empty()) cfg.doubleCurveLabel = sc::parse_group_elt(ncRamified);
      cfg.side1 = parse_branch_list(ncSide1);
      cfg.side2 = parse_branch_list(ncSide2);
      for (auto& [label, comp] : cfg.side2) comp += 100;  // sides never share components
      return ok("classify ncpoint", sc::singularity_record_to_json(sc::classify_nc(cfg)));
    });
  });

  auto* tableCmd = classify->add_subcommand("table", "look up a classification row");
  std::string tableCase;
  bool tableAll = false;
  tableCmd->add_option("--case", tableCase, "case id, e.g. 3.2 or R2'.8");
  tableCmd->add_flag("--all", tableAll, "dump every row");
  tableCmd->callback([&] {
    run("classify table", [&] {
      if (tableAll) return ok("classify table", sc::singularity_table_to_json());
      if (tableCase.empty()) throw sc::InvalidInput("need --case or --all");
      return ok("classify table", sc::singularity_record_to_json(sc::table_fixture(tableCase)));
    });
  });

  // ---- cover ----
  auto* cover = app.add_subcommand("cover", "numerical data of double covers");
  cover->require_subcommand(1);

  auto* invariants = cover->add_subcommand("invariants", "K^2, chi and the log square");
  std::string invPreset, invFile;
  invariants->add_option("--preset", invPreset, "campedelli | burniat | uniform:m,k");
  invariants->add_option("--file", invFile, "building data JSON file");
  invariants->callback([&] {
    run("cover invariants", [&] {
      if (invPreset.empty() == invFile.empty())
        throw sc::InvalidInput("need exactly one of --preset / --file");
      const sc::BuildingData bd = invPreset.empty()
                                      ? sc::building_data_from_json(load_json_file(invFile))
                                      : preset_by_name(invPreset);
      if (!sc::verify_fundamental_relations(bd))
        throw sc::InvalidInput("building data violates the fundamental relations");
      const auto inv = sc::cover_invariants(bd);
      sc::Json payload;
      payload["k2"] = sc::json_rational(inv.kxSquared);
      payload["chi"] = sc::json_rational(inv.chiStructureSheaf);
      payload["degree"] = inv.degree;
      payload["logSquare"] = sc::json_rational(inv.logSquare);
      payload["standard"] = sc::standardness_check(bd);
      return ok("cover invariants", payload);
    });
  });

  auto* components = cover->add_subcommand("components", "component count of a degenerate cover");
  std::string pairsText, singlesText;
  int componentsRank = 3;
  components->add_option("--pairs", pairsText, "identified pairs, e.g. 100=011,010=101");
  components->add_option("--singles", singlesText, "reduced labels (default: the rest)");
  components->add_option("--rank", componentsRank, "group rank (default 3)");
  components->callback([&] {
    run("cover components", [&] {
      sc::CoincidencePattern pattern;
      std::set<sc::GroupElt> used;
      std::stringstream ss(pairsText);
      std::string item;
      while (std::getline(ss, item, ',')) {
        if (item.empty()) continue;
        const auto eq = item.find('=');
        if (eq == std::string::npos) throw sc::InvalidInput("pair syntax: label=label");
        auto h1 = sc::parse_group_elt(item.substr(0, eq));
        auto h2 = sc::parse_group_elt(item.substr(eq + 1));
        pattern.pairs.emplace_back(h1, h2);
        used.insert(h1);
        used.insert(h2);
      }
      if (!singlesText.empty()) {
        std::stringstream s2(singlesText);
        while (std::getline(s2, item, ',')) {
          if (!item.empty()) pattern.singles.push_back(sc::parse_group_elt(item));
        }
      } else {
        for (const auto& h : sc::nonzero_elements(componentsRank))
          if (!used.count(h)) pattern.singles.push_back(h);
      }
      sc::Json payload;
      payload["components"] = sc::component_count(pattern, componentsRank);
      return ok("cover components", payload);
    });
  });

  // ---- polytope ----
  auto* polytope = app.add_subcommand("polytope", "the weight polytope and its cells");
  polytope->require_subcommand(1);

  auto* enumerate = polytope->add_subcommand("enumerate", "maximal cell orbits");
  enumerate->callback([&] {
    run("polytope enumerate", [&] {
      const auto& e = sc::burniat_maximal_cells(g_threads);
      sc::Json orbits = sc::Json::array();
      for (const auto& rep : e.orbitRepresentatives) {
        sc::Json o = sc::cell_to_json(rep);
        if (!rep.orbitRepId.empty()) {
          const auto md = sc::cell_metadata(rep.orbitRepId);
          o["componentType"] = md.componentType;
          o["degree"] = md.degree;
          if (!md.caseRef.empty()) o["case"] = md.caseRef;
        }
        sc::Json classes = sc::Json::array();
        for (const auto& cls : rep.extra) classes.push_back(cls.str());
        o["classes"] = classes;
        orbits.push_back(o);
      }
      sc::Json payload;
      payload["orbits"] = orbits;
      payload["count"] = orbits.size();
      payload["catalogSize"] = e.allCells.size();
      return ok("polytope enumerate", payload);
    });
  });

  auto* tilings = polytope->add_subcommand("tilings", "all tilings up to symmetry");
  tilings->callback([&] {
    run("polytope tilings", [&] {
      auto& complex = sc::burniat_cell_complex(g_threads);
      const auto list = sc::enumerate_tilings(complex, g_threads);
      sc::Json payload;
      sc::Json arr = sc::Json::array();
      for (const auto& t : list) {
        sc::Json entry = sc::tiling_to_json(complex, t);
        const auto [sum, conserved] = sc::tiling_invariant(complex, t);
        entry["degreeSum"] = sc::json_rational(sum);
        entry["conserved"] = conserved;
        const auto v = sc::verify_tiling(complex, t);
        entry["verified"] = v.ok;
        sc::Json orbitIds = sc::Json::array();
        for (int c : t.cells) orbitIds.push_back(complex.catalog()[c].orbitRepId);
        entry["orbitIds"] = orbitIds;
        arr.push_back(entry);
      }
      payload["tilings"] = arr;
      payload["count"] = arr.size();
      sc::Json census = sc::Json::array();
      for (const auto& types : sc::surface_census(complex, list)) {
        sc::Json m = sc::Json::array();
        for (const auto& s : types) m.push_back(s);
        census.push_back(m);
      }
      payload["census"] = census;
      return ok("polytope tilings", payload);
    });
  });

  auto* dim = polytope->add_subcommand("dim", "dimension of a cell");
  std::string dimFile;
  dim->add_option("--cell", dimFile, "cell JSON file")->required();
  dim->callback([&] {
    run("polytope dim", [&] {
      const auto p = sc::cell_polytope_from_json(load_json_file(dimFile));
      sc::Json payload;
      payload["dimension"] = sc::dimension(p);
      return ok("polytope dim", payload);
    });
  });

  // ---- arrangement ----
  auto* arrangement = app.add_subcommand("arrangement", "exact line-arrangement scans");
  arrangement->require_subcommand(1);
  auto* scan = arrangement->add_subcommand("scan", "log-canonicity scan");
  std::string scanFile;
  scan->add_option("--file", scanFile, "arrangement JSON file")->required();
  scan->callback([&] {
    run("arrangement scan", [&] {
      const auto j = load_json_file(scanFile);
      const std::string kind = j.value("kind", "burniat");
      sc::Json payload;
      if (kind == "burniat") {
        const auto arr = sc::burniat_arrangement_from_json(j);
        const auto label = sc::arrangement_lc_scan(arr);
        payload["lc"] = label.violated.empty();
        sc::Json violated = sc::Json::array();
        for (size_t i = 0; i < label.classes.size(); ++i) {
          sc::Json v;
          sc::Json names = sc::Json::array();
          for (int s : label.classes[i].first) names.push_back(sc::coordinate_names()[s]);
          v["labels"] = names;
          v["bound"] = label.classes[i].second;
          v["halfspace"] = sc::halfspace_to_json(label.violated[i]);
          violated.push_back(v);
        }
        payload["violated"] = violated;
      } else if (kind == "campedelli") {
        const auto arr = sc::campedelli_arrangement_from_json(j);
        const auto pattern = sc::campedelli_pattern_from_lines(arr);
        const auto report = sc::campedelli_boundary(pattern);
        sc::Json conc = sc::Json::array();
        for (const auto& entry : report.concurrencies) {
          sc::Json e;
          sc::Json labels = sc::Json::array();
          for (const auto& g : entry.labels) labels.push_back(g.str());
          e["labels"] = labels;
          e["caseId"] = entry.caseId;
          e["singularity"] = entry.singularity;
          conc.push_back(e);
        }
        payload["concurrencies"] = conc;
        sc::Json coin = sc::Json::array();
        for (const auto& entry : report.coincidences) {
          sc::Json e;
          e["pair"] = sc::Json::array({entry.h1.str(), entry.h2.str()});
          e["singularities"] = entry.singularities;
          coin.push_back(e);
        }
        payload["coincidences"] = coin;
      } else {
        throw sc::InvalidInput("kind must be burniat or campedelli");
      }
      return ok("arrangement scan", payload);
    });
  });

  // ---- boundary ----
  auto* boundary = app.add_subcommand("boundary", "boundary divisor catalogs");
  boundary->require_subcommand(1);
  auto* bCamp = boundary->add_subcommand("campedelli", "seven-line boundary divisors");
  bCamp->callback([&] {
    run("boundary campedelli", [&] {
      sc::Json payload;
      payload["divisorOrbits"] = sc::campedelli_divisor_orbit_count();
      sc::Json examples = sc::Json::array();
      sc::CampedelliPattern independent;
      independent.concurrencies = {{sc::parse_group_elt("100"), sc::parse_group_elt("010"),
                                    sc::parse_group_elt("001")}};
      sc::CampedelliPattern zeroSum;
      zeroSum.concurrencies = {{sc::parse_group_elt("100"), sc::parse_group_elt("010"),
                                sc::parse_group_elt("110")}};
      for (const auto& pattern : {independent, zeroSum}) {
        const auto rep = sc::campedelli_boundary(pattern);
        sc::Json e;
        sc::Json labels = sc::Json::array();
        for (const auto& g : rep.concurrencies[0].labels) labels.push_back(g.str());
        e["labels"] = labels;
        e["caseId"] = rep.concurrencies[0].caseId;
        e["singularity"] = rep.concurrencies[0].singularity;
        examples.push_back(e);
      }
      payload["divisors"] = examples;
      return ok("boundary campedelli", payload);
    });
  });
  auto* bBur = boundary->add_subcommand("burniat", "twelve-divisor boundary items");
  bBur->callback([&] {
    run("boundary burniat", [&] {
      sc::Json items = sc::Json::array();
      for (const auto& item : sc::burniat_boundary_catalog()) {
        sc::Json e;
        e["id"] = item.id;
        e["splitting"] = item.splitting;
        e["description"] = item.description;
        if (!item.caseRef.empty()) e["case"] = item.caseRef;
        if (!item.orbitIds.empty()) e["orbitIds"] = item.orbitIds;
        if (!item.singularities.empty()) e["singularities"] = item.singularities;
        auto witness = sc::build_witness(item.witness);
        if (witness) {
          e["witness"] = sc::burniat_arrangement_to_json(*witness);
          const auto label = sc::arrangement_lc_scan(*witness);
          e["lc"] = label.violated.empty();
        }
        items.push_back(e);
      }
      sc::Json payload;
      payload["items"] = items;
      return ok("boundary burniat", payload);
    });
  });

  // ---- verify ----
  auto* verify = app.add_subcommand("verify", "run the acceptance suite");
  verify->require_subcommand(1);
  auto* verifyAll = verify->add_subcommand("all", "all criteria");
  verifyAll->callback([&] {
    run("verify all", [&] {
      const auto results = sc::run_acceptance(g_threads);
      bool allPassed = true;
      sc::Json arr = sc::Json::array();
      for (const auto& r : results) {
        sc::Json e;
        e["id"] = r.id;
        e["name"] = r.name;
        e["passed"] = r.passed;
        e["detail"] = r.detail;
        arr.push_back(e);
        allPassed = allPassed && r.passed;
        std::cerr << (r.passed ? "[PASS] " : "[FAIL] ") << r.id << " " << r.name << ": "
                  << r.detail << "\n";
      }
      sc::Json payload;
      payload["criteria"] = arr;
      payload["allPassed"] = allPassed;
      print_report("verify all", allPassed ? "ok" : "error", payload,
                   allPassed ? std::vector<std::string>{}
                             : std::vector<std::string>{"acceptance criteria failed"});
      return allPassed ? 0 : 1;
    });
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }
  return exitCode;
}
