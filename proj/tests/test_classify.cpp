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

#include "stablecover/classify.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <random>
#include <set>

using namespace stablecover;

namespace {

LocalBranchConfig smooth_cfg(std::initializer_list<std::pair<const char*, int>> entries) {
  LocalBranchConfig cfg;
  for (const auto& [label, comp] : entries) {
    cfg.branches.emplace_back(parse_group_elt(label), comp);
    cfg.k = cfg.branches.back().first.len;
  }
  return cfg;
}

}  // namespace

TEST_CASE("table fixture lookups") {
  REQUIRE(table_fixture("4.2").singularityTag == "elliptic, F^2=-8");
  REQUIRE(table_fixture("4.2").occurrence == "C");
  REQUIRE(table_fixture("4'.9").singularityTag == "(4'.6)/Z2");
  REQUIRE(table_fixture("4'.9").semiresolution == "pinch");
  REQUIRE(table_fixture("4'.9").occurrence == "B");
  REQUIRE(table_fixture("E2'.1").singularityTag == "deg.cusp(6)");
  REQUIRE(table_fixture("E2'.1").normalizationRefs ==
          std::vector<std::pair<std::string, int>>{{"0.1", 4}, {"2.2", 2}});
  REQUIRE_THROWS_AS(table_fixture("9.99"), UnknownCase);
}

TEST_CASE("fixture is internally consistent") {
  const auto& rows = singularity_table();
  REQUIRE(rows.size() == 97);
  size_t smooth = 0, nc = 0;
  for (const auto& r : rows) (r.table == TableKind::Smooth ? smooth : nc)++;
  REQUIRE(smooth == 16 + 21 + 11);
  REQUIRE(nc == 11 + 38);
}

TEST_CASE("relation strings reproduce their canonical form for plain rows") {
  // For rows without coincidences or twists the printed relation string is
  // already canonical.
  for (const char* id : {"3.2", "3.4", "4.5", "4.7", "4.8", "4'.8", "4''.6"}) {
    const auto& row = table_fixture(id);
    REQUIRE(row.relationsCanonical.str() == row.relationsPrinted);
  }
}

TEST_CASE("classification of three concurrent reduced lines") {
  // independent labels: ordinary double point
  auto rec = classify_smooth(smooth_cfg({{"100", 1}, {"010", 2}, {"001", 3}}));
  REQUIRE(rec.caseId == "3.1");
  REQUIRE(rec.singularityTag == "A_1");
  // zero-sum labels: the 1/4(1,1) point
  auto rec2 = classify_smooth(smooth_cfg({{"100", 1}, {"010", 2}, {"110", 3}}));
  REQUIRE(rec2.caseId == "3.2");
  REQUIRE(rec2.singularityTag == "1/4(1,1)");
}

TEST_CASE("one branch component is smooth") {
  REQUIRE(classify_smooth(smooth_cfg({{"101", 1}})).caseId == "1.1");
}

TEST_CASE("two coincident pairs with relations 12,34") {
  auto rec = classify_smooth(smooth_cfg({{"10", 1}, {"10", 1}, {"01", 2}, {"01", 2}}));
  REQUIRE(rec.caseId == "4''.9");
  REQUIRE(rec.singularityTag == "deg.cusp(4)");
  REQUIRE(rec.occurrence == "B");
}

TEST_CASE("five components are rejected") {
  REQUIRE_THROWS_AS(
      classify_smooth(smooth_cfg({{"100", 1}, {"010", 2}, {"001", 3}, {"110", 4}, {"011", 5}})),
      NotSlc);
}

TEST_CASE("three coincident components are rejected") {
  REQUIRE_THROWS_AS(classify_smooth(smooth_cfg({{"100", 1}, {"010", 1}, {"001", 1}})), NotSlc);
}

TEST_CASE("nc classification examples") {
  NCLocalConfig e1;
  e1.k = 2;
  e1.side1 = {{parse_group_elt("10"), 1}};
  e1.side2 = {{parse_group_elt("10"), 2}};
  REQUIRE(classify_nc(e1).caseId == "E1.1");

  NCLocalConfig r0;
  r0.k = 2;
  r0.doubleCurveLabel = parse_group_elt("10");
  REQUIRE(classify_nc(r0).caseId == "R0.1");
  REQUIRE(classify_nc(r0).singularityTag == "n.c.");

  // relations 01,02,034 with one line on side 1 and three..two on side 2
  const auto& row = table_fixture("R2.8");
  auto cfg = witness_config_nc(row);
  const auto& rec = classify_nc(cfg);
  REQUIRE(rec.caseId == "R2.8");
  REQUIRE(rec.gorenstein.has_value());
  REQUIRE_FALSE(*rec.gorenstein);
  REQUIRE(rec.occurrence == "B");
}

TEST_CASE("nc rejects unequal side counts") {
  NCLocalConfig bad;
  bad.k = 2;
  bad.side1 = {{parse_group_elt("10"), 1}};
  REQUIRE_THROWS_AS(classify_nc(bad), NotSlc);
}

TEST_CASE("R1 twist identification") {
  // relation g0+g1+g2 = 0 is the same cover as g1 = g2
  NCLocalConfig cfg;
  cfg.k = 2;
  cfg.doubleCurveLabel = parse_group_elt("10");
  cfg.side1 = {{parse_group_elt("01"), 1}};
  cfg.side2 = {{parse_group_elt("11"), 2}};
  REQUIRE(classify_nc(cfg).caseId == "R1.1");
}

TEST_CASE("round-trip: every row classifies back to itself") {
  for (const auto& row : singularity_table()) {
    if (row.table == TableKind::Smooth) {
      const auto& rec = classify_smooth(witness_config_smooth(row));
      REQUIRE(rec.caseId == row.caseId);
    } else {
      const auto& rec = classify_nc(witness_config_nc(row));
      REQUIRE(rec.caseId == row.caseId);
    }
  }
}

TEST_CASE("classification is invariant under entry permutations and GL twists") {
  std::mt19937 rng(424242);
  std::vector<std::array<GroupElt, 3>> gl3;
  for (const auto& x : nonzero_elements(3))
    for (const auto& y : nonzero_elements(3))
      for (const auto& z : nonzero_elements(3))
        if (rank_f2({x, y, z}) == 3) gl3.push_back({x, y, z});
  auto apply = [](const std::array<GroupElt, 3>& m, const GroupElt& v) {
    GroupElt out = zero_elt(3);
    for (int i = 0; i < 3; ++i)
      if (v.coord(i)) out = out + m[i];
    return out;
  };

  for (int trial = 0; trial < 200; ++trial) {
    // random slc-admissible configuration over F2^3
    LocalBranchConfig cfg;
    cfg.k = 3;
    const int kComps = 1 + static_cast<int>(rng() % 4);
    const bool pair = kComps >= 2 && (rng() % 2 == 0);
    int comp = 0;
    for (int i = 0; i < kComps; ++i) {
      GroupElt g(3, static_cast<std::uint8_t>(1 + rng() % 7));
      cfg.branches.emplace_back(g, comp);
      if (!(pair && i == 1)) ++comp;
      if (pair && i == 0) {
        GroupElt h(3, static_cast<std::uint8_t>(1 + rng() % 7));
        cfg.branches.emplace_back(h, 0);
        ++i;
      }
    }
    std::string expected;
    try {
      expected = classify_smooth(cfg).caseId;
    } catch (const NoMatch&) {
      continue;  // coincident pair patterns outside the tables do not occur
    }

    // permutation invariance
    auto shuffled = cfg;
    std::shuffle(shuffled.branches.begin(), shuffled.branches.end(), rng);
    REQUIRE(classify_smooth(shuffled).caseId == expected);

    // group automorphism invariance
    const auto& m = gl3[rng() % gl3.size()];
    auto twisted = cfg;
    for (auto& [label, c] : twisted.branches) label = apply(m, label);
    REQUIRE(classify_smooth(twisted).caseId == expected);
  }
}

TEST_CASE("quotient tags are never Gorenstein, plain degenerate cusps always are") {
  for (const auto& row : singularity_table()) {
    if (row.singularityTag.find("/Z") != std::string::npos) {
      REQUIRE(row.gorenstein.has_value());
      REQUIRE_FALSE(*row.gorenstein);
    }
    if (row.singularityTag.rfind("deg.cusp", 0) == 0) {
      REQUIRE(row.gorenstein.has_value());
      REQUIRE(*row.gorenstein);
    }
  }
}

TEST_CASE("normalization references stay inside the reduced table") {
  for (const auto& row : singularity_table()) {
    for (const auto& [refId, count] : row.normalizationRefs) {
      const auto& ref = table_fixture(refId);
      REQUIRE(ref.table == TableKind::Smooth);
      REQUIRE(ref.coincidence == 0);
      if (row.table == TableKind::Smooth) {
        // quotient structure: the normalization pieces have |H| dividing |H|
        REQUIRE(row.hOrder % ref.hOrder == 0);
      }
    }
  }
}

TEST_CASE("gluing compatibility") {
  DoubleCurveCoverData a;
  a.inertiaGenerators = {parse_group_elt("10")};
  a.marks = {{"p", parse_group_elt("01")}, {"q", parse_group_elt("11")}};
  DoubleCurveCoverData b = a;
  REQUIRE(gluing_compatible({a}, {b}, {{0, 0}}));

  // inertia Z/2 vs trivial
  DoubleCurveCoverData c = a;
  c.inertiaGenerators.clear();
  REQUIRE_FALSE(gluing_compatible({a}, {c}, {{0, 0}}));

  // same inertia, different branch-point labels
  DoubleCurveCoverData d = a;
  d.marks = {{"p", parse_group_elt("11")}, {"q", parse_group_elt("01")}};
  REQUIRE_FALSE(gluing_compatible({a}, {d}, {{0, 0}}));
}
