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

#include "stablecover/strata.hpp"

#include <catch2/catch_amalgamated.hpp>

using namespace stablecover;

TEST_CASE("degree sums are conserved over all tilings") {
  auto& complex = burniat_cell_complex();
  const auto tilings = enumerate_tilings(complex);
  for (const auto& t : tilings) {
    const auto [sum, conserved] = tiling_invariant(complex, t);
    REQUIRE(conserved);
    REQUIRE(sum == 6);
  }
}

TEST_CASE("the component census") {
  auto& complex = burniat_cell_complex();
  const auto tilings = enumerate_tilings(complex);
  const auto census = surface_census(complex, tilings);
  REQUIRE(census.size() == 9);
  REQUIRE(census.count({"Sigma"}) == 1);
  REQUIRE(census.count({"F1", "F1"}) == 1);
  REQUIRE(census.count({"F1", "P1xP1", "P2"}) == 1);
  REQUIRE(census.count({"Bl4P2", "P2"}) == 1);
}

TEST_CASE("concurrency triples classify completely") {
  const auto labels = nonzero_elements(3);
  int independent = 0, zeroSum = 0;
  for (size_t i = 0; i < labels.size(); ++i)
    for (size_t j = i + 1; j < labels.size(); ++j)
      for (size_t k = j + 1; k < labels.size(); ++k) {
        CampedelliPattern p;
        p.concurrencies = {{labels[i], labels[j], labels[k]}};
        const auto rep = campedelli_boundary(p);
        REQUIRE(rep.concurrencies.size() == 1);
        const auto& c = rep.concurrencies[0];
        if (c.independent) {
          REQUIRE(c.caseId == "3.1");
          REQUIRE(c.singularity == "A_1");
          ++independent;
        } else {
          REQUIRE(c.caseId == "3.2");
          REQUIRE(c.singularity == "1/4(1,1)");
          ++zeroSum;
        }
      }
  // seven lines of the Fano plane are the dependent triples
  REQUIRE(zeroSum == 7);
  REQUIRE(independent == 28);
}

TEST_CASE("exactly two divisor orbits") {
  REQUIRE(campedelli_divisor_orbit_count() == 2);
}

TEST_CASE("a coincident pair carries the three double-line singularities") {
  CampedelliPattern p;
  p.coincidences = {{parse_group_elt("100"), parse_group_elt("011")}};
  const auto rep = campedelli_boundary(p);
  REQUIRE(rep.coincidences.size() == 1);
  REQUIRE(rep.coincidences[0].singularities ==
          std::vector<std::string>{"2'.1", "3'.1", "3'.2"});
}

TEST_CASE("five lines through a point are rejected") {
  CampedelliPattern p;
  p.concurrencies = {{parse_group_elt("100"), parse_group_elt("010"), parse_group_elt("001"),
                      parse_group_elt("110"), parse_group_elt("011")}};
  REQUIRE_THROWS_AS(campedelli_boundary(p), NotSlc);
}

TEST_CASE("the eight boundary items") {
  const auto& catalog = burniat_boundary_catalog();
  REQUIRE(catalog.size() == 8);
  REQUIRE(catalog[5].singularities == std::vector<std::string>{"2'.2", "3'.3"});
  REQUIRE(catalog[6].singularities ==
          std::vector<std::string>{"2'.1", "2'.2", "3'.2", "3'.3", "4''.10"});
  REQUIRE(catalog[7].singularities == std::vector<std::string>{"3.2"});
  for (const auto& item : catalog) {
    auto witness = build_witness(item.witness);
    REQUIRE(witness.has_value());
    const auto label = arrangement_lc_scan(*witness);
    if (item.splitting) {
      REQUIRE(label.classes == item.expectedViolated);
    } else {
      REQUIRE(label.violated.empty());
    }
  }
}

TEST_CASE("lc boundary singularities occur on these covers") {
  for (const auto& item : burniat_boundary_catalog())
    for (const auto& id : item.singularities)
      REQUIRE(table_fixture(id).occurrence.find('B') != std::string::npos);
}

TEST_CASE("triple point identity") {
  REQUIRE(triple_point_check(0, 0, 0));
  // the side of the triangle has square -1; so does the glued section, and
  // two triple points close the identity
  const auto& sigma = surface(SurfaceKind::Sigma);
  const Integer a0sq = self_intersection(burniat_divisor_classes()[0], sigma);
  REQUIRE(a0sq == -1);
  REQUIRE(triple_point_check(a0sq, -1, 2));
  REQUIRE_FALSE(triple_point_check(0, -1, 0));
  REQUIRE_THROWS_AS(triple_point_check(0, 0, -1), InvalidInput);
}

TEST_CASE("the integral-positive-square argument") {
  const auto camp = campedelli_single_component_argument();
  REQUIRE(camp.fourLogSquare == 1);
  REQUIRE(camp.singleComponentForced);
  const auto bur = campedelli_single_component_argument(burniat_preset());
  REQUIRE(bur.fourLogSquare == 6);
  REQUIRE_FALSE(bur.singleComponentForced);
  const auto u24 = campedelli_single_component_argument(uniform_preset(2, 4));
  REQUIRE(u24.fourLogSquare == 81);
  REQUIRE_FALSE(u24.singleComponentForced);
}

TEST_CASE("lc scan is equivariant over the relabeling subgroup on a violated witness") {
  DegenerationSpec spec;
  spec.movers[0] = MoverLine::SideA0;
  spec.movers[1] = MoverLine::SideA0;
  const auto arr = *build_witness(spec);
  const auto base = arrangement_lc_scan(arr);
  REQUIRE(base.classes.size() == 2);
  for (const auto& sigma : relabeling_subgroup()) {
    BurniatArrangement relabeled = arr;
    for (int i = 0; i < 9; ++i) {
      const int target = sigma.perm[arrangement_line_slot(i)];
      for (int j = 0; j < 9; ++j)
        if (arrangement_line_slot(j) == target) relabeled.lines[j] = arr.lines[i];
    }
    std::vector<std::pair<std::vector<int>, int>> expected;
    for (const auto& [cls, bound] : base.classes) {
      std::vector<int> mapped;
      for (int s : cls) mapped.push_back(sigma.perm[s]);
      std::sort(mapped.begin(), mapped.end());
      expected.emplace_back(mapped, bound);
    }
    std::sort(expected.begin(), expected.end());
    REQUIRE(arrangement_lc_scan(relabeled).classes == expected);
  }
}
