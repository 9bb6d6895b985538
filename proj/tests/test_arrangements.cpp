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

#include "stablecover/arrangements.hpp"

#include <catch2/catch_amalgamated.hpp>

#include "stablecover/symmetry.hpp"

using namespace stablecover;

namespace {

std::vector<int> slots(std::initializer_list<const char*> names) {
  std::vector<int> out;
  for (const char* s : names) out.push_back(coordinate_index(s));
  std::sort(out.begin(), out.end());
  return out;
}

DegenerationSpec moversTo(std::initializer_list<std::pair<int, MoverLine>> assignments) {
  DegenerationSpec spec;
  for (const auto& [m, pos] : assignments) spec.movers[m] = pos;
  return spec;
}

}  // namespace

TEST_CASE("the generic arrangement is lc") {
  const auto arr = generic_burniat_arrangement();
  const auto label = arrangement_lc_scan(arr);
  REQUIRE(label.violated.empty());
}

TEST_CASE("broken incidence is rejected") {
  auto arr = generic_burniat_arrangement();
  arr.lines[1] = proj(1, 1, 1);  // A1 no longer passes through P_B
  REQUIRE_THROWS_AS(arrangement_lc_scan(arr), InvalidArrangement);
}

TEST_CASE("both a-movers onto the opposite side") {
  // A1, A2 -> A0 + C3: violated classes along A0 and along E_C
  auto arr = build_witness(moversTo({{0, MoverLine::SideA0}, {1, MoverLine::SideA0}}));
  REQUIRE(arr.has_value());
  const auto label = arrangement_lc_scan(*arr);
  REQUIRE(label.classes.size() == 2);
  REQUIRE(label.classes[0] == std::make_pair(slots({"a0", "a1", "a2"}), 1));
  REQUIRE(label.classes[1] == std::make_pair(slots({"a1", "a2", "c3"}), 1));
}

TEST_CASE("one mover onto a side is harmless") {
  auto arr = build_witness(moversTo({{0, MoverLine::SideA0}}));
  REQUIRE(arr.has_value());
  REQUIRE(arrangement_lc_scan(*arr).violated.empty());
}

TEST_CASE("mixed-family pair onto a side") {
  // A1 -> A0 + C3 and B2 -> A0 + B3
  auto arr = build_witness(moversTo({{0, MoverLine::SideA0}, {3, MoverLine::SideA0}}));
  REQUIRE(arr.has_value());
  const auto label = arrangement_lc_scan(*arr);
  REQUIRE(label.classes.size() == 1);
  REQUIRE(label.classes[0] == std::make_pair(slots({"a0", "a1", "b2"}), 1));
}

TEST_CASE("the three-mover degeneration of the second table row") {
  // A1 -> A0, B2 -> A0, C2 -> B0
  auto arr = build_witness(moversTo(
      {{0, MoverLine::SideA0}, {3, MoverLine::SideA0}, {5, MoverLine::SideB0}}));
  REQUIRE(arr.has_value());
  const auto label = arrangement_lc_scan(*arr);
  REQUIRE(label.classes.size() == 2);
  REQUIRE(label.classes[0] == std::make_pair(slots({"a0", "a1", "b2"}), 1));
  REQUIRE(label.classes[1] == std::make_pair(slots({"a1", "c2", "c3"}), 1));
}

TEST_CASE("side collapse") {
  DegenerationSpec spec;
  spec.collapse = true;
  auto arr = build_witness(spec);
  REQUIRE(arr.has_value());
  const auto label = arrangement_lc_scan(*arr);
  REQUIRE(label.classes.size() == 1);
  REQUIRE(label.classes[0] == std::make_pair(slots({"a0", "b0", "c0"}), 1));
}

TEST_CASE("side collapse dragging a mover") {
  DegenerationSpec spec;
  spec.collapse = true;
  spec.movers[5] = MoverLine::OnCommonLine;  // c2
  auto arr = build_witness(spec);
  REQUIRE(arr.has_value());
  const auto label = arrangement_lc_scan(*arr);
  // the big class plus the two implied exceptional classes
  REQUIRE(label.classes.size() == 3);
  REQUIRE(std::find(label.classes.begin(), label.classes.end(),
                    std::make_pair(slots({"a0", "b0", "c0", "c2"}), 1)) != label.classes.end());
  REQUIRE(std::find(label.classes.begin(), label.classes.end(),
                    std::make_pair(slots({"b0", "b3", "c2"}), 1)) != label.classes.end());
  REQUIRE(std::find(label.classes.begin(), label.classes.end(),
                    std::make_pair(slots({"c0", "c2", "c3"}), 1)) != label.classes.end());
}

TEST_CASE("five movers through a common point") {
  DegenerationSpec spec;
  ConcurrencyEvent ev;
  for (int m = 0; m < 5; ++m) ev.movers[m] = true;  // a1 a2 b1 b2 c1
  spec.concurrencies.push_back(ev);
  auto arr = build_witness(spec);
  REQUIRE(arr.has_value());
  const auto label = arrangement_lc_scan(*arr);
  REQUIRE(label.classes.size() == 1);
  REQUIRE(label.classes[0] ==
          std::make_pair(slots({"a1", "a2", "b1", "b2", "c1"}), 2));
}

TEST_CASE("three movers in different pencils through a point stay lc") {
  DegenerationSpec spec;
  ConcurrencyEvent ev;
  ev.movers[0] = ev.movers[2] = ev.movers[4] = true;  // a1 b1 c1
  spec.concurrencies.push_back(ev);
  auto arr = build_witness(spec);
  REQUIRE(arr.has_value());
  REQUIRE(arrangement_lc_scan(*arr).violated.empty());
}

TEST_CASE("coinciding twin movers stay lc") {
  DegenerationSpec spec;
  ConcurrencyEvent ev;
  ev.movers[0] = ev.movers[1] = true;  // A1 = A2 through a common point
  spec.concurrencies.push_back(ev);
  auto arr = build_witness(spec);
  REQUIRE(arr.has_value());
  REQUIRE(arrangement_lc_scan(*arr).violated.empty());
  // the two lines really coincide
  REQUIRE(arr->lines[1] == arr->lines[2]);
}

TEST_CASE("contradictory positions are unrealizable") {
  auto arr = build_witness(moversTo({{0, MoverLine::SideB0}}));
  REQUIRE_FALSE(arr.has_value());  // a-movers cannot reach the B side
}

TEST_CASE("scan is equivariant under relabelings") {
  // Relabel an arrangement by a kind-preserving symmetry and compare labels.
  const auto spec = moversTo({{0, MoverLine::SideA0}, {1, MoverLine::SideA0}});
  const auto arr = *build_witness(spec);
  const auto base = arrangement_lc_scan(arr);
  for (const auto& sigma : relabeling_subgroup()) {
    // permute the nine lines according to sigma's action on their slots
    BurniatArrangement relabeled = arr;
    for (int i = 0; i < 9; ++i) {
      const int slot = arrangement_line_slot(i);
      const int targetSlot = sigma.perm[slot];
      for (int j = 0; j < 9; ++j)
        if (arrangement_line_slot(j) == targetSlot) relabeled.lines[j] = arr.lines[i];
    }
    DegenerationLabel want;
    std::vector<std::pair<std::vector<int>, int>> classes;
    for (const auto& [cls, bound] : base.classes) {
      std::vector<int> mapped;
      for (int s : cls) mapped.push_back(sigma.perm[s]);
      std::sort(mapped.begin(), mapped.end());
      classes.emplace_back(mapped, bound);
    }
    std::sort(classes.begin(), classes.end());
    const auto got = arrangement_lc_scan(relabeled);
    REQUIRE(got.classes == classes);
  }
}
