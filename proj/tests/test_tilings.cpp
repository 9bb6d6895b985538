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

#include "stablecover/tilings.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <map>
#include <set>

using namespace stablecover;

namespace {

const CellComplex& complex_fixture() { return burniat_cell_complex(); }

std::vector<Tiling> all_tilings() {
  static const std::vector<Tiling> tilings = enumerate_tilings(burniat_cell_complex());
  return tilings;
}

std::vector<std::string> orbit_multiset(const Tiling& t) {
  std::vector<std::string> ids;
  for (int c : t.cells) ids.push_back(complex_fixture().catalog()[c].orbitRepId);
  std::sort(ids.begin(), ids.end());
  return ids;
}

}  // namespace

TEST_CASE("the catalog contains 147 distinct cells") {
  REQUIRE(complex_fixture().catalog().size() == 147);
}

TEST_CASE("there are eleven tilings up to symmetry") {
  REQUIRE(all_tilings().size() == 11);
}

TEST_CASE("the trivial tiling verifies") {
  const auto t = trivial_tiling(complex_fixture());
  REQUIRE(verify_tiling(complex_fixture(), t).ok);
}

TEST_CASE("every enumerated tiling verifies") {
  for (const auto& t : all_tilings()) {
    const auto v = verify_tiling(complex_fixture(), t);
    INFO(v.failure);
    REQUIRE(v.ok);
  }
}

TEST_CASE("the expected orbit compositions appear") {
  std::set<std::vector<std::string>> seen;
  for (const auto& t : all_tilings()) seen.insert(orbit_multiset(t));
  // the three-quadric tilings of both kinds
  REQUIRE(seen.count({"1", "1", "1"}) == 1);
  REQUIRE(seen.count({"2", "2", "2"}) == 1);
  // the deepest degeneration glues the three component orbits 6, 7, 9
  REQUIRE(seen.count({"6", "7", "9"}) == 1);
  // the five-line and six-line splittings
  REQUIRE(seen.count({"5", "6"}) == 1);
  REQUIRE(seen.count({"7", "8"}) == 1);
  REQUIRE(seen.count({"3", "3"}) == 1);
  REQUIRE(seen.count({"0"}) == 1);
}

TEST_CASE("two overlapping cells are rejected") {
  // the whole polytope together with any proper cell overlaps
  Tiling bad;
  bad.cells.push_back(trivial_tiling(complex_fixture()).cells[0]);
  for (size_t i = 0; i < complex_fixture().catalog().size(); ++i)
    if (!complex_fixture().catalog()[i].extra.empty()) {
      bad.cells.push_back(static_cast<int>(i));
      break;
    }
  std::sort(bad.cells.begin(), bad.cells.end());
  const auto v = verify_tiling(complex_fixture(), bad);
  REQUIRE_FALSE(v.ok);
  REQUIRE(v.failure.find("overlap") != std::string::npos);
}

TEST_CASE("an incomplete family fails the facet check") {
  // a single half of the six-line splitting leaves its facet unmatched
  for (size_t i = 0; i < complex_fixture().catalog().size(); ++i) {
    const auto& cell = complex_fixture().catalog()[i];
    if (cell.orbitRepId == "8") {
      Tiling partial;
      partial.cells.push_back(static_cast<int>(i));
      const auto v = verify_tiling(complex_fixture(), partial);
      REQUIRE_FALSE(v.ok);
      return;
    }
  }
  FAIL("no cell of orbit 8 in the catalog");
}

TEST_CASE("orbit multisets are invariant under symmetry translates") {
  const size_t groupSize = symmetry_group().elements.size();
  for (const auto& t : all_tilings()) {
    const auto base = orbit_multiset(t);
    for (size_t s = 0; s < groupSize; s += 7) {  // a sample of elements
      Tiling mapped;
      bool ok = true;
      for (int c : t.cells) {
        const int u = complex_fixture().transformed_index(s, c);
        if (u < 0) {
          ok = false;
          break;
        }
        mapped.cells.push_back(u);
      }
      REQUIRE(ok);
      REQUIRE(orbit_multiset(mapped) == base);
    }
  }
}

TEST_CASE("translated tilings still verify") {
  const auto tilings = all_tilings();
  const auto& t = tilings[2];
  const size_t groupSize = symmetry_group().elements.size();
  for (size_t s = 1; s < groupSize; s += 11) {
    Tiling mapped;
    for (int c : t.cells) mapped.cells.push_back(complex_fixture().transformed_index(s, c));
    std::sort(mapped.cells.begin(), mapped.cells.end());
    REQUIRE(verify_tiling(complex_fixture(), mapped).ok);
  }
}

TEST_CASE("facet certificates") {
  const auto& catalog = complex_fixture().catalog();
  // the six-line splitting glues the big component to the quadric across
  // the side-sum hyperplane
  int big = -1, quadric = -1, whole = -1;
  for (size_t i = 0; i < catalog.size(); ++i) {
    if (catalog[i].orbitRepId == "8") big = static_cast<int>(i);
    if (catalog[i].orbitRepId == "7") quadric = static_cast<int>(i);
    if (catalog[i].extra.empty()) whole = static_cast<int>(i);
  }
  REQUIRE(big >= 0);
  REQUIRE(quadric >= 0);
  auto cert = facet_match(catalog[big], catalog[quadric]);
  REQUIRE(cert.has_value());
  // the certificate hyperplane is the big cell's own class
  REQUIRE(cert->coeffs == catalog[big].extra[0].halfspace().coeffs);

  // the whole polytope has no complementary inequality
  REQUIRE_FALSE(facet_match(catalog[whole], catalog[big]).has_value());

  // interior-disjoint but non-adjacent cells do not match
  Cell rowOne;
  for (const auto& row : maximal_cell_table())
    if (row.id == "1") rowOne = row.cell;
  Cell mirrored = transformed(cremona_permutation(), rowOne);
  REQUIRE_FALSE(facet_match(rowOne, mirrored).has_value());
}

TEST_CASE("the three-quadric tiling glues pairwise across flipped classes") {
  // The first splitting is a cycle of three cells: each pair shares a wall
  // with complementary inequalities, and the three double curves meet at a
  // common point.  The certificate recovers the flipped class each time.
  const auto tilings = all_tilings();
  const auto& catalog = complex_fixture().catalog();
  for (const auto& t : tilings) {
    if (orbit_multiset(t) != std::vector<std::string>{"1", "1", "1"}) continue;
    int certificates = 0;
    for (size_t i = 0; i < t.cells.size(); ++i)
      for (size_t j = 0; j < t.cells.size(); ++j) {
        if (i == j) continue;
        const auto cert = facet_match(catalog[t.cells[i]], catalog[t.cells[j]]);
        if (!cert) continue;
        ++certificates;
        // the matched hyperplane is one of cell i's own classes, and cell j
        // sits entirely on the complementary side
        Halfspace reversed = *cert;
        reversed.sense = Sense::Ge;
        REQUIRE(implies(catalog[t.cells[j]].polytope(), reversed));
      }
    REQUIRE(certificates == 6);   // three walls, seen from both sides
    REQUIRE(t.adjacency.size() == 3);  // the cyclic gluing
    // one of the walls is the flip of a0 + a1 + a2 <= 1
    bool flipFound = false;
    for (size_t i = 0; i < t.cells.size() && !flipFound; ++i)
      for (const auto& cls : catalog[t.cells[i]].extra)
        if (cls.str() == "a0+a1+a2<=1") flipFound = true;
    REQUIRE(flipFound);
    return;
  }
  FAIL("three-quadric tiling not found");
}
