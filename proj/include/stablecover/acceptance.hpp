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

#ifndef STABLECOVER_ACCEPTANCE_HPP_
#define STABLECOVER_ACCEPTANCE_HPP_

#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "stablecover/strata.hpp"
#include "stablecover/vanishing_order.hpp"

namespace stablecover {

struct AcceptanceResult {
  int id = 0;
  std::string name;
  bool passed = false;
  std::string detail;  // first failure, or a summary of what was checked
};

namespace acceptance_detail {

struct Checker {
  bool ok = true;
  std::string firstFailure;
  int checks = 0;

  void expect(bool condition, const std::string& what) {
    ++checks;
    if (!condition && ok) {
      ok = false;
      firstFailure = what;
    }
  }
};

}  // namespace acceptance_detail

// 1. The maximal-cell enumeration returns exactly the ten symmetry orbits of
//    the table, matched cell by cell.
inline AcceptanceResult acceptance_table_reproduction(int threads = 0) {
  acceptance_detail::Checker c;
  const auto& e = burniat_maximal_cells(threads);
  c.expect(e.orbitRepresentatives.size() == 10,
           "expected 10 orbits, found " + std::to_string(e.orbitRepresentatives.size()));
  std::set<std::string> ids;
  for (const auto& rep : e.orbitRepresentatives) {
    c.expect(!rep.orbitRepId.empty(), "an enumerated orbit matches no table row");
    ids.insert(rep.orbitRepId);
  }
  c.expect(ids.size() == e.orbitRepresentatives.size(), "two orbits matched the same table row");
  for (const auto& row : maximal_cell_table()) {
    const Cell canon = canonical_orbit_representative(row.cell);
    const Cell* matched = nullptr;
    for (const auto& rep : e.orbitRepresentatives)
      if (rep.extra == canon.extra) matched = &rep;
    c.expect(matched != nullptr, "table row " + row.id + " was not reproduced");
    if (!matched) continue;
    // geometric confirmation: some symmetry translate of the printed cell
    // equals the enumerated representative as a set of points
    bool geometric = false;
    for (const auto& sigma : symmetry_group().elements)
      if (polytope_equal(transformed(sigma, row.cell).polytope(), matched->polytope())) {
        geometric = true;
        break;
      }
    c.expect(geometric, "row " + row.id + ": symbolic match without geometric equality");
  }
  AcceptanceResult r{1, "maximal-cell table reproduction", c.ok,
                     c.ok ? "10 orbits, exact match" : c.firstFailure};
  return r;
}

// 2. Every enumerated tiling verifies; degrees sum to 6; there are exactly
//    eleven surface types (tilings up to symmetry), and the census of
//    component-type multisets is exactly the expected nine-element set.
inline AcceptanceResult acceptance_tilings(int threads = 0) {
  acceptance_detail::Checker c;
  auto& complex = burniat_cell_complex(threads);
  const auto tilings = enumerate_tilings(complex, threads);
  for (const auto& t : tilings) {
    const auto v = verify_tiling(complex, t);
    c.expect(v.ok, "tiling failed verification: " + v.failure);
    const auto [sum, conserved] = tiling_invariant(complex, t);
    c.expect(conserved && sum == 6, "degree sum " + format_rational(sum) + " != 6");
  }
  c.expect(tilings.size() == 11,
           "expected 11 surface types (tilings mod symmetry), found " +
               std::to_string(tilings.size()));
  const auto census = surface_census(complex, tilings);
  const std::set<std::vector<std::string>> expected = {
      {"Sigma"},
      {"P1xP1", "P1xP1", "P1xP1"},
      {"F1", "F1"},
      {"P1xP1", "P1xP1", "P2", "P2"},
      {"P1xP1", "P2", "P2", "P2", "P2"},
      {"P2", "P2", "P2", "P2", "P2", "P2"},
      {"F1", "P1xP1", "P2"},
      {"Bl4P2", "P2"},
      {"P1xP1", "P2"},
  };
  {
    std::set<std::vector<std::string>> sortedCensus;
    for (auto types : census) {
      std::sort(types.begin(), types.end());
      sortedCensus.insert(types);
    }
    std::set<std::vector<std::string>> sortedExpected;
    for (auto types : expected) {
      std::sort(types.begin(), types.end());
      sortedExpected.insert(types);
    }
    c.expect(sortedCensus == sortedExpected,
             "component-type census differs from the expected nine multisets (got " +
                 std::to_string(census.size()) + ")");
  }
  AcceptanceResult r{2, "tiling invariants and surface census", c.ok,
                     c.ok ? "11 tilings, degree sums 6, census as expected" : c.firstFailure};
  return r;
}

// 3. Cover invariants of the presets, each computed two ways.
inline AcceptanceResult acceptance_cover_invariants() {
  acceptance_detail::Checker c;
  try {
    const auto camp = cover_invariants(campedelli_preset());
    c.expect(camp.kxSquared == 2 && camp.chiStructureSheaf == 1, "seven-line cover: K^2, chi");
    const auto bur = cover_invariants(burniat_preset());
    c.expect(bur.kxSquared == 6 && bur.chiStructureSheaf == 1, "twelve-divisor cover: K^2, chi");
    const auto u23 = cover_invariants(uniform_preset(2, 3));
    c.expect(u23.kxSquared == camp.kxSquared && u23.chiStructureSheaf == camp.chiStructureSheaf &&
                 u23.degree == camp.degree,
             "U(2,3) differs from the seven-line cover");
    const auto u24 = cover_invariants(uniform_preset(2, 4));
    c.expect(u24.kxSquared == 324, "U(2,4): K^2 = 324");
    // the eigensheaf route is asserted inside cover_invariants; recompute the
    // direct route here as an explicit second evaluation
    c.expect(camp.logSquare * Rational(camp.degree) == camp.kxSquared, "degree scaling");
  } catch (const std::exception& ex) {
    c.expect(false, ex.what());
  }
  return {3, "cover invariants (two routes)", c.ok, c.ok ? "exact values match" : c.firstFailure};
}

// 4. Every classification row round-trips through its witness.
inline AcceptanceResult acceptance_classifier_roundtrip() {
  acceptance_detail::Checker c;
  for (const auto& row : singularity_table()) {
    try {
      const std::string got = row.table == TableKind::Smooth
                                  ? classify_smooth(witness_config_smooth(row)).caseId
                                  : classify_nc(witness_config_nc(row)).caseId;
      c.expect(got == row.caseId, "row " + row.caseId + " classified as " + got);
    } catch (const std::exception& ex) {
      c.expect(false, "row " + row.caseId + ": " + ex.what());
    }
  }
  return {4, "classifier round-trip over all table rows", c.ok,
          c.ok ? std::to_string(singularity_table().size()) + " rows round-trip"
               : c.firstFailure};
}

// 5. Component census over all coincidence pairings of the seven labels.
inline AcceptanceResult acceptance_component_census() {
  acceptance_detail::Checker c;
  const auto labels = nonzero_elements(3);
  std::set<long> seen;
  // enumerate matchings: subsets of disjoint unordered pairs
  std::function<void(size_t, std::vector<std::pair<int, int>>&)> recurse =
      [&](size_t start, std::vector<std::pair<int, int>>& pairs) {
        CoincidencePattern pattern;
        std::set<int> used;
        for (const auto& [i, j] : pairs) {
          pattern.pairs.emplace_back(labels[i], labels[j]);
          used.insert(i);
          used.insert(j);
        }
        for (int i = 0; i < 7; ++i)
          if (!used.count(i)) pattern.singles.push_back(labels[i]);
        seen.insert(component_count(pattern, 3));
        for (size_t i = start; i < labels.size(); ++i) {
          if (used.count(static_cast<int>(i))) continue;
          for (size_t j = i + 1; j < labels.size(); ++j) {
            if (used.count(static_cast<int>(j))) continue;
            pairs.emplace_back(static_cast<int>(i), static_cast<int>(j));
            recurse(i + 1, pairs);
            pairs.pop_back();
          }
        }
      };
  std::vector<std::pair<int, int>> pairs;
  recurse(0, pairs);
  c.expect(seen == std::set<long>({1, 2, 4}), "census produced counts outside {1,2,4}");

  auto pat = [&](std::initializer_list<std::pair<const char*, const char*>> ps,
                 std::initializer_list<const char*> singles) {
    CoincidencePattern p;
    for (const auto& [a, b] : ps) p.pairs.emplace_back(parse_group_elt(a), parse_group_elt(b));
    for (const char* s : singles) p.singles.push_back(parse_group_elt(s));
    return p;
  };
  c.expect(component_count(pat({{"100", "011"}, {"010", "101"}, {"001", "110"}}, {"111"}), 3) == 4,
           "three complementary pairs should give 4 components");
  c.expect(component_count(pat({{"010", "101"}, {"001", "110"}}, {"100", "011", "111"}), 3) == 2,
           "splitting one pair should give 2 components");
  return {5, "seven-label component census", c.ok,
          c.ok ? "counts are exactly {1,2,4}; 8 never occurs" : c.firstFailure};
}

// 6. Boundary catalogs with machine-checked witnesses.
inline AcceptanceResult acceptance_boundary_catalogs() {
  acceptance_detail::Checker c;
  c.expect(campedelli_divisor_orbit_count() == 2, "expected two divisor orbits");
  const auto& catalog = burniat_boundary_catalog();
  c.expect(catalog.size() == 8, "expected eight boundary items");
  const std::vector<std::vector<std::string>> expectedSings = {
      {}, {}, {}, {}, {}, {"2'.2", "3'.3"}, {"2'.1", "2'.2", "3'.2", "3'.3", "4''.10"}, {"3.2"}};
  for (size_t i = 0; i < catalog.size(); ++i) {
    const auto& item = catalog[i];
    auto witness = build_witness(item.witness);
    c.expect(witness.has_value(), "item " + std::to_string(item.id) + ": witness failed");
    if (!witness) continue;
    const auto label = arrangement_lc_scan(*witness);
    if (item.splitting) {
      c.expect(!label.violated.empty(), "item " + std::to_string(item.id) + " should not be lc");
      c.expect(label.classes == item.expectedViolated,
               "item " + std::to_string(item.id) + ": violated labels differ");
    } else {
      c.expect(label.violated.empty(), "item " + std::to_string(item.id) + " should stay lc");
      c.expect(item.singularities == expectedSings[i],
               "item " + std::to_string(item.id) + ": singularity list differs");
      for (const auto& id : item.singularities)
        c.expect(table_fixture(id).occurrence.find('B') != std::string::npos,
                 "case " + id + " is not marked as occurring on these surfaces");
    }
  }
  return {6, "boundary catalogs and witnesses", c.ok,
          c.ok ? "2 divisor orbits; 8 items with checked witnesses" : c.firstFailure};
}

// 7. Exhaustive property sweep of the vanishing-order rules.
inline AcceptanceResult acceptance_vanishing_rules() {
  acceptance_detail::Checker c;
  for (int m = 1; m <= 6 && c.ok; ++m) {
    // case 2
    int prev = 0;
    for (int s = 0; s <= 2 * (2 * m - 1); ++s) {
      int value = -1;
      for (int a1 = 0; a1 < 2 * m; ++a1) {
        const int a2 = s - a1;
        if (a2 < 0 || a2 >= 2 * m) continue;
        MultOrderQuery q;
        q.caseKind = 2;
        q.m = m;
        q.alpha1 = a1;
        q.alpha2 = a2;
        const int v = mult_vanishing_order(q);
        std::swap(q.alpha1, q.alpha2);
        c.expect(v == mult_vanishing_order(q), "case 2 symmetry");
        c.expect(v >= 0 && v <= 3, "case 2 range");
        if (value < 0) value = v;
        c.expect(value == v, "case 2 depends only on the sum");
      }
      if (value >= 0) {
        c.expect(value >= prev, "case 2 monotone in the sum");
        prev = value;
      }
    }
    // case 3
    auto admissible = [&](int beta, int alpha) {
      return beta == 0 ? (alpha >= 0 && alpha < m) : (alpha > 0 && alpha <= m);
    };
    for (int b1 = 0; b1 <= 1; ++b1)
      for (int a1 = 0; a1 <= m; ++a1)
        for (int b2 = 0; b2 <= 1; ++b2)
          for (int a2 = 0; a2 <= m; ++a2) {
            if (!admissible(b1, a1) || !admissible(b2, a2)) continue;
            MultOrderQuery q;
            q.caseKind = 3;
            q.m = m;
            q.beta1 = b1;
            q.alpha1 = a1;
            q.beta2 = b2;
            q.alpha2 = a2;
            const int v = mult_vanishing_order(q);
            std::swap(q.beta1, q.beta2);
            std::swap(q.alpha1, q.alpha2);
            c.expect(v == mult_vanishing_order(q), "case 3 symmetry");
            c.expect(v >= 0 && v <= 3, "case 3 range");
            if (a1 == 0 && b1 == 0 && a2 == 0 && b2 == 0)
              c.expect(v == 0, "trivial restrictions vanish");
          }
  }
  // case 3 at m = 1 vs case 1: the doubled branch component makes one unit
  // of the case-1 rule equal to raw order two
  for (int b1 = 0; b1 <= 1; ++b1)
    for (int b2 = 0; b2 <= 1; ++b2) {
      MultOrderQuery q3;
      q3.caseKind = 3;
      q3.m = 1;
      q3.beta1 = b1;
      q3.alpha1 = b1;
      q3.beta2 = b2;
      q3.alpha2 = b2;
      MultOrderQuery q1;
      q1.caseKind = 1;
      q1.inPerp1 = (b1 == 0);
      q1.inPerp2 = (b2 == 0);
      c.expect(mult_vanishing_order(q3) == 2 * mult_vanishing_order(q1),
               "case 1 specialization at m = 1");
    }
  return {7, "vanishing-order property sweep", c.ok,
          c.ok ? "exhaustive over m = 1..6" : c.firstFailure};
}

// 8. Symmetry group and the quadratic involution.
inline AcceptanceResult acceptance_symmetry() {
  acceptance_detail::Checker c;
  const auto& g = symmetry_group();
  c.expect(g.elements.size() == 48, "group order");
  const auto delta = delta_bur();
  for (const auto& e : g.elements)
    c.expect(polytope_equal(e.apply(delta), delta), "an element moves the weight polytope");
  // involution, isometry, fixes K
  const auto& sigma = surface(SurfaceKind::Sigma);
  c.expect(cremona_map(sigma.canonicalClass) == sigma.canonicalClass, "canonical class fixed");
  const auto& classes = burniat_divisor_classes();
  for (int fam = 0; fam < 3; ++fam) {
    c.expect(cremona_map(classes[4 * fam]) == classes[4 * fam + 3], "0 -> 3 swap");
    c.expect(cremona_map(classes[4 * fam + 3]) == classes[4 * fam], "3 -> 0 swap");
    c.expect(cremona_map(classes[4 * fam + 1]) == classes[4 * fam + 1], "movers fixed");
  }
  for (int i = 0; i < 12; ++i)
    for (int j = 0; j < 12; ++j) {
      c.expect(cremona_map(cremona_map(classes[i])) == classes[i], "involution");
      c.expect(intersect_classes(cremona_map(classes[i]), cremona_map(classes[j]), sigma) ==
                   intersect_classes(classes[i], classes[j], sigma),
               "isometry");
    }
  // the rotation cubes to the involution
  const auto& rho = g.generators[3];
  c.expect(rho.compose(rho).compose(rho) == cremona_permutation(), "rotation cubes correctly");
  return {8, "symmetry group and quadratic involution", c.ok,
          c.ok ? "order 48, all elements preserve the polytope" : c.firstFailure};
}

inline std::vector<AcceptanceResult> run_acceptance(int threads = 0) {
  return {
      acceptance_table_reproduction(threads),
      acceptance_tilings(threads),
      acceptance_cover_invariants(),
      acceptance_classifier_roundtrip(),
      acceptance_component_census(),
      acceptance_boundary_catalogs(),
      acceptance_vanishing_rules(),
      acceptance_symmetry(),
  };
}

}  // namespace stablecover

#endif  // STABLECOVER_ACCEPTANCE_HPP_
