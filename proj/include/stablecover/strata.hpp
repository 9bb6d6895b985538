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

#ifndef STABLECOVER_STRATA_HPP_
#define STABLECOVER_STRATA_HPP_

#include <map>
#include <set>
#include <string>
#include <vector>

#include "stablecover/building_data.hpp"
#include "stablecover/classify.hpp"
#include "stablecover/tilings.hpp"

namespace stablecover {

// Sum of the component degrees 4(K+D)^2 of a tiling; the boolean records the
// conservation identity (the total is always the degree of the undegenerate
// polytope, 6).
inline std::pair<Rational, bool> tiling_invariant(const CellComplex& complex, const Tiling& t) {
  Rational sum(0);
  for (int cell : t.cells) {
    const auto& id = complex.catalog()[cell].orbitRepId;
    if (id.empty()) throw InvalidInput("tiling cell without orbit metadata");
    sum += cell_metadata(id).degree;
  }
  return {sum, sum == 6};
}

// Distinct multisets of component types over a family of tilings.
inline std::set<std::vector<std::string>> surface_census(const CellComplex& complex,
                                                         const std::vector<Tiling>& tilings) {
  std::set<std::vector<std::string>> out;
  for (const auto& t : tilings) {
    std::vector<std::string> types;
    for (int cell : t.cells)
      types.push_back(cell_metadata(complex.catalog()[cell].orbitRepId).componentType);
    std::sort(types.begin(), types.end());
    out.insert(types);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Boundary of the moduli of seven-line covers
// ---------------------------------------------------------------------------

// Coincidence and concurrency data for the seven labeled lines.
struct CampedelliPattern {
  std::vector<std::vector<GroupElt>> concurrencies;        // >= 3 labels meeting at a point
  std::vector<std::pair<GroupElt, GroupElt>> coincidences;  // identified pairs
};

struct CampedelliBoundaryReport {
  struct Concurrency {
    std::vector<GroupElt> labels;
    bool independent = false;     // triples: independent vs zero-sum
    std::string caseId;           // classification row
    std::string singularity;
    std::vector<GroupElt> orbitRepresentative;  // lex-least GL(3,F2) image
  };
  struct Coincidence {
    GroupElt h1, h2;
    std::vector<std::string> singularities;  // case ids along the double line
  };
  std::vector<Concurrency> concurrencies;
  std::vector<Coincidence> coincidences;
};

namespace strata_detail {

inline const std::vector<std::array<GroupElt, 3>>& gl3f2() {
  static const std::vector<std::array<GroupElt, 3>> elements = [] {
    std::vector<std::array<GroupElt, 3>> out;
    for (const auto& x : nonzero_elements(3))
      for (const auto& y : nonzero_elements(3))
        for (const auto& z : nonzero_elements(3))
          if (rank_f2({x, y, z}) == 3) out.push_back({x, y, z});
    return out;
  }();
  return elements;
}

inline GroupElt apply_gl3(const std::array<GroupElt, 3>& m, const GroupElt& v) {
  GroupElt out = zero_elt(3);
  for (int i = 0; i < 3; ++i)
    if (v.coord(i)) out = out + m[i];
  return out;
}

inline std::vector<GroupElt> gl3_orbit_representative(std::vector<GroupElt> labels) {
  std::sort(labels.begin(), labels.end());
  std::vector<GroupElt> best = labels;
  for (const auto& m : gl3f2()) {
    std::vector<GroupElt> image;
    for (const auto& g : labels) image.push_back(apply_gl3(m, g));
    std::sort(image.begin(), image.end());
    if (image < best) best = image;
  }
  return best;
}

}  // namespace strata_detail

// Classifies the boundary data of a degenerate seven-line arrangement: each
// concurrency is classified through the singularity tables (a triple gives
// an ordinary double point for independent labels and the quarter point for
// a zero-sum triple); each coincident pair reports the singularities along
// the double line.  Throws NotSlc for five lines through a point or three
// coincident lines.
inline CampedelliBoundaryReport campedelli_boundary(const CampedelliPattern& pattern) {
  CampedelliBoundaryReport out;
  const auto all = nonzero_elements(3);
  for (const auto& labels : pattern.concurrencies) {
    if (labels.size() < 3) throw InvalidInput("a concurrency involves at least three lines");
    if (labels.size() > 4) throw NotSlc("five or more lines through a point");
    CampedelliBoundaryReport::Concurrency c;
    c.labels = labels;
    LocalBranchConfig cfg;
    cfg.k = 3;
    int comp = 0;
    for (const auto& g : labels) cfg.branches.emplace_back(g, comp++);
    const auto& row = classify_smooth(cfg);
    c.caseId = row.caseId;
    c.singularity = row.singularityTag;
    if (labels.size() == 3) c.independent = (labels[0] + labels[1] + labels[2]) != zero_elt(3);
    c.orbitRepresentative = strata_detail::gl3_orbit_representative(labels);
    out.concurrencies.push_back(std::move(c));
  }
  for (const auto& [h1, h2] : pattern.coincidences) {
    if (h1 == h2) throw InvalidInput("the seven labels are distinct");
    CampedelliBoundaryReport::Coincidence c;
    c.h1 = h1;
    c.h2 = h2;
    // generic point of the double line
    LocalBranchConfig generic;
    generic.k = 3;
    generic.branches = {{h1, 0}, {h2, 0}};
    c.singularities.push_back(classify_smooth(generic).caseId);
    // intersections with the other five lines
    std::set<std::string> rest;
    for (const auto& g : all) {
      if (g == h1 || g == h2) continue;
      LocalBranchConfig cfg;
      cfg.k = 3;
      cfg.branches = {{h1, 0}, {h2, 0}, {g, 1}};
      rest.insert(classify_smooth(cfg).caseId);
    }
    c.singularities.insert(c.singularities.end(), rest.begin(), rest.end());
    out.coincidences.push_back(std::move(c));
  }
  return out;
}

// Exhaustive count of GL(3,F2) orbits of concurrency triples among the seven
// labels: the two boundary divisor classes.
inline int campedelli_divisor_orbit_count() {
  const auto all = nonzero_elements(3);
  std::set<std::vector<GroupElt>> orbits;
  for (size_t i = 0; i < all.size(); ++i)
    for (size_t j = i + 1; j < all.size(); ++j)
      for (size_t k = j + 1; k < all.size(); ++k)
        orbits.insert(strata_detail::gl3_orbit_representative({all[i], all[j], all[k]}));
  return static_cast<int>(orbits.size());
}

// ---------------------------------------------------------------------------
// Boundary of the moduli of twelve-divisor covers
// ---------------------------------------------------------------------------

struct BurniatBoundaryItem {
  int id = 0;                               // 1..8
  bool splitting = false;                   // splits the surface (non-lc) or stays lc
  std::string description;
  std::string caseRef;                      // degeneration case for the splitting items
  std::vector<std::string> orbitIds;        // cell orbits of the generic tiling
  std::vector<std::string> singularities;   // classification rows for the lc items
  DegenerationSpec witness;                 // explicit rational fixture
  std::vector<std::pair<std::vector<int>, int>> expectedViolated;  // label sets
};

inline const std::vector<BurniatBoundaryItem>& burniat_boundary_catalog() {
  static const std::vector<BurniatBoundaryItem> catalog = [] {
    auto slots = [](std::initializer_list<const char*> names) {
      std::vector<int> out;
      for (const char* s : names) out.push_back(coordinate_index(s));
      std::sort(out.begin(), out.end());
      return out;
    };
    std::vector<BurniatBoundaryItem> items(8);

    items[0].id = 1;
    items[0].splitting = true;
    items[0].description = "both lines of one pencil degenerate onto the opposite side";
    items[0].caseRef = "1";
    items[0].orbitIds = {"1"};
    items[0].witness.movers[0] = MoverLine::SideA0;
    items[0].witness.movers[1] = MoverLine::SideA0;
    items[0].expectedViolated = {{slots({"a0", "a1", "a2"}), 1}, {slots({"a1", "a2", "c3"}), 1}};

    items[1].id = 2;
    items[1].splitting = true;
    items[1].description = "three lines from three pencils degenerate onto two sides";
    items[1].caseRef = "2";
    items[1].orbitIds = {"2"};
    items[1].witness.movers[0] = MoverLine::SideA0;  // A1
    items[1].witness.movers[3] = MoverLine::SideA0;  // B2
    items[1].witness.movers[5] = MoverLine::SideB0;  // C2
    items[1].expectedViolated = {{slots({"a0", "a1", "b2"}), 1}, {slots({"a1", "c2", "c3"}), 1}};

    items[2].id = 3;
    items[2].splitting = true;
    items[2].description = "two lines from different pencils degenerate onto one side";
    items[2].caseRef = "6";
    items[2].orbitIds = {"3"};
    items[2].witness.movers[0] = MoverLine::SideA0;  // A1
    items[2].witness.movers[3] = MoverLine::SideA0;  // B2
    items[2].expectedViolated = {{slots({"a0", "a1", "b2"}), 1}};

    items[3].id = 4;
    items[3].splitting = true;
    items[3].description = "five moving lines through a common point";
    items[3].caseRef = "8";
    items[3].orbitIds = {"5", "6"};
    {
      ConcurrencyEvent ev;
      for (int m = 0; m < 5; ++m) ev.movers[m] = true;
      items[3].witness.concurrencies.push_back(ev);
    }
    items[3].expectedViolated = {{slots({"a1", "a2", "b1", "b2", "c1"}), 2}};

    items[4].id = 5;
    items[4].splitting = true;
    items[4].description = "all six moving lines through a common point";
    items[4].caseRef = "9";
    items[4].orbitIds = {"7", "8"};
    {
      ConcurrencyEvent ev;
      for (int m = 0; m < 6; ++m) ev.movers[m] = true;
      items[4].witness.concurrencies.push_back(ev);
    }
    items[4].expectedViolated = {{slots({"a1", "a2", "b1", "b2", "c1", "c2"}), 2}};

    items[5].id = 6;
    items[5].splitting = false;
    items[5].description = "two lines in the same pencil coincide";
    items[5].singularities = {"2'.2", "3'.3"};
    {
      ConcurrencyEvent ev;
      ev.movers[0] = ev.movers[1] = true;  // A1 = A2
      items[5].witness.concurrencies.push_back(ev);
    }

    items[6].id = 7;
    items[6].splitting = false;
    items[6].description = "a line degenerates onto the opposite side plus the exceptional curve";
    items[6].singularities = {"2'.1", "2'.2", "3'.2", "3'.3", "4''.10"};
    items[6].witness.movers[0] = MoverLine::SideA0;  // A1 -> A0 + C3

    items[7].id = 8;
    items[7].splitting = false;
    items[7].description = "three lines in different pencils pass through one point";
    items[7].singularities = {"3.2"};
    {
      ConcurrencyEvent ev;
      ev.movers[0] = ev.movers[2] = ev.movers[4] = true;  // A1, B1, C1
      items[7].witness.concurrencies.push_back(ev);
    }
    return items;
  }();
  return catalog;
}

// Triple point identity for a double curve between two components of a
// normal-crossing central fiber.
inline bool triple_point_check(const Integer& selfIntA, const Integer& selfIntB,
                               const Integer& triplePoints) {
  if (triplePoints < 0) throw InvalidInput("triple point count must be nonnegative");
  return selfIntA + selfIntB + triplePoints == 0;
}

struct SingleComponentReport {
  Rational fourLogSquare;        // 4 (K + D)^2
  bool singleComponentForced = false;
};

// Twice the log canonical class is Cartier and ample on a stable limit, so
// its square 4(K+D)^2 is a positive integer that distributes over the
// components.  A total of 1 admits only the trivial decomposition.
inline SingleComponentReport campedelli_single_component_argument(const BuildingData& bd) {
  const auto inv = cover_invariants(bd);
  SingleComponentReport out;
  out.fourLogSquare = inv.logSquare * 4;
  if (!is_integer(out.fourLogSquare) || out.fourLogSquare <= 0)
    throw InvalidInput("4(K+D)^2 is not a positive integer");
  out.singleComponentForced = (out.fourLogSquare == 1);
  return out;
}

inline SingleComponentReport campedelli_single_component_argument() {
  return campedelli_single_component_argument(campedelli_preset());
}

}  // namespace stablecover

#endif  // STABLECOVER_STRATA_HPP_
