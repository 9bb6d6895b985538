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

#ifndef STABLECOVER_CELLS_HPP_
#define STABLECOVER_CELLS_HPP_

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "stablecover/arrangements.hpp"
#include "stablecover/symmetry.hpp"
#include "stablecover/threading.hpp"

namespace stablecover {

// A constraint class in flat form: the sum of the listed coordinate slots is
// bounded by 1 (coincidence along a curve) or 2 (concurrency at a point).
struct FlatClass {
  std::vector<int> slots;  // sorted
  int bound = 1;

  bool operator==(const FlatClass& o) const { return slots == o.slots && bound == o.bound; }
  bool operator<(const FlatClass& o) const {
    if (bound != o.bound) return bound < o.bound;
    return slots < o.slots;
  }
  Halfspace halfspace() const { return flat_inequality(slots, bound); }
  std::string str() const {
    std::string s;
    for (size_t i = 0; i < slots.size(); ++i) {
      if (i) s += "+";
      s += coordinate_names()[slots[i]];
    }
    s += "<=";
    s += std::to_string(bound);
    return s;
  }
};

// An intersection of the weight polytope with flat constraints.
struct Cell {
  std::vector<FlatClass> extra;  // irredundant defining classes
  std::string orbitRepId;        // "0".."9" after orbit matching

  Polytope polytope() const {
    Polytope p = delta_bur();
    for (const auto& c : extra) p.add(c.halfspace());
    return p;
  }
  bool operator==(const Cell& o) const { return extra == o.extra; }
  bool operator<(const Cell& o) const { return extra < o.extra; }
};

inline Cell transformed(const CoordPermutation& sigma, const Cell& cell) {
  Cell out;
  out.orbitRepId = cell.orbitRepId;
  for (const auto& c : cell.extra) {
    FlatClass f;
    f.bound = c.bound;
    f.slots = sigma.apply_subset(c.slots);
    out.extra.push_back(f);
  }
  std::sort(out.extra.begin(), out.extra.end());
  return out;
}

// Lexicographically least symmetry translate; used both as the orbit
// representative and as the orbit key.
inline Cell canonical_orbit_representative(const Cell& cell) {
  std::optional<Cell> best;
  for (const auto& sigma : symmetry_group().elements) {
    Cell t = transformed(sigma, cell);
    if (!best || t < *best) best = t;
  }
  return *best;
}

// ---------------------------------------------------------------------------
// Generator events
// ---------------------------------------------------------------------------

// A degeneration event together with the flat constraint it certifies.  The
// closure of a set of events (all further coincidences and concurrencies the
// events force) is computed geometrically: an explicit rational witness
// arrangement is built and scanned.
struct CellGenerator {
  Halfspace halfspace;  // the certified constraint
  FlatClass flat;
  std::array<std::optional<MoverLine>, 6> moverPos;
  bool collapse = false;
  std::optional<ConcurrencyEvent> concurrency;
};

inline std::vector<CellGenerator> burniat_cell_generators() {
  std::vector<CellGenerator> out;
  // movers in slot order a1 a2 b1 b2 c1 c2 (indices 0..5)
  const int moverSlot[6] = {1, 2, 5, 6, 9, 10};

  struct CurveSpec {
    int curveSlot;
    std::array<std::pair<int, MoverLine>, 4> attach;  // mover index -> side position
  };
  // Which movers can degenerate onto a position containing each fixed curve,
  // and the pencil position that realizes it.
  const std::vector<CurveSpec> curves = {
      {0, {{{0, MoverLine::SideA0}, {1, MoverLine::SideA0}, {2, MoverLine::SideA0}, {3, MoverLine::SideA0}}}},
      {4, {{{2, MoverLine::SideB0}, {3, MoverLine::SideB0}, {4, MoverLine::SideB0}, {5, MoverLine::SideB0}}}},
      {8, {{{4, MoverLine::SideC0}, {5, MoverLine::SideC0}, {0, MoverLine::SideC0}, {1, MoverLine::SideC0}}}},
      {3, {{{0, MoverLine::SideC0}, {1, MoverLine::SideC0}, {2, MoverLine::SideB0}, {3, MoverLine::SideB0}}}},
      {7, {{{2, MoverLine::SideA0}, {3, MoverLine::SideA0}, {4, MoverLine::SideC0}, {5, MoverLine::SideC0}}}},
      {11, {{{0, MoverLine::SideA0}, {1, MoverLine::SideA0}, {4, MoverLine::SideB0}, {5, MoverLine::SideB0}}}},
  };
  for (const auto& spec : curves) {
    for (int i = 0; i < 4; ++i)
      for (int j = i + 1; j < 4; ++j) {
        CellGenerator g;
        const auto [m1, p1] = spec.attach[i];
        const auto [m2, p2] = spec.attach[j];
        g.moverPos[m1] = p1;
        g.moverPos[m2] = p2;
        g.flat.bound = 1;
        g.flat.slots = {spec.curveSlot, moverSlot[m1], moverSlot[m2]};
        std::sort(g.flat.slots.begin(), g.flat.slots.end());
        g.halfspace = g.flat.halfspace();
        out.push_back(g);
      }
  }
  // the three sides coming together, optionally dragging one mover along
  for (int extra = -1; extra < 6; ++extra) {
    CellGenerator g;
    g.collapse = true;
    g.flat.bound = 1;
    g.flat.slots = {0, 4, 8};
    if (extra >= 0) {
      g.moverPos[extra] = MoverLine::OnCommonLine;
      g.flat.slots.push_back(moverSlot[extra]);
    }
    std::sort(g.flat.slots.begin(), g.flat.slots.end());
    g.halfspace = g.flat.halfspace();
    out.push_back(g);
  }
  // five or six movers through a common point
  for (int skip = -1; skip < 6; ++skip) {
    CellGenerator g;
    ConcurrencyEvent ev;
    g.flat.bound = 2;
    for (int m = 0; m < 6; ++m) {
      if (m == skip) continue;
      ev.movers[m] = true;
      g.flat.slots.push_back(moverSlot[m]);
    }
    std::sort(g.flat.slots.begin(), g.flat.slots.end());
    g.concurrency = ev;
    g.halfspace = g.flat.halfspace();
    out.push_back(g);
  }
  return out;
}

// Merge the events of a generator subset into a single degeneration; returns
// nothing when a mover is forced into two different pencil positions.
inline std::optional<DegenerationSpec> merge_events(const std::vector<const CellGenerator*>& gens) {
  DegenerationSpec spec;
  for (const auto* g : gens)
    if (g->collapse) spec.collapse = true;
  for (const auto* g : gens) {
    for (int m = 0; m < 6; ++m) {
      if (!g->moverPos[m]) continue;
      MoverLine pos = *g->moverPos[m];
      // all side positions merge on the common line once the sides coincide
      if (spec.collapse) pos = MoverLine::OnCommonLine;
      if (spec.movers[m] != MoverLine::Generic && spec.movers[m] != pos) return std::nullopt;
      spec.movers[m] = pos;
    }
    if (g->concurrency) spec.concurrencies.push_back(*g->concurrency);
  }
  return spec;
}

// The full violated-class set of the mildest degeneration realizing the
// events; this is the matroid-theoretic closure of the generator subset.
inline std::optional<std::vector<FlatClass>> closure_classes(
    const std::vector<const CellGenerator*>& gens) {
  auto spec = merge_events(gens);
  if (!spec) return std::nullopt;
  auto witness = build_witness(*spec);
  if (!witness) return std::nullopt;
  const auto label = arrangement_lc_scan(*witness);
  std::vector<FlatClass> out;
  for (const auto& [slots, bound] : label.classes) out.push_back({slots, bound});
  std::sort(out.begin(), out.end());
  return out;
}

// Drops every class implied by the others inside the weight polytope.
inline std::vector<FlatClass> irredundant_classes(std::vector<FlatClass> classes) {
  std::sort(classes.begin(), classes.end());
  for (size_t i = classes.size(); i-- > 0;) {
    Polytope p = delta_bur();
    for (size_t j = 0; j < classes.size(); ++j)
      if (j != i) p.add(classes[j].halfspace());
    if (implies(p, classes[i].halfspace())) classes.erase(classes.begin() + i);
  }
  return classes;
}

struct MaximalCellEnumeration {
  std::vector<Cell> orbitRepresentatives;  // canonical, sorted
  std::vector<Cell> allCells;              // every symmetry translate, sorted
};

namespace cells_detail {

// canonical encoding of a merged degeneration (movers, collapse flag and the
// sorted concurrency masks); used to dedupe event subsets before any
// geometry runs
inline std::string state_key(const DegenerationSpec& spec) {
  std::string key;
  for (int m = 0; m < 6; ++m) key += static_cast<char>('0' + static_cast<int>(spec.movers[m]));
  key += spec.collapse ? 'L' : '.';
  std::vector<int> masks;
  for (const auto& ev : spec.concurrencies) {
    int mask = 0;
    for (int m = 0; m < 6; ++m)
      if (ev.movers[m]) mask |= 1 << m;
    masks.push_back(mask);
  }
  std::sort(masks.begin(), masks.end());
  for (int mask : masks) {
    key += ':';
    key += std::to_string(mask);
  }
  return key;
}

}  // namespace cells_detail

// Enumerates all subsets of at most three generator events, closes each
// subset geometrically, keeps the eight-dimensional intersections with the
// weight polytope, and reduces modulo the symmetry group.
inline MaximalCellEnumeration enumerate_maximal_cells(const std::vector<CellGenerator>& generators,
                                                      int threads = 0) {
  // collect candidate subsets (indices)
  std::vector<std::vector<int>> subsets;
  subsets.push_back({});
  const int n = static_cast<int>(generators.size());
  for (int i = 0; i < n; ++i) {
    subsets.push_back({i});
    for (int j = i + 1; j < n; ++j) {
      subsets.push_back({i, j});
      for (int k = j + 1; k < n; ++k) subsets.push_back({i, j, k});
    }
  }

  // distinct merged degenerations
  std::map<std::string, DegenerationSpec> states;
  for (const auto& subset : subsets) {
    std::vector<const CellGenerator*> gens;
    for (int g : subset) gens.push_back(&generators[g]);
    auto spec = merge_events(gens);
    if (!spec) continue;
    states.emplace(cells_detail::state_key(*spec), *spec);
  }

  // scan one witness per state
  std::vector<const DegenerationSpec*> stateList;
  for (const auto& [key, spec] : states) stateList.push_back(&spec);
  std::vector<std::optional<std::vector<FlatClass>>> scanned(stateList.size());
  parallel_for(stateList.size(), threads, [&](size_t i) {
    auto witness = build_witness(*stateList[i]);
    if (!witness) return;
    const auto label = arrangement_lc_scan(*witness);
    std::vector<FlatClass> classes;
    for (const auto& [slots, bound] : label.classes) classes.push_back({slots, bound});
    std::sort(classes.begin(), classes.end());
    scanned[i] = std::move(classes);
  });

  std::set<std::vector<FlatClass>> distinctClassSets;
  for (auto& c : scanned)
    if (c) distinctClassSets.insert(*c);

  // keep the full-dimensional intersections
  std::vector<std::vector<FlatClass>> candidates(distinctClassSets.begin(),
                                                 distinctClassSets.end());
  std::vector<char> fullDim(candidates.size(), 0);
  parallel_for(candidates.size(), threads, [&](size_t i) {
    Polytope p = delta_bur();
    for (const auto& c : candidates[i]) p.add(c.halfspace());
    fullDim[i] = has_strict_point(p) ? 1 : 0;
  });
  std::set<std::vector<FlatClass>> classSets;
  for (size_t i = 0; i < candidates.size(); ++i)
    if (fullDim[i]) classSets.insert(candidates[i]);

  // reduce each candidate to its irredundant form, then dedupe again
  std::vector<std::vector<FlatClass>> candidateList(classSets.begin(), classSets.end());
  std::vector<std::vector<FlatClass>> reducedList(candidateList.size());
  parallel_for(candidateList.size(), threads,
               [&](size_t i) { reducedList[i] = irredundant_classes(candidateList[i]); });
  std::set<std::vector<FlatClass>> reduced(reducedList.begin(), reducedList.end());

  // Dedupe by the canonical constraint form.  For irredundant descriptions
  // the facet hyperplanes determine the canonical rows, so cells are equal
  // as point sets exactly when their forms agree.  Classes summing the side
  // coordinates and those summing the exceptional ones describe the same
  // hyperplane here, so this step is not optional.
  std::map<std::string, Cell> distinctByForm;
  for (const auto& classes : reduced) {
    Cell cell;
    cell.extra = classes;
    auto [it, inserted] = distinctByForm.emplace(polytope_form_key(cell.polytope()), cell);
    if (!inserted && cell.extra < it->second.extra) it->second = cell;
  }
  std::vector<Cell> distinct;
  for (const auto& [key, cell] : distinctByForm) distinct.push_back(cell);

  // orbit reduction
  std::set<Cell> reps;
  for (const auto& cell : distinct) reps.insert(canonical_orbit_representative(cell));

  MaximalCellEnumeration out;
  out.orbitRepresentatives.assign(reps.begin(), reps.end());

  // Expand the orbits to the full catalog, deduping geometrically: a single
  // cell can carry several equivalent flat descriptions, and translates that
  // agree as point sets must become one catalog entry.  The lex-least
  // description is kept.
  std::map<std::string, Cell> byForm;
  for (const auto& rep : out.orbitRepresentatives)
    for (const auto& sigma : symmetry_group().elements) {
      Cell t = transformed(sigma, rep);
      t.orbitRepId = rep.orbitRepId;
      auto [it, inserted] = byForm.emplace(polytope_form_key(t.polytope()), t);
      if (!inserted && t.extra < it->second.extra) {
        const std::string id = it->second.orbitRepId;
        it->second = t;
        it->second.orbitRepId = id.empty() ? t.orbitRepId : id;
      }
    }
  for (const auto& [key, cell] : byForm) out.allCells.push_back(cell);
  std::sort(out.allCells.begin(), out.allCells.end());
  return out;
}

// ---------------------------------------------------------------------------
// The table of maximal cells
// ---------------------------------------------------------------------------

struct CellTableRow {
  std::string id;          // "0".."9"
  Cell cell;               // printed constraint set
  std::string componentType;  // Sigma, P1xP1, F1, P2, Bl4P2
  int degree = 0;          // 4 (K+D)^2 of the component
  std::string caseRef;     // degeneration case number
};

inline const std::vector<CellTableRow>& maximal_cell_table() {
  static const std::vector<CellTableRow> rows = [] {
    auto C = [](std::vector<std::vector<const char*>> classes1,
                std::vector<std::vector<const char*>> classes2 = {}) {
      Cell cell;
      for (const auto& names : classes1) {
        FlatClass f;
        f.bound = 1;
        for (const char* s : names) f.slots.push_back(coordinate_index(s));
        std::sort(f.slots.begin(), f.slots.end());
        cell.extra.push_back(f);
      }
      for (const auto& names : classes2) {
        FlatClass f;
        f.bound = 2;
        for (const char* s : names) f.slots.push_back(coordinate_index(s));
        std::sort(f.slots.begin(), f.slots.end());
        cell.extra.push_back(f);
      }
      std::sort(cell.extra.begin(), cell.extra.end());
      return cell;
    };
    std::vector<CellTableRow> rows = {
        {"0", C({}), "Sigma", 6, ""},
        {"1", C({{"a0", "a1", "a2"}, {"c3", "a1", "a2"}}), "P1xP1", 2, "1"},
        {"2", C({{"a0", "a1", "b2"}, {"c3", "c2", "a1"}}), "P1xP1", 2, "2"},
        {"3", C({{"a0", "a1", "b2"}}), "F1", 3, "6"},
        {"4", C({{"c3", "c2", "a1"}, {"b3", "b2", "c1"}}), "P2", 1, "7"},
        {"5", C({}, {{"a1", "a2", "b1", "b2", "c1"}}), "Bl4P2", 5, "8"},
        {"6", C({{"a0", "b0", "c0", "c2"}}), "P2", 1, "8"},
        {"7", C({}, {{"a1", "a2", "b1", "b2", "c1", "c2"}}), "P1xP1", 2, "9"},
        {"8", C({{"a0", "b0", "c0"}}), "P2", 4, "9"},
        {"9", C({{"a0", "b0", "c0"}}, {{"a1", "a2", "b1", "b2", "c1"}}), "F1", 3, "10"},
    };
    for (auto& row : rows) row.cell.orbitRepId = row.id;
    return rows;
  }();
  return rows;
}

struct CellMetadata {
  std::string orbitRepId;
  std::string componentType;
  int degree = 0;
  std::string caseRef;
};

inline CellMetadata cell_metadata(const std::string& orbitRepId) {
  for (const auto& row : maximal_cell_table())
    if (row.id == orbitRepId)
      return {row.id, row.componentType, row.degree, row.caseRef};
  throw InvalidInput("unknown cell orbit id: " + orbitRepId);
}

// Matches an enumerated orbit representative to a table row (by symmetry and
// geometric equality); empty string when no row matches.
inline std::string match_table_row(const Cell& rep) {
  for (const auto& row : maximal_cell_table()) {
    const Cell canon = canonical_orbit_representative(row.cell);
    if (canon.extra == rep.extra) return row.id;
  }
  // geometric fallback
  const Polytope p = rep.polytope();
  for (const auto& row : maximal_cell_table())
    for (const auto& sigma : symmetry_group().elements)
      if (polytope_equal(transformed(sigma, row.cell).polytope(), p)) return row.id;
  return "";
}

// The standard enumeration with orbit ids assigned from the table.
inline const MaximalCellEnumeration& burniat_maximal_cells(int threads = 0) {
  static MaximalCellEnumeration enumeration = [threads] {
    auto e = enumerate_maximal_cells(burniat_cell_generators(), threads);
    for (auto& rep : e.orbitRepresentatives) rep.orbitRepId = match_table_row(rep);
    for (auto& cell : e.allCells) {
      const Cell canon = canonical_orbit_representative(cell);
      for (const auto& rep : e.orbitRepresentatives)
        if (rep.extra == canon.extra) cell.orbitRepId = rep.orbitRepId;
    }
    return e;
  }();
  return enumeration;
}

}  // namespace stablecover

#endif  // STABLECOVER_CELLS_HPP_
