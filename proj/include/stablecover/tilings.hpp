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

#ifndef STABLECOVER_TILINGS_HPP_
#define STABLECOVER_TILINGS_HPP_

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "stablecover/cells.hpp"

namespace stablecover {

// A facet-matched family of maximal cells covering the weight polytope.
// Cells are indices into a fixed catalog; adjacency records which pairs are
// glued and along which hyperplane.
struct Tiling {
  std::vector<int> cells;  // sorted catalog indices
  struct Adjacency {
    int cellA = 0, cellB = 0;  // positions in `cells`
    Halfspace facet;           // cellA side: <=, cellB side: >=
  };
  std::vector<Adjacency> adjacency;
};

struct TilingVerification {
  bool ok = true;
  std::string failure;  // names the failing check and a witness
};

// Precomputed pairwise structure of the cell catalog.
class CellComplex {
 public:
  explicit CellComplex(std::vector<Cell> catalog, int threads = 0)
      : catalog_(std::move(catalog)) {
    build(threads);
  }

  const std::vector<Cell>& catalog() const { return catalog_; }

  // facet f of cell i (index into extra) fully matches cell j?
  struct FacetKey {
    int cell;
    int facet;
    bool operator<(const FacetKey& o) const {
      return cell != o.cell ? cell < o.cell : facet < o.facet;
    }
  };

  const std::vector<int>& neighbors(int cell, int facet) const {
    return neighbors_.at({cell, facet});
  }

  bool interiors_disjoint(int i, int j) const {
    const auto key = std::minmax(i, j);
    auto it = disjoint_.find(key);
    if (it != disjoint_.end()) return it->second;
    Polytope p = catalog_[i].polytope();
    for (const auto& c : catalog_[j].extra) p.add(c.halfspace());
    const bool disjoint = !has_strict_point(p);
    disjoint_.emplace(key, disjoint);
    return disjoint;
  }

  // catalog index of the image of a cell under the symmetry group element
  int transformed_index(size_t sigmaIdx, int cell) const { return action_[sigmaIdx][cell]; }

 private:
  void build(int threads) {
    std::map<std::string, int> formIndex;
    for (size_t i = 0; i < catalog_.size(); ++i)
      formIndex[polytope_form_key(catalog_[i].polytope())] = static_cast<int>(i);
    const auto& group = symmetry_group().elements;
    action_.assign(group.size(), std::vector<int>(catalog_.size(), -1));
    parallel_for(group.size(), threads, [&](size_t s) {
      for (size_t c = 0; c < catalog_.size(); ++c) {
        const Cell t = transformed(group[s], catalog_[c]);
        auto it = formIndex.find(polytope_form_key(t.polytope()));
        action_[s][c] = it == formIndex.end() ? -1 : it->second;
      }
    });

    // canonical reduced row of each facet constraint, for candidate pairing
    struct Row {
      Vec a;
      Rational b;
      bool operator<(const Row& o) const { return a != o.a ? a < o.a : b < o.b; }
    };
    auto reduced_row = [](const Halfspace& h) {
      static const poly_detail::EqualityBasis basis(delta_bur().equalities, 12);
      Vec a = h.le_coeffs();
      Rational b = h.le_bound();
      basis.reduce(&a, &b);
      Rational lead(0);
      for (const auto& x : a)
        if (x != 0) {
          lead = abs(x);
          break;
        }
      if (lead != 0 && lead != 1) {
        for (auto& x : a) x /= lead;
        b /= lead;
      }
      return Row{a, b};
    };

    std::map<Row, std::vector<FacetKey>> byRow;
    for (size_t i = 0; i < catalog_.size(); ++i)
      for (size_t f = 0; f < catalog_[i].extra.size(); ++f)
        byRow[reduced_row(catalog_[i].extra[f].halfspace())].push_back(
            {static_cast<int>(i), static_cast<int>(f)});

    // candidate matches: facets with negated reduced rows
    struct Candidate {
      FacetKey a;
      int otherCell;
    };
    std::vector<Candidate> candidates;
    for (const auto& [row, keys] : byRow) {
      Row neg = row;
      for (auto& x : neg.a) x = -x;
      neg.b = -neg.b;
      auto it = byRow.find(neg);
      if (it == byRow.end()) continue;
      for (const auto& key : keys)
        for (const auto& other : it->second)
          if (other.cell != key.cell) candidates.push_back({key, other.cell});
    }

    std::vector<char> matched(candidates.size(), 0);
    parallel_for(candidates.size(), threads, [&](size_t idx) {
      const auto& cand = candidates[idx];
      matched[idx] = full_facet_match(cand.a.cell, cand.a.facet, cand.otherCell) ? 1 : 0;
    });
    for (size_t idx = 0; idx < candidates.size(); ++idx)
      if (matched[idx]) neighbors_[candidates[idx].a].push_back(candidates[idx].otherCell);
    // ensure every facet has an entry
    for (size_t i = 0; i < catalog_.size(); ++i)
      for (size_t f = 0; f < catalog_[i].extra.size(); ++f)
        neighbors_.try_emplace({static_cast<int>(i), static_cast<int>(f)});
    for (auto& [key, list] : neighbors_) std::sort(list.begin(), list.end());
  }

  // the facet of cell i cut by extra[f] coincides with a facet of cell j
  bool full_facet_match(int i, int f, int j) const {
    const Halfspace h = catalog_[i].extra[f].halfspace();
    // Both cells carry the full bound system of the weight polytope, so
    // containment only needs the other cell's extra constraints.
    Polytope facetI = catalog_[i].polytope();
    facetI.add_equality(h.le_coeffs(), h.le_bound());
    for (const auto& c : catalog_[j].extra)
      if (!implies(facetI, c.halfspace())) return false;
    Polytope facetJ = catalog_[j].polytope();
    facetJ.add_equality(h.le_coeffs(), h.le_bound());
    for (const auto& c : catalog_[i].extra)
      if (!implies(facetJ, c.halfspace())) return false;
    // shared piece must be seven-dimensional
    for (const auto& c : catalog_[j].extra) facetI.add(c.halfspace());
    return has_strict_point(facetI);
  }

  std::vector<Cell> catalog_;
  std::vector<std::vector<int>> action_;  // [group element][cell] -> cell
  std::map<FacetKey, std::vector<int>> neighbors_;
  mutable std::map<std::pair<int, int>, bool> disjoint_;
};

// The complex over the standard catalog.
inline CellComplex& burniat_cell_complex(int threads = 0) {
  static CellComplex complex(burniat_maximal_cells(threads).allCells, threads);
  return complex;
}

// Shared-facet certificate for two maximal cells: the halfspace that cellA
// satisfies with <= and cellB with >=, meeting both in a common
// seven-dimensional facet.  Nothing is returned when the cells are not glued
// along a full facet.
inline std::optional<Halfspace> facet_match(const Cell& cellA, const Cell& cellB) {
  const Polytope pa = cellA.polytope();
  const Polytope pb = cellB.polytope();
  for (const auto& cls : cellA.extra) {
    const Halfspace h = cls.halfspace();
    // cellB must lie on the other side
    Halfspace reversed = h;
    reversed.sense = Sense::Ge;
    if (!implies(pb, reversed)) continue;
    // the two facets along the hyperplane must coincide and be full
    Polytope facetA = pa;
    facetA.add_equality(h.le_coeffs(), h.le_bound());
    bool contained = true;
    for (const auto& other : cellB.extra)
      if (!implies(facetA, other.halfspace())) {
        contained = false;
        break;
      }
    if (!contained) continue;
    Polytope facetB = pb;
    facetB.add_equality(h.le_coeffs(), h.le_bound());
    for (const auto& other : cellA.extra)
      if (!implies(facetB, other.halfspace())) {
        contained = false;
        break;
      }
    if (!contained) continue;
    Polytope shared = facetA;
    for (const auto& other : cellB.extra) shared.add(other.halfspace());
    if (has_strict_point(shared)) return h;
  }
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// Verification
// ---------------------------------------------------------------------------

namespace tiling_detail {

// Deterministic sample grid: the free coordinates (a0,a1,a2,b0,b1,b2,c1,c2)
// range over {1/4, 1/3, 5/12}; the remaining four coordinates follow from
// the defining equalities.  Points outside the open polytope are discarded.
inline const std::vector<Vec>& sample_grid() {
  static const std::vector<Vec> grid = [] {
    std::vector<Vec> out;
    const Polytope delta = delta_bur();
    const std::array<Rational, 3> values = {Rational(1, 4), Rational(1, 3), Rational(5, 12)};
    const int free[8] = {0, 1, 2, 4, 5, 6, 9, 10};  // a0 a1 a2 b0 b1 b2 c1 c2
    std::array<int, 8> pick{};
    while (true) {
      Vec x(12, Rational(0));
      for (int i = 0; i < 8; ++i) x[free[i]] = values[pick[i]];
      // c0 from the nine-coordinate sum, then the three exceptional slots
      Rational nineSum(0);
      for (int i : {0, 1, 2, 4, 5, 6, 9, 10}) nineSum += x[i];
      x[8] = Rational(3) - nineSum;
      x[3] = x[8] + x[9] + x[10] + x[4] - 1;   // a3
      x[7] = x[0] + x[1] + x[2] + x[8] - 1;    // b3
      x[11] = x[4] + x[5] + x[6] + x[0] - 1;   // c3
      bool interior = true;
      for (const auto& h : delta.inequalities)
        if (dot(h.le_coeffs(), x) >= h.le_bound()) {
          interior = false;
          break;
        }
      if (interior) out.push_back(x);
      int d = 7;
      while (d >= 0 && pick[d] == 2) pick[d--] = 0;
      if (d < 0) break;
      ++pick[d];
    }
    // the all-1/3 point
    out.push_back(Vec(12, Rational(1, 3)));
    return out;
  }();
  return grid;
}

}  // namespace tiling_detail

// Checks that the cells form a tiling: pairwise disjoint interiors, every
// interior facet matched exactly once with the complementary inequality, a
// connected adjacency graph, and single coverage of a deterministic interior
// sample grid.
inline TilingVerification verify_tiling(const CellComplex& complex, const Tiling& t) {
  TilingVerification out;
  const auto& catalog = complex.catalog();
  auto fail = [&](const std::string& why) {
    out.ok = false;
    out.failure = why;
    return out;
  };

  // (a) pairwise interior disjointness
  for (size_t i = 0; i < t.cells.size(); ++i)
    for (size_t j = i + 1; j < t.cells.size(); ++j)
      if (!complex.interiors_disjoint(t.cells[i], t.cells[j])) {
        Polytope p = catalog[t.cells[i]].polytope();
        for (const auto& c : catalog[t.cells[j]].extra) p.add(c.halfspace());
        Vec witness;
        has_strict_point(p, &witness);
        std::string pt;
        for (const auto& v : witness) pt += format_rational(v) + " ";
        return fail("interior overlap between cells " + std::to_string(i) + " and " +
                    std::to_string(j) + " at " + pt);
      }

  // (b) every interior facet matched exactly once
  std::vector<std::pair<int, int>> matchedPairs;
  for (size_t i = 0; i < t.cells.size(); ++i) {
    const int cell = t.cells[i];
    for (size_t f = 0; f < catalog[cell].extra.size(); ++f) {
      const auto& nbrs = complex.neighbors(cell, static_cast<int>(f));
      int count = 0;
      size_t matchPos = 0;
      for (size_t j = 0; j < t.cells.size(); ++j) {
        if (j == i) continue;
        if (std::find(nbrs.begin(), nbrs.end(), t.cells[j]) != nbrs.end()) {
          ++count;
          matchPos = j;
        }
      }
      if (count != 1)
        return fail("facet " + catalog[cell].extra[f].str() + " of cell " + std::to_string(i) +
                    " matched " + std::to_string(count) + " times");
      if (i < matchPos) matchedPairs.emplace_back(static_cast<int>(i), static_cast<int>(matchPos));
    }
  }

  // (c) connectivity of the adjacency graph
  if (!t.cells.empty()) {
    std::vector<int> parent(t.cells.size());
    for (size_t i = 0; i < parent.size(); ++i) parent[i] = static_cast<int>(i);
    std::function<int(int)> find = [&](int x) {
      return parent[x] == x ? x : parent[x] = find(parent[x]);
    };
    for (const auto& [i, j] : matchedPairs) parent[find(i)] = find(j);
    for (size_t i = 1; i < t.cells.size(); ++i)
      if (find(static_cast<int>(i)) != find(0)) return fail("adjacency graph is disconnected");
  }

  // (d) single coverage of the sample grid.  Grid points on a cell facet are
  // skipped: they witness the measure-zero interface, not a coverage gap.
  for (const auto& x : tiling_detail::sample_grid()) {
    int covering = 0;
    bool onBoundary = false;
    for (int cell : t.cells) {
      bool inside = true;
      bool strict = true;
      for (const auto& c : catalog[cell].extra) {
        const auto h = c.halfspace();
        const Rational v = dot(h.le_coeffs(), x);
        if (v > h.le_bound()) inside = false;
        if (v == h.le_bound()) strict = false;
      }
      if (inside) {
        ++covering;
        if (!strict) onBoundary = true;
      }
    }
    if (onBoundary) continue;
    if (covering != 1) {
      std::string pt;
      for (const auto& v : x) pt += format_rational(v) + " ";
      return fail("sample point covered " + std::to_string(covering) + " times: " + pt);
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Enumeration
// ---------------------------------------------------------------------------

namespace tiling_detail {

struct DfsState {
  std::vector<int> cells;
  int degreeSum = 0;
};

}  // namespace tiling_detail

// Depth-first search over facet-matched families: starting from each catalog
// cell, repeatedly glue a catalog cell onto the first unmatched facet; a
// family with no unmatched facets covers the polytope.  Results are reduced
// modulo the symmetry group and returned in canonical order.
inline std::vector<Tiling> enumerate_tilings(const CellComplex& complex, int threads = 0) {
  (void)threads;
  const auto& catalog = complex.catalog();
  const int n = static_cast<int>(catalog.size());

  auto degree_of = [&](int cell) {
    return cell_metadata(catalog[cell].orbitRepId.empty() ? "0" : catalog[cell].orbitRepId).degree;
  };

  std::set<std::vector<int>> found;       // completed tilings (sorted indices)
  std::set<std::vector<int>> visited;     // memoized partial states

  std::function<void(std::vector<int>&, int, int)> dfs = [&](std::vector<int>& cells, int seed,
                                                             int degreeSum) {
    std::vector<int> key = cells;
    std::sort(key.begin(), key.end());
    if (!visited.insert(key).second) return;

    // first unmatched facet
    int openCell = -1, openFacet = -1;
    for (size_t i = 0; i < cells.size() && openCell < 0; ++i) {
      const int cell = cells[i];
      for (size_t f = 0; f < catalog[cell].extra.size(); ++f) {
        const auto& nbrs = complex.neighbors(cell, static_cast<int>(f));
        bool matched = false;
        for (int other : cells)
          if (other != cell && std::find(nbrs.begin(), nbrs.end(), other) != nbrs.end()) {
            matched = true;
            break;
          }
        if (!matched) {
          openCell = cell;
          openFacet = static_cast<int>(f);
          break;
        }
      }
    }
    if (openCell < 0) {
      found.insert(key);
      return;
    }

    for (int cand : complex.neighbors(openCell, openFacet)) {
      if (cand < seed) continue;  // tilings are found from their least cell
      if (std::find(cells.begin(), cells.end(), cand) != cells.end()) continue;
      const int d = degree_of(cand);
      if (degreeSum + d > 6) continue;  // degrees of a tiling sum to 6
      bool disjoint = true;
      for (int other : cells)
        if (!complex.interiors_disjoint(other, cand)) {
          disjoint = false;
          break;
        }
      if (!disjoint) continue;
      cells.push_back(cand);
      dfs(cells, seed, degreeSum + d);
      cells.pop_back();
    }
  };

  for (int seed = 0; seed < n; ++seed) {
    std::vector<int> cells{seed};
    dfs(cells, seed, degree_of(seed));
  }

  // symmetry reduction: minimal transformed sorted index list
  std::set<std::vector<int>> reps;
  const size_t groupSize = symmetry_group().elements.size();
  for (const auto& cells : found) {
    std::vector<int> best = cells;
    for (size_t s = 0; s < groupSize; ++s) {
      std::vector<int> mapped;
      bool ok = true;
      for (int c : cells) {
        const int t = complex.transformed_index(s, c);
        if (t < 0) {
          ok = false;
          break;
        }
        mapped.push_back(t);
      }
      if (!ok) continue;
      std::sort(mapped.begin(), mapped.end());
      if (mapped < best) best = mapped;
    }
    reps.insert(best);
  }

  std::vector<Tiling> out;
  for (const auto& cells : reps) {
    Tiling t;
    t.cells = cells;
    // adjacency certificates
    for (size_t i = 0; i < cells.size(); ++i) {
      const int cell = cells[i];
      for (size_t f = 0; f < catalog[cell].extra.size(); ++f) {
        const auto& nbrs = complex.neighbors(cell, static_cast<int>(f));
        for (size_t j = 0; j < cells.size(); ++j) {
          if (i == j) continue;
          if (std::find(nbrs.begin(), nbrs.end(), cells[j]) != nbrs.end() && i < j) {
            Tiling::Adjacency adj;
            adj.cellA = static_cast<int>(i);
            adj.cellB = static_cast<int>(j);
            adj.facet = catalog[cell].extra[f].halfspace();
            t.adjacency.push_back(adj);
          }
        }
      }
    }
    out.push_back(std::move(t));
  }
  return out;
}

// The trivial tiling by the whole polytope.
inline Tiling trivial_tiling(const CellComplex& complex) {
  Tiling t;
  for (size_t i = 0; i < complex.catalog().size(); ++i)
    if (complex.catalog()[i].extra.empty()) {
      t.cells.push_back(static_cast<int>(i));
      return t;
    }
  throw InvalidInput("catalog does not contain the whole polytope");
}

}  // namespace stablecover

#endif  // STABLECOVER_TILINGS_HPP_
