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

#ifndef STABLECOVER_SYMMETRY_HPP_
#define STABLECOVER_SYMMETRY_HPP_

#include <array>
#include <set>
#include <vector>

#include "stablecover/polytope.hpp"

namespace stablecover {

// A relabeling of the twelve divisor coordinates, mapping slot i to slot
// perm[i].
struct CoordPermutation {
  std::array<int, 12> perm;

  bool operator==(const CoordPermutation& o) const { return perm == o.perm; }
  bool operator<(const CoordPermutation& o) const { return perm < o.perm; }

  CoordPermutation compose(const CoordPermutation& then) const {
    CoordPermutation out;
    for (int i = 0; i < 12; ++i) out.perm[i] = then.perm[perm[i]];
    return out;
  }

  Vec apply_point(const Vec& x) const {
    Vec y(12, Rational(0));
    for (int i = 0; i < 12; ++i) y[perm[i]] = x[i];
    return y;
  }

  Halfspace apply(const Halfspace& h) const {
    Halfspace out = h;
    for (int i = 0; i < 12; ++i) out.coeffs[perm[i]] = h.coeffs[i];
    return out;
  }

  Polytope apply(const Polytope& p) const {
    Polytope out(p.n);
    for (const auto& [a, b] : p.equalities) {
      Vec na(12, Rational(0));
      for (int i = 0; i < 12; ++i) na[perm[i]] = a[i];
      out.add_equality(na, b);
    }
    for (const auto& h : p.inequalities) out.add(apply(h));
    return out;
  }

  std::vector<int> apply_subset(const std::vector<int>& subset) const {
    std::vector<int> out;
    for (int i : subset) out.push_back(perm[i]);
    std::sort(out.begin(), out.end());
    return out;
  }
};

inline CoordPermutation identity_permutation() {
  CoordPermutation p;
  for (int i = 0; i < 12; ++i) p.perm[i] = i;
  return p;
}

struct SymmetryGroup {
  std::vector<CoordPermutation> generators;
  std::vector<CoordPermutation> elements;
};

// The relabeling group of the arrangement: the three in-pencil swaps
// 1 <-> 2 and an order-six rotation of the hexagon of fixed curves whose
// cube is the quadratic involution (the 0 <-> 3 swap in every family).
// Every generator is checked to preserve the weight polytope; the
// construction throws if one does not.
inline const SymmetryGroup& symmetry_group() {
  static const SymmetryGroup group = [] {
    auto family_swap = [](int family) {
      CoordPermutation p = identity_permutation();
      std::swap(p.perm[4 * family + 1], p.perm[4 * family + 2]);
      return p;
    };
    // a_i -> b_{s(i)}, b_i -> c_{s(i)}, c_i -> a_{s(i)} with s = (0 3)
    CoordPermutation rho;
    auto s = [](int i) { return i == 0 ? 3 : (i == 3 ? 0 : i); };
    for (int i = 0; i < 4; ++i) {
      rho.perm[i] = 4 + s(i);
      rho.perm[4 + i] = 8 + s(i);
      rho.perm[8 + i] = s(i);
    }

    SymmetryGroup g;
    g.generators = {family_swap(0), family_swap(1), family_swap(2), rho};

    const Polytope delta = delta_bur();
    for (const auto& gen : g.generators)
      if (!polytope_equal(gen.apply(delta), delta))
        throw InvalidInput("symmetry generator does not preserve the weight polytope");

    // closure
    std::set<CoordPermutation> seen;
    std::vector<CoordPermutation> frontier{identity_permutation()};
    seen.insert(frontier.front());
    while (!frontier.empty()) {
      std::vector<CoordPermutation> next;
      for (const auto& e : frontier)
        for (const auto& gen : g.generators) {
          CoordPermutation f = e.compose(gen);
          if (seen.insert(f).second) next.push_back(f);
        }
      frontier = std::move(next);
    }
    g.elements.assign(seen.begin(), seen.end());
    return g;
  }();
  return group;
}

// The cube of the hexagon rotation: 0 <-> 3 in every family, 1 and 2 fixed.
inline CoordPermutation cremona_permutation() {
  CoordPermutation p = identity_permutation();
  for (int f = 0; f < 3; ++f) std::swap(p.perm[4 * f], p.perm[4 * f + 3]);
  return p;
}

// Elements realizable as literal relabelings of the nine lines (no
// exceptional label is exchanged with a line label): the swaps together with
// the family rotation a -> c -> b -> a, which is the square of the hexagon
// rotation.
inline std::vector<CoordPermutation> relabeling_subgroup() {
  const auto& g = symmetry_group();
  auto slot_kind = [](int i) {
    const int r = i % 4;
    return r == 0 ? 0 : (r == 3 ? 2 : 1);  // side, mover, exceptional
  };
  std::vector<CoordPermutation> out;
  for (const auto& e : g.elements) {
    bool kindPreserving = true;
    for (int i = 0; i < 12 && kindPreserving; ++i)
      if (slot_kind(e.perm[i]) != slot_kind(i)) kindPreserving = false;
    if (kindPreserving) out.push_back(e);
  }
  return out;
}

}  // namespace stablecover

#endif  // STABLECOVER_SYMMETRY_HPP_
