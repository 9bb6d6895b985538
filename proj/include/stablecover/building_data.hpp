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

#ifndef STABLECOVER_BUILDING_DATA_HPP_
#define STABLECOVER_BUILDING_DATA_HPP_

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "stablecover/gf2.hpp"
#include "stablecover/surfaces.hpp"

namespace stablecover {

// One irreducible piece of a branch divisor D_h.  Entries sharing a label
// belong to the same D_h; the optional component id identifies geometric
// components across labels (two entries with the same id describe the same
// curve appearing in two branch divisors).
struct BranchEntry {
  GroupElt label;
  DivisorClass cls;
  int mult = 1;
  std::string component;  // empty = anonymous, unique component
};

// Building data for a (Z/2)^k Galois cover of a rational surface: for each
// nonzero group element h a branch class D_h, stored componentwise.
struct BuildingData {
  SurfaceKind base = SurfaceKind::P2;
  int k = 0;
  std::vector<BranchEntry> branch;

  const BaseSurface& surface_ref() const { return surface(base); }

  // Total class of D_h (with multiplicities).
  DivisorClass branch_class(const GroupElt& h) const {
    DivisorClass total(std::vector<Integer>(surface_ref().picRank, Integer(0)));
    for (const auto& e : branch)
      if (e.label == h) total = total + e.cls * Integer(e.mult);
    return total;
  }

  // Sum over all nonzero h of mult * D_h.
  DivisorClass total_branch_class() const {
    DivisorClass total(std::vector<Integer>(surface_ref().picRank, Integer(0)));
    for (const auto& e : branch) total = total + e.cls * Integer(e.mult);
    return total;
  }
};

struct NotDivisible : std::runtime_error {
  Character chi;
  explicit NotDivisible(Character c)
      : std::runtime_error("eigensheaf sum for character " + c.str() +
                           " is not divisible by 2; the cover does not exist"),
        chi(c) {}
};

// epsilon = 1 iff both characters pair to -1 with h.
inline int epsilon_indicator(const Character& chi1, const Character& chi2, const GroupElt& h) {
  return (pairs_to_minus_one(chi1, h) && pairs_to_minus_one(chi2, h)) ? 1 : 0;
}

// L_chi = (1/2) sum over { h : chi(h) = -1 } of mult(h) D_h.  Throws
// NotDivisible if some coordinate of the sum is odd.  L_0 = 0.
inline std::map<GroupElt, DivisorClass> solve_eigensheaves(const BuildingData& bd) {
  const auto& surf = bd.surface_ref();
  std::map<GroupElt, DivisorClass> out;
  for (const auto& chi : all_elements(bd.k)) {
    DivisorClass sum(std::vector<Integer>(surf.picRank, Integer(0)));
    for (const auto& e : bd.branch)
      if (pairs_to_minus_one(chi, e.label)) sum = sum + e.cls * Integer(e.mult);
    DivisorClass half(std::vector<Integer>(surf.picRank, Integer(0)));
    for (int i = 0; i < surf.picRank; ++i) {
      if (sum.coords[i] % 2 != 0) throw NotDivisible(chi);
      half.coords[i] = sum.coords[i] / 2;
    }
    out[chi] = half;
  }
  return out;
}

struct FundamentalRelationReport {
  bool ok = true;
  Character chi1, chi2;  // first violating pair when !ok
};

// Checks L_chi + L_chi' = L_{chi+chi'} + sum_h eps_h^{chi,chi'} mult(h) D_h
// for all character pairs.
inline FundamentalRelationReport verify_fundamental_relations_report(const BuildingData& bd) {
  const auto L = solve_eigensheaves(bd);
  FundamentalRelationReport rep;
  const auto& surf = bd.surface_ref();
  for (const auto& chi1 : all_elements(bd.k)) {
    for (const auto& chi2 : all_elements(bd.k)) {
      DivisorClass rhs = L.at(chi1 + chi2);
      for (const auto& e : bd.branch)
        if (epsilon_indicator(chi1, chi2, e.label))
          rhs = rhs + e.cls * Integer(e.mult);
      if (!(L.at(chi1) + L.at(chi2) == rhs)) {
        rep.ok = false;
        rep.chi1 = chi1;
        rep.chi2 = chi2;
        return rep;
      }
    }
  }
  (void)surf;
  return rep;
}

inline bool verify_fundamental_relations(const BuildingData& bd) {
  return verify_fundamental_relations_report(bd).ok;
}

struct CoverInvariants {
  Rational kxSquared;        // 2^k (K_Y + D)^2
  Rational chiStructureSheaf;
  Rational logSquare;        // (K_Y + D)^2 with D = (1/2) sum mult D_h
  long degree = 0;           // 2^k
};

// Numerical invariants of the cover.  K_X^2 is computed two ways: by pulling
// back K_Y + D and by re-expressing D through the eigensheaf classes
// (sum_{chi!=0} L_chi = 2^{k-2} sum_h mult D_h for k >= 2); the two routes
// must agree exactly.
inline CoverInvariants cover_invariants(const BuildingData& bd) {
  const auto& surf = bd.surface_ref();
  const auto L = solve_eigensheaves(bd);

  // route 1: direct lattice arithmetic on 2(K + D) to stay integral
  const DivisorClass twoKD = surf.canonicalClass * Integer(2) + bd.total_branch_class();
  const Rational logSquare = Rational(intersect_classes(twoKD, twoKD, surf), 4);

  CoverInvariants inv;
  inv.degree = 1L << bd.k;
  inv.logSquare = logSquare;
  inv.kxSquared = Rational(inv.degree) * logSquare;

  // route 2 (k >= 2): D = (sum_{chi != 0} L_chi) / 2^{k-2}
  if (bd.k >= 2) {
    DivisorClass sumL(std::vector<Integer>(surf.picRank, Integer(0)));
    for (const auto& [chi, cls] : L)
      if (!chi.is_zero()) sumL = sumL + cls;
    const Integer scale = Integer(1) << (bd.k - 2);  // 2^{k-2}
    // 2^{k-1}(K+D) = 2^{k-1} K + sum_{chi != 0} L_chi
    DivisorClass big = surf.canonicalClass * (scale * 2) + sumL;
    const Rational viaEigensheaves =
        Rational(intersect_classes(big, big, surf), scale * scale * 4);
    if (viaEigensheaves != logSquare)
      throw InvalidInput("eigensheaf route disagrees with direct (K+D)^2");
  }

  // chi(O_X) = sum over characters of chi(O_Y(-L_chi))
  Rational chi(0);
  for (const auto& [character, cls] : L) {
    DivisorClass neg = cls * Integer(-1);
    chi += riemann_roch_chi(neg, surf);
  }
  inv.chiStructureSheaf = chi;
  return inv;
}

// True iff every irreducible branch component carries total multiplicity at
// most 2 across all the branch divisors.  Entries with an explicit component
// id are identified across labels; anonymous entries are distinct components.
inline bool standardness_check(const BuildingData& bd) {
  std::map<std::string, int> named;
  for (const auto& e : bd.branch) {
    if (e.mult > 2 || e.mult < 0) {
      if (e.mult > 2) return false;
      throw InvalidInput("negative multiplicity");
    }
    if (!e.component.empty()) named[e.component] += e.mult;
  }
  for (const auto& [id, total] : named)
    if (total > 2) return false;
  return true;
}

// Label of the exceptional divisor of a blow-up centered inside the listed
// branch divisors: the sum of their labels.
inline GroupElt blowup_branch_label(const std::vector<GroupElt>& labels_through_center) {
  if (labels_through_center.empty()) throw InvalidInput("blowup_branch_label: empty list");
  GroupElt sum = zero_elt(labels_through_center.front().len);
  for (const auto& g : labels_through_center) sum = sum + g;
  return sum;
}

// A pattern of identifications among the used labels: coincident pairs plus
// the labels that stay reduced.
struct CoincidencePattern {
  std::vector<std::pair<GroupElt, GroupElt>> pairs;
  std::vector<GroupElt> singles;
};

// Number of irreducible components of the cover determined by a coincidence
// pattern: each identified pair {h, h'} contributes the label h + h' to the
// normalized cover, singles contribute themselves; the count is
// 2^k / |span(effective labels)|.
inline long component_count(const CoincidencePattern& pattern, int k) {
  std::vector<GroupElt> effective;
  for (const auto& [h1, h2] : pattern.pairs) {
    if (h1.is_zero() || h2.is_zero()) throw InvalidInput("labels must be nonzero");
    effective.push_back(h1 + h2);
  }
  for (const auto& h : pattern.singles) {
    if (h.is_zero()) throw InvalidInput("labels must be nonzero");
    effective.push_back(h);
  }
  return (1L << k) / subgroup_order(effective, k);
}

// -------------------------------------------------------------------------
// Presets
// -------------------------------------------------------------------------

// (Z/2)^3 cover of P^2 branched over seven labeled general-position lines.
inline BuildingData campedelli_preset() {
  BuildingData bd;
  bd.base = SurfaceKind::P2;
  bd.k = 3;
  for (const auto& h : nonzero_elements(3))
    bd.branch.push_back({h, DivisorClass{1}, 1, ""});
  return bd;
}

// (Z/2)^2 cover of Sigma = Bl3 P^2 branched over the twelve-divisor
// arrangement: D_a = A0+..+A3, D_b, D_c likewise.
inline BuildingData burniat_preset() {
  BuildingData bd;
  bd.base = SurfaceKind::Sigma;
  bd.k = 2;
  const auto& classes = burniat_divisor_classes();
  const GroupElt a = parse_group_elt("10");
  const GroupElt b = parse_group_elt("01");
  const GroupElt c = parse_group_elt("11");
  const GroupElt fam[3] = {a, b, c};
  static const char* names[12] = {"A0", "A1", "A2", "A3", "B0", "B1", "B2", "B3",
                                  "C0", "C1", "C2", "C3"};
  for (int f = 0; f < 3; ++f)
    for (int i = 0; i < 4; ++i)
      bd.branch.push_back({fam[f], classes[4 * f + i], 1, names[4 * f + i]});
  return bd;
}

// (Z/2)^k cover of P^m branched over all 2^k - 1 labeled hyperplanes in
// general position.  Only the surface case m = 2 is supported.
inline BuildingData uniform_preset(int m, int k) {
  if (m != 2) throw Unsupported("uniform preset: only m = 2 is supported");
  if (k < 2 || k > 8) throw InvalidInput("uniform preset: k out of range");
  BuildingData bd;
  bd.base = SurfaceKind::P2;
  bd.k = k;
  for (const auto& h : nonzero_elements(k))
    bd.branch.push_back({h, DivisorClass{1}, 1, ""});
  return bd;
}

}  // namespace stablecover

#endif  // STABLECOVER_BUILDING_DATA_HPP_
