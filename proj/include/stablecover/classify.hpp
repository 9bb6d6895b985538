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

#ifndef STABLECOVER_CLASSIFY_HPP_
#define STABLECOVER_CLASSIFY_HPP_

#include <algorithm>
#include <map>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "stablecover/gf2.hpp"
#include "stablecover/singularity_tables.hpp"

namespace stablecover {

struct NotSlc : std::runtime_error {
  explicit NotSlc(const std::string& why) : std::runtime_error("not slc: " + why) {}
};

struct NoMatch : std::runtime_error {
  explicit NoMatch(const std::string& why)
      : std::runtime_error("no classification row matches: " + why) {}
};

// Branch configuration at a point of a smooth surface: one entry per branch
// line through the point, counted with coincidence.  Entries with equal
// componentId describe the same curve.
struct LocalBranchConfig {
  int k = 0;  // ambient group rank of the labels
  std::vector<std::pair<GroupElt, int>> branches;  // (label, componentId)
};

// Branch configuration at a point of the double curve of a two-component
// normal-crossing surface.  doubleCurveLabel is present exactly when the
// double curve itself is branch (the R cases).
struct NCLocalConfig {
  int k = 0;
  std::optional<GroupElt> doubleCurveLabel;
  std::vector<std::pair<GroupElt, int>> side1, side2;
};

namespace classify_detail {

// Enumerate the admissible position permutations for a smooth configuration:
// coincident pair(s) occupy the leading positions and may swap internally
// (and as blocks for two pairs); the remaining singles permute freely.
inline std::vector<std::vector<int>> smooth_permutations(int k, int coincidence) {
  std::vector<std::vector<int>> perms;
  std::vector<int> base(k);
  std::iota(base.begin(), base.end(), 0);
  if (coincidence == 0) {
    std::vector<int> p = base;
    do {
      perms.push_back(p);
    } while (std::next_permutation(p.begin(), p.end()));
    return perms;
  }
  if (coincidence == 1) {
    // positions {0,1} form the pair
    std::vector<int> singles(base.begin() + 2, base.end());
    std::sort(singles.begin(), singles.end());
    do {
      for (int swap01 = 0; swap01 < 2; ++swap01) {
        std::vector<int> p = {swap01 ? 1 : 0, swap01 ? 0 : 1};
        p.insert(p.end(), singles.begin(), singles.end());
        perms.push_back(p);
      }
    } while (std::next_permutation(singles.begin(), singles.end()));
    return perms;
  }
  // two pairs: {0,1} and {2,3}
  for (int blockSwap = 0; blockSwap < 2; ++blockSwap)
    for (int s1 = 0; s1 < 2; ++s1)
      for (int s2 = 0; s2 < 2; ++s2) {
        std::vector<int> first = {s1 ? 1 : 0, s1 ? 0 : 1};
        std::vector<int> second = {s2 ? 3 : 2, s2 ? 2 : 3};
        std::vector<int> p;
        if (blockSwap) {
          p = second;
          p.insert(p.end(), first.begin(), first.end());
        } else {
          p = first;
          p.insert(p.end(), second.begin(), second.end());
        }
        perms.push_back(p);
      }
  return perms;
}

// All linear functionals lambda on the span of the labels with
// lambda(g0) = 0, represented as bit masks: lambda(x) = parity(mask & x).
inline std::vector<std::uint8_t> g0_twists(const std::vector<GroupElt>& labels) {
  if (labels.empty()) return {0};
  const GroupElt g0 = labels.front();
  const int len = g0.len;
  std::vector<std::uint8_t> out;
  for (unsigned mask = 0; mask < (1u << len); ++mask) {
    GroupElt lam(static_cast<std::uint8_t>(len), static_cast<std::uint8_t>(mask));
    if (dot_f2(lam, g0) == 0) out.push_back(static_cast<std::uint8_t>(mask));
  }
  return out;
}

}  // namespace classify_detail

// Canonical relation key of a labeled configuration: the minimum canonical
// relation set over all admissible re-indexings, and for ramified n.c.
// configurations also over the re-twists g |-> g + lambda(g) g0 of the
// second side (re-choosing the group action on one component does not change
// the cover).
inline RelationSet canonical_relation_key(TableKind kind, bool ramified, int k, int coincidence,
                                          const std::vector<GroupElt>& labels) {
  using classify_detail::g0_twists;
  using classify_detail::smooth_permutations;

  if (labels.empty()) return RelationSet{};

  if (kind == TableKind::Smooth) {
    std::optional<RelationSet> best;
    for (const auto& perm : smooth_permutations(k, coincidence)) {
      std::vector<GroupElt> arranged;
      arranged.reserve(labels.size());
      for (int pos : perm) arranged.push_back(labels[pos]);
      RelationSet r = relations_canonical(arranged, 1);
      if (!best || r < *best) best = r;
    }
    if (!best) best = RelationSet{};
    return *best;
  }

  // n.c. case.  labels = (g0?, side1..., side2...)
  const int offset = ramified ? 1 : 0;
  if (k == 0) {
    std::vector<GroupElt> tuple(labels.begin(), labels.begin() + offset);
    return tuple.empty() ? RelationSet{} : relations_canonical(tuple, 0);
  }
  std::optional<RelationSet> best;
  const bool swappable = (coincidence != 1);
  std::vector<std::vector<int>> sidePerms;
  if (k == 1) {
    sidePerms = {{0}};
  } else {
    sidePerms = {{0, 1}, {1, 0}};
  }
  for (int swap = 0; swap < (swappable ? 2 : 1); ++swap) {
    std::vector<GroupElt> s1(labels.begin() + offset, labels.begin() + offset + k);
    std::vector<GroupElt> s2(labels.begin() + offset + k, labels.end());
    if (swap) std::swap(s1, s2);
    for (const auto& p1 : sidePerms) {
      for (const auto& p2 : sidePerms) {
        std::vector<GroupElt> arranged;
        if (ramified) arranged.push_back(labels.front());
        for (int i : p1) arranged.push_back(s1[i]);
        std::vector<GroupElt> side2;
        for (int i : p2) side2.push_back(s2[i]);
        if (ramified) {
          for (std::uint8_t mask : g0_twists(labels)) {
            std::vector<GroupElt> tuple = arranged;
            const GroupElt g0 = labels.front();
            GroupElt lam(g0.len, mask);
            for (const auto& g : side2) {
              GroupElt twisted = g;
              if (dot_f2(lam, g) == 1) twisted = twisted + g0;
              tuple.push_back(twisted);
            }
            RelationSet r = relations_canonical(tuple, 0);
            if (!best || r < *best) best = r;
          }
        } else {
          std::vector<GroupElt> tuple = arranged;
          tuple.insert(tuple.end(), side2.begin(), side2.end());
          RelationSet r = relations_canonical(tuple, 1);
          if (!best || r < *best) best = r;
        }
      }
    }
  }
  if (!best) best = RelationSet{};
  return *best;
}

// ---------------------------------------------------------------------------
// Table cooking
// ---------------------------------------------------------------------------

namespace tables_detail {

inline std::vector<SingularityRecord> cook_rows() {
  std::vector<SingularityRecord> out;
  for (const auto& raw : raw_rows()) {
    SingularityRecord rec;
    rec.caseId = raw.id;
    parse_case_id(rec.caseId, &rec.table, &rec.ramified, &rec.k, &rec.coincidence);
    rec.hOrder = raw.hOrder;
    rec.relationsPrinted = raw.relations;
    rec.singularityTag = raw.sing;
    rec.normalizationRefs = parse_refs(raw.xnu);
    rec.doubleLocus = parse_double_locus(raw.locus);
    rec.semiresolution = raw.semires;
    rec.occurrence = raw.occurrence;
    rec.sourceAmbiguous = raw.ambiguous;

    const int n = (rec.table == TableKind::Smooth) ? rec.k
                                                   : 2 * rec.k + (rec.ramified ? 1 : 0);
    const int firstIndex = (rec.table == TableKind::NC && rec.ramified) ? 0 : 1;
    const auto space = relation_space(parse_relations(raw.relations), n, firstIndex);
    int r = 0;
    while ((1 << r) < rec.hOrder) ++r;
    if ((1 << r) != rec.hOrder)
      throw InvalidInput(std::string("row ") + raw.id + ": |H| is not a power of two");
    // |H| = 2^(n - dim of the dependency space); a transcription typo in
    // either column breaks this identity.
    {
      int spaceDim = 0;
      while ((1u << spaceDim) < space.size()) ++spaceDim;
      if ((1u << spaceDim) != space.size())
        throw InvalidInput(std::string("row ") + raw.id + ": dependency space size");
      if (n - spaceDim != r)
        throw InvalidInput(std::string("row ") + raw.id + ": |H| inconsistent with relations");
    }
    auto witness = least_witness_labels(space, n, r);
    if (!witness)
      throw InvalidInput(std::string("row ") + raw.id + ": no witness labels exist");
    rec.witnessLabels = *witness;
    rec.relationsCanonical =
        canonical_relation_key(rec.table, rec.ramified, rec.k, rec.coincidence, rec.witnessLabels);

    if (rec.table == TableKind::Smooth) {
      rec.gorenstein = all_dependencies_even(space);
    } else {
      rec.gorenstein = rec.singularityTag.find("/Z") == std::string::npos;
    }
    out.push_back(std::move(rec));
  }
  // lookup keys must be unique
  for (size_t i = 0; i < out.size(); ++i)
    for (size_t j = i + 1; j < out.size(); ++j) {
      const auto& a = out[i];
      const auto& b = out[j];
      if (a.table == b.table && a.ramified == b.ramified && a.k == b.k &&
          a.coincidence == b.coincidence && a.hOrder == b.hOrder &&
          a.relationsCanonical == b.relationsCanonical)
        throw InvalidInput("duplicate classification key: " + a.caseId + " vs " + b.caseId);
    }
  return out;
}

}  // namespace tables_detail

inline const std::vector<SingularityRecord>& singularity_table() {
  static const std::vector<SingularityRecord> rows = tables_detail::cook_rows();
  return rows;
}

inline const SingularityRecord& table_fixture(const std::string& caseId) {
  for (const auto& row : singularity_table())
    if (row.caseId == caseId) return row;
  throw UnknownCase(caseId);
}

// ---------------------------------------------------------------------------
// Classifiers
// ---------------------------------------------------------------------------

namespace classify_detail {

// Orders entries so that coincident pairs come first and returns the
// coincidence count.  Throws NotSlc when three entries share a curve.
inline int normalize_coincidences(std::vector<std::pair<GroupElt, int>>* entries) {
  std::map<int, int> copies;
  for (const auto& [label, comp] : *entries) ++copies[comp];
  for (const auto& [comp, count] : copies)
    if (count >= 3) throw NotSlc("three branch components coincide");
  std::stable_sort(entries->begin(), entries->end(),
                   [&](const auto& a, const auto& b) {
                     const int ca = copies[a.second], cb = copies[b.second];
                     if (ca != cb) return ca > cb;
                     return a.second < b.second;  // keep pairs adjacent
                   });
  int pairs = 0;
  for (const auto& [comp, count] : copies)
    if (count == 2) ++pairs;
  return pairs;
}

inline const SingularityRecord& lookup(TableKind kind, bool ramified, int k, int coincidence,
                                       int hOrder, const RelationSet& key) {
  for (const auto& row : singularity_table())
    if (row.table == kind && row.ramified == ramified && row.k == k &&
        row.coincidence == coincidence && row.hOrder == hOrder && row.relationsCanonical == key)
      return row;
  throw NoMatch("kind=" + std::string(kind == TableKind::Smooth ? "smooth" : "nc") +
                " ramified=" + (ramified ? "yes" : "no") + " k=" + std::to_string(k) +
                " coincidence=" + std::to_string(coincidence) + " |H|=" + std::to_string(hOrder) +
                " relations=" + key.str());
}

}  // namespace classify_detail

// Classifies the cover singularity over a point of a smooth surface lying on
// the given branch components.
inline const SingularityRecord& classify_smooth(const LocalBranchConfig& cfg) {
  auto entries = cfg.branches;
  if (entries.size() > 4) throw NotSlc("more than four branch components through the point");
  for (const auto& [label, comp] : entries)
    if (label.is_zero()) throw InvalidInput("branch labels must be nonzero");
  const int coincidence = classify_detail::normalize_coincidences(&entries);
  std::vector<GroupElt> labels;
  for (const auto& [label, comp] : entries) labels.push_back(label);
  const int hOrder = labels.empty() ? 1 : subgroup_order(labels, labels.front().len);
  const RelationSet key = canonical_relation_key(TableKind::Smooth, false,
                                                 static_cast<int>(labels.size()), coincidence,
                                                 labels);
  return classify_detail::lookup(TableKind::Smooth, false, static_cast<int>(labels.size()),
                                 coincidence, hOrder, key);
}

// Classifies the cover singularity over a point of the double curve of a
// normal-crossing union of two smooth surfaces.
inline const SingularityRecord& classify_nc(const NCLocalConfig& cfg) {
  auto side1 = cfg.side1;
  auto side2 = cfg.side2;
  if (side1.size() != side2.size())
    throw NotSlc("different numbers of branch components on the two sides");
  if (side1.size() > 2) throw NotSlc("more than two branch components per side");
  for (const auto* side : {&side1, &side2})
    for (const auto& [label, comp] : *side)
      if (label.is_zero()) throw InvalidInput("branch labels must be nonzero");
  if (cfg.doubleCurveLabel && cfg.doubleCurveLabel->is_zero())
    throw InvalidInput("double curve label must be nonzero");

  const int p1 = classify_detail::normalize_coincidences(&side1);
  const int p2 = classify_detail::normalize_coincidences(&side2);
  // normalize: a single coincident pair sits on side 1
  if (p2 > p1) std::swap(side1, side2);
  const int coincidence = (p1 + p2 >= 2) ? 2 : ((p1 + p2 == 1) ? 1 : 0);
  const bool ramified = cfg.doubleCurveLabel.has_value();

  std::vector<GroupElt> labels;
  if (ramified) labels.push_back(*cfg.doubleCurveLabel);
  for (const auto& [label, comp] : side1) labels.push_back(label);
  for (const auto& [label, comp] : side2) labels.push_back(label);
  const int hOrder = labels.empty() ? 1 : subgroup_order(labels, labels.front().len);
  const int k = static_cast<int>(side1.size());
  const RelationSet key = canonical_relation_key(TableKind::NC, ramified, k, coincidence, labels);
  return classify_detail::lookup(TableKind::NC, ramified, k, coincidence, hOrder, key);
}

// Reconstructs a configuration from a table row's witness labels; feeding it
// back through the classifier must return the same row.
inline LocalBranchConfig witness_config_smooth(const SingularityRecord& row) {
  if (row.table != TableKind::Smooth) throw InvalidInput("not a smooth-base row");
  LocalBranchConfig cfg;
  cfg.k = row.witnessLabels.empty() ? 0 : row.witnessLabels.front().len;
  for (size_t i = 0; i < row.witnessLabels.size(); ++i) {
    int comp = static_cast<int>(i);
    if (row.coincidence >= 1 && i == 1) comp = 0;
    if (row.coincidence == 2 && i == 3) comp = 2;
    cfg.branches.emplace_back(row.witnessLabels[i], comp);
  }
  return cfg;
}

inline NCLocalConfig witness_config_nc(const SingularityRecord& row) {
  if (row.table != TableKind::NC) throw InvalidInput("not an n.c. row");
  NCLocalConfig cfg;
  cfg.k = row.witnessLabels.empty() ? 0 : row.witnessLabels.front().len;
  size_t pos = 0;
  if (row.ramified) cfg.doubleCurveLabel = row.witnessLabels[pos++];
  for (int i = 0; i < row.k; ++i) {
    int comp = (row.coincidence >= 1 && i == 1) ? 0 : i;
    cfg.side1.emplace_back(row.witnessLabels[pos++], comp);
  }
  for (int i = 0; i < row.k; ++i) {
    int comp = (row.coincidence == 2 && i == 1) ? 10 : 10 + i;
    cfg.side2.emplace_back(row.witnessLabels[pos++], comp);
  }
  return cfg;
}

// ---------------------------------------------------------------------------
// Gluing across the double curve
// ---------------------------------------------------------------------------

// Cover data over one component of the normalized double curve: the inertia
// subgroup of the component and the labeled branch points of the restricted
// normalized cover.
struct DoubleCurveCoverData {
  std::vector<GroupElt> inertiaGenerators;
  std::vector<std::pair<std::string, GroupElt>> marks;  // (point id, label)
};

// Two covers glue along the double curve iff, for every matched component
// pair, the inertia subgroups agree and the restricted normalized covers are
// isomorphic as labeled covers.
inline bool gluing_compatible(const std::vector<DoubleCurveCoverData>& side1,
                              const std::vector<DoubleCurveCoverData>& side2,
                              const std::vector<std::pair<int, int>>& involution) {
  for (const auto& [i, j] : involution) {
    if (i < 0 || j < 0 || i >= static_cast<int>(side1.size()) ||
        j >= static_cast<int>(side2.size()))
      throw InvalidInput("involution index out of range");
    const auto& a = side1[i];
    const auto& b = side2[j];
    if (a.inertiaGenerators.empty() != b.inertiaGenerators.empty()) return false;
    if (!a.inertiaGenerators.empty()) {
      const int len = a.inertiaGenerators.front().len;
      if (span_f2(a.inertiaGenerators, len) != span_f2(b.inertiaGenerators, len)) return false;
    }
    auto ma = a.marks;
    auto mb = b.marks;
    std::sort(ma.begin(), ma.end());
    std::sort(mb.begin(), mb.end());
    if (ma != mb) return false;
  }
  return true;
}

}  // namespace stablecover

#endif  // STABLECOVER_CLASSIFY_HPP_
