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

#ifndef STABLECOVER_GF2_HPP_
#define STABLECOVER_GF2_HPP_

#include <algorithm>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "stablecover/rational.hpp"

namespace stablecover {

// An element of (Z/2)^k, k <= 8.  The bit string "110" reads left to right:
// coordinate 0 first.  The numeric value of "110" with k=3 is 0b110 = 6, so
// lexicographic order on the string agrees with numeric order.
struct GroupElt {
  std::uint8_t len = 0;   // k
  std::uint8_t bits = 0;  // coordinate i stored at bit (len-1-i)

  GroupElt() = default;
  GroupElt(std::uint8_t k, std::uint8_t value) : len(k), bits(value) {}

  bool coord(int i) const { return (bits >> (len - 1 - i)) & 1u; }
  bool is_zero() const { return bits == 0; }

  GroupElt operator+(const GroupElt& o) const {
    if (len != o.len) throw InvalidInput("GF(2) vectors of mixed length");
    return GroupElt(len, bits ^ o.bits);
  }
  bool operator==(const GroupElt& o) const { return len == o.len && bits == o.bits; }
  bool operator!=(const GroupElt& o) const { return !(*this == o); }
  bool operator<(const GroupElt& o) const {
    return len != o.len ? len < o.len : bits < o.bits;
  }

  std::string str() const {
    std::string s;
    for (int i = 0; i < len; ++i) s += coord(i) ? '1' : '0';
    return s;
  }
};

inline GroupElt zero_elt(int k) { return GroupElt(static_cast<std::uint8_t>(k), 0); }

inline std::optional<GroupElt> try_parse_group_elt(const std::string& s) {
  if (s.empty() || s.size() > 8) return std::nullopt;
  std::uint8_t bits = 0;
  for (char c : s) {
    if (c != '0' && c != '1') return std::nullopt;
    bits = static_cast<std::uint8_t>((bits << 1) | (c == '1'));
  }
  return GroupElt(static_cast<std::uint8_t>(s.size()), bits);
}

inline GroupElt parse_group_elt(const std::string& s) {
  auto g = try_parse_group_elt(s);
  if (!g) throw InvalidInput("cannot parse GF(2) vector: '" + s + "'");
  return *g;
}

// Characters of (Z/2)^k are again bit vectors; the pairing is
// (-1)^(dot product).
using Character = GroupElt;

inline int dot_f2(const GroupElt& chi, const GroupElt& h) {
  if (chi.len != h.len) throw InvalidInput("GF(2) vectors of mixed length");
  return __builtin_popcount(static_cast<unsigned>(chi.bits & h.bits)) & 1;
}

// pairing = -1 iff the F2 dot product is 1
inline bool pairs_to_minus_one(const Character& chi, const GroupElt& h) {
  return dot_f2(chi, h) == 1;
}

inline std::vector<GroupElt> all_elements(int k) {
  std::vector<GroupElt> out;
  out.reserve(1u << k);
  for (unsigned v = 0; v < (1u << k); ++v)
    out.push_back(GroupElt(static_cast<std::uint8_t>(k), static_cast<std::uint8_t>(v)));
  return out;
}

inline std::vector<GroupElt> nonzero_elements(int k) {
  auto out = all_elements(k);
  out.erase(out.begin());
  return out;
}

namespace detail {

// Echelon basis keyed by leading (highest) set bit; returns rank.
template <typename UInt>
inline int echelon_insert_all(const std::vector<UInt>& vecs) {
  UInt by_lead[32] = {};
  int rank = 0;
  for (UInt v0 : vecs) {
    UInt v = v0;
    while (v) {
      int lead = 31 - __builtin_clz(static_cast<unsigned>(v));
      if (by_lead[lead]) {
        v ^= by_lead[lead];
      } else {
        by_lead[lead] = v;
        ++rank;
        break;
      }
    }
  }
  return rank;
}

}  // namespace detail

// Rank of the set of vectors over F2.
inline int rank_f2(const std::vector<GroupElt>& elements) {
  std::vector<unsigned> vecs;
  vecs.reserve(elements.size());
  for (const auto& e : elements) vecs.push_back(e.bits);
  return detail::echelon_insert_all(vecs);
}

// The subgroup generated by the given elements, in ascending numeric order.
// The empty set spans {0}.
inline std::vector<GroupElt> span_f2(const std::vector<GroupElt>& elements) {
  if (elements.empty()) throw InvalidInput("span_f2 of empty set needs a length; use span_f2(elements, k)");
  const std::uint8_t k = elements.front().len;
  for (const auto& e : elements)
    if (e.len != k) throw InvalidInput("span_f2: mixed lengths");
  std::vector<bool> seen(1u << k, false);
  seen[0] = true;
  std::vector<std::uint8_t> members{0};
  for (const auto& e : elements) {
    std::vector<std::uint8_t> next;
    for (std::uint8_t m : members) {
      std::uint8_t s = m ^ e.bits;
      if (!seen[s]) {
        seen[s] = true;
        next.push_back(s);
      }
    }
    members.insert(members.end(), next.begin(), next.end());
  }
  std::sort(members.begin(), members.end());
  std::vector<GroupElt> out;
  out.reserve(members.size());
  for (std::uint8_t m : members) out.push_back(GroupElt(k, m));
  return out;
}

inline std::vector<GroupElt> span_f2(const std::vector<GroupElt>& elements, int k) {
  if (elements.empty()) return {zero_elt(k)};
  return span_f2(elements);
}

inline int subgroup_order(const std::vector<GroupElt>& elements, int k) {
  return static_cast<int>(span_f2(elements, k).size());
}

// ---------------------------------------------------------------------------
// Relation sets.
//
// A list of labels (g_1,...,g_n) -- optionally with a 0th label in front --
// has a dependency space V = { e in F2^n : sum_i e_i g_i = 0 }.  The
// canonical relation set is the basis of V whose sorted list of supports is
// lexicographically least, where supports are compared first by size and
// then by their sorted index tuples.  "123" encodes g_1+g_2+g_3 = 0.
// ---------------------------------------------------------------------------

struct RelationSet {
  // each relation is a sorted list of indices (firstIndex-based)
  std::vector<std::vector<int>> relations;

  bool operator==(const RelationSet& o) const { return relations == o.relations; }
  bool operator!=(const RelationSet& o) const { return !(*this == o); }
  bool operator<(const RelationSet& o) const { return relations < o.relations; }
  bool empty() const { return relations.empty(); }

  std::string str() const {
    if (relations.empty()) return "none";
    std::string s;
    for (size_t i = 0; i < relations.size(); ++i) {
      if (i) s += ",";
      for (int idx : relations[i]) s += static_cast<char>('0' + idx);
    }
    return s;
  }
};

namespace detail {

// support comparison: size first, then lexicographic on indices
inline bool support_less(unsigned a, unsigned b) {
  const int pa = __builtin_popcount(a), pb = __builtin_popcount(b);
  if (pa != pb) return pa < pb;
  // compare smallest set bits first; bit i = index i
  while (a && b) {
    const int la = __builtin_ctz(a), lb = __builtin_ctz(b);
    if (la != lb) return la < lb;
    a &= a - 1;
    b &= b - 1;
  }
  return a == 0 && b != 0;
}

inline std::vector<unsigned> dependency_space(const std::vector<GroupElt>& labels) {
  const int n = static_cast<int>(labels.size());
  std::vector<unsigned> members;
  for (unsigned e = 0; e < (1u << n); ++e) {
    std::uint8_t sum = 0;
    for (int i = 0; i < n; ++i)
      if ((e >> i) & 1u) sum ^= labels[i].bits;
    if (sum == 0) members.push_back(e);
  }
  return members;  // includes 0
}

inline int rank_u(const std::vector<unsigned>& vecs) { return echelon_insert_all(vecs); }

}  // namespace detail

// Canonical minimal generating set of the dependency space of the labels.
// Index 0 of the output refers to labels[0] shifted by firstIndex, so the
// smooth-base tables use firstIndex = 1 and the ramified-double-curve tables
// pass the 0th label in front with firstIndex = 0.
inline RelationSet relations_canonical(const std::vector<GroupElt>& labels, int firstIndex = 1) {
  if (labels.empty() || labels.size() > 5)
    throw InvalidInput("relations_canonical expects between 1 and 5 labels");
  const auto space = detail::dependency_space(labels);
  std::vector<unsigned> nonzero(space.begin() + 1, space.end());
  std::sort(nonzero.begin(), nonzero.end(), detail::support_less);
  const int dim = detail::rank_u(nonzero);
  // Greedy choice of the support-lex-least independent subset.  Because the
  // candidates are scanned in support order, the greedy basis is the
  // lexicographically least one.
  std::vector<unsigned> basis;
  unsigned by_lead[32] = {};
  for (unsigned v0 : nonzero) {
    if (static_cast<int>(basis.size()) == dim) break;
    unsigned v = v0;
    while (v) {
      int lead = 31 - __builtin_clz(v);
      if (by_lead[lead]) {
        v ^= by_lead[lead];
      } else {
        by_lead[lead] = v;
        basis.push_back(v0);
        break;
      }
    }
  }
  RelationSet out;
  for (unsigned v : basis) {
    std::vector<int> support;
    for (int i = 0; i < static_cast<int>(labels.size()); ++i)
      if ((v >> i) & 1u) support.push_back(i + firstIndex);
    out.relations.push_back(support);
  }
  std::sort(out.relations.begin(), out.relations.end(),
            [](const std::vector<int>& a, const std::vector<int>& b) {
              if (a.size() != b.size()) return a.size() < b.size();
              return a < b;
            });
  return out;
}

inline int dependency_dimension(const std::vector<GroupElt>& labels) {
  return detail::rank_u(detail::dependency_space(labels));
}

}  // namespace stablecover

#endif  // STABLECOVER_GF2_HPP_
