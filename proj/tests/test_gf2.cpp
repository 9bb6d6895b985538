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

#include "stablecover/gf2.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <random>

using namespace stablecover;

namespace {

std::vector<GroupElt> parse_all(std::initializer_list<const char*> strs) {
  std::vector<GroupElt> out;
  for (const char* s : strs) out.push_back(parse_group_elt(s));
  return out;
}

// brute-force closure under addition, independent of the span implementation
std::vector<GroupElt> closure_oracle(std::vector<GroupElt> gens, int k) {
  std::vector<GroupElt> members{zero_elt(k)};
  bool grew = true;
  while (grew) {
    grew = false;
    for (size_t i = 0; i < members.size(); ++i)
      for (const auto& g : gens) {
        GroupElt s = members[i] + g;
        if (std::find(members.begin(), members.end(), s) == members.end()) {
          members.push_back(s);
          grew = true;
        }
      }
  }
  std::sort(members.begin(), members.end());
  return members;
}

}  // namespace

TEST_CASE("span of a basis is the whole group") {
  auto s = span_f2(parse_all({"100", "010", "001"}));
  REQUIRE(s.size() == 8);
}

TEST_CASE("span with a dependent vector") {
  // 111 = 100 + 011, so the span has rank 2
  auto s = span_f2(parse_all({"100", "011", "111"}));
  REQUIRE(s.size() == 4);
}

TEST_CASE("empty span is the zero subgroup") {
  auto s = span_f2({}, 3);
  REQUIRE(s.size() == 1);
  REQUIRE(s[0].is_zero());
}

TEST_CASE("span properties on random inputs") {
  std::mt19937 rng(20260810);
  for (int trial = 0; trial < 200; ++trial) {
    const int k = 1 + static_cast<int>(rng() % 6);
    std::vector<GroupElt> gens;
    const int n = static_cast<int>(rng() % 5);
    for (int i = 0; i < n; ++i)
      gens.push_back(GroupElt(static_cast<std::uint8_t>(k),
                              static_cast<std::uint8_t>(rng() % (1u << k))));
    auto s = span_f2(gens, k);
    // size is a power of two
    REQUIRE((s.size() & (s.size() - 1)) == 0);
    // contains every input element
    for (const auto& g : gens)
      REQUIRE(std::find(s.begin(), s.end(), g) != s.end());
    // agrees with the brute-force closure
    REQUIRE(s == closure_oracle(gens, k));
    // sorted ascending
    REQUIRE(std::is_sorted(s.begin(), s.end()));
  }
}

TEST_CASE("character pairing") {
  REQUIRE(dot_f2(parse_group_elt("111"), parse_group_elt("100")) == 1);
  REQUIRE(dot_f2(parse_group_elt("110"), parse_group_elt("011")) == 1);
  REQUIRE(dot_f2(parse_group_elt("101"), parse_group_elt("010")) == 0);
  REQUIRE_FALSE(pairs_to_minus_one(zero_elt(3), parse_group_elt("101")));
}

TEST_CASE("relations of independent labels are empty") {
  auto r = relations_canonical(parse_all({"100", "010", "001"}));
  REQUIRE(r.empty());
  REQUIRE(r.str() == "none");
}

TEST_CASE("relation 123") {
  auto r = relations_canonical(parse_all({"100", "010", "110"}));
  REQUIRE(r.str() == "123");
}

TEST_CASE("relations 12,134") {
  auto r = relations_canonical(parse_all({"110", "110", "011", "101"}));
  REQUIRE(r.relations == std::vector<std::vector<int>>{{1, 2}, {1, 3, 4}});
}

TEST_CASE("relations 13,24 prefers small supports") {
  auto r = relations_canonical(parse_all({"10", "01", "10", "01"}));
  REQUIRE(r.relations == std::vector<std::vector<int>>{{1, 3}, {2, 4}});
}

TEST_CASE("all labels equal gives 12,13,14") {
  auto r = relations_canonical(parse_all({"1", "1", "1", "1"}));
  REQUIRE(r.relations == std::vector<std::vector<int>>{{1, 2}, {1, 3}, {1, 4}});
}

TEST_CASE("relation canonicalization is permutation-stable in dimension") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 300; ++trial) {
    const int k = 2 + static_cast<int>(rng() % 3);
    const int n = 1 + static_cast<int>(rng() % 4);
    std::vector<GroupElt> labels;
    for (int i = 0; i < n; ++i)
      labels.push_back(GroupElt(static_cast<std::uint8_t>(k),
                                static_cast<std::uint8_t>(1 + rng() % ((1u << k) - 1))));
    auto base = relations_canonical(labels);
    std::vector<GroupElt> shuffled = labels;
    std::shuffle(shuffled.begin(), shuffled.end(), rng);
    auto perm = relations_canonical(shuffled);
    REQUIRE(base.relations.size() == perm.relations.size());
    REQUIRE(dependency_dimension(labels) == dependency_dimension(shuffled));
  }
}

TEST_CASE("mixed lengths are rejected") {
  REQUIRE_THROWS_AS(span_f2(parse_all({"10", "100"})), InvalidInput);
}
