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

#include "stablecover/symmetry.hpp"

#include <catch2/catch_amalgamated.hpp>

using namespace stablecover;

TEST_CASE("the symmetry group has order 48") {
  REQUIRE(symmetry_group().elements.size() == 48);
}

TEST_CASE("every element preserves the weight polytope") {
  const auto delta = delta_bur();
  for (const auto& e : symmetry_group().elements)
    REQUIRE(polytope_equal(e.apply(delta), delta));
}

TEST_CASE("the rotation cubes to the quadratic involution") {
  const auto& g = symmetry_group();
  const auto& rho = g.generators[3];
  const auto cube = rho.compose(rho).compose(rho);
  REQUIRE(cube == cremona_permutation());
  // order 6
  const auto sixth = cube.compose(cube.compose(rho.compose(rho.compose(rho))));
  (void)sixth;
  auto pow = identity_permutation();
  int order = 0;
  do {
    pow = pow.compose(rho);
    ++order;
  } while (!(pow == identity_permutation()));
  REQUIRE(order == 6);
}

TEST_CASE("the rotation cycles the hexagon of fixed curves") {
  const auto& rho = symmetry_group().generators[3];
  // slots: a0=0 a3=3 b0=4 b3=7 c0=8 c3=11
  // cycle a0 -> b3 -> c0 -> a3 -> b0 -> c3 -> a0
  REQUIRE(rho.perm[0] == 7);
  REQUIRE(rho.perm[7] == 8);
  REQUIRE(rho.perm[8] == 3);
  REQUIRE(rho.perm[3] == 4);
  REQUIRE(rho.perm[4] == 11);
  REQUIRE(rho.perm[11] == 0);
  // movers stay movers within the shifted family
  REQUIRE(rho.perm[1] == 5);
  REQUIRE(rho.perm[2] == 6);
}

TEST_CASE("dimension is invariant under the group") {
  const auto delta = delta_bur();
  auto cell = delta;
  cell.add(flat_inequality(std::vector<std::string>{"a0", "a1", "a2"}, 1));
  cell.add(flat_inequality(std::vector<std::string>{"c3", "a1", "a2"}, 1));
  const int d = dimension(cell);
  REQUIRE(d == 8);
  for (const auto& e : symmetry_group().elements) REQUIRE(dimension(e.apply(cell)) == d);
}

TEST_CASE("relabeling subgroup has index two") {
  REQUIRE(relabeling_subgroup().size() == 24);
}
