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

#include "stablecover/polytope.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <random>

using namespace stablecover;

namespace {

Polytope box(size_t n, const Rational& lo, const Rational& hi) {
  Polytope p(n);
  for (size_t i = 0; i < n; ++i) {
    Halfspace upper;
    upper.coeffs.assign(n, Rational(0));
    upper.coeffs[i] = 1;
    upper.bound = hi;
    p.add(upper);
    Halfspace lower;
    lower.coeffs.assign(n, Rational(0));
    lower.coeffs[i] = -1;
    lower.bound = -lo;
    p.add(lower);
  }
  return p;
}

Vec unit(size_t n, size_t i, int sign = 1) {
  Vec v(n, Rational(0));
  v[i] = sign;
  return v;
}

}  // namespace

TEST_CASE("maximize over a box") {
  auto p = box(3, Rational(-1), Rational(2));
  Vec obj = {Rational(1), Rational(-2), Rational(3)};
  auto r = lp_maximize(p, obj);
  REQUIRE(r.status == LpStatus::Optimal);
  REQUIRE(r.value == 2 + 2 + 6);
  REQUIRE(r.point == Vec{Rational(2), Rational(-1), Rational(2)});
}

TEST_CASE("equality-constrained optimum") {
  // max x + y on the segment x + y = 1, 0 <= x, y <= 1
  Polytope p = box(2, Rational(0), Rational(1));
  p.add_equality({Rational(1), Rational(1)}, Rational(1));
  auto r = lp_maximize(p, {Rational(2), Rational(1)});
  REQUIRE(r.status == LpStatus::Optimal);
  REQUIRE(r.value == 2);  // x = 1, y = 0
}

TEST_CASE("infeasible and unbounded cases") {
  Polytope p = box(2, Rational(0), Rational(1));
  p.add_equality({Rational(1), Rational(1)}, Rational(5));
  REQUIRE(lp_maximize(p, unit(2, 0)).status == LpStatus::Infeasible);
  REQUIRE(is_empty(p));

  Polytope q(2);
  Halfspace h;
  h.coeffs = {Rational(1), Rational(0)};
  h.bound = 0;
  q.add(h);  // x <= 0, y free
  REQUIRE(lp_maximize(q, unit(2, 1)).status == LpStatus::Unbounded);
  REQUIRE(lp_maximize(q, unit(2, 0)).status == LpStatus::Optimal);
}

TEST_CASE("dimension of simple sets") {
  auto p = box(3, Rational(0), Rational(1));
  REQUIRE(dimension(p) == 3);
  p.add_equality({Rational(1), Rational(1), Rational(1)}, Rational(1));
  REQUIRE(dimension(p) == 2);
  // an implicit equality: x <= 0 and x >= 0
  Halfspace h;
  h.coeffs = {Rational(1), Rational(0), Rational(0)};
  h.bound = 0;
  p.add(h);
  REQUIRE(dimension(p) == 1);
  // empty
  Polytope e = box(2, Rational(1), Rational(0));
  REQUIRE(dimension(e) == -1);
}

TEST_CASE("relative interior points are strict") {
  auto p = box(4, Rational(0), Rational(1));
  p.add_equality({Rational(1), Rational(1), Rational(1), Rational(1)}, Rational(2));
  auto x = relative_interior_point(p);
  REQUIRE(x.has_value());
  for (const auto& v : *x) {
    REQUIRE(v > 0);
    REQUIRE(v < 1);
  }
  REQUIRE(dot({Rational(1), Rational(1), Rational(1), Rational(1)}, *x) == 2);
}

TEST_CASE("relative interior of a face sits on the face") {
  auto p = box(2, Rational(0), Rational(1));
  Halfspace h;
  h.coeffs = {Rational(1), Rational(0)};
  h.sense = Sense::Ge;
  h.bound = 1;  // x >= 1 forces the right edge
  p.add(h);
  auto x = relative_interior_point(p);
  REQUIRE(x.has_value());
  REQUIRE((*x)[0] == 1);
  REQUIRE((*x)[1] > 0);
  REQUIRE((*x)[1] < 1);
}

TEST_CASE("the weight polytope has dimension 8") {
  const auto p = delta_bur();
  REQUIRE(dimension(p) == 8);
}

TEST_CASE("the all-1/3 point is interior") {
  const auto p = delta_bur();
  const Vec third(12, Rational(1, 3));
  REQUIRE(p.contains_point(third));
  for (const auto& h : p.inequalities) REQUIRE(dot(h.le_coeffs(), third) < h.le_bound());
}

TEST_CASE("membership is decidable by evaluation") {
  const auto p = delta_bur();
  Vec x(12, Rational(1, 2));
  // all coordinates 1/2 violates the nine-coordinate sum
  REQUIRE_FALSE(p.contains_point(x));
}

TEST_CASE("interior point of the weight polytope") {
  const auto p = delta_bur();
  auto x = relative_interior_point(p);
  REQUIRE(x.has_value());
  for (const auto& h : p.inequalities) REQUIRE(dot(h.le_coeffs(), *x) < h.le_bound());
  for (const auto& [a, b] : p.equalities) REQUIRE(dot(a, *x) == b);
}

TEST_CASE("flat inequalities") {
  auto h = flat_inequality(std::vector<std::string>{"a0", "a1", "a2"}, 1);
  REQUIRE(h.bound == 1);
  REQUIRE(h.coeffs[0] == 1);
  REQUIRE(h.coeffs[3] == 0);
  auto h2 = flat_inequality(std::vector<std::string>{"a1", "a2", "b1", "b2", "c1"}, 2);
  REQUIRE(h2.bound == 2);

  // a0 + a1 + a2 <= 1 produces an 8-dimensional cell
  auto p = delta_bur();
  p.add(h);
  REQUIRE(dimension(p) == 8);
  // adding the complementary bound keeps it a face
  Halfspace rev = h;
  rev.sense = Sense::Ge;
  p.add(rev);
  REQUIRE(dimension(p) == 7);
}

TEST_CASE("contradictory flats give the empty set") {
  auto p = delta_bur();
  Halfspace h = flat_inequality(std::vector<std::string>{"a0", "a1", "a2"}, 1);
  h.bound = 0;
  p.add(h);
  Halfspace g = flat_inequality(std::vector<std::string>{"a0", "a1", "a2"}, 1);
  g.sense = Sense::Ge;
  p.add(g);
  REQUIRE(dimension(p) == -1);
}

TEST_CASE("containment and equality") {
  auto inner = box(2, Rational(0), Rational(1));
  auto outer = box(2, Rational(-1), Rational(2));
  REQUIRE(polytope_contains(outer, inner));
  REQUIRE_FALSE(polytope_contains(inner, outer));
  REQUIRE(polytope_equal(inner, inner));
  // the same square cut out by redundant constraints
  auto redundant = box(2, Rational(0), Rational(1));
  Halfspace h;
  h.coeffs = {Rational(1), Rational(1)};
  h.bound = 5;
  redundant.add(h);
  REQUIRE(polytope_equal(inner, redundant));
}

TEST_CASE("lp results are reproducible") {
  const auto p = delta_bur();
  std::mt19937 rng(2026);
  for (int trial = 0; trial < 20; ++trial) {
    Vec obj(12, Rational(0));
    for (auto& v : obj) v = Rational(static_cast<int>(rng() % 11) - 5);
    auto r1 = lp_maximize(p, obj);
    auto r2 = lp_maximize(p, obj);
    REQUIRE(r1.status == LpStatus::Optimal);
    REQUIRE(r1.value == r2.value);
    REQUIRE(r1.point == r2.point);
    REQUIRE(p.contains_point(r1.point));
    REQUIRE(dot(obj, r1.point) == r1.value);
  }
}

TEST_CASE("relative interior point of a facet of the weight polytope") {
  auto p = delta_bur();
  Halfspace face;
  face.coeffs.assign(12, Rational(0));
  face.coeffs[0] = 1;  // a0
  face.bound = Rational(1, 2);
  face.sense = Sense::Ge;
  p.add(face);  // pins a0 = 1/2
  const auto x = relative_interior_point(p);
  REQUIRE(x.has_value());
  REQUIRE((*x)[0] == Rational(1, 2));
  int strict = 0;
  for (int i = 1; i < 12; ++i) {
    REQUIRE((*x)[i] > 0);
    REQUIRE((*x)[i] <= Rational(1, 2));
    if ((*x)[i] < Rational(1, 2)) ++strict;
  }
  // only the pinned coordinate sits on its bound
  REQUIRE(strict == 11);
}

TEST_CASE("simplex agrees with exhaustive vertex enumeration") {
  // Oracle: a bounded 3-variable system's optimum sits at a vertex, and the
  // vertices are the feasible intersections of constraint triples.
  std::mt19937 rng(777);
  for (int trial = 0; trial < 40; ++trial) {
    Polytope p = box(3, Rational(-2), Rational(2));
    const int cuts = 1 + static_cast<int>(rng() % 4);
    for (int i = 0; i < cuts; ++i) {
      Halfspace h;
      h.coeffs.clear();
      for (int j = 0; j < 3; ++j) h.coeffs.push_back(Rational(static_cast<int>(rng() % 7) - 3));
      h.bound = Rational(static_cast<int>(rng() % 9) - 2);
      if (h.coeffs == Vec(3, Rational(0))) continue;
      p.add(h);
    }
    Vec obj;
    for (int j = 0; j < 3; ++j) obj.push_back(Rational(static_cast<int>(rng() % 11) - 5));

    // all feasible intersection points of constraint triples
    std::vector<std::pair<Vec, Rational>> rows;
    for (const auto& h : p.inequalities) rows.emplace_back(h.le_coeffs(), h.le_bound());
    std::optional<Rational> best;
    const size_t n = rows.size();
    for (size_t a = 0; a < n; ++a)
      for (size_t b = a + 1; b < n; ++b)
        for (size_t c = b + 1; c < n; ++c) {
          // solve the 3x3 system by elimination
          poly_detail::EqualityBasis basis({}, 3);
          basis.insert(rows[a].first, rows[a].second, 3);
          basis.insert(rows[b].first, rows[b].second, 3);
          basis.insert(rows[c].first, rows[c].second, 3);
          if (basis.rank() != 3 || basis.inconsistent) continue;
          Vec x(3, Rational(0));
          for (size_t r = 0; r < 3; ++r) x[basis.pivots[r]] = basis.rows[r].second;
          if (!p.contains_point(x)) continue;
          const Rational v = dot(obj, x);
          if (!best || v > *best) best = v;
        }

    const auto r = lp_maximize(p, obj);
    if (!best) {
      REQUIRE(r.status == LpStatus::Infeasible);
    } else {
      REQUIRE(r.status == LpStatus::Optimal);
      REQUIRE(r.value == *best);
    }
  }
}
