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

#ifndef STABLECOVER_POLYTOPE_HPP_
#define STABLECOVER_POLYTOPE_HPP_

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "stablecover/lp.hpp"

namespace stablecover {

// Coordinate order used throughout: a0 a1 a2 a3 b0 b1 b2 b3 c0 c1 c2 c3.
inline const std::array<const char*, 12>& coordinate_names() {
  static const std::array<const char*, 12> names = {"a0", "a1", "a2", "a3", "b0", "b1",
                                                    "b2", "b3", "c0", "c1", "c2", "c3"};
  return names;
}

inline int coordinate_index(const std::string& name) {
  const auto& names = coordinate_names();
  for (int i = 0; i < 12; ++i)
    if (name == names[i]) return i;
  throw InvalidInput("unknown coordinate label: " + name);
}

enum class Sense { Le, Ge };

struct Halfspace {
  Vec coeffs;
  Rational bound;
  Sense sense = Sense::Le;

  // normalized to <= form
  Vec le_coeffs() const {
    Vec c = coeffs;
    if (sense == Sense::Ge)
      for (auto& x : c) x = -x;
    return c;
  }
  Rational le_bound() const { return sense == Sense::Ge ? -bound : bound; }

  bool operator==(const Halfspace& o) const {
    return coeffs == o.coeffs && bound == o.bound && sense == o.sense;
  }
  bool operator<(const Halfspace& o) const {
    if (coeffs != o.coeffs) return coeffs < o.coeffs;
    if (bound != o.bound) return bound < o.bound;
    return sense < o.sense;
  }
};

// Sum of the named coordinates bounded by the flat rank: rank 1 encodes
// coincident divisors, rank 2 a concurrency class.
inline Halfspace flat_inequality(const std::vector<int>& subset, int rankBound) {
  if (subset.empty()) throw InvalidInput("flat_inequality: empty subset");
  if (rankBound != 1 && rankBound != 2) throw InvalidInput("flat rank must be 1 or 2");
  Halfspace h;
  h.coeffs.assign(12, Rational(0));
  for (int i : subset) {
    if (i < 0 || i >= 12) throw InvalidInput("flat_inequality: coordinate out of range");
    h.coeffs[i] = 1;
  }
  h.bound = rankBound;
  h.sense = Sense::Le;
  return h;
}

inline Halfspace flat_inequality(const std::vector<std::string>& labels, int rankBound) {
  std::vector<int> subset;
  for (const auto& s : labels) subset.push_back(coordinate_index(s));
  return flat_inequality(subset, rankBound);
}

struct Polytope {
  size_t n = 0;
  std::vector<std::pair<Vec, Rational>> equalities;
  std::vector<Halfspace> inequalities;

  Polytope() = default;
  explicit Polytope(size_t dim) : n(dim) {}

  void add_equality(Vec a, Rational b) { equalities.emplace_back(std::move(a), std::move(b)); }
  void add(Halfspace h) { inequalities.push_back(std::move(h)); }

  bool contains_point(const Vec& x) const {
    for (const auto& [a, b] : equalities)
      if (dot(a, x) != b) return false;
    for (const auto& h : inequalities)
      if (dot(h.le_coeffs(), x) > h.le_bound()) return false;
    return true;
  }

};

namespace poly_detail {

// Row-reduce the equality system; returns the reduced rows (pivots
// normalized) and pivot columns.  Also exposes reduction of an arbitrary
// functional modulo the system.
struct EqualityBasis {
  std::vector<std::pair<Vec, Rational>> rows;  // rref rows
  std::vector<int> pivots;
  bool inconsistent = false;

  explicit EqualityBasis(const std::vector<std::pair<Vec, Rational>>& eqs, size_t n) {
    for (const auto& [a, b] : eqs) insert(a, b, n);
  }

  // returns false if the row reduces to 0 = nonzero (inconsistent system)
  bool insert(Vec a, Rational b, size_t n) {
    reduce(&a, &b);
    int pivot = -1;
    for (size_t j = 0; j < n; ++j)
      if (a[j] != 0) {
        pivot = static_cast<int>(j);
        break;
      }
    if (pivot < 0) {
      if (b != 0) inconsistent = true;
      return b == 0;
    }
    const Rational inv = Rational(1) / a[pivot];
    for (auto& x : a) x *= inv;
    b *= inv;
    // back-substitute into existing rows
    for (size_t r = 0; r < rows.size(); ++r) {
      const Rational f = rows[r].first[pivot];
      if (f == 0) continue;
      for (size_t j = 0; j < n; ++j) rows[r].first[j] -= f * a[j];
      rows[r].second -= f * b;
    }
    rows.emplace_back(std::move(a), std::move(b));
    pivots.push_back(pivot);
    return true;
  }

  void reduce(Vec* a, Rational* b) const {
    for (size_t r = 0; r < rows.size(); ++r) {
      const Rational f = (*a)[pivots[r]];
      if (f == 0) continue;
      for (size_t j = 0; j < a->size(); ++j) (*a)[j] -= f * rows[r].first[j];
      *b -= f * rows[r].second;
    }
  }

  size_t rank() const { return rows.size(); }
};

inline bool is_zero_vec(const Vec& a) {
  for (const auto& x : a)
    if (x != 0) return false;
  return true;
}

}  // namespace poly_detail

inline LpResult lp_maximize(const Polytope& p, const Vec& objective) {
  std::vector<Vec> eqA;
  Vec eqB;
  for (const auto& [a, b] : p.equalities) {
    eqA.push_back(a);
    eqB.push_back(b);
  }
  std::vector<Vec> inA;
  Vec inB;
  for (const auto& h : p.inequalities) {
    inA.push_back(h.le_coeffs());
    inB.push_back(h.le_bound());
  }
  if (eqA.empty() && inA.empty()) {
    // whole space; only the zero objective is bounded
    LpResult r;
    if (poly_detail::is_zero_vec(objective)) {
      r.status = LpStatus::Optimal;
      r.value = 0;
      r.point.assign(p.n, Rational(0));
    } else {
      r.status = LpStatus::Unbounded;
    }
    return r;
  }
  SimplexSolver solver(std::move(eqA), std::move(eqB), std::move(inA), std::move(inB));
  return solver.maximize(objective);
}

inline LpResult lp_minimize(const Polytope& p, const Vec& objective) {
  Vec neg = objective;
  for (auto& x : neg) x = -x;
  LpResult r = lp_maximize(p, neg);
  if (r.status == LpStatus::Optimal) r.value = -r.value;
  return r;
}

inline bool is_empty(const Polytope& p) {
  return lp_maximize(p, Vec(p.n, Rational(0))).status == LpStatus::Infeasible;
}

// Inequalities reduced modulo the equality span; constant rows are dropped
// (or flag the system empty).  The remaining rows have nonzero reduced
// normals.
struct ReducedSystem {
  bool empty = false;  // inconsistent constants
  poly_detail::EqualityBasis basis;
  std::vector<std::pair<Vec, Rational>> ineqs;  // reduced a.x <= b, a != 0
  std::vector<int> source;                      // index into p.inequalities

  explicit ReducedSystem(const Polytope& p) : basis(p.equalities, p.n) {
    empty = basis.inconsistent;
    for (size_t i = 0; i < p.inequalities.size(); ++i) {
      Vec a = p.inequalities[i].le_coeffs();
      Rational b = p.inequalities[i].le_bound();
      basis.reduce(&a, &b);
      if (poly_detail::is_zero_vec(a)) {
        if (b < 0) empty = true;  // constant violated
        continue;
      }
      ineqs.emplace_back(std::move(a), std::move(b));
      source.push_back(static_cast<int>(i));
    }
  }
};

// Exact affine dimension (-1 for the empty set): detect implicit equalities
// with one LP per reduced inequality, then count the rank of the combined
// equality system.
inline int dimension(const Polytope& p) {
  ReducedSystem rs(p);
  if (rs.empty || is_empty(p)) return -1;
  poly_detail::EqualityBasis extended = rs.basis;
  for (const auto& [a, b] : rs.ineqs) {
    Vec ra = a;
    Rational rb = b;
    extended.reduce(&ra, &rb);
    if (poly_detail::is_zero_vec(ra)) continue;  // already implied
    const LpResult r = lp_minimize(p, a);
    if (r.status == LpStatus::Optimal && r.value == b) extended.insert(a, b, p.n);
  }
  return static_cast<int>(p.n - extended.rank());
}

// Quick full-dimension test relative to the equality span: true iff some
// point satisfies every reduced inequality strictly.
inline bool has_strict_point(const Polytope& p, Vec* witness = nullptr) {
  ReducedSystem rs(p);
  if (rs.empty) return false;
  // maximize t with a.x + t <= b, t <= 1
  Polytope aug(p.n + 1);
  for (const auto& [a, b] : p.equalities) {
    Vec ea = a;
    ea.push_back(0);
    aug.add_equality(ea, b);
  }
  for (const auto& [a, b] : rs.ineqs) {
    Halfspace h;
    h.coeffs = a;
    h.coeffs.push_back(1);
    h.bound = b;
    aug.add(h);
  }
  Halfspace cap;
  cap.coeffs.assign(p.n + 1, Rational(0));
  cap.coeffs[p.n] = 1;
  cap.bound = 1;
  aug.add(cap);
  Vec obj(p.n + 1, Rational(0));
  obj[p.n] = 1;
  const LpResult r = lp_maximize(aug, obj);
  if (r.status != LpStatus::Optimal || r.value <= 0) return false;
  if (witness) witness->assign(r.point.begin(), r.point.begin() + p.n);
  return true;
}

// A rational point strictly inside every non-implicit inequality.  Implicit
// equalities are detected first, then the uniform slack is maximized.
inline std::optional<Vec> relative_interior_point(const Polytope& p) {
  ReducedSystem rs(p);
  if (rs.empty || is_empty(p)) return std::nullopt;
  // find implicit equalities
  std::vector<char> implicit(rs.ineqs.size(), 0);
  for (size_t i = 0; i < rs.ineqs.size(); ++i) {
    const auto& [a, b] = rs.ineqs[i];
    const LpResult r = lp_minimize(p, a);
    if (r.status == LpStatus::Optimal && r.value == b) implicit[i] = 1;
  }
  Polytope aug(p.n + 1);
  for (const auto& [a, b] : p.equalities) {
    Vec ea = a;
    ea.push_back(0);
    aug.add_equality(ea, b);
  }
  for (size_t i = 0; i < rs.ineqs.size(); ++i) {
    Halfspace h;
    h.coeffs = rs.ineqs[i].first;
    h.coeffs.push_back(implicit[i] ? Rational(0) : Rational(1));
    h.bound = rs.ineqs[i].second;
    if (implicit[i]) {
      aug.add_equality(h.coeffs, h.bound);
    } else {
      aug.add(h);
    }
  }
  Halfspace cap;
  cap.coeffs.assign(p.n + 1, Rational(0));
  cap.coeffs[p.n] = 1;
  cap.bound = 1;
  aug.add(cap);
  Vec obj(p.n + 1, Rational(0));
  obj[p.n] = 1;
  const LpResult r = lp_maximize(aug, obj);
  if (r.status != LpStatus::Optimal) return std::nullopt;
  return Vec(r.point.begin(), r.point.begin() + p.n);
}

// Is every point of p inside the halfspace?
inline bool implies(const Polytope& p, const Halfspace& h) {
  const LpResult r = lp_maximize(p, h.le_coeffs());
  if (r.status == LpStatus::Infeasible) return true;
  if (r.status == LpStatus::Unbounded) return false;
  return r.value <= h.le_bound();
}

inline bool polytope_contains(const Polytope& outer, const Polytope& inner) {
  for (const auto& [a, b] : outer.equalities) {
    Halfspace le{a, b, Sense::Le};
    Halfspace ge{a, b, Sense::Ge};
    if (!implies(inner, le) || !implies(inner, ge)) return false;
  }
  for (const auto& h : outer.inequalities)
    if (!implies(inner, h)) return false;
  return true;
}

// Canonical constraint form: the RREF of the equality system together with
// every inequality reduced modulo it and rescaled to a +/-1 leading
// coefficient.  Two polytopes with identical canonical forms are equal; the
// converse fails in the presence of redundant constraints, so callers fall
// back to LP containment.
struct CanonicalConstraints {
  std::vector<std::pair<Vec, Rational>> equalities;
  std::vector<std::pair<Vec, Rational>> inequalities;  // a.x <= b
  bool operator==(const CanonicalConstraints& o) const {
    return equalities == o.equalities && inequalities == o.inequalities;
  }
};

inline CanonicalConstraints canonical_constraints(const Polytope& p) {
  CanonicalConstraints out;
  ReducedSystem rs(p);
  out.equalities = rs.basis.rows;
  for (auto [a, b] : rs.ineqs) {
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
    out.inequalities.emplace_back(std::move(a), std::move(b));
  }
  std::sort(out.equalities.begin(), out.equalities.end());
  std::sort(out.inequalities.begin(), out.inequalities.end());
  out.inequalities.erase(std::unique(out.inequalities.begin(), out.inequalities.end()),
                         out.inequalities.end());
  return out;
}

inline bool polytope_equal(const Polytope& a, const Polytope& b) {
  if (canonical_constraints(a) == canonical_constraints(b)) return true;
  return polytope_contains(a, b) && polytope_contains(b, a);
}

// Serialized canonical form; equal keys imply equal polytopes, and for
// systems without redundant inequalities the converse holds as well.
inline std::string polytope_form_key(const Polytope& p) {
  const auto form = canonical_constraints(p);
  std::string key;
  for (const auto& [a, b] : form.equalities) {
    for (const auto& x : a) key += format_rational(x) + ",";
    key += "=" + format_rational(b) + ";";
  }
  for (const auto& [a, b] : form.inequalities) {
    for (const auto& x : a) key += format_rational(x) + ",";
    key += "<" + format_rational(b) + ";";
  }
  return key;
}

// The eight-dimensional weight polytope of the twelve-divisor arrangement:
// 0 <= x <= 1/2 in all coordinates, the nine indices 0..2 sum to 3, and the
// three exceptional coordinates are determined affine-linearly.
inline Polytope delta_bur() {
  Polytope p(12);
  const int a0 = 0, a1 = 1, a2 = 2, a3 = 3;
  const int b0 = 4, b1 = 5, b2 = 6, b3 = 7;
  const int c0 = 8, c1 = 9, c2 = 10, c3 = 11;
  auto unit = [&](std::initializer_list<std::pair<int, int>> terms) {
    Vec v(12, Rational(0));
    for (auto [idx, coef] : terms) v[idx] = coef;
    return v;
  };
  // sum_{i=0..2} (a_i + b_i + c_i) = 3
  p.add_equality(unit({{a0, 1}, {a1, 1}, {a2, 1}, {b0, 1}, {b1, 1}, {b2, 1},
                       {c0, 1}, {c1, 1}, {c2, 1}}),
                 Rational(3));
  // a3 = c0 + c1 + c2 + b0 - 1
  p.add_equality(unit({{a3, 1}, {c0, -1}, {c1, -1}, {c2, -1}, {b0, -1}}), Rational(-1));
  // b3 = a0 + a1 + a2 + c0 - 1
  p.add_equality(unit({{b3, 1}, {a0, -1}, {a1, -1}, {a2, -1}, {c0, -1}}), Rational(-1));
  // c3 = b0 + b1 + b2 + a0 - 1
  p.add_equality(unit({{c3, 1}, {b0, -1}, {b1, -1}, {b2, -1}, {a0, -1}}), Rational(-1));
  for (int i = 0; i < 12; ++i) {
    Halfspace lower;
    lower.coeffs.assign(12, Rational(0));
    lower.coeffs[i] = -1;
    lower.bound = 0;
    p.add(lower);  // x_i >= 0
    Halfspace upper;
    upper.coeffs.assign(12, Rational(0));
    upper.coeffs[i] = 1;
    upper.bound = Rational(1, 2);
    p.add(upper);  // x_i <= 1/2
  }
  return p;
}

}  // namespace stablecover

#endif  // STABLECOVER_POLYTOPE_HPP_
