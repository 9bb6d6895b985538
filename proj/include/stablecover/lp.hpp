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

#ifndef STABLECOVER_LP_HPP_
#define STABLECOVER_LP_HPP_

#include <vector>

#include "stablecover/rational.hpp"

namespace stablecover {

using Vec = std::vector<Rational>;

inline Rational dot(const Vec& a, const Vec& b) {
  if (a.size() != b.size()) throw InvalidInput("dot: size mismatch");
  Rational s(0);
  for (size_t i = 0; i < a.size(); ++i)
    if (a[i] != 0 && b[i] != 0) s += a[i] * b[i];
  return s;
}

enum class LpStatus { Optimal, Infeasible, Unbounded };

struct LpResult {
  LpStatus status = LpStatus::Infeasible;
  Rational value;  // objective at the optimum
  Vec point;       // a maximizer (n free variables)
};

// Exact rational simplex with Bland's rule, so termination is guaranteed and
// the computed optimum is deterministic for a fixed constraint order.
//
// The public problem is over n FREE variables:
//     maximize  c.x
//     s.t.      eqA x  = eqB
//               inA x <= inB
// Internally variables split as x = u - v with u, v >= 0 plus slacks; the
// two-phase method finds an initial basis.
class SimplexSolver {
 public:
  SimplexSolver(std::vector<Vec> eqA, Vec eqB, std::vector<Vec> inA, Vec inB)
      : eqA_(std::move(eqA)), eqB_(std::move(eqB)), inA_(std::move(inA)), inB_(std::move(inB)) {
    n_ = 0;
    if (!eqA_.empty()) n_ = eqA_.front().size();
    if (!inA_.empty()) n_ = std::max(n_, inA_.front().size());
  }

  LpResult maximize(const Vec& objective) const {
    const size_t m = eqA_.size() + inA_.size();
    const size_t cols = 2 * n_ + inA_.size();  // u, v, slacks
    // rows: Ax (+ slack) = b with b >= 0 after sign normalization
    std::vector<Vec> a(m, Vec(cols, Rational(0)));
    Vec b(m, Rational(0));
    for (size_t i = 0; i < eqA_.size(); ++i) {
      for (size_t j = 0; j < n_; ++j) {
        a[i][j] = eqA_[i][j];
        a[i][n_ + j] = -eqA_[i][j];
      }
      b[i] = eqB_[i];
    }
    for (size_t i = 0; i < inA_.size(); ++i) {
      const size_t r = eqA_.size() + i;
      for (size_t j = 0; j < n_; ++j) {
        a[r][j] = inA_[i][j];
        a[r][n_ + j] = -inA_[i][j];
      }
      a[r][2 * n_ + i] = 1;
      b[r] = inB_[i];
    }
    for (size_t i = 0; i < m; ++i)
      if (b[i] < 0) {
        for (auto& x : a[i]) x = -x;
        b[i] = -b[i];
      }

    // minimize -c.(u - v)
    Vec cost(cols, Rational(0));
    for (size_t j = 0; j < n_ && j < objective.size(); ++j) {
      cost[j] = -objective[j];
      cost[n_ + j] = objective[j];
    }

    Vec solution;
    Rational minValue;
    const LpStatus status = solve_standard(a, b, cost, &solution, &minValue);
    LpResult out;
    out.status = status;
    if (status == LpStatus::Optimal) {
      out.value = -minValue;
      out.point.assign(n_, Rational(0));
      for (size_t j = 0; j < n_; ++j) out.point[j] = solution[j] - solution[n_ + j];
    }
    return out;
  }

  size_t num_vars() const { return n_; }

 private:
  // min cost.x st a x = b, x >= 0, b >= 0.  Two phases, Bland's rule.
  static LpStatus solve_standard(std::vector<Vec> a, Vec b, Vec cost, Vec* solution,
                                 Rational* value) {
    const size_t m = a.size();
    const size_t n = m == 0 ? cost.size() : a.front().size();
    // phase 1: artificial columns n..n+m-1
    std::vector<Vec> t(a);
    for (size_t i = 0; i < m; ++i) {
      t[i].resize(n + m, Rational(0));
      t[i][n + i] = 1;
    }
    std::vector<int> basis(m);
    for (size_t i = 0; i < m; ++i) basis[i] = static_cast<int>(n + i);

    Vec z(n + m, Rational(0));
    Rational obj(0);
    for (size_t j = 0; j < n; ++j) {
      Rational s(0);
      for (size_t i = 0; i < m; ++i) s += t[i][j];
      z[j] = -s;
    }
    for (size_t i = 0; i < m; ++i) obj -= b[i];

    if (!pivot_until_optimal(t, b, z, basis, &obj)) return LpStatus::Unbounded;  // cannot happen
    if (obj != 0) return LpStatus::Infeasible;

    // drive artificial variables out of the basis
    for (size_t i = 0; i < m; ++i) {
      if (basis[i] < static_cast<int>(n)) continue;
      int col = -1;
      for (size_t j = 0; j < n; ++j)
        if (t[i][j] != 0) {
          col = static_cast<int>(j);
          break;
        }
      if (col >= 0) pivot(t, b, z, basis, i, static_cast<size_t>(col), &obj);
    }

    // remove redundant rows (artificial still basic, necessarily at zero)
    // and drop the artificial columns for phase 2
    {
      size_t w = 0;
      for (size_t i = 0; i < t.size(); ++i) {
        if (basis[i] >= static_cast<int>(n)) continue;
        if (w != i) {
          t[w] = std::move(t[i]);
          b[w] = b[i];
          basis[w] = basis[i];
        }
        ++w;
      }
      t.resize(w);
      b.resize(w);
      basis.resize(w);
      for (auto& row : t) row.resize(n);
    }

    // phase 2 objective row
    Vec z2 = cost;
    z2.resize(n);
    Rational obj2(0);
    for (size_t i = 0; i < t.size(); ++i) {
      const int bj = basis[i];
      if (z2[bj] == 0) continue;
      const Rational w = z2[bj];
      for (size_t j = 0; j < n; ++j) z2[j] -= w * t[i][j];
      obj2 -= w * b[i];
    }

    if (!pivot_until_optimal(t, b, z2, basis, &obj2)) return LpStatus::Unbounded;

    solution->assign(n, Rational(0));
    for (size_t i = 0; i < t.size(); ++i)
      if (basis[i] < static_cast<int>(n)) (*solution)[basis[i]] = b[i];
    *value = -obj2;  // obj2 tracks -(cost . x)
    return LpStatus::Optimal;
  }

  static void pivot(std::vector<Vec>& t, Vec& b, Vec& z, std::vector<int>& basis, size_t row,
                    size_t col, Rational* obj) {
    const size_t m = t.size();
    const size_t n = t.front().size();
    const Rational inv = Rational(1) / t[row][col];
    for (size_t j = 0; j < n; ++j) t[row][j] *= inv;
    b[row] *= inv;
    t[row][col] = 1;
    for (size_t i = 0; i < m; ++i) {
      if (i == row || t[i][col] == 0) continue;
      const Rational f = t[i][col];
      for (size_t j = 0; j < n; ++j)
        if (t[row][j] != 0) t[i][j] -= f * t[row][j];
      b[i] -= f * b[row];
      t[i][col] = 0;
    }
    if (z[col] != 0) {
      const Rational f = z[col];
      for (size_t j = 0; j < n; ++j)
        if (t[row][j] != 0) z[j] -= f * t[row][j];
      *obj -= f * b[row];
      z[col] = 0;
    }
    basis[row] = static_cast<int>(col);
  }

  // Bland's rule: entering column = least index with negative reduced cost;
  // leaving row = least basic-variable index among the minimum ratios.
  static bool pivot_until_optimal(std::vector<Vec>& t, Vec& b, Vec& z, std::vector<int>& basis,
                                  Rational* obj) {
    const size_t m = t.size();
    const size_t n = m == 0 ? z.size() : t.front().size();
    while (true) {
      int entering = -1;
      for (size_t j = 0; j < n; ++j)
        if (z[j] < 0) {
          entering = static_cast<int>(j);
          break;
        }
      if (entering < 0) return true;  // optimal
      int leaving = -1;
      Rational bestRatio(0);
      for (size_t i = 0; i < m; ++i) {
        if (t[i][entering] <= 0) continue;
        const Rational ratio = b[i] / t[i][entering];
        if (leaving < 0 || ratio < bestRatio ||
            (ratio == bestRatio && basis[i] < basis[leaving])) {
          leaving = static_cast<int>(i);
          bestRatio = ratio;
        }
      }
      if (leaving < 0) return false;  // unbounded
      pivot(t, b, z, basis, static_cast<size_t>(leaving), static_cast<size_t>(entering), obj);
    }
  }

  std::vector<Vec> eqA_;
  Vec eqB_;
  std::vector<Vec> inA_;
  Vec inB_;
  size_t n_ = 0;
};

}  // namespace stablecover

#endif  // STABLECOVER_LP_HPP_
