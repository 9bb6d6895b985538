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

#ifndef STABLECOVER_VANISHING_ORDER_HPP_
#define STABLECOVER_VANISHING_ORDER_HPP_

#include "stablecover/rational.hpp"

namespace stablecover {

// Vanishing order of the multiplication map between two character
// eigensheaves along a branch component over which the cover is singular.
// The three cases are distinguished by the inertia group H' of the component
// in the normalized cover:
//
//   case 1: H' trivial, H = Z/2.  The order is 1 iff neither character is
//           trivial on H (the branch class carries the component twice, so
//           one unit of its equation).
//   case 2: H' cyclic of order 2m >= 4; characters restrict to psi^alpha
//           with 0 <= alpha < 2m.  Bracket rule on alpha_1 + alpha_2:
//           <= m: 0,  (m,2m): 1,  [2m,3m]: 2,  (3m,4m): 3.
//   case 3: H = H' x Z/2 with H' cyclic of order m; characters restrict to
//           psi^alpha phi^beta with beta = 0, 0 <= alpha < m or beta = 1,
//           0 < alpha <= m.  The order is (alpha_1 + alpha_2 - alpha_3)/m
//           where alpha_3 is the canonical exponent of the product
//           character: the printed three-branch rule (0 / 1 / 2), completed
//           to all admissible inputs.
struct MultOrderQuery {
  int caseKind = 1;  // 1, 2 or 3
  int m = 1;
  // case 2 / case 3
  int alpha1 = 0, alpha2 = 0;
  int beta1 = 0, beta2 = 0;
  // case 1
  bool inPerp1 = false, inPerp2 = false;
};

inline int mult_vanishing_order(const MultOrderQuery& q) {
  switch (q.caseKind) {
    case 1:
      return (!q.inPerp1 && !q.inPerp2) ? 1 : 0;
    case 2: {
      if (q.m < 1) throw InvalidInput("case 2 requires m >= 1");
      if (q.alpha1 < 0 || q.alpha1 >= 2 * q.m || q.alpha2 < 0 || q.alpha2 >= 2 * q.m)
        throw InvalidInput("case 2 requires 0 <= alpha_i < 2m");
      const int s = q.alpha1 + q.alpha2;
      if (s <= q.m) return 0;
      if (s < 2 * q.m) return 1;
      if (s <= 3 * q.m) return 2;
      return 3;
    }
    case 3: {
      if (q.m < 1) throw InvalidInput("case 3 requires m >= 1");
      auto check = [&](int alpha, int beta) {
        if (beta == 0 && (alpha < 0 || alpha >= q.m))
          throw InvalidInput("case 3 requires 0 <= alpha < m when beta = 0");
        if (beta == 1 && (alpha <= 0 || alpha > q.m))
          throw InvalidInput("case 3 requires 0 < alpha <= m when beta = 1");
        if (beta != 0 && beta != 1) throw InvalidInput("beta must be 0 or 1");
      };
      check(q.alpha1, q.beta1);
      check(q.alpha2, q.beta2);
      const int s = q.alpha1 + q.alpha2;
      const int beta3 = q.beta1 ^ q.beta2;
      // canonical exponent of the product character
      int alpha3 = s % q.m;
      if (beta3 == 1 && alpha3 == 0) alpha3 = q.m;
      return (s - alpha3) / q.m;
    }
    default:
      throw InvalidInput("caseKind must be 1, 2 or 3");
  }
}

}  // namespace stablecover

#endif  // STABLECOVER_VANISHING_ORDER_HPP_
