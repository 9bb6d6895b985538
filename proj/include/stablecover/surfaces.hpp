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

#ifndef STABLECOVER_SURFACES_HPP_
#define STABLECOVER_SURFACES_HPP_

#include <cstdint>
#include <string>
#include <vector>

#include "stablecover/rational.hpp"

namespace stablecover {

// An integer divisor class in a fixed basis of the Picard lattice.
struct DivisorClass {
  std::vector<Integer> coords;

  DivisorClass() = default;
  explicit DivisorClass(std::vector<Integer> c) : coords(std::move(c)) {}
  DivisorClass(std::initializer_list<int> c) {
    for (int x : c) coords.emplace_back(x);
  }

  size_t rank() const { return coords.size(); }
  bool operator==(const DivisorClass& o) const { return coords == o.coords; }
  bool operator!=(const DivisorClass& o) const { return !(*this == o); }

  DivisorClass operator+(const DivisorClass& o) const {
    if (coords.size() != o.coords.size()) throw InvalidInput("divisor class rank mismatch");
    DivisorClass r = *this;
    for (size_t i = 0; i < coords.size(); ++i) r.coords[i] += o.coords[i];
    return r;
  }
  DivisorClass operator-(const DivisorClass& o) const {
    if (coords.size() != o.coords.size()) throw InvalidInput("divisor class rank mismatch");
    DivisorClass r = *this;
    for (size_t i = 0; i < coords.size(); ++i) r.coords[i] -= o.coords[i];
    return r;
  }
  DivisorClass operator*(const Integer& n) const {
    DivisorClass r = *this;
    for (auto& c : r.coords) c *= n;
    return r;
  }
  bool is_zero() const {
    for (const auto& c : coords)
      if (c != 0) return false;
    return true;
  }
};

enum class SurfaceKind { P2, Sigma, P1xP1, F1, Bl4P2 };

inline std::string surface_name(SurfaceKind k) {
  switch (k) {
    case SurfaceKind::P2: return "P2";
    case SurfaceKind::Sigma: return "Sigma";
    case SurfaceKind::P1xP1: return "P1xP1";
    case SurfaceKind::F1: return "F1";
    case SurfaceKind::Bl4P2: return "Bl4P2";
  }
  return "?";
}

// A rational surface preset: Picard rank, intersection form, canonical class
// and a few curve classes used for cheap nef/ample screening.
struct BaseSurface {
  SurfaceKind kind;
  std::string name;
  int picRank = 0;
  std::vector<std::vector<Integer>> intersectionForm;  // symmetric
  DivisorClass canonicalClass;
  std::vector<DivisorClass> amplenessTestCurves;
};

inline const BaseSurface& surface(SurfaceKind kind) {
  static const auto make = [](SurfaceKind k) {
    BaseSurface s;
    s.kind = k;
    s.name = surface_name(k);
    auto diag = [](std::initializer_list<int> d) {
      std::vector<std::vector<Integer>> m;
      int n = static_cast<int>(d.size());
      m.assign(n, std::vector<Integer>(n, 0));
      int i = 0;
      for (int x : d) m[i][i] = x, ++i;
      return m;
    };
    switch (k) {
      case SurfaceKind::P2:
        s.picRank = 1;
        s.intersectionForm = diag({1});
        s.canonicalClass = DivisorClass{-3};
        s.amplenessTestCurves = {DivisorClass{1}};
        break;
      case SurfaceKind::Sigma:
        // basis (H, E_A, E_B, E_C)
        s.picRank = 4;
        s.intersectionForm = diag({1, -1, -1, -1});
        s.canonicalClass = DivisorClass{-3, 1, 1, 1};
        // the hexagon of (-1)-curves
        s.amplenessTestCurves = {DivisorClass{0, 1, 0, 0}, DivisorClass{0, 0, 1, 0},
                                 DivisorClass{0, 0, 0, 1}, DivisorClass{1, -1, -1, 0},
                                 DivisorClass{1, -1, 0, -1}, DivisorClass{1, 0, -1, -1}};
        break;
      case SurfaceKind::P1xP1:
        // basis (s, f)
        s.picRank = 2;
        s.intersectionForm = {{Integer(0), Integer(1)}, {Integer(1), Integer(0)}};
        s.canonicalClass = DivisorClass{-2, -2};
        s.amplenessTestCurves = {DivisorClass{1, 0}, DivisorClass{0, 1}};
        break;
      case SurfaceKind::F1:
        // basis (s, f) with s the (-1)-section
        s.picRank = 2;
        s.intersectionForm = {{Integer(-1), Integer(1)}, {Integer(1), Integer(0)}};
        s.canonicalClass = DivisorClass{-2, -3};
        s.amplenessTestCurves = {DivisorClass{1, 0}, DivisorClass{0, 1}};
        break;
      case SurfaceKind::Bl4P2:
        s.picRank = 5;
        s.intersectionForm = diag({1, -1, -1, -1, -1});
        s.canonicalClass = DivisorClass{-3, 1, 1, 1, 1};
        s.amplenessTestCurves = {DivisorClass{0, 1, 0, 0, 0}, DivisorClass{0, 0, 1, 0, 0},
                                 DivisorClass{0, 0, 0, 1, 0}, DivisorClass{0, 0, 0, 0, 1},
                                 DivisorClass{1, -1, -1, 0, 0}, DivisorClass{1, -1, 0, -1, 0},
                                 DivisorClass{1, -1, 0, 0, -1}, DivisorClass{1, 0, -1, -1, 0},
                                 DivisorClass{1, 0, -1, 0, -1}, DivisorClass{1, 0, 0, -1, -1}};
        break;
    }
    return s;
  };
  static const BaseSurface p2 = make(SurfaceKind::P2);
  static const BaseSurface sigma = make(SurfaceKind::Sigma);
  static const BaseSurface p1p1 = make(SurfaceKind::P1xP1);
  static const BaseSurface f1 = make(SurfaceKind::F1);
  static const BaseSurface bl4 = make(SurfaceKind::Bl4P2);
  switch (kind) {
    case SurfaceKind::P2: return p2;
    case SurfaceKind::Sigma: return sigma;
    case SurfaceKind::P1xP1: return p1p1;
    case SurfaceKind::F1: return f1;
    case SurfaceKind::Bl4P2: return bl4;
  }
  return p2;
}

inline const BaseSurface* surface_by_name(const std::string& name) {
  for (SurfaceKind k : {SurfaceKind::P2, SurfaceKind::Sigma, SurfaceKind::P1xP1,
                        SurfaceKind::F1, SurfaceKind::Bl4P2})
    if (surface_name(k) == name) return &surface(k);
  return nullptr;
}

inline Integer intersect_classes(const DivisorClass& a, const DivisorClass& b,
                                 const BaseSurface& s) {
  if (static_cast<int>(a.rank()) != s.picRank || static_cast<int>(b.rank()) != s.picRank)
    throw InvalidInput("intersect_classes: dimension mismatch");
  Integer total = 0;
  for (int i = 0; i < s.picRank; ++i)
    for (int j = 0; j < s.picRank; ++j) total += a.coords[i] * s.intersectionForm[i][j] * b.coords[j];
  return total;
}

inline Integer self_intersection(const DivisorClass& a, const BaseSurface& s) {
  return intersect_classes(a, a, s);
}

// chi(O(D)) = 1 + D(D-K)/2 on the rational presets, as an exact rational.
inline Rational riemann_roch_chi(const DivisorClass& d, const BaseSurface& s) {
  const Integer dd = intersect_classes(d, d, s);
  const Integer dk = intersect_classes(d, s.canonicalClass, s);
  return Rational(1) + Rational(dd - dk, 2);
}

// The quadratic involution of Sigma = Bl3 P^2 based at the three blown-up
// points: H -> 2H - E_A - E_B - E_C, E_A -> H - E_B - E_C (cyclically).
// It preserves the intersection form and the canonical class, and swaps the
// index-0 and index-3 strict-transform classes in each family.
inline DivisorClass cremona_map(const DivisorClass& d) {
  if (d.rank() != 4) throw InvalidInput("cremona_map expects a class on Sigma (rank 4)");
  const Integer& h = d.coords[0];
  const Integer& ea = d.coords[1];
  const Integer& eb = d.coords[2];
  const Integer& ec = d.coords[3];
  // images of the basis vectors
  // H  -> (2,-1,-1,-1); E_A -> (1,0,-1,-1); E_B -> (1,-1,0,-1); E_C -> (1,-1,-1,0)
  return DivisorClass{std::vector<Integer>{
      2 * h + ea + eb + ec,
      -h - eb - ec,
      -h - ea - ec,
      -h - ea - eb}};
}

// Strict-transform classes of the twelve divisors of the standard
// arrangement on Sigma, basis (H, E_A, E_B, E_C).  Index order:
// a0,a1,a2,a3, b0,b1,b2,b3, c0,c1,c2,c3.
inline const std::vector<DivisorClass>& burniat_divisor_classes() {
  static const std::vector<DivisorClass> classes = {
      DivisorClass{1, 0, -1, -1}, DivisorClass{1, 0, -1, 0}, DivisorClass{1, 0, -1, 0},
      DivisorClass{0, 1, 0, 0},
      DivisorClass{1, -1, 0, -1}, DivisorClass{1, 0, 0, -1}, DivisorClass{1, 0, 0, -1},
      DivisorClass{0, 0, 1, 0},
      DivisorClass{1, -1, -1, 0}, DivisorClass{1, -1, 0, 0}, DivisorClass{1, -1, 0, 0},
      DivisorClass{0, 0, 0, 1}};
  return classes;
}

}  // namespace stablecover

#endif  // STABLECOVER_SURFACES_HPP_
