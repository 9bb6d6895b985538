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

#ifndef STABLECOVER_ARRANGEMENTS_HPP_
#define STABLECOVER_ARRANGEMENTS_HPP_

#include <array>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "stablecover/polytope.hpp"

namespace stablecover {

// Projective points and lines over Q with canonical scaling (first nonzero
// coordinate = 1), so equality is plain comparison.
struct ProjTriple {
  std::array<Rational, 3> v;

  void normalize() {
    for (auto& x : v)
      if (x != 0) {
        const Rational lead = x;
        for (auto& y : v) y /= lead;
        return;
      }
    throw InvalidInput("zero projective triple");
  }
  bool operator==(const ProjTriple& o) const { return v == o.v; }
  bool operator<(const ProjTriple& o) const { return v < o.v; }
};

inline ProjTriple proj(Rational a, Rational b, Rational c) {
  ProjTriple t{{std::move(a), std::move(b), std::move(c)}};
  t.normalize();
  return t;
}

inline ProjTriple cross(const ProjTriple& a, const ProjTriple& b) {
  ProjTriple t{{a.v[1] * b.v[2] - a.v[2] * b.v[1], a.v[2] * b.v[0] - a.v[0] * b.v[2],
                a.v[0] * b.v[1] - a.v[1] * b.v[0]}};
  t.normalize();
  return t;
}

inline bool incident(const ProjTriple& line, const ProjTriple& point) {
  return line.v[0] * point.v[0] + line.v[1] * point.v[1] + line.v[2] * point.v[2] == 0;
}

struct InvalidArrangement : std::runtime_error {
  explicit InvalidArrangement(const std::string& why)
      : std::runtime_error("invalid arrangement: " + why) {}
};

// Nine labeled lines with the triangle-pencil incidence pattern:
// A1, A2 pass through P_B, B1, B2 through P_C, C1, C2 through P_A, where
// P_A = B0 /\ C0, P_B = A0 /\ C0, P_C = A0 /\ B0.  When the three sides
// coincide the vertices cannot be derived and must be supplied explicitly.
struct BurniatArrangement {
  // order: A0 A1 A2 B0 B1 B2 C0 C1 C2
  std::array<ProjTriple, 9> lines;
  std::optional<std::array<ProjTriple, 3>> vertices;  // P_A, P_B, P_C

  static constexpr std::array<const char*, 9> labels = {"A0", "A1", "A2", "B0", "B1",
                                                        "B2", "C0", "C1", "C2"};
};

// slot indices in the 12-coordinate order a0..a3 b0..b3 c0..c3
inline int arrangement_line_slot(int lineIndex) {
  static const int slots[9] = {0, 1, 2, 4, 5, 6, 8, 9, 10};
  return slots[lineIndex];
}

struct DegenerationLabel {
  std::vector<Halfspace> violated;
  // label sets of the violated constraints, as 12-coordinate slot indices
  std::vector<std::pair<std::vector<int>, int>> classes;  // (sorted slots, bound)
};

namespace arr_detail {

struct Incidences {
  std::array<ProjTriple, 3> vertices;                // P_A, P_B, P_C
  std::map<ProjTriple, std::vector<int>> lineSlots;  // distinct line -> 12-slots
  // cycle of each of the 12 divisor slots: strict line part (or none for
  // exceptional slots) and which exceptional curves the limit contains
  std::array<std::optional<ProjTriple>, 12> strictPart;
  std::array<std::set<int>, 12> exceptionalParts;  // values 0,1,2 = E_A,E_B,E_C
};

// base vertices of each of the nine lines: indices into (P_A, P_B, P_C)
inline const std::vector<int>& line_base_vertices(int lineIndex) {
  static const std::vector<int> bases[9] = {
      {1, 2},  // A0 through P_B, P_C
      {1},     {1},
      {0, 2},  // B0 through P_A, P_C
      {2},     {2},
      {0, 1},  // C0 through P_A, P_B
      {0},     {0}};
  return bases[lineIndex];
}

inline Incidences analyze(const BurniatArrangement& arr) {
  Incidences inc;
  // vertices
  if (arr.vertices) {
    inc.vertices = *arr.vertices;
  } else {
    const auto& a0 = arr.lines[0];
    const auto& b0 = arr.lines[3];
    const auto& c0 = arr.lines[6];
    if (a0 == b0 || b0 == c0 || a0 == c0)
      throw InvalidArrangement("coincident sides require explicit vertices");
    inc.vertices = {cross(b0, c0), cross(a0, c0), cross(a0, b0)};
  }
  const auto& P = inc.vertices;
  if (P[0] == P[1] || P[1] == P[2] || P[0] == P[2])
    throw InvalidArrangement("the three pencil base points must be distinct");
  for (int i = 0; i < 9; ++i)
    for (int v : line_base_vertices(i))
      if (!incident(arr.lines[i], P[v]))
        throw InvalidArrangement(std::string(BurniatArrangement::labels[i]) +
                                 " misses its pencil base point");

  // limit cycle of each slot
  for (int i = 0; i < 9; ++i) {
    const int slot = arrangement_line_slot(i);
    inc.strictPart[slot] = arr.lines[i];
    const auto& base = line_base_vertices(i);
    for (int v = 0; v < 3; ++v) {
      if (std::find(base.begin(), base.end(), v) != base.end()) continue;
      if (incident(arr.lines[i], P[v])) inc.exceptionalParts[slot].insert(v);
    }
    inc.lineSlots[arr.lines[i]].push_back(slot);
  }
  inc.exceptionalParts[3].insert(0);   // a3 = E_A
  inc.exceptionalParts[7].insert(1);   // b3 = E_B
  inc.exceptionalParts[11].insert(2);  // c3 = E_C
  return inc;
}

}  // namespace arr_detail

// Scans the arrangement with exact arithmetic for the degenerations that
// break log canonicity: three or more divisor limits sharing a curve (the
// strict transform of a line or an exceptional curve), or five or more
// passing through a common point away from the pencil base points.  The
// returned label is empty exactly when the pair stays lc.
inline DegenerationLabel arrangement_lc_scan(const BurniatArrangement& arr) {
  const auto inc = arr_detail::analyze(arr);
  DegenerationLabel out;
  std::set<std::pair<std::vector<int>, int>> emitted;

  auto emit = [&](std::vector<int> slots, int bound) {
    std::sort(slots.begin(), slots.end());
    if (!emitted.insert({slots, bound}).second) return;
    out.classes.emplace_back(slots, bound);
    out.violated.push_back(flat_inequality(slots, bound));
  };

  // coincidence classes along the strict transforms of the lines
  for (const auto& [line, slots] : inc.lineSlots) {
    if (slots.size() >= 3) emit(slots, 1);
  }
  // coincidence classes along the exceptional curves
  for (int v = 0; v < 3; ++v) {
    std::vector<int> slots;
    for (int s = 0; s < 12; ++s)
      if (inc.exceptionalParts[s].count(v)) slots.push_back(s);
    if (slots.size() >= 3) emit(slots, 1);
  }
  // concurrency classes away from the base points
  std::vector<ProjTriple> distinctLines;
  for (const auto& [line, slots] : inc.lineSlots) distinctLines.push_back(line);
  std::set<ProjTriple> seenPoints;
  for (size_t i = 0; i < distinctLines.size(); ++i) {
    for (size_t j = i + 1; j < distinctLines.size(); ++j) {
      const ProjTriple q = cross(distinctLines[i], distinctLines[j]);
      if (q == inc.vertices[0] || q == inc.vertices[1] || q == inc.vertices[2]) continue;
      if (!seenPoints.insert(q).second) continue;
      std::vector<int> slots;
      for (const auto& [line, ls] : inc.lineSlots)
        if (incident(line, q)) slots.insert(slots.end(), ls.begin(), ls.end());
      if (slots.size() >= 5) emit(slots, 2);
    }
  }
  std::sort(out.classes.begin(), out.classes.end());
  out.violated.clear();
  for (const auto& [slots, bound] : out.classes) out.violated.push_back(flat_inequality(slots, bound));
  return out;
}

// ---------------------------------------------------------------------------
// Witness construction for degeneration events
// ---------------------------------------------------------------------------

// Movers in slot order a1 a2 b1 b2 c1 c2.
enum class MoverLine { Generic, SideA0, SideB0, SideC0, OnCommonLine };

struct ConcurrencyEvent {
  std::array<bool, 6> movers = {false, false, false, false, false, false};
};

struct DegenerationSpec {
  std::array<MoverLine, 6> movers = {MoverLine::Generic, MoverLine::Generic, MoverLine::Generic,
                                     MoverLine::Generic, MoverLine::Generic, MoverLine::Generic};
  bool collapse = false;  // the three sides coincide (base points collinear)
  std::vector<ConcurrencyEvent> concurrencies;
};

namespace arr_detail {

inline int mover_line_index(int mover) {
  static const int idx[6] = {1, 2, 4, 5, 7, 8};
  return idx[mover];
}

// family of a mover: 0 = a (base P_B), 1 = b (base P_C), 2 = c (base P_A)
inline int mover_family(int mover) { return mover / 2; }

inline int mover_base_vertex(int mover) {
  static const int base[3] = {1, 2, 0};
  return base[mover_family(mover)];
}

}  // namespace arr_detail

// Builds an explicit rational arrangement realizing the requested
// degeneration events, or nothing when the events are geometrically
// contradictory.  The construction is deterministic: generic pencil
// parameters and concurrency points are drawn from fixed prime sequences.
inline std::optional<BurniatArrangement> build_witness(const DegenerationSpec& spec) {
  using arr_detail::mover_base_vertex;
  using arr_detail::mover_family;
  using arr_detail::mover_line_index;

  BurniatArrangement arr;
  std::array<ProjTriple, 3> P;
  ProjTriple sideA0, sideB0, sideC0;
  if (spec.collapse) {
    P = {proj(1, 0, 0), proj(0, 1, 0), proj(1, 1, 0)};
    sideA0 = sideB0 = sideC0 = proj(0, 0, 1);  // the common line x2 = 0
    arr.vertices = P;
  } else {
    P = {proj(1, 0, 0), proj(0, 1, 0), proj(0, 0, 1)};
    sideA0 = proj(1, 0, 0);
    sideB0 = proj(0, 1, 0);
    sideC0 = proj(0, 0, 1);
  }
  arr.lines[0] = sideA0;
  arr.lines[3] = sideB0;
  arr.lines[6] = sideC0;

  const ProjTriple* sideLine[3] = {&sideA0, &sideB0, &sideC0};

  // admissible side targets per family: a-movers reach A0 or C0, b-movers
  // A0 or B0, c-movers B0 or C0
  auto side_allowed = [&](int mover, MoverLine pos) {
    const int fam = mover_family(mover);
    switch (pos) {
      case MoverLine::SideA0: return fam != 2;
      case MoverLine::SideB0: return fam != 0;
      case MoverLine::SideC0: return fam != 1;
      default: return true;
    }
  };

  std::array<std::optional<ProjTriple>, 6> assigned;
  for (int m = 0; m < 6; ++m) {
    const MoverLine pos = spec.movers[m];
    if (pos == MoverLine::Generic) continue;
    if (pos == MoverLine::OnCommonLine) {
      if (!spec.collapse) return std::nullopt;
      assigned[m] = sideA0;
      continue;
    }
    if (!side_allowed(m, pos)) return std::nullopt;
    const int side = pos == MoverLine::SideA0 ? 0 : (pos == MoverLine::SideB0 ? 1 : 2);
    assigned[m] = *sideLine[side];
  }

  // deterministic generic parameters
  static const int genericParams[6] = {2, 3, 5, 7, 11, 13};
  static const int pointParams[][2] = {{17, 19}, {29, 31}, {37, 41}, {43, 47}};
  static const int onLineParams[] = {23, 53, 59, 61};

  // concurrency events, processed in order
  int freePointIdx = 0;
  int onLineIdx = 0;
  for (const auto& ev : spec.concurrencies) {
    std::vector<int> members;
    for (int m = 0; m < 6; ++m)
      if (ev.movers[m]) members.push_back(m);
    if (members.size() < 2) continue;
    // the common point must lie on every already-assigned member line
    std::vector<int> fixedMembers;
    for (int m : members)
      if (assigned[m]) fixedMembers.push_back(m);
    ProjTriple q = proj(1, 1, 1);
    if (fixedMembers.empty()) {
      if (freePointIdx >= 4) return std::nullopt;
      q = proj(1, pointParams[freePointIdx][0], pointParams[freePointIdx][1]);
      ++freePointIdx;
    } else if (fixedMembers.size() >= 1) {
      const ProjTriple l0 = *assigned[fixedMembers[0]];
      bool determined = false;
      for (size_t i = 1; i < fixedMembers.size(); ++i) {
        const ProjTriple li = *assigned[fixedMembers[i]];
        if (!(li == l0)) {
          q = cross(l0, li);
          determined = true;
          break;
        }
      }
      if (!determined) {
        // pick a deterministic point on l0 away from the base points
        if (onLineIdx >= 4) return std::nullopt;
        const Rational t(onLineParams[onLineIdx], 1);
        ++onLineIdx;
        // parameterize l0: find two distinct points on it
        ProjTriple p1 = proj(1, 1, 1), p2 = proj(1, 1, 1);
        {
          // intersections with two coordinate lines not equal to l0
          std::vector<ProjTriple> cands;
          for (auto axis : {proj(1, 0, 0), proj(0, 1, 0), proj(0, 0, 1)})
            if (!(axis == l0)) cands.push_back(cross(l0, axis));
          std::sort(cands.begin(), cands.end());
          cands.erase(std::unique(cands.begin(), cands.end()), cands.end());
          if (cands.size() < 2) return std::nullopt;
          p1 = cands[0];
          p2 = cands[1];
        }
        q = proj(p1.v[0] + t * p2.v[0], p1.v[1] + t * p2.v[1], p1.v[2] + t * p2.v[2]);
      }
      for (int m : fixedMembers)
        if (!incident(*assigned[m], q)) return std::nullopt;
    }
    if (q == P[0] || q == P[1] || q == P[2]) return std::nullopt;
    for (int m : members) {
      if (assigned[m]) continue;
      const ProjTriple base = P[mover_base_vertex(m)];
      if (base == q) return std::nullopt;
      assigned[m] = cross(base, q);  // in line coordinates: the pencil line through both
    }
  }

  // remaining movers: generic members of their pencils
  for (int m = 0; m < 6; ++m) {
    if (assigned[m]) continue;
    const Rational t(genericParams[m], 1);
    const int fam = mover_family(m);
    if (spec.collapse) {
      // pencils through P_B = (0,1,0), P_C = (1,1,0), P_A = (1,0,0)
      switch (fam) {
        case 0: assigned[m] = proj(1, 0, t); break;          // alpha x0 + gamma x2
        case 1: assigned[m] = proj(1, -1, t); break;         // through (1,1,0)
        case 2: assigned[m] = proj(0, 1, t); break;          // through (1,0,0)
      }
    } else {
      switch (fam) {
        case 0: assigned[m] = proj(1, 0, t); break;   // through P_B = (0,1,0)
        case 1: assigned[m] = proj(1, t, 0); break;   // through P_C = (0,0,1)
        case 2: assigned[m] = proj(0, 1, t); break;   // through P_A = (1,0,0)
      }
    }
  }

  for (int m = 0; m < 6; ++m) arr.lines[mover_line_index(m)] = *assigned[m];
  return arr;
}

// A witness for the nondegenerate arrangement (all movers generic).
inline BurniatArrangement generic_burniat_arrangement() {
  auto arr = build_witness(DegenerationSpec{});
  if (!arr) throw InvalidArrangement("generic witness construction failed");
  return *arr;
}

}  // namespace stablecover

#endif  // STABLECOVER_ARRANGEMENTS_HPP_
