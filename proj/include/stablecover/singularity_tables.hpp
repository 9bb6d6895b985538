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

#ifndef STABLECOVER_SINGULARITY_TABLES_HPP_
#define STABLECOVER_SINGULARITY_TABLES_HPP_

#include <algorithm>
#include <cctype>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "stablecover/gf2.hpp"

namespace stablecover {

// ---------------------------------------------------------------------------
// Classification tables for point singularities of (Z/2)^k double covers.
//
// Smooth-base rows classify the cover of a smooth surface germ over a point
// lying on k branch "lines" (possibly coincident in pairs).  Normal-crossing
// rows classify the cover of a two-component n.c. germ, with k branch lines
// per side; R rows have the double curve itself in the branch locus, E rows
// do not.  Case ids follow the convention: leading digit = k, one prime =
// first two lines coincide, two primes = both pairs coincide.
// ---------------------------------------------------------------------------

enum class TableKind { Smooth, NC };

struct GermSum {
  // (count, gammaIndex); gamma_1 is the smooth germ Delta, gamma_j for j >= 2
  // is the seminormal gluing of j smooth germs at a point.
  std::vector<std::pair<int, int>> pieces;

  bool operator==(const GermSum& o) const { return pieces == o.pieces; }
  std::string str() const {
    std::string s;
    for (size_t i = 0; i < pieces.size(); ++i) {
      if (i) s += "+";
      const auto& [count, gamma] = pieces[i];
      if (count != 1) s += std::to_string(count);
      s += (gamma == 1) ? "D" : ("G" + std::to_string(gamma));
    }
    return s;
  }
};

// The chain (double curve upstairs in the normalization) -> (double curve of
// the cover) -> (its image downstairs), with mapping degrees where they are
// not all 1.
struct DoubleLocusSignature {
  GermSum upstairs, middle, base;
  std::vector<int> degreesToMiddle;  // component degrees of upstairs -> middle
  std::vector<int> degreesToBase;    // component degrees of middle -> base
  std::string printed;
};

struct SingularityRecord {
  std::string caseId;
  TableKind table = TableKind::Smooth;
  bool ramified = false;  // NC only: double curve in the branch locus
  int k = 0;              // branch components at the point (per side for NC)
  int coincidence = 0;    // 0 plain, 1 one coincident pair, 2 two pairs
  int hOrder = 1;
  std::string relationsPrinted;           // table string, e.g. "12,134"
  RelationSet relationsCanonical;         // canonical form used as lookup key
  std::string singularityTag;
  std::vector<std::pair<std::string, int>> normalizationRefs;  // (caseId, count)
  DoubleLocusSignature doubleLocus;
  std::string semiresolution;  // "nc", "pinch" or "" when not applicable
  std::optional<bool> gorenstein;
  std::string occurrence;      // subset of "BCU"
  bool sourceAmbiguous = false;
  // Least label tuple realizing the row's relation pattern: for smooth rows
  // the k branch labels, for n.c. rows (g0,) side1 then side2 labels, all in
  // F2^r with 2^r = hOrder.
  std::vector<GroupElt> witnessLabels;
};

struct UnknownCase : std::runtime_error {
  explicit UnknownCase(const std::string& id)
      : std::runtime_error("unknown singularity case id: " + id) {}
};

namespace tables_detail {

struct RawRow {
  const char* id;
  int hOrder;
  const char* relations;
  const char* sing;
  const char* xnu;          // normalization refs, "" for normal rows
  const char* locus;        // double locus chain, "" for normal rows
  const char* semires;      // "nc" | "pinch" | ""
  const char* occurrence;   // e.g. "BC"
  bool ambiguous;
};

inline const std::vector<RawRow>& raw_rows() {
  static const std::vector<RawRow> rows = {
      // ---- smooth base, reduced branch ----
      {"0.1", 1, "none", "smooth", "", "", "", "BC", false},
      {"1.1", 2, "none", "smooth", "", "", "", "BC", false},
      {"2.1", 4, "none", "smooth", "", "", "", "BC", false},
      {"2.2", 2, "12", "A_1", "", "", "", "", false},
      {"3.1", 8, "none", "A_1", "", "", "", "C", false},
      {"3.2", 4, "123", "1/4(1,1)", "", "", "", "BC", false},
      {"3.3", 4, "12", "A_3", "", "", "", "", false},
      {"3.4", 2, "12,13", "D_4", "", "", "", "", false},
      {"4.1", 16, "none", "elliptic, F^2=-4", "", "", "", "U", false},
      {"4.2", 8, "1234", "elliptic, F^2=-8", "", "", "", "C", false},
      {"4.3", 8, "123", "T(2,2,2,2), F^2=-4", "", "", "", "C", false},
      {"4.4", 8, "12", "elliptic, F^2=-2", "", "", "", "", false},
      {"4.5", 4, "12,134", "T(2,2,2,2), F^2=-3", "", "", "", "", false},
      {"4.6", 4, "12,34", "elliptic, F^2=-4", "", "", "", "", false},
      {"4.7", 4, "12,13", "elliptic, F^2=-1", "", "", "", "", false},
      {"4.8", 2, "12,13,14", "elliptic, F^2=-2", "", "", "", "", false},
      // ---- smooth base, one coincident pair ----
      {"2'.1", 4, "none", "semismooth", "2(1.1)", "2D -> D -> D", "nc", "BC", false},
      {"2'.2", 2, "12", "semismooth", "2(0.1)", "2D -> D -> D", "nc", "B", false},
      {"3'.1", 8, "none", "semismooth", "2(2.1)", "2D -> D -> (2:1)D", "nc", "C", false},
      {"3'.2", 4, "123", "KSB 4.23(iii)", "2(2.2)", "2D -> D -> D", "nc", "BC", false},
      {"3'.3", 4, "12", "semismooth", "2(1.1)", "2D -> D -> (2:1)D", "nc", "B", false},
      {"3'.4", 4, "13", "semismooth", "(2.1)", "D -> (2:1)D -> D", "pinch", "", false},
      {"3'.5", 2, "12,13", "semismooth", "(1.1)", "D -> (2:1)D -> D", "pinch", "", false},
      {"4'.1", 16, "none", "deg.cusp(2)", "2(3.1)", "2G2 -> G2 -> (2,2:1)D", "nc", "U", false},
      {"4'.2", 8, "1234", "deg.cusp(2)", "2(3.2)", "2G2 -> G2 -> D", "nc", "C", false},
      {"4'.3", 8, "123", "(4'.1)/Z2", "2(3.3)", "2D -> D -> (2:1)D", "nc", "C", false},
      {"4'.4", 8, "134", "(4'.1)/Z2", "(3.1)", "G2 -> (2:1)G2 -> D", "pinch", "C", false},
      {"4'.5", 8, "13", "deg.cusp(1)", "(3.1)", "G2 -> D -> (2:1)D", "nc", "", false},
      {"4'.6", 8, "12", "deg.cusp(2)", "2(2.1)", "2G2 -> G2 -> (2,2:1)D", "nc", "", false},
      {"4'.7", 8, "34", "deg.cusp(6)", "2(3.3)", "2G2 -> G2 -> D", "nc", "", false},
      {"4'.8", 4, "13,124", "(4'.5)/Z2", "(3.3)", "D -> (2:1)D -> D", "pinch", "", false},
      {"4'.9", 4, "12,134", "(4'.6)/Z2", "(2.1)", "G2 -> D -> (2:1)D", "pinch", "B", false},
      {"4'.10", 4, "13,24", "deg.cusp(1)", "(3.2)", "G2 -> D -> D", "nc", "", false},
      // source prints the last map of 4'.11 with a malformed degree marker;
      // degree 2 per component is recorded and the row flagged.
      {"4'.11", 4, "12,34", "deg.cusp(2)", "2(2.2)", "2G2 -> D -> (2:1)D", "nc", "", true},
      {"4'.12", 4, "12,13", "deg.cusp(1)", "(2.1)", "G2 -> G2 -> D", "nc", "", false},
      {"4'.13", 4, "13,14", "deg.cusp(3)", "(3.3)", "G2 -> D -> D", "nc", "", false},
      {"4'.14", 2, "12,13,14", "deg.cusp(1)", "(2.2)", "G2 -> D -> D", "nc", "", false},
      // ---- smooth base, two coincident pairs ----
      {"4''.1", 16, "none", "deg.cusp(4)", "4(2.1)", "4G2 -> G4 -> (2,2,2,2:1)G2", "nc", "U", false},
      {"4''.2", 8, "1234", "deg.cusp(4)", "4(2.2)", "4G2 -> G4 -> G2", "nc", "C", false},
      {"4''.3", 8, "123", "(4''.1)/Z2", "2(2.1)", "2G2 -> G3 -> (2,1,1:1)G2", "pinch", "C", false},
      {"4''.4", 8, "13", "deg.cusp(2)", "2(2.1)", "2G2 -> G2 -> (2,2:1)G2", "nc", "", false},
      {"4''.5", 8, "12", "deg.cusp(4)", "4(1.1)", "4G2 -> G4 -> (2,2,1,1:1)G2", "nc", "", false},
      {"4''.6", 4, "13,124", "(4''.4)/Z2", "(2.1)", "G2 -> (2,2:1)G2 -> G2", "pinch", "", false},
      {"4''.7", 4, "12,134", "(4''.5)/Z2", "2(1.1)", "2G2 -> (2,2,1,1:1)G3 -> (1,1,2:1)G2", "pinch", "B", false},
      {"4''.8", 4, "13,24", "deg.cusp(2)", "2(2.2)", "2G2 -> G2 -> G2", "nc", "", false},
      {"4''.9", 4, "12,34", "deg.cusp(4)", "4(0.1)", "4G2 -> G4 -> G2", "nc", "B", false},
      {"4''.10", 4, "12,13", "deg.cusp(2)", "2(1.1)", "2G2 -> G2 -> (2,1:1)G2", "nc", "B", false},
      {"4''.11", 2, "12,13,14", "deg.cusp(2)", "2(0.1)", "2G2 -> G2 -> G2", "nc", "", false},
      // ---- n.c. base, double curve not in the branch locus ----
      {"E0.1", 1, "none", "n.c.", "2(0.1)", "2D -> D -> D", "nc", "B", false},
      {"E1.1", 2, "12", "n.c.", "2(1.1)", "2D -> D -> (2:1)D", "nc", "", false},
      {"E2.1", 4, "12,34", "deg.cusp(4)", "2(2.2)+2(2.2)", "2G2+2G2 -> G4 -> D", "nc", "B", false},
      {"E2.2", 4, "13,24", "deg.cusp(2)", "(2.1)+(2.1)", "G2+G2 -> G2 -> (2,2:1)D", "nc", "", false},
      {"E2.3", 2, "12,13,14", "deg.cusp(2)", "(2.2)+(2.2)", "G2+G2 -> G2 -> D", "nc", "", false},
      {"E2'.1", 4, "12,34", "deg.cusp(6)", "4(0.1)+2(2.2)", "4G2+G2 -> G6 -> G2", "nc", "B", false},
      {"E2'.2", 4, "13,24", "deg.cusp(3)", "2(1.1)+(2.1)", "2G2+G2 -> G3 -> (1,2,2:1)G2", "nc", "", false},
      {"E2'.3", 2, "12,13,14", "deg.cusp(3)", "2(0.1)+(2.2)", "2G2+G2 -> G3 -> G2", "nc", "", false},
      {"E2''.1", 4, "12,34", "deg.cusp(8)", "4(0.1)+4(0.1)", "4G2+4G2 -> G8 -> G3", "nc", "", false},
      {"E2''.2", 4, "13,24", "deg.cusp(4)", "2(1.1)+2(1.1)", "2G2+2G2 -> G4 -> (1,2,2,1:1)G3", "nc", "", false},
      {"E2''.3", 2, "12,13,14", "deg.cusp(4)", "2(0.1)+2(0.1)", "2G2+2G2 -> G4 -> G3", "nc", "", false},
      // ---- n.c. base, double curve in the branch locus ----
      {"R0.1", 2, "none", "n.c.", "(1.1)+(1.1)", "D+D -> D -> D", "nc", "B", false},
      {"R1.1", 4, "12", "n.c.", "(2.1)+(2.1)", "D+D -> D -> (2:1)D", "nc", "B", false},
      {"R1.2", 2, "01,02", "KSB 4.23(iii)", "(2.2)+(2.2)", "D+D -> D -> D", "nc", "B", false},
      {"R2.1", 8, "012,034", "deg.cusp(4)", "2(3.2)+2(3.2)", "2G2+2G2 -> G4 -> D", "nc", "", false},
      {"R2.2", 8, "12,034", "deg.cusp(8)", "2(3.3)+2(3.2)", "2G2+2G2 -> G4 -> D", "nc", "", false},
      {"R2.3", 8, "12,34", "deg.cusp(12)", "2(3.3)+2(3.3)", "2G2+2G2 -> G4 -> D", "nc", "", false},
      {"R2.4", 8, "13,24", "deg.cusp(2)", "(3.1)+(3.1)", "G2+G2 -> G2 -> (2,2:1)D", "nc", "", false},
      {"R2.5", 4, "012,013,14", "deg.cusp(2)", "(3.2)+(3.2)", "G2+G2 -> G2 -> D", "nc", "", false},
      {"R2.6", 4, "012,13,14", "deg.cusp(4)", "(3.2)+(3.3)", "G2+G2 -> G2 -> D", "nc", "", false},
      {"R2.7", 4, "12,13,14", "deg.cusp(6)", "(3.3)+(3.3)", "G2+G2 -> G2 -> D", "nc", "", false},
      {"R2.8", 4, "01,02,034", "(R2.2)/Z2", "2(3.4)+(3.2)", "2D+G2 -> G2 -> D", "nc", "B", false},
      {"R2.9", 4, "01,02,34", "(R2.3)/Z2", "2(3.4)+(3.3)", "2D+G2 -> G2 -> D", "nc", "", false},
      {"R2.10", 4, "01,03,24", "(R2.4)/Z2", "(3.3)+(3.3)", "G2+G2 -> G2 -> D", "nc", "", false},
      {"R2.11", 2, "01,02,03,04", "(R2.7)/Z2", "(3.4)+(3.4)", "D+D -> D -> D", "nc", "", false},
      {"R2'.1", 8, "012,034", "deg.cusp(6)", "4(2.2)+2(3.2)", "4G2+2G2 -> G6 -> G2", "nc", "", false},
      {"R2'.2", 8, "012,34", "deg.cusp(10)", "4(2.2)+2(3.3)", "4G2+2G2 -> G6 -> G2", "nc", "", false},
      {"R2'.3", 8, "12,034", "deg.cusp(6)", "4(1.1)+2(3.2)", "4G2+2G2 -> G6 -> (2,2,1,1,1,1:1)G2", "nc", "", false},
      {"R2'.4", 8, "12,34", "deg.cusp(10)", "4(1.1)+2(3.3)", "4G2+2G2 -> G6 -> (2,2,1,1,1,1:1)G2", "nc", "", false},
      {"R2'.5", 8, "13,24", "deg.cusp(3)", "2(2.1)+(3.1)", "2G2+G2 -> G3 -> (2,2,2:1)G2", "nc", "", false},
      {"R2'.6", 4, "012,013,14", "deg.cusp(3)", "2(2.2)+(3.2)", "2G2+G2 -> G3 -> G2", "nc", "", false},
      {"R2'.7", 4, "012,13,14", "deg.cusp(5)", "2(2.2)+(3.3)", "2G2+G2 -> G3 -> G2", "nc", "", false},
      {"R2'.8", 4, "12,013,14", "deg.cusp(3)", "2(1.1)+(3.2)", "2G2+G2 -> G3 -> (2,1,1:1)G2", "nc", "", false},
      {"R2'.9", 4, "12,13,14", "deg.cusp(5)", "2(1.1)+(3.3)", "2G2+G2 -> G3 -> (2,1,1:1)G2", "nc", "B", false},
      {"R2'.10", 4, "01,02,034", "(R2'.3)/Z2", "2(1.1)+(3.2)", "2G2 -> G3 -> (2,1,1:1)G2", "pinch", "B", false},
      {"R2'.11", 4, "01,02,34", "(R2'.4)/Z2", "2(1.1)+(3.3)", "2G2 -> G3 -> (2,1,1:1)G2", "pinch", "", false},
      {"R2'.12", 4, "012,03,04", "(R2'.2)/Z2", "2(2.2)+(3.4)", "2G2+2G2 -> G3 -> G2", "nc", "B", false},
      {"R2'.13", 4, "12,03,04", "(R2'.4)/Z2", "2(1.1)+(3.4)", "2G2+G2 -> G3 -> (2,1,1:1)G2", "nc", "", false},
      {"R2'.14", 2, "01,02,03,04", "(R2'.11)/Z2", "(1.1)+(3.4)", "G2+D -> G2 -> (2,1:1)G2", "pinch", "", false},
      {"R2''.1", 8, "012,034", "deg.cusp(8)", "4(2.2)+4(2.2)", "4G2+4G2 -> G8 -> G3", "nc", "", false},
      {"R2''.2", 8, "012,34", "deg.cusp(8)", "4(2.2)+4(1.1)", "4G2+4G2 -> G8 -> (1,1,1,1,1,1,2,2:1)G3", "nc", "", false},
      {"R2''.3", 8, "12,34", "deg.cusp(4)", "4(1.1)+4(1.1)", "4G2+4G2 -> G8 -> (2,2,1,1,1,1,2,2:1)G3", "nc", "", false},
      {"R2''.4", 8, "13,24", "deg.cusp(4)", "2(2.1)+2(2.1)", "2G2+2G2 -> G4 -> (2,2,2,2:1)G3", "nc", "", false},
      {"R2''.5", 4, "012,013,14", "deg.cusp(4)", "2(2.2)+2(2.2)", "2G2+2G2 -> G6 -> G3", "nc", "", false},
      {"R2''.6", 4, "012,13,14", "deg.cusp(4)", "2(2.2)+2(2.2)", "2G2+2G2 -> G6 -> (1,1,1,1,1,2:1)G3", "nc", "B", false},
      {"R2''.7", 4, "12,13,14", "deg.cusp(4)", "2(1.1)+2(1.1)", "2G2+2G2 -> G4 -> (2,2,2,2:1)G3", "nc", "B", false},
      {"R2''.8", 4, "012,03,04", "(R2''.2)/Z2", "2(2.2)+2(1.1)", "2G2+2G2 -> G4 -> G3", "pinch", "B", false},
      {"R2''.9", 4, "12,03,04", "(R2''.3)/Z2", "2(1.1)+2(1.1)", "2G2+2G2 -> G4 -> (1,1,1,2:1)G3", "pinch", "", false},
      {"R2''.10", 2, "01,02,03,04", "(R2''.7)/Z2", "(1.1)+(1.1)", "G2+G2 -> G3 -> G3", "pinch", "", false},
  };
  return rows;
}

// "4''.9" -> (Smooth, 4, 2); "R2'.3" -> (NC ramified, 2, 1); "E0.1" -> ...
inline void parse_case_id(const std::string& id, TableKind* kind, bool* ramified, int* k,
                          int* coincidence) {
  size_t pos = 0;
  *kind = TableKind::Smooth;
  *ramified = false;
  if (id[0] == 'E' || id[0] == 'R') {
    *kind = TableKind::NC;
    *ramified = (id[0] == 'R');
    pos = 1;
  }
  *k = id[pos] - '0';
  ++pos;
  *coincidence = 0;
  while (pos < id.size() && id[pos] == '\'') {
    ++*coincidence;
    ++pos;
  }
}

inline std::vector<std::vector<int>> parse_relations(const std::string& text) {
  std::vector<std::vector<int>> out;
  if (text == "none" || text.empty()) return out;
  std::vector<int> current;
  for (char c : text) {
    if (c == ',' || c == ' ') {
      if (!current.empty()) out.push_back(current);
      current.clear();
    } else if (c >= '0' && c <= '9') {
      current.push_back(c - '0');
    } else {
      throw InvalidInput("bad relation string: " + text);
    }
  }
  if (!current.empty()) out.push_back(current);
  return out;
}

inline std::vector<std::pair<std::string, int>> parse_refs(const std::string& text) {
  std::vector<std::pair<std::string, int>> out;
  size_t i = 0;
  while (i < text.size()) {
    int count = 1;
    if (std::isdigit(static_cast<unsigned char>(text[i]))) {
      count = 0;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i])))
        count = 10 * count + (text[i++] - '0');
    }
    if (i >= text.size() || text[i] != '(') throw InvalidInput("bad refs string: " + text);
    const size_t close = text.find(')', i);
    out.emplace_back(text.substr(i + 1, close - i - 1), count);
    i = close + 1;
    if (i < text.size() && text[i] == '+') ++i;
  }
  return out;
}

inline GermSum parse_germ_sum(const std::string& text) {
  GermSum out;
  size_t i = 0;
  while (i < text.size()) {
    int count = 1;
    if (std::isdigit(static_cast<unsigned char>(text[i]))) {
      count = 0;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i])))
        count = 10 * count + (text[i++] - '0');
    }
    int gamma = 1;
    if (text[i] == 'D') {
      ++i;
    } else if (text[i] == 'G') {
      ++i;
      gamma = 0;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i])))
        gamma = 10 * gamma + (text[i++] - '0');
    } else {
      throw InvalidInput("bad germ string: " + text);
    }
    out.pieces.emplace_back(count, gamma);
    if (i < text.size() && text[i] == '+') ++i;
  }
  return out;
}

inline DoubleLocusSignature parse_double_locus(const std::string& text) {
  DoubleLocusSignature out;
  out.printed = text;
  if (text.empty()) return out;
  // split on " -> "
  std::vector<std::string> parts;
  size_t start = 0;
  while (true) {
    const size_t arrow = text.find(" -> ", start);
    if (arrow == std::string::npos) {
      parts.push_back(text.substr(start));
      break;
    }
    parts.push_back(text.substr(start, arrow - start));
    start = arrow + 4;
  }
  if (parts.size() != 3) throw InvalidInput("bad double locus chain: " + text);
  auto parse_part = [](const std::string& p, std::vector<int>* degrees) {
    std::string body = p;
    if (!body.empty() && body[0] == '(') {
      const size_t close = body.find(":1)");
      std::string degs = body.substr(1, close - 1);
      int d = 0;
      for (char c : degs) {
        if (c == ',') {
          degrees->push_back(d);
          d = 0;
        } else if (std::isdigit(static_cast<unsigned char>(c))) {
          d = 10 * d + (c - '0');
        }
      }
      degrees->push_back(d);
      body = body.substr(close + 3);
    }
    return parse_germ_sum(body);
  };
  std::vector<int> none;
  out.upstairs = parse_part(parts[0], &none);
  out.middle = parse_part(parts[1], &out.degreesToMiddle);
  out.base = parse_part(parts[2], &out.degreesToBase);
  if (!none.empty()) throw InvalidInput("unexpected degrees on upstairs germ: " + text);
  return out;
}

// Dependency space of a printed relation list over n labels with indices
// starting at firstIndex.  Bit i of a member corresponds to label i (0-based
// position in the label tuple).
inline std::vector<unsigned> relation_space(const std::vector<std::vector<int>>& relations,
                                            int n, int firstIndex) {
  std::vector<unsigned> gens;
  for (const auto& rel : relations) {
    unsigned v = 0;
    for (int idx : rel) {
      const int pos = idx - firstIndex;
      if (pos < 0 || pos >= n) throw InvalidInput("relation index out of range");
      v |= 1u << pos;
    }
    gens.push_back(v);
  }
  // close under addition
  std::vector<bool> seen(1u << n, false);
  seen[0] = true;
  std::vector<unsigned> members{0};
  for (unsigned g : gens) {
    std::vector<unsigned> next;
    for (unsigned m : members) {
      const unsigned s = m ^ g;
      if (!seen[s]) {
        seen[s] = true;
        next.push_back(s);
      }
    }
    members.insert(members.end(), next.begin(), next.end());
  }
  std::sort(members.begin(), members.end());
  return members;
}

// Lexicographically least tuple of n nonzero labels in F2^r whose dependency
// space is exactly `space` (given as the sorted member list over n-bit
// masks) and whose span is all of F2^r.  Depth-first search over label
// values in numeric order.
inline std::optional<std::vector<GroupElt>> least_witness_labels(
    const std::vector<unsigned>& space, int n, int r) {
  if (n == 0) return std::vector<GroupElt>{};
  std::vector<std::uint8_t> labels(n, 0);
  std::vector<bool> inSpace(1u << n, false);
  for (unsigned m : space) inSpace[m] = true;

  // A prefix is consistent when every mask over the assigned labels vanishes
  // exactly if the space demands it.
  auto prefix_ok = [&](int assigned) {
    for (unsigned mask = 1; mask < (1u << assigned); ++mask) {
      std::uint8_t sum = 0;
      for (int i = 0; i < assigned; ++i)
        if ((mask >> i) & 1u) sum ^= labels[i];
      if ((sum == 0) != inSpace[mask]) return false;
    }
    return true;
  };

  std::function<bool(int)> dfs = [&](int i) -> bool {
    if (i == n) {
      std::vector<GroupElt> elts;
      for (auto b : labels) elts.push_back(GroupElt(static_cast<std::uint8_t>(r), b));
      return rank_f2(elts) == r;
    }
    for (unsigned v = 1; v < (1u << r); ++v) {
      labels[i] = static_cast<std::uint8_t>(v);
      if (!prefix_ok(i + 1)) continue;
      if (dfs(i + 1)) return true;
    }
    return false;
  };
  if (!dfs(0)) return std::nullopt;
  std::vector<GroupElt> out;
  for (auto b : labels) out.push_back(GroupElt(static_cast<std::uint8_t>(r), b));
  return out;
}

inline bool all_dependencies_even(const std::vector<unsigned>& space) {
  for (unsigned m : space)
    if (__builtin_popcount(m) & 1) return false;
  return true;
}

}  // namespace tables_detail

// singularity_table(), table_fixture() and the classifiers live in
// classify.hpp, which cooks the raw rows above into SingularityRecords.

}  // namespace stablecover

#endif  // STABLECOVER_SINGULARITY_TABLES_HPP_
