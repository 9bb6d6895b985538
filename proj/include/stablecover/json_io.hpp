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

#ifndef STABLECOVER_JSON_IO_HPP_
#define STABLECOVER_JSON_IO_HPP_

#include <json.hpp>

#include <string>
#include <vector>

#include "stablecover/arrangements.hpp"
#include "stablecover/building_data.hpp"
#include "stablecover/cells.hpp"
#include "stablecover/classify.hpp"
#include "stablecover/strata.hpp"

namespace stablecover {

using Json = nlohmann::json;  // ordered maps keep payload keys sorted

// ---------------------------------------------------------------------------
// Rationals serialize as "p/q" strings (plain integers without the "/q").
// ---------------------------------------------------------------------------

inline Json json_rational(const Rational& q) { return format_rational(q); }

inline Rational rational_from_json(const Json& j) {
  if (j.is_number_integer()) return Rational(static_cast<long long>(j.get<long long>()));
  if (j.is_string()) return parse_rational(j.get<std::string>());
  throw InvalidInput("expected a rational as \"p/q\" string or integer");
}

// ---------------------------------------------------------------------------
// Building data
// ---------------------------------------------------------------------------

inline Json building_data_to_json(const BuildingData& bd) {
  Json j;
  j["base"] = bd.surface_ref().name;
  j["k"] = bd.k;
  Json branch = Json::array();
  for (const auto& e : bd.branch) {
    Json entry;
    entry["label"] = e.label.str();
    Json cls = Json::array();
    for (const auto& c : e.cls.coords) cls.push_back(static_cast<long long>(c));
    entry["class"] = cls;
    entry["mult"] = e.mult;
    if (!e.component.empty()) entry["component"] = e.component;
    branch.push_back(entry);
  }
  j["branch"] = branch;
  return j;
}

inline BuildingData building_data_from_json(const Json& j) {
  BuildingData bd;
  const auto* surf = surface_by_name(j.at("base").get<std::string>());
  if (!surf) throw InvalidInput("unknown base surface: " + j.at("base").get<std::string>());
  bd.base = surf->kind;
  bd.k = j.at("k").get<int>();
  if (bd.k < 1 || bd.k > 8) throw InvalidInput("group rank out of range");
  for (const auto& entry : j.at("branch")) {
    BranchEntry e;
    e.label = parse_group_elt(entry.at("label").get<std::string>());
    if (e.label.len != bd.k) throw InvalidInput("branch label length differs from k");
    if (e.label.is_zero()) throw InvalidInput("branch labels must be nonzero");
    std::vector<Integer> coords;
    for (const auto& c : entry.at("class")) coords.push_back(Integer(c.get<long long>()));
    if (static_cast<int>(coords.size()) != surf->picRank)
      throw InvalidInput("class length differs from the surface rank");
    e.cls = DivisorClass(std::move(coords));
    e.mult = entry.value("mult", 1);
    if (e.mult < 0 || e.mult > 3) throw InvalidInput("multiplicity out of range");
    e.component = entry.value("component", std::string());
    bd.branch.push_back(std::move(e));
  }
  return bd;
}

// ---------------------------------------------------------------------------
// Halfspaces, cells, tilings
// ---------------------------------------------------------------------------

inline Json halfspace_to_json(const Halfspace& h) {
  Json j;
  Json coeffs = Json::array();
  for (const auto& c : h.coeffs) coeffs.push_back(json_rational(c));
  j["coeffs"] = coeffs;
  j["bound"] = json_rational(h.bound);
  j["sense"] = h.sense == Sense::Le ? "le" : "ge";
  return j;
}

inline Halfspace halfspace_from_json(const Json& j) {
  Halfspace h;
  for (const auto& c : j.at("coeffs")) h.coeffs.push_back(rational_from_json(c));
  h.bound = rational_from_json(j.at("bound"));
  const std::string sense = j.value("sense", "le");
  if (sense == "le") {
    h.sense = Sense::Le;
  } else if (sense == "ge") {
    h.sense = Sense::Ge;
  } else {
    throw InvalidInput("sense must be 'le' or 'ge'");
  }
  return h;
}

inline Json cell_to_json(const Cell& cell) {
  Json j;
  Json extra = Json::array();
  for (const auto& c : cell.extra) extra.push_back(halfspace_to_json(c.halfspace()));
  j["extra"] = extra;
  if (!cell.orbitRepId.empty()) j["orbitRepId"] = cell.orbitRepId;
  return j;
}

// A cell file holds extra halfspaces imposed on the weight polytope.
inline Polytope cell_polytope_from_json(const Json& j) {
  Polytope p = delta_bur();
  for (const auto& h : j.at("extra")) p.add(halfspace_from_json(h));
  return p;
}

inline Json tiling_to_json(const CellComplex& complex, const Tiling& t) {
  Json j;
  Json cells = Json::array();
  for (int c : t.cells) cells.push_back(cell_to_json(complex.catalog()[c]));
  j["cells"] = cells;
  Json adj = Json::array();
  for (const auto& a : t.adjacency) {
    Json e;
    e["cellA"] = a.cellA;
    e["cellB"] = a.cellB;
    e["facet"] = halfspace_to_json(a.facet);
    adj.push_back(e);
  }
  j["adjacency"] = adj;
  return j;
}

// ---------------------------------------------------------------------------
// Line arrangements
// ---------------------------------------------------------------------------

struct CampedelliArrangement {
  std::vector<std::pair<GroupElt, ProjTriple>> lines;  // seven labeled lines
};

inline BurniatArrangement burniat_arrangement_from_json(const Json& j) {
  BurniatArrangement arr;
  std::array<bool, 9> seen{};
  for (const auto& entry : j.at("lines")) {
    const std::string label = entry.at("label").get<std::string>();
    int idx = -1;
    for (int i = 0; i < 9; ++i)
      if (label == BurniatArrangement::labels[i]) idx = i;
    if (idx < 0) throw InvalidInput("unknown line label: " + label);
    const auto& c = entry.at("coeffs");
    if (c.size() != 3) throw InvalidInput("a line needs three coefficients");
    arr.lines[idx] = proj(rational_from_json(c[0]), rational_from_json(c[1]),
                          rational_from_json(c[2]));
    seen[idx] = true;
  }
  for (int i = 0; i < 9; ++i)
    if (!seen[i])
      throw InvalidInput(std::string("missing line ") + BurniatArrangement::labels[i]);
  if (j.contains("vertices")) {
    const auto& v = j.at("vertices");
    auto point = [&](const char* name) {
      const auto& p = v.at(name);
      return proj(rational_from_json(p[0]), rational_from_json(p[1]), rational_from_json(p[2]));
    };
    arr.vertices = {point("PA"), point("PB"), point("PC")};
  }
  return arr;
}

inline Json burniat_arrangement_to_json(const BurniatArrangement& arr) {
  Json j;
  j["kind"] = "burniat";
  Json lines = Json::array();
  for (int i = 0; i < 9; ++i) {
    Json entry;
    entry["label"] = BurniatArrangement::labels[i];
    Json coeffs = Json::array();
    for (const auto& c : arr.lines[i].v) coeffs.push_back(json_rational(c));
    entry["coeffs"] = coeffs;
    lines.push_back(entry);
  }
  j["lines"] = lines;
  if (arr.vertices) {
    Json v;
    const char* names[3] = {"PA", "PB", "PC"};
    for (int i = 0; i < 3; ++i) {
      Json p = Json::array();
      for (const auto& c : (*arr.vertices)[i].v) p.push_back(json_rational(c));
      v[names[i]] = p;
    }
    j["vertices"] = v;
  }
  return j;
}

inline CampedelliArrangement campedelli_arrangement_from_json(const Json& j) {
  CampedelliArrangement arr;
  for (const auto& entry : j.at("lines")) {
    const GroupElt label = parse_group_elt(entry.at("label").get<std::string>());
    if (label.len != 3 || label.is_zero())
      throw InvalidInput("seven-line labels are the nonzero vectors of length 3");
    const auto& c = entry.at("coeffs");
    arr.lines.emplace_back(label, proj(rational_from_json(c[0]), rational_from_json(c[1]),
                                       rational_from_json(c[2])));
  }
  if (arr.lines.size() != 7) throw InvalidInput("expected seven labeled lines");
  return arr;
}

// Exact incidence analysis of a seven-line arrangement: coincidences and
// concurrency classes, ready for the boundary classification.
inline CampedelliPattern campedelli_pattern_from_lines(const CampedelliArrangement& arr) {
  CampedelliPattern pattern;
  std::map<ProjTriple, std::vector<GroupElt>> byLine;
  for (const auto& [label, line] : arr.lines) byLine[line].push_back(label);
  for (const auto& [line, labels] : byLine) {
    if (labels.size() >= 3) throw NotSlc("three coincident lines");
    if (labels.size() == 2) pattern.coincidences.emplace_back(labels[0], labels[1]);
  }
  std::vector<ProjTriple> distinct;
  for (const auto& [line, labels] : byLine) distinct.push_back(line);
  std::set<ProjTriple> seen;
  for (size_t i = 0; i < distinct.size(); ++i)
    for (size_t j = i + 1; j < distinct.size(); ++j) {
      const ProjTriple q = cross(distinct[i], distinct[j]);
      if (!seen.insert(q).second) continue;
      std::vector<GroupElt> through;
      for (const auto& [label, line] : arr.lines)
        if (incident(line, q)) through.push_back(label);
      if (through.size() >= 3) pattern.concurrencies.push_back(through);
    }
  return pattern;
}

// ---------------------------------------------------------------------------
// Singularity table export
// ---------------------------------------------------------------------------

inline Json singularity_record_to_json(const SingularityRecord& r) {
  Json j;
  j["caseId"] = r.caseId;
  j["table"] = r.table == TableKind::Smooth ? "smooth" : "nc";
  if (r.table == TableKind::NC) j["ramified"] = r.ramified;
  j["k"] = r.k;
  j["coincidence"] = r.coincidence;
  j["hOrder"] = r.hOrder;
  j["relations"] = r.relationsPrinted;
  j["relationsCanonical"] = r.relationsCanonical.str();
  j["singularity"] = r.singularityTag;
  if (!r.normalizationRefs.empty()) {
    Json refs = Json::array();
    for (const auto& [id, count] : r.normalizationRefs) {
      Json ref;
      ref["caseId"] = id;
      ref["count"] = count;
      refs.push_back(ref);
    }
    j["normalization"] = refs;
  }
  if (!r.doubleLocus.printed.empty()) j["doubleLocus"] = r.doubleLocus.printed;
  if (!r.semiresolution.empty()) j["semiresolution"] = r.semiresolution;
  if (r.gorenstein.has_value()) j["gorenstein"] = *r.gorenstein;
  if (!r.occurrence.empty()) j["occurrence"] = r.occurrence;
  if (r.sourceAmbiguous) j["sourceAmbiguous"] = true;
  Json witness = Json::array();
  for (const auto& g : r.witnessLabels) witness.push_back(g.str());
  j["witnessLabels"] = witness;
  return j;
}

inline Json singularity_table_to_json() {
  Json rows = Json::array();
  for (const auto& r : singularity_table()) rows.push_back(singularity_record_to_json(r));
  Json j;
  j["rows"] = rows;
  return j;
}

}  // namespace stablecover

#endif  // STABLECOVER_JSON_IO_HPP_
