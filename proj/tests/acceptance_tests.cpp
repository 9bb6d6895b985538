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

// End-to-end verification: one test per criterion, one printed line each.

#include "stablecover/acceptance.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <iostream>

using namespace stablecover;

namespace {

void report(const AcceptanceResult& r) {
  std::cout << (r.passed ? "[PASS] " : "[FAIL] ") << "criterion " << r.id << " — " << r.name
            << ": " << r.detail << std::endl;
  INFO(r.detail);
  REQUIRE(r.passed);
}

}  // namespace

TEST_CASE("criterion 1: maximal-cell table reproduction") { report(acceptance_table_reproduction()); }

TEST_CASE("criterion 2: tiling invariants and surface census") { report(acceptance_tilings()); }

TEST_CASE("criterion 3: cover invariants, two routes") { report(acceptance_cover_invariants()); }

TEST_CASE("criterion 4: classifier round-trip") { report(acceptance_classifier_roundtrip()); }

TEST_CASE("criterion 5: component census") { report(acceptance_component_census()); }

TEST_CASE("criterion 6: boundary catalogs") { report(acceptance_boundary_catalogs()); }

TEST_CASE("criterion 7: vanishing-order rules") { report(acceptance_vanishing_rules()); }

TEST_CASE("criterion 8: symmetry and the quadratic involution") { report(acceptance_symmetry()); }
