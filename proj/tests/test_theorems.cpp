// Copyright 2026 The magma-lab Authors
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

#include <algorithm>

#include <doctest.h>

#include "magma_lab/properties.hpp"
#include "magma_lab/theorems.hpp"

using namespace magma_lab;

namespace {

bool mentions(const Clause& clause, LawTag tag) {
    const auto has = [&](const std::vector<LawId>& v) {
        return std::find(v.begin(), v.end(), LawId(tag)) != v.end();
    };
    return has(clause.premises) || has(clause.conclusions);
}

} // namespace

TEST_CASE("catalog shape") {
    const auto& cat = theorem_catalog();
    REQUIRE(cat.size() == 11);
    for (std::size_t i = 0; i < cat.size(); ++i) {
        CHECK(cat[i].id == "T" + std::to_string(i + 1));
        CHECK_FALSE(cat[i].clauses.empty());
        CHECK(&theorem_by_id(cat[i].id) == &cat[i]);
    }
    CHECK(cat[4].clauses.size() == 5);
    CHECK(cat[10].clauses.size() == 4);
    CHECK(std::none_of(cat[10].clauses.begin(), cat[10].clauses.end(),
                       [](const Clause& c) { return mentions(c, LawTag::AGI); }));
    for (const char* id : {"T8", "T9", "T10", "T11"}) {
        CHECK(theorem_by_id(id).domain == TheoremDomain::quasigroups);
    }
    CHECK_THROWS_AS(theorem_by_id("T12"), Error);
}

TEST_CASE("exhaustive verification finds no counterexample") {
    for (const auto& t : theorem_catalog()) {
        const int max = t.domain == TheoremDomain::all_magmas ? 3 : 4;
        const auto report = verify_theorem(t, max);
        CAPTURE(t.id);
        CHECK(report.passed());
        CHECK(report.structures_examined ==
              (t.domain == TheoremDomain::all_magmas ? 19700u : 591u));
    }
}

TEST_CASE("violated_clause detects a broken implication") {
    // Z3 subtraction is a quasigroup with AGI and no neutral: it would break
    // a clause "H + AGI => LOOP", which is why the catalog has none.
    const Magma z3sub = Magma::from_rows(3, {{0, 2, 1}, {1, 0, 2}, {2, 1, 0}});
    TheoremSpec fake{"X", "H + AGI gives a loop",
                     {Clause{{LawTag::H, LawTag::AGI}, {LawTag::LOOP}, false}},
                     TheoremDomain::quasigroups};
    CHECK(violated_clause(fake, z3sub) == std::size_t{0});
    const auto report = verify_theorem(fake, 3);
    CHECK_FALSE(report.passed());
    REQUIRE(report.counterexample);
    CHECK(report.counterexample->order() == 3);
    CHECK(satisfies(*report.counterexample, LawTag::AGI));
    CHECK_FALSE(satisfies(*report.counterexample, LawTag::NE));
}

TEST_CASE("order caps") {
    CHECK(theorem_order_cap(TheoremDomain::all_magmas) == 3);
    CHECK(theorem_order_cap(TheoremDomain::quasigroups) == 5);
    CHECK_THROWS_AS(verify_theorem("T1", 4), Error);
    CHECK_THROWS_AS(verify_theorem("T8", 6), Error);
}
