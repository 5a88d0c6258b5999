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

#include <doctest.h>

#include "magma_lab/dsl.hpp"
#include "magma_lab/properties.hpp"
#include "magma_lab/search.hpp"
#include "reference.hpp"

using namespace magma_lab;

namespace {

const Magma z3sub = Magma::from_rows(3, {{0, 2, 1}, {1, 0, 2}, {2, 1, 0}});
const Magma triv = Magma::from_rows(3, {{2, 0, 0}, {0, 2, 1}, {0, 1, 2}});

SearchSpec spec(std::vector<LawId> assume, LawId refute, int lo, int hi) {
    return SearchSpec{std::move(assume), std::move(refute), {lo, hi}, false};
}

void check_model(const SearchSpec& s, const SearchResult& r) {
    REQUIRE(r.found);
    for (const auto& law : s.assume) {
        CHECK(satisfies(*r.found, law));
    }
    CHECK_FALSE(satisfies(*r.found, s.refute));
}

// First order with a model, and that model, by scanning every table.
std::optional<Magma> naive_first(const std::vector<LawTag>& assume, LawTag refute, int hi) {
    for (int n = 1; n <= hi; ++n) {
        std::optional<Magma> first;
        ref::for_each_table(n, [&](const ref::Table& t) {
            if (first || ref::holds(t, refute)) {
                return;
            }
            for (const auto law : assume) {
                if (!ref::holds(t, law)) {
                    return;
                }
            }
            first = ref::to_magma(t);
        });
        if (first) {
            return first;
        }
    }
    return std::nullopt;
}

} // namespace

TEST_CASE("quasigroup with AGI and no neutral") {
    const auto s = parse_spec("assume H, AGI; refute NE; orders 1..3");
    const auto r = find_model(s);
    check_model(s, r);
    CHECK(r.found->order() == 3);
    CHECK(is_isomorphic(*r.found, z3sub));
    CHECK(r.orders_exhausted == OrderRange{1, 2});
}

TEST_CASE("commutative with neutral, not associative") {
    const auto s = spec({LawTag::C, LawTag::NE}, LawTag::A, 1, 3);
    const auto r = find_model(s);
    check_model(s, r);
    CHECK(r.found->order() == 3);
    // Some order-3 witness exists; the trivalent table is one of them.
    CHECK(satisfies(triv, LawTag::C));
    CHECK(satisfies(triv, LawTag::NE));
    CHECK_FALSE(satisfies(triv, LawTag::A));
}

TEST_CASE("H with CAI forces an abelian group up to order 5") {
    const auto s = spec({LawTag::H, LawTag::CAI}, LawTag::ABELIAN, 1, 5);
    const auto r = find_model(s);
    CHECK_FALSE(r.found);
    CHECK(r.orders_exhausted == OrderRange{1, 5});
    CHECK(r.structures_examined > 0);
}

TEST_CASE("search matches the naive first model") {
    const std::vector<std::pair<std::vector<LawTag>, LawTag>> cases = {
        {{LawTag::A}, LawTag::C},
        {{LawTag::AGI}, LawTag::AGII},
        {{LawTag::AGII}, LawTag::AGI},
        {{LawTag::C, LawTag::NE}, LawTag::A},
        {{LawTag::H}, LawTag::NE},
        {{LawTag::NE}, LawTag::H},
        {{LawTag::R}, LawTag::CA},
        {{LawTag::H, LawTag::AGI}, LawTag::NE},
        {{LawTag::H, LawTag::R}, LawTag::LOOP},
    };
    for (const auto& [assume, refute] : cases) {
        CAPTURE(tag_name(refute));
        const auto s = spec({assume.begin(), assume.end()}, refute, 1, 3);
        const auto r = find_model(s);
        const auto expected = naive_first(assume, refute, 3);
        CHECK(r.found == expected);
        if (r.found) {
            check_model(s, r);
        }
    }
}

TEST_CASE("independence entries") {
    const auto agi = find_model(spec({LawTag::AGI}, LawTag::AGII, 1, 3));
    REQUIRE(agi.found);
    CHECK(agi.found->order() <= 3);
    const auto agii = find_model(spec({LawTag::AGII}, LawTag::AGI, 1, 3));
    check_model(spec({LawTag::AGII}, LawTag::AGI, 1, 3), agii);
    const auto ac = find_model(spec({LawTag::A}, LawTag::C, 1, 3));
    REQUIRE(ac.found);
    CHECK(ac.found->order() == 2);

    const auto cells = independence_matrix({LawTag::A, LawTag::C, LawTag::AGI}, 3);
    CHECK(cells.size() == 6);
    for (const auto& cell : cells) {
        CHECK_FALSE(cell.assume == cell.refute);
        if (cell.result.found) {
            CHECK(satisfies(*cell.result.found, cell.assume));
            CHECK_FALSE(satisfies(*cell.result.found, cell.refute));
        }
    }
}

TEST_CASE("results do not depend on worker count") {
    const auto s = spec({LawTag::H}, LawTag::C, 1, 5);
    const auto reference = find_model(s, ExecPolicy{1});
    for (const int workers : {2, 8}) {
        const auto r = find_model(s, ExecPolicy{workers});
        CHECK(r.found == reference.found);
        CHECK(r.structures_examined == reference.structures_examined);
        CHECK(r.orders_exhausted == reference.orders_exhausted);
    }
}

TEST_CASE("search mode and pushdown") {
    CHECK(search_mode(spec({LawTag::H}, LawTag::A, 1, 2)) == EnumMode::latin_squares);
    CHECK(search_mode(spec({LawTag::A}, LawTag::C, 1, 2)) == EnumMode::all_magmas);
    CHECK(search_enum_spec(spec({LawTag::NE}, LawTag::H, 1, 3), 3).require_not_latin);
    CHECK_THROWS_AS(find_model(spec({}, LawTag::A, 1, 4)), InfeasibleError);
}
