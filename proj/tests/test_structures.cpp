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

#include <set>
#include <utility>

#include <doctest.h>

#include "magma_lab/structures.hpp"

using namespace magma_lab;

namespace {

using Witness = std::vector<std::pair<char, Rational>>;

Rational q(std::int64_t n, std::int64_t d = 1) { return Rational(n, d); }

Rational eval(const BuiltinStructure& s, const Rational& x, const Rational& y) {
    return s.window->op(x, y);
}

} // namespace

TEST_CASE("finite built-in tables") {
    CHECK(builtin("trivalent_equiv").table ==
          Magma::from_rows(3, {{2, 0, 0}, {0, 2, 1}, {0, 1, 2}}));
    CHECK(builtin("zn_sub", {3}).table ==
          Magma::from_rows(3, {{0, 2, 1}, {1, 0, 2}, {2, 1, 0}}));
    CHECK(builtin("zn_rsub", {3}).table ==
          Magma::from_rows(3, {{0, 1, 2}, {2, 0, 1}, {1, 2, 0}}));
    CHECK(builtin("proj1", {2}).table == Magma::from_rows(2, {{0, 0}, {1, 1}}));
    CHECK(builtin("proj2", {2}).table == Magma::from_rows(2, {{0, 1}, {0, 1}}));
    CHECK(builtin("chain_meet", {3}).table ==
          Magma::from_rows(3, {{0, 0, 0}, {0, 1, 1}, {0, 1, 2}}));
    CHECK(builtin("zn_sub", {3}).label() == "zn_sub(3)");
    CHECK_THROWS_AS(builtin("nope"), Error);
    CHECK_THROWS_AS(builtin("zn_add", {0}), Error);
    for (const auto& name : builtin_names()) {
        CHECK_NOTHROW(builtin(name, name == "trivalent_equiv" || name.ends_with("window") ||
                                            name == "prob_star"
                                        ? std::vector<int>{}
                                        : std::vector<int>{3}));
    }
}

TEST_CASE("cyclic families") {
    for (int n = 1; n <= 8; ++n) {
        CHECK(satisfies(*builtin("zn_add", {n}).table, LawTag::ABELIAN));
    }
    CHECK(satisfies(*builtin("zn_sub", {2}).table, LawTag::ABELIAN));
    for (int n = 3; n <= 8; ++n) {
        const Magma m = *builtin("zn_sub", {n}).table;
        CHECK(satisfies(m, LawTag::H));
        CHECK(satisfies(m, LawTag::AGI));
        CHECK_FALSE(satisfies(m, LawTag::NE));
        CHECK_FALSE(satisfies(m, LawTag::AGII));
    }
}

TEST_CASE("integer subtraction window") {
    const auto s = builtin("int_sub_window");
    REQUIRE(s.window);
    const auto agi = windowed_check(s, LawTag::AGI);
    CHECK(agi.holds);
    CHECK(agi.scope == WindowScope::necessary_only);
    const auto agii = windowed_check(s, LawTag::AGII);
    CHECK_FALSE(agii.holds);
    CHECK(agii.scope == WindowScope::genuine);
    CHECK(agii.witness == Witness{{'a', q(0)}, {'b', q(0)}, {'c', q(1)}});
    CHECK(windowed_check(s, LawTag::H).holds);
}

TEST_CASE("probability star grid") {
    const auto s = builtin("prob_star");
    REQUIRE(s.window);
    CHECK(s.window->samples.size() == 5);
    CHECK(windowed_check(s, LawTag::C).holds);
    const auto a = windowed_check(s, LawTag::A);
    CHECK_FALSE(a.holds);
    CHECK(a.scope == WindowScope::genuine);
    REQUIRE(a.witness.size() == 3);
    // Re-evaluate the witness with exact arithmetic.
    const auto& x = a.witness[0].second;
    const auto& y = a.witness[1].second;
    const auto& z = a.witness[2].second;
    CHECK(eval(s, x, eval(s, y, z)) != eval(s, eval(s, x, y), z));
    CHECK(to_string(q(1, 4)) == "1/4");
    CHECK(to_string(q(-3)) == "-3");
}

TEST_CASE("natural addition window") {
    const auto s = builtin("nat_add_window");
    CHECK(windowed_check(s, LawTag::A).holds);
    CHECK(windowed_check(s, LawTag::NE).holds);
    const auto h = windowed_check(s, LawTag::H);
    CHECK_FALSE(h.holds);
    CHECK(h.scope == WindowScope::genuine);
    CHECK_THROWS_AS(windowed_check(s, LawTag::GROUP), Error);
    CHECK_THROWS_AS(windowed_check(builtin("zn_add", {3}), LawTag::A), Error);
}

TEST_CASE("example suite") {
    const auto suite = example_suite();
    std::set<int> ids;
    for (const auto& e : suite) {
        ids.insert(e.example);
        CHECK(e.classification.has_value() == e.structure.finite());
    }
    CHECK(ids == std::set<int>{1, 2, 3, 4, 5, 6, 7, 8, 9});

    std::set<std::pair<int, LawTag>> disagreements;
    std::set<std::pair<int, LawTag>> flagged;
    for (const auto& e : suite) {
        for (const auto& row : e.rows) {
            if (!row.agrees()) {
                disagreements.insert({e.example, row.law});
                CHECK(row.documented);
            }
            if (row.documented) {
                flagged.insert({e.example, row.law});
                CHECK_FALSE(row.note.empty());
            }
        }
    }
    // Reciprocal subtraction fails AGII (a=0, b=1, c=0), against the claim.
    CHECK(disagreements == std::set<std::pair<int, LawTag>>{{5, LawTag::AGII}, {6, LawTag::NE}});
    CHECK(flagged.contains({6, LawTag::NE}));
    CHECK(flagged.contains({7, LawTag::NE}));
}

TEST_CASE("example classifications") {
    for (const auto& e : example_suite()) {
        if (e.example == 3) {
            CHECK(e.classification->has(StructureKind::monoid));
            CHECK(e.classification->has(StructureKind::commutative));
            CHECK_FALSE(e.classification->has(StructureKind::quasigroup));
        }
        if (e.example == 5) {
            CHECK(e.classification->has(StructureKind::quasigroup));
        }
        if (e.example == 9) {
            CHECK_FALSE(e.classification->has(StructureKind::quasigroup));
            CHECK(e.classification->neutrals.two_sided == Element(2));
        }
    }
}
