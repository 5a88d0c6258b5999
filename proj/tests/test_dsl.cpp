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

#include <string>

#include <doctest.h>

#include "magma_lab/dsl.hpp"
#include "magma_lab/properties.hpp"

using namespace magma_lab;

namespace {

std::size_t offset_of(std::string_view text) {
    try {
        parse_law(text);
    } catch (const ParseError& e) {
        return e.offset();
    }
    return std::string::npos;
}

std::string message_of(auto&& fn) {
    try {
        fn();
    } catch (const Error& e) {
        return e.what();
    }
    return "";
}

} // namespace

TEST_CASE("built-in names") {
    CHECK(parse_law("CAII") == LawId(LawTag::CAII));
    CHECK(parse_law("  abelian ") == LawId(LawTag::ABELIAN));
    CHECK(parse_law("c") == LawId(LawTag::C));
}

TEST_CASE("user equations are alpha-equal to their built-ins") {
    const auto cai = parse_law("a + (b + c) = c + (a + b)");
    CHECK(cai.is_user());
    CHECK(*cai.equation() == *builtin_equation(LawTag::CAI));
    CHECK(law_equal(cai, LawTag::CAI));
    CHECK(law_equal(parse_law("a + b = b + a"), LawTag::C));
    CHECK(law_equal(parse_law("x + y = y + x"), LawTag::C));
    CHECK(law_equal(parse_law("(p+q)+r=p+(r+q)"), LawTag::R));
    CHECK_FALSE(law_equal(LawTag::CAI, LawTag::CAII));
    CHECK_FALSE(law_equal(parse_law("a + a = a"), LawTag::C));
}

TEST_CASE("'+' is left-associative") {
    const auto eq = *parse_law("a + b + c = a + (b + c)").equation();
    CHECK(eq.lhs == Term::sum(Term::sum(Term::var('a'), Term::var('b')), Term::var('c')));
    CHECK(law_equal(parse_law("a+(b+c)=a+b+c"), LawTag::A));
}

TEST_CASE("round trip through to_string") {
    for (const auto tag : identity_tags()) {
        const auto eq = *builtin_equation(tag);
        CHECK(*parse_law(eq.to_string()).equation() == eq);
    }
}

TEST_CASE("parse errors carry offsets") {
    CHECK(message_of([] { parse_law("a + (b + = c"); }) ==
          "unbalanced parenthesis at offset 9");
    CHECK(offset_of("a + (b + = c") == 9);
    CHECK(offset_of("a + b") != std::string::npos);
    CHECK(offset_of("= b") == 0);
    CHECK(offset_of("a + 1 = b") == 4);
    CHECK(offset_of("FOO") != std::string::npos);
    CHECK(offset_of("a + b = ") != std::string::npos);
}

TEST_CASE("search specs") {
    const auto s = parse_spec("assume H, AGI; refute NE; orders 1..3");
    CHECK(s.assume == std::vector<LawId>{LawTag::H, LawTag::AGI});
    CHECK(s.refute == LawId(LawTag::NE));
    CHECK(s.orders == OrderRange{1, 3});

    const auto u = parse_spec("assume H, a+(b+c)=(c+a)+b; refute ABELIAN; orders 1..4");
    REQUIRE(u.assume.size() == 2);
    CHECK(u.assume[1].is_user());
    CHECK(law_equal(u.assume[1], LawTag::CAII));
    CHECK(u.orders == OrderRange{1, 4});

    CHECK(message_of([] { parse_spec("assume H; refute; orders 1..3"); })
              .starts_with("expected law after 'refute'"));
    CHECK_THROWS_AS(parse_spec("refute NE; orders 1..3"), ParseError);
    CHECK_THROWS_AS(parse_spec("assume H; refute NE; orders 3"), ParseError);
}

TEST_CASE("law files") {
    const auto laws = parse_law_file("# identities\nA\n\na + b = b + a\n");
    CHECK(laws.size() == 2);
    CHECK(law_equal(laws[1], LawTag::C));
    CHECK(message_of([] { parse_law_file("A\n(a + b\n"); }).starts_with("line 2:"));
}

TEST_CASE("user laws check like built-ins") {
    const Magma z3sub = Magma::from_rows(3, {{0, 2, 1}, {1, 0, 2}, {2, 1, 0}});
    for (const auto tag : identity_tags()) {
        const auto user = LawId::user(*builtin_equation(tag));
        const auto a = check(z3sub, user);
        const auto b = check(z3sub, tag);
        CHECK(a.holds == b.holds);
        CHECK(a.witness == b.witness);
    }
}
