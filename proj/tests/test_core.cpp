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
#include <numeric>
#include <random>
#include <string>

#include <doctest.h>

#include "magma_lab/core.hpp"
#include "reference.hpp"

using namespace magma_lab;

namespace {

const Magma z2 = Magma::from_rows(2, {{0, 1}, {1, 0}});
const Magma z3 = Magma::from_rows(3, {{0, 1, 2}, {1, 2, 0}, {2, 0, 1}});
const Magma proj2 = Magma::from_rows(2, {{0, 1}, {0, 1}});

std::string error_of(auto&& fn) {
    try {
        fn();
    } catch (const Error& e) {
        return e.what();
    }
    return "";
}

// Canonical form by brute force over all n! permutations.
Magma naive_canonical(const Magma& m) {
    std::vector<Element> perm(m.order());
    std::iota(perm.begin(), perm.end(), Element{0});
    Magma best = m;
    do {
        best = std::min(best, relabel(m, perm));
    } while (std::next_permutation(perm.begin(), perm.end()));
    return best;
}

} // namespace

TEST_CASE("from_rows validates closure and shape") {
    CHECK(Magma::from_rows(1, {{0}}) == Magma());
    CHECK(z3.op(1, 2) == 0);
    CHECK(error_of([] { Magma::from_rows(3, {{0, 1, 2}, {1, 2, 3}, {2, 0, 1}}); }) ==
          "entry 3 out of range at (1,2)");
    CHECK_THROWS_AS(Magma::from_rows(2, {{0, 1}}), Error);
    CHECK_THROWS_AS(Magma::from_rows(2, {{0, 1}, {1}}), Error);
    CHECK_THROWS_AS(Magma::from_rows(0, {}), Error);
    CHECK_THROWS_AS(Magma::from_table(2, {0, 1, 1}), Error);
}

TEST_CASE("parse and format") {
    CHECK(parse_table("1\n0\n") == Magma());
    CHECK(format_table(z3) == "3\n0 1 2\n1 2 0\n2 0 1\n");
    CHECK(parse_table("# cyclic\n3\n\n0 1 2\n1 2 0\n2 0 1\n") == z3);
    CHECK(error_of([] { parse_table("2\n0 1\n"); }) == "expected 2 rows, found 1");
    CHECK(error_of([] { parse_table("x\n"); }).starts_with("line 1"));
    CHECK(error_of([] { parse_table("2\n0 1\n1 q\n"); }).find("non-integer token 'q'") !=
          std::string::npos);
    CHECK(error_of([] { parse_table("2\n0 1 0\n1 0\n"); }).find("expected 2 entries") !=
          std::string::npos);
}

TEST_CASE("format/parse round trip on random tables") {
    std::mt19937_64 rng(7);
    for (int i = 0; i < 200; ++i) {
        const Magma m = ref::to_magma(ref::random_table(rng, 1 + i % 6));
        CHECK(parse_table(format_table(m)) == m);
    }
}

TEST_CASE("canonical form examples") {
    CHECK(canonical_form(Magma()) == Magma());
    CHECK(canonical_form(z2) == z2);
    CHECK(canonical_form(proj2) == proj2);
    CHECK(is_isomorphic(z2, z2));
    CHECK_FALSE(is_isomorphic(z2, proj2));
    CHECK_FALSE(is_isomorphic(z2, z3));
}

TEST_CASE("canonical form matches brute force and is relabeling invariant") {
    std::mt19937_64 rng(11);
    for (int i = 0; i < 300; ++i) {
        const int n = 1 + i % 5;
        const Magma m = ref::to_magma(ref::random_table(rng, n));
        const Magma canon = canonical_form(m);
        CHECK(canon == naive_canonical(m));
        CHECK(canonical_form(canon) == canon);
        CHECK(is_canonical(canon));
        CHECK(is_canonical(m) == (m == canon));

        std::vector<Element> perm(n);
        std::iota(perm.begin(), perm.end(), Element{0});
        std::shuffle(perm.begin(), perm.end(), rng);
        const Magma moved = relabel(m, perm);
        CHECK(canonical_form(moved) == canon);
        CHECK(is_isomorphic(m, moved));
    }
}

TEST_CASE("canonical form refuses orders above the cap") {
    const Magma big = Magma::from_table(8, std::vector<Element>(64, 0));
    CHECK_THROWS_AS(canonical_form(big), Error);
    CHECK(canonical_form(big, 8) == big);
}
