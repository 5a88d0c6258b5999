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

/**
 * @file
 *
 * Decision procedures for the named properties of a finite magma. Every
 * failing check carries a witness that reproduces the violation.
 *
 * NE is the two-sided neutral throughout; IN is the two-sided inverse
 * relative to it. H is the Latin-square condition, which on a finite carrier
 * is exactly "x + a = b and a + y = b have unique solutions".
 */

#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "magma_lab/core.hpp"
#include "magma_lab/law.hpp"

namespace magma_lab {

struct Binding {
    char var;
    Element value;

    bool operator==(const Binding&) const = default;
};

using Assignment = std::vector<Binding>;

struct CheckReport {
    LawId law;
    bool holds = true;
    /// Present iff !holds. Lexicographically first failing assignment, in
    /// alphabetical variable order. Empty for NE (see `detail`).
    std::optional<Assignment> witness;
    /// Structured extras (offending row/column, failing component, ...);
    /// null when there is nothing to add.
    nlohmann::json detail;
};

struct NeutralReport {
    std::vector<Element> left;  ///< e with e + a = a for all a
    std::vector<Element> right; ///< e with a + e = a for all a
    std::optional<Element> two_sided;
};

/// Solutions of a + x = a (the local right identities e_a) and of
/// y + a = a (the local left identities ê_a).
struct LocalIdentities {
    Element a;
    std::vector<Element> right; ///< all x with a + x = a
    std::vector<Element> left;  ///< all y with y + a = a

    std::optional<Element> e_a() const {
        return right.size() == 1 ? std::optional<Element>(right[0]) : std::nullopt;
    }
    std::optional<Element> e_hat_a() const {
        return left.size() == 1 ? std::optional<Element>(left[0]) : std::nullopt;
    }
    bool e_a_unique() const { return right.size() == 1; }
    bool e_hat_a_unique() const { return left.size() == 1; }
};

enum class StructureKind {
    magma,
    commutative,
    semigroup,
    monoid,
    group,
    abelian_group,
    quasigroup,
    loop,
};

std::string_view structure_name(StructureKind kind);

struct StructureReport {
    std::vector<StructureKind> labels;
    NeutralReport neutrals;
    /// inverse[a] for every a, present when the magma is a group.
    std::optional<std::vector<Element>> inverses;

    bool has(StructureKind kind) const;
};

/// Checks an equational law (A, C, CAI, CAII, AGI, AGII, R or a user
/// equation) over all n^k assignments. Throws Error for other laws.
CheckReport check_identity_law(const Magma& m, const LawId& law);

NeutralReport find_neutrals(const Magma& m);

/// Requires `e` to be a two-sided neutral of m; throws Error otherwise.
CheckReport check_inverses(const Magma& m, Element e);

CheckReport check_H(const Magma& m);

CheckReport check_cancellative(const Magma& m);

LocalIdentities local_identities(const Magma& m, Element a);

StructureReport classify(const Magma& m);

/// Dispatches any law, including NE, IN, LOOP, GROUP and ABELIAN.
CheckReport check(const Magma& m, const LawId& law);

/// Verdict of check(m, law) without building a report.
bool satisfies(const Magma& m, const LawId& law);

bool satisfies_all(const Magma& m, std::span<const LawId> laws);

/// JSON report: {"order", "law", "holds", "witness"?, "detail"?}.
nlohmann::json to_json(const CheckReport& report, int order);

/// "a=0, b=0, c=1"
std::string format_assignment(const Assignment& assignment);

} // namespace magma_lab
