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
 * Terms over one binary operation, equations between them, and the law
 * identifiers (built-in properties or user equations) the checkers accept.
 */

#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace magma_lab {

/// A variable `a`..`z`, or the sum `left + right` of two subterms.
class Term {
public:
    static Term var(char name);
    static Term sum(Term left, Term right);

    bool is_var() const noexcept { return children_.empty(); }
    char name() const noexcept { return name_; }
    const Term& left() const { return children_[0]; }
    const Term& right() const { return children_[1]; }

    /// Nested pairs are parenthesized: `a + (b + c)`, `(a + b) + c`.
    std::string to_string() const;

    bool operator==(const Term&) const = default;

private:
    char name_ = 0;
    std::vector<Term> children_;
};

/// lhs = rhs, universally quantified over every variable that occurs.
struct Equation {
    Term lhs;
    Term rhs;

    /// Distinct variables, alphabetically ordered.
    std::vector<char> variables() const;

    /// Distinct variables in order of first occurrence, lhs then rhs.
    std::vector<char> variables_by_occurrence() const;

    std::string to_string() const;

    bool operator==(const Equation&) const = default;
};

enum class LawTag {
    A,
    C,
    NE,
    IN,
    CAI,
    CAII,
    AGI,
    AGII,
    R,
    H,
    CA,
    LOOP,
    GROUP,
    ABELIAN,
    USER,
};

/// A named built-in property, or a user equation.
class LawId {
public:
    LawId(LawTag tag); // NOLINT(google-explicit-constructor): tags convert to laws
    static LawId user(Equation eq);

    LawTag tag() const noexcept { return tag_; }
    bool is_user() const noexcept { return tag_ == LawTag::USER; }

    /// The defining identity of an equational law (built-in or user), or
    /// nullopt for NE, IN, H, CA, LOOP, GROUP, ABELIAN.
    const std::optional<Equation>& equation() const noexcept { return equation_; }

    bool is_equational() const noexcept { return equation_.has_value(); }

    /// Tag name for built-ins; the equation text for user laws.
    std::string name() const;

    /// Exact structural equality (same tag, same equation text). For
    /// alpha-equivalence use law_equal().
    bool operator==(const LawId&) const = default;

private:
    LawId(LawTag tag, std::optional<Equation> eq)
        : tag_(tag), equation_(std::move(eq)) {}

    LawTag tag_;
    std::optional<Equation> equation_;
};

/// Name of a built-in tag ("A", "CAII", ...); "USER" for LawTag::USER.
std::string_view tag_name(LawTag tag);

/// Case-insensitive lookup of a built-in name.
std::optional<LawTag> tag_from_name(std::string_view name);

/// The seven built-in identities in catalog order: A C CAI CAII AGI AGII R.
const std::vector<LawTag>& identity_tags();

/// Every built-in tag (excludes USER).
const std::vector<LawTag>& builtin_tags();

/// The defining equation of a built-in identity; nullopt otherwise.
std::optional<Equation> builtin_equation(LawTag tag);

/// Alpha-equivalence: variables renamed by order of first occurrence, then
/// structural equality. Non-equational built-ins compare by tag.
bool law_equal(const LawId& lhs, const LawId& rhs);

} // namespace magma_lab
