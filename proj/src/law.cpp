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

#include "magma_lab/law.hpp"

#include <algorithm>
#include <array>
#include <cctype>

#include "magma_lab/core.hpp"

namespace magma_lab {

namespace {

struct TagEntry {
    LawTag tag;
    std::string_view name;
};

constexpr std::array kTags{
    TagEntry{LawTag::A, "A"},       TagEntry{LawTag::C, "C"},
    TagEntry{LawTag::NE, "NE"},     TagEntry{LawTag::IN, "IN"},
    TagEntry{LawTag::CAI, "CAI"},   TagEntry{LawTag::CAII, "CAII"},
    TagEntry{LawTag::AGI, "AGI"},   TagEntry{LawTag::AGII, "AGII"},
    TagEntry{LawTag::R, "R"},       TagEntry{LawTag::H, "H"},
    TagEntry{LawTag::CA, "CA"},     TagEntry{LawTag::LOOP, "LOOP"},
    TagEntry{LawTag::GROUP, "GROUP"}, TagEntry{LawTag::ABELIAN, "ABELIAN"},
};

Term v(char c) { return Term::var(c); }
Term s(Term l, Term r) { return Term::sum(std::move(l), std::move(r)); }

void collect(const Term& t, std::vector<char>& seen) {
    if (t.is_var()) {
        if (std::find(seen.begin(), seen.end(), t.name()) == seen.end()) {
            seen.push_back(t.name());
        }
        return;
    }
    collect(t.left(), seen);
    collect(t.right(), seen);
}

Term rename(const Term& t, const std::vector<char>& order) {
    if (t.is_var()) {
        const auto it = std::find(order.begin(), order.end(), t.name());
        return Term::var(static_cast<char>('a' + (it - order.begin())));
    }
    return Term::sum(rename(t.left(), order), rename(t.right(), order));
}

Equation normalized(const Equation& eq) {
    const auto order = eq.variables_by_occurrence();
    return Equation{rename(eq.lhs, order), rename(eq.rhs, order)};
}

std::string to_string_nested(const Term& t) {
    if (t.is_var()) {
        return std::string(1, t.name());
    }
    return "(" + t.to_string() + ")";
}

} // namespace

Term Term::var(char name) {
    if (name < 'a' || name > 'z') {
        throw Error(std::string("variable must be a-z, got '") + name + "'");
    }
    Term t;
    t.name_ = name;
    return t;
}

Term Term::sum(Term left, Term right) {
    Term t;
    t.children_.reserve(2);
    t.children_.push_back(std::move(left));
    t.children_.push_back(std::move(right));
    return t;
}

std::string Term::to_string() const {
    if (is_var()) {
        return std::string(1, name_);
    }
    return to_string_nested(left()) + " + " + to_string_nested(right());
}

std::vector<char> Equation::variables() const {
    auto vars = variables_by_occurrence();
    std::sort(vars.begin(), vars.end());
    return vars;
}

std::vector<char> Equation::variables_by_occurrence() const {
    std::vector<char> seen;
    collect(lhs, seen);
    collect(rhs, seen);
    return seen;
}

std::string Equation::to_string() const {
    return lhs.to_string() + " = " + rhs.to_string();
}

LawId::LawId(LawTag tag) : tag_(tag), equation_(builtin_equation(tag)) {
    if (tag == LawTag::USER) {
        throw Error("a user law needs an equation; use LawId::user");
    }
}

LawId LawId::user(Equation eq) { return LawId(LawTag::USER, std::move(eq)); }

std::string LawId::name() const {
    if (is_user()) {
        return equation_->to_string();
    }
    return std::string(tag_name(tag_));
}

std::string_view tag_name(LawTag tag) {
    for (const auto& e : kTags) {
        if (e.tag == tag) {
            return e.name;
        }
    }
    return "USER";
}

std::optional<LawTag> tag_from_name(std::string_view name) {
    std::string upper(name);
    std::transform(upper.begin(), upper.end(), upper.begin(),
                   [](unsigned char c) { return static_cast<char>(std::toupper(c)); });
    for (const auto& e : kTags) {
        if (e.name == upper) {
            return e.tag;
        }
    }
    return std::nullopt;
}

const std::vector<LawTag>& identity_tags() {
    static const std::vector<LawTag> tags{LawTag::A,   LawTag::C,    LawTag::CAI,
                                          LawTag::CAII, LawTag::AGI, LawTag::AGII,
                                          LawTag::R};
    return tags;
}

const std::vector<LawTag>& builtin_tags() {
    static const std::vector<LawTag> tags = [] {
        std::vector<LawTag> out;
        for (const auto& e : kTags) {
            out.push_back(e.tag);
        }
        return out;
    }();
    return tags;
}

std::optional<Equation> builtin_equation(LawTag tag) {
    switch (tag) {
    case LawTag::A:
        return Equation{s(v('a'), s(v('b'), v('c'))), s(s(v('a'), v('b')), v('c'))};
    case LawTag::C:
        return Equation{s(v('a'), v('b')), s(v('b'), v('a'))};
    case LawTag::CAI:
        return Equation{s(v('a'), s(v('b'), v('c'))), s(v('c'), s(v('a'), v('b')))};
    case LawTag::CAII:
        return Equation{s(v('a'), s(v('b'), v('c'))), s(s(v('c'), v('a')), v('b'))};
    case LawTag::AGI:
        return Equation{s(v('a'), s(v('b'), v('c'))), s(v('c'), s(v('b'), v('a')))};
    case LawTag::AGII:
        return Equation{s(v('a'), s(v('b'), v('c'))), s(s(v('b'), v('a')), v('c'))};
    case LawTag::R:
        return Equation{s(s(v('a'), v('b')), v('c')), s(v('a'), s(v('c'), v('b')))};
    default:
        return std::nullopt;
    }
}

bool law_equal(const LawId& lhs, const LawId& rhs) {
    if (lhs.is_equational() != rhs.is_equational()) {
        return false;
    }
    if (!lhs.is_equational()) {
        return lhs.tag() == rhs.tag();
    }
    return normalized(*lhs.equation()) == normalized(*rhs.equation());
}

} // namespace magma_lab
