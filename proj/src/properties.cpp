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

#include "magma_lab/properties.hpp"

#include <algorithm>
#include <array>

#include <fmt/format.h>

#include "compiled_equation.hpp"

namespace magma_lab {

namespace {

using detail::CompiledEquation;

// Hand-unrolled scans for the built-in identities. Variables a, b, c with
// c innermost, matching the generic evaluator's order.
template <class Holds>
std::optional<Assignment> first_failure3(const Magma& m, Holds holds) {
    const int n = m.order();
    const Element* t = m.table().data();
    for (int a = 0; a < n; ++a) {
        for (int b = 0; b < n; ++b) {
            for (int c = 0; c < n; ++c) {
                if (!holds(t, n, a, b, c)) {
                    return Assignment{{'a', static_cast<Element>(a)},
                                      {'b', static_cast<Element>(b)},
                                      {'c', static_cast<Element>(c)}};
                }
            }
        }
    }
    return std::nullopt;
}

#define ML_OP(x, y) t[(x) * n + (y)]

std::optional<Assignment> builtin_identity_failure(const Magma& m, LawTag tag) {
    switch (tag) {
    case LawTag::C: {
        const int n = m.order();
        const Element* t = m.table().data();
        for (int a = 0; a < n; ++a) {
            for (int b = 0; b < n; ++b) {
                if (ML_OP(a, b) != ML_OP(b, a)) {
                    return Assignment{{'a', static_cast<Element>(a)},
                                      {'b', static_cast<Element>(b)}};
                }
            }
        }
        return std::nullopt;
    }
    case LawTag::A:
        return first_failure3(m, [](const Element* t, int n, int a, int b, int c) {
            return ML_OP(a, ML_OP(b, c)) == ML_OP(ML_OP(a, b), c);
        });
    case LawTag::CAI:
        return first_failure3(m, [](const Element* t, int n, int a, int b, int c) {
            return ML_OP(a, ML_OP(b, c)) == ML_OP(c, ML_OP(a, b));
        });
    case LawTag::CAII:
        return first_failure3(m, [](const Element* t, int n, int a, int b, int c) {
            return ML_OP(a, ML_OP(b, c)) == ML_OP(ML_OP(c, a), b);
        });
    case LawTag::AGI:
        return first_failure3(m, [](const Element* t, int n, int a, int b, int c) {
            return ML_OP(a, ML_OP(b, c)) == ML_OP(c, ML_OP(b, a));
        });
    case LawTag::AGII:
        return first_failure3(m, [](const Element* t, int n, int a, int b, int c) {
            return ML_OP(a, ML_OP(b, c)) == ML_OP(ML_OP(b, a), c);
        });
    case LawTag::R:
        return first_failure3(m, [](const Element* t, int n, int a, int b, int c) {
            return ML_OP(ML_OP(a, b), c) == ML_OP(a, ML_OP(c, b));
        });
    default:
        throw Error(fmt::format("{} is not a built-in identity", tag_name(tag)));
    }
}

#undef ML_OP

std::optional<Assignment> equation_failure(const Magma& m, const Equation& eq) {
    const CompiledEquation compiled(eq);
    const int n = m.order();
    detail::check_assignment_budget(n, compiled.arity());
    const Element* t = m.table().data();
    std::optional<Assignment> witness;
    detail::for_each_assignment(n, compiled.arity(), [&](const Element* values) {
        if (compiled.holds_at(t, n, values)) {
            return true;
        }
        Assignment w;
        for (int i = 0; i < compiled.arity(); ++i) {
            w.push_back({compiled.variables()[i], values[i]});
        }
        witness = std::move(w);
        return false;
    });
    return witness;
}

std::optional<Assignment> identity_failure(const Magma& m, const LawId& law) {
    if (!law.is_equational()) {
        throw Error(fmt::format("{} is not an equational law", law.name()));
    }
    if (law.is_user()) {
        return equation_failure(m, *law.equation());
    }
    return builtin_identity_failure(m, law.tag());
}

struct Duplicate {
    bool in_row;
    int line;
    Element value;
    int first;
    int second;
};

// First repeated entry, scanning rows before columns.
std::optional<Duplicate> first_duplicate(const Magma& m) {
    const int n = m.order();
    std::array<int, 256> seen;
    for (int r = 0; r < n; ++r) {
        seen.fill(-1);
        for (int c = 0; c < n; ++c) {
            const Element v = m.op(r, c);
            if (seen[v] >= 0) {
                return Duplicate{true, r, v, seen[v], c};
            }
            seen[v] = c;
        }
    }
    for (int c = 0; c < n; ++c) {
        seen.fill(-1);
        for (int r = 0; r < n; ++r) {
            const Element v = m.op(r, c);
            if (seen[v] >= 0) {
                return Duplicate{false, c, v, seen[v], r};
            }
            seen[v] = r;
        }
    }
    return std::nullopt;
}

bool is_two_sided_neutral(const Magma& m, Element e) {
    for (int a = 0; a < m.order(); ++a) {
        if (m.op(e, a) != a || m.op(a, e) != a) {
            return false;
        }
    }
    return true;
}

std::optional<Element> two_sided_neutral(const Magma& m) {
    for (int e = 0; e < m.order(); ++e) {
        if (is_two_sided_neutral(m, static_cast<Element>(e))) {
            return static_cast<Element>(e);
        }
    }
    return std::nullopt;
}

std::optional<Element> first_without_inverse(const Magma& m, Element e) {
    const int n = m.order();
    for (int a = 0; a < n; ++a) {
        bool found = false;
        for (int b = 0; b < n && !found; ++b) {
            found = m.op(a, b) == e && m.op(b, a) == e;
        }
        if (!found) {
            return static_cast<Element>(a);
        }
    }
    return std::nullopt;
}

CheckReport check_ne(const Magma& m) {
    CheckReport report{LawTag::NE};
    const auto neutrals = find_neutrals(m);
    if (neutrals.two_sided) {
        report.detail = {{"neutral", *neutrals.two_sided}};
        return report;
    }
    report.holds = false;
    report.witness = Assignment{};
    nlohmann::json refuters = nlohmann::json::array();
    for (int e = 0; e < m.order(); ++e) {
        for (int a = 0; a < m.order(); ++a) {
            if (m.op(e, a) != a || m.op(a, e) != a) {
                refuters.push_back(a);
                break;
            }
        }
    }
    report.detail = {{"left_neutrals", neutrals.left},
                     {"right_neutrals", neutrals.right},
                     {"refuters", refuters}};
    return report;
}

CheckReport check_in(const Magma& m) {
    const auto e = two_sided_neutral(m);
    if (!e) {
        CheckReport report{LawTag::IN, false, Assignment{}};
        report.detail = {{"reason", "no two-sided neutral"}};
        return report;
    }
    auto report = check_inverses(m, *e);
    report.law = LawTag::IN;
    return report;
}

// First failing component of a conjunction, relabeled as `composite`.
CheckReport check_conjunction(const Magma& m, LawTag composite,
                              std::initializer_list<LawTag> parts) {
    for (const auto part : parts) {
        auto sub = check(m, part);
        if (!sub.holds) {
            CheckReport report{composite, false, std::move(sub.witness)};
            report.detail = {{"failed", tag_name(part)}};
            if (!sub.detail.is_null()) {
                report.detail["component"] = std::move(sub.detail);
            }
            return report;
        }
    }
    return CheckReport{composite};
}

} // namespace

std::string_view structure_name(StructureKind kind) {
    switch (kind) {
    case StructureKind::magma:
        return "magma";
    case StructureKind::commutative:
        return "commutative";
    case StructureKind::semigroup:
        return "semigroup";
    case StructureKind::monoid:
        return "monoid";
    case StructureKind::group:
        return "group";
    case StructureKind::abelian_group:
        return "abelian-group";
    case StructureKind::quasigroup:
        return "quasigroup";
    case StructureKind::loop:
        return "loop";
    }
    return "?";
}

bool StructureReport::has(StructureKind kind) const {
    return std::find(labels.begin(), labels.end(), kind) != labels.end();
}

CheckReport check_identity_law(const Magma& m, const LawId& law) {
    CheckReport report{law};
    report.witness = identity_failure(m, law);
    report.holds = !report.witness.has_value();
    return report;
}

NeutralReport find_neutrals(const Magma& m) {
    NeutralReport report;
    const int n = m.order();
    for (int e = 0; e < n; ++e) {
        bool left = true;
        bool right = true;
        for (int a = 0; a < n && (left || right); ++a) {
            left = left && m.op(e, a) == a;
            right = right && m.op(a, e) == a;
        }
        if (left) {
            report.left.push_back(static_cast<Element>(e));
        }
        if (right) {
            report.right.push_back(static_cast<Element>(e));
        }
        if (left && right && !report.two_sided) {
            report.two_sided = static_cast<Element>(e);
        }
    }
    return report;
}

CheckReport check_inverses(const Magma& m, Element e) {
    if (e >= m.order() || !is_two_sided_neutral(m, e)) {
        throw Error(fmt::format("element {} is not a two-sided neutral", int{e}));
    }
    CheckReport report{LawTag::IN};
    if (const auto a = first_without_inverse(m, e)) {
        report.holds = false;
        report.witness = Assignment{{'a', *a}};
        report.detail = {{"neutral", e}};
    }
    return report;
}

CheckReport check_H(const Magma& m) {
    CheckReport report{LawTag::H};
    const auto dup = first_duplicate(m);
    if (!dup) {
        return report;
    }
    report.holds = false;
    // Row a: a + y = b has two solutions. Column a: x + a = b has two.
    report.witness = Assignment{{'a', static_cast<Element>(dup->line)},
                                {'b', dup->value}};
    if (dup->in_row) {
        report.detail = {{"row", dup->line},
                         {"value", dup->value},
                         {"columns", {dup->first, dup->second}}};
    } else {
        report.detail = {{"column", dup->line},
                         {"value", dup->value},
                         {"rows", {dup->first, dup->second}}};
    }
    return report;
}

CheckReport check_cancellative(const Magma& m) {
    CheckReport report{LawTag::CA};
    const int n = m.order();
    for (int a = 0; a < n; ++a) {
        for (int b = 0; b < n; ++b) {
            for (int c = 0; c < n; ++c) {
                if (b != c && m.op(a, b) == m.op(a, c)) {
                    report.holds = false;
                    report.witness = Assignment{{'a', static_cast<Element>(a)},
                                                {'b', static_cast<Element>(b)},
                                                {'c', static_cast<Element>(c)}};
                    report.detail = {{"side", "left"}};
                    return report;
                }
            }
        }
    }
    for (int a = 0; a < n; ++a) {
        for (int b = 0; b < n; ++b) {
            for (int c = 0; c < n; ++c) {
                if (b != c && m.op(b, a) == m.op(c, a)) {
                    report.holds = false;
                    report.witness = Assignment{{'a', static_cast<Element>(a)},
                                                {'b', static_cast<Element>(b)},
                                                {'c', static_cast<Element>(c)}};
                    report.detail = {{"side", "right"}};
                    return report;
                }
            }
        }
    }
    return report;
}

LocalIdentities local_identities(const Magma& m, Element a) {
    if (a >= m.order()) {
        throw Error(fmt::format("element {} out of range", int{a}));
    }
    LocalIdentities out{a, {}, {}};
    for (int x = 0; x < m.order(); ++x) {
        if (m.op(a, x) == a) {
            out.right.push_back(static_cast<Element>(x));
        }
        if (m.op(x, a) == a) {
            out.left.push_back(static_cast<Element>(x));
        }
    }
    return out;
}

StructureReport classify(const Magma& m) {
    StructureReport report;
    report.neutrals = find_neutrals(m);
    const bool commutative = satisfies(m, LawTag::C);
    const bool associative = satisfies(m, LawTag::A);
    const bool latin = !first_duplicate(m).has_value();
    const bool neutral = report.neutrals.two_sided.has_value();
    const bool group = associative && neutral &&
                       !first_without_inverse(m, *report.neutrals.two_sided);

    report.labels.push_back(StructureKind::magma);
    if (commutative) {
        report.labels.push_back(StructureKind::commutative);
    }
    if (associative) {
        report.labels.push_back(StructureKind::semigroup);
    }
    if (associative && neutral) {
        report.labels.push_back(StructureKind::monoid);
    }
    if (group) {
        report.labels.push_back(StructureKind::group);
        std::vector<Element> inv(m.order());
        const Element e = *report.neutrals.two_sided;
        for (int a = 0; a < m.order(); ++a) {
            for (int b = 0; b < m.order(); ++b) {
                if (m.op(a, b) == e) {
                    inv[a] = static_cast<Element>(b);
                    break;
                }
            }
        }
        report.inverses = std::move(inv);
    }
    if (group && commutative) {
        report.labels.push_back(StructureKind::abelian_group);
    }
    if (latin) {
        report.labels.push_back(StructureKind::quasigroup);
    }
    if (latin && neutral) {
        report.labels.push_back(StructureKind::loop);
    }
    return report;
}

CheckReport check(const Magma& m, const LawId& law) {
    switch (law.tag()) {
    case LawTag::NE:
        return check_ne(m);
    case LawTag::IN:
        return check_in(m);
    case LawTag::H:
        return check_H(m);
    case LawTag::CA:
        return check_cancellative(m);
    case LawTag::LOOP:
        return check_conjunction(m, LawTag::LOOP, {LawTag::H, LawTag::NE});
    case LawTag::GROUP:
        return check_conjunction(m, LawTag::GROUP, {LawTag::A, LawTag::NE, LawTag::IN});
    case LawTag::ABELIAN:
        return check_conjunction(m, LawTag::ABELIAN,
                                 {LawTag::A, LawTag::NE, LawTag::IN, LawTag::C});
    default:
        return check_identity_law(m, law);
    }
}

bool satisfies(const Magma& m, const LawId& law) {
    switch (law.tag()) {
    case LawTag::NE:
        return two_sided_neutral(m).has_value();
    case LawTag::IN: {
        const auto e = two_sided_neutral(m);
        return e && !first_without_inverse(m, *e);
    }
    case LawTag::H:
    case LawTag::CA:
        // Both are "no repeated entry in any row or column" on a finite table.
        return !first_duplicate(m);
    case LawTag::LOOP:
        return !first_duplicate(m) && two_sided_neutral(m);
    case LawTag::GROUP:
    case LawTag::ABELIAN: {
        if (law.tag() == LawTag::ABELIAN && builtin_identity_failure(m, LawTag::C)) {
            return false;
        }
        if (builtin_identity_failure(m, LawTag::A)) {
            return false;
        }
        const auto e = two_sided_neutral(m);
        return e && !first_without_inverse(m, *e);
    }
    default:
        return !identity_failure(m, law);
    }
}

bool satisfies_all(const Magma& m, std::span<const LawId> laws) {
    return std::all_of(laws.begin(), laws.end(),
                       [&](const LawId& law) { return satisfies(m, law); });
}

nlohmann::json to_json(const CheckReport& report, int order) {
    nlohmann::json j{{"order", order}, {"law", report.law.name()},
                     {"holds", report.holds}};
    if (report.witness) {
        nlohmann::json w = nlohmann::json::object();
        for (const auto& b : *report.witness) {
            w[std::string(1, b.var)] = b.value;
        }
        j["witness"] = std::move(w);
    }
    if (!report.detail.is_null()) {
        j["detail"] = report.detail;
    }
    return j;
}

std::string format_assignment(const Assignment& assignment) {
    std::string out;
    for (const auto& b : assignment) {
        if (!out.empty()) {
            out += ", ";
        }
        out += fmt::format("{}={}", b.var, int{b.value});
    }
    return out;
}

} // namespace magma_lab
