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

#include "magma_lab/theorems.hpp"

#include <algorithm>
#include <cstdlib>

#include <fmt/format.h>

#include "magma_lab/properties.hpp"

namespace magma_lab {

namespace {

using T = LawTag;

Clause implies(std::vector<LawId> premises, std::vector<LawId> conclusions) {
    return {std::move(premises), std::move(conclusions), false};
}

Clause iff(std::vector<LawId> premises, std::vector<LawId> conclusions) {
    return {std::move(premises), std::move(conclusions), true};
}

std::vector<TheoremSpec> build_catalog() {
    using D = TheoremDomain;
    std::vector<TheoremSpec> out;
    out.push_back({"T1", "commutative semigroups satisfy CAI, CAII, AGI, AGII and R",
                   {implies({T::A, T::C}, {T::CAI, T::CAII, T::AGI, T::AGII, T::R})},
                   D::all_magmas});
    out.push_back({"T2", "abelian groups satisfy H", {implies({T::ABELIAN}, {T::H})},
                   D::all_magmas});
    out.push_back({"T3", "NE + AGII gives a commutative semigroup",
                   {implies({T::NE, T::AGII}, {T::A, T::C})}, D::all_magmas});
    out.push_back({"T4", "NE + any of CAI, CAII, AGI, R gives a commutative semigroup",
                   {implies({T::NE, T::CAI}, {T::A, T::C}),
                    implies({T::NE, T::CAII}, {T::A, T::C}),
                    implies({T::NE, T::AGI}, {T::A, T::C}),
                    implies({T::NE, T::R}, {T::A, T::C})},
                   D::all_magmas});
    out.push_back({"T5", "abelian group <=> NE + IN + any of CAI, CAII, AGI, AGII, R",
                   {iff({T::ABELIAN}, {T::NE, T::IN, T::CAI}),
                    iff({T::ABELIAN}, {T::NE, T::IN, T::CAII}),
                    iff({T::ABELIAN}, {T::NE, T::IN, T::AGI}),
                    iff({T::ABELIAN}, {T::NE, T::IN, T::AGII}),
                    iff({T::ABELIAN}, {T::NE, T::IN, T::R})},
                   D::all_magmas});
    out.push_back({"T6", "abelian group <=> associative commutative quasigroup",
                   {iff({T::H, T::A, T::C}, {T::ABELIAN})}, D::all_magmas});
    out.push_back({"T7", "quasigroups are cancellative", {implies({T::H}, {T::CA})},
                   D::all_magmas});
    out.push_back({"T8", "quasigroup + CAI is a loop",
                   {implies({T::H, T::CAI}, {T::LOOP})}, D::quasigroups});
    out.push_back({"T9", "quasigroup + CAII is a loop (and satisfies A and CAI)",
                   {implies({T::H, T::CAII}, {T::LOOP, T::A, T::CAI})},
                   D::quasigroups});
    out.push_back({"T10", "quasigroup + AGII or R is a loop",
                   {implies({T::H, T::AGII}, {T::LOOP}), implies({T::H, T::R}, {T::LOOP})},
                   D::quasigroups});
    out.push_back({"T11", "abelian group <=> H + any of CAI, CAII, AGII, R",
                   {iff({T::ABELIAN}, {T::H, T::CAI}), iff({T::ABELIAN}, {T::H, T::CAII}),
                    iff({T::ABELIAN}, {T::H, T::AGII}), iff({T::ABELIAN}, {T::H, T::R})},
                   D::quasigroups});
    return out;
}

std::string join(const std::vector<LawId>& laws) {
    std::string out;
    for (const auto& l : laws) {
        if (!out.empty()) {
            out += ", ";
        }
        out += l.name();
    }
    return out;
}

} // namespace

std::string_view domain_name(TheoremDomain domain) {
    return domain == TheoremDomain::all_magmas ? "all-magmas" : "quasigroups";
}

std::string Clause::to_string() const {
    return fmt::format("{{{}}} {} {{{}}}", join(premises), equivalence ? "<=>" : "=>",
                       join(conclusions));
}

const std::vector<TheoremSpec>& theorem_catalog() {
    static const std::vector<TheoremSpec> catalog = build_catalog();
    return catalog;
}

const TheoremSpec& theorem_by_id(std::string_view id) {
    for (const auto& t : theorem_catalog()) {
        if (t.id == id) {
            return t;
        }
    }
    throw Error(fmt::format("unknown theorem '{}'", id));
}

int theorem_order_cap(TheoremDomain domain) {
    if (std::getenv("MAGMA_LAB_MAX_ORDER") != nullptr) {
        EnumSpec probe;
        return feasibility_cap(probe);
    }
    return domain == TheoremDomain::all_magmas ? 3 : 5;
}

std::optional<std::size_t> violated_clause(const TheoremSpec& theorem, const Magma& m) {
    for (std::size_t i = 0; i < theorem.clauses.size(); ++i) {
        const auto& clause = theorem.clauses[i];
        const bool lhs = satisfies_all(m, clause.premises);
        if (lhs && !satisfies_all(m, clause.conclusions)) {
            return i;
        }
        if (clause.equivalence && !lhs && satisfies_all(m, clause.conclusions)) {
            return i;
        }
    }
    return std::nullopt;
}

VerificationReport verify_theorem(const TheoremSpec& theorem, int max_order,
                                  const ExecPolicy& policy) {
    const int cap = theorem_order_cap(theorem.domain);
    if (max_order < 1 || max_order > cap) {
        throw InfeasibleError(fmt::format("{}: max order {} outside 1..{} for domain {}",
                                          theorem.id, max_order, cap,
                                          domain_name(theorem.domain)));
    }
    const auto start = std::chrono::steady_clock::now();
    VerificationReport report;
    report.theorem = theorem;
    report.max_order = max_order;
    const auto broken = [&theorem](const Magma& m) {
        return violated_clause(theorem, m).has_value();
    };
    for (int order = 1; order <= max_order; ++order) {
        EnumSpec spec;
        spec.order = order;
        spec.mode = theorem.domain == TheoremDomain::quasigroups ? EnumMode::latin_squares
                                                                 : EnumMode::all_magmas;
        auto match = find_first(spec, broken, policy);
        report.structures_examined += match.examined;
        if (match.found) {
            report.failed_clause = violated_clause(theorem, *match.found);
            report.counterexample = std::move(match.found);
            break;
        }
    }
    report.elapsed = std::chrono::steady_clock::now() - start;
    return report;
}

VerificationReport verify_theorem(std::string_view id, int max_order,
                                  const ExecPolicy& policy) {
    return verify_theorem(theorem_by_id(id), max_order, policy);
}

} // namespace magma_lab
