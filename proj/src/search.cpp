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

#include "magma_lab/search.hpp"

#include <algorithm>

#include <fmt/format.h>

#include "magma_lab/properties.hpp"

namespace magma_lab {

EnumMode search_mode(const SearchSpec& spec) {
    for (const auto& law : spec.assume) {
        switch (law.tag()) {
        case LawTag::H:
        case LawTag::CA:
        case LawTag::LOOP:
        case LawTag::GROUP:
        case LawTag::ABELIAN:
            return EnumMode::latin_squares;
        default:
            break;
        }
    }
    return EnumMode::all_magmas;
}

EnumSpec search_enum_spec(const SearchSpec& spec, int order) {
    EnumSpec e;
    e.order = order;
    e.constraints = spec.assume;
    e.up_to_iso = spec.up_to_iso;
    e.mode = search_mode(spec);
    // ¬H (equivalently ¬CA) goes into generation; everything else is a filter.
    e.require_not_latin =
        spec.refute.tag() == LawTag::H || spec.refute.tag() == LawTag::CA;
    return e;
}

SearchResult find_model(const SearchSpec& spec, const ExecPolicy& policy) {
    if (spec.orders.lo < 1 || spec.orders.empty()) {
        throw InfeasibleError(fmt::format("invalid order range {}..{}", spec.orders.lo,
                                          spec.orders.hi));
    }
    for (int order = spec.orders.lo; order <= spec.orders.hi; ++order) {
        check_feasible(search_enum_spec(spec, order));
    }

    SearchResult result;
    result.orders_exhausted = {spec.orders.lo, spec.orders.lo - 1};
    const LawId refute = spec.refute;
    const auto violates = [refute](const Magma& m) { return !satisfies(m, refute); };
    for (int order = spec.orders.lo; order <= spec.orders.hi; ++order) {
        auto match = find_first(search_enum_spec(spec, order), violates, policy);
        result.structures_examined += match.examined;
        if (match.found) {
            result.found = std::move(match.found);
            return result;
        }
        result.orders_exhausted.hi = order;
    }
    return result;
}

std::vector<IndependenceCell> independence_matrix(const std::vector<LawId>& laws,
                                                  int max_order,
                                                  const ExecPolicy& policy) {
    std::vector<IndependenceCell> cells;
    for (const auto& p : laws) {
        for (const auto& q : laws) {
            if (p == q) {
                continue;
            }
            SearchSpec spec{{p}, q, {1, max_order}, false};
            const int cap = feasibility_cap(search_enum_spec(spec, 1));
            spec.orders.hi = std::min(max_order, cap);
            cells.push_back({p, q, find_model(spec, policy)});
        }
    }
    return cells;
}

} // namespace magma_lab
