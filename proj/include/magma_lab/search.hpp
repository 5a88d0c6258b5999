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
 * Independence-model finder: the first structure, in enumeration order,
 * that satisfies a set of assumed laws and violates one target law.
 */

#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "magma_lab/core.hpp"
#include "magma_lab/enumerate.hpp"
#include "magma_lab/law.hpp"

namespace magma_lab {

struct OrderRange {
    int lo = 1;
    int hi = 1;

    bool empty() const noexcept { return hi < lo; }
    bool operator==(const OrderRange&) const = default;
};

struct SearchSpec {
    std::vector<LawId> assume;
    LawId refute = LawTag::A;
    OrderRange orders;
    bool up_to_iso = false;
};

struct SearchResult {
    std::optional<Magma> found;
    /// Orders searched completely without a model. Empty when the first
    /// order already produced one.
    OrderRange orders_exhausted{1, 0};
    std::uint64_t structures_examined = 0;
};

/// Latin-squares when an assumed law forces H on a finite carrier (H, CA,
/// LOOP, GROUP, ABELIAN), all-magmas otherwise.
EnumMode search_mode(const SearchSpec& spec);

/// The enumeration spec used for one order of a search.
EnumSpec search_enum_spec(const SearchSpec& spec, int order);

/// Throws InfeasibleError if some order in the range exceeds the cap.
SearchResult find_model(const SearchSpec& spec, const ExecPolicy& policy = {});

struct IndependenceCell {
    LawId assume;
    LawId refute;
    SearchResult result;
};

/// find_model({P}, Q) for every ordered pair P != Q of `laws`, row-major.
/// Each pair's order range is 1..max_order clamped to its mode's cap.
std::vector<IndependenceCell> independence_matrix(const std::vector<LawId>& laws,
                                                  int max_order,
                                                  const ExecPolicy& policy = {});

} // namespace magma_lab
