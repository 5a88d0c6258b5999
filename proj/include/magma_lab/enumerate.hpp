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
 * Exhaustive generation of Cayley tables of one order.
 *
 * Tables are filled cell by cell in row-major order with values ascending,
 * so every stream is in lexicographic order of the flattened table. In
 * Latin-squares mode per-row and per-column bitmasks prune repeated
 * entries. Equational constraints are evaluated on the partial table after
 * every placed cell; any assignment whose cells are all filled prunes the
 * subtree when it fails.
 *
 * Each operation has two drivers: the serial reference in namespace
 * `serial` walks the whole tree from the root; the default driver splits it
 * into prefix subtrees, walks them on OpenMP threads and merges results by
 * subtree index. Output is identical for every worker count.
 */

#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "magma_lab/core.hpp"
#include "magma_lab/law.hpp"

namespace magma_lab {

enum class EnumMode { all_magmas, latin_squares };

struct EnumSpec {
    int order = 1;
    std::vector<LawId> constraints;
    bool up_to_iso = false;
    EnumMode mode = EnumMode::all_magmas;
    /// Keep only tables with a repeated entry in some row or column (¬H).
    bool require_not_latin = false;
};

struct ExecPolicy {
    int workers = 1;
};

class InfeasibleError : public Error {
public:
    using Error::Error;
};

/// Largest order the spec's mode allows: 6 for Latin squares; 3 for all
/// magmas, or 4 when some constraint is equational. The environment
/// variable MAGMA_LAB_MAX_ORDER, when set, replaces every cap.
int feasibility_cap(const EnumSpec& spec);

/// Throws InfeasibleError for an order outside 1..feasibility_cap.
void check_feasible(const EnumSpec& spec);

/// The match and how many structures of the domain were visited up to and
/// including it (the whole domain when nothing matched).
struct FirstMatch {
    std::optional<Magma> found;
    std::uint64_t examined = 0;
};

using MagmaSink = std::function<void(const Magma&)>;
/// Must be safe to call concurrently.
using MagmaPredicate = std::function<bool(const Magma&)>;

void enumerate(const EnumSpec& spec, const MagmaSink& sink,
               const ExecPolicy& policy = {});

std::vector<Magma> enumerate_all(const EnumSpec& spec, const ExecPolicy& policy = {});

std::uint64_t count(const EnumSpec& spec, const ExecPolicy& policy = {});

FirstMatch find_first(const EnumSpec& spec, const MagmaPredicate& predicate,
                      const ExecPolicy& policy = {});

namespace serial {

void enumerate(const EnumSpec& spec, const MagmaSink& sink);

std::uint64_t count(const EnumSpec& spec);

FirstMatch find_first(const EnumSpec& spec, const MagmaPredicate& predicate);

} // namespace serial

} // namespace magma_lab
