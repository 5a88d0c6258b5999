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
 * The characterization theorems for abelian groups as premise/conclusion
 * clauses over laws, checked exhaustively on every finite structure of the
 * theorem's domain up to a given order.
 *
 * A pass means "no counterexample up to order N". It is evidence for the
 * statement on arbitrary carriers, not a proof of it.
 */

#pragma once

#include <chrono>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "magma_lab/core.hpp"
#include "magma_lab/enumerate.hpp"
#include "magma_lab/law.hpp"

namespace magma_lab {

enum class TheoremDomain { all_magmas, quasigroups };

std::string_view domain_name(TheoremDomain domain);

/// premises ⇒ conclusions, or premises ⇔ conclusions when `equivalence`.
struct Clause {
    std::vector<LawId> premises;
    std::vector<LawId> conclusions;
    bool equivalence = false;

    std::string to_string() const;
};

struct TheoremSpec {
    std::string id; ///< "T1" .. "T11"
    std::string summary;
    std::vector<Clause> clauses;
    TheoremDomain domain = TheoremDomain::all_magmas;
};

struct VerificationReport {
    TheoremSpec theorem;
    int max_order = 0;
    std::uint64_t structures_examined = 0;
    std::optional<Magma> counterexample;
    /// Index into theorem.clauses of the clause the counterexample breaks.
    std::optional<std::size_t> failed_clause;
    std::chrono::duration<double> elapsed{};

    bool passed() const noexcept { return !counterexample.has_value(); }
};

/// All eleven theorems, T1..T11.
const std::vector<TheoremSpec>& theorem_catalog();

/// Throws Error for an unknown id.
const TheoremSpec& theorem_by_id(std::string_view id);

/// Largest max_order verify_theorem accepts for a domain: 3 for all magmas,
/// 5 for quasigroups. MAGMA_LAB_MAX_ORDER overrides both.
int theorem_order_cap(TheoremDomain domain);

/// Index of the first clause m violates, if any.
std::optional<std::size_t> violated_clause(const TheoremSpec& theorem, const Magma& m);

/// Examines every structure of the theorem's domain with order 1..max_order
/// and reports the first counterexample in enumeration order.
VerificationReport verify_theorem(const TheoremSpec& theorem, int max_order,
                                  const ExecPolicy& policy = {});

VerificationReport verify_theorem(std::string_view id, int max_order,
                                  const ExecPolicy& policy = {});

} // namespace magma_lab
