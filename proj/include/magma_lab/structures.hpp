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
 * Built-in example structures. Finite ones materialize a Cayley table;
 * infinite ones (integers, naturals, the unit interval) are sampled on a
 * finite window with exact rational arithmetic. A pass on a window is only a
 * necessary condition for the law on the whole carrier; a failure is a real
 * counterexample.
 */

#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <boost/rational.hpp>

#include "magma_lab/core.hpp"
#include "magma_lab/law.hpp"
#include "magma_lab/properties.hpp"

namespace magma_lab {

using Rational = boost::rational<std::int64_t>;

std::string to_string(const Rational& r);

/// A sampled infinite carrier.
struct Window {
    /// Values every variable ranges over, in scan order; a witness is the
    /// first failing assignment in this order.
    std::vector<Rational> samples;
    /// Candidates for existential checks (solutions of x + a = b, neutral
    /// elements). A superset of `samples`.
    std::vector<Rational> solutions;
    std::function<Rational(const Rational&, const Rational&)> op;
    std::string description;
    /// Set when a missing solution can never exist outside the window either
    /// (e.g. naturals: x + 3 = 1).
    bool missing_solutions_are_genuine = false;
};

/// A property claim: law tag and the verdict the example asserts.
struct Claim {
    LawTag law;
    bool holds;
};

struct BuiltinStructure {
    std::string name;
    std::vector<int> params;
    std::optional<Magma> table; ///< finite kind
    std::optional<Window> window; ///< windowed kind
    /// Verdicts the literature example asserts for this operation.
    std::vector<Claim> claims;

    bool finite() const noexcept { return table.has_value(); }
    std::string label() const;
};

/// Names: zn_add, zn_sub, zn_rsub, proj1, proj2, chain_meet, chain_join
/// (param: order), trivalent_equiv (none), prob_star (param: grid
/// denominator, default 4), int_sub_window (params: lo, hi; default -5, 5),
/// nat_add_window (param: hi, default 5). Throws Error on unknown names or
/// invalid params.
BuiltinStructure builtin(std::string_view name, const std::vector<int>& params = {});

const std::vector<std::string>& builtin_names();

enum class WindowScope {
    necessary_only, ///< held on the window; the full carrier is unverified
    genuine,        ///< a real counterexample on the full carrier
    window_local,   ///< no solution inside the window; may exist outside it
};

std::string_view scope_name(WindowScope scope);

struct WindowReport {
    LawId law;
    bool holds = true;
    WindowScope scope = WindowScope::necessary_only;
    std::vector<std::pair<char, Rational>> witness;
    std::string note;
};

/// Checks an equational law, CA, H or NE on the window. Throws Error for a
/// finite structure, for other laws, or when the number of assignments
/// exceeds `max_assignments`.
WindowReport windowed_check(const BuiltinStructure& s, const LawId& law,
                            std::uint64_t max_assignments = 10'000'000);

struct VerdictRow {
    LawTag law;
    bool claimed;
    bool actual;
    /// Known, documented mismatch between the literature claim and the
    /// computed verdict.
    bool documented = false;
    std::string note;

    bool agrees() const noexcept { return claimed == actual; }
};

struct ExampleEntry {
    int example; ///< 1..9
    BuiltinStructure structure;
    std::vector<VerdictRow> rows;
    std::optional<StructureReport> classification; ///< finite structures only
};

/// Every built-in example checked against its claims, in example order.
std::vector<ExampleEntry> example_suite();

} // namespace magma_lab
