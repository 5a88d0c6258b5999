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

#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <vector>

#include "magma_lab/core.hpp"
#include "magma_lab/law.hpp"

namespace magma_lab::detail {

/// Marks a table cell that has not been filled yet.
inline constexpr Element kUnset = 0xFF;

/// An equation flattened into two postfix programs over variable slots.
///
/// Slot i holds the value of the i-th variable in alphabetical order.
class CompiledEquation {
public:
    static constexpr int kMaxStack = 64;

    explicit CompiledEquation(const Equation& eq);

    int arity() const noexcept { return static_cast<int>(variables_.size()); }
    const std::vector<char>& variables() const noexcept { return variables_; }

    /// True iff lhs = rhs under `values` on a complete table.
    bool holds_at(const Element* table, int n, const Element* values) const {
        return eval(lhs_, table, n, values) == eval(rhs_, table, n, values);
    }

    enum class Partial { equal, differ, unknown };

    /// Evaluates on a partially filled table; `unknown` if any lookup hits an
    /// unset cell.
    Partial eval_partial(const Element* table, int n, const Element* values) const;

private:
    // code >= 0: push variable slot; code < 0: pop two, push their sum.
    using Program = std::vector<std::int8_t>;
    static constexpr std::int8_t kSum = -1;

    static Element eval(const Program& prog, const Element* table, int n,
                        const Element* values) {
        std::array<Element, kMaxStack> stack;
        int top = 0;
        for (const auto code : prog) {
            if (code >= 0) {
                stack[top++] = values[code];
            } else {
                const Element r = stack[--top];
                const Element l = stack[top - 1];
                stack[top - 1] = table[l * n + r];
            }
        }
        return stack[0];
    }

    static bool eval_partial_side(const Program& prog, const Element* table, int n,
                                  const Element* values, Element& out);

    Program compile(const Term& t);
    void emit(const Term& t, Program& prog, int depth);

    std::vector<char> variables_;
    Program lhs_;
    Program rhs_;
};

/// Calls `visit(values)` for each of the n^k assignments in lexicographic
/// order (last slot fastest) until it returns false. Returns false iff
/// stopped early.
template <class Visit>
bool for_each_assignment(int n, int k, Visit&& visit) {
    std::vector<Element> values(static_cast<std::size_t>(k), 0);
    if (k == 0) {
        return visit(static_cast<const Element*>(values.data()));
    }
    while (true) {
        if (!visit(static_cast<const Element*>(values.data()))) {
            return false;
        }
        int i = k - 1;
        while (i >= 0 && ++values[i] == n) {
            values[i] = 0;
            --i;
        }
        if (i < 0) {
            return true;
        }
    }
}

/// Throws Error when n^k assignments would exceed the evaluation budget.
void check_assignment_budget(int n, int k);

} // namespace magma_lab::detail
