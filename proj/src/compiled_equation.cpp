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

#include "compiled_equation.hpp"

#include <algorithm>
#include <cmath>

#include <fmt/format.h>

namespace magma_lab::detail {

namespace {
constexpr double kAssignmentBudget = 1e8;
}

void check_assignment_budget(int n, int k) {
    if (std::pow(static_cast<double>(n), k) > kAssignmentBudget) {
        throw Error(fmt::format(
            "{} variables over {} elements exceeds the assignment budget", k, n));
    }
}

CompiledEquation::CompiledEquation(const Equation& eq)
    : variables_(eq.variables()) {
    lhs_ = compile(eq.lhs);
    rhs_ = compile(eq.rhs);
}

CompiledEquation::Program CompiledEquation::compile(const Term& t) {
    Program prog;
    emit(t, prog, 1);
    return prog;
}

void CompiledEquation::emit(const Term& t, Program& prog, int depth) {
    if (depth > kMaxStack) {
        throw Error("term nesting too deep to evaluate");
    }
    if (t.is_var()) {
        const auto it = std::find(variables_.begin(), variables_.end(), t.name());
        prog.push_back(static_cast<std::int8_t>(it - variables_.begin()));
        return;
    }
    emit(t.left(), prog, depth);
    emit(t.right(), prog, depth + 1);
    prog.push_back(kSum);
}

bool CompiledEquation::eval_partial_side(const Program& prog, const Element* table,
                                         int n, const Element* values,
                                         Element& out) {
    std::array<Element, kMaxStack> stack{};
    int top = 0;
    for (const auto code : prog) {
        if (code >= 0) {
            stack[top++] = values[code];
        } else {
            const Element r = stack[--top];
            const int idx = stack[top - 1] * n + r;
            const Element v = table[idx];
            if (v == kUnset) {
                return false;
            }
            stack[top - 1] = v;
        }
    }
    out = stack[0];
    return true;
}

CompiledEquation::Partial CompiledEquation::eval_partial(const Element* table, int n,
                                                         const Element* values) const {
    Element l = 0;
    Element r = 0;
    if (!eval_partial_side(lhs_, table, n, values, l) ||
        !eval_partial_side(rhs_, table, n, values, r)) {
        return Partial::unknown;
    }
    return l == r ? Partial::equal : Partial::differ;
}

} // namespace magma_lab::detail
