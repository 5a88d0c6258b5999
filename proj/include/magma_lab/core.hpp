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
 * Finite magmas stored as flat row-major Cayley tables, the Cayley text
 * format, and canonical relabeling for isomorphism tests.
 */

#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace magma_lab {

/// An element of a magma of order n is a dense index in 0..n-1.
using Element = std::uint8_t;

/// Largest order a Magma can hold (elements must fit in Element).
inline constexpr int kMaxOrder = 255;

/// Default largest order canonical_form accepts (n! relabelings).
inline constexpr int kDefaultCanonicalCap = 7;

/// Base class of every error the library throws.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A finite set {0..n-1} with a total binary operation.
///
/// Immutable once built; entry (a, b) is the value of a + b.
class Magma {
public:
    /// Validates dimensions and closure. Throws Error on failure.
    static Magma from_rows(int order, const std::vector<std::vector<int>>& rows);

    /// Validates a flat row-major table of length order².
    static Magma from_table(int order, std::vector<Element> table);

    /// The one-element magma.
    Magma() : order_(1), table_(1, 0) {}

    int order() const noexcept { return order_; }

    Element op(Element a, Element b) const noexcept {
        return table_[static_cast<std::size_t>(a) * order_ + b];
    }

    std::span<const Element> table() const noexcept { return table_; }

    std::span<const Element> row(Element a) const noexcept {
        return std::span<const Element>(table_).subspan(
            static_cast<std::size_t>(a) * order_, order_);
    }

    std::vector<std::vector<int>> rows() const;

    /// Orders by order first, then lexicographically by flattened table.
    auto operator<=>(const Magma&) const = default;
    bool operator==(const Magma&) const = default;

private:
    Magma(int order, std::vector<Element> table)
        : order_(order), table_(std::move(table)) {}

    int order_;
    std::vector<Element> table_;
};

/// Parses the Cayley text format: order on the first line, then `order`
/// rows of space-separated entries. Lines starting with `#` and blank lines
/// are skipped. Errors carry the 1-based line number.
Magma parse_table(std::string_view text);

/// Inverse of parse_table; always ends with a newline.
std::string format_table(const Magma& m);

/// Returns σ(m): the table t with t[σ(a)][σ(b)] = σ(m[a][b]).
/// `perm` must be a permutation of 0..n-1.
Magma relabel(const Magma& m, std::span<const Element> perm);

/// The lexicographically least table among all relabelings of m.
/// Throws Error if m.order() exceeds `cap`.
Magma canonical_form(const Magma& m, int cap = kDefaultCanonicalCap);

/// True iff m is its own canonical form. Same cap as canonical_form.
bool is_canonical(const Magma& m, int cap = kDefaultCanonicalCap);

/// Magmas of different order are never isomorphic; no error is raised.
bool is_isomorphic(const Magma& lhs, const Magma& rhs,
                   int cap = kDefaultCanonicalCap);

} // namespace magma_lab
