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

#include "magma_lab/core.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>

#include <fmt/format.h>

namespace magma_lab {

namespace {

void check_order(int order) {
    if (order < 1 || order > kMaxOrder) {
        throw Error(fmt::format("order {} outside 1..{}", order, kMaxOrder));
    }
}

std::string_view trim(std::string_view s) {
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string_view::npos) {
        return {};
    }
    const auto last = s.find_last_not_of(" \t\r");
    return s.substr(first, last - first + 1);
}

std::vector<std::string_view> split_ws(std::string_view s) {
    std::vector<std::string_view> out;
    std::size_t i = 0;
    while (i < s.size()) {
        while (i < s.size() && (s[i] == ' ' || s[i] == '\t')) {
            ++i;
        }
        const std::size_t start = i;
        while (i < s.size() && s[i] != ' ' && s[i] != '\t') {
            ++i;
        }
        if (i > start) {
            out.push_back(s.substr(start, i - start));
        }
    }
    return out;
}

bool parse_int(std::string_view token, int& value) {
    const auto* end = token.data() + token.size();
    auto [ptr, ec] = std::from_chars(token.data(), end, value);
    return ec == std::errc() && ptr == end;
}

// Relabeled entry at flat position p under inverse permutation `inv` and
// forward permutation `perm`.
inline Element relabeled_at(const Magma& m, std::span<const Element> perm,
                            std::span<const Element> inv, int p) {
    const int n = m.order();
    return perm[m.op(inv[p / n], inv[p % n])];
}

// Calls `visit(perm, inv)` for every permutation of 0..n-1.
template <class Visit>
void for_each_permutation(int n, Visit&& visit) {
    std::vector<Element> perm(n);
    std::vector<Element> inv(n);
    std::iota(perm.begin(), perm.end(), Element{0});
    do {
        for (int i = 0; i < n; ++i) {
            inv[perm[i]] = static_cast<Element>(i);
        }
        if (!visit(std::span<const Element>(perm), std::span<const Element>(inv))) {
            return;
        }
    } while (std::next_permutation(perm.begin(), perm.end()));
}

void check_cap(const Magma& m, int cap) {
    if (m.order() > cap) {
        throw Error(fmt::format("order {} above canonicalization cap {}",
                                m.order(), cap));
    }
}

} // namespace

Magma Magma::from_rows(int order, const std::vector<std::vector<int>>& rows) {
    check_order(order);
    if (rows.size() != static_cast<std::size_t>(order)) {
        throw Error(fmt::format("expected {} rows, found {}", order, rows.size()));
    }
    std::vector<Element> table;
    table.reserve(static_cast<std::size_t>(order) * order);
    for (int r = 0; r < order; ++r) {
        if (rows[r].size() != static_cast<std::size_t>(order)) {
            throw Error(fmt::format("row {}: expected {} entries, found {}", r,
                                    order, rows[r].size()));
        }
        for (int c = 0; c < order; ++c) {
            const int v = rows[r][c];
            if (v < 0 || v >= order) {
                throw Error(
                    fmt::format("entry {} out of range at ({},{})", v, r, c));
            }
            table.push_back(static_cast<Element>(v));
        }
    }
    return Magma(order, std::move(table));
}

Magma Magma::from_table(int order, std::vector<Element> table) {
    check_order(order);
    if (table.size() != static_cast<std::size_t>(order) * order) {
        throw Error(fmt::format("table length {} is not {}²", table.size(), order));
    }
    for (std::size_t i = 0; i < table.size(); ++i) {
        if (table[i] >= order) {
            throw Error(fmt::format("entry {} out of range at ({},{})",
                                    int{table[i]}, i / order, i % order));
        }
    }
    return Magma(order, std::move(table));
}

std::vector<std::vector<int>> Magma::rows() const {
    std::vector<std::vector<int>> out(order_);
    for (int a = 0; a < order_; ++a) {
        const auto r = row(static_cast<Element>(a));
        out[a].assign(r.begin(), r.end());
    }
    return out;
}

Magma parse_table(std::string_view text) {
    int order = 0;
    int header_line = 0;
    std::vector<std::vector<int>> rows;
    int line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        auto nl = text.find('\n', pos);
        if (nl == std::string_view::npos) {
            nl = text.size();
        }
        const std::string_view line = trim(text.substr(pos, nl - pos));
        pos = nl + 1;
        ++line_no;
        if (line.empty() || line.front() == '#') {
            continue;
        }
        const auto tokens = split_ws(line);
        if (header_line == 0) {
            if (tokens.size() != 1 || !parse_int(tokens[0], order) || order < 1 ||
                order > kMaxOrder) {
                throw Error(fmt::format("line {}: malformed header '{}'", line_no,
                                        line));
            }
            header_line = line_no;
            continue;
        }
        if (rows.size() == static_cast<std::size_t>(order)) {
            throw Error(fmt::format("expected {} rows, found {}", order,
                                    rows.size() + 1));
        }
        std::vector<int> row;
        for (const auto tok : tokens) {
            int v = 0;
            if (!parse_int(tok, v)) {
                throw Error(
                    fmt::format("line {}: non-integer token '{}'", line_no, tok));
            }
            if (v < 0 || v >= order) {
                throw Error(fmt::format("line {}: entry {} out of range at ({},{})",
                                        line_no, v, rows.size(), row.size()));
            }
            row.push_back(v);
        }
        if (row.size() != static_cast<std::size_t>(order)) {
            throw Error(fmt::format("line {}: expected {} entries, found {}",
                                    line_no, order, row.size()));
        }
        rows.push_back(std::move(row));
    }
    if (header_line == 0) {
        throw Error("line 1: malformed header: missing order");
    }
    if (rows.size() != static_cast<std::size_t>(order)) {
        throw Error(fmt::format("expected {} rows, found {}", order, rows.size()));
    }
    return Magma::from_rows(order, rows);
}

std::string format_table(const Magma& m) {
    std::string out = fmt::format("{}\n", m.order());
    for (int a = 0; a < m.order(); ++a) {
        const auto r = m.row(static_cast<Element>(a));
        for (int b = 0; b < m.order(); ++b) {
            if (b > 0) {
                out += ' ';
            }
            out += std::to_string(int{r[b]});
        }
        out += '\n';
    }
    return out;
}

Magma relabel(const Magma& m, std::span<const Element> perm) {
    const int n = m.order();
    if (perm.size() != static_cast<std::size_t>(n)) {
        throw Error("permutation size does not match order");
    }
    std::vector<Element> inv(n, Element{255});
    for (int i = 0; i < n; ++i) {
        if (perm[i] >= n || inv[perm[i]] != 255) {
            throw Error("not a permutation");
        }
        inv[perm[i]] = static_cast<Element>(i);
    }
    std::vector<Element> table(static_cast<std::size_t>(n) * n);
    for (int p = 0; p < n * n; ++p) {
        table[p] = relabeled_at(m, perm, inv, p);
    }
    return Magma::from_table(n, std::move(table));
}

Magma canonical_form(const Magma& m, int cap) {
    check_cap(m, cap);
    const int n = m.order();
    const int cells = n * n;
    std::vector<Element> best(m.table().begin(), m.table().end());
    for_each_permutation(n, [&](auto perm, auto inv) {
        int p = 0;
        for (; p < cells; ++p) {
            const Element v = relabeled_at(m, perm, inv, p);
            if (v != best[p]) {
                if (v > best[p]) {
                    return true;
                }
                best[p] = v;
                ++p;
                break;
            }
        }
        for (; p < cells; ++p) {
            best[p] = relabeled_at(m, perm, inv, p);
        }
        return true;
    });
    return Magma::from_table(n, std::move(best));
}

bool is_canonical(const Magma& m, int cap) {
    check_cap(m, cap);
    const int cells = m.order() * m.order();
    const auto table = m.table();
    bool canonical = true;
    for_each_permutation(m.order(), [&](auto perm, auto inv) {
        for (int p = 0; p < cells; ++p) {
            const Element v = relabeled_at(m, perm, inv, p);
            if (v != table[p]) {
                if (v < table[p]) {
                    canonical = false;
                }
                break;
            }
        }
        return canonical;
    });
    return canonical;
}

bool is_isomorphic(const Magma& lhs, const Magma& rhs, int cap) {
    if (lhs.order() != rhs.order()) {
        return false;
    }
    return canonical_form(lhs, cap) == canonical_form(rhs, cap);
}

} // namespace magma_lab
