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

#include "magma_lab/enumerate.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <charconv>
#include <cstdlib>
#include <exception>
#include <limits>
#include <mutex>
#include <span>
#include <string_view>

#include <fmt/format.h>
#include <omp.h>

#include "compiled_equation.hpp"
#include "magma_lab/properties.hpp"

namespace magma_lab {

namespace {

using detail::CompiledEquation;
using detail::kUnset;

constexpr int kLatinCap = 6;
constexpr int kMagmaCap = 3;
constexpr int kPrunedMagmaCap = 4;

bool forces_latin(LawTag tag) {
    switch (tag) {
    case LawTag::H:
    case LawTag::CA:
    case LawTag::LOOP:
    case LawTag::GROUP:
    case LawTag::ABELIAN:
        return true;
    default:
        return false;
    }
}

std::optional<int> env_cap() {
    const char* raw = std::getenv("MAGMA_LAB_MAX_ORDER");
    if (raw == nullptr || *raw == '\0') {
        return std::nullopt;
    }
    const std::string_view text(raw);
    int v = 0;
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
    if (ec != std::errc() || ptr != text.data() + text.size() || v < 1) {
        throw Error(fmt::format("MAGMA_LAB_MAX_ORDER must be a positive integer, got '{}'",
                                text));
    }
    return v;
}

// Depth-first filler for one EnumSpec. Not thread-safe; one per worker.
class TableWalker {
public:
    explicit TableWalker(const EnumSpec& spec)
        : n_(spec.order),
          cells_count_(spec.order * spec.order),
          cells_(static_cast<std::size_t>(cells_count_), kUnset),
          row_mask_(spec.order, 0),
          col_mask_(spec.order, 0),
          row_hits_(static_cast<std::size_t>(cells_count_), 0),
          col_hits_(static_cast<std::size_t>(cells_count_), 0),
          up_to_iso_(spec.up_to_iso),
          not_latin_(spec.require_not_latin) {
        full_mask_ = n_ >= 32 ? ~0U : (1U << n_) - 1;
        latin_ = spec.mode == EnumMode::latin_squares;
        for (const auto& law : spec.constraints) {
            if (law.is_equational()) {
                equations_.emplace_back(*law.equation());
                detail::check_assignment_budget(n_, equations_.back().arity());
            } else {
                latin_ = latin_ || forces_latin(law.tag());
                if (law.tag() != LawTag::H && law.tag() != LawTag::CA) {
                    leaf_laws_.push_back(law);
                }
            }
        }
    }

    int cells() const noexcept { return cells_count_; }

    /// Replaces the current state with a prefix produced by walk().
    void load(std::span<const Element> prefix) {
        while (depth_ > 0) {
            unplace(--depth_);
        }
        for (const auto v : prefix) {
            place(depth_++, v);
        }
    }

    /// Visits every completion of the current state down to `stop` cells;
    /// complete tables are visited only if they pass the leaf filters.
    /// `visit(std::span<const Element>)` returns false to stop; walk then
    /// returns false.
    template <class Visit>
    bool walk(int stop, Visit&& visit) {
        return descend(depth_, stop, visit);
    }

    Magma magma() const { return Magma::from_table(n_, cells_); }

private:
    template <class Visit>
    bool descend(int k, int stop, Visit& visit) {
        if (k == stop) {
            if (k == cells_count_ && !leaf_ok()) {
                return true;
            }
            return visit(std::span<const Element>(cells_.data(), k));
        }
        const int r = k / n_;
        const int c = k % n_;
        std::uint32_t avail = full_mask_;
        if (latin_) {
            avail &= ~(row_mask_[r] | col_mask_[c]);
        }
        while (avail != 0) {
            const int v = std::countr_zero(avail);
            avail &= avail - 1;
            place(k, static_cast<Element>(v));
            const bool ok = equations_ok();
            const bool go_on = !ok || descend(k + 1, stop, visit);
            unplace(k);
            if (!go_on) {
                return false;
            }
        }
        return true;
    }

    // Latin mode keeps row/column masks (entries are distinct, so a bit is
    // owned by one cell); ¬H mode counts repeated entries instead.
    void place(int k, Element v) {
        const int r = k / n_;
        const int c = k % n_;
        cells_[k] = v;
        if (latin_) {
            row_mask_[r] |= 1U << v;
            col_mask_[c] |= 1U << v;
        } else if (not_latin_) {
            repeats_ += ++row_hits_[r * n_ + v] == 2;
            repeats_ += ++col_hits_[c * n_ + v] == 2;
        }
    }

    void unplace(int k) {
        const int r = k / n_;
        const int c = k % n_;
        const Element v = cells_[k];
        if (latin_) {
            row_mask_[r] &= ~(1U << v);
            col_mask_[c] &= ~(1U << v);
        } else if (not_latin_) {
            repeats_ -= row_hits_[r * n_ + v]-- == 2;
            repeats_ -= col_hits_[c * n_ + v]-- == 2;
        }
        cells_[k] = kUnset;
    }

    bool equations_ok() const {
        const Element* table = cells_.data();
        for (const auto& eq : equations_) {
            const bool ok = detail::for_each_assignment(n_, eq.arity(), [&](const Element* values) {
                return eq.eval_partial(table, n_, values) != CompiledEquation::Partial::differ;
            });
            if (!ok) {
                return false;
            }
        }
        return true;
    }

    bool leaf_ok() const {
        if (not_latin_ && repeats_ == 0) {
            return false;
        }
        if (leaf_laws_.empty() && !up_to_iso_) {
            return true;
        }
        const Magma m = magma();
        return satisfies_all(m, leaf_laws_) && (!up_to_iso_ || is_canonical(m));
    }

    int n_;
    int cells_count_;
    std::vector<Element> cells_;
    std::vector<std::uint32_t> row_mask_;
    std::vector<std::uint32_t> col_mask_;
    std::vector<std::uint16_t> row_hits_;
    std::vector<std::uint16_t> col_hits_;
    std::uint32_t full_mask_;
    int repeats_ = 0;
    int depth_ = 0;
    bool latin_ = false;
    bool up_to_iso_;
    bool not_latin_;
    std::vector<CompiledEquation> equations_;
    std::vector<LawId> leaf_laws_;
};

// Subtrees are the viable fillings of the first row (the whole table at
// order 1), plus one more cell from order 6 up.
int split_depth(int order) {
    const int cells = order * order;
    return std::min(cells, order + (order >= 6 ? 1 : 0));
}

using Prefix = std::vector<Element>;

std::vector<Prefix> prefixes(const EnumSpec& spec) {
    TableWalker walker(spec);
    std::vector<Prefix> out;
    walker.walk(split_depth(spec.order), [&](std::span<const Element> cells) {
        out.emplace_back(cells.begin(), cells.end());
        return true;
    });
    return out;
}

int workers_of(const ExecPolicy& policy) { return std::max(1, policy.workers); }

// Captures the first exception thrown inside an OpenMP region.
class ExceptionSlot {
public:
    template <class F>
    void run(F&& f) {
        try {
            f();
        } catch (...) {
            const std::lock_guard lock(mutex_);
            if (!error_) {
                error_ = std::current_exception();
            }
        }
    }
    void rethrow() const {
        if (error_) {
            std::rethrow_exception(error_);
        }
    }

private:
    std::mutex mutex_;
    std::exception_ptr error_;
};

std::size_t chunk_size(int workers) { return static_cast<std::size_t>(workers) * 8; }

} // namespace

int feasibility_cap(const EnumSpec& spec) {
    if (const auto cap = env_cap()) {
        return *cap;
    }
    bool latin = spec.mode == EnumMode::latin_squares;
    bool equational = false;
    for (const auto& law : spec.constraints) {
        latin = latin || forces_latin(law.tag());
        equational = equational || law.is_equational();
    }
    if (latin) {
        return kLatinCap;
    }
    return equational ? kPrunedMagmaCap : kMagmaCap;
}

void check_feasible(const EnumSpec& spec) {
    const int cap = std::min(feasibility_cap(spec), 31);
    if (spec.order < 1 || spec.order > cap) {
        throw InfeasibleError(fmt::format("order {} outside the feasible range 1..{}",
                                          spec.order, cap));
    }
    if (spec.up_to_iso && spec.order > kDefaultCanonicalCap) {
        throw InfeasibleError(fmt::format("isomorphism reduction needs order <= {}",
                                          kDefaultCanonicalCap));
    }
}

namespace serial {

void enumerate(const EnumSpec& spec, const MagmaSink& sink) {
    check_feasible(spec);
    TableWalker walker(spec);
    walker.walk(walker.cells(), [&](std::span<const Element>) {
        sink(walker.magma());
        return true;
    });
}

std::uint64_t count(const EnumSpec& spec) {
    check_feasible(spec);
    TableWalker walker(spec);
    std::uint64_t total = 0;
    walker.walk(walker.cells(), [&](std::span<const Element>) {
        ++total;
        return true;
    });
    return total;
}

FirstMatch find_first(const EnumSpec& spec, const MagmaPredicate& predicate) {
    check_feasible(spec);
    TableWalker walker(spec);
    FirstMatch result;
    walker.walk(walker.cells(), [&](std::span<const Element>) {
        ++result.examined;
        Magma m = walker.magma();
        if (predicate(m)) {
            result.found = std::move(m);
            return false;
        }
        return true;
    });
    return result;
}

} // namespace serial

void enumerate(const EnumSpec& spec, const MagmaSink& sink, const ExecPolicy& policy) {
    const int workers = workers_of(policy);
    if (workers == 1) {
        serial::enumerate(spec, sink);
        return;
    }
    check_feasible(spec);
    const auto roots = prefixes(spec);
    const auto step = chunk_size(workers);
    ExceptionSlot errors;
    for (std::size_t begin = 0; begin < roots.size(); begin += step) {
        const std::size_t end = std::min(roots.size(), begin + step);
        std::vector<std::vector<Magma>> buffers(end - begin);
#pragma omp parallel for schedule(dynamic, 1) num_threads(workers)
        for (std::size_t i = begin; i < end; ++i) {
            errors.run([&] {
                TableWalker walker(spec);
                walker.load(roots[i]);
                auto& buffer = buffers[i - begin];
                walker.walk(walker.cells(), [&](std::span<const Element>) {
                    buffer.push_back(walker.magma());
                    return true;
                });
            });
        }
        errors.rethrow();
        for (const auto& buffer : buffers) {
            for (const auto& m : buffer) {
                sink(m);
            }
        }
    }
}

std::vector<Magma> enumerate_all(const EnumSpec& spec, const ExecPolicy& policy) {
    std::vector<Magma> out;
    enumerate(spec, [&](const Magma& m) { out.push_back(m); }, policy);
    return out;
}

std::uint64_t count(const EnumSpec& spec, const ExecPolicy& policy) {
    const int workers = workers_of(policy);
    if (workers == 1) {
        return serial::count(spec);
    }
    check_feasible(spec);
    const auto roots = prefixes(spec);
    const auto n_roots = static_cast<std::int64_t>(roots.size());
    std::uint64_t total = 0;
    ExceptionSlot errors;
#pragma omp parallel for schedule(dynamic, 1) num_threads(workers) reduction(+ : total)
    for (std::int64_t i = 0; i < n_roots; ++i) {
        errors.run([&] {
            TableWalker walker(spec);
            walker.load(roots[i]);
            walker.walk(walker.cells(), [&](std::span<const Element>) {
                ++total;
                return true;
            });
        });
    }
    errors.rethrow();
    return total;
}

FirstMatch find_first(const EnumSpec& spec, const MagmaPredicate& predicate,
                      const ExecPolicy& policy) {
    const int workers = workers_of(policy);
    if (workers == 1) {
        return serial::find_first(spec, predicate);
    }
    check_feasible(spec);
    const auto roots = prefixes(spec);
    const auto step = chunk_size(workers);
    constexpr auto kNone = std::numeric_limits<std::size_t>::max();
    ExceptionSlot errors;
    FirstMatch total;
    for (std::size_t begin = 0; begin < roots.size(); begin += step) {
        const std::size_t end = std::min(roots.size(), begin + step);
        std::vector<FirstMatch> results(end - begin);
        // Lowest subtree index with a match; later subtrees abandon work.
        std::atomic<std::size_t> best{kNone};
#pragma omp parallel for schedule(dynamic, 1) num_threads(workers)
        for (std::size_t i = begin; i < end; ++i) {
            errors.run([&] {
                if (best.load() < i) {
                    return;
                }
                TableWalker walker(spec);
                walker.load(roots[i]);
                auto& result = results[i - begin];
                walker.walk(walker.cells(), [&](std::span<const Element>) {
                    if (best.load() < i) {
                        return false;
                    }
                    ++result.examined;
                    Magma m = walker.magma();
                    if (!predicate(m)) {
                        return true;
                    }
                    result.found = std::move(m);
                    std::size_t seen = best.load();
                    while (i < seen && !best.compare_exchange_weak(seen, i)) {
                    }
                    return false;
                });
            });
        }
        errors.rethrow();
        // Subtrees before the winner ran to completion, so their counts are
        // exact.
        for (auto& result : results) {
            total.examined += result.examined;
            if (result.found) {
                total.found = std::move(result.found);
                return total;
            }
        }
    }
    return total;
}

} // namespace magma_lab
