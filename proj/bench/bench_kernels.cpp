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

// Serial reference vs OpenMP drivers. The Arg is the worker count; 0 runs
// the serial reference.

#include <benchmark/benchmark.h>

#include "magma_lab/enumerate.hpp"
#include "magma_lab/properties.hpp"
#include "magma_lab/search.hpp"
#include "magma_lab/theorems.hpp"

using namespace magma_lab;

namespace {

EnumSpec latin(int order) {
    EnumSpec spec;
    spec.order = order;
    spec.mode = EnumMode::latin_squares;
    return spec;
}

EnumSpec associative4() {
    EnumSpec spec;
    spec.order = 4;
    spec.constraints = {LawTag::A};
    return spec;
}

void count_kernel(benchmark::State& state, const EnumSpec& spec) {
    const int workers = static_cast<int>(state.range(0));
    std::uint64_t n = 0;
    for (auto _ : state) {
        n = workers == 0 ? serial::count(spec) : count(spec, ExecPolicy{workers});
        benchmark::DoNotOptimize(n);
    }
    state.counters["tables"] = static_cast<double>(n);
}

void BM_CountLatin5(benchmark::State& state) { count_kernel(state, latin(5)); }
void BM_CountAssociative4(benchmark::State& state) { count_kernel(state, associative4()); }

// Last Latin square of order 5 in enumeration order: the whole tree is walked.
void BM_FindFirstLatin5(benchmark::State& state) {
    const int workers = static_cast<int>(state.range(0));
    const MagmaPredicate last = [](const Magma& m) {
        return m.op(0, 0) == 4 && m.op(0, 1) == 3 && m.op(1, 0) == 3 && m.op(4, 4) == 4;
    };
    for (auto _ : state) {
        const auto r = workers == 0 ? serial::find_first(latin(5), last)
                                    : find_first(latin(5), last, ExecPolicy{workers});
        benchmark::DoNotOptimize(r.examined);
    }
}

void BM_VerifyT11(benchmark::State& state) {
    const ExecPolicy policy{static_cast<int>(state.range(0))};
    for (auto _ : state) {
        const auto r = verify_theorem("T11", 5, policy);
        benchmark::DoNotOptimize(r.structures_examined);
    }
}

} // namespace

BENCHMARK(BM_CountLatin5)->Arg(0)->Arg(1)->Arg(2)->Arg(4)->Arg(8)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_CountAssociative4)->Arg(0)->Arg(2)->Arg(8)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_FindFirstLatin5)->Arg(0)->Arg(2)->Arg(8)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_VerifyT11)->Arg(1)->Arg(2)->Arg(8)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
