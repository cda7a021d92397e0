// Microbenchmarks for the coefficient kernels and the two plethysm
// evaluation strategies. Cold variants rebuild the memo tables on every
// iteration; warm variants measure the table-hit path.

#include <benchmark/benchmark.h>

#include "symfun/character.hpp"
#include "symfun/plethysm.hpp"
#include "symfun/series.hpp"
#include "symfun/vertex.hpp"

using namespace symfun;

namespace {

void BM_character_table_cold(benchmark::State& state) {
    int n = static_cast<int>(state.range(0));
    auto parts = partitions_of(n);
    for (auto _ : state) {
        ScopedMemo cold;
        long long acc = 0;
        for (const auto& lam : parts)
            for (const auto& rho : parts)
                acc += chi(lam, rho);
        benchmark::DoNotOptimize(acc);
    }
}
BENCHMARK(BM_character_table_cold)->Arg(6)->Arg(8)->Arg(10);

void BM_lr_product_cold(benchmark::State& state) {
    Partition mu{3, 2, 1};
    for (auto _ : state) {
        ScopedMemo cold;
        benchmark::DoNotOptimize(outer_mul(SymFn::s(mu), SymFn::s(mu)));
    }
}
BENCHMARK(BM_lr_product_cold);

void BM_lr_product_warm(benchmark::State& state) {
    Partition mu{3, 2, 1};
    outer_mul(SymFn::s(mu), SymFn::s(mu));
    for (auto _ : state)
        benchmark::DoNotOptimize(outer_mul(SymFn::s(mu), SymFn::s(mu)));
}
BENCHMARK(BM_lr_product_warm);

void BM_kronecker_cold(benchmark::State& state) {
    Partition mu{3, 2, 1};
    for (auto _ : state) {
        ScopedMemo cold;
        benchmark::DoNotOptimize(inner_mul(SymFn::s(mu), SymFn::s(mu)));
    }
}
BENCHMARK(BM_kronecker_cold);

void BM_pleth_basis_cold(benchmark::State& state) {
    for (auto _ : state) {
        ScopedMemo cold;
        benchmark::DoNotOptimize(pleth_basis(Partition{3}, Partition{2, 1}));
    }
}
BENCHMARK(BM_pleth_basis_cold);

// the two evaluation strategies for s_(3)[n s_(1,1)] at growing n
void BM_pleth_direct(benchmark::State& state) {
    long long n = state.range(0);
    for (auto _ : state) {
        ScopedMemo cold;
        benchmark::DoNotOptimize(alpha_pleth(Partition{3}, Rational(n), Partition{1, 1}));
    }
}
BENCHMARK(BM_pleth_direct)->Arg(1)->Arg(10)->Arg(100)->Arg(1000);

void BM_pleth_iterated(benchmark::State& state) {
    long long n = state.range(0);
    for (auto _ : state) {
        ScopedMemo cold;
        benchmark::DoNotOptimize(
            iterated_pleth_oracle(Partition{3}, static_cast<int>(n), Partition{1, 1}));
    }
}
BENCHMARK(BM_pleth_iterated)->Arg(1)->Arg(10)->Arg(100)->Arg(1000);

void BM_h_char(benchmark::State& state) {
    for (auto _ : state) {
        ScopedMemo cold;
        benchmark::DoNotOptimize(h_char(Partition{3, 2, 1}, Partition{2, 1}));
    }
}
BENCHMARK(BM_h_char);

void BM_vertex_char(benchmark::State& state) {
    for (auto _ : state) {
        ScopedMemo cold;
        benchmark::DoNotOptimize(vertex_char(Partition{3, 2, 1}, Partition{2, 1}));
    }
}
BENCHMARK(BM_vertex_char);

} // namespace

BENCHMARK_MAIN();
