#include <benchmark/benchmark.h>

#include "genbound/invariants.hpp"
#include "genbound/permutation.hpp"
#include "genbound/primes.hpp"
#include "genbound/sym_delta.hpp"

namespace {

using namespace genbound;

void bm_sieve(benchmark::State& state) {
    const uint64_t limit = static_cast<uint64_t>(state.range(0));
    for (auto _ : state) {
        auto sieve = primes::build_sieve(limit);
        benchmark::DoNotOptimize(sieve.prime_list.size());
    }
}
BENCHMARK(bm_sieve)->Arg(1'000'000)->Arg(10'000'000);

void bm_delta_sweep(benchmark::State& state) {
    const uint64_t n_max = static_cast<uint64_t>(state.range(0));
    for (auto _ : state) {
        auto deltas = symdelta::delta_sym_range(n_max);
        benchmark::DoNotOptimize(deltas.back());
    }
}
BENCHMARK(bm_delta_sweep)->Arg(100'000)->Arg(1'000'000);

perm::PermGroup sym_n(uint32_t n) {
    std::vector<perm::Permutation> gens;
    std::vector<perm::Point> img(n);
    for (uint32_t i = 0; i < n; ++i) img[i] = static_cast<perm::Point>(i);
    std::swap(img[0], img[1]);
    gens.emplace_back(img);
    for (uint32_t i = 0; i < n; ++i) img[i] = static_cast<perm::Point>((i + 1) % n);
    gens.emplace_back(img);
    return perm::PermGroup::closure(n, std::move(gens), {});
}

void bm_closure_s6(benchmark::State& state) {
    for (auto _ : state) {
        auto g = sym_n(6);
        benchmark::DoNotOptimize(g.order());
    }
}
BENCHMARK(bm_closure_s6);

void bm_lattice_s4(benchmark::State& state) {
    auto g = sym_n(4);
    perm::GroupTable t(g);
    for (auto _ : state) {
        auto lat = perm::build_lattice(t);
        benchmark::DoNotOptimize(lat.subgroups.size());
    }
}
BENCHMARK(bm_lattice_s4);

void bm_max_independent_s4(benchmark::State& state) {
    auto g = sym_n(4);
    for (auto _ : state) {
        auto mi = inv::max_independent_set(g);
        benchmark::DoNotOptimize(mi.m);
    }
}
BENCHMARK(bm_max_independent_s4);

} // namespace

BENCHMARK_MAIN();
