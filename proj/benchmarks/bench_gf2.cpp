#include <benchmark/benchmark.h>

#include <random>

#include "a1kit/gf2.hpp"

namespace {

a1kit::GF2Matrix random_matrix(std::size_t rows, std::size_t cols, std::uint32_t seed) {
    std::mt19937 rng(seed);
    std::bernoulli_distribution bit(0.5);
    a1kit::GF2Matrix m(rows, cols);
    for (std::size_t r = 0; r < rows; ++r)
        for (std::size_t c = 0; c < cols; ++c)
            m.set(r, c, bit(rng));
    return m;
}

void BM_rref(benchmark::State& state) {
    std::size_t n = static_cast<std::size_t>(state.range(0));
    a1kit::GF2Matrix m = random_matrix(n, n, 7);
    for (auto _ : state) {
        auto rr = a1kit::rref(m);
        benchmark::DoNotOptimize(rr.pivots.data());
    }
    state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_rref)->Arg(64)->Arg(256)->Arg(512)->Complexity();

void BM_kernel_basis(benchmark::State& state) {
    std::size_t n = static_cast<std::size_t>(state.range(0));
    a1kit::GF2Matrix m = random_matrix(n / 2, n, 11);
    for (auto _ : state) {
        a1kit::GF2Matrix k = a1kit::kernel_basis(m);
        benchmark::DoNotOptimize(k.rows());
    }
}
BENCHMARK(BM_kernel_basis)->Arg(64)->Arg(256)->Arg(512);

void BM_matrix_product(benchmark::State& state) {
    std::size_t n = static_cast<std::size_t>(state.range(0));
    a1kit::GF2Matrix a = random_matrix(n, n, 13);
    a1kit::GF2Matrix b = random_matrix(n, n, 17);
    for (auto _ : state) {
        a1kit::GF2Matrix c = a * b;
        benchmark::DoNotOptimize(c.rows());
    }
}
BENCHMARK(BM_matrix_product)->Arg(64)->Arg(256);

}  // namespace
