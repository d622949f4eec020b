#include <benchmark/benchmark.h>

#include "a1kit/a1algebra.hpp"
#include "a1kit/module.hpp"
#include "a1kit/registry.hpp"

namespace {

void BM_build_a1(benchmark::State& state) {
    for (auto _ : state) {
        a1kit::A1Algebra alg = a1kit::A1Algebra::build();
        benchmark::DoNotOptimize(alg.basis().size());
    }
}
BENCHMARK(BM_build_a1);

void BM_cyclic_quotient(benchmark::State& state) {
    std::vector<a1kit::A1Element> relators = {a1kit::A1Element::parse("Sq1"),
                                              a1kit::A1Element::parse("Sq2Sq3")};
    for (auto _ : state) {
        a1kit::A1Module m = a1kit::cyclic_quotient(relators);
        benchmark::DoNotOptimize(m.total_dim());
    }
}
BENCHMARK(BM_cyclic_quotient);

void BM_verify_registry(benchmark::State& state) {
    for (auto _ : state) {
        a1kit::RegistryReport report = a1kit::verify_all();
        benchmark::DoNotOptimize(report.exact_count);
    }
}
BENCHMARK(BM_verify_registry);

}  // namespace
