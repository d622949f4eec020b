#include <benchmark/benchmark.h>

#include "a1kit/resolution.hpp"

namespace {

a1kit::A1Module trivial_module() {
    return a1kit::cyclic_quotient(
        {a1kit::A1Element::parse("Sq1"), a1kit::A1Element::parse("Sq2")}, "F2");
}

void BM_minimal_resolution_f2(benchmark::State& state) {
    a1kit::A1Module m = trivial_module();
    int max_t = static_cast<int>(state.range(0));
    for (auto _ : state) {
        a1kit::Resolution r = a1kit::minimal_resolution(m, max_t - 6, max_t);
        benchmark::DoNotOptimize(r.stages.size());
    }
}
BENCHMARK(BM_minimal_resolution_f2)->Arg(16)->Arg(24)->Arg(32)->Unit(benchmark::kMillisecond);

void BM_ext_chart_f2(benchmark::State& state) {
    a1kit::A1Module m = trivial_module();
    a1kit::Resolution r = a1kit::minimal_resolution(m, 18, 24);
    for (auto _ : state) {
        a1kit::ExtChart chart = a1kit::ext_chart(r);
        benchmark::DoNotOptimize(chart.counts.size());
    }
}
BENCHMARK(BM_ext_chart_f2);

}  // namespace
