#include <benchmark/benchmark.h>

#include "metakzb/assoc.hpp"
#include "metakzb/kzbmetab.hpp"
#include "metakzb/metab.hpp"
#include "metakzb/modular.hpp"
#include "metakzb/ncseries.hpp"

namespace {

using namespace metakzb;

void BM_series_mul(benchmark::State& state) {
    int N = static_cast<int>(state.range(0));
    NcSeries x = exp_series(iota(Gen::x0, N));
    NcSeries y = exp_series(iota(Gen::x1, N));
    for (auto _ : state) {
        NcSeries z = mul(x, y);
        benchmark::DoNotOptimize(z);
    }
}
BENCHMARK(BM_series_mul)->Arg(8)->Arg(10);

void BM_exp_series(benchmark::State& state) {
    int N = static_cast<int>(state.range(0));
    NcSeries x = iota(Gen::x0, N);
    for (auto _ : state) {
        NcSeries z = exp_series(x);
        benchmark::DoNotOptimize(z);
    }
}
BENCHMARK(BM_exp_series)->Arg(8)->Arg(10)->Arg(12);

void BM_project(benchmark::State& state) {
    int N = static_cast<int>(state.range(0));
    NcSeries x = phi_depth1(N).series;
    for (auto _ : state) {
        MetabElem e = project(x);
        benchmark::DoNotOptimize(e);
    }
}
BENCHMARK(BM_project)->Arg(8)->Arg(10)->Arg(12);

void BM_bracket_metab(benchmark::State& state) {
    int N = static_cast<int>(state.range(0));
    MetabElem x = a_inf_closed(N);
    MetabElem y = b_inf_closed(N);
    for (auto _ : state) {
        MetabElem z = bracket_metab(x, y);
        benchmark::DoNotOptimize(z);
    }
}
BENCHMARK(BM_bracket_metab)->Arg(8)->Arg(12);

void BM_a_inf_free(benchmark::State& state) {
    int N = static_cast<int>(state.range(0));
    for (auto _ : state) {
        MetabElem e = a_inf_free(N);
        benchmark::DoNotOptimize(e);
    }
}
BENCHMARK(BM_a_inf_free)->Arg(6)->Arg(8)->Unit(benchmark::kMillisecond);

void BM_apply_g(benchmark::State& state) {
    int N = static_cast<int>(state.range(0));
    GOperator g = build_g(N);
    MetabElem x = a_inf_closed(N);
    for (auto _ : state) {
        MetabElem e = apply_g(g, x);
        benchmark::DoNotOptimize(e);
    }
}
BENCHMARK(BM_apply_g)->Arg(8)->Arg(12);

void BM_eichler_table(benchmark::State& state) {
    NumContext ctx = NumContext::make(Complex(Real("0.3"), Real("1.2")));
    for (auto _ : state) {
        EiTable t = make_ei_table(4, 8, ctx);
        benchmark::DoNotOptimize(t);
    }
}
BENCHMARK(BM_eichler_table)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
