// Parallel kernels against their serial references on generic matrices.

#include <benchmark/benchmark.h>

#include "ncrep/kernels.hpp"
#include "ncrep/rep.hpp"

using namespace ncrep;

namespace
{

RepSetup two_loops(int n)
{
    const auto q = make_quiver(Quiver({"v"}, {{"x", 0, 0}, {"y", 0, 0}}));
    return rep_setup(q, DimensionVector({n}));
}

template <bool Parallel>
void poly_product(benchmark::State &state)
{
    const auto s = two_loops(static_cast<int>(state.range(0)));
    const auto x = arrow_matrix(s, 0);
    const auto xy = kernels::multiply(x, arrow_matrix(s, 1));
    for (auto _ : state) {
        auto m = Parallel ? kernels::multiply(xy, x) : kernels::serial::multiply(xy, x);
        benchmark::DoNotOptimize(m);
    }
}

template <bool Parallel>
void form_product(benchmark::State &state)
{
    const auto s = two_loops(static_cast<int>(state.range(0)));
    const auto dx = FormMatrix::differential(arrow_matrix(s, 0));
    const auto dy = FormMatrix::differential(arrow_matrix(s, 1));
    for (auto _ : state) {
        auto m = Parallel ? kernels::multiply(dx, dy) : kernels::serial::multiply(dx, dy);
        benchmark::DoNotOptimize(m);
    }
}

template <bool Parallel>
void conjugation(benchmark::State &state)
{
    const auto s = two_loops(static_cast<int>(state.range(0)));
    const auto gens = conjugation_generators(s);
    const auto x = AlgebraElement::arrow(s.quiver(), 0);
    const auto y = AlgebraElement::arrow(s.quiver(), 1);
    const auto f = trace_fn(s, x * y * x * y);
    for (auto _ : state) {
        auto images = Parallel ? kernels::apply_all(gens, f) : kernels::serial::apply_all(gens, f);
        benchmark::DoNotOptimize(images);
    }
}

} // namespace

BENCHMARK(poly_product<false>)->Arg(2)->Arg(4)->Arg(6);
BENCHMARK(poly_product<true>)->Arg(2)->Arg(4)->Arg(6);
BENCHMARK(form_product<false>)->Arg(2)->Arg(4)->Arg(6);
BENCHMARK(form_product<true>)->Arg(2)->Arg(4)->Arg(6);
BENCHMARK(conjugation<false>)->Arg(2)->Arg(3)->Arg(4);
BENCHMARK(conjugation<true>)->Arg(2)->Arg(3)->Arg(4);

BENCHMARK_MAIN();
