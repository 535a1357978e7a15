#include <benchmark/benchmark.h>

#include "bwcohom/generators.hpp"

namespace {

using namespace bwc;

IntMatrix random_matrix(Rng& rng, std::size_t n)
{
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) m(i, j) = rng.between(-9, 9);
    return m;
}

void BM_SmithNormalForm(benchmark::State& state)
{
    Rng rng(7);
    const auto n = static_cast<std::size_t>(state.range(0));
    std::vector<IntMatrix> inputs;
    for (int i = 0; i < 16; ++i) inputs.push_back(random_matrix(rng, n));
    std::size_t k = 0;
    for (auto _ : state) benchmark::DoNotOptimize(smith_normal_form(inputs[k++ % inputs.size()]));
}
BENCHMARK(BM_SmithNormalForm)->Arg(6)->Arg(12)->Arg(24);

void BM_HermiteNormalForm(benchmark::State& state)
{
    Rng rng(11);
    const auto n = static_cast<std::size_t>(state.range(0));
    std::vector<IntMatrix> inputs;
    for (int i = 0; i < 16; ++i) inputs.push_back(random_matrix(rng, n));
    std::size_t k = 0;
    for (auto _ : state) benchmark::DoNotOptimize(hermite_normal_form(inputs[k++ % inputs.size()]));
}
BENCHMARK(BM_HermiteNormalForm)->Arg(6)->Arg(12)->Arg(24);

// Constant Z on Z/n up to degree N: |F^k| = n^k.
void BM_BuildComplexCyclic(benchmark::State& state)
{
    auto c = make_category(cyclic_group_category(static_cast<std::size_t>(state.range(0))));
    auto fc = build_factorization(c);
    auto d = make_system(constant_system(fc, make_group(PresentedGroup::free(1))));
    const auto n = static_cast<std::size_t>(state.range(1));
    for (auto _ : state) benchmark::DoNotOptimize(build_complex(d, n, false));
}
BENCHMARK(BM_BuildComplexCyclic)->Args({2, 4})->Args({3, 4})->Args({5, 4});

void BM_CohomologyCyclic(benchmark::State& state)
{
    auto c = make_category(cyclic_group_category(static_cast<std::size_t>(state.range(0))));
    auto fc = build_factorization(c);
    auto d = make_system(constant_system(fc, make_group(PresentedGroup::free(1))));
    auto complex = build_complex(d, 4, false);
    for (auto _ : state) benchmark::DoNotOptimize(cohomology_all(*complex));
}
BENCHMARK(BM_CohomologyCyclic)->Arg(2)->Arg(3)->Arg(4);

void BM_HomotopyH(benchmark::State& state)
{
    Rng rng(static_cast<std::uint64_t>(state.range(0)));
    auto gc = random_category(rng, 6);
    auto fc = build_factorization(gc.category);
    auto gs = random_system(rng, fc);
    auto cell = random_nat_cell(rng, gs.system, random_small_category(rng));
    auto a = build_complex(gs.system, 4, false);
    auto b = build_complex(cell->from.target(), 4, false);
    for (auto _ : state) benchmark::DoNotOptimize(homotopy_h(*cell, a, b, false));
    state.SetLabel(gc.family + " / " + gs.family);
}
BENCHMARK(BM_HomotopyH)->Arg(1)->Arg(2)->Arg(3);

void BM_LocalizationTheorem(benchmark::State& state)
{
    auto l = arrow_localization();
    auto fc = build_factorization(l.big);
    auto d = make_system(representable_system(fc, 1));
    d = make_system(pullback_along_nat(*d, l.alpha, fc));
    for (auto _ : state) benchmark::DoNotOptimize(verify_localization_theorem(d, l, static_cast<std::size_t>(state.range(0))));
}
BENCHMARK(BM_LocalizationTheorem)->Arg(3)->Arg(4);

} // namespace
BENCHMARK_MAIN();
