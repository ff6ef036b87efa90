#include <benchmark/benchmark.h>

#include "lexmsa/msa.hpp"
#include "lexmsa_test/synthetic.hpp"

using namespace lexmsa;

static void BM_AlignPair(benchmark::State& state)
{
    lexmsa_test::Rng rng(1);
    const auto len = static_cast<std::size_t>(state.range(0));
    Msa a = Msa::from_tokens(lexmsa_test::random_sequence(rng, len, len, 8), 0);
    Msa b = Msa::from_tokens(lexmsa_test::random_sequence(rng, len, len, 8), 1);
    Thesaurus t;
    Similarity s(t);
    for (auto _ : state)
        benchmark::DoNotOptimize(align_pair(a, b, s));
    state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_AlignPair)->RangeMultiplier(2)->Range(8, 128)->Complexity(benchmark::oNSquared);

static void BM_AlignProfiles(benchmark::State& state)
{
    lexmsa_test::Rng rng(2);
    const auto rows = static_cast<std::size_t>(state.range(0));
    Thesaurus t;
    Similarity s(t);
    Msa a = iterative_msa(lexmsa_test::random_items(rng, rows, 20, 6), s);
    Msa b = iterative_msa(lexmsa_test::random_items(rng, rows, 20, 6), s);
    for (auto _ : state)
        benchmark::DoNotOptimize(align_pair(a, b, s));
}
BENCHMARK(BM_AlignProfiles)->Arg(1)->Arg(4)->Arg(16);

static void BM_IterativeMsa(benchmark::State& state)
{
    lexmsa_test::Rng rng(3);
    auto items = lexmsa_test::random_items(rng, static_cast<std::size_t>(state.range(0)), 20, 6);
    Thesaurus t;
    Similarity s(t);
    for (auto _ : state)
        benchmark::DoNotOptimize(iterative_msa(items, s));
}
BENCHMARK(BM_IterativeMsa)->Arg(4)->Arg(16)->Arg(64);
