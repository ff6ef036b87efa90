#include <benchmark/benchmark.h>

#include "lexmsa/induction.hpp"
#include "lexmsa/pipeline.hpp"
#include "lexmsa_test/synthetic.hpp"

using namespace lexmsa;

static void BM_ConsensusPath(benchmark::State& state)
{
    lexmsa_test::Rng rng(4);
    Thesaurus t;
    Similarity s(t);
    auto items = lexmsa_test::random_items(rng, 16, static_cast<std::size_t>(state.range(0)), 10);
    Lattice l(iterative_msa(items, s));
    WeightedDag d = to_weighted_dag(l, node_weights(l));
    for (auto _ : state)
        benchmark::DoNotOptimize(consensus_path(d, 6));
    state.counters["nodes"] = static_cast<double>(d.size());
}
BENCHMARK(BM_ConsensusPath)->Arg(10)->Arg(20)->Arg(40);

static void BM_InduceThesaurus(benchmark::State& state)
{
    auto pc = lexmsa_test::paraphrase_corpus(5);
    for (auto _ : state)
        benchmark::DoNotOptimize(induce_thesaurus(pc.corpus));
}
BENCHMARK(BM_InduceThesaurus)->Unit(benchmark::kMillisecond);

static void BM_InducePipeline(benchmark::State& state)
{
    auto tc = lexmsa_test::template_corpus(6, 12, static_cast<std::size_t>(state.range(0)), 0, 4);
    for (auto _ : state)
        benchmark::DoNotOptimize(induce(tc.training, PipelineConfig{}, static_cast<unsigned>(state.range(1))));
}
BENCHMARK(BM_InducePipeline)->Args({4, 1})->Args({16, 1})->Args({16, 4})->Unit(benchmark::kMillisecond);

static void BM_RawProofScale(benchmark::State& state)
{
    std::string doc = lexmsa_test::raw_proof_document(9, 30, 5, 83);
    for (auto _ : state) {
        std::string path = "/tmp/lexmsa_bench_proofs.txt";
        write_file(path, doc);
        auto loaded = load_corpus(path, true);
        benchmark::DoNotOptimize(induce(loaded.corpus, PipelineConfig{}));
    }
}
BENCHMARK(BM_RawProofScale)->Unit(benchmark::kMillisecond);
