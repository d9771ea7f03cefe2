// Microbenchmarks for the hot paths: maximum matching, induced-subgraph
// embedding, canonical signatures / enumeration, and bound arithmetic.

#include <benchmark/benchmark.h>

#include <random>
#include <vector>

#include "deflab/certifier.hpp"
#include "deflab/families.hpp"
#include "deflab/graph.hpp"
#include "deflab/lab.hpp"
#include "deflab/matching.hpp"
#include "deflab/subgraph.hpp"

using namespace deflab;

namespace {

Graph random_graph(int n, double p, unsigned seed) {
    std::mt19937 rng(seed);
    std::bernoulli_distribution coin(p);
    std::vector<Edge> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (coin(rng)) edges.emplace_back(u, v);
    return Graph(n, edges);
}

Graph gen(const char* spec) { return generate(parse_family_spec(spec)).graph; }

void BM_MaximumMatching(benchmark::State& state) {
    int n = static_cast<int>(state.range(0));
    Graph g = random_graph(n, 0.15, 91u + static_cast<unsigned>(n));
    for (auto _ : state) benchmark::DoNotOptimize(maximum_matching(g).size());
    state.SetItemsProcessed(state.iterations());
}
BENCHMARK(BM_MaximumMatching)->Arg(16)->Arg(32)->Arg(64);

void BM_Deficiency_Family(benchmark::State& state) {
    Graph g = gen("frakK(5,2)");
    for (auto _ : state) benchmark::DoNotOptimize(deficiency(g));
}
BENCHMARK(BM_Deficiency_Family);

void BM_InducedEmbedding_Claw(benchmark::State& state) {
    int n = static_cast<int>(state.range(0));
    Graph pattern = gen("star(3)");
    Graph host = random_graph(n, 0.2, 7u);
    for (auto _ : state)
        benchmark::DoNotOptimize(induced_embedding(pattern, host).has_value());
}
BENCHMARK(BM_InducedEmbedding_Claw)->Arg(20)->Arg(40);

void BM_InducedEmbedding_Broom(benchmark::State& state) {
    Graph pattern = gen("B(1)");
    Graph host = gen("F1(8)");
    for (auto _ : state)
        benchmark::DoNotOptimize(induced_embedding(pattern, host).has_value());
}
BENCHMARK(BM_InducedEmbedding_Broom);

void BM_CanonicalSignature(benchmark::State& state) {
    int n = static_cast<int>(state.range(0));
    Graph g = random_graph(n, 0.3, 13u + static_cast<unsigned>(n));
    for (auto _ : state) benchmark::DoNotOptimize(canonical_signature(g));
}
BENCHMARK(BM_CanonicalSignature)->Arg(8)->Arg(12)->Arg(16);

void BM_EnumerateConnected(benchmark::State& state) {
    int n = static_cast<int>(state.range(0));
    for (auto _ : state) {
        EnumerationStream s = enumerate_connected(n);
        Graph g;
        long long count = 0;
        while (s.next(g)) ++count;
        benchmark::DoNotOptimize(count);
    }
}
BENCHMARK(BM_EnumerateConnected)->Arg(6)->Arg(7)->Unit(benchmark::kMillisecond);

void BM_BoundArithmetic(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(f_bound(5, 4).str().size());
}
BENCHMARK(BM_BoundArithmetic);

void BM_LevelCertifier(benchmark::State& state) {
    Graph g = gen("cycle(20)");
    for (auto _ : state)
        benchmark::DoNotOptimize(bounded_diameter_matching(g, 4).missed.count());
}
BENCHMARK(BM_LevelCertifier);

}  // namespace

BENCHMARK_MAIN();
