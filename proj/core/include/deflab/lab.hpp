#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "deflab/graph.hpp"
#include "deflab/subgraph.hpp"

namespace deflab {

// Pull-based stream of connected graphs of a fixed order, one per isomorphism
// class, in ascending canonical-signature order.
class EnumerationStream {
public:
    int order() const { return n_; }
    // Number of graphs in the stream.
    size_t count() const;
    // Fills `out` with the next graph; false when exhausted.
    bool next(Graph& out);
    void reset() { idx_ = 0; }

private:
    friend EnumerationStream enumerate_connected(int n);
    friend EnumerationStream enumerate_connected_where(
        int n, const std::function<bool(const Graph&)>& filter);
    EnumerationStream(int n, std::shared_ptr<const std::vector<CanonSig>> sigs)
        : n_(n), sigs_(std::move(sigs)) {}

    int n_ = 0;
    std::shared_ptr<const std::vector<CanonSig>> sigs_;
    size_t idx_ = 0;
};

// Every connected graph on n vertices exactly once up to isomorphism, built
// by extending the (n-1)-vertex classes with one new vertex and deduplicating
// by canonical signature. Levels are computed once and cached process-wide.
// 1 <= n <= 9 (261,080 classes at the cap).
EnumerationStream enumerate_connected(int n);  // throws BadParams / TooLarge

// Same, restricted to graphs satisfying `filter`. The filter must be
// hereditary (closed under taking connected induced subgraphs) — each level
// keeps only passing graphs, which is exhaustive precisely for hereditary
// properties because every connected graph has a non-cutting vertex whose
// removal stays in the class. The pruning admits orders up to 10.
// Results are not cached across calls.
EnumerationStream enumerate_connected_where(
    int n, const std::function<bool(const Graph&)>& filter);  // throws BadParams / TooLarge

// Exhaustive labeled-graph generation with isomorphism dedup; independent
// cross-check for the stream above (n <= 6).
std::vector<CanonSig> enumerate_connected_brute(int n);  // throws BadParams / TooLarge

struct ExperimentReport {
    std::string predicate;                // human-readable description
    long long instances_checked = 0;
    std::vector<std::string> failures;    // graph6 of each violating graph
    double wall_seconds = 0.0;

    bool passed() const { return failures.empty(); }
    std::string to_json() const;
};

// Scans every connected fam-free graph with order <= max_n (<= 9) and reports
// each one whose deficiency exceeds `bound`. Deterministic output regardless
// of worker count.
ExperimentReport exhaustive_check(const Family& fam, int bound, int max_n, int jobs = 1);

// Same scan over an explicit list of graphs (e.g. loaded from a file).
ExperimentReport exhaustive_check_graphs(std::span<const Graph> graphs, const Family& fam,
                                         int bound, int jobs = 1);

// Hunts for a connected fam-free graph with deficiency >= d: first
// exhaustively through the enumeration (orders 1..9), then by seeded random
// growth (random trees plus random edges, violations repaired by edge
// deletion). `budget` caps the number of candidate graphs examined.
// Deterministic for a fixed seed.
std::optional<Graph> falsify_search(const Family& fam, int d, long long budget,
                                    uint64_t seed);

// Runs fn(i) for i in [0, count) on `jobs` threads in deterministic slot
// order (fn must tolerate concurrent calls on distinct i).
void parallel_for(long long count, int jobs, const std::function<void(long long)>& fn);

}  // namespace deflab
