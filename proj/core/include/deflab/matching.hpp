#pragma once

#include <optional>
#include <vector>

#include "deflab/graph.hpp"

namespace deflab {

// A matching given by its partner array: mate[v] is v's partner or -1.
struct Matching {
    std::vector<int> mate;

    int size() const {
        int c = 0;
        for (int m : mate)
            if (m >= 0) ++c;
        return c / 2;
    }
    // Vertices not covered by the matching, ascending.
    std::vector<int> missed() const {
        std::vector<int> out;
        for (int v = 0; v < static_cast<int>(mate.size()); ++v)
            if (mate[v] < 0) out.push_back(v);
        return out;
    }
    std::vector<Edge> edges() const {
        std::vector<Edge> out;
        for (int v = 0; v < static_cast<int>(mate.size()); ++v)
            if (mate[v] > v) out.emplace_back(v, mate[v]);
        return out;
    }
};

// Maximum matching on a general graph (blossom contraction). Deterministic:
// greedy initialization over vertices ascending, then augmenting searches from
// unmatched vertices ascending.
Matching maximum_matching(const Graph& g);

// Checks that `m` is a valid matching in g (partners mutual, edges present,
// no vertex reused). Does not check maximality.
bool verify_matching(const Graph& g, const Matching& m);

// Number of vertices missed by a maximum matching: |V| - 2*nu(G).
int deficiency(const Graph& g);

// A set S realizing max over S of (odd components of G - S) - |S|, which
// equals the deficiency. Exponential search over all subsets; order <= 24.
struct TutteBergeCertificate {
    VertexSet separator;   // the maximizing S
    int odd_components;    // odd components of G - S
    int value;             // odd_components - |S|
};
TutteBergeCertificate tutte_berge_brute(const Graph& g);  // throws TooLarge past 24

// True iff m is a valid matching and no edge of g joins two distinct matching
// edges (the matched pairs induce a 1-regular subgraph).
bool is_induced_matching(const Graph& g, const Matching& m);

// Largest induced matching size, by exhaustive search over edge subsets;
// rejects graphs with more than 24 edges.
int max_induced_matching_brute(const Graph& g);  // throws TooLarge

}  // namespace deflab
