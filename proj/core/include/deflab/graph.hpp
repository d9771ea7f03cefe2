#pragma once

#include <cassert>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "deflab/errors.hpp"

namespace deflab {

using Edge = std::pair<int, int>;

// Fixed-universe vertex subset backed by 64-bit words.
class VertexSet {
public:
    VertexSet() = default;
    explicit VertexSet(int universe) : n_(universe), w_((universe + 63) / 64, 0) {
        if (universe < 0) throw BadParams("VertexSet universe must be non-negative");
    }
    static VertexSet of(int universe, std::initializer_list<int> vs) {
        VertexSet s(universe);
        for (int v : vs) s.insert(v);
        return s;
    }
    static VertexSet full(int universe) {
        VertexSet s(universe);
        for (int v = 0; v < universe; ++v) s.insert(v);
        return s;
    }

    int universe() const { return n_; }
    bool contains(int v) const {
        check(v);
        return (w_[v >> 6] >> (v & 63)) & 1;
    }
    void insert(int v) {
        check(v);
        w_[v >> 6] |= uint64_t(1) << (v & 63);
    }
    void erase(int v) {
        check(v);
        w_[v >> 6] &= ~(uint64_t(1) << (v & 63));
    }
    int count() const;
    bool empty() const { return count() == 0; }
    std::vector<int> members() const;  // ascending

    VertexSet& operator|=(const VertexSet& o);
    VertexSet& operator&=(const VertexSet& o);
    VertexSet& operator-=(const VertexSet& o);
    friend VertexSet operator|(VertexSet a, const VertexSet& b) { return a |= b; }
    friend VertexSet operator&(VertexSet a, const VertexSet& b) { return a &= b; }
    friend VertexSet operator-(VertexSet a, const VertexSet& b) { return a -= b; }
    bool operator==(const VertexSet& o) const = default;
    bool intersects(const VertexSet& o) const;

    std::span<const uint64_t> words() const { return w_; }

private:
    void check(int v) const {
        if (v < 0 || v >= n_) throw IndexOutOfRange("vertex out of range");
    }
    int n_ = 0;
    std::vector<uint64_t> w_;
};

// Immutable simple undirected graph. Vertices are 0..n-1; adjacency is kept
// both as strictly increasing neighbor lists and as bitset rows.
class Graph {
public:
    Graph() = default;
    Graph(int n, std::span<const Edge> edges);
    Graph(int n, std::initializer_list<Edge> edges)
        : Graph(n, std::span<const Edge>(edges.begin(), edges.size())) {}

    int order() const { return n_; }   // |V|
    int size() const { return m_; }    // |E|

    const std::vector<int>& neighbors(int v) const {
        bounds(v);
        return adj_[v];
    }
    int degree(int v) const {
        bounds(v);
        return static_cast<int>(adj_[v].size());
    }
    bool adjacent(int u, int v) const {
        bounds(u);
        bounds(v);
        return (row_ptr(u)[v >> 6] >> (v & 63)) & 1;
    }
    // Bitset adjacency row of v (ceil(n/64) words).
    std::span<const uint64_t> row(int v) const {
        bounds(v);
        return {row_ptr(v), static_cast<size_t>(words_)};
    }

    std::vector<Edge> edges() const;  // normalized u < v, lexicographic
    bool connected() const;
    int max_degree() const;
    int min_degree() const;
    VertexSet neighborhood(const VertexSet& xs) const;  // N(X), excludes X

    // Re-verifies structural invariants (symmetry, sorted rows, no loops);
    // throws Error on violation. Constructors assert the same in debug builds.
    void check_invariants() const;

private:
    void bounds(int v) const {
        if (v < 0 || v >= n_) throw IndexOutOfRange("vertex out of range");
    }
    const uint64_t* row_ptr(int v) const { return bits_.data() + size_t(v) * words_; }
    uint64_t* row_ptr(int v) { return bits_.data() + size_t(v) * words_; }

    int n_ = 0;
    int m_ = 0;
    int words_ = 0;
    std::vector<std::vector<int>> adj_;
    std::vector<uint64_t> bits_;
};

// Build from an explicit vertex count and edge list. Duplicate edges collapse;
// self-loops and out-of-range endpoints throw.
Graph build_graph(int n, std::span<const Edge> edges);
inline Graph build_graph(int n, std::initializer_list<Edge> edges) {
    return build_graph(n, std::span<const Edge>(edges.begin(), edges.size()));
}

// BFS distances from root; -1 marks unreachable vertices.
std::vector<int> bfs_distances(const Graph& g, int root);

// Layers L_0={root}, L_1, ... partitioning root's component; the last layer is
// non-empty.
std::vector<VertexSet> bfs_layers(const Graph& g, int root);

// Longest shortest-path distance; nullopt iff disconnected; 0 when n <= 1.
std::optional<int> diameter(const Graph& g);

struct InducedSubgraph {
    Graph graph;
    std::vector<int> vertices;  // vertices[new_label] = old_label, ascending
};

// Induced subgraph on `keep`, relabeled order-preservingly to 0..|keep|-1.
InducedSubgraph induced_subgraph(const Graph& g, const VertexSet& keep);

}  // namespace deflab
