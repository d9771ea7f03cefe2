#include "deflab/graph.hpp"

#include <algorithm>
#include <bit>
#include <string>

namespace deflab {

int VertexSet::count() const {
    int c = 0;
    for (uint64_t w : w_) c += std::popcount(w);
    return c;
}

std::vector<int> VertexSet::members() const {
    std::vector<int> out;
    out.reserve(count());
    for (size_t i = 0; i < w_.size(); ++i) {
        uint64_t w = w_[i];
        while (w) {
            int b = std::countr_zero(w);
            out.push_back(static_cast<int>(i * 64 + b));
            w &= w - 1;
        }
    }
    return out;
}

static void require_same_universe(const VertexSet& a, const VertexSet& b) {
    if (a.universe() != b.universe())
        throw BadParams("VertexSet universe mismatch");
}

VertexSet& VertexSet::operator|=(const VertexSet& o) {
    require_same_universe(*this, o);
    for (size_t i = 0; i < w_.size(); ++i) w_[i] |= o.w_[i];
    return *this;
}
VertexSet& VertexSet::operator&=(const VertexSet& o) {
    require_same_universe(*this, o);
    for (size_t i = 0; i < w_.size(); ++i) w_[i] &= o.w_[i];
    return *this;
}
VertexSet& VertexSet::operator-=(const VertexSet& o) {
    require_same_universe(*this, o);
    for (size_t i = 0; i < w_.size(); ++i) w_[i] &= ~o.w_[i];
    return *this;
}
bool VertexSet::intersects(const VertexSet& o) const {
    require_same_universe(*this, o);
    for (size_t i = 0; i < w_.size(); ++i)
        if (w_[i] & o.w_[i]) return true;
    return false;
}

Graph::Graph(int n, std::span<const Edge> edges) {
    if (n < 0) throw BadParams("graph order must be non-negative");
    n_ = n;
    words_ = (n + 63) / 64;
    adj_.assign(n, {});
    bits_.assign(size_t(n) * words_, 0);
    for (auto [u, v] : edges) {
        if (u < 0 || u >= n || v < 0 || v >= n)
            throw IndexOutOfRange("edge endpoint out of range: (" + std::to_string(u) +
                                  "," + std::to_string(v) + ") with n=" + std::to_string(n));
        if (u == v)
            throw SelfLoop("self-loop at vertex " + std::to_string(u));
        if (adjacent(u, v)) continue;  // duplicates collapse
        row_ptr(u)[v >> 6] |= uint64_t(1) << (v & 63);
        row_ptr(v)[u >> 6] |= uint64_t(1) << (u & 63);
        adj_[u].push_back(v);
        adj_[v].push_back(u);
        ++m_;
    }
    for (auto& nb : adj_) std::sort(nb.begin(), nb.end());
#ifndef NDEBUG
    check_invariants();
#endif
}

std::vector<Edge> Graph::edges() const {
    std::vector<Edge> out;
    out.reserve(m_);
    for (int u = 0; u < n_; ++u)
        for (int v : adj_[u])
            if (u < v) out.emplace_back(u, v);
    return out;
}

bool Graph::connected() const {
    if (n_ <= 1) return true;
    auto d = bfs_distances(*this, 0);
    return std::find(d.begin(), d.end(), -1) == d.end();
}

int Graph::max_degree() const {
    int d = 0;
    for (int v = 0; v < n_; ++v) d = std::max(d, degree(v));
    return d;
}

int Graph::min_degree() const {
    if (n_ == 0) return 0;
    int d = degree(0);
    for (int v = 1; v < n_; ++v) d = std::min(d, degree(v));
    return d;
}

VertexSet Graph::neighborhood(const VertexSet& xs) const {
    if (xs.universe() != n_) throw BadParams("VertexSet universe mismatch");
    VertexSet out(n_);
    for (int v : xs.members())
        for (int w : adj_[v])
            if (!xs.contains(w)) out.insert(w);
    return out;
}

void Graph::check_invariants() const {
    long long edge_count = 0;
    for (int v = 0; v < n_; ++v) {
        const auto& nb = adj_[v];
        for (size_t i = 0; i < nb.size(); ++i) {
            int w = nb[i];
            if (w < 0 || w >= n_) throw Error("invariant: neighbor out of range");
            if (w == v) throw Error("invariant: self-loop present");
            if (i > 0 && nb[i - 1] >= w) throw Error("invariant: neighbor list not strictly increasing");
            if (!adjacent(v, w) || !adjacent(w, v)) throw Error("invariant: bitset rows out of sync");
        }
        edge_count += static_cast<long long>(nb.size());
        // bitset row must agree with the list exactly
        int popc = 0;
        for (int k = 0; k < words_; ++k) popc += std::popcount(row_ptr(v)[k]);
        if (popc != static_cast<int>(nb.size()))
            throw Error("invariant: bitset row cardinality mismatch");
    }
    if (edge_count != 2LL * m_) throw Error("invariant: edge count mismatch");
}

std::vector<int> bfs_distances(const Graph& g, int root) {
    if (root < 0 || root >= g.order()) throw IndexOutOfRange("bfs root out of range");
    std::vector<int> dist(g.order(), -1);
    std::vector<int> q{root};
    dist[root] = 0;
    for (size_t h = 0; h < q.size(); ++h) {
        int v = q[h];
        for (int w : g.neighbors(v))
            if (dist[w] < 0) {
                dist[w] = dist[v] + 1;
                q.push_back(w);
            }
    }
    return dist;
}

std::vector<VertexSet> bfs_layers(const Graph& g, int root) {
    auto dist = bfs_distances(g, root);
    int depth = 0;
    for (int d : dist) depth = std::max(depth, d);
    std::vector<VertexSet> layers(depth + 1, VertexSet(g.order()));
    for (int v = 0; v < g.order(); ++v)
        if (dist[v] >= 0) layers[dist[v]].insert(v);
    return layers;
}

std::optional<int> diameter(const Graph& g) {
    if (g.order() <= 1) return 0;
    int best = 0;
    for (int r = 0; r < g.order(); ++r) {
        auto dist = bfs_distances(g, r);
        for (int d : dist) {
            if (d < 0) return std::nullopt;
            best = std::max(best, d);
        }
    }
    return best;
}

InducedSubgraph induced_subgraph(const Graph& g, const VertexSet& keep) {
    if (keep.universe() != g.order()) throw BadParams("VertexSet universe mismatch");
    std::vector<int> verts = keep.members();
    std::vector<int> new_label(g.order(), -1);
    for (size_t i = 0; i < verts.size(); ++i) new_label[verts[i]] = static_cast<int>(i);
    std::vector<Edge> es;
    for (int v : verts)
        for (int w : g.neighbors(v))
            if (w > v && new_label[w] >= 0) es.emplace_back(new_label[v], new_label[w]);
    return {Graph(static_cast<int>(verts.size()), es), std::move(verts)};
}

Graph build_graph(int n, std::span<const Edge> edges) { return Graph(n, edges); }

}  // namespace deflab
