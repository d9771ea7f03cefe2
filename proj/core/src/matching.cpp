#include "deflab/matching.hpp"

#include <algorithm>
#include <bit>
#include <numeric>

namespace deflab {

namespace {

// Augmenting-path search with blossom contraction. Deterministic: vertices
// and neighbor lists are scanned in ascending order throughout.
class BlossomSolver {
public:
    explicit BlossomSolver(const Graph& g)
        : g_(g), n_(g.order()), match_(n_, -1), parent_(n_, -1), base_(n_, 0), used_(n_, 0) {}

    std::vector<int> solve() {
        // Greedy maximal matching seeds the search.
        for (int v = 0; v < n_; ++v) {
            if (match_[v] >= 0) continue;
            for (int w : g_.neighbors(v))
                if (match_[w] < 0) {
                    match_[v] = w;
                    match_[w] = v;
                    break;
                }
        }
        for (int v = 0; v < n_; ++v)
            if (match_[v] < 0) {
                int exposed = find_path(v);
                if (exposed >= 0) augment(exposed);
            }
        return match_;
    }

private:
    int lca(int a, int b) {
        std::vector<char> on_path(n_, 0);
        for (;;) {
            a = base_[a];
            on_path[a] = 1;
            if (match_[a] < 0) break;
            a = parent_[match_[a]];
        }
        for (;;) {
            b = base_[b];
            if (on_path[b]) return b;
            b = parent_[match_[b]];
        }
    }

    void mark_path(int v, int b, int child, std::vector<char>& in_blossom) {
        while (base_[v] != b) {
            in_blossom[base_[v]] = 1;
            in_blossom[base_[match_[v]]] = 1;
            parent_[v] = child;
            child = match_[v];
            v = parent_[match_[v]];
        }
    }

    // BFS over alternating paths from an unmatched root; returns an exposed
    // vertex ending an augmenting path, or -1.
    int find_path(int root) {
        std::fill(used_.begin(), used_.end(), 0);
        std::fill(parent_.begin(), parent_.end(), -1);
        std::iota(base_.begin(), base_.end(), 0);
        used_[root] = 1;
        queue_.assign(1, root);
        for (size_t h = 0; h < queue_.size(); ++h) {
            int v = queue_[h];
            for (int to : g_.neighbors(v)) {
                if (base_[v] == base_[to] || match_[v] == to) continue;
                if (to == root || (match_[to] >= 0 && parent_[match_[to]] >= 0)) {
                    // odd cycle: contract the blossom rooted at the lca
                    int cur_base = lca(v, to);
                    std::vector<char> in_blossom(n_, 0);
                    mark_path(v, cur_base, to, in_blossom);
                    mark_path(to, cur_base, v, in_blossom);
                    for (int i = 0; i < n_; ++i)
                        if (in_blossom[base_[i]]) {
                            base_[i] = cur_base;
                            if (!used_[i]) {
                                used_[i] = 1;
                                queue_.push_back(i);
                            }
                        }
                } else if (parent_[to] < 0) {
                    parent_[to] = v;
                    if (match_[to] < 0) return to;
                    used_[match_[to]] = 1;
                    queue_.push_back(match_[to]);
                }
            }
        }
        return -1;
    }

    void augment(int v) {
        while (v >= 0) {
            int pv = parent_[v];
            int next = match_[pv];
            match_[v] = pv;
            match_[pv] = v;
            v = next;
        }
    }

    const Graph& g_;
    int n_;
    std::vector<int> match_, parent_, base_;
    std::vector<char> used_;
    std::vector<int> queue_;
};

}  // namespace

Matching maximum_matching(const Graph& g) { return Matching{BlossomSolver(g).solve()}; }

bool verify_matching(const Graph& g, const Matching& m) {
    if (static_cast<int>(m.mate.size()) != g.order()) return false;
    for (int v = 0; v < g.order(); ++v) {
        int w = m.mate[v];
        if (w < 0) continue;
        if (w >= g.order() || w == v) return false;
        if (m.mate[w] != v) return false;
        if (!g.adjacent(v, w)) return false;
    }
    return true;
}

int deficiency(const Graph& g) { return g.order() - 2 * maximum_matching(g).size(); }

TutteBergeCertificate tutte_berge_brute(const Graph& g) {
    int n = g.order();
    if (n > 24) throw TooLarge("subset scan supports up to 24 vertices");
    // Adjacency as word masks for fast component walks.
    std::vector<uint32_t> row(n, 0);
    for (int v = 0; v < n; ++v)
        for (int w : g.neighbors(v)) row[v] |= uint32_t(1) << w;

    uint32_t best_mask = 0;
    int best_odd = 0, best_value = -n - 1;
    const uint32_t full = (uint32_t(1) << n) - 1;
    for (uint32_t mask = 0;; ++mask) {
        uint32_t remaining = full & ~mask;
        int odd = 0;
        while (remaining) {
            uint32_t comp = remaining & (~remaining + 1);  // lowest set bit seeds a component
            for (;;) {
                uint32_t frontier = 0;
                uint32_t scan = comp;
                while (scan) {
                    int v = std::countr_zero(scan);
                    scan &= scan - 1;
                    frontier |= row[v];
                }
                frontier &= remaining;
                if ((frontier | comp) == comp) break;
                comp |= frontier;
            }
            if (std::popcount(comp) % 2 == 1) ++odd;
            remaining &= ~comp;
        }
        int value = odd - std::popcount(mask);
        if (value > best_value) {
            best_value = value;
            best_odd = odd;
            best_mask = mask;
        }
        if (mask == full) break;
    }
    VertexSet sep(n);
    for (int v = 0; v < n; ++v)
        if ((best_mask >> v) & 1) sep.insert(v);
    return {sep, best_odd, best_value};
}

bool is_induced_matching(const Graph& g, const Matching& m) {
    if (!verify_matching(g, m)) return false;
    auto es = m.edges();
    for (size_t a = 0; a < es.size(); ++a)
        for (size_t b = a + 1; b < es.size(); ++b) {
            auto [u1, v1] = es[a];
            auto [u2, v2] = es[b];
            if (g.adjacent(u1, u2) || g.adjacent(u1, v2) || g.adjacent(v1, u2) ||
                g.adjacent(v1, v2))
                return false;
        }
    return true;
}

namespace {

// Max independent set in the edge-conflict graph, branch and bound.
int mis(const std::vector<uint32_t>& conflict, uint32_t cand, int acc, int& best) {
    if (acc + std::popcount(cand) <= best) return best;
    if (!cand) {
        best = std::max(best, acc);
        return best;
    }
    int e = std::countr_zero(cand);
    uint32_t bit = uint32_t(1) << e;
    mis(conflict, cand & ~bit & ~conflict[e], acc + 1, best);  // take e
    mis(conflict, cand & ~bit, acc, best);                     // skip e
    return best;
}

}  // namespace

int max_induced_matching_brute(const Graph& g) {
    auto es = g.edges();
    int k = static_cast<int>(es.size());
    if (k > 24) throw TooLarge("induced-matching scan supports up to 24 edges");
    std::vector<uint32_t> conflict(k, 0);
    for (int a = 0; a < k; ++a)
        for (int b = 0; b < k; ++b) {
            if (a == b) continue;
            auto [u1, v1] = es[a];
            auto [u2, v2] = es[b];
            bool share = u1 == u2 || u1 == v2 || v1 == u2 || v1 == v2;
            bool joined = g.adjacent(u1, u2) || g.adjacent(u1, v2) || g.adjacent(v1, u2) ||
                          g.adjacent(v1, v2);
            if (share || joined) conflict[a] |= uint32_t(1) << b;
        }
    int best = 0;
    uint32_t all = (uint32_t(1) << k) - 1;
    mis(conflict, all, 0, best);
    return best;
}

}  // namespace deflab
