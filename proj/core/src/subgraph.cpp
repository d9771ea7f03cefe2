#include "deflab/subgraph.hpp"

#include <algorithm>
#include <bit>
#include <numeric>

#include "deflab/families.hpp"

namespace deflab {

// ---------------------------------------------------------------------------
// Induced-subgraph search
// ---------------------------------------------------------------------------

namespace {

struct EmbeddingSearch {
    const Graph& pattern;
    const Graph& host;
    std::vector<int> order;    // pattern vertices in placement order
    std::vector<int> phi;      // phi[pattern vertex] = host vertex or -1
    std::vector<char> used;    // host vertices taken
    std::vector<int> anchor_candidates;

    EmbeddingSearch(const Graph& p, const Graph& h) : pattern(p), host(h) {
        int np = pattern.order();
        // Anchor on the highest-degree pattern vertex, then grow along placed
        // neighbors so every later vertex is candidate-restricted.
        std::vector<char> placed(np, 0);
        order.reserve(np);
        for (int k = 0; k < np; ++k) {
            int pick = -1, pick_nbrs = -1, pick_deg = -1;
            for (int v = 0; v < np; ++v) {
                if (placed[v]) continue;
                int nbrs = 0;
                for (int w : pattern.neighbors(v)) nbrs += placed[w];
                int deg = pattern.degree(v);
                if (nbrs > pick_nbrs || (nbrs == pick_nbrs && deg > pick_deg)) {
                    pick = v;
                    pick_nbrs = nbrs;
                    pick_deg = deg;
                }
            }
            placed[pick] = 1;
            order.push_back(pick);
        }
        phi.assign(np, -1);
        used.assign(host.order(), 0);
        // Anchor candidates ascending by (degree gap, label).
        int a = order.empty() ? 0 : order[0];
        std::vector<std::pair<int, int>> ranked;
        for (int c = 0; c < host.order(); ++c)
            if (!order.empty() && host.degree(c) >= pattern.degree(a))
                ranked.emplace_back(host.degree(c) - pattern.degree(a), c);
        std::sort(ranked.begin(), ranked.end());
        for (auto [gap, c] : ranked) anchor_candidates.push_back(c);
    }

    bool consistent(int pv, int c) const {
        if (host.degree(c) < pattern.degree(pv)) return false;
        for (int w = 0; w < pattern.order(); ++w) {
            if (phi[w] < 0) continue;
            if (host.adjacent(phi[w], c) != pattern.adjacent(w, pv)) return false;
        }
        return true;
    }

    bool place(size_t k) {
        if (k == order.size()) return true;
        int pv = order[k];
        if (k == 0) {
            for (int c : anchor_candidates) {
                if (used[c] || !consistent(pv, c)) continue;
                phi[pv] = c;
                used[c] = 1;
                if (place(k + 1)) return true;
                phi[pv] = -1;
                used[c] = 0;
            }
            return false;
        }
        // Restrict to host neighbors of some placed pattern-neighbor.
        int pinned = -1;
        for (int w : pattern.neighbors(pv))
            if (phi[w] >= 0) {
                pinned = w;
                break;
            }
        if (pinned >= 0) {
            for (int c : host.neighbors(phi[pinned])) {
                if (used[c] || !consistent(pv, c)) continue;
                phi[pv] = c;
                used[c] = 1;
                if (place(k + 1)) return true;
                phi[pv] = -1;
                used[c] = 0;
            }
        } else {  // disconnected pattern: fall back to a full scan
            for (int c = 0; c < host.order(); ++c) {
                if (used[c] || !consistent(pv, c)) continue;
                phi[pv] = c;
                used[c] = 1;
                if (place(k + 1)) return true;
                phi[pv] = -1;
                used[c] = 0;
            }
        }
        return false;
    }
};

}  // namespace

std::optional<std::vector<int>> induced_embedding(const Graph& pattern, const Graph& host) {
    if (pattern.order() > host.order()) return std::nullopt;
    if (pattern.size() > host.size()) return std::nullopt;
    if (pattern.order() == 0) return std::vector<int>{};
    EmbeddingSearch search(pattern, host);
    if (!search.place(0)) return std::nullopt;
    return search.phi;
}

bool contains_induced(const Graph& host, const Graph& pattern) {
    return induced_embedding(pattern, host).has_value();
}

FreenessResult is_free(const Graph& g, const Family& fam) {
    for (size_t k = 0; k < fam.members.size(); ++k) {
        if (auto phi = induced_embedding(fam.members[k], g))
            return {false, FreenessViolation{static_cast<int>(k), -1, std::move(*phi)}};
    }
    if (fam.includes_broom_tail) {
        for (int i = 0;; ++i) {
            FamilySpec spec{FamilyKind::B, {i}};
            if (family_order(spec) > g.order()) break;
            if (auto phi = induced_embedding(generate(spec).graph, g))
                return {false, FreenessViolation{-1, i, std::move(*phi)}};
        }
    }
    return {true, std::nullopt};
}

bool family_leq(const Family& f1, const Family& f2) {
    if (f2.includes_broom_tail)
        throw OpenEndedUnsupported(
            "cannot verify the preorder against an open-ended right-hand family");
    for (const Graph& h2 : f2.members) {
        bool covered = false;
        for (const Graph& h1 : f1.members)
            if (contains_induced(h2, h1)) {
                covered = true;
                break;
            }
        if (!covered && f1.includes_broom_tail) {
            for (int i = 0;; ++i) {
                FamilySpec spec{FamilyKind::B, {i}};
                if (family_order(spec) > h2.order()) break;
                if (contains_induced(h2, generate(spec).graph)) {
                    covered = true;
                    break;
                }
            }
        }
        if (!covered) return false;
    }
    return true;
}

namespace {

// Three pairwise non-adjacent vertices among `cand` (neighbors of a center)?
bool has_independent_triple(const Graph& g, const std::vector<int>& cand) {
    for (size_t a = 0; a < cand.size(); ++a)
        for (size_t b = a + 1; b < cand.size(); ++b) {
            if (g.adjacent(cand[a], cand[b])) continue;
            for (size_t c = b + 1; c < cand.size(); ++c)
                if (!g.adjacent(cand[a], cand[c]) && !g.adjacent(cand[b], cand[c])) return true;
        }
    return false;
}

}  // namespace

VertexSet claw_centers(const Graph& g) {
    VertexSet out(g.order());
    for (int v = 0; v < g.order(); ++v)
        if (has_independent_triple(g, g.neighbors(v))) out.insert(v);
    return out;
}

bool is_claw_free(const Graph& g) {
    for (int v = 0; v < g.order(); ++v)
        if (has_independent_triple(g, g.neighbors(v))) return false;
    return true;
}

bool has_claw_containing(const Graph& g, int v) {
    if (v < 0 || v >= g.order()) throw IndexOutOfRange("vertex out of range");
    // v as the center
    if (has_independent_triple(g, g.neighbors(v))) return true;
    // v as a leaf: center u needs two more leaves avoiding v and each other
    for (int u : g.neighbors(v)) {
        const auto& nb = g.neighbors(u);
        for (size_t a = 0; a < nb.size(); ++a) {
            if (nb[a] == v || g.adjacent(nb[a], v)) continue;
            for (size_t b = a + 1; b < nb.size(); ++b) {
                if (nb[b] == v || g.adjacent(nb[b], v)) continue;
                if (!g.adjacent(nb[a], nb[b])) return true;
            }
        }
    }
    return false;
}

std::vector<int> longest_induced_path(const Graph& g) {
    int n = g.order();
    if (n > 30) throw TooLarge("induced-path search supports up to 30 vertices");
    if (n == 0) return {};
    std::vector<uint32_t> row(n, 0);
    for (int v = 0; v < n; ++v)
        for (int w : g.neighbors(v)) row[v] |= uint32_t(1) << w;
    const uint32_t all = (n == 32) ? ~uint32_t(0) : ((uint32_t(1) << n) - 1);

    std::vector<int> best, seq;
    // alive = vertices neither used nor adjacent to the path interior
    auto dfs = [&](auto&& self, int last, uint32_t alive) -> void {
        if (seq.size() > best.size()) best = seq;
        if (seq.size() + std::popcount(alive) <= best.size()) return;
        uint32_t cand = alive & row[last];
        while (cand) {
            int w = std::countr_zero(cand);
            cand &= cand - 1;
            seq.push_back(w);
            self(self, w, alive & ~row[last] & ~(uint32_t(1) << w));
            seq.pop_back();
        }
    };
    for (int s = 0; s < n; ++s) {
        seq.assign(1, s);
        dfs(dfs, s, all & ~(uint32_t(1) << s));
    }
    return best;
}

// ---------------------------------------------------------------------------
// Canonical forms: iterated degree refinement + individualization, with
// orbit pruning from discovered automorphisms.
// ---------------------------------------------------------------------------

namespace {

constexpr int kCanonCap = 16;

struct SmallGraph {
    int n = 0;
    std::array<uint16_t, kCanonCap> adj{};
};

SmallGraph to_small(const Graph& g) {
    if (g.order() > kCanonCap) throw TooLarge("canonical form supports up to 16 vertices");
    SmallGraph sg;
    sg.n = g.order();
    for (int v = 0; v < sg.n; ++v)
        for (int w : g.neighbors(v)) sg.adj[v] |= uint16_t(1) << w;
    return sg;
}

inline int pair_bit(int i, int j) { return j * (j - 1) / 2 + i; }  // i < j

inline void set_bit(std::array<uint64_t, 2>& a, int k) {
    a[k >> 6] |= uint64_t(1) << (63 - (k & 63));
}

inline bool get_bit(const std::array<uint64_t, 2>& a, int k) {
    return (a[k >> 6] >> (63 - (k & 63))) & 1;
}

std::array<uint64_t, 2> packed_bits(const SmallGraph& sg, const std::array<int8_t, kCanonCap>& relabel) {
    std::array<uint64_t, 2> out{0, 0};
    for (int u = 0; u < sg.n; ++u) {
        uint16_t r = sg.adj[u] >> (u + 1) << (u + 1);  // v > u only
        while (r) {
            int v = std::countr_zero(r);
            r &= r - 1;
            int i = relabel[u], j = relabel[v];
            if (i > j) std::swap(i, j);
            set_bit(out, pair_bit(i, j));
        }
    }
    return out;
}

struct UnionFind {
    std::array<int8_t, kCanonCap> p;
    explicit UnionFind(int n) {
        for (int i = 0; i < n; ++i) p[i] = static_cast<int8_t>(i);
    }
    int find(int x) {
        while (p[x] != x) x = p[x] = p[p[x]];
        return x;
    }
    void unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a != b) p[b] = static_cast<int8_t>(a);
    }
};

class Canonizer {
public:
    explicit Canonizer(const Graph& g) : sg_(to_small(g)) {}

    void run() {
        if (sg_.n == 0) {
            have_ = true;
            return;
        }
        // Initial partition: cells by degree, ascending.
        std::vector<std::pair<int, int>> by_deg;
        for (int v = 0; v < sg_.n; ++v) by_deg.emplace_back(std::popcount(sg_.adj[v]), v);
        std::sort(by_deg.begin(), by_deg.end());
        std::vector<uint16_t> cells;
        for (size_t i = 0; i < by_deg.size();) {
            size_t j = i;
            uint16_t cell = 0;
            while (j < by_deg.size() && by_deg[j].first == by_deg[i].first)
                cell |= uint16_t(1) << by_deg[j++].second;
            cells.push_back(cell);
            i = j;
        }
        search(refine(std::move(cells)));
    }

    CanonSig signature() const { return {sg_.n, best_bits_}; }
    std::vector<int> labeling() const { return {best_perm_.begin(), best_perm_.begin() + sg_.n}; }

private:
    std::vector<uint16_t> refine(std::vector<uint16_t> cells) {
        bool changed = true;
        while (changed) {
            changed = false;
            std::vector<uint16_t> next;
            next.reserve(cells.size());
            for (uint16_t cell : cells) {
                if (std::popcount(cell) <= 1) {
                    next.push_back(cell);
                    continue;
                }
                // Split by the vector of neighbor counts into every cell.
                std::vector<std::pair<std::array<int8_t, kCanonCap>, int>> keyed;
                uint16_t scan = cell;
                while (scan) {
                    int v = std::countr_zero(scan);
                    scan &= scan - 1;
                    std::array<int8_t, kCanonCap> key{};
                    for (size_t c = 0; c < cells.size(); ++c)
                        key[c] = static_cast<int8_t>(std::popcount(uint16_t(sg_.adj[v] & cells[c])));
                    keyed.emplace_back(key, v);
                }
                std::sort(keyed.begin(), keyed.end());
                size_t i = 0;
                size_t groups = 0;
                while (i < keyed.size()) {
                    size_t j = i;
                    uint16_t sub = 0;
                    while (j < keyed.size() && keyed[j].first == keyed[i].first)
                        sub |= uint16_t(1) << keyed[j++].second;
                    next.push_back(sub);
                    ++groups;
                    i = j;
                }
                if (groups > 1) changed = true;
            }
            cells = std::move(next);
        }
        return cells;
    }

    void search(const std::vector<uint16_t>& cells) {
        int target = -1;
        for (size_t c = 0; c < cells.size(); ++c)
            if (std::popcount(cells[c]) > 1) {
                target = static_cast<int>(c);
                break;
            }
        if (target < 0) {
            leaf(cells);
            return;
        }
        // Orbit pruning: among automorphisms fixing the individualized path,
        // equivalent candidates explore identical subtrees.
        UnionFind uf(sg_.n);
        for (const auto& gen : gens_) {
            bool fixes_path = true;
            for (int v : path_)
                if (gen[v] != v) {
                    fixes_path = false;
                    break;
                }
            if (!fixes_path) continue;
            for (int v = 0; v < sg_.n; ++v) uf.unite(v, gen[v]);
        }
        uint16_t done_reps = 0;
        uint16_t scan = cells[target];
        while (scan) {
            int v = std::countr_zero(scan);
            scan &= scan - 1;
            int rep = uf.find(v);
            if ((done_reps >> rep) & 1) continue;
            done_reps |= uint16_t(1) << rep;

            std::vector<uint16_t> split;
            split.reserve(cells.size() + 1);
            for (int c = 0; c < target; ++c) split.push_back(cells[c]);
            split.push_back(uint16_t(1) << v);
            split.push_back(cells[target] & ~(uint16_t(1) << v));
            for (size_t c = target + 1; c < cells.size(); ++c) split.push_back(cells[c]);

            path_.push_back(v);
            search(refine(std::move(split)));
            path_.pop_back();
        }
    }

    void leaf(const std::vector<uint16_t>& cells) {
        std::array<int8_t, kCanonCap> relabel{};
        for (size_t k = 0; k < cells.size(); ++k)
            relabel[std::countr_zero(cells[k])] = static_cast<int8_t>(k);
        auto bits = packed_bits(sg_, relabel);
        if (!have_ || bits < best_bits_) {
            best_bits_ = bits;
            best_perm_ = relabel;
            for (int v = 0; v < sg_.n; ++v) best_inv_[relabel[v]] = static_cast<int8_t>(v);
            have_ = true;
        } else if (bits == best_bits_) {
            // Two labelings with equal images compose to an automorphism.
            std::array<int8_t, kCanonCap> gen{};
            for (int v = 0; v < sg_.n; ++v) gen[v] = best_inv_[relabel[v]];
            gens_.push_back(gen);
        }
    }

    SmallGraph sg_;
    std::array<uint64_t, 2> best_bits_{~uint64_t(0), ~uint64_t(0)};
    std::array<int8_t, kCanonCap> best_perm_{};
    std::array<int8_t, kCanonCap> best_inv_{};
    bool have_ = false;
    std::vector<std::array<int8_t, kCanonCap>> gens_;
    std::vector<int> path_;
};

}  // namespace

CanonSig canonical_signature(const Graph& g) {
    Canonizer c(g);
    c.run();
    return c.signature();
}

std::vector<int> canonical_labeling(const Graph& g) {
    Canonizer c(g);
    c.run();
    return c.labeling();
}

Graph canonical_form(const Graph& g) {
    auto perm = canonical_labeling(g);
    std::vector<Edge> edges;
    edges.reserve(g.size());
    for (auto [u, v] : g.edges()) edges.emplace_back(perm[u], perm[v]);
    return Graph(g.order(), edges);
}

Graph graph_from_signature(const CanonSig& sig) {
    std::vector<Edge> edges;
    for (int j = 1; j < sig.n; ++j)
        for (int i = 0; i < j; ++i)
            if (get_bit(sig.bits, pair_bit(i, j))) edges.emplace_back(i, j);
    return Graph(sig.n, edges);
}

CanonSig canonical_signature_brute(const Graph& g) {
    int n = g.order();
    if (n > 8) throw TooLarge("exhaustive canonical form supports up to 8 vertices");
    auto es = g.edges();
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::array<uint64_t, 2> best{~uint64_t(0), ~uint64_t(0)};
    do {
        std::array<uint64_t, 2> bits{0, 0};
        for (auto [u, v] : es) {
            int i = perm[u], j = perm[v];
            if (i > j) std::swap(i, j);
            set_bit(bits, pair_bit(i, j));
        }
        if (bits < best) best = bits;
    } while (std::next_permutation(perm.begin(), perm.end()));
    if (n == 0) best = {0, 0};
    return {n, best};
}

bool is_isomorphic(const Graph& a, const Graph& b) {
    if (a.order() > 12 || b.order() > 12)
        throw TooLarge("isomorphism test supports up to 12 vertices");
    if (a.order() != b.order() || a.size() != b.size()) return false;
    std::vector<int> da, db;
    for (int v = 0; v < a.order(); ++v) da.push_back(a.degree(v));
    for (int v = 0; v < b.order(); ++v) db.push_back(b.degree(v));
    std::sort(da.begin(), da.end());
    std::sort(db.begin(), db.end());
    if (da != db) return false;
    return canonical_signature(a) == canonical_signature(b);
}

}  // namespace deflab
