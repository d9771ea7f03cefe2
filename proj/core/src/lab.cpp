#include "deflab/lab.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <chrono>
#include <mutex>
#include <random>
#include <thread>
#include <unordered_set>

#include <json.hpp>

#include "deflab/graph6.hpp"
#include "deflab/matching.hpp"

namespace deflab {

namespace {

constexpr int kCacheCap = 9;
constexpr int kFilteredCap = 10;

struct SigHash {
    size_t operator()(const CanonSig& s) const {
        uint64_t h = 1469598103934665603ull;
        auto mix = [&h](uint64_t x) { h = (h ^ x) * 1099511628211ull; };
        mix(static_cast<uint64_t>(s.n));
        mix(s.bits[0]);
        mix(s.bits[1]);
        return static_cast<size_t>(h);
    }
};

// Children of a parent: one new vertex (taking the next label) attached to
// every non-empty subset of the old vertices. Every connected graph arises
// this way from deleting a non-cutting vertex, so level-by-level extension
// with isomorphism dedup enumerates each class exactly once.
template <typename Fn>
void for_each_child(const Graph& parent, Fn&& fn) {
    const int n = parent.order();
    const std::vector<Edge> base = parent.edges();
    for (uint32_t mask = 1; mask < (uint32_t(1) << n); ++mask) {
        std::vector<Edge> edges = base;
        for (uint32_t bits = mask; bits;) {
            int v = std::countr_zero(bits);
            bits &= bits - 1;
            edges.emplace_back(v, n);
        }
        fn(Graph(n + 1, edges));
    }
}

std::mutex g_levels_mutex;

std::vector<std::shared_ptr<const std::vector<CanonSig>>>& level_cache() {
    static std::vector<std::shared_ptr<const std::vector<CanonSig>>> cache(kCacheCap + 1);
    return cache;
}

std::shared_ptr<const std::vector<CanonSig>> level_sigs(int n) {
    std::lock_guard lk(g_levels_mutex);
    auto& cache = level_cache();
    for (int k = 1; k <= n; ++k) {
        if (cache[k]) continue;
        std::vector<CanonSig> sigs;
        if (k == 1) {
            sigs.push_back(canonical_signature(Graph(1, {})));
        } else {
            std::unordered_set<CanonSig, SigHash> seen;
            for (const CanonSig& psig : *cache[k - 1]) {
                Graph parent = graph_from_signature(psig);
                for_each_child(parent,
                               [&](const Graph& child) { seen.insert(canonical_signature(child)); });
            }
            sigs.assign(seen.begin(), seen.end());
            std::sort(sigs.begin(), sigs.end());
        }
        cache[k] = std::make_shared<const std::vector<CanonSig>>(std::move(sigs));
    }
    return cache[n];
}

std::vector<CanonSig> filtered_level(int n, const std::function<bool(const Graph&)>& filter) {
    std::vector<CanonSig> cur;
    Graph single(1, {});
    if (filter(single)) cur.push_back(canonical_signature(single));
    for (int k = 2; k <= n; ++k) {
        std::unordered_set<CanonSig, SigHash> seen;
        for (const CanonSig& psig : cur) {
            Graph parent = graph_from_signature(psig);
            for_each_child(parent, [&](const Graph& child) {
                if (filter(child)) seen.insert(canonical_signature(child));
            });
        }
        cur.assign(seen.begin(), seen.end());
        std::sort(cur.begin(), cur.end());
    }
    return cur;
}

}  // namespace

size_t EnumerationStream::count() const { return sigs_->size(); }

bool EnumerationStream::next(Graph& out) {
    if (idx_ >= sigs_->size()) return false;
    out = graph_from_signature((*sigs_)[idx_++]);
    return true;
}

EnumerationStream enumerate_connected(int n) {
    if (n < 1) throw BadParams("enumeration order must be >= 1");
    if (n > kCacheCap)
        throw TooLarge("connected enumeration supports 1 <= n <= " + std::to_string(kCacheCap));
    return EnumerationStream(n, level_sigs(n));
}

EnumerationStream enumerate_connected_where(int n,
                                            const std::function<bool(const Graph&)>& filter) {
    if (n < 1) throw BadParams("enumeration order must be >= 1");
    if (n > kFilteredCap)
        throw TooLarge("filtered enumeration supports 1 <= n <= " + std::to_string(kFilteredCap));
    return EnumerationStream(
        n, std::make_shared<const std::vector<CanonSig>>(filtered_level(n, filter)));
}

std::vector<CanonSig> enumerate_connected_brute(int n) {
    if (n < 1) throw BadParams("enumeration order must be >= 1");
    if (n > 6) throw TooLarge("brute enumeration supports 1 <= n <= 6");
    const int pairs = n * (n - 1) / 2;
    std::vector<Edge> all;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i) all.emplace_back(i, j);
    std::unordered_set<CanonSig, SigHash> seen;
    for (uint32_t mask = 0; mask < (uint32_t(1) << pairs); ++mask) {
        std::vector<Edge> edges;
        for (int b = 0; b < pairs; ++b)
            if ((mask >> b) & 1) edges.push_back(all[b]);
        Graph g(n, edges);
        if (!g.connected()) continue;
        seen.insert(canonical_signature_brute(g));
    }
    std::vector<CanonSig> out(seen.begin(), seen.end());
    std::sort(out.begin(), out.end());
    return out;
}

std::string ExperimentReport::to_json() const {
    nlohmann::json j;
    j["predicate"] = predicate;
    j["instances_checked"] = instances_checked;
    j["failures"] = failures;
    j["wall_seconds"] = wall_seconds;
    j["passed"] = passed();
    return j.dump();
}

void parallel_for(long long count, int jobs, const std::function<void(long long)>& fn) {
    jobs = std::max(1, jobs);
    if (jobs == 1 || count <= 1) {
        for (long long i = 0; i < count; ++i) fn(i);
        return;
    }
    std::atomic<long long> next{0};
    std::vector<std::thread> workers;
    workers.reserve(jobs);
    for (int t = 0; t < jobs; ++t)
        workers.emplace_back([&] {
            for (;;) {
                long long i = next.fetch_add(1, std::memory_order_relaxed);
                if (i >= count) break;
                fn(i);
            }
        });
    for (auto& w : workers) w.join();
}

namespace {

// Deterministic scan of one signature list: slot-indexed results, merged in
// order regardless of thread interleaving.
void scan_sigs(const std::vector<CanonSig>& sigs, const Family& fam, int bound, int jobs,
               long long& instances, std::vector<std::string>& failures) {
    const long long count = static_cast<long long>(sigs.size());
    std::vector<char> counted(count, 0);
    std::vector<std::string> bad(count);
    parallel_for(count, jobs, [&](long long i) {
        Graph g = graph_from_signature(sigs[i]);
        if (!is_free(g, fam).free) return;
        counted[i] = 1;
        if (deficiency(g) > bound) bad[i] = encode_graph6(g);
    });
    for (long long i = 0; i < count; ++i) {
        instances += counted[i];
        if (!bad[i].empty()) failures.push_back(std::move(bad[i]));
    }
}

std::string family_label(const Family& fam) {
    std::string s = std::to_string(fam.members.size()) + " forbidden member" +
                    (fam.members.size() == 1 ? "" : "s");
    if (fam.includes_broom_tail) s += " plus the double-broom tail";
    return s;
}

}  // namespace

ExperimentReport exhaustive_check(const Family& fam, int bound, int max_n, int jobs) {
    if (max_n < 1) throw BadParams("exhaustive check needs max_n >= 1");
    if (max_n > kCacheCap)
        throw TooLarge("exhaustive check supports 1 <= max_n <= " + std::to_string(kCacheCap));
    auto t0 = std::chrono::steady_clock::now();
    ExperimentReport rep;
    rep.predicate = "deficiency <= " + std::to_string(bound) + " for every connected graph with <= " +
                    std::to_string(max_n) + " vertices avoiding " + family_label(fam);
    for (int n = 1; n <= max_n; ++n)
        scan_sigs(*level_sigs(n), fam, bound, jobs, rep.instances_checked, rep.failures);
    rep.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return rep;
}

ExperimentReport exhaustive_check_graphs(std::span<const Graph> graphs, const Family& fam,
                                         int bound, int jobs) {
    auto t0 = std::chrono::steady_clock::now();
    ExperimentReport rep;
    rep.predicate = "deficiency <= " + std::to_string(bound) + " for " +
                    std::to_string(graphs.size()) + " supplied graphs avoiding " +
                    family_label(fam);
    const long long count = static_cast<long long>(graphs.size());
    std::vector<char> counted(count, 0);
    std::vector<std::string> bad(count);
    parallel_for(count, jobs, [&](long long i) {
        const Graph& g = graphs[i];
        if (!is_free(g, fam).free) return;
        counted[i] = 1;
        if (deficiency(g) > bound) bad[i] = encode_graph6(g);
    });
    for (long long i = 0; i < count; ++i) {
        rep.instances_checked += counted[i];
        if (!bad[i].empty()) rep.failures.push_back(std::move(bad[i]));
    }
    rep.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return rep;
}

std::optional<Graph> falsify_search(const Family& fam, int d, long long budget, uint64_t seed) {
    if (d < 0) throw BadParams("target deficiency must be >= 0");
    long long used = 0;
    auto free_of_fam = [&fam](const Graph& g) { return is_free(g, fam).free; };

    // Exhaustive phase: every small fam-free class, in enumeration order.
    std::vector<CanonSig> cur;
    {
        Graph single(1, {});
        if (free_of_fam(single)) cur.push_back(canonical_signature(single));
    }
    for (int n = 1; n <= kCacheCap && used < budget; ++n) {
        if (n > 1) {
            std::unordered_set<CanonSig, SigHash> seen;
            for (const CanonSig& psig : cur) {
                Graph parent = graph_from_signature(psig);
                for_each_child(parent, [&](const Graph& child) {
                    if (free_of_fam(child)) seen.insert(canonical_signature(child));
                });
            }
            cur.assign(seen.begin(), seen.end());
            std::sort(cur.begin(), cur.end());
        }
        for (const CanonSig& sig : cur) {
            if (used >= budget) return std::nullopt;
            ++used;
            Graph g = graph_from_signature(sig);
            if (deficiency(g) >= d) return g;
        }
    }

    // Random phase: seeded growth, violations repaired by deleting an edge
    // inside the witness embedding.
    std::mt19937_64 rng(seed);
    while (used < budget) {
        ++used;
        const int n = 10 + static_cast<int>(rng() % 9);
        std::vector<Edge> edges;
        for (int v = 1; v < n; ++v) edges.emplace_back(static_cast<int>(rng() % v), v);
        const int extra = static_cast<int>(rng() % static_cast<uint64_t>(n));
        for (int k = 0; k < extra; ++k) {
            int u = static_cast<int>(rng() % n);
            int v = static_cast<int>(rng() % n);
            if (u != v) edges.emplace_back(std::min(u, v), std::max(u, v));
        }
        Graph g(n, edges);
        bool gave_up = false;
        for (int round = 0;; ++round) {
            FreenessResult res = is_free(g, fam);
            if (res.free) break;
            if (round >= 4 * n) {
                gave_up = true;
                break;
            }
            const std::vector<int>& emb = res.violation->embedding;
            std::vector<Edge> inside;
            for (size_t a = 0; a < emb.size(); ++a)
                for (size_t b = a + 1; b < emb.size(); ++b)
                    if (g.adjacent(emb[a], emb[b]))
                        inside.emplace_back(std::min(emb[a], emb[b]), std::max(emb[a], emb[b]));
            if (inside.empty()) {  // the pattern has no edges; deletion cannot help
                gave_up = true;
                break;
            }
            const Edge kill = inside[rng() % inside.size()];
            std::vector<Edge> kept;
            for (const Edge& e : g.edges())
                if (e != kill) kept.push_back(e);
            g = Graph(n, kept);
        }
        if (gave_up || !g.connected()) continue;
        if (deficiency(g) >= d) return g;
    }
    return std::nullopt;
}

}  // namespace deflab
