#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "deflab/graph.hpp"

namespace deflab {

// ---------------------------------------------------------------------------
// Induced-subgraph search
// ---------------------------------------------------------------------------

// Injective map phi: V(pattern) -> V(host) such that pattern has edge (u,v)
// iff host has edge (phi(u),phi(v)). Returns phi indexed by pattern vertex,
// or nullopt when no such occurrence exists. Exhaustive backtracking over
// degree-compatible candidates with bitset pruning; deterministic (first
// witness in the search order).
std::optional<std::vector<int>> induced_embedding(const Graph& pattern, const Graph& host);

bool contains_induced(const Graph& host, const Graph& pattern);

// A finite list of forbidden graphs, optionally extended by the open-ended
// tail of broom graphs broom(i) for all i >= 0 (each fitting instance is
// materialized on demand; larger ones cannot embed).
struct Family {
    std::vector<Graph> members;
    bool includes_broom_tail = false;
};

struct FreenessViolation {
    int member_index;            // index into members, or -1 for a broom-tail graph
    int broom_index;             // the broom parameter i when member_index == -1
    std::vector<int> embedding;  // host vertices, indexed by pattern vertex
};

struct FreenessResult {
    bool free;
    std::optional<FreenessViolation> violation;
};

// True iff no family member (nor any fitting broom, when the tail is on)
// occurs in g as an induced subgraph; otherwise carries a witness embedding.
FreenessResult is_free(const Graph& g, const Family& fam);

// Preorder on families: f1 <= f2 iff every member of f2 induced-contains some
// member of f1. The broom tail on the f1 side is materialized up to each
// f2-member's order; on the f2 side it is undecidable by finite search.
bool family_leq(const Family& f1, const Family& f2);  // throws OpenEndedUnsupported

// Centers of induced claws: vertices whose neighborhood contains three
// pairwise non-adjacent vertices. Empty iff g is claw-free.
VertexSet claw_centers(const Graph& g);
bool is_claw_free(const Graph& g);

// True iff some induced claw of g uses vertex v (as its center or a leaf).
// Lets incremental filters re-check only the newest vertex.
bool has_claw_containing(const Graph& g, int v);

// Longest induced path as a vertex sequence; exact branch-and-bound, rejects
// orders above 30. Among maximum-length paths returns the lexicographically
// smallest vertex sequence.
std::vector<int> longest_induced_path(const Graph& g);  // throws TooLarge

// ---------------------------------------------------------------------------
// Isomorphism and canonical forms
// ---------------------------------------------------------------------------

// Canonical signature for graphs of order <= 16: the lexicographically
// smallest packed upper-triangle bitstring over the relabelings admitted by
// iterated degree refinement. Signatures of equal-order graphs compare equal
// iff the graphs are isomorphic.
struct CanonSig {
    int32_t n = 0;
    std::array<uint64_t, 2> bits{0, 0};

    auto operator<=>(const CanonSig&) const = default;
};
CanonSig canonical_signature(const Graph& g);  // throws TooLarge past 16

// Rebuild a graph from its signature (inverse of canonical_signature up to
// isomorphism; the result is already canonically labeled).
Graph graph_from_signature(const CanonSig& sig);

// The relabeling realizing the signature: perm[old] = new.
std::vector<int> canonical_labeling(const Graph& g);

Graph canonical_form(const Graph& g);

// Exhaustive minimum over all n! relabelings; cross-check oracle (order <= 8).
CanonSig canonical_signature_brute(const Graph& g);

// Isomorphism via canonical signatures; rejects orders above 12.
bool is_isomorphic(const Graph& a, const Graph& b);  // throws TooLarge

}  // namespace deflab
