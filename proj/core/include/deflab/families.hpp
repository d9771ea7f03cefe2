#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "deflab/graph.hpp"

namespace deflab {

// Named graph constructions. Parameter conventions:
//   Path(n), Cycle(n), Complete(n), Empty(n): n vertices.
//   CompleteBipartite(a,b): parts of sizes a and b.
//   Star(n): K_{1,n} — one center and n leaves (n+1 vertices).
//   F1(n): odd path P_{2n+1} with one extra leaf at its center.
//   F2(n): triangle with a path P_n attached at each vertex.
//   F3(n): 4-cycle with a path P_n attached at two non-adjacent vertices.
//   F4(n): F3(n) plus the chord between the two attachment vertices.
//   T(n): path P_n with two extra leaves at one end (a spider; T(1) = P_3).
//   B(i): T(i+2) with two further leaves at its far end (a double broom).
//   FrakK(n,p): complete graph K_n with a copy of T(p) end-identified at
//     every vertex.
//   FrakF(n,p): triangle with T(p) at one vertex and P_n at the other two.
//   H1(s,t): s+1 disjoint paths of t vertices each; consecutive paths are
//     joined by a connector v_i adjacent to both facing path ends, and each
//     v_i carries a pendant leaf w_i.
//   H3(s,t): s+1 disjoint paths of t vertices each; consecutive paths are
//     joined by two independent connectors v_i, w_i, each adjacent to both
//     facing path ends; pendants x and y hang off the first path's start and
//     the last path's end.
//   H4(s,t): H3(s,t) plus the direct edge between facing path ends.
//   FrakH(s,t,p): s+1 disjoint paths of length t chained by triangles whose
//     apexes carry T(p) tails.
enum class FamilyKind {
    Path,
    Cycle,
    Complete,
    Empty,
    CompleteBipartite,
    Star,
    F1,
    F2,
    F3,
    F4,
    T,
    B,
    FrakK,
    FrakF,
    H1,
    H3,
    H4,
    FrakH,
};

struct FamilySpec {
    FamilyKind kind;
    std::vector<int> params;

    bool operator==(const FamilySpec&) const = default;
};

// Throws BadParams unless the parameter list matches the kind's arity and
// ranges: Path/Complete/Empty/Star n >= 1, Cycle n >= 3, CompleteBipartite
// a,b >= 1, F1..F4 n >= 1, T n >= 1, B i >= 0, FrakK/FrakF n >= 1 and p >= 1,
// H1/H3/H4 s >= 0 and t >= 1, FrakH s >= 0, t >= 1, p >= 1.
void validate(const FamilySpec& spec);

// "kind(p1,p2,...)" with case-insensitive kind names, e.g. "frakK(4,2)",
// "star(6)", "H3(2,5)". Throws BadParams on anything else.
FamilySpec parse_family_spec(std::string_view text);
std::string to_string(const FamilySpec& spec);

// Order of generate(spec).graph, from the closed-form counts.
int family_order(const FamilySpec& spec);

struct GeneratedGraph {
    Graph graph;
    // Named construction vertices: path spines as "u<i>_<j>", connector
    // vertices "v<i>"/"w<i>", pendant ends "x"/"y", spider centers "branch",
    // path ends "end", clique vertices "k<i>". Exact keys per kind are
    // documented with the generator implementation.
    std::map<std::string, int> landmarks;
};

// Deterministic: equal specs produce identical labeled graphs.
GeneratedGraph generate(const FamilySpec& spec);

// Closed-form deficiency when one is known. Kinds F1..F4, T, B, FrakF have
// no stated formula and return nullopt ("unknown") by design; callers must
// compute those via the matching module when needed.
std::optional<int> predicted_deficiency(const FamilySpec& spec);

enum class CharacterizationVariant { A, B };

// The forbidden-family catalogs attached to even n >= 4:
//   A: { Star(n), T(n) } with FrakK(n,p) for 1 <= p <= n/2 - 1.
//   B: { Star(n), F1(n)..F4(n) } with FrakF(n,p) and FrakK(n,p) for
//      1 <= p <= n-2.
std::vector<FamilySpec> characterization_family(CharacterizationVariant variant, int n);

// Specs with predicted deficiency exceeding c while avoiding all forbidden
// graphs of order <= h: FrakH(s,t,p) and H1/H3/H4(s,t) with s = c+1,
// p = h+1, t = the smallest odd integer > h.
std::vector<FamilySpec> witness_graphs(int c, int h);

}  // namespace deflab
