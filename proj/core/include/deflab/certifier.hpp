#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <optional>
#include <string>
#include <vector>

#include "deflab/graph.hpp"
#include "deflab/matching.hpp"
#include "deflab/subgraph.hpp"

namespace deflab {

using BigInt = boost::multiprecision::cpp_int;

// ---------------------------------------------------------------------------
// Ramsey-driven deficiency bound
// ---------------------------------------------------------------------------

// Upper bounds on Ramsey numbers R(m,n): a table of classically known exact
// values, with the binomial bound C(m+n-2, m-1) everywhere else.
class RamseyBounder {
public:
    BigInt ramsey(int m, int n) const;  // throws BadParams if m,n < 1
    BigInt ramsey(int m, const BigInt& n) const;             // huge second argument
    static std::optional<long> exact_value(int m, int n);    // table lookup only
    static BigInt binomial_bound(int m, int n);
    static BigInt binomial_bound(int m, const BigInt& n);
};

// The recursive deficiency bound for connected graphs with no induced star
// K_{1,n} and bounded diameter N:
//   alpha_1 = n, beta_i = R(n, alpha_i), alpha_{i+1} = (n-2)(beta_i - 1) + 1,
//   f(n,N)  = n - 2 + (n-3) * sum_{i=1}^{N-1} (beta_i - 1).
// Grows through iterated Ramsey bounds, hence the big-integer result.
BigInt f_bound(int n, int N, const RamseyBounder& bounder = {});  // n >= 4, N >= 1

// ---------------------------------------------------------------------------
// Certifier reports
// ---------------------------------------------------------------------------

// One checked proof step: named claim, whether it held, and a short witness
// string (offending vertices or sizes) when it did not.
struct ClaimRecord {
    std::string name;
    bool pass = true;
    std::string witness;
};

// Outcome of a constructive matching procedure: the matching it built, the
// vertices it missed, the bound it claims on the miss count, and the per-step
// claim checks. When the input failed the procedure's freeness precondition,
// precondition_ok is false and the violation is carried alongside.
struct CertReport {
    Matching matching;
    VertexSet missed;
    BigInt claimed_bound;
    std::vector<ClaimRecord> assertions;
    bool precondition_ok = true;
    std::optional<FreenessViolation> precondition_witness;

    bool all_claims_pass() const;
    bool ok() const { return precondition_ok && all_claims_pass(); }
    std::string to_json() const;
};

// ---------------------------------------------------------------------------
// Induced matchings in bipartite graphs with a large side
// ---------------------------------------------------------------------------

struct BipartiteInstance {
    Graph graph;
    VertexSet left;   // the large side X
    VertexSet right;  // the dominating side Y
};

// Builds an induced matching of size >= p in a bipartite graph (parts x, y)
// with min degree >= 1 on x, max degree <= n on y, and |x| >= n(p-1)+1:
// shrink y to an irredundant dominating set of x, then match p of its members
// to private neighbors. Throws PreconditionViolated naming the failed
// hypothesis otherwise.
Matching lemma6_induced_matching(const Graph& g, const VertexSet& x, const VertexSet& y,
                                 int n, int p);

// The extremal instance showing |x| = n(p-1)+1 cannot be lowered: p-1
// disjoint stars K_{1,n} with centers on the y side; its maximum induced
// matching is exactly p-1.
BipartiteInstance lemma6_tight_instance(int n, int p);  // n >= 1, p >= 2

// ---------------------------------------------------------------------------
// Constructive matching procedures
// ---------------------------------------------------------------------------

// The forbidden family each procedure assumes absent, materialized for a host
// of the given order (open-ended parameters capped by what can embed).
Family diameter_procedure_family(int n, int host_order);
Family structured_procedure_family(int n, int host_order);

// Level-by-level matching from breadth-first layers rooted at vertex 0:
// within each layer a maximum matching, across consecutive layers a
// connectivity-preserving maximal matching, then an induced matching saturating
// the neighbors of still-unmatched vertices. Requires g connected (throws
// Disconnected) and n >= 4 (throws BadParams). The freeness precondition
// ({K_{1,n}} plus every fitting FrakK(n,p)) is checked, not assumed: on
// violation the report carries precondition_ok = false plus the witness, and
// the procedure still runs so its claim checks can be inspected.
// claimed_bound = f_bound(n, max(1, diameter)).
CertReport bounded_diameter_matching(const Graph& g, int n);

// Decomposition along a longest induced path: when the path is shorter than
// n^2 - n - 1 the graph has small diameter and the level procedure above is
// delegated to; otherwise the graph splits into path-interior layers (matched
// near-perfectly through a reduced connector graph) and two path-end regions
// (handled by the level procedure per component).
// Requires g connected (throws Disconnected), even n >= 4 (throws BadParams),
// and g free of {K_{1,n}, F1(n), F3(n), F4(n)} plus every fitting FrakF(n,p)
// and FrakK(n,p) — violation throws PreconditionViolated.
// claimed_bound = 1 + 2 * f_bound(n, 3n) on the full decomposition.
CertReport structured_matching(const Graph& g, int n);

// ---------------------------------------------------------------------------
// Two-element forbidden-family classifier
// ---------------------------------------------------------------------------

// Decides whether an unordered pair of connected graphs is one of the pairs
// {K_{1,s}, T(3)} or {K_{1,s}, P4} with 4 <= s <= d+1 — exactly the
// two-element families whose freeness bounds deficiency below d minimally.
struct PairVerdict {
    enum class Reason { None, Shape, StarRange };
    bool member = false;
    int s = 0;  // star size when the pair contains a star K_{1,s} with s >= 1
    Reason reason = Reason::None;

    std::string describe() const;
};
PairVerdict pair_classify(const Graph& h1, const Graph& h2, int d);  // d >= 3; orders <= 12

}  // namespace deflab
