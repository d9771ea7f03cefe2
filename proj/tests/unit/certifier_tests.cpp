#include <doctest.h>

#include <json.hpp>
#include <random>
#include <string>

#include "deflab/certifier.hpp"
#include "deflab/errors.hpp"
#include "deflab/families.hpp"
#include "deflab/graph.hpp"
#include "deflab/matching.hpp"
#include "deflab/subgraph.hpp"

using namespace deflab;

namespace {

Graph gen(const char* spec) { return generate(parse_family_spec(spec)).graph; }

std::string big_str(const BigInt& b) { return b.str(); }

bool edges_between(const Graph& g, const Matching& m, const VertexSet& x,
                   const VertexSet& y) {
    for (auto [u, v] : m.edges()) {
        bool ok = (x.contains(u) && y.contains(v)) || (x.contains(v) && y.contains(u));
        if (!ok) return false;
    }
    return true;
}

}  // namespace

TEST_SUITE("certifier") {

TEST_CASE("ramsey table and binomial fallback") {
    RamseyBounder r;
    CHECK(RamseyBounder::exact_value(3, 3) == 6);
    CHECK(RamseyBounder::exact_value(3, 5) == 14);
    CHECK(RamseyBounder::exact_value(4, 4) == 18);
    CHECK(RamseyBounder::exact_value(4, 5) == 25);
    CHECK_FALSE(RamseyBounder::exact_value(4, 6).has_value());
    CHECK(r.ramsey(1, 9) == 1);
    CHECK(r.ramsey(9, 1) == 1);
    CHECK(r.ramsey(2, 7) == 7);
    CHECK(r.ramsey(5, 3) == 14);  // symmetric table lookup
    CHECK(r.ramsey(4, 6) == RamseyBounder::binomial_bound(4, 6));
    CHECK(RamseyBounder::binomial_bound(4, 6) == 56);   // C(8,3)
    CHECK(RamseyBounder::binomial_bound(3, 7) == 28);   // C(8,2)
    CHECK(r.ramsey(4, BigInt(35)) == 7770);             // C(37,3)
    CHECK_THROWS_AS(r.ramsey(0, 3), BadParams);
    CHECK_THROWS_AS(r.ramsey(3, 0), BadParams);

    // Monotone in each argument over a small window.
    for (int m = 1; m <= 5; ++m)
        for (int n = 1; n <= 9; ++n) {
            CHECK(r.ramsey(m, n) <= r.ramsey(m, n + 1));
            CHECK(r.ramsey(m, n) <= r.ramsey(m + 1, n));
        }
}

TEST_CASE("deficiency bound reference values") {
    CHECK(f_bound(4, 1) == 2);
    CHECK(f_bound(4, 2) == 19);
    CHECK(f_bound(4, 3) == 7788);
    CHECK(big_str(f_bound(4, 4)) == "625463249197");
    CHECK(f_bound(5, 2) == 141);
    CHECK(f_bound(6, 2) == 757);
    CHECK(big_str(f_bound(5, 4)) == "280094310256959963012141806062287");
    CHECK(f_bound(5, 1) == 3);
    CHECK(f_bound(7, 1) == 5);
}

TEST_CASE("deficiency bound growth and guards") {
    for (int n = 4; n <= 6; ++n)
        for (int N = 1; N <= 5; ++N) CHECK(f_bound(n, N) < f_bound(n, N + 1));
    CHECK_THROWS_AS(f_bound(3, 2), BadParams);
    CHECK_THROWS_AS(f_bound(4, 0), BadParams);
    CHECK_THROWS_AS(f_bound(2000001, 2), TooLarge);
}

TEST_CASE("induced matching construction on tight instances") {
    for (auto [n, p] : {std::pair{2, 3}, {3, 4}, {1, 2}}) {
        BipartiteInstance inst = lemma6_tight_instance(n, p);
        CHECK(inst.left.count() == n * (p - 1));
        CHECK(max_induced_matching_brute(inst.graph) == p - 1);

        Matching m = lemma6_induced_matching(inst.graph, inst.left, inst.right, n, p - 1);
        CHECK(verify_matching(inst.graph, m));
        CHECK(is_induced_matching(inst.graph, m));
        CHECK(m.size() >= p - 1);
        CHECK(edges_between(inst.graph, m, inst.left, inst.right));

        // One unit above the tight size the |X| hypothesis fails by exactly one.
        CHECK_THROWS_AS(
            lemma6_induced_matching(inst.graph, inst.left, inst.right, n, p),
            PreconditionViolated);
    }
    CHECK_THROWS_AS(lemma6_tight_instance(2, 1), BadParams);
}

TEST_CASE("induced matching construction on random valid instances") {
    std::mt19937 rng(131);
    for (int trial = 0; trial < 60; ++trial) {
        int n = 1 + static_cast<int>(rng() % 3);
        int p = 2 + static_cast<int>(rng() % 3);
        int nx = n * (p - 1) + 1 + static_cast<int>(rng() % 4);
        int ny = nx;  // plenty of room on the dominating side
        int total = nx + ny;
        std::vector<Edge> edges;
        std::vector<int> ydeg(ny, 0);
        // Give every x-vertex one neighbor, respecting the y-degree cap.
        for (int xi = 0; xi < nx; ++xi) {
            int tries = 0;
            while (tries++ < 200) {
                int yi = static_cast<int>(rng() % ny);
                if (ydeg[yi] < n) {
                    edges.emplace_back(xi, nx + yi);
                    ++ydeg[yi];
                    break;
                }
            }
        }
        // A few extra edges while capacity lasts.
        for (int extra = 0; extra < nx; ++extra) {
            int xi = static_cast<int>(rng() % nx);
            int yi = static_cast<int>(rng() % ny);
            if (ydeg[yi] < n) {
                edges.emplace_back(xi, nx + yi);
                ++ydeg[yi];
            }
        }
        Graph g(total, edges);
        VertexSet x(total), y(total);
        for (int i = 0; i < nx; ++i) x.insert(i);
        for (int i = 0; i < ny; ++i) y.insert(nx + i);

        Matching m = lemma6_induced_matching(g, x, y, n, p);
        CHECK(verify_matching(g, m));
        CHECK(is_induced_matching(g, m));
        CHECK(m.size() >= p);
        CHECK(edges_between(g, m, x, y));
        if (g.size() <= 24) CHECK(max_induced_matching_brute(g) >= p);
    }
}

TEST_CASE("induced matching hypotheses are named on violation") {
    // x-vertex with degree 0.
    Graph g1 = build_graph(4, {{1, 2}});
    VertexSet x1 = VertexSet::of(4, {0, 1}), y1 = VertexSet::of(4, {2, 3});
    CHECK_THROWS_WITH_AS(lemma6_induced_matching(g1, x1, y1, 1, 1),
                         doctest::Contains("degree"), PreconditionViolated);

    // y-vertex exceeding the degree cap.
    Graph g2 = build_graph(4, {{0, 3}, {1, 3}, {2, 3}});
    VertexSet x2 = VertexSet::of(4, {0, 1, 2}), y2 = VertexSet::of(4, {3});
    CHECK_THROWS_AS(lemma6_induced_matching(g2, x2, y2, 2, 2), PreconditionViolated);

    // |x| below the threshold names the counts.
    BipartiteInstance t = lemma6_tight_instance(3, 4);
    CHECK_THROWS_WITH_AS(lemma6_induced_matching(t.graph, t.left, t.right, 3, 4),
                         doctest::Contains("have 9, need 10"), PreconditionViolated);
}

TEST_CASE("procedure freeness families scale with the host") {
    Family d12 = diameter_procedure_family(4, 12);
    Family d11 = diameter_procedure_family(4, 11);
    CHECK(d12.members.size() == 2);  // star(4) and frakK(4,1) fits at 12
    CHECK(d11.members.size() == 1);  // only the star fits below 12
    CHECK(is_isomorphic(d11.members[0], gen("star(4)")));
    CHECK(is_isomorphic(d12.members[1], gen("frakK(4,1)")));

    Family s18 = structured_procedure_family(4, 18);
    CHECK(s18.members.size() >= 4);
    int found = 0;
    for (const auto& m : s18.members)
        for (const char* want : {"star(4)", "F1(4)", "F3(4)", "F4(4)"})
            if (m.order() <= 10 && is_isomorphic(m, gen(want))) ++found;
    CHECK(found == 4);
    for (const auto& m : s18.members) CHECK(m.order() <= 18);
    // Smaller hosts carry fewer members.
    CHECK(structured_procedure_family(4, 11).members.size() <= s18.members.size());
}

TEST_CASE("level matching on reference graphs") {
    CertReport c8 = bounded_diameter_matching(gen("cycle(8)"), 4);
    CHECK(c8.precondition_ok);
    CHECK(c8.all_claims_pass());
    CHECK(c8.ok());
    CHECK(c8.missed.empty());
    CHECK(verify_matching(gen("cycle(8)"), c8.matching));
    CHECK(c8.claimed_bound == f_bound(4, 4));

    CertReport claw = bounded_diameter_matching(gen("star(3)"), 4);
    CHECK(claw.ok());
    CHECK(claw.missed.members() == std::vector<int>{2, 3});
    CHECK(claw.claimed_bound == f_bound(4, 2));

    // Missed counts stay consistent with the true deficiency and the bound.
    for (const char* spec : {"cycle(9)", "path(11)", "frakF(3,2)", "H3(1,3)", "T(6)"}) {
        Graph g = gen(spec);
        CertReport r = bounded_diameter_matching(g, 4);
        CHECK(r.precondition_ok);
        CHECK(r.all_claims_pass());
        CHECK(verify_matching(g, r.matching));
        CHECK(r.missed.count() >= deficiency(g));
        CHECK(BigInt(r.missed.count()) <= r.claimed_bound);
    }
}

TEST_CASE("level matching flags precondition violations instead of lying") {
    CertReport r = bounded_diameter_matching(gen("star(5)"), 4);  // contains star(4)
    CHECK_FALSE(r.precondition_ok);
    REQUIRE(r.precondition_witness.has_value());
    CHECK_FALSE(r.ok());
    CHECK(verify_matching(gen("star(5)"), r.matching));  // it still runs honestly

    CHECK_THROWS_AS(bounded_diameter_matching(gen("path(4)"), 3), BadParams);
    CHECK_THROWS_AS(bounded_diameter_matching(gen("empty(4)"), 4), Disconnected);
}

TEST_CASE("path decomposition matching on reference graphs") {
    // Long cycle: the longest induced path spans nearly everything.
    Graph c25 = gen("cycle(25)");
    CertReport r = structured_matching(c25, 4);
    CHECK(r.precondition_ok);
    CHECK(r.all_claims_pass());
    CHECK(verify_matching(c25, r.matching));
    CHECK(r.missed.count() == 1);
    CHECK(r.claimed_bound == 1 + 2 * f_bound(4, 12));

    Graph p20 = gen("path(20)");
    CertReport rp = structured_matching(p20, 4);
    CHECK(rp.ok());
    CHECK(rp.missed.count() == 0);

    // Short longest-induced-path inputs delegate to the level procedure.
    Graph c8 = gen("cycle(8)");
    CertReport del = structured_matching(c8, 4);
    CHECK(del.ok());
    REQUIRE(!del.assertions.empty());
    CHECK(del.assertions.front().name.find("delegated") != std::string::npos);
    CHECK(del.claimed_bound == f_bound(4, 4));
}

TEST_CASE("path decomposition enforces its preconditions") {
    CHECK_THROWS_WITH_AS(structured_matching(gen("frakK(4,1)"), 4),
                         doctest::Contains("frakK(4,1)"), PreconditionViolated);
    CHECK_THROWS_AS(structured_matching(gen("star(4)"), 4), PreconditionViolated);
    CHECK_THROWS_AS(structured_matching(gen("cycle(8)"), 5), BadParams);  // odd n
    CHECK_THROWS_AS(structured_matching(gen("cycle(8)"), 2), BadParams);
    CHECK_THROWS_AS(structured_matching(build_graph(3, {{0, 1}}), 4), Disconnected);
}

TEST_CASE("reports serialize to parseable JSON") {
    CertReport r = bounded_diameter_matching(gen("cycle(9)"), 4);
    nlohmann::json j = nlohmann::json::parse(r.to_json());
    CHECK(j["precondition_ok"].get<bool>());
    CHECK(j["all_claims_pass"].get<bool>());
    CHECK(j["missed"].is_array());
    CHECK(j["missed"].size() == 1);
    CHECK(j["matching"].is_array());
    CHECK(j["assertions"].is_array());
    CHECK(!j["assertions"].empty());
    CHECK(j["claimed_bound"].is_string());
    CHECK(j["claimed_bound"].get<std::string>() == f_bound(4, 4).str());
    for (const auto& a : j["assertions"]) {
        CHECK(a.contains("name"));
        CHECK(a.contains("pass"));
    }

    CertReport bad = bounded_diameter_matching(gen("star(5)"), 4);
    nlohmann::json jb = nlohmann::json::parse(bad.to_json());
    CHECK_FALSE(jb["precondition_ok"].get<bool>());
    CHECK(jb.contains("precondition_witness"));
}

TEST_CASE("pair classifier reference verdicts") {
    auto verdict = [&](const char* a, const char* b, int d) {
        return pair_classify(gen(a), gen(b), d);
    };
    PairVerdict v = verdict("star(4)", "T(3)", 3);
    CHECK(v.member);
    CHECK(v.s == 4);
    CHECK(v.describe() == "Member(4)");
    CHECK(verdict("T(3)", "star(4)", 3).member);  // unordered
    CHECK(verdict("star(4)", "path(4)", 3).member);
    CHECK(verdict("star(5)", "T(3)", 4).member);
    CHECK(verdict("star(5)", "path(4)", 5).member);

    PairVerdict range = verdict("star(5)", "T(3)", 3);  // s=5 > d+1=4
    CHECK_FALSE(range.member);
    CHECK(range.reason == PairVerdict::Reason::StarRange);
    CHECK(range.s == 5);
    CHECK(verdict("star(3)", "path(4)", 3).reason == PairVerdict::Reason::StarRange);
    CHECK(verdict("path(2)", "path(4)", 3).reason == PairVerdict::Reason::StarRange);

    CHECK(verdict("star(4)", "path(5)", 3).reason == PairVerdict::Reason::Shape);
    CHECK(verdict("path(4)", "path(4)", 3).reason == PairVerdict::Reason::Shape);
    CHECK(verdict("star(4)", "star(4)", 3).reason == PairVerdict::Reason::Shape);
    CHECK(verdict("cycle(5)", "T(3)", 3).reason == PairVerdict::Reason::Shape);

    CHECK_THROWS_AS(verdict("star(4)", "T(3)", 2), BadParams);
    CHECK_THROWS_AS(pair_classify(gen("empty(3)"), gen("path(4)"), 3), BadParams);
    CHECK_THROWS_AS(verdict("path(13)", "path(4)", 3), TooLarge);
}

}  // TEST_SUITE
