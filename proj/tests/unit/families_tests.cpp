#include <doctest.h>

#include <set>
#include <string>
#include <vector>

#include "deflab/errors.hpp"
#include "deflab/families.hpp"
#include "deflab/graph.hpp"
#include "deflab/matching.hpp"
#include "deflab/subgraph.hpp"

using namespace deflab;

namespace {

Graph gen(const char* spec) { return generate(parse_family_spec(spec)).graph; }

// Every valid spec whose graph has at most max_order vertices, across all
// kinds, with degenerate parameter directions cut off.
std::vector<FamilySpec> specs_up_to(int max_order) {
    std::vector<FamilySpec> out;
    auto add = [&](FamilyKind kind, std::vector<int> params) {
        FamilySpec s{kind, std::move(params)};
        if (family_order(s) > max_order) return false;
        out.push_back(s);
        return true;
    };
    for (int n = 1; add(FamilyKind::Path, {n}); ++n) {}
    for (int n = 3; add(FamilyKind::Cycle, {n}); ++n) {}
    for (int n = 1; add(FamilyKind::Complete, {n}); ++n) {}
    for (int n = 1; add(FamilyKind::Empty, {n}); ++n) {}
    for (int n = 1; add(FamilyKind::Star, {n}); ++n) {}
    for (int a = 1; a + 1 <= max_order; ++a)
        for (int b = a; add(FamilyKind::CompleteBipartite, {a, b}); ++b) {}
    for (int n = 1; add(FamilyKind::F1, {n}); ++n) {}
    for (int n = 1; add(FamilyKind::F2, {n}); ++n) {}
    for (int n = 1; add(FamilyKind::F3, {n}); ++n) {}
    for (int n = 1; add(FamilyKind::F4, {n}); ++n) {}
    for (int n = 1; add(FamilyKind::T, {n}); ++n) {}
    for (int i = 0; add(FamilyKind::B, {i}); ++i) {}
    for (int n = 1; 3 * n <= max_order; ++n)
        for (int p = 1; add(FamilyKind::FrakK, {n, p}); ++p) {}
    for (int n = 1; 2 * n + 3 <= max_order; ++n)
        for (int p = 1; add(FamilyKind::FrakF, {n, p}); ++p) {}
    for (int s = 0; 2 * s + 1 <= max_order; ++s)
        for (int t = 1; add(FamilyKind::H1, {s, t}); ++t) {}
    for (int s = 0; 2 * s + 3 <= max_order; ++s)
        for (int t = 1; add(FamilyKind::H3, {s, t}); ++t) {}
    for (int s = 0; 2 * s + 3 <= max_order; ++s)
        for (int t = 1; add(FamilyKind::H4, {s, t}); ++t) {}
    for (int s = 0; 3 * s + 1 <= max_order; ++s)
        for (int t = 1; t + 3 * s <= max_order; ++t) {
            int p_cap = s == 0 ? 1 : max_order;  // p is inert when s == 0
            for (int p = 1; p <= p_cap && add(FamilyKind::FrakH, {s, t, p}); ++p) {}
        }
    return out;
}

}  // namespace

TEST_SUITE("families") {

TEST_CASE("spec parsing and printing") {
    FamilySpec s = parse_family_spec("frakK(4,2)");
    CHECK(s.kind == FamilyKind::FrakK);
    CHECK(s.params == std::vector<int>{4, 2});
    CHECK(to_string(s) == "frakK(4,2)");
    CHECK(parse_family_spec("FRAKK(4,2)") == s);
    CHECK(parse_family_spec(" frakk( 4 , 2 ) ") == s);
    CHECK(to_string(parse_family_spec("h3(2,5)")) == "H3(2,5)");
    CHECK(to_string(parse_family_spec("STAR(6)")) == "star(6)");

    for (const auto& spec : specs_up_to(24))
        CHECK(parse_family_spec(to_string(spec)) == spec);

    CHECK_THROWS_AS(parse_family_spec("path"), BadParams);
    CHECK_THROWS_AS(parse_family_spec("path("), BadParams);
    CHECK_THROWS_AS(parse_family_spec("path()"), BadParams);
    CHECK_THROWS_AS(parse_family_spec("path(0)"), BadParams);
    CHECK_THROWS_AS(parse_family_spec("path(1,2)"), BadParams);
    CHECK_THROWS_AS(parse_family_spec("cycle(2)"), BadParams);
    CHECK_THROWS_AS(parse_family_spec("B(-1)"), BadParams);
    CHECK_THROWS_AS(parse_family_spec("quux(3)"), BadParams);
    CHECK_THROWS_AS(parse_family_spec("frakK(4)"), BadParams);
    CHECK_THROWS_AS(parse_family_spec("H1(-1,3)"), BadParams);
    CHECK_THROWS_AS(parse_family_spec("frakH(1,0,1)"), BadParams);
    CHECK_THROWS_AS(parse_family_spec("path(2)x"), BadParams);
    CHECK_THROWS_AS(parse_family_spec("path(999999999999)"), BadParams);
}

TEST_CASE("orders match the closed-form counts") {
    for (const auto& spec : specs_up_to(60)) {
        GeneratedGraph g = generate(spec);
        CHECK(g.graph.order() == family_order(spec));
        CHECK(g.graph.connected() == (spec.kind != FamilyKind::Empty ||
                                      spec.params[0] == 1));
    }
    // Spot values for each closed form.
    CHECK(family_order(parse_family_spec("T(5)")) == 7);
    CHECK(family_order(parse_family_spec("B(3)")) == 9);
    CHECK(family_order(parse_family_spec("F1(4)")) == 10);
    CHECK(family_order(parse_family_spec("F2(4)")) == 12);
    CHECK(family_order(parse_family_spec("F3(4)")) == 10);
    CHECK(family_order(parse_family_spec("F4(4)")) == 10);
    CHECK(family_order(parse_family_spec("frakK(4,2)")) == 16);
    CHECK(family_order(parse_family_spec("frakF(4,2)")) == 12);
    CHECK(family_order(parse_family_spec("H1(2,5)")) == 19);
    CHECK(family_order(parse_family_spec("H3(2,5)")) == 21);
    CHECK(family_order(parse_family_spec("H4(2,5)")) == 21);
    CHECK(family_order(parse_family_spec("frakH(2,5,3)")) == 25);
    CHECK(family_order(parse_family_spec("completeBipartite(3,4)")) == 7);
    CHECK(family_order(parse_family_spec("star(6)")) == 7);
}

TEST_CASE("generation is deterministic") {
    for (const char* spec : {"frakH(2,3,2)", "H3(1,4)", "B(4)", "frakF(3,2)"}) {
        GeneratedGraph a = generate(parse_family_spec(spec));
        GeneratedGraph b = generate(parse_family_spec(spec));
        CHECK(a.graph.edges() == b.graph.edges());
        CHECK(a.landmarks == b.landmarks);
    }
}

TEST_CASE("degenerate parameters collapse to known graphs") {
    CHECK(is_isomorphic(gen("T(1)"), gen("path(3)")));
    CHECK(is_isomorphic(gen("F1(1)"), gen("star(3)")));
    CHECK(is_isomorphic(gen("F3(1)"), gen("cycle(4)")));
    CHECK(is_isomorphic(gen("star(1)"), gen("path(2)")));
    CHECK(is_isomorphic(gen("star(2)"), gen("path(3)")));
    CHECK(is_isomorphic(gen("completeBipartite(1,4)"), gen("star(4)")));
    CHECK(is_isomorphic(gen("complete(3)"), gen("cycle(3)")));
    for (int p = 1; p <= 3; ++p) {
        std::string fk = "frakK(1," + std::to_string(p) + ")";
        std::string t = "T(" + std::to_string(p) + ")";
        CHECK(is_isomorphic(gen(fk.c_str()), gen(t.c_str())));
    }
    CHECK(is_isomorphic(gen("H1(0,4)"), gen("path(4)")));
    CHECK(is_isomorphic(gen("H3(0,3)"), gen("path(5)")));
    CHECK(is_isomorphic(gen("H4(0,6)"), gen("path(8)")));
    CHECK(is_isomorphic(gen("frakH(0,5,2)"), gen("path(5)")));
}

TEST_CASE("landmarks name the advertised vertices") {
    GeneratedGraph t3 = generate(parse_family_spec("T(3)"));
    CHECK(t3.landmarks.at("root") == 0);
    CHECK(t3.graph.degree(t3.landmarks.at("branch")) == 3);
    CHECK(t3.graph.degree(t3.landmarks.at("root")) == 1);

    GeneratedGraph b2 = generate(parse_family_spec("B(2)"));
    CHECK(b2.graph.degree(b2.landmarks.at("root")) == 3);
    CHECK(b2.graph.degree(b2.landmarks.at("branch")) == 3);

    GeneratedGraph f1 = generate(parse_family_spec("F1(3)"));
    int center = f1.landmarks.at("center");
    int pendant = f1.landmarks.at("pendant");
    CHECK(f1.graph.degree(center) == 3);
    CHECK(f1.graph.degree(pendant) == 1);
    CHECK(f1.graph.adjacent(center, pendant));

    GeneratedGraph h1 = generate(parse_family_spec("H1(2,3)"));
    for (int i = 1; i <= 3; ++i)
        for (int j = 1; j <= 3; ++j)
            CHECK(h1.landmarks.count("u" + std::to_string(i) + "_" + std::to_string(j)));
    for (int i = 1; i <= 2; ++i) {
        int v = h1.landmarks.at("v" + std::to_string(i));
        int w = h1.landmarks.at("w" + std::to_string(i));
        // Connector joins the facing path ends; its pendant hangs off it.
        CHECK(h1.graph.adjacent(v, h1.landmarks.at("u" + std::to_string(i) + "_3")));
        CHECK(h1.graph.adjacent(v, h1.landmarks.at("u" + std::to_string(i + 1) + "_1")));
        CHECK(h1.graph.degree(w) == 1);
        CHECK(h1.graph.adjacent(v, w));
    }

    GeneratedGraph h3 = generate(parse_family_spec("H3(1,5)"));
    int x = h3.landmarks.at("x"), y = h3.landmarks.at("y");
    CHECK(h3.graph.degree(x) == 1);
    CHECK(h3.graph.degree(y) == 1);
    CHECK(h3.graph.adjacent(x, h3.landmarks.at("u1_1")));
    CHECK(h3.graph.adjacent(y, h3.landmarks.at("u2_5")));
    int v1 = h3.landmarks.at("v1"), w1 = h3.landmarks.at("w1");
    CHECK(h3.graph.adjacent(v1, h3.landmarks.at("u1_5")));
    CHECK(h3.graph.adjacent(w1, h3.landmarks.at("u1_5")));
    CHECK(h3.graph.adjacent(v1, h3.landmarks.at("u2_1")));
    CHECK(h3.graph.adjacent(w1, h3.landmarks.at("u2_1")));
    CHECK_FALSE(h3.graph.adjacent(v1, w1));
    CHECK_FALSE(h3.graph.adjacent(h3.landmarks.at("u1_5"), h3.landmarks.at("u2_1")));

    GeneratedGraph h4 = generate(parse_family_spec("H4(1,5)"));
    CHECK(h4.graph.adjacent(h4.landmarks.at("u1_5"), h4.landmarks.at("u2_1")));

    GeneratedGraph fk = generate(parse_family_spec("frakK(3,2)"));
    for (int i = 1; i <= 3; ++i)
        for (int j = i + 1; j <= 3; ++j)
            CHECK(fk.graph.adjacent(fk.landmarks.at("k" + std::to_string(i)),
                                    fk.landmarks.at("k" + std::to_string(j))));
    for (int i = 1; i <= 3; ++i)
        CHECK(fk.graph.degree(fk.landmarks.at("branch" + std::to_string(i))) == 3);
}

TEST_CASE("predicted deficiencies: reference values") {
    auto predict = [](const char* s) {
        return predicted_deficiency(parse_family_spec(s));
    };
    CHECK(predict("path(7)") == 1);
    CHECK(predict("path(8)") == 0);
    CHECK(predict("cycle(9)") == 1);
    CHECK(predict("complete(5)") == 1);
    CHECK(predict("empty(6)") == 6);
    CHECK(predict("completeBipartite(2,5)") == 3);
    CHECK(predict("star(6)") == 5);
    CHECK(predict("H1(2,3)") == 3);   // odd t: s+1
    CHECK(predict("H1(2,2)") == 0);   // even t: perfect matching
    CHECK(predict("H3(1,5)") == 2);
    CHECK(predict("H4(2,2)") == 0);
    CHECK(predict("frakK(3,1)") == 3);  // n(p+1) even: n
    CHECK(predict("frakK(3,2)") == 4);  // n(p+1) odd: n+1
    CHECK(predict("frakH(1,3,2)") == 2);
    CHECK(predict("frakH(2,4,2)") == 2);  // t(s+1)+s(p+1) even: s

    for (const char* unknown : {"F1(3)", "F2(3)", "F3(3)", "F4(3)", "T(4)", "B(2)",
                                "frakF(3,2)"})
        CHECK_FALSE(predict(unknown).has_value());
}

TEST_CASE("predicted deficiencies match computed values and parity") {
    int verified = 0;
    for (const auto& spec : specs_up_to(14)) {
        auto predicted = predicted_deficiency(spec);
        if (!predicted) continue;
        Graph g = generate(spec).graph;
        CHECK(*predicted % 2 == g.order() % 2);
        CHECK(*predicted == deficiency(g));
        ++verified;
    }
    CHECK(verified > 100);
}

TEST_CASE("validate rejects out-of-range parameters") {
    CHECK_THROWS_AS(validate({FamilyKind::Path, {0}}), BadParams);
    CHECK_THROWS_AS(validate({FamilyKind::Cycle, {2}}), BadParams);
    CHECK_THROWS_AS(validate({FamilyKind::B, {-1}}), BadParams);
    CHECK_THROWS_AS(validate({FamilyKind::FrakK, {1, 0}}), BadParams);
    CHECK_THROWS_AS(validate({FamilyKind::H1, {0, 0}}), BadParams);
    CHECK_THROWS_AS(validate({FamilyKind::H1, {0}}), BadParams);
    CHECK_THROWS_AS(validate({FamilyKind::FrakH, {0, 1}}), BadParams);
    CHECK_NOTHROW(validate({FamilyKind::H1, {0, 1}}));
    CHECK_NOTHROW(validate({FamilyKind::B, {0}}));
}

TEST_CASE("characterization catalogs") {
    auto a4 = characterization_family(CharacterizationVariant::A, 4);
    REQUIRE(a4.size() == 3);
    CHECK(to_string(a4[0]) == "star(4)");
    CHECK(to_string(a4[1]) == "T(4)");
    CHECK(to_string(a4[2]) == "frakK(4,1)");

    auto b4 = characterization_family(CharacterizationVariant::B, 4);
    CHECK(b4.size() == 9);  // star, F1..F4, frakF(4,1..2), frakK(4,1..2)
    std::set<std::string> names;
    for (const auto& s : b4) names.insert(to_string(s));
    CHECK(names.count("star(4)"));
    CHECK(names.count("F1(4)"));
    CHECK(names.count("F4(4)"));
    CHECK(names.count("frakF(4,2)"));
    CHECK(names.count("frakK(4,2)"));

    auto a6 = characterization_family(CharacterizationVariant::A, 6);
    CHECK(a6.size() == 4);  // star, T, frakK(6,1), frakK(6,2)

    CHECK_THROWS_AS(characterization_family(CharacterizationVariant::A, 5), BadParams);
    CHECK_THROWS_AS(characterization_family(CharacterizationVariant::B, 2), BadParams);
}

TEST_CASE("witness specs escape any candidate family") {
    auto w = witness_graphs(2, 3);
    REQUIRE(!w.empty());
    for (const auto& spec : w) {
        auto d = predicted_deficiency(spec);
        REQUIRE(d.has_value());
        CHECK(*d > 2);
        // s = c+1, p = h+1, t = smallest odd above h.
        if (spec.kind == FamilyKind::FrakH) {
            CHECK(spec.params == std::vector<int>{3, 5, 4});
        } else {
            CHECK(spec.params == std::vector<int>{3, 5});
        }
    }
    CHECK(predicted_deficiency(parse_family_spec("H1(3,5)")) == 4);

    auto w01 = witness_graphs(0, 1);
    for (const auto& spec : w01) CHECK(*predicted_deficiency(spec) > 0);
    CHECK(predicted_deficiency(parse_family_spec("H4(1,3)")) == 2);
}

}  // TEST_SUITE
