// deflab: command-line workbench for graph deficiency, family generators,
// forbidden-induced-subgraph freeness, and constructive matching certifiers.
//
// Exit codes:
//   0  success / positive verdict
//   1  negative verdict (freeness violated, ordering false, check failed,
//      pair not a member, falsification found nothing, ...)
//   2  usage error (bad flags, bad spec, missing or malformed file,
//      input past a documented size cap)
//   3  precondition or proof-claim failure in a certifier run

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "deflab/certifier.hpp"
#include "deflab/errors.hpp"
#include "deflab/families.hpp"
#include "deflab/graph.hpp"
#include "deflab/graph6.hpp"
#include "deflab/lab.hpp"
#include "deflab/matching.hpp"
#include "deflab/subgraph.hpp"

namespace {

using json = nlohmann::json;
using namespace deflab;

constexpr int kExitOk = 0;
constexpr int kExitNegative = 1;
constexpr int kExitUsage = 2;
constexpr int kExitClaim = 3;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct NamedGraph {
    std::string label;
    Graph graph;
};

// A graph argument is either a family spec ("cycle(9)", "frakK(4,2)") or a
// path to a graph6/edge-list file; "@path" forces the file interpretation.
std::vector<NamedGraph> resolve_target(const std::string& token) {
    auto from_file = [](const std::string& path) {
        if (!std::filesystem::exists(path))
            throw UsageError("no such file: " + path);
        std::vector<NamedGraph> out;
        auto graphs = load_graphs(path);
        for (size_t i = 0; i < graphs.size(); ++i) {
            std::string label = path;
            if (graphs.size() > 1) label += "[" + std::to_string(i) + "]";
            out.push_back({label, std::move(graphs[i])});
        }
        if (out.empty()) throw UsageError("file contains no graphs: " + path);
        return out;
    };
    if (!token.empty() && token.front() == '@') return from_file(token.substr(1));
    try {
        FamilySpec spec = parse_family_spec(token);
        return {{to_string(spec), generate(spec).graph}};
    } catch (const BadParams& e) {
        if (std::filesystem::exists(token)) return from_file(token);
        throw UsageError(std::string(e.what()) + " (and no such file: " + token + ")");
    }
}

std::vector<NamedGraph> resolve_targets(const std::vector<std::string>& tokens) {
    std::vector<NamedGraph> out;
    for (const auto& t : tokens) {
        auto part = resolve_target(t);
        std::move(part.begin(), part.end(), std::back_inserter(out));
    }
    return out;
}

// Forbidden-family tokens: family specs, "@file" (every contained graph), and
// the literal "brooms" switching on the open-ended double-broom tail.
struct NamedFamily {
    Family family;
    std::vector<std::string> member_names;
};

NamedFamily resolve_family(const std::vector<std::string>& tokens) {
    NamedFamily out;
    for (const auto& t : tokens) {
        if (t == "brooms") {
            out.family.includes_broom_tail = true;
            continue;
        }
        for (auto& ng : resolve_target(t)) {
            out.family.members.push_back(std::move(ng.graph));
            out.member_names.push_back(ng.label);
        }
    }
    return out;
}

int jobs_or_env(int jobs_flag) {
    if (jobs_flag > 0) return jobs_flag;
    if (const char* env = std::getenv("DEFLAB_JOBS")) {
        int j = std::atoi(env);
        if (j > 0) return j;
    }
    return 1;
}

json embedding_json(const FreenessViolation& v, const std::vector<std::string>& names) {
    json j;
    if (v.member_index >= 0) {
        j["member"] = v.member_index < static_cast<int>(names.size())
                          ? names[v.member_index]
                          : ("member " + std::to_string(v.member_index));
    } else {
        j["member"] = "broom(" + std::to_string(v.broom_index) + ")";
    }
    j["embedding"] = v.embedding;
    return j;
}

std::string embedding_text(const FreenessViolation& v, const std::vector<std::string>& names) {
    std::ostringstream os;
    if (v.member_index >= 0) {
        os << (v.member_index < static_cast<int>(names.size())
                   ? names[v.member_index]
                   : "member " + std::to_string(v.member_index));
    } else {
        os << "broom(" << v.broom_index << ")";
    }
    os << " at [";
    for (size_t i = 0; i < v.embedding.size(); ++i)
        os << (i ? " " : "") << v.embedding[i];
    os << "]";
    return os.str();
}

// ---------------------------------------------------------------------------
// gen
// ---------------------------------------------------------------------------

int run_gen(const std::string& spec_text, bool as_json, const std::string& out_path) {
    FamilySpec spec = parse_family_spec(spec_text);
    GeneratedGraph gen = generate(spec);
    std::string g6 = encode_graph6(gen.graph);
    if (!out_path.empty()) {
        write_graph6_file(out_path, std::span<const Graph>(&gen.graph, 1));
    }
    json landmarks = json::object();
    for (const auto& [name, v] : gen.landmarks) landmarks[name] = v;
    if (as_json) {
        json j{{"spec", to_string(spec)},
               {"order", gen.graph.order()},
               {"size", gen.graph.size()},
               {"graph6", g6},
               {"landmarks", landmarks}};
        std::cout << j.dump() << "\n";
    } else {
        if (out_path.empty()) std::cout << g6 << "\n";
        std::cout << landmarks.dump() << "\n";
    }
    return kExitOk;
}

// ---------------------------------------------------------------------------
// def
// ---------------------------------------------------------------------------

int run_def(const std::vector<std::string>& targets, bool as_json) {
    auto graphs = resolve_targets(targets);
    json arr = json::array();
    for (const auto& ng : graphs) {
        int d = deficiency(ng.graph);
        if (as_json) {
            arr.push_back({{"graph", ng.label},
                           {"graph6", encode_graph6(ng.graph)},
                           {"order", ng.graph.order()},
                           {"deficiency", d}});
        } else if (graphs.size() == 1) {
            std::cout << d << "\n";
        } else {
            std::cout << ng.label << ": " << d << "\n";
        }
    }
    if (as_json) std::cout << arr.dump() << "\n";
    return kExitOk;
}

// ---------------------------------------------------------------------------
// free
// ---------------------------------------------------------------------------

int run_free(const std::vector<std::string>& targets, const std::string& variant, int n,
             const std::vector<std::string>& forbid, bool as_json) {
    NamedFamily fam;
    if (variant == "A" || variant == "B") {
        if (n <= 0) throw UsageError("--family " + variant + " requires --n");
        auto specs = characterization_family(
            variant == "A" ? CharacterizationVariant::A : CharacterizationVariant::B, n);
        for (const auto& s : specs) {
            fam.family.members.push_back(generate(s).graph);
            fam.member_names.push_back(to_string(s));
        }
    } else if (variant == "custom") {
        if (forbid.empty()) throw UsageError("--family custom requires at least one --forbid");
        fam = resolve_family(forbid);
    } else {
        throw UsageError("--family must be A, B, or custom");
    }
    if (fam.family.members.empty() && !fam.family.includes_broom_tail)
        throw UsageError("forbidden family is empty");

    auto graphs = resolve_targets(targets);
    bool all_free = true;
    json arr = json::array();
    for (const auto& ng : graphs) {
        FreenessResult r = is_free(ng.graph, fam.family);
        all_free = all_free && r.free;
        if (as_json) {
            json j{{"graph", ng.label}, {"free", r.free}};
            if (r.violation) j["violation"] = embedding_json(*r.violation, fam.member_names);
            arr.push_back(std::move(j));
        } else if (r.free) {
            std::cout << ng.label << ": free\n";
        } else {
            std::cout << ng.label << ": contains "
                      << embedding_text(*r.violation, fam.member_names) << "\n";
        }
    }
    if (as_json) std::cout << arr.dump() << "\n";
    return all_free ? kExitOk : kExitNegative;
}

// ---------------------------------------------------------------------------
// leq
// ---------------------------------------------------------------------------

std::vector<std::string> split_commas(const std::string& s) {
    std::vector<std::string> out;
    std::string cur;
    int depth = 0;
    for (char c : s) {
        if (c == '(') ++depth;
        if (c == ')') --depth;
        if (c == ',' && depth == 0) {
            if (!cur.empty()) out.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    if (!cur.empty()) out.push_back(cur);
    return out;
}

int run_leq(const std::string& lhs, const std::string& rhs, bool as_json) {
    NamedFamily f1 = resolve_family(split_commas(lhs));
    NamedFamily f2 = resolve_family(split_commas(rhs));
    bool le = family_leq(f1.family, f2.family);
    if (as_json)
        std::cout << json{{"lhs", lhs}, {"rhs", rhs}, {"leq", le}}.dump() << "\n";
    else
        std::cout << (le ? "true" : "false") << "\n";
    return le ? kExitOk : kExitNegative;
}

// ---------------------------------------------------------------------------
// certify
// ---------------------------------------------------------------------------

int run_certify(const std::vector<std::string>& targets, int n, const std::string& mode) {
    auto graphs = resolve_targets(targets);
    bool all_ok = true;
    for (const auto& ng : graphs) {
        CertReport report = mode == "structured" ? structured_matching(ng.graph, n)
                                                 : bounded_diameter_matching(ng.graph, n);
        all_ok = all_ok && report.ok();
        std::cout << report.to_json() << "\n";
    }
    return all_ok ? kExitOk : kExitClaim;
}

// ---------------------------------------------------------------------------
// verify-lemmas
// ---------------------------------------------------------------------------

// All specs of the kinds that carry a closed-form deficiency, with order
// bounded by max_size. Parameter scans stop as soon as the order alone
// exceeds the bound.
std::vector<FamilySpec> formula_specs(int max_size) {
    std::vector<FamilySpec> specs;
    auto add = [&](FamilyKind kind, std::vector<int> params) {
        FamilySpec s{kind, std::move(params)};
        if (family_order(s) <= max_size) {
            specs.push_back(s);
            return true;
        }
        return false;
    };
    for (int n = 1; add(FamilyKind::Path, {n}); ++n) {}
    for (int n = 3; add(FamilyKind::Cycle, {n}); ++n) {}
    for (int n = 1; add(FamilyKind::Complete, {n}); ++n) {}
    for (int n = 1; add(FamilyKind::Empty, {n}); ++n) {}
    for (int n = 1; add(FamilyKind::Star, {n}); ++n) {}
    for (int a = 1; a + 1 <= max_size; ++a)
        for (int b = a; add(FamilyKind::CompleteBipartite, {a, b}); ++b) {}
    for (int s = 0; s * 2 + 1 <= max_size; ++s)
        for (int t = 1; add(FamilyKind::H1, {s, t}); ++t) {}
    for (int s = 0; s * 2 + 3 <= max_size; ++s)
        for (int t = 1; add(FamilyKind::H3, {s, t}); ++t) {}
    for (int s = 0; s * 2 + 3 <= max_size; ++s)
        for (int t = 1; add(FamilyKind::H4, {s, t}); ++t) {}
    for (int n = 1; n * 3 <= max_size; ++n)
        for (int p = 1; add(FamilyKind::FrakK, {n, p}); ++p) {}
    for (int s = 0; s * 3 + 1 <= max_size; ++s)
        for (int t = 1; t + s * 3 <= max_size; ++t) {
            // With no connectors (s = 0) the graph is a bare path and p is
            // inert, so the order never grows with p; scan a single value.
            int p_cap = s == 0 ? 1 : max_size;
            for (int p = 1; p <= p_cap && add(FamilyKind::FrakH, {s, t, p}); ++p) {}
        }
    return specs;
}

int run_verify_lemmas(int max_size, int jobs, bool as_json) {
    auto specs = formula_specs(max_size);
    std::vector<std::string> failures(specs.size());
    parallel_for(static_cast<long long>(specs.size()), jobs, [&](long long i) {
        const FamilySpec& s = specs[static_cast<size_t>(i)];
        Graph g = generate(s).graph;
        int predicted = *predicted_deficiency(s);
        int computed = deficiency(g);
        if (predicted != computed) {
            failures[static_cast<size_t>(i)] =
                to_string(s) + ": predicted " + std::to_string(predicted) + ", computed " +
                std::to_string(computed);
        }
    });
    std::vector<std::string> bad;
    for (auto& f : failures)
        if (!f.empty()) bad.push_back(std::move(f));

    // Induced-matching construction: tight instances hit their ceiling and the
    // constructive routine reaches the demanded size on them one step below.
    std::vector<std::pair<int, int>> tight = {{2, 3}, {3, 4}, {1, 2}};
    for (auto [n, p] : tight) {
        BipartiteInstance inst = lemma6_tight_instance(n, p);
        int brute = max_induced_matching_brute(inst.graph);
        if (brute != p - 1)
            bad.push_back("tight(" + std::to_string(n) + "," + std::to_string(p) +
                          "): max induced matching " + std::to_string(brute) + ", expected " +
                          std::to_string(p - 1));
        Matching m = lemma6_induced_matching(inst.graph, inst.left, inst.right, n, p - 1);
        if (!is_induced_matching(inst.graph, m) || m.size() < p - 1)
            bad.push_back("construct(" + std::to_string(n) + "," + std::to_string(p - 1) +
                          "): returned matching invalid or too small");
    }

    if (as_json) {
        json j{{"specs_checked", specs.size()},
               {"tight_instances", tight.size()},
               {"failures", bad}};
        std::cout << j.dump() << "\n";
    } else {
        std::cout << "formula specs checked: " << specs.size() << "\n";
        std::cout << "tight instances checked: " << tight.size() << "\n";
        for (const auto& f : bad) std::cout << "FAIL " << f << "\n";
        std::cout << (bad.empty() ? "all formulas verified" : "failures found") << "\n";
    }
    return bad.empty() ? kExitOk : kExitNegative;
}

// ---------------------------------------------------------------------------
// enumerate
// ---------------------------------------------------------------------------

int run_enumerate(int n, bool claw_free_only) {
    EnumerationStream stream =
        claw_free_only
            ? enumerate_connected_where(
                  n, [](const Graph& g) { return !has_claw_containing(g, g.order() - 1); })
            : enumerate_connected(n);
    Graph g;
    while (stream.next(g)) std::cout << encode_graph6(g) << "\n";
    return kExitOk;
}

// ---------------------------------------------------------------------------
// check
// ---------------------------------------------------------------------------

int run_check(const std::string& variant, int n, const std::vector<std::string>& forbid,
              int bound, int max_n, const std::string& file, int jobs, bool as_json) {
    NamedFamily fam;
    if (variant == "A" || variant == "B") {
        if (n <= 0) throw UsageError("--family " + variant + " requires --n");
        for (const auto& s : characterization_family(
                 variant == "A" ? CharacterizationVariant::A : CharacterizationVariant::B, n)) {
            fam.family.members.push_back(generate(s).graph);
            fam.member_names.push_back(to_string(s));
        }
    } else if (variant == "custom") {
        if (forbid.empty()) throw UsageError("--family custom requires at least one --forbid");
        fam = resolve_family(forbid);
    } else {
        throw UsageError("--family must be A, B, or custom");
    }

    ExperimentReport report;
    if (!file.empty()) {
        if (!std::filesystem::exists(file)) throw UsageError("no such file: " + file);
        auto graphs = load_graphs(file);
        report = exhaustive_check_graphs(graphs, fam.family, bound, jobs);
    } else {
        report = exhaustive_check(fam.family, bound, max_n, jobs);
    }
    if (as_json) {
        std::cout << report.to_json() << "\n";
    } else {
        std::cout << report.predicate << "\n";
        std::cout << "instances checked: " << report.instances_checked << "\n";
        for (const auto& f : report.failures) std::cout << "violation: " << f << "\n";
        std::cout << (report.passed() ? "PASS" : "FAIL") << " ("
                  << report.wall_seconds << "s)\n";
    }
    return report.passed() ? kExitOk : kExitNegative;
}

// ---------------------------------------------------------------------------
// pairs
// ---------------------------------------------------------------------------

int run_pairs(const std::string& h1_token, const std::string& h2_token, int d, bool as_json) {
    auto g1 = resolve_target(h1_token);
    auto g2 = resolve_target(h2_token);
    if (g1.size() != 1 || g2.size() != 1)
        throw UsageError("--h1/--h2 must each name exactly one graph");
    PairVerdict v = pair_classify(g1[0].graph, g2[0].graph, d);
    if (as_json) {
        json j{{"h1", g1[0].label},
               {"h2", g2[0].label},
               {"d", d},
               {"member", v.member},
               {"verdict", v.describe()}};
        if (v.s > 0) j["star_size"] = v.s;
        std::cout << j.dump() << "\n";
    } else {
        std::cout << v.describe() << "\n";
    }
    return v.member ? kExitOk : kExitNegative;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"deflab: graph deficiency workbench"};
    app.require_subcommand(1);
    bool as_json = false;
    app.add_flag("--json", as_json, "emit JSON instead of plain text");

    // gen
    std::string gen_spec, gen_out;
    auto* gen_cmd = app.add_subcommand("gen", "generate a named family graph");
    gen_cmd->add_option("spec", gen_spec, "family spec, e.g. frakK(4,2)")->required();
    gen_cmd->add_option("-o,--output", gen_out, "write graph6 to this file");

    // def
    std::vector<std::string> def_targets;
    auto* def_cmd = app.add_subcommand("def", "deficiency of graphs (specs or files)");
    def_cmd->add_option("target", def_targets, "family spec, file path, or @file")->required();

    // free
    std::vector<std::string> free_targets, free_forbid;
    std::string free_variant = "custom";
    int free_n = 0;
    auto* free_cmd = app.add_subcommand("free", "test forbidden-subgraph freeness");
    free_cmd->add_option("target", free_targets, "graphs to test (spec, file, or @file)")
        ->required();
    free_cmd->add_option("--family", free_variant,
                         "A or B (built-in catalogs, need --n) or custom (needs --forbid)");
    free_cmd->add_option("--n", free_n, "parameter n for catalogs A/B");
    free_cmd->add_option("--forbid", free_forbid,
                         "forbidden member: spec, @file, or 'brooms' for the broom tail");

    // leq
    std::string leq_lhs, leq_rhs;
    auto* leq_cmd = app.add_subcommand("leq", "family preorder: does lhs <= rhs hold");
    leq_cmd->add_option("lhs", leq_lhs, "comma list of specs/@files/'brooms'")->required();
    leq_cmd->add_option("rhs", leq_rhs, "comma list of specs/@files/'brooms'")->required();

    // certify
    std::vector<std::string> cert_targets;
    int cert_n = 0;
    std::string cert_mode = "diameter";
    auto* cert_cmd = app.add_subcommand("certify", "run a constructive matching procedure");
    cert_cmd->add_option("target", cert_targets, "graphs (spec, file, or @file)")->required();
    cert_cmd->add_option("--n", cert_n, "forbidden-star parameter n >= 4")->required();
    cert_cmd->add_option("--mode", cert_mode, "diameter or structured")
        ->check(CLI::IsMember({"diameter", "structured"}));

    // verify-lemmas
    int vl_max_size = 18, vl_jobs = 0;
    auto* vl_cmd = app.add_subcommand(
        "verify-lemmas", "check closed-form deficiencies against computed values");
    vl_cmd->add_option("--max-size", vl_max_size, "largest graph order to scan (default 18)");
    vl_cmd->add_option("--jobs", vl_jobs, "worker threads (default $DEFLAB_JOBS or 1)");

    // enumerate
    int enum_n = 0;
    bool enum_claw_free = false;
    auto* enum_cmd =
        app.add_subcommand("enumerate", "stream connected graphs of an order as graph6");
    enum_cmd->add_option("--n", enum_n, "graph order")->required();
    enum_cmd->add_flag("--claw-free", enum_claw_free, "restrict to claw-free graphs");

    // check
    std::string check_variant = "custom", check_file;
    int check_n = 0, check_bound = 0, check_max_n = 8, check_jobs = 0;
    std::vector<std::string> check_forbid;
    auto* check_cmd =
        app.add_subcommand("check", "exhaustively test a deficiency bound on free graphs");
    check_cmd->add_option("--family", check_variant, "A, B, or custom");
    check_cmd->add_option("--n", check_n, "parameter n for catalogs A/B");
    check_cmd->add_option("--forbid", check_forbid, "custom forbidden members");
    check_cmd->add_option("--bound", check_bound, "deficiency bound to verify")->required();
    check_cmd->add_option("--max-n", check_max_n, "largest order to enumerate (default 8)");
    check_cmd->add_option("--file", check_file, "check graphs from this file instead");
    check_cmd->add_option("--jobs", check_jobs, "worker threads (default $DEFLAB_JOBS or 1)");

    // pairs
    std::string pairs_h1, pairs_h2;
    int pairs_d = 0;
    auto* pairs_cmd =
        app.add_subcommand("pairs", "classify a two-element forbidden family");
    pairs_cmd->add_option("--h1", pairs_h1, "first graph (spec, file, or @file)")->required();
    pairs_cmd->add_option("--h2", pairs_h2, "second graph")->required();
    pairs_cmd->add_option("--d", pairs_d, "deficiency threshold d >= 3")->required();

    for (auto* sc : {gen_cmd, def_cmd, free_cmd, leq_cmd, cert_cmd, vl_cmd, enum_cmd,
                     check_cmd, pairs_cmd})
        sc->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (gen_cmd->parsed()) return run_gen(gen_spec, as_json, gen_out);
        if (def_cmd->parsed()) return run_def(def_targets, as_json);
        if (free_cmd->parsed())
            return run_free(free_targets, free_variant, free_n, free_forbid, as_json);
        if (leq_cmd->parsed()) return run_leq(leq_lhs, leq_rhs, as_json);
        if (cert_cmd->parsed()) return run_certify(cert_targets, cert_n, cert_mode);
        if (vl_cmd->parsed())
            return run_verify_lemmas(vl_max_size, jobs_or_env(vl_jobs), as_json);
        if (enum_cmd->parsed()) return run_enumerate(enum_n, enum_claw_free);
        if (check_cmd->parsed())
            return run_check(check_variant, check_n, check_forbid, check_bound, check_max_n,
                             check_file, jobs_or_env(check_jobs), as_json);
        if (pairs_cmd->parsed()) return run_pairs(pairs_h1, pairs_h2, pairs_d, as_json);
        std::cerr << "error: no subcommand\n";
        return kExitUsage;
    } catch (const PreconditionViolated& e) {
        std::cerr << "precondition violated: " << e.what() << "\n";
        return kExitClaim;
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const BadParams& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const TooLarge& e) {
        std::cerr << "error: input too large: " << e.what() << "\n";
        return kExitUsage;
    } catch (const OpenEndedUnsupported& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const MalformedGraph6& e) {
        std::cerr << "error: malformed input: " << e.what() << "\n";
        return kExitUsage;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kExitUsage;
    }
}
