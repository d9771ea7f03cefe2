#include "deflab/families.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>

#include "deflab/errors.hpp"

namespace deflab {

namespace {

struct KindInfo {
    FamilyKind kind;
    const char* name;  // canonical spelling
    int arity;
};

constexpr KindInfo kKinds[] = {
    {FamilyKind::Path, "path", 1},
    {FamilyKind::Cycle, "cycle", 1},
    {FamilyKind::Complete, "complete", 1},
    {FamilyKind::Empty, "empty", 1},
    {FamilyKind::CompleteBipartite, "completeBipartite", 2},
    {FamilyKind::Star, "star", 1},
    {FamilyKind::F1, "F1", 1},
    {FamilyKind::F2, "F2", 1},
    {FamilyKind::F3, "F3", 1},
    {FamilyKind::F4, "F4", 1},
    {FamilyKind::T, "T", 1},
    {FamilyKind::B, "B", 1},
    {FamilyKind::FrakK, "frakK", 2},
    {FamilyKind::FrakF, "frakF", 2},
    {FamilyKind::H1, "H1", 2},
    {FamilyKind::H3, "H3", 2},
    {FamilyKind::H4, "H4", 2},
    {FamilyKind::FrakH, "frakH", 3},
};

const KindInfo& info(FamilyKind kind) {
    for (const auto& k : kKinds)
        if (k.kind == kind) return k;
    throw BadParams("unknown family kind");
}

std::string lower(std::string_view s) {
    std::string out(s);
    std::transform(out.begin(), out.end(), out.begin(),
                   [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    return out;
}

[[noreturn]] void bad(const FamilySpec& spec, const char* why) {
    throw BadParams(std::string(info(spec.kind).name) + ": " + why);
}

// Incremental edge-list builder shared by the generators.
struct Builder {
    int cnt = 0;
    std::vector<Edge> edges;
    std::map<std::string, int> landmarks;

    explicit Builder(int initial) : cnt(initial) {}
    int add() { return cnt++; }
    void edge(int u, int v) { edges.emplace_back(u, v); }
    void mark(std::string name, int v) { landmarks.emplace(std::move(name), v); }

    // Extend a path to k vertices total starting at v (adds k-1 fresh
    // vertices); returns the far end (v itself when k == 1).
    int attach_path(int v, int k) {
        int last = v;
        for (int j = 1; j < k; ++j) {
            int w = add();
            edge(last, w);
            last = w;
        }
        return last;
    }

    // A two-leaf spider tail: a path of p vertices rooted at v whose far end
    // carries two extra leaves. Returns the branch vertex.
    int attach_spider(int v, int p) {
        int branch = attach_path(v, p);
        edge(branch, add());
        edge(branch, add());
        return branch;
    }

    GeneratedGraph finish() { return {Graph(cnt, edges), std::move(landmarks)}; }
};

}  // namespace

void validate(const FamilySpec& spec) {
    const KindInfo& k = info(spec.kind);
    if (static_cast<int>(spec.params.size()) != k.arity) bad(spec, "wrong number of parameters");
    const auto& p = spec.params;
    switch (spec.kind) {
        case FamilyKind::Cycle:
            if (p[0] < 3) bad(spec, "needs n >= 3");
            break;
        case FamilyKind::Path:
        case FamilyKind::Complete:
        case FamilyKind::Empty:
        case FamilyKind::Star:
        case FamilyKind::F1:
        case FamilyKind::F2:
        case FamilyKind::F3:
        case FamilyKind::F4:
        case FamilyKind::T:
            if (p[0] < 1) bad(spec, "needs n >= 1");
            break;
        case FamilyKind::B:
            if (p[0] < 0) bad(spec, "needs i >= 0");
            break;
        case FamilyKind::CompleteBipartite:
            if (p[0] < 1 || p[1] < 1) bad(spec, "needs part sizes >= 1");
            break;
        case FamilyKind::FrakK:
        case FamilyKind::FrakF:
            if (p[0] < 1 || p[1] < 1) bad(spec, "needs n >= 1 and p >= 1");
            break;
        case FamilyKind::H1:
        case FamilyKind::H3:
        case FamilyKind::H4:
            if (p[0] < 0 || p[1] < 1) bad(spec, "needs s >= 0 and t >= 1");
            break;
        case FamilyKind::FrakH:
            if (p[0] < 0 || p[1] < 1 || p[2] < 1) bad(spec, "needs s >= 0, t >= 1, p >= 1");
            break;
    }
}

FamilySpec parse_family_spec(std::string_view text) {
    // Trim surrounding whitespace.
    size_t b = text.find_first_not_of(" \t\r\n");
    size_t e = text.find_last_not_of(" \t\r\n");
    if (b == std::string_view::npos) throw BadParams("empty family spec");
    text = text.substr(b, e - b + 1);

    size_t open = text.find('(');
    if (open == 0 || open == std::string_view::npos || text.back() != ')')
        throw BadParams("family spec must look like kind(p1,p2,...): got '" + std::string(text) +
                        "'");
    std::string name = lower(text.substr(0, open));
    std::string_view args = text.substr(open + 1, text.size() - open - 2);

    FamilySpec spec;
    bool found = false;
    for (const auto& k : kKinds)
        if (lower(k.name) == name) {
            spec.kind = k.kind;
            found = true;
            break;
        }
    if (!found) throw BadParams("unknown family kind '" + name + "'");

    size_t pos = 0;
    while (pos <= args.size()) {
        size_t comma = args.find(',', pos);
        std::string_view tok =
            args.substr(pos, comma == std::string_view::npos ? args.size() - pos : comma - pos);
        size_t tb = tok.find_first_not_of(" \t");
        size_t te = tok.find_last_not_of(" \t");
        if (tb == std::string_view::npos) throw BadParams("empty parameter in family spec");
        tok = tok.substr(tb, te - tb + 1);
        int value = 0;
        auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
        if (ec != std::errc{} || ptr != tok.data() + tok.size())
            throw BadParams("non-integer parameter '" + std::string(tok) + "'");
        spec.params.push_back(value);
        if (comma == std::string_view::npos) break;
        pos = comma + 1;
    }
    validate(spec);
    return spec;
}

std::string to_string(const FamilySpec& spec) {
    std::string out = info(spec.kind).name;
    out += '(';
    for (size_t i = 0; i < spec.params.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(spec.params[i]);
    }
    out += ')';
    return out;
}

int family_order(const FamilySpec& spec) {
    validate(spec);
    const auto& p = spec.params;
    switch (spec.kind) {
        case FamilyKind::Path:
        case FamilyKind::Cycle:
        case FamilyKind::Complete:
        case FamilyKind::Empty:
            return p[0];
        case FamilyKind::CompleteBipartite:
            return p[0] + p[1];
        case FamilyKind::Star:
            return p[0] + 1;
        case FamilyKind::F1:
            return 2 * p[0] + 2;
        case FamilyKind::F2:
            return 3 * p[0];
        case FamilyKind::F3:
        case FamilyKind::F4:
            return 2 * p[0] + 2;
        case FamilyKind::T:
            return p[0] + 2;
        case FamilyKind::B:
            return p[0] + 6;
        case FamilyKind::FrakK:
            return p[0] * (p[1] + 2);
        case FamilyKind::FrakF:
            return 2 * p[0] + p[1] + 2;
        case FamilyKind::H1:
            return (p[0] + 1) * p[1] + 2 * p[0];
        case FamilyKind::H3:
        case FamilyKind::H4:
            return (p[0] + 1) * p[1] + 2 * p[0] + 2;
        case FamilyKind::FrakH:
            return (p[0] + 1) * p[1] + p[0] * (p[2] + 2);
    }
    throw BadParams("unknown family kind");
}

namespace {

// Spine vertex j (1-based) of chained path i (1-based), paths of t vertices.
int spine(int i, int j, int t) { return (i - 1) * t + (j - 1); }

void build_spines(Builder& b, int s, int t) {
    for (int i = 1; i <= s + 1; ++i)
        for (int j = 1; j <= t; ++j) {
            b.mark("u" + std::to_string(i) + "_" + std::to_string(j), spine(i, j, t));
            if (j > 1) b.edge(spine(i, j - 1, t), spine(i, j, t));
        }
}

}  // namespace

GeneratedGraph generate(const FamilySpec& spec) {
    validate(spec);
    const auto& p = spec.params;
    switch (spec.kind) {
        case FamilyKind::Path: {
            Builder b(p[0]);
            for (int v = 1; v < p[0]; ++v) b.edge(v - 1, v);
            return b.finish();
        }
        case FamilyKind::Cycle: {
            Builder b(p[0]);
            for (int v = 1; v < p[0]; ++v) b.edge(v - 1, v);
            b.edge(p[0] - 1, 0);
            return b.finish();
        }
        case FamilyKind::Complete: {
            Builder b(p[0]);
            for (int u = 0; u < p[0]; ++u)
                for (int v = u + 1; v < p[0]; ++v) b.edge(u, v);
            return b.finish();
        }
        case FamilyKind::Empty:
            return Builder(p[0]).finish();
        case FamilyKind::CompleteBipartite: {
            Builder b(p[0] + p[1]);
            for (int u = 0; u < p[0]; ++u)
                for (int v = 0; v < p[1]; ++v) b.edge(u, p[0] + v);
            return b.finish();
        }
        case FamilyKind::Star: {
            Builder b(p[0] + 1);
            b.mark("center", 0);
            for (int v = 1; v <= p[0]; ++v) b.edge(0, v);
            return b.finish();
        }
        case FamilyKind::F1: {
            int n = p[0];
            Builder b(2 * n + 2);
            for (int v = 1; v <= 2 * n; ++v) b.edge(v - 1, v);
            b.edge(n, 2 * n + 1);
            b.mark("center", n);
            b.mark("pendant", 2 * n + 1);
            return b.finish();
        }
        case FamilyKind::F2: {
            int n = p[0];
            Builder b(3);
            b.edge(0, 1);
            b.edge(1, 2);
            b.edge(0, 2);
            for (int v = 0; v < 3; ++v) {
                b.mark("k" + std::to_string(v + 1), v);
                b.mark("end" + std::to_string(v + 1), b.attach_path(v, n));
            }
            return b.finish();
        }
        case FamilyKind::F3:
        case FamilyKind::F4: {
            int n = p[0];
            Builder b(4);
            b.edge(0, 1);
            b.edge(1, 2);
            b.edge(2, 3);
            b.edge(0, 3);
            if (spec.kind == FamilyKind::F4) b.edge(0, 2);
            b.mark("attach1", 0);
            b.mark("attach2", 2);
            b.mark("end1", b.attach_path(0, n));
            b.mark("end2", b.attach_path(2, n));
            return b.finish();
        }
        case FamilyKind::T: {
            int n = p[0];
            Builder b(n);
            for (int v = 1; v < n; ++v) b.edge(v - 1, v);
            b.mark("root", 0);
            b.mark("branch", n - 1);
            b.edge(n - 1, b.add());
            b.edge(n - 1, b.add());
            return b.finish();
        }
        case FamilyKind::B: {
            int i = p[0];
            int n = i + 2;  // spine length of the underlying spider
            Builder b(n);
            for (int v = 1; v < n; ++v) b.edge(v - 1, v);
            b.mark("root", 0);
            b.mark("branch", n - 1);
            b.edge(n - 1, b.add());
            b.edge(n - 1, b.add());
            b.edge(0, b.add());
            b.edge(0, b.add());
            return b.finish();
        }
        case FamilyKind::FrakK: {
            int n = p[0], q = p[1];
            Builder b(n);
            for (int u = 0; u < n; ++u)
                for (int v = u + 1; v < n; ++v) b.edge(u, v);
            for (int v = 0; v < n; ++v) {
                b.mark("k" + std::to_string(v + 1), v);
                b.mark("branch" + std::to_string(v + 1), b.attach_spider(v, q));
            }
            return b.finish();
        }
        case FamilyKind::FrakF: {
            int n = p[0], q = p[1];
            Builder b(3);
            b.edge(0, 1);
            b.edge(1, 2);
            b.edge(0, 2);
            b.mark("k1", 0);
            b.mark("k2", 1);
            b.mark("k3", 2);
            b.mark("branch", b.attach_spider(0, q));
            b.mark("end1", b.attach_path(1, n));
            b.mark("end2", b.attach_path(2, n));
            return b.finish();
        }
        case FamilyKind::H1: {
            int s = p[0], t = p[1];
            Builder b((s + 1) * t);
            build_spines(b, s, t);
            for (int i = 1; i <= s; ++i) {
                int v = b.add();
                int w = b.add();
                b.mark("v" + std::to_string(i), v);
                b.mark("w" + std::to_string(i), w);
                b.edge(v, w);
                b.edge(v, spine(i, t, t));
                b.edge(v, spine(i + 1, 1, t));
            }
            return b.finish();
        }
        case FamilyKind::H3:
        case FamilyKind::H4: {
            int s = p[0], t = p[1];
            Builder b((s + 1) * t);
            build_spines(b, s, t);
            for (int i = 1; i <= s; ++i) {
                int v = b.add();
                int w = b.add();
                b.mark("v" + std::to_string(i), v);
                b.mark("w" + std::to_string(i), w);
                b.edge(v, spine(i, t, t));
                b.edge(v, spine(i + 1, 1, t));
                b.edge(w, spine(i, t, t));
                b.edge(w, spine(i + 1, 1, t));
                if (spec.kind == FamilyKind::H4) b.edge(spine(i, t, t), spine(i + 1, 1, t));
            }
            int x = b.add();
            int y = b.add();
            b.mark("x", x);
            b.mark("y", y);
            b.edge(x, spine(1, 1, t));
            b.edge(y, spine(s + 1, t, t));
            return b.finish();
        }
        case FamilyKind::FrakH: {
            int s = p[0], t = p[1], q = p[2];
            Builder b((s + 1) * t);
            build_spines(b, s, t);
            for (int i = 1; i <= s; ++i) {
                int v = b.add();
                b.mark("v" + std::to_string(i), v);
                b.mark("branch" + std::to_string(i), b.attach_spider(v, q));
                b.edge(spine(i, t, t), spine(i + 1, 1, t));
                b.edge(spine(i, t, t), v);
                b.edge(spine(i + 1, 1, t), v);
            }
            return b.finish();
        }
    }
    throw BadParams("unknown family kind");
}

std::optional<int> predicted_deficiency(const FamilySpec& spec) {
    validate(spec);
    const auto& p = spec.params;
    switch (spec.kind) {
        case FamilyKind::Path:
        case FamilyKind::Cycle:
        case FamilyKind::Complete:
            return p[0] % 2;
        case FamilyKind::Empty:
            return p[0];
        case FamilyKind::CompleteBipartite:
            return std::abs(p[0] - p[1]);
        case FamilyKind::Star:
            return p[0] - 1;
        case FamilyKind::H1:
        case FamilyKind::H3:
        case FamilyKind::H4:
            return (p[1] % 2 != 0) ? p[0] + 1 : 0;
        case FamilyKind::FrakK:
            return (p[0] * (p[1] + 1)) % 2 == 0 ? p[0] : p[0] + 1;
        case FamilyKind::FrakH: {
            long long s = p[0], t = p[1], q = p[2];
            return (t * (s + 1) + s * (q + 1)) % 2 == 0 ? p[0] : p[0] + 1;
        }
        case FamilyKind::F1:
        case FamilyKind::F2:
        case FamilyKind::F3:
        case FamilyKind::F4:
        case FamilyKind::T:
        case FamilyKind::B:
        case FamilyKind::FrakF:
            return std::nullopt;
    }
    throw BadParams("unknown family kind");
}

std::vector<FamilySpec> characterization_family(CharacterizationVariant variant, int n) {
    if (n < 4 || n % 2 != 0)
        throw BadParams("characterization families are defined for even n >= 4");
    std::vector<FamilySpec> out;
    out.push_back({FamilyKind::Star, {n}});
    if (variant == CharacterizationVariant::A) {
        out.push_back({FamilyKind::T, {n}});
        for (int p = 1; p <= n / 2 - 1; ++p) out.push_back({FamilyKind::FrakK, {n, p}});
    } else {
        out.push_back({FamilyKind::F1, {n}});
        out.push_back({FamilyKind::F2, {n}});
        out.push_back({FamilyKind::F3, {n}});
        out.push_back({FamilyKind::F4, {n}});
        for (int p = 1; p <= n - 2; ++p) out.push_back({FamilyKind::FrakF, {n, p}});
        for (int p = 1; p <= n - 2; ++p) out.push_back({FamilyKind::FrakK, {n, p}});
    }
    return out;
}

std::vector<FamilySpec> witness_graphs(int c, int h) {
    if (c < 0 || h < 1) throw BadParams("witness constructions need c >= 0 and h >= 1");
    int s = c + 1;
    int p = h + 1;
    int t = (h % 2 == 0) ? h + 1 : h + 2;  // smallest odd integer above h
    return {
        {FamilyKind::FrakH, {s, t, p}},
        {FamilyKind::H1, {s, t}},
        {FamilyKind::H3, {s, t}},
        {FamilyKind::H4, {s, t}},
    };
}

}  // namespace deflab
