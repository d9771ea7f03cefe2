#include "deflab/graph6.hpp"

#include <cctype>
#include <fstream>
#include <sstream>
#include <string>

namespace deflab {

namespace {

constexpr long long kMaxOrder = (1LL << 36) - 1;

bool valid_char(char c) { return c >= 63 && c <= 126; }

std::string_view strip_marker(std::string_view s) {
    constexpr std::string_view marker = ">>graph6<<";
    if (s.substr(0, marker.size()) == marker) s.remove_prefix(marker.size());
    return s;
}

std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.back() == '\n' || s.back() == '\r' || s.back() == ' ' || s.back() == '\t'))
        s.remove_suffix(1);
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
    return s;
}

}  // namespace

std::string encode_graph6(const Graph& g) {
    long long n = g.order();
    if (n > kMaxOrder) throw BadParams("graph6 encodes orders up to 2^36-1");
    std::string out;
    if (n <= 62) {
        out.push_back(static_cast<char>(n + 63));
    } else if (n <= 258047) {
        out.push_back(126);
        for (int shift = 12; shift >= 0; shift -= 6)
            out.push_back(static_cast<char>(((n >> shift) & 63) + 63));
    } else {
        out.push_back(126);
        out.push_back(126);
        for (int shift = 30; shift >= 0; shift -= 6)
            out.push_back(static_cast<char>(((n >> shift) & 63) + 63));
    }
    int acc = 0, nbits = 0;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i) {
            acc = (acc << 1) | (g.adjacent(i, j) ? 1 : 0);
            if (++nbits == 6) {
                out.push_back(static_cast<char>(acc + 63));
                acc = 0;
                nbits = 0;
            }
        }
    if (nbits > 0) out.push_back(static_cast<char>((acc << (6 - nbits)) + 63));
    return out;
}

Graph decode_graph6(std::string_view s) {
    s = trim(strip_marker(s));
    if (s.empty()) throw MalformedGraph6("empty graph6 string");
    for (char c : s)
        if (!valid_char(c)) throw MalformedGraph6("character out of graph6 range");

    long long n = 0;
    size_t pos = 0;
    if (s[0] != 126) {
        n = s[0] - 63;
        pos = 1;
    } else if (s.size() >= 2 && s[1] != 126) {
        if (s.size() < 4) throw MalformedGraph6("truncated size prefix");
        for (size_t k = 1; k <= 3; ++k) n = (n << 6) | (s[k] - 63);
        if (n <= 62) throw MalformedGraph6("non-minimal size prefix");
        pos = 4;
    } else {
        if (s.size() < 8) throw MalformedGraph6("truncated size prefix");
        for (size_t k = 2; k <= 7; ++k) n = (n << 6) | (s[k] - 63);
        if (n <= 258047) throw MalformedGraph6("non-minimal size prefix");
        pos = 8;
    }
    if (n > (1 << 20))
        throw MalformedGraph6("graph6 order too large for in-memory decoding");

    long long bits = n * (n - 1) / 2;
    size_t need = static_cast<size_t>((bits + 5) / 6);
    if (s.size() - pos != need)
        throw MalformedGraph6(s.size() - pos < need ? "truncated adjacency payload"
                                                    : "trailing characters after payload");
    std::vector<Edge> edges;
    long long bit = 0;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i, ++bit) {
            int c = s[pos + bit / 6] - 63;
            if ((c >> (5 - bit % 6)) & 1) edges.emplace_back(i, j);
        }
    // padding bits beyond the triangle must be zero
    for (long long b = bits; b < static_cast<long long>(need) * 6; ++b) {
        int c = s[pos + b / 6] - 63;
        if ((c >> (5 - b % 6)) & 1) throw MalformedGraph6("nonzero padding bits");
    }
    return Graph(static_cast<int>(n), edges);
}

std::vector<Graph> read_graph6_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw BadParams("cannot open file: " + path);
    std::vector<Graph> out;
    std::string line;
    while (std::getline(in, line)) {
        std::string_view v = trim(line);
        if (v.empty()) continue;
        out.push_back(decode_graph6(v));
    }
    return out;
}

void write_graph6_file(const std::string& path, std::span<const Graph> graphs) {
    std::ofstream out(path);
    if (!out) throw BadParams("cannot open file for writing: " + path);
    for (const Graph& g : graphs) out << encode_graph6(g) << '\n';
}

std::string encode_edge_list(const Graph& g) {
    std::ostringstream out;
    out << g.order() << ' ' << g.size() << '\n';
    for (auto [u, v] : g.edges()) out << u << ' ' << v << '\n';
    return out.str();
}

namespace {

// Data lines of an edge-list text: comments ('#') and blanks dropped.
std::vector<std::string> data_lines(std::string_view text) {
    std::vector<std::string> out;
    size_t start = 0;
    while (start <= text.size()) {
        size_t end = text.find('\n', start);
        if (end == std::string_view::npos) end = text.size();
        std::string_view line = trim(text.substr(start, end - start));
        if (!line.empty() && line[0] != '#') out.emplace_back(line);
        start = end + 1;
        if (end == text.size()) break;
    }
    return out;
}

bool parse_two_ints(const std::string& line, long long& a, long long& b) {
    std::istringstream in(line);
    std::string rest;
    if (!(in >> a >> b)) return false;
    if (in >> rest) return false;
    return true;
}

}  // namespace

Graph decode_edge_list(std::string_view text) {
    auto lines = data_lines(text);
    if (lines.empty()) throw BadParams("edge list: empty input");
    long long n = 0, m = 0;
    if (!parse_two_ints(lines[0], n, m) || n < 0 || m < 0)
        throw BadParams("edge list: first line must be \"n m\"");
    if (static_cast<long long>(lines.size()) - 1 != m)
        throw BadParams("edge list: expected " + std::to_string(m) + " edge lines, got " +
                        std::to_string(lines.size() - 1));
    std::vector<Edge> edges;
    for (size_t k = 1; k < lines.size(); ++k) {
        long long u = 0, v = 0;
        if (!parse_two_ints(lines[k], u, v))
            throw BadParams("edge list: bad edge line: " + lines[k]);
        edges.emplace_back(static_cast<int>(u), static_cast<int>(v));
    }
    return Graph(static_cast<int>(n), edges);
}

namespace {

bool looks_like_edge_list(std::string_view text) {
    auto lines = data_lines(text);
    if (lines.empty()) return false;
    long long a, b;
    return parse_two_ints(lines[0], a, b);
}

}  // namespace

std::vector<Graph> load_graphs(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw BadParams("cannot open file: " + path);
    std::stringstream buf;
    buf << in.rdbuf();
    std::string text = buf.str();
    if (looks_like_edge_list(text)) return {decode_edge_list(text)};
    std::vector<Graph> out;
    for (const std::string& line : data_lines(text)) out.push_back(decode_graph6(line));
    if (out.empty()) throw BadParams("no graphs in file: " + path);
    return out;
}

Graph parse_graph(std::string_view text) {
    if (looks_like_edge_list(text)) return decode_edge_list(text);
    return decode_graph6(text);
}

}  // namespace deflab
