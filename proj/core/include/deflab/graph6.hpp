#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "deflab/graph.hpp"

namespace deflab {

// Encode in graph6 format: a size prefix followed by the upper triangle of the
// adjacency matrix, read column by column, packed big-endian into 6-bit groups
// offset by 63. Orders up to 62 use a single size byte; larger orders use the
// 126-prefixed multi-byte forms.
std::string encode_graph6(const Graph& g);

// Strict decoder; throws MalformedGraph6 on bad size prefixes, characters
// outside the printable range, truncated payloads, or nonzero padding bits.
// A leading ">>graph6<<" marker is tolerated.
Graph decode_graph6(std::string_view s);

// One graph per line; blank lines are skipped.
std::vector<Graph> read_graph6_file(const std::string& path);
void write_graph6_file(const std::string& path, std::span<const Graph> graphs);

// Plain edge-list text: first non-comment line "n m", then m lines "u v".
// Lines starting with '#' are comments.
std::string encode_edge_list(const Graph& g);
Graph decode_edge_list(std::string_view text);

// Reads a whole file and parses it as either graph6 lines or a single
// edge-list graph, deciding by shape: a first data line matching "<int> <int>"
// is treated as an edge-list header, anything else as graph6.
std::vector<Graph> load_graphs(const std::string& path);

// Parses one graph from a string using the same format sniffing.
Graph parse_graph(std::string_view text);

}  // namespace deflab
