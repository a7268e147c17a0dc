#pragma once

#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>

#include "indpoly/graph.hpp"

namespace indpoly {

// Short-form graph6: one byte n+63 for n <= 62, then ceil(n(n-1)/2 / 6)
// bytes of upper-triangle adjacency bits in column-major order (pairs
// (0,1), (0,2), (1,2), (0,3), ...), six bits per byte, most significant
// first, zero padded. Matches the encoding emitted by the usual catalog
// generators byte for byte.

inline Graph parse_graph6(std::string_view line) {
    constexpr std::string_view header = ">>graph6<<";
    if (line.substr(0, header.size()) == header) line.remove_prefix(header.size());
    if (line.empty()) throw std::invalid_argument("graph6: empty line");
    if (line[0] == '~')
        throw std::invalid_argument("graph6: long form (n > 62) not supported");

    auto decode = [&](std::size_t i) -> int {
        unsigned char c = static_cast<unsigned char>(line[i]);
        if (c < 63 || c > 126)
            throw std::invalid_argument("graph6: byte out of range at position " +
                                        std::to_string(i));
        return c - 63;
    };

    int n = decode(0);
    std::size_t nbits = static_cast<std::size_t>(n) * (n - 1) / 2;
    std::size_t nbytes = (nbits + 5) / 6;
    if (line.size() != 1 + nbytes)
        throw std::invalid_argument("graph6: length mismatch (expected " +
                                    std::to_string(1 + nbytes) + " bytes, got " +
                                    std::to_string(line.size()) + ")");

    std::vector<VertexMask> rows(static_cast<std::size_t>(n), 0);
    std::size_t k = 0;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i, ++k) {
            int b = decode(1 + k / 6);
            if (b & (1 << (5 - k % 6))) {
                rows[i] |= bit(j);
                rows[j] |= bit(i);
            }
        }
    }
    // Padding bits must be zero for a canonical encoding.
    for (; k < nbytes * 6; ++k)
        if (decode(1 + k / 6) & (1 << (5 - k % 6)))
            throw std::invalid_argument("graph6: nonzero padding bits");
    return Graph::from_adjacency(std::move(rows));
}

inline std::string to_graph6(const Graph& g) {
    if (g.n() > 62)
        throw std::invalid_argument("graph6: short form supports n <= 62");
    std::string out;
    out.push_back(static_cast<char>(g.n() + 63));
    int acc = 0, filled = 0;
    for (int j = 1; j < g.n(); ++j) {
        for (int i = 0; i < j; ++i) {
            acc = (acc << 1) | (g.has_edge(i, j) ? 1 : 0);
            if (++filled == 6) {
                out.push_back(static_cast<char>(acc + 63));
                acc = 0;
                filled = 0;
            }
        }
    }
    if (filled > 0) out.push_back(static_cast<char>((acc << (6 - filled)) + 63));
    return out;
}

// Edge-list text format: first line the vertex count, then one "u v" pair
// per line, 0-based.
inline Graph parse_edge_list(std::istream& in) {
    std::string first;
    if (!std::getline(in, first))
        throw std::invalid_argument("edge list: missing vertex count line");
    int n;
    try {
        std::size_t used;
        n = std::stoi(first, &used);
        while (used < first.size() && std::isspace(static_cast<unsigned char>(first[used])))
            ++used;
        if (used != first.size()) throw std::invalid_argument("trailing junk");
    } catch (const std::exception&) {
        throw std::invalid_argument("edge list: bad vertex count line '" + first + "'");
    }
    std::vector<std::pair<int, int>> edges;
    std::string line;
    int lineno = 1;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        std::istringstream ls(line);
        int u, v;
        if (!(ls >> u >> v))
            throw std::invalid_argument("edge list: bad edge on line " +
                                        std::to_string(lineno));
        edges.emplace_back(u, v);
    }
    return Graph(n, edges);
}

inline Graph parse_edge_list(const std::string& text) {
    std::istringstream in(text);
    return parse_edge_list(in);
}

inline std::string to_edge_list(const Graph& g) {
    std::string out = std::to_string(g.n()) + "\n";
    for (auto [u, v] : g.edges())
        out += std::to_string(u) + " " + std::to_string(v) + "\n";
    return out;
}

// Loads a graph from a file holding either an edge list (first byte is a
// digit) or a single graph6 line. The two are distinguishable because a
// short-form graph6 byte is always >= '?' (63).
inline Graph read_graph_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open graph file '" + path + "'");
    int c = in.peek();
    if (c == std::char_traits<char>::eof())
        throw std::invalid_argument("empty graph file '" + path + "'");
    if (std::isdigit(c)) return parse_edge_list(in);
    std::string line;
    std::getline(in, line);
    while (!line.empty() && (line.back() == '\n' || line.back() == '\r'))
        line.pop_back();
    return parse_graph6(line);
}

}  // namespace indpoly
