#pragma once

#include "error.hpp"
#include "graph.hpp"

#include <algorithm>
#include <cctype>
#include <cstddef>
#include <istream>
#include <iterator>
#include <map>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

namespace alliance {

enum class InputFormat { edgelist, graph6 };

/**
 * Whitespace edge list. One edge "u v" per line; a line with a single token
 * declares an isolated vertex. Tokens are arbitrary labels, numbered in order
 * of first appearance. '#' starts a comment. Repeated edges collapse;
 * self-loops are rejected.
 */
inline Graph parse_edgelist(std::string_view text) {
    std::map<std::string, Vertex, std::less<>> index;
    std::vector<std::string> labels;
    std::vector<Edge> edges;
    const auto vertex = [&](const std::string& token) {
        auto it = index.find(token);
        if (it != index.end()) return it->second;
        const auto v = static_cast<Vertex>(labels.size());
        index.emplace(token, v);
        labels.push_back(token);
        return v;
    };

    std::size_t line_no = 0;
    std::size_t start = 0;
    while (start <= text.size()) {
        std::size_t end = text.find('\n', start);
        if (end == std::string_view::npos) end = text.size();
        std::string_view line = text.substr(start, end - start);
        start = end + 1;
        ++line_no;
        if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);

        std::istringstream tokens{std::string(line)};
        std::vector<std::string> fields{std::istream_iterator<std::string>(tokens),
                                        std::istream_iterator<std::string>()};
        if (fields.empty()) continue;
        if (fields.size() > 2)
            throw ParseError("edgelist line " + std::to_string(line_no) + ": expected 1 or 2 tokens, got " +
                                 std::to_string(fields.size()),
                             line_no);
        if (fields.size() == 1) {
            vertex(fields[0]);
            continue;
        }
        if (fields[0] == fields[1])
            throw ParseError("edgelist line " + std::to_string(line_no) + ": self-loop at '" + fields[0] + "'",
                             line_no);
        const Vertex u = vertex(fields[0]);
        const Vertex v = vertex(fields[1]);
        edges.emplace_back(u, v);
    }
    if (labels.empty()) throw ParseError("edgelist: no vertices", line_no);
    const std::size_t n = labels.size();
    return Graph(n, edges, std::move(labels));
}

/// One edge per line using vertex labels; isolated vertices on their own line.
inline std::string write_edgelist(const Graph& g) {
    std::string out;
    std::vector<bool> touched(g.order(), false);
    for (auto [u, v] : g.edges()) {
        out += g.label(u) + " " + g.label(v) + "\n";
        touched[u] = touched[v] = true;
    }
    for (Vertex v = 0; v < g.order(); ++v)
        if (!touched[v]) out += g.label(v) + "\n";
    return out;
}

namespace detail {
inline constexpr std::string_view graph6_header = ">>graph6<<";
}

/**
 * graph6, as published with nauty: N(n) followed by the upper triangle of
 * the adjacency matrix in column order (x(0,1), x(0,2), x(1,2), x(0,3), ...),
 * packed six bits per byte, big-endian, each byte offset by 63. Only the
 * first graph of the input is read; further non-empty lines are an error.
 */
inline Graph parse_graph6(std::string_view text) {
    std::size_t pos = 0;
    if (text.substr(0, detail::graph6_header.size()) == detail::graph6_header) pos = detail::graph6_header.size();
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view body = text.substr(0, end);
    if (!body.empty() && body.back() == '\r') body.remove_suffix(1);
    for (std::size_t rest = end; rest < text.size(); ++rest)
        if (!std::isspace(static_cast<unsigned char>(text[rest])))
            throw ParseError("graph6: only one graph per input is supported (extra data at offset " +
                                 std::to_string(rest) + ")",
                             rest);

    const auto byte = [&](std::size_t i) -> unsigned {
        if (i >= body.size()) throw ParseError("graph6: truncated input at offset " + std::to_string(i), i);
        const auto c = static_cast<unsigned char>(body[i]);
        if (c < 63 || c > 126)
            throw ParseError("graph6: byte " + std::to_string(c) + " out of range at offset " + std::to_string(i),
                             i);
        return c - 63U;
    };

    std::size_t n = 0;
    if (pos < body.size() && static_cast<unsigned char>(body[pos]) == 126) {
        if (pos + 1 < body.size() && static_cast<unsigned char>(body[pos + 1]) == 126) {
            for (std::size_t i = 0; i < 6; ++i) n = (n << 6) | byte(pos + 2 + i);
            pos += 8;
        } else {
            for (std::size_t i = 0; i < 3; ++i) n = (n << 6) | byte(pos + 1 + i);
            pos += 4;
        }
    } else {
        n = byte(pos);
        pos += 1;
    }
    if (n == 0) throw ParseError("graph6: graph has no vertices", pos);
    if (n > 100000) throw ParseError("graph6: order " + std::to_string(n) + " is too large", pos);

    const std::size_t bits = n * (n - 1) / 2;
    const std::size_t expected = pos + (bits + 5) / 6;
    if (body.size() != expected)
        throw ParseError("graph6: expected " + std::to_string(expected) + " bytes for n=" + std::to_string(n) +
                             ", got " + std::to_string(body.size()),
                         std::min(body.size(), expected));
    std::vector<Edge> edges;
    std::size_t k = 0;
    for (Vertex j = 1; j < n; ++j)
        for (Vertex i = 0; i < j; ++i, ++k) {
            const unsigned word = byte(pos + k / 6);
            if ((word >> (5 - k % 6)) & 1U) edges.emplace_back(i, j);
        }
    return Graph(n, edges);
}

inline std::string write_graph6(const Graph& g, bool with_header = false) {
    std::string out = with_header ? std::string(detail::graph6_header) : std::string();
    const std::size_t n = g.order();
    if (n <= 62) {
        out += static_cast<char>(63 + n);
    } else if (n <= 258047) {
        out += static_cast<char>(126);
        for (int shift = 12; shift >= 0; shift -= 6) out += static_cast<char>(63 + ((n >> shift) & 63));
    } else {
        out += static_cast<char>(126);
        out += static_cast<char>(126);
        for (int shift = 30; shift >= 0; shift -= 6) out += static_cast<char>(63 + ((n >> shift) & 63));
    }
    unsigned word = 0;
    std::size_t k = 0;
    for (Vertex j = 1; j < n; ++j)
        for (Vertex i = 0; i < j; ++i, ++k) {
            word = (word << 1) | (g.adjacent(i, j) ? 1U : 0U);
            if (k % 6 == 5) {
                out += static_cast<char>(63 + word);
                word = 0;
            }
        }
    if (k % 6 != 0) out += static_cast<char>(63 + (word << (6 - k % 6)));
    return out + "\n";
}

inline Graph parse_graph(std::string_view text, InputFormat format) {
    return format == InputFormat::graph6 ? parse_graph6(text) : parse_edgelist(text);
}

inline Graph parse_graph(std::istream& in, InputFormat format) {
    std::string text{std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
    return parse_graph(text, format);
}

} // namespace alliance
