#pragma once

#include "error.hpp"
#include "vertex_set.hpp"

#include <algorithm>
#include <compare>
#include <cstddef>
#include <limits>
#include <optional>
#include <queue>
#include <string>
#include <utility>
#include <vector>

namespace alliance {

using Edge = std::pair<Vertex, Vertex>;

/**
 * Immutable simple undirected graph on vertices 0..n-1.
 *
 * Adjacency is kept twice: as sorted neighbor lists for iteration and as
 * per-vertex bitsets so that |N(v) ∩ S| is a popcount over a few words.
 * Optional labels remember the names an input file used for each vertex.
 */
class Graph {
public:
    /// Duplicate edges are collapsed; self-loops and out-of-range endpoints
    /// throw InvalidArgument.
    Graph(std::size_t n, const std::vector<Edge>& edges, std::vector<std::string> labels = {})
        : n_(n), adjacency_(n), rows_(n, VertexSet(n)), labels_(std::move(labels)) {
        if (n == 0) throw InvalidArgument("graph must have at least one vertex");
        if (!labels_.empty() && labels_.size() != n)
            throw InvalidArgument("label count does not match vertex count");
        for (auto [u, v] : edges) {
            if (u >= n || v >= n)
                throw InvalidArgument("edge endpoint out of range: " + std::to_string(u) + "-" +
                                      std::to_string(v));
            if (u == v) throw InvalidArgument("self-loop at vertex " + std::to_string(u));
            rows_[u].insert(v);
            rows_[v].insert(u);
        }
        std::size_t degree_sum = 0;
        for (std::size_t v = 0; v < n; ++v) {
            adjacency_[v] = rows_[v].members();
            degree_sum += adjacency_[v].size();
        }
        m_ = degree_sum / 2;
    }

    std::size_t order() const noexcept { return n_; }
    std::size_t size() const noexcept { return m_; }

    std::size_t degree(Vertex v) const { return neighbors(check(v)).size(); }

    const std::vector<Vertex>& neighbors(Vertex v) const { return adjacency_[check(v)]; }

    const VertexSet& neighbor_set(Vertex v) const { return rows_[check(v)]; }

    bool adjacent(Vertex u, Vertex v) const { return rows_[check(u)].contains(check(v)); }

    /// Each edge once, as (u, v) with u < v, in lexicographic order.
    std::vector<Edge> edges() const {
        std::vector<Edge> out;
        out.reserve(m_);
        for (Vertex u = 0; u < n_; ++u)
            for (Vertex v : adjacency_[u])
                if (u < v) out.emplace_back(u, v);
        return out;
    }

    bool has_labels() const noexcept { return !labels_.empty(); }

    /// Input label of v, or its index when the graph was not read from a file.
    std::string label(Vertex v) const {
        check(v);
        return labels_.empty() ? std::to_string(v) : labels_[v];
    }

    const std::vector<std::string>& labels() const noexcept { return labels_; }

    VertexSet empty_set() const { return VertexSet(n_); }
    VertexSet all_vertices() const { return VertexSet::full(n_); }

    friend bool operator==(const Graph& a, const Graph& b) {
        return a.n_ == b.n_ && a.adjacency_ == b.adjacency_;
    }

private:
    Vertex check(Vertex v) const {
        if (v >= n_)
            throw InvalidArgument("vertex " + std::to_string(v) + " out of range (n=" + std::to_string(n_) +
                                  ")");
        return v;
    }

    std::size_t n_;
    std::size_t m_ = 0;
    std::vector<std::vector<Vertex>> adjacency_;
    std::vector<VertexSet> rows_;
    std::vector<std::string> labels_;
};

namespace detail {
inline void check_set(const Graph& g, const VertexSet& s) {
    if (s.universe() != g.order())
        throw InvalidArgument("vertex set universe (" + std::to_string(s.universe()) +
                              ") does not match graph order (" + std::to_string(g.order()) + ")");
}
} // namespace detail

/// |N_S(v)|: neighbors of v inside S.
inline std::size_t neighbors_in(const Graph& g, Vertex v, const VertexSet& s) {
    detail::check_set(g, s);
    return g.neighbor_set(v).intersection_size(s);
}

/// |N_{V∖S}(v)|: neighbors of v outside S.
inline std::size_t neighbors_out(const Graph& g, Vertex v, const VertexSet& s) {
    return g.degree(v) - neighbors_in(g, v, s);
}

/// ∂(S): vertices outside S with at least one neighbor in S.
inline VertexSet boundary(const Graph& g, const VertexSet& s) {
    detail::check_set(g, s);
    if (s.empty()) throw InvalidArgument("boundary of an empty set is undefined");
    VertexSet out(g.order());
    s.for_each([&](Vertex v) { out |= g.neighbor_set(v); });
    return out - s;
}

/// Length of a shortest cycle; infinite for forests. Infinite compares
/// greater than every finite length.
class Girth {
public:
    static Girth infinite() { return Girth{}; }
    static Girth finite(std::size_t length) { return Girth{length}; }

    bool is_infinite() const noexcept { return !length_.has_value(); }
    std::size_t length() const {
        if (!length_) throw UndefinedQuantity("girth is infinite");
        return *length_;
    }

    std::string to_string() const { return length_ ? std::to_string(*length_) : "inf"; }

    friend bool operator==(const Girth&, const Girth&) = default;
    friend std::strong_ordering operator<=>(const Girth& a, const Girth& b) {
        if (a.length_ && b.length_) return *a.length_ <=> *b.length_;
        if (!a.length_ && !b.length_) return std::strong_ordering::equal;
        return a.length_ ? std::strong_ordering::less : std::strong_ordering::greater;
    }

private:
    Girth() = default;
    explicit Girth(std::size_t length) : length_(length) {}
    std::optional<std::size_t> length_;
};

/// BFS from every vertex; a non-tree edge (u, w) closes a cycle of length at
/// most dist(u) + dist(w) + 1, and the minimum over all roots is exact.
inline Girth girth(const Graph& g) {
    const std::size_t n = g.order();
    constexpr std::size_t unseen = std::numeric_limits<std::size_t>::max();
    std::size_t best = unseen;
    std::vector<std::size_t> dist(n);
    std::vector<Vertex> parent(n);
    std::queue<Vertex> frontier;
    for (Vertex root = 0; root < n; ++root) {
        std::fill(dist.begin(), dist.end(), unseen);
        dist[root] = 0;
        parent[root] = root;
        frontier.push(root);
        while (!frontier.empty()) {
            const Vertex u = frontier.front();
            frontier.pop();
            if (2 * dist[u] + 1 >= best) break;
            for (Vertex w : g.neighbors(u)) {
                if (dist[w] == unseen) {
                    dist[w] = dist[u] + 1;
                    parent[w] = u;
                    frontier.push(w);
                } else if (parent[u] != w) {
                    best = std::min(best, dist[u] + dist[w] + 1);
                }
            }
        }
        frontier = {};
    }
    return best == unseen ? Girth::infinite() : Girth::finite(best);
}

/// Component index per vertex, numbered in order of smallest member.
inline std::vector<std::size_t> connected_components(const Graph& g) {
    const std::size_t n = g.order();
    constexpr std::size_t none = std::numeric_limits<std::size_t>::max();
    std::vector<std::size_t> comp(n, none);
    std::size_t next = 0;
    std::vector<Vertex> stack;
    for (Vertex s = 0; s < n; ++s) {
        if (comp[s] != none) continue;
        comp[s] = next;
        stack.push_back(s);
        while (!stack.empty()) {
            const Vertex u = stack.back();
            stack.pop_back();
            for (Vertex w : g.neighbors(u))
                if (comp[w] == none) {
                    comp[w] = next;
                    stack.push_back(w);
                }
        }
        ++next;
    }
    return comp;
}

inline std::size_t component_count(const Graph& g) {
    const auto comp = connected_components(g);
    return comp.empty() ? 0 : *std::max_element(comp.begin(), comp.end()) + 1;
}

inline bool is_connected(const Graph& g) {
    const std::size_t n = g.order();
    std::vector<bool> seen(n, false);
    std::queue<Vertex> q;
    seen[0] = true;
    q.push(0);
    std::size_t reached = 1;
    while (!q.empty()) {
        const Vertex u = q.front();
        q.pop();
        for (Vertex w : g.neighbors(u))
            if (!seen[w]) {
                seen[w] = true;
                ++reached;
                q.push(w);
            }
    }
    return reached == n;
}

struct DegreeStats {
    std::size_t min_degree;
    std::size_t max_degree;
    std::optional<std::size_t> regular; ///< set iff min == max

    friend bool operator==(const DegreeStats&, const DegreeStats&) = default;
};

inline DegreeStats degree_stats(const Graph& g) {
    std::size_t lo = std::numeric_limits<std::size_t>::max();
    std::size_t hi = 0;
    for (Vertex v = 0; v < g.order(); ++v) {
        lo = std::min(lo, g.degree(v));
        hi = std::max(hi, g.degree(v));
    }
    DegreeStats out{lo, hi, std::nullopt};
    if (lo == hi) out.regular = lo;
    return out;
}

} // namespace alliance
