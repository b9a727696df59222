#pragma once

#include "error.hpp"
#include "graph.hpp"

#include <charconv>
#include <cmath>
#include <cstdint>
#include <limits>
#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace alliance {

// ---------------------------------------------------------------------------
// Deterministic randomness
//
// All random families draw from std::mt19937_64 (the 64-bit Mersenne Twister,
// whose output sequence is fixed by the standard). Distributions are derived
// by hand rather than through <random> distribution objects, whose algorithms
// are implementation-defined, so a seed yields the same graph on every
// toolchain.
// ---------------------------------------------------------------------------

/// Uniform double in [0, 1) from the top 53 bits of one engine draw.
inline double uniform_unit(std::mt19937_64& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

/// Uniform integer in [0, bound) by rejection; bound > 0.
inline std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t bound) {
    const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                                std::numeric_limits<std::uint64_t>::max() % bound;
    std::uint64_t x;
    do {
        x = rng();
    } while (x >= limit);
    return x % bound;
}

/// SplitMix64 finalizer; used to derive independent per-sample seeds.
inline std::uint64_t mix_seed(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

// ---------------------------------------------------------------------------
// Named constructors
// ---------------------------------------------------------------------------

inline Graph complete_graph(std::size_t n) {
    std::vector<Edge> e;
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v) e.emplace_back(u, v);
    return Graph(n, e);
}

inline Graph empty_graph(std::size_t n) { return Graph(n, {}); }

/// Parts {0..a-1} and {a..a+b-1}.
inline Graph complete_bipartite(std::size_t a, std::size_t b) {
    if (a + b == 0) throw InvalidArgument("complete_bipartite: a + b must be positive");
    std::vector<Edge> e;
    for (Vertex u = 0; u < a; ++u)
        for (Vertex v = 0; v < b; ++v) e.emplace_back(u, static_cast<Vertex>(a + v));
    return Graph(a + b, e);
}

inline Graph star(std::size_t leaves) { return complete_bipartite(1, leaves); }

inline Graph cycle_graph(std::size_t n) {
    if (n < 3) throw InvalidArgument("cycle: requires n >= 3");
    std::vector<Edge> e;
    for (Vertex v = 0; v < n; ++v) e.emplace_back(v, static_cast<Vertex>((v + 1) % n));
    return Graph(n, e);
}

/// Path on n vertices 0-1-...-(n-1).
inline Graph path_graph(std::size_t n) {
    if (n < 1) throw InvalidArgument("path: requires n >= 1");
    std::vector<Edge> e;
    for (Vertex v = 0; v + 1 < n; ++v) e.emplace_back(v, v + 1);
    return Graph(n, e);
}

/// Cartesian product P_rows × P_cols; vertex (i, j) is i*cols + j.
inline Graph grid_graph(std::size_t rows, std::size_t cols) {
    if (rows < 1 || cols < 1) throw InvalidArgument("grid: requires rows, cols >= 1");
    std::vector<Edge> e;
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) {
            const auto v = static_cast<Vertex>(i * cols + j);
            if (j + 1 < cols) e.emplace_back(v, v + 1);
            if (i + 1 < rows) e.emplace_back(v, static_cast<Vertex>(v + cols));
        }
    return Graph(rows * cols, e);
}

/// Q_d: vertices are d-bit words, adjacent when they differ in one bit.
inline Graph hypercube(std::size_t d) {
    if (d > 20) throw InvalidArgument("hypercube: dimension above 20 is not supported");
    const std::size_t n = std::size_t{1} << d;
    std::vector<Edge> e;
    for (Vertex v = 0; v < n; ++v)
        for (std::size_t b = 0; b < d; ++b) {
            const auto w = static_cast<Vertex>(v ^ (Vertex{1} << b));
            if (v < w) e.emplace_back(v, w);
        }
    return Graph(n, e);
}

/// Outer 5-cycle 0..4, inner pentagram 5..9, spokes i - i+5.
inline Graph petersen() {
    std::vector<Edge> e;
    for (Vertex i = 0; i < 5; ++i) {
        e.emplace_back(i, (i + 1) % 5);
        e.emplace_back(i + 5, (i + 2) % 5 + 5);
        e.emplace_back(i, i + 5);
    }
    return Graph(10, e);
}

/**
 * The icosahedron, hard-coded.
 *
 * Labeling: 0 is the top apex, 1..5 the upper pentagon u_k = 1+k,
 * 6..10 the lower pentagon l_k = 6+k, 11 the bottom apex. Besides the two
 * pentagons and the apex spokes, u_k is joined to l_k and l_{k+1 mod 5}.
 */
inline Graph icosahedron() {
    static constexpr Edge edges[] = {
        // top apex
        {0, 1}, {0, 2}, {0, 3}, {0, 4}, {0, 5},
        // upper pentagon
        {1, 2}, {2, 3}, {3, 4}, {4, 5}, {1, 5},
        // zig-zag band
        {1, 6}, {1, 7}, {2, 7}, {2, 8}, {3, 8}, {3, 9}, {4, 9}, {4, 10}, {5, 10}, {5, 6},
        // lower pentagon
        {6, 7}, {7, 8}, {8, 9}, {9, 10}, {6, 10},
        // bottom apex
        {11, 6}, {11, 7}, {11, 8}, {11, 9}, {11, 10},
    };
    return Graph(12, std::vector<Edge>(std::begin(edges), std::end(edges)));
}

/// K_n minus the perfect matching {0-1, 2-3, ...}; n even.
inline Graph complete_minus_matching(std::size_t n) {
    if (n == 0 || n % 2 != 0) throw InvalidArgument("complete_minus_matching: requires even n >= 2");
    std::vector<Edge> e;
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v)
            if (!(u % 2 == 0 && v == u + 1)) e.emplace_back(u, v);
    return Graph(n, e);
}

/// Vertices of h are shifted by g.order().
inline Graph disjoint_union(const Graph& g, const Graph& h) {
    auto e = g.edges();
    const auto shift = static_cast<Vertex>(g.order());
    for (auto [u, v] : h.edges()) e.emplace_back(u + shift, v + shift);
    return Graph(g.order() + h.order(), e);
}

/// Disjoint union plus every edge between the two vertex sets.
inline Graph join(const Graph& g, const Graph& h) {
    auto e = disjoint_union(g, h).edges();
    const auto shift = static_cast<Vertex>(g.order());
    for (Vertex u = 0; u < g.order(); ++u)
        for (Vertex v = 0; v < h.order(); ++v) e.emplace_back(u, v + shift);
    return Graph(g.order() + h.order(), e);
}

/// Erdős–Rényi G(n, p): pairs (u, v), u < v, visited in lexicographic order,
/// each kept iff one uniform draw falls below p.
inline Graph gnp(std::size_t n, double p, std::uint64_t seed) {
    if (!(p >= 0.0 && p <= 1.0)) throw InvalidArgument("gnp: probability must lie in [0, 1]");
    if (n < 1) throw InvalidArgument("gnp: requires n >= 1");
    std::mt19937_64 rng(seed);
    std::vector<Edge> e;
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v)
            if (uniform_unit(rng) < p) e.emplace_back(u, v);
    return Graph(n, e);
}

/// Uniform-ish random d-regular graph: configuration model, restarting the
/// whole pairing whenever it produces a loop or a repeated edge.
inline Graph random_regular(std::size_t n, std::size_t d, std::uint64_t seed,
                            std::size_t max_attempts = 100000) {
    if (n < 1) throw InvalidArgument("random_regular: requires n >= 1");
    if (d >= n) throw InvalidArgument("random_regular: requires d < n");
    if ((n * d) % 2 != 0) throw InvalidArgument("random_regular: requires n*d even");
    std::mt19937_64 rng(seed);
    std::vector<Vertex> points(n * d);
    for (std::size_t attempt = 0; attempt < max_attempts; ++attempt) {
        for (std::size_t i = 0; i < points.size(); ++i) points[i] = static_cast<Vertex>(i / d);
        for (std::size_t i = points.size(); i > 1; --i)
            std::swap(points[i - 1], points[uniform_below(rng, i)]);
        std::vector<Edge> e;
        VertexSet seen_pairs(n * n);
        bool ok = true;
        for (std::size_t i = 0; ok && i < points.size(); i += 2) {
            Vertex u = points[i], v = points[i + 1];
            if (u == v) {
                ok = false;
                break;
            }
            if (u > v) std::swap(u, v);
            const auto key = static_cast<Vertex>(u * n + v);
            if (seen_pairs.contains(key)) ok = false;
            seen_pairs.insert(key);
            e.emplace_back(u, v);
        }
        if (ok) return Graph(n, e);
    }
    throw InvalidArgument("random_regular: no simple pairing found within the attempt budget");
}

// ---------------------------------------------------------------------------
// Family specs
// ---------------------------------------------------------------------------

enum class Family {
    complete,
    complete_bipartite,
    cycle,
    path,
    grid,
    hypercube,
    petersen,
    icosahedron,
    complete_minus_matching,
    join,
    disjoint_union,
    gnp,
    random_regular,
    star,
    empty,
};

/**
 * A textual, reproducible description of a graph.
 *
 * Grammar:
 *   spec    := name [":" param]* [":seed=" uint64]
 *            | ("join" | "union") "(" spec "," spec ")"
 *   name    := complete | complete_bipartite | cycle | path | grid | hypercube
 *            | petersen | icosahedron | complete_minus_matching | gnp
 *            | random_regular | star | empty
 *
 * Integer parameters for every family except gnp, whose second parameter is
 * the edge probability. Random families default to seed 0.
 */
struct GraphFamilySpec {
    Family family = Family::complete;
    std::vector<std::size_t> params;
    double probability = 0.0;
    std::optional<std::uint64_t> seed;
    std::vector<GraphFamilySpec> operands;

    bool is_random() const {
        if (family == Family::gnp || family == Family::random_regular) return true;
        for (const auto& o : operands)
            if (o.is_random()) return true;
        return false;
    }

    friend bool operator==(const GraphFamilySpec&, const GraphFamilySpec&) = default;
};

namespace detail {

struct FamilyInfo {
    Family family;
    std::string_view name;
    std::size_t arity;
};

inline constexpr FamilyInfo family_table[] = {
    {Family::complete, "complete", 1},
    {Family::complete_bipartite, "complete_bipartite", 2},
    {Family::cycle, "cycle", 1},
    {Family::path, "path", 1},
    {Family::grid, "grid", 2},
    {Family::hypercube, "hypercube", 1},
    {Family::petersen, "petersen", 0},
    {Family::icosahedron, "icosahedron", 0},
    {Family::complete_minus_matching, "complete_minus_matching", 1},
    {Family::join, "join", 0},
    {Family::disjoint_union, "union", 0},
    {Family::gnp, "gnp", 2},
    {Family::random_regular, "random_regular", 2},
    {Family::star, "star", 1},
    {Family::empty, "empty", 1},
};

inline const FamilyInfo& info(Family f) {
    for (const auto& i : family_table)
        if (i.family == f) return i;
    throw InvalidArgument("unknown family");
}

inline std::string format_probability(double p) {
    char buf[32];
    auto [end, ec] = std::to_chars(buf, buf + sizeof buf, p);
    return std::string(buf, end);
}

class SpecParser {
public:
    explicit SpecParser(std::string_view text) : text_(text) {}

    GraphFamilySpec parse() {
        auto spec = parse_spec();
        if (pos_ != text_.size()) fail("trailing characters");
        return spec;
    }

private:
    GraphFamilySpec parse_spec() {
        const std::size_t start = pos_;
        while (pos_ < text_.size() && text_[pos_] != ':' && text_[pos_] != '(' && text_[pos_] != ',' &&
               text_[pos_] != ')')
            ++pos_;
        std::string name(text_.substr(start, pos_ - start));
        if (name == "disjoint_union") name = "union";
        const FamilyInfo* fi = nullptr;
        for (const auto& i : family_table)
            if (i.name == name) fi = &i;
        if (!fi) {
            pos_ = start;
            fail("unknown family '" + name + "'");
        }
        GraphFamilySpec spec;
        spec.family = fi->family;
        if (fi->family == Family::join || fi->family == Family::disjoint_union) {
            expect('(');
            spec.operands.push_back(parse_spec());
            expect(',');
            spec.operands.push_back(parse_spec());
            expect(')');
            return spec;
        }
        std::vector<std::string> fields;
        while (pos_ < text_.size() && text_[pos_] == ':') {
            ++pos_;
            const std::size_t fstart = pos_;
            while (pos_ < text_.size() && text_[pos_] != ':' && text_[pos_] != ',' && text_[pos_] != ')')
                ++pos_;
            fields.emplace_back(text_.substr(fstart, pos_ - fstart));
        }
        if (!fields.empty() && fields.back().rfind("seed=", 0) == 0) {
            spec.seed = to_uint(fields.back().substr(5));
            fields.pop_back();
        }
        if (fields.size() != fi->arity)
            fail("family '" + name + "' expects " + std::to_string(fi->arity) + " parameter(s), got " +
                 std::to_string(fields.size()));
        for (std::size_t i = 0; i < fields.size(); ++i) {
            if (fi->family == Family::gnp && i == 1)
                spec.probability = to_double(fields[i]);
            else
                spec.params.push_back(static_cast<std::size_t>(to_uint(fields[i])));
        }
        return spec;
    }

    void expect(char c) {
        if (pos_ >= text_.size() || text_[pos_] != c) fail(std::string("expected '") + c + "'");
        ++pos_;
    }

    std::uint64_t to_uint(const std::string& s) {
        std::uint64_t v = 0;
        auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
        if (ec != std::errc{} || p != s.data() + s.size() || s.empty())
            fail("expected a non-negative integer, got '" + s + "'");
        return v;
    }

    double to_double(const std::string& s) {
        double v = 0;
        auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
        if (ec != std::errc{} || p != s.data() + s.size() || s.empty())
            fail("expected a real number, got '" + s + "'");
        return v;
    }

    [[noreturn]] void fail(const std::string& msg) {
        throw ParseError("family spec '" + std::string(text_) + "': " + msg + " at offset " +
                             std::to_string(pos_),
                         pos_);
    }

    std::string_view text_;
    std::size_t pos_ = 0;
};

} // namespace detail

inline GraphFamilySpec parse_family_spec(std::string_view text) {
    return detail::SpecParser(text).parse();
}

/// Inverse of parse_family_spec.
inline std::string to_string(const GraphFamilySpec& spec) {
    const auto& fi = detail::info(spec.family);
    std::string out(fi.name);
    if (!spec.operands.empty())
        return out + "(" + to_string(spec.operands.at(0)) + "," + to_string(spec.operands.at(1)) + ")";
    for (std::size_t i = 0; i < spec.params.size(); ++i) {
        out += ":" + std::to_string(spec.params[i]);
        if (spec.family == Family::gnp && i == 0) out += ":" + detail::format_probability(spec.probability);
    }
    if (spec.seed) out += ":seed=" + std::to_string(*spec.seed);
    return out;
}

inline Graph build(const GraphFamilySpec& spec) {
    const auto& p = spec.params;
    const auto need = [&](std::size_t k) {
        if (p.size() != k)
            throw InvalidArgument(std::string(detail::info(spec.family).name) + ": expects " +
                                  std::to_string(k) + " parameter(s)");
    };
    const std::uint64_t seed = spec.seed.value_or(0);
    switch (spec.family) {
    case Family::complete:
        need(1);
        if (p[0] < 1) throw InvalidArgument("complete: requires n >= 1");
        return complete_graph(p[0]);
    case Family::complete_bipartite:
        need(2);
        return complete_bipartite(p[0], p[1]);
    case Family::cycle:
        need(1);
        return cycle_graph(p[0]);
    case Family::path:
        need(1);
        return path_graph(p[0]);
    case Family::grid:
        need(2);
        return grid_graph(p[0], p[1]);
    case Family::hypercube:
        need(1);
        return hypercube(p[0]);
    case Family::petersen:
        need(0);
        return petersen();
    case Family::icosahedron:
        need(0);
        return icosahedron();
    case Family::complete_minus_matching:
        need(1);
        return complete_minus_matching(p[0]);
    case Family::star:
        need(1);
        return star(p[0]);
    case Family::empty:
        need(1);
        if (p[0] < 1) throw InvalidArgument("empty: requires n >= 1");
        return empty_graph(p[0]);
    case Family::gnp:
        need(1);
        return gnp(p[0], spec.probability, seed);
    case Family::random_regular:
        need(2);
        return random_regular(p[0], p[1], seed);
    case Family::join:
    case Family::disjoint_union: {
        if (spec.operands.size() != 2)
            throw InvalidArgument("join/union: expects exactly two operand graphs");
        const Graph a = build(spec.operands[0]);
        const Graph b = build(spec.operands[1]);
        return spec.family == Family::join ? join(a, b) : disjoint_union(a, b);
    }
    }
    throw InvalidArgument("unknown family");
}

inline Graph build(std::string_view spec_text) { return build(parse_family_spec(spec_text)); }

/// Replaces the seed of every random family in `spec` (recursively).
inline GraphFamilySpec with_seed(GraphFamilySpec spec, std::uint64_t seed) {
    if (spec.family == Family::gnp || spec.family == Family::random_regular) spec.seed = seed;
    for (std::size_t i = 0; i < spec.operands.size(); ++i)
        spec.operands[i] = with_seed(std::move(spec.operands[i]), mix_seed(seed + i));
    return spec;
}

} // namespace alliance
