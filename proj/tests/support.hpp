// Shared test helpers: random corpora and a brute-force alliance oracle that
// works from the textbook definitions on a dense adjacency matrix, sharing no
// code with the pruned solver.
#pragma once

#include <alliance/alliance.hpp>

#include <algorithm>
#include <bit>
#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

namespace alliance::testing {

/// A named graph together with its family spec text.
struct NamedGraph {
    std::string name;
    Graph graph;
};

inline std::vector<NamedGraph> named_graphs() {
    std::vector<NamedGraph> out;
    for (const char* spec :
         {"petersen", "icosahedron", "hypercube:3", "complete_minus_matching:6", "grid:2:3", "complete_bipartite:3:6",
          "complete_bipartite:3:3", "join(complete:1,union(complete:2,complete:2))", "complete:2", "complete:4",
          "complete:5", "complete:6", "cycle:4", "cycle:6", "path:5", "star:8"})
        out.push_back({spec, build(spec)});
    return out;
}

/// Seeded connected G(n, p) draws with n in [lo, hi].
inline std::vector<Graph> random_connected_graphs(std::size_t count, std::size_t lo, std::size_t hi,
                                                  std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::vector<Graph> out;
    while (out.size() < count) {
        const std::size_t n = lo + uniform_below(rng, hi - lo + 1);
        const double p = 0.25 + 0.6 * uniform_unit(rng);
        Graph g = gnp(n, p, rng());
        if (is_connected(g)) out.push_back(std::move(g));
    }
    return out;
}

/// Seeded G(n, p) draws, connectivity not enforced.
inline std::vector<Graph> random_graphs(std::size_t count, std::size_t lo, std::size_t hi, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::vector<Graph> out;
    for (std::size_t i = 0; i < count; ++i) {
        const std::size_t n = lo + uniform_below(rng, hi - lo + 1);
        out.push_back(gnp(n, uniform_unit(rng), rng()));
    }
    return out;
}

/// Uniform random proper nonempty subset (requires n >= 2).
inline VertexSet random_proper_subset(std::size_t n, std::mt19937_64& rng) {
    for (;;) {
        VertexSet s(n);
        for (Vertex v = 0; v < n; ++v)
            if (rng() & 1U) s.insert(v);
        if (!s.empty() && s.size() < n) return s;
    }
}

// ---------------------------------------------------------------------------
// Brute-force oracle
// ---------------------------------------------------------------------------

class BruteForce {
public:
    explicit BruteForce(const Graph& g) : n_(g.order()), adj_(n_ * n_, false) {
        for (auto [u, v] : g.edges()) adj_[u * n_ + v] = adj_[v * n_ + u] = true;
    }

    /// inside[v] = |N_S(v)|, outside[v] = |N_{V∖S}(v)|.
    void counts(std::uint64_t s, std::vector<int>& inside, std::vector<int>& outside) const {
        inside.assign(n_, 0);
        outside.assign(n_, 0);
        for (std::size_t v = 0; v < n_; ++v)
            for (std::size_t u = 0; u < n_; ++u)
                if (adj_[v * n_ + u]) ((s >> u) & 1U ? inside : outside)[v]++;
    }

    bool satisfies(std::uint64_t s, const std::string& spec) const {
        std::vector<int> in, out;
        counts(s, in, out);
        const auto member = [&](std::size_t v) { return ((s >> v) & 1U) != 0; };
        const auto defended = [&](int slack) {
            for (std::size_t v = 0; v < n_; ++v)
                if (member(v) && in[v] + slack < out[v]) return false;
            return true;
        };
        const auto dominating = [&] {
            for (std::size_t v = 0; v < n_; ++v)
                if (!member(v) && in[v] == 0) return false;
            return true;
        };
        const auto attacking = [&](int margin, bool everywhere) {
            for (std::size_t v = 0; v < n_; ++v) {
                if (member(v)) continue;
                if (!everywhere && in[v] == 0) continue;
                if (in[v] < out[v] + margin) return false;
            }
            return true;
        };
        if (spec == "def") return defended(1);
        if (spec == "strongdef") return defended(0);
        if (spec == "globdef") return defended(1) && dominating();
        if (spec == "globstrongdef") return defended(0) && dominating();
        if (spec == "off") return attacking(1, false);
        if (spec == "strongoff") return attacking(2, false);
        if (spec == "globoff") return attacking(1, true);
        if (spec == "globstrongoff") return attacking(2, true);
        if (spec == "globdual") return defended(1) && attacking(1, true);
        if (spec == "globstrongdual") return defended(0) && attacking(2, true);
        if (spec == "dom") return dominating();
        throw std::invalid_argument("unknown spec " + spec);
    }

    struct Minimum {
        std::size_t value;
        std::uint64_t witness;
    };

    /// Enumerates all 2^n − 1 nonempty subsets.
    Minimum minimum(const std::string& spec) const {
        std::optional<Minimum> best;
        const std::uint64_t end = std::uint64_t{1} << n_;
        for (std::uint64_t s = 1; s < end; ++s) {
            if (!satisfies(s, spec)) continue;
            const auto k = static_cast<std::size_t>(std::popcount(s));
            if (!best || k < best->value || (k == best->value && lex_less(s, best->witness))) best = Minimum{k, s};
        }
        return *best;
    }

    static bool lex_less(std::uint64_t a, std::uint64_t b) {
        // sorted-member-list order: compare from the lowest vertex upward
        while (a && b) {
            const int la = std::countr_zero(a), lb = std::countr_zero(b);
            if (la != lb) return la < lb;
            a &= a - 1;
            b &= b - 1;
        }
        return !a && b;
    }

private:
    std::size_t n_;
    std::vector<bool> adj_;
};

inline std::uint64_t to_mask(const VertexSet& s) {
    std::uint64_t m = 0;
    s.for_each([&](Vertex v) { m |= std::uint64_t{1} << v; });
    return m;
}

} // namespace alliance::testing
