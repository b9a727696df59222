#pragma once

#include "error.hpp"
#include "graph.hpp"

#include <algorithm>
#include <bit>
#include <chrono>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace alliance {

enum class AllianceKind { defensive, offensive, dual };

/**
 * Which alliance variant is meant.
 *
 * `global_` for a defensive alliance adds domination; for an offensive one it
 * moves the per-vertex condition from the boundary to every outside vertex.
 * A dual alliance is only defined globally: defensive AND global offensive,
 * with both halves strong for the strong variant.
 */
class AllianceSpec {
public:
    constexpr AllianceSpec(AllianceKind kind, bool strong, bool global_)
        : kind_(kind), strong_(strong), global_(global_) {
        if (kind == AllianceKind::dual && !global_)
            throw InvalidArgument("dual alliances are only defined in their global form");
    }

    constexpr AllianceKind kind() const noexcept { return kind_; }
    constexpr bool strong() const noexcept { return strong_; }
    constexpr bool global() const noexcept { return global_; }

    friend constexpr bool operator==(const AllianceSpec&, const AllianceSpec&) = default;

private:
    AllianceKind kind_;
    bool strong_;
    bool global_;
};

namespace specs {
inline constexpr AllianceSpec defensive{AllianceKind::defensive, false, false};
inline constexpr AllianceSpec strong_defensive{AllianceKind::defensive, true, false};
inline constexpr AllianceSpec global_defensive{AllianceKind::defensive, false, true};
inline constexpr AllianceSpec global_strong_defensive{AllianceKind::defensive, true, true};
inline constexpr AllianceSpec offensive{AllianceKind::offensive, false, false};
inline constexpr AllianceSpec strong_offensive{AllianceKind::offensive, true, false};
inline constexpr AllianceSpec global_offensive{AllianceKind::offensive, false, true};
inline constexpr AllianceSpec global_strong_offensive{AllianceKind::offensive, true, true};
inline constexpr AllianceSpec global_dual{AllianceKind::dual, false, true};
inline constexpr AllianceSpec global_strong_dual{AllianceKind::dual, true, true};

inline constexpr AllianceSpec all[] = {
    defensive,         strong_defensive,        global_defensive, global_strong_defensive,
    offensive,         strong_offensive,        global_offensive, global_strong_offensive,
    global_dual,       global_strong_dual,
};
} // namespace specs

/// Short names used on the command line and in reports.
inline std::string_view spec_name(const AllianceSpec& s) {
    switch (s.kind()) {
    case AllianceKind::defensive:
        return s.global() ? (s.strong() ? "globstrongdef" : "globdef") : (s.strong() ? "strongdef" : "def");
    case AllianceKind::offensive:
        return s.global() ? (s.strong() ? "globstrongoff" : "globoff") : (s.strong() ? "strongoff" : "off");
    case AllianceKind::dual:
        return s.strong() ? "globstrongdual" : "globdual";
    }
    return "?";
}

inline std::optional<AllianceSpec> spec_from_name(std::string_view name) {
    for (const auto& s : specs::all)
        if (spec_name(s) == name) return s;
    return std::nullopt;
}

namespace detail {

inline bool defensive_ok(const Graph& g, const VertexSet& s, bool strong) {
    bool ok = true;
    s.for_each([&](Vertex v) {
        if (neighbors_in(g, v, s) + (strong ? 0 : 1) < neighbors_out(g, v, s)) ok = false;
    });
    return ok;
}

inline bool dominating_ok(const Graph& g, const VertexSet& s) {
    bool ok = true;
    s.complement().for_each([&](Vertex v) {
        if (neighbors_in(g, v, s) == 0) ok = false;
    });
    return ok;
}

/// Offensive condition over ∂(S), or over all of V∖S when `global_`.
inline bool offensive_ok(const Graph& g, const VertexSet& s, bool strong, bool global_) {
    const std::size_t margin = strong ? 2 : 1;
    bool ok = true;
    s.complement().for_each([&](Vertex v) {
        const std::size_t in = neighbors_in(g, v, s);
        if (!global_ && in == 0) return; // not on the boundary
        if (in < neighbors_out(g, v, s) + margin) ok = false;
    });
    return ok;
}

} // namespace detail

/// Exact evaluation of the alliance conditions for `spec`. Conditions over an
/// empty range hold vacuously, so S = V is an alliance of every kind.
inline bool is_alliance(const Graph& g, const VertexSet& s, const AllianceSpec& spec) {
    detail::check_set(g, s);
    if (s.empty()) throw InvalidArgument("alliances are nonempty by definition");
    switch (spec.kind()) {
    case AllianceKind::defensive:
        return detail::defensive_ok(g, s, spec.strong()) && (!spec.global() || detail::dominating_ok(g, s));
    case AllianceKind::offensive:
        return detail::offensive_ok(g, s, spec.strong(), spec.global());
    case AllianceKind::dual:
        return detail::defensive_ok(g, s, spec.strong()) && detail::offensive_ok(g, s, spec.strong(), true);
    }
    return false;
}

inline bool is_dominating(const Graph& g, const VertexSet& s) {
    detail::check_set(g, s);
    return detail::dominating_ok(g, s);
}

struct SolverLimits {
    /// Largest order accepted without an explicit override. The search is
    /// exponential, so this is a patience guard rather than a hard limit;
    /// orders above 64 are never accepted.
    std::size_t max_n = 24;
    std::optional<std::size_t> max_nodes;
    std::optional<std::chrono::milliseconds> time_budget;
};

inline constexpr std::size_t solver_hard_limit = 64;

struct AllianceResult {
    std::size_t value = 0;
    VertexSet witness;
    std::size_t nodes_explored = 0;
};

namespace detail {

/**
 * Per-vertex cardinality thresholds. A member v needs at least member_need[v]
 * neighbors in S; an outside v needs at least outside_need[v], except that a
 * conditional outside vertex (boundary-only offensive condition) may instead
 * have none.
 */
struct Requirements {
    std::vector<std::size_t> member_need;
    std::vector<std::size_t> outside_need;
    bool outside_conditional = false;
};

inline std::size_t ceil_half(std::size_t x) { return (x + 1) / 2; }

inline Requirements requirements_for(const Graph& g, const AllianceSpec& spec) {
    const std::size_t n = g.order();
    Requirements r{std::vector<std::size_t>(n, 0), std::vector<std::size_t>(n, 0), false};
    const bool defensive = spec.kind() != AllianceKind::offensive;
    const bool offensive = spec.kind() != AllianceKind::defensive;
    for (Vertex v = 0; v < n; ++v) {
        const std::size_t d = g.degree(v);
        if (defensive) {
            // in + slack >= d - in  <=>  in >= ceil((d - slack) / 2)
            const std::size_t slack = spec.strong() ? 0 : 1;
            r.member_need[v] = d >= slack ? ceil_half(d - slack) : 0;
            if (spec.kind() == AllianceKind::defensive && spec.global()) r.outside_need[v] = 1;
        }
        if (offensive) {
            // in >= d - in + margin  <=>  in >= ceil((d + margin) / 2)
            const std::size_t margin = spec.strong() ? 2 : 1;
            r.outside_need[v] = ceil_half(d + margin);
        }
    }
    r.outside_conditional = spec.kind() == AllianceKind::offensive && !spec.global();
    return r;
}

inline Requirements domination_requirements(const Graph& g) {
    return Requirements{std::vector<std::size_t>(g.order(), 0), std::vector<std::size_t>(g.order(), 1), false};
}

/**
 * Cardinality-increasing exact search over k-subsets.
 *
 * For a fixed k the subsets are visited by a depth-first include/exclude
 * decision on vertices 0, 1, ..., n-1, include first, which is the
 * lexicographic order of their sorted member lists. The first feasible
 * subset is therefore the lexicographically smallest one of minimum size.
 *
 * Pruning: with `slots` members still to choose, a decided vertex can gain at
 * most min(undecided neighbors, slots) more neighbors in S. If that cannot
 * reach its threshold the branch is dead.
 */
class ExactSearch {
public:
    ExactSearch(const Graph& g, Requirements req, const SolverLimits& limits)
        : n_(g.order()), req_(std::move(req)), limits_(limits), nbr_(n_, 0) {
        if (n_ > solver_hard_limit)
            throw ResourceLimit("exact solver supports at most " + std::to_string(solver_hard_limit) +
                                " vertices (n=" + std::to_string(n_) + ")");
        if (n_ > limits.max_n)
            throw ResourceLimit("graph order " + std::to_string(n_) + " exceeds the solver ceiling " +
                                std::to_string(limits.max_n) + "; raise it explicitly to proceed");
        for (Vertex v = 0; v < n_; ++v)
            for (Vertex w : g.neighbors(v)) nbr_[v] |= std::uint64_t{1} << w;
        all_ = n_ == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n_) - 1;
    }

    AllianceResult run() {
        start_ = std::chrono::steady_clock::now();
        for (std::size_t k = 1; k <= n_; ++k) {
            k_ = k;
            if (dfs(0, 0, k)) {
                AllianceResult out;
                out.value = k;
                out.witness = VertexSet::from_mask(n_, found_);
                out.nodes_explored = nodes_;
                return out;
            }
        }
        // unreachable for every supported requirement set: S = V always qualifies
        throw std::logic_error("exact search exhausted all cardinalities");
    }

private:
    static std::size_t popcount(std::uint64_t x) { return static_cast<std::size_t>(std::popcount(x)); }

    void tick() {
        ++nodes_;
        if (limits_.max_nodes && nodes_ > *limits_.max_nodes)
            throw SearchTimeout("node budget exhausted while searching cardinality " + std::to_string(k_), k_,
                                nodes_);
        if (limits_.time_budget && (nodes_ & 0xfff) == 0 &&
            std::chrono::steady_clock::now() - start_ > *limits_.time_budget)
            throw SearchTimeout("time budget exhausted while searching cardinality " + std::to_string(k_), k_,
                                nodes_);
    }

    bool feasible(std::uint64_t s, std::uint64_t undecided, std::size_t slots) const {
        std::uint64_t decided = all_ & ~undecided;
        while (decided) {
            const auto v = static_cast<std::size_t>(std::countr_zero(decided));
            decided &= decided - 1;
            const std::size_t in = popcount(nbr_[v] & s);
            const std::size_t reach = in + std::min(popcount(nbr_[v] & undecided), slots);
            if ((s >> v) & 1U) {
                if (reach < req_.member_need[v]) return false;
            } else if (!req_.outside_conditional || in > 0) {
                if (reach < req_.outside_need[v]) return false;
            }
        }
        return true;
    }

    bool satisfied(std::uint64_t s) const {
        for (std::size_t v = 0; v < n_; ++v) {
            const std::size_t in = popcount(nbr_[v] & s);
            if ((s >> v) & 1U) {
                if (in < req_.member_need[v]) return false;
            } else if (!req_.outside_conditional || in > 0) {
                if (in < req_.outside_need[v]) return false;
            }
        }
        return true;
    }

    bool dfs(std::size_t next, std::uint64_t s, std::size_t slots) {
        tick();
        if (slots == 0) {
            if (satisfied(s)) {
                found_ = s;
                return true;
            }
            return false;
        }
        if (n_ - next < slots) return false;
        const std::uint64_t undecided = next >= 64 ? 0 : (all_ & ~((std::uint64_t{1} << next) - 1));
        if (!feasible(s, undecided, slots)) return false;
        const std::uint64_t bit = std::uint64_t{1} << next;
        return dfs(next + 1, s | bit, slots - 1) || dfs(next + 1, s, slots);
    }

    std::size_t n_;
    Requirements req_;
    SolverLimits limits_;
    std::vector<std::uint64_t> nbr_;
    std::uint64_t all_ = 0;
    std::uint64_t found_ = 0;
    std::size_t k_ = 0;
    std::size_t nodes_ = 0;
    std::chrono::steady_clock::time_point start_;
};

} // namespace detail

/// Minimum cardinality of an alliance of kind `spec`, with the
/// lexicographically smallest witness of that size.
inline AllianceResult min_alliance_number(const Graph& g, const AllianceSpec& spec,
                                          const SolverLimits& limits = {}) {
    return detail::ExactSearch(g, detail::requirements_for(g, spec), limits).run();
}

/// γ(Γ): minimum size of a dominating set.
inline AllianceResult domination_number(const Graph& g, const SolverLimits& limits = {}) {
    return detail::ExactSearch(g, detail::domination_requirements(g), limits).run();
}

} // namespace alliance
