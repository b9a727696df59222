#pragma once

#include "error.hpp"
#include "graph.hpp"
#include "solver.hpp"
#include "spectral.hpp"

#include <algorithm>
#include <cmath>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace alliance {

/// Integer-valued graph parameters the theorems bound from below.
enum class Quantity {
    a,            ///< defensive alliance number
    a_hat,        ///< strong defensive alliance number
    gamma_a,      ///< global defensive
    gamma_a_hat,  ///< global strong defensive
    gamma_ao,     ///< global offensive
    gamma_ao_hat, ///< global strong offensive
    gamma_ad,     ///< global dual
    gamma_ad_hat, ///< global strong dual
    gamma,        ///< domination number
    girth,
};

inline std::string_view quantity_name(Quantity q) {
    switch (q) {
    case Quantity::a: return "a";
    case Quantity::a_hat: return "a_hat";
    case Quantity::gamma_a: return "gamma_a";
    case Quantity::gamma_a_hat: return "gamma_a_hat";
    case Quantity::gamma_ao: return "gamma_ao";
    case Quantity::gamma_ao_hat: return "gamma_ao_hat";
    case Quantity::gamma_ad: return "gamma_ad";
    case Quantity::gamma_ad_hat: return "gamma_ad_hat";
    case Quantity::gamma: return "gamma";
    case Quantity::girth: return "girth";
    }
    return "?";
}

/// The alliance variant whose minimum is `q`; empty for γ and girth.
inline std::optional<AllianceSpec> spec_for(Quantity q) {
    switch (q) {
    case Quantity::a: return specs::defensive;
    case Quantity::a_hat: return specs::strong_defensive;
    case Quantity::gamma_a: return specs::global_defensive;
    case Quantity::gamma_a_hat: return specs::global_strong_defensive;
    case Quantity::gamma_ao: return specs::global_offensive;
    case Quantity::gamma_ao_hat: return specs::global_strong_offensive;
    case Quantity::gamma_ad: return specs::global_dual;
    case Quantity::gamma_ad_hat: return specs::global_strong_dual;
    case Quantity::gamma:
    case Quantity::girth: return std::nullopt;
    }
    return std::nullopt;
}

enum class TheoremId {
    def_mu,
    strongdef_mu_delta,
    globdef_lambda,
    globdef_degree,
    globdef_degree_prior,
    girth_regular_mu,
    globoff_laplacian,
    globoff_quadratic,
    globdual_lambda,
    globdual_size,
    dom_laplacian,
};

inline constexpr TheoremId all_theorems[] = {
    TheoremId::def_mu,           TheoremId::strongdef_mu_delta, TheoremId::globdef_lambda,
    TheoremId::globdef_degree,   TheoremId::globdef_degree_prior, TheoremId::girth_regular_mu,
    TheoremId::globoff_laplacian, TheoremId::globoff_quadratic, TheoremId::globdual_lambda,
    TheoremId::globdual_size,    TheoremId::dom_laplacian,
};

/// Stable identifiers used in reports.
inline std::string_view theorem_name(TheoremId t) {
    switch (t) {
    case TheoremId::def_mu: return "def-mu";
    case TheoremId::strongdef_mu_delta: return "strongdef-mu-delta";
    case TheoremId::globdef_lambda: return "globdef-lambda";
    case TheoremId::globdef_degree: return "globdef-degree";
    case TheoremId::globdef_degree_prior: return "globdef-degree-prior";
    case TheoremId::girth_regular_mu: return "girth-regular-mu";
    case TheoremId::globoff_laplacian: return "globoff-laplacian";
    case TheoremId::globoff_quadratic: return "globoff-quadratic";
    case TheoremId::globdual_lambda: return "globdual-lambda";
    case TheoremId::globdual_size: return "globdual-size";
    case TheoremId::dom_laplacian: return "dom-laplacian";
    }
    return "?";
}

inline std::optional<TheoremId> theorem_from_name(std::string_view name) {
    for (auto t : all_theorems)
        if (theorem_name(t) == name) return t;
    return std::nullopt;
}

struct BoundResult {
    TheoremId theorem;
    Quantity target;
    std::optional<long long> value; ///< present iff applicable
    bool applicable = false;
    bool degenerate = false; ///< evaluated outside the hypotheses that make it informative
    std::string reason;      ///< why not applicable / why degenerate
    std::vector<std::pair<std::string, double>> inputs;

    friend bool operator==(const BoundResult&, const BoundResult&) = default;
};

inline constexpr double snap_tolerance = 1e-7;

/// ⌈x⌉, except that values within 1e-7 of an integer snap to it, so floating
/// noise just above an integer cannot inflate a bound.
inline long long safe_ceil(double x) {
    if (!std::isfinite(x)) throw InvalidArgument("safe_ceil: non-finite argument");
    const double r = std::round(x);
    if (std::abs(x - r) < snap_tolerance) return static_cast<long long>(r);
    return static_cast<long long>(std::ceil(x));
}

namespace detail {

using Inputs = std::vector<std::pair<std::string, double>>;

inline BoundResult bound(TheoremId t, Quantity q, double raw, Inputs inputs) {
    BoundResult b{t, q, std::max(0LL, safe_ceil(raw)), true, false, {}, std::move(inputs)};
    return b;
}

inline BoundResult not_applicable(TheoremId t, Quantity q, std::string reason, Inputs inputs) {
    return BoundResult{t, q, std::nullopt, false, false, std::move(reason), std::move(inputs)};
}

inline double dbl(std::size_t x) { return static_cast<double>(x); }

} // namespace detail

// Every bound below is ⌈formula⌉ clamped at 0: a negative lower bound on a
// cardinality says nothing and is reported as 0.

/// a ≥ ⌈nμ/(n+μ)⌉ and â ≥ ⌈n(μ+1)/(n+μ)⌉.
inline std::pair<BoundResult, BoundResult> defensive_mu(std::size_t n, double mu) {
    mu = std::max(mu, 0.0);
    const double nd = detail::dbl(n);
    const detail::Inputs in{{"n", nd}, {"mu", mu}};
    return {detail::bound(TheoremId::def_mu, Quantity::a, nd * mu / (nd + mu), in),
            detail::bound(TheoremId::def_mu, Quantity::a_hat, nd * (mu + 1.0) / (nd + mu), in)};
}

/// â ≥ ⌈n(μ − ⌊Δ/2⌋)/μ⌉ for connected graphs.
inline BoundResult strong_defensive_mu_delta(std::size_t n, double mu, std::size_t max_degree, bool connected) {
    const detail::Inputs in{{"n", detail::dbl(n)}, {"mu", mu}, {"Delta", detail::dbl(max_degree)}};
    if (!connected || n < 2)
        return detail::not_applicable(TheoremId::strongdef_mu_delta, Quantity::a_hat,
                                      "requires a connected graph with at least 2 vertices", in);
    const double nd = detail::dbl(n);
    return detail::bound(TheoremId::strongdef_mu_delta, Quantity::a_hat,
                         nd * (mu - detail::dbl(max_degree / 2)) / mu, in);
}

/// γ_a ≥ ⌈n/(λ+2)⌉ and γ_â ≥ ⌈n/(λ+1)⌉.
inline std::pair<BoundResult, BoundResult> global_defensive_lambda(std::size_t n, double lambda) {
    const double nd = detail::dbl(n);
    const detail::Inputs in{{"n", nd}, {"lambda", lambda}};
    return {detail::bound(TheoremId::globdef_lambda, Quantity::gamma_a, nd / (lambda + 2.0), in),
            detail::bound(TheoremId::globdef_lambda, Quantity::gamma_a_hat, nd / (lambda + 1.0), in)};
}

/// γ_a ≥ ⌈2n/(Δ+3)⌉ and γ_â ≥ ⌈n/(⌊Δ/2⌋+1)⌉.
inline std::pair<BoundResult, BoundResult> global_defensive_degree(std::size_t n, std::size_t max_degree) {
    const double nd = detail::dbl(n);
    const detail::Inputs in{{"n", nd}, {"Delta", detail::dbl(max_degree)}};
    return {detail::bound(TheoremId::globdef_degree, Quantity::gamma_a, 2.0 * nd / (detail::dbl(max_degree) + 3.0),
                          in),
            detail::bound(TheoremId::globdef_degree, Quantity::gamma_a_hat,
                          nd / (detail::dbl(max_degree / 2) + 1.0), in)};
}

/// γ_a ≥ ⌈n/(⌈Δ/2⌉+1)⌉, the earlier degree bound that the one above refines.
inline BoundResult global_defensive_degree_prior(std::size_t n, std::size_t max_degree) {
    const double nd = detail::dbl(n);
    return detail::bound(TheoremId::globdef_degree_prior, Quantity::gamma_a,
                         nd / (detail::dbl((max_degree + 1) / 2) + 1.0),
                         {{"n", nd}, {"Delta", detail::dbl(max_degree)}});
}

/// Lower bound on the girth of a connected 3-, 4- or 5-regular graph:
/// ⌈n(μ−1)/μ⌉, ⌈n(μ−2)/μ⌉ and ⌈nμ/(n+μ)⌉ respectively.
inline BoundResult girth_regular_mu(std::size_t n, double mu, std::optional<std::size_t> regular_degree,
                                    bool connected) {
    const double nd = detail::dbl(n);
    detail::Inputs in{{"n", nd}, {"mu", mu}};
    if (regular_degree) in.emplace_back("degree", detail::dbl(*regular_degree));
    if (!connected)
        return detail::not_applicable(TheoremId::girth_regular_mu, Quantity::girth, "graph is not connected", in);
    if (!regular_degree || *regular_degree < 3 || *regular_degree > 5)
        return detail::not_applicable(TheoremId::girth_regular_mu, Quantity::girth,
                                      "requires a 3-, 4- or 5-regular graph", in);
    switch (*regular_degree) {
    case 3: return detail::bound(TheoremId::girth_regular_mu, Quantity::girth, nd * (mu - 1.0) / mu, in);
    case 4: return detail::bound(TheoremId::girth_regular_mu, Quantity::girth, nd * (mu - 2.0) / mu, in);
    default: return detail::bound(TheoremId::girth_regular_mu, Quantity::girth, nd * mu / (nd + mu), in);
    }
}

/// γ_ao ≥ ⌈(n/μ*)·⌈(δ+1)/2⌉⌉ and γ_âo ≥ ⌈(n/μ*)·(⌈δ/2⌉+1)⌉.
inline std::pair<BoundResult, BoundResult> global_offensive_laplacian(std::size_t n, std::size_t min_degree,
                                                                      double mu_star) {
    const double nd = detail::dbl(n);
    const detail::Inputs in{{"n", nd}, {"delta", detail::dbl(min_degree)}, {"mu_star", mu_star}};
    if (!(mu_star > snap_tolerance))
        return {detail::not_applicable(TheoremId::globoff_laplacian, Quantity::gamma_ao,
                                       "Laplacian spectral radius is 0 (edgeless graph)", in),
                detail::not_applicable(TheoremId::globoff_laplacian, Quantity::gamma_ao_hat,
                                       "Laplacian spectral radius is 0 (edgeless graph)", in)};
    const double plain = detail::dbl((min_degree + 2) / 2);      // ⌈(δ+1)/2⌉
    const double strong = detail::dbl((min_degree + 1) / 2) + 1; // ⌈δ/2⌉ + 1
    return {detail::bound(TheoremId::globoff_laplacian, Quantity::gamma_ao, nd / mu_star * plain, in),
            detail::bound(TheoremId::globoff_laplacian, Quantity::gamma_ao_hat, nd / mu_star * strong, in)};
}

/// Smaller root of the quadratics in |S| that a global (strong) offensive
/// alliance must satisfy:
///   γ_ao ≥ ⌈((2n+Δ+1) − √((2n+Δ+1)² − 8(2m+n)))/4⌉
///   γ_âo ≥ ⌈((2n+Δ+2) − √((2n+Δ+2)² − 16(m+n)))/4⌉
/// Since 2m ≤ nΔ the discriminants are at least (2n−Δ−1)² and (2n−Δ−2)²;
/// a negative one means inconsistent inputs and throws.
inline std::pair<BoundResult, BoundResult> global_offensive_quadratic(std::size_t n, std::size_t m,
                                                                      std::size_t max_degree) {
    const double nd = detail::dbl(n), md = detail::dbl(m), dd = detail::dbl(max_degree);
    const detail::Inputs in{{"n", nd}, {"m", md}, {"Delta", dd}};
    const double b1 = 2.0 * nd + dd + 1.0;
    const double disc1 = b1 * b1 - 8.0 * (2.0 * md + nd);
    const double b2 = 2.0 * nd + dd + 2.0;
    const double disc2 = b2 * b2 - 16.0 * (md + nd);
    if (disc1 < 0.0 || disc2 < 0.0)
        throw std::domain_error("globoff-quadratic: negative discriminant for n=" + std::to_string(n) +
                                ", m=" + std::to_string(m) + ", Delta=" + std::to_string(max_degree));
    return {detail::bound(TheoremId::globoff_quadratic, Quantity::gamma_ao, (b1 - std::sqrt(disc1)) / 4.0, in),
            detail::bound(TheoremId::globoff_quadratic, Quantity::gamma_ao_hat, (b2 - std::sqrt(disc2)) / 4.0,
                          in)};
}

/// γ_ad ≥ ⌈(2m+n)/(4(λ+1))⌉ and γ_âd ≥ ⌈(m+n)/(2λ+1)⌉.
inline std::pair<BoundResult, BoundResult> global_dual_lambda(std::size_t n, std::size_t m, double lambda) {
    const double nd = detail::dbl(n), md = detail::dbl(m);
    const detail::Inputs in{{"n", nd}, {"m", md}, {"lambda", lambda}};
    return {detail::bound(TheoremId::globdual_lambda, Quantity::gamma_ad, (2.0 * md + nd) / (4.0 * (lambda + 1.0)),
                          in),
            detail::bound(TheoremId::globdual_lambda, Quantity::gamma_ad_hat, (md + nd) / (2.0 * lambda + 1.0),
                          in)};
}

/// γ_ad ≥ ⌈√(2m+n)/2⌉ and γ_âd ≥ ⌈(1+√(1+8(n+m)))/4⌉.
inline std::pair<BoundResult, BoundResult> global_dual_size(std::size_t n, std::size_t m) {
    const double nd = detail::dbl(n), md = detail::dbl(m);
    const detail::Inputs in{{"n", nd}, {"m", md}};
    return {detail::bound(TheoremId::globdual_size, Quantity::gamma_ad, std::sqrt(2.0 * md + nd) / 2.0, in),
            detail::bound(TheoremId::globdual_size, Quantity::gamma_ad_hat,
                          (1.0 + std::sqrt(1.0 + 8.0 * (nd + md))) / 4.0, in)};
}

/// γ ≥ ⌈n/μ*⌉.
inline BoundResult domination_laplacian(std::size_t n, double mu_star) {
    const double nd = detail::dbl(n);
    const detail::Inputs in{{"n", nd}, {"mu_star", mu_star}};
    if (!(mu_star > snap_tolerance))
        return detail::not_applicable(TheoremId::dom_laplacian, Quantity::gamma,
                                      "Laplacian spectral radius is 0 (edgeless graph)", in);
    return detail::bound(TheoremId::dom_laplacian, Quantity::gamma, nd / mu_star, in);
}

/// Everything the theorems consume, gathered once per graph.
struct GraphInvariants {
    std::size_t n = 0;
    std::size_t m = 0;
    std::size_t min_degree = 0;
    std::size_t max_degree = 0;
    std::optional<std::size_t> regular;
    bool connected = false;
    std::optional<SpectralSummary> spectral; ///< absent when n < 2
};

inline GraphInvariants graph_invariants(const Graph& g, double tol = default_jacobi_tol) {
    GraphInvariants inv;
    inv.n = g.order();
    inv.m = g.size();
    const auto ds = degree_stats(g);
    inv.min_degree = ds.min_degree;
    inv.max_degree = ds.max_degree;
    inv.regular = ds.regular;
    inv.connected = is_connected(g);
    if (g.order() >= 2) inv.spectral = spectral_summary(g, tol);
    return inv;
}

/// Evaluates `theorem` on `inv`, one BoundResult per bounded quantity.
inline std::vector<BoundResult> evaluate(TheoremId theorem, const GraphInvariants& inv) {
    const auto pair = [](std::pair<BoundResult, BoundResult> p) {
        return std::vector<BoundResult>{std::move(p.first), std::move(p.second)};
    };
    const bool spec_ok = inv.spectral.has_value();
    const SpectralSummary sp = inv.spectral.value_or(SpectralSummary{});
    const auto no_spectrum = [&](std::initializer_list<Quantity> qs) {
        std::vector<BoundResult> out;
        for (auto q : qs)
            out.push_back(detail::not_applicable(theorem, q, "spectral quantities need at least 2 vertices", {}));
        return out;
    };
    switch (theorem) {
    case TheoremId::def_mu: {
        if (!spec_ok) return no_spectrum({Quantity::a, Quantity::a_hat});
        auto out = pair(defensive_mu(inv.n, sp.mu));
        if (!inv.connected)
            for (auto& b : out) {
                b.degenerate = true;
                b.reason = "graph is not connected: mu = 0 makes the bound vacuous";
            }
        return out;
    }
    case TheoremId::strongdef_mu_delta:
        if (!spec_ok) return no_spectrum({Quantity::a_hat});
        return {strong_defensive_mu_delta(inv.n, sp.mu, inv.max_degree, inv.connected)};
    case TheoremId::globdef_lambda:
        if (!spec_ok) return no_spectrum({Quantity::gamma_a, Quantity::gamma_a_hat});
        return pair(global_defensive_lambda(inv.n, sp.lambda));
    case TheoremId::globdef_degree:
        return pair(global_defensive_degree(inv.n, inv.max_degree));
    case TheoremId::globdef_degree_prior:
        return {global_defensive_degree_prior(inv.n, inv.max_degree)};
    case TheoremId::girth_regular_mu:
        if (!spec_ok) return no_spectrum({Quantity::girth});
        return {girth_regular_mu(inv.n, sp.mu, inv.regular, inv.connected)};
    case TheoremId::globoff_laplacian:
        if (!spec_ok) return no_spectrum({Quantity::gamma_ao, Quantity::gamma_ao_hat});
        return pair(global_offensive_laplacian(inv.n, inv.min_degree, sp.mu_star));
    case TheoremId::globoff_quadratic:
        return pair(global_offensive_quadratic(inv.n, inv.m, inv.max_degree));
    case TheoremId::globdual_lambda:
        if (!spec_ok) return no_spectrum({Quantity::gamma_ad, Quantity::gamma_ad_hat});
        return pair(global_dual_lambda(inv.n, inv.m, sp.lambda));
    case TheoremId::globdual_size:
        return pair(global_dual_size(inv.n, inv.m));
    case TheoremId::dom_laplacian:
        if (!spec_ok) return no_spectrum({Quantity::gamma});
        return {domination_laplacian(inv.n, sp.mu_star)};
    }
    return {};
}

inline std::vector<BoundResult> evaluate_all(const GraphInvariants& inv) {
    std::vector<BoundResult> out;
    for (auto t : all_theorems) {
        auto part = evaluate(t, inv);
        out.insert(out.end(), std::make_move_iterator(part.begin()), std::make_move_iterator(part.end()));
    }
    return out;
}

} // namespace alliance
