#include "support.hpp"

#include <gtest/gtest.h>

#include <cmath>

using namespace alliance;
using alliance::testing::named_graphs;
using alliance::testing::random_connected_graphs;

namespace {

long long v(const BoundResult& b) {
    EXPECT_TRUE(b.applicable) << b.reason;
    return b.value.value_or(-1);
}

const BoundResult& find(const std::vector<BoundResult>& all, TheoremId t, Quantity q) {
    for (const auto& b : all)
        if (b.theorem == t && b.target == q) return b;
    throw std::logic_error("bound not found");
}

std::vector<BoundResult> all_for(const Graph& g) { return evaluate_all(graph_invariants(g)); }

long long exact(const Graph& g, Quantity q) {
    if (q == Quantity::girth) {
        const auto gi = girth(g);
        return gi.is_infinite() ? std::numeric_limits<long long>::max() : static_cast<long long>(gi.length());
    }
    if (q == Quantity::gamma) return static_cast<long long>(domination_number(g).value);
    return static_cast<long long>(min_alliance_number(g, *spec_for(q)).value);
}

} // namespace

TEST(SafeCeil, Examples) {
    EXPECT_EQ(safe_ceil(4.9999999997), 5);
    EXPECT_EQ(safe_ceil(2.2474), 3);
    EXPECT_EQ(safe_ceil(3.0), 3);
    EXPECT_EQ(safe_ceil(3.00000000004), 3);
    EXPECT_EQ(safe_ceil(-0.5), 0);
    EXPECT_THROW(safe_ceil(std::nan("")), InvalidArgument);
    EXPECT_THROW(safe_ceil(INFINITY), InvalidArgument);
}

TEST(SafeCeil, MatchesCeilAwayFromIntegersAndIsMonotone) {
    std::mt19937_64 rng(3);
    long long prev = safe_ceil(-50.0);
    for (double x = -50.0; x < 50.0; x += 0.0137) {
        const long long c = safe_ceil(x);
        EXPECT_GE(c, prev);
        prev = c;
        if (std::abs(x - std::round(x)) >= 1e-7) {
            EXPECT_EQ(c, static_cast<long long>(std::ceil(x)));
        }
    }
    for (int i = 0; i < 10000; ++i) {
        const double x = (uniform_unit(rng) - 0.5) * 1000.0;
        if (std::abs(x - std::round(x)) >= 1e-7) {
            ASSERT_EQ(safe_ceil(x), static_cast<long long>(std::ceil(x)));
        }
    }
}

TEST(DefensiveMu, Examples) {
    for (std::size_t n = 2; n <= 10; ++n) {
        const auto [a, ah] = defensive_mu(n, double(n));
        EXPECT_EQ(v(a), static_cast<long long>((n + 1) / 2));
        EXPECT_EQ(v(ah), static_cast<long long>((n + 2) / 2));
    }
    EXPECT_EQ(v(defensive_mu(12, 5.0 - std::sqrt(5.0)).first), 3);
    const auto [a0, ah0] = defensive_mu(7, 0.0);
    EXPECT_EQ(v(a0), 0);
    EXPECT_EQ(v(ah0), 1);
}

TEST(StrongDefensiveMuDelta, Examples) {
    EXPECT_EQ(v(strong_defensive_mu_delta(10, 2.0, 3, true)), 5);
    EXPECT_EQ(v(strong_defensive_mu_delta(8, 2.0, 3, true)), 4);
    for (std::size_t n = 2; n <= 10; ++n)
        EXPECT_EQ(v(strong_defensive_mu_delta(n, double(n), n - 1, true)), static_cast<long long>((n + 2) / 2));
    const auto off = strong_defensive_mu_delta(10, 0.0, 3, false);
    EXPECT_FALSE(off.applicable);
    EXPECT_FALSE(off.value);
}

TEST(GlobalDefensiveLambda, Examples) {
    EXPECT_EQ(v(global_defensive_lambda(6, 1.0 + std::sqrt(2.0)).first), 2);
    for (std::size_t n = 2; n <= 10; ++n) EXPECT_EQ(v(global_defensive_lambda(n, double(n - 1)).first), 1);
    EXPECT_EQ(v(global_defensive_lambda(10, 3.0).second), 3);
}

TEST(GlobalDefensiveDegree, Examples) {
    EXPECT_EQ(v(global_defensive_degree(10, 3).second), 5);
    EXPECT_EQ(v(global_defensive_degree(4, 3).first), 2);
    EXPECT_EQ(min_alliance_number(complete_graph(4), specs::global_defensive).value, 2u);
    EXPECT_EQ(v(global_defensive_degree(9, 8).first), 2);
    EXPECT_EQ(v(global_defensive_degree_prior(10, 3)), 4);
}

TEST(GirthRegularMu, Examples) {
    EXPECT_EQ(v(girth_regular_mu(10, 2.0, 3, true)), 5);
    EXPECT_EQ(v(girth_regular_mu(6, 4.0, 4, true)), 3);
    EXPECT_EQ(v(girth_regular_mu(12, 5.0 - std::sqrt(5.0), 5, true)), 3);
}

TEST(GirthRegularMu, InapplicabilityIsHonest) {
    EXPECT_FALSE(girth_regular_mu(10, 2.0, std::nullopt, true).applicable);
    EXPECT_FALSE(girth_regular_mu(10, 2.0, 2, true).applicable);
    EXPECT_FALSE(girth_regular_mu(10, 2.0, 6, true).applicable);
    EXPECT_FALSE(girth_regular_mu(10, 0.0, 3, false).applicable);
    for (const auto& g : alliance::testing::random_graphs(100, 2, 12, 61)) {
        const auto b = find(all_for(g), TheoremId::girth_regular_mu, Quantity::girth);
        const auto ds = degree_stats(g);
        const bool ok = is_connected(g) && ds.regular && *ds.regular >= 3 && *ds.regular <= 5;
        EXPECT_EQ(b.applicable, ok);
        EXPECT_EQ(b.value.has_value(), ok);
    }
}

TEST(GlobalOffensiveLaplacian, Examples) {
    const auto [ao, aoh] = global_offensive_laplacian(10, 3, 5.0);
    EXPECT_EQ(v(ao), 4);
    EXPECT_EQ(v(aoh), 6);
    EXPECT_EQ(v(global_offensive_laplacian(2, 1, 2.0).first), 1);
    EXPECT_FALSE(global_offensive_laplacian(4, 0, 0.0).first.applicable);
}

TEST(GlobalOffensiveQuadratic, Examples) {
    EXPECT_EQ(v(global_offensive_quadratic(9, 18, 6).first), 3);
    EXPECT_EQ(v(global_offensive_quadratic(6, 9, 3).second), 3);
    for (std::size_t n = 2; n <= 8; ++n) {
        const auto b = v(global_offensive_quadratic(n, n * (n - 1) / 2, n - 1).first);
        EXPECT_LE(b, static_cast<long long>((n + 1) / 2));
        EXPECT_EQ(min_alliance_number(complete_graph(n), specs::global_offensive).value, (n + 1) / 2);
    }
    EXPECT_THROW(global_offensive_quadratic(2, 100, 1), std::domain_error);
}

TEST(GlobalDual, Examples) {
    EXPECT_EQ(v(global_dual_lambda(4, 6, 3.0).first), 1);
    EXPECT_EQ(v(global_dual_lambda(10, 15, 3.0).first), 3);
    EXPECT_LE(v(global_dual_lambda(10, 15, 3.0).first),
              static_cast<long long>(min_alliance_number(petersen(), specs::global_dual).value));
    const auto bowtie = build("join(complete:1,union(complete:2,complete:2))");
    const double lambda = spectral_summary(bowtie).lambda;
    const auto b = v(global_dual_lambda(5, 6, lambda).second);
    EXPECT_EQ(b, safe_ceil(11.0 / (2.0 * lambda + 1.0)));
    EXPECT_LE(b, 3);
    for (std::size_t n = 2; n <= 10; ++n)
        EXPECT_EQ(v(global_dual_size(n, n * (n - 1) / 2).first), static_cast<long long>((n + 1) / 2));
    EXPECT_EQ(v(global_dual_size(5, 6).second), 3);
    EXPECT_EQ(v(global_dual_size(2, 1).first), 1);
}

TEST(DominationLaplacian, Examples) {
    EXPECT_EQ(v(domination_laplacian(10, 5.0)), 2);
    for (std::size_t n = 2; n <= 10; ++n) EXPECT_EQ(v(domination_laplacian(n, double(n))), 1);
    EXPECT_EQ(v(domination_laplacian(4, 4.0)), 1);
    EXPECT_FALSE(domination_laplacian(3, 0.0).applicable);
}

TEST(Evaluate, DisconnectedAndEdgelessHandling) {
    const auto g = disjoint_union(complete_graph(3), complete_graph(3));
    const auto all = all_for(g);
    EXPECT_TRUE(find(all, TheoremId::def_mu, Quantity::a).degenerate);
    EXPECT_TRUE(find(all, TheoremId::def_mu, Quantity::a).applicable);
    EXPECT_FALSE(find(all, TheoremId::strongdef_mu_delta, Quantity::a_hat).applicable);
    EXPECT_FALSE(find(all, TheoremId::girth_regular_mu, Quantity::girth).applicable);

    const auto edgeless = all_for(empty_graph(4));
    EXPECT_FALSE(find(edgeless, TheoremId::globoff_laplacian, Quantity::gamma_ao).applicable);
    EXPECT_FALSE(find(edgeless, TheoremId::dom_laplacian, Quantity::gamma).applicable);

    const auto single = all_for(empty_graph(1));
    EXPECT_FALSE(find(single, TheoremId::def_mu, Quantity::a).applicable);
    EXPECT_TRUE(find(single, TheoremId::globdual_size, Quantity::gamma_ad).applicable);
}

TEST(Evaluate, NamesRoundTrip) {
    for (auto t : all_theorems) EXPECT_EQ(theorem_from_name(theorem_name(t)), t);
    EXPECT_FALSE(theorem_from_name("bogus"));
}

TEST(Soundness, EveryApplicableBoundIsAtMostExact) {
    std::vector<Graph> corpus = random_connected_graphs(200, 4, 10, 2718);
    for (auto& [name, g] : named_graphs()) corpus.push_back(g);
    for (const auto& g : alliance::testing::random_graphs(60, 1, 9, 77)) corpus.push_back(g);
    std::size_t compared = 0;
    for (const auto& g : corpus) {
        std::map<Quantity, long long> cache;
        for (const auto& b : all_for(g)) {
            if (!b.applicable) continue;
            ASSERT_GE(*b.value, 0);
            auto it = cache.find(b.target);
            if (it == cache.end()) it = cache.emplace(b.target, exact(g, b.target)).first;
            ASSERT_LE(*b.value, it->second)
                << theorem_name(b.theorem) << "/" << quantity_name(b.target) << " on\n" << write_edgelist(g);
            ++compared;
        }
    }
    EXPECT_GT(compared, 4000u);
}
