// Acceptance suite: one PASS/FAIL line per criterion. Exits non-zero if any
// criterion fails.

#include "support.hpp"

#include <cmath>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>

using namespace alliance;
using alliance::testing::BruteForce;
using alliance::testing::named_graphs;
using alliance::testing::random_connected_graphs;
using alliance::testing::random_graphs;
using alliance::testing::random_proper_subset;
using alliance::testing::to_mask;

namespace {

constexpr double real_tol = 1e-6;

/// Collects failed checks for a single criterion.
struct Checker {
    std::vector<std::string> failures;

    void check(bool ok, const std::string& what) {
        if (!ok) failures.push_back(what);
    }
    void near(double got, double want, const std::string& what) {
        std::ostringstream os;
        os << what << ": got " << got << ", want " << want;
        check(std::abs(got - want) <= real_tol, os.str());
    }
    void eq(long long got, long long want, const std::string& what) {
        check(got == want, what + ": got " + std::to_string(got) + ", want " + std::to_string(want));
    }
};

long long bound_of(const BoundResult& b) { return b.applicable && b.value ? *b.value : -1; }

long long exact_value(const Graph& g, const AllianceSpec& spec) {
    return static_cast<long long>(min_alliance_number(g, spec).value);
}

long long ceil_half(std::size_t n) { return static_cast<long long>((n + 1) / 2); }

void criterion_1(Checker& c) {
    for (std::size_t n = 2; n <= 10; ++n) {
        const auto g = complete_graph(n);
        const auto s = spectral_summary(g);
        const auto [ba, bah] = defensive_mu(n, s.mu);
        const auto tag = "K_" + std::to_string(n);
        c.eq(exact_value(g, specs::defensive), ceil_half(n), tag + " a");
        c.eq(exact_value(g, specs::strong_defensive), ceil_half(n + 1), tag + " a_hat");
        c.eq(bound_of(ba), ceil_half(n), tag + " def-mu a");
        c.eq(bound_of(bah), ceil_half(n + 1), tag + " def-mu a_hat");
    }
}

void criterion_2(Checker& c) {
    const auto g = icosahedron();
    c.eq(exact_value(g, specs::defensive), 3, "a(icosahedron)");
    c.eq(bound_of(defensive_mu(12, 5.0 - std::sqrt(5.0)).first), 3, "def-mu with mu = 5 - sqrt 5");
    c.near(spectral_summary(g).mu, 5.0 - std::sqrt(5.0), "mu(icosahedron)");
}

void criterion_3(Checker& c) {
    const auto g = petersen();
    const auto s = spectral_summary(g);
    c.near(s.mu, 2.0, "mu");
    c.near(s.mu_star, 5.0, "mu*");
    c.near(s.lambda, 3.0, "lambda");
    c.check(girth(g) == Girth::finite(5), "girth = 5");
    c.eq(bound_of(girth_regular_mu(10, s.mu, 3, true)), 5, "girth-regular-mu");
    const auto [ao, aoh] = global_offensive_laplacian(10, 3, s.mu_star);
    c.eq(bound_of(ao), 4, "globoff-laplacian gamma_ao");
    c.eq(bound_of(aoh), 6, "globoff-laplacian gamma_ao_hat");
    c.eq(bound_of(global_defensive_degree(10, 3).second), 5, "globdef-degree gamma_a_hat");
    c.eq(exact_value(g, specs::global_strong_defensive), 5, "gamma_a_hat(Petersen)");
}

void criterion_4(Checker& c) {
    const auto g = complete_minus_matching(6);
    const auto s = spectral_summary(g);
    c.near(s.mu, 4.0, "mu(K6-F)");
    c.eq(bound_of(girth_regular_mu(6, s.mu, 4, true)), 3, "girth-regular-mu");
    c.eq(static_cast<long long>(girth(g).length()), 3, "girth(K6-F)");
}

void criterion_5(Checker& c) {
    const auto g = hypercube(3);
    const auto s = spectral_summary(g);
    c.eq(bound_of(strong_defensive_mu_delta(8, s.mu, 3, true)), 4, "strongdef-mu-delta");
    c.eq(exact_value(g, specs::strong_defensive), 4, "a_hat(Q3)");
    c.eq(static_cast<long long>(girth(g).length()), 4, "girth(Q3)");
}

void criterion_6(Checker& c) {
    const auto g = grid_graph(2, 3);
    const auto s = spectral_summary(g);
    c.near(s.lambda, 1.0 + std::sqrt(2.0), "lambda(P2xP3)");
    c.eq(bound_of(global_defensive_lambda(6, s.lambda).first), 2, "globdef-lambda gamma_a");
    c.eq(exact_value(g, specs::global_defensive), 2, "gamma_a(P2xP3)");
}

void criterion_7(Checker& c) {
    const auto k36 = complete_bipartite(3, 6);
    c.eq(bound_of(global_offensive_quadratic(9, k36.size(), 6).first), 3, "globoff-quadratic K3,6");
    c.eq(exact_value(k36, specs::global_offensive), 3, "gamma_ao(K3,6)");
    const auto k33 = complete_bipartite(3, 3);
    c.eq(bound_of(global_offensive_quadratic(6, k33.size(), 3).second), 3, "globoff-quadratic K3,3");
    c.eq(exact_value(k33, specs::global_strong_offensive), 3, "gamma_ao_hat(K3,3)");
}

void criterion_8(Checker& c) {
    for (std::size_t n = 2; n <= 8; ++n) {
        const auto g = complete_graph(n);
        const auto tag = "K_" + std::to_string(n);
        c.eq(bound_of(global_dual_size(n, g.size()).first), ceil_half(n), tag + " globdual-size");
        c.eq(exact_value(g, specs::global_dual), ceil_half(n), tag + " gamma_ad");
    }
    const auto g = join(complete_graph(1), disjoint_union(complete_graph(2), complete_graph(2)));
    c.eq(bound_of(global_dual_size(5, g.size()).second), 3, "K1*(K2uK2) globdual-size gamma_ad_hat");
    c.eq(exact_value(g, specs::global_strong_dual), 3, "gamma_ad_hat(K1*(K2uK2))");
}

void criterion_9(Checker& c) {
    for (const auto& [name, g] : {std::pair{"Petersen", petersen()}, std::pair{"Q3", hypercube(3)},
                                  std::pair{"K6-F", complete_minus_matching(6)}})
        c.eq(exact_value(g, specs::strong_defensive), static_cast<long long>(girth(g).length()),
             std::string(name) + " a_hat = girth");
    const auto ico = icosahedron();
    c.eq(exact_value(ico, specs::defensive), static_cast<long long>(girth(ico).length()), "icosahedron a = girth");
}

void criterion_10(Checker& c) {
    std::vector<std::pair<std::string, Graph>> corpus;
    for (auto& [name, g] : named_graphs()) corpus.emplace_back(name, g);
    std::size_t idx = 0;
    for (auto& g : random_connected_graphs(240, 4, 10, 0xacce97))
        corpus.emplace_back("random #" + std::to_string(idx++), std::move(g));
    std::size_t compared = 0;
    for (const auto& [name, g] : corpus) {
        const BruteForce oracle(g);
        for (const auto& b : evaluate_all(graph_invariants(g))) {
            if (!b.applicable) continue;
            long long exact = 0;
            if (b.target == Quantity::girth) {
                const auto gi = girth(g);
                if (gi.is_infinite()) continue;
                exact = static_cast<long long>(gi.length());
            } else if (b.target == Quantity::gamma) {
                exact = static_cast<long long>(oracle.minimum("dom").value);
            } else {
                exact = static_cast<long long>(oracle.minimum(std::string(spec_name(*spec_for(b.target)))).value);
            }
            ++compared;
            c.check(*b.value <= exact, name + ": " + std::string(theorem_name(b.theorem)) + "/" +
                                           std::string(quantity_name(b.target)) + " bound " +
                                           std::to_string(*b.value) + " > exact " + std::to_string(exact) +
                                           "\n" + write_edgelist(g));
        }
    }
    c.check(corpus.size() >= 200 + named_graphs().size(), "corpus too small");
    c.check(compared > 0, "nothing compared");
}

void criterion_11(Checker& c) {
    std::mt19937_64 rng(11);
    const auto graphs = random_graphs(200, 2, 16, 1111);
    for (int i = 0; i < 1000; ++i) {
        const auto& g = graphs[i % graphs.size()];
        const auto s = random_proper_subset(g.order(), rng);
        std::size_t in_s = 0, out_s = 0, in_c = 0, out_c = 0;
        for (Vertex v = 0; v < g.order(); ++v) {
            (s.contains(v) ? in_s : in_c) += neighbors_in(g, v, s);
            (s.contains(v) ? out_s : out_c) += neighbors_out(g, v, s);
        }
        c.check(2 * g.size() == in_s + 2 * out_s + out_c, "edge-count identity on pair " + std::to_string(i));
        c.check(out_s == in_c, "cut symmetry on pair " + std::to_string(i));
        c.check(in_s <= s.size() * (s.size() - 1), "inside-degree bound on pair " + std::to_string(i));
    }
}

void criterion_12(Checker& c) {
    std::mt19937_64 rng(12);
    const auto graphs = random_graphs(200, 2, 16, 1212);
    std::vector<SpectralSummary> spectra;
    for (const auto& g : graphs) spectra.push_back(spectral_summary(g));
    for (int i = 0; i < 1000; ++i) {
        const std::size_t k = static_cast<std::size_t>(i) % graphs.size();
        const double r = rayleigh_indicator(graphs[k], random_proper_subset(graphs[k].order(), rng));
        c.check(spectra[k].mu - real_tol <= r && r <= spectra[k].mu_star + real_tol,
                "sandwich fails on pair " + std::to_string(i));
    }
}

void criterion_13(Checker& c) {
    for (const auto& [name, g] : named_graphs()) {
        const auto s = spectral_summary(g);
        c.near(power_iteration_radius(g, MatrixKind::adjacency), s.lambda, name + " lambda");
        c.near(power_iteration_radius(g, MatrixKind::laplacian), s.mu_star, name + " mu*");
        double adj = 0.0, lap = 0.0;
        for (double x : s.adjacency_spectrum) adj += x;
        for (double x : s.laplacian_spectrum) lap += x;
        const double tol = static_cast<double>(g.order()) * 1e-9;
        c.check(std::abs(adj) <= tol, name + " adjacency trace");
        c.check(std::abs(lap - 2.0 * static_cast<double>(g.size())) <= tol, name + " Laplacian trace");
    }
}

void criterion_14(Checker& c) {
    const auto graphs = random_graphs(50, 1, 8, 1414);
    for (std::size_t i = 0; i < graphs.size(); ++i) {
        const BruteForce oracle(graphs[i]);
        for (const auto& spec : specs::all) {
            const auto got = min_alliance_number(graphs[i], spec);
            const auto want = oracle.minimum(std::string(spec_name(spec)));
            c.check(got.value == want.value && to_mask(got.witness) == want.witness,
                    "graph " + std::to_string(i) + " spec " + std::string(spec_name(spec)));
        }
        const auto want = oracle.minimum("dom");
        c.check(domination_number(graphs[i]).value == want.value, "graph " + std::to_string(i) + " dom");
    }
}

} // namespace

int main() {
    const std::vector<std::pair<std::string, std::function<void(Checker&)>>> criteria = {
        {"1  a, a_hat of K_n and def-mu tightness", criterion_1},
        {"2  icosahedron a = 3 and def-mu bound", criterion_2},
        {"3  Petersen spectrum, girth and bounds", criterion_3},
        {"4  K6-F mu and girth bound", criterion_4},
        {"5  3-cube strong defensive bound", criterion_5},
        {"6  P2xP3 spectral radius and gamma_a", criterion_6},
        {"7  K3,6 and K3,3 offensive tightness", criterion_7},
        {"8  global dual tightness", criterion_8},
        {"9  regular-girth facts", criterion_9},
        {"10 soundness sweep", criterion_10},
        {"11 neighbor-count identities", criterion_11},
        {"12 Rayleigh sandwich", criterion_12},
        {"13 eigensolver cross-validation", criterion_13},
        {"14 solver oracle equivalence", criterion_14},
    };
    int failed = 0;
    for (const auto& [name, run] : criteria) {
        Checker c;
        try {
            run(c);
        } catch (const std::exception& e) {
            c.failures.push_back(std::string("exception: ") + e.what());
        }
        std::printf("%s criterion %s\n", c.failures.empty() ? "PASS" : "FAIL", name.c_str());
        for (std::size_t i = 0; i < c.failures.size() && i < 5; ++i) std::printf("    %s\n", c.failures[i].c_str());
        if (!c.failures.empty()) ++failed;
    }
    return failed == 0 ? 0 : 1;
}
