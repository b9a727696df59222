#pragma once

#include "error.hpp"
#include "graph.hpp"

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <random>
#include <string>
#include <vector>

namespace alliance {

/// Dense symmetric matrix, row-major.
class SymmetricMatrix {
public:
    explicit SymmetricMatrix(std::size_t n) : n_(n), a_(n * n, 0.0) {}

    std::size_t dim() const noexcept { return n_; }
    double& operator()(std::size_t i, std::size_t j) { return a_[i * n_ + j]; }
    double operator()(std::size_t i, std::size_t j) const { return a_[i * n_ + j]; }

    double max_off_diagonal() const {
        double off = 0.0;
        for (std::size_t i = 0; i < n_; ++i)
            for (std::size_t j = i + 1; j < n_; ++j) off = std::max(off, std::abs((*this)(i, j)));
        return off;
    }

    double trace() const {
        double t = 0.0;
        for (std::size_t i = 0; i < n_; ++i) t += (*this)(i, i);
        return t;
    }

private:
    std::size_t n_;
    std::vector<double> a_;
};

inline SymmetricMatrix adjacency_matrix(const Graph& g) {
    SymmetricMatrix a(g.order());
    for (auto [u, v] : g.edges()) a(u, v) = a(v, u) = 1.0;
    return a;
}

/// L = D - A.
inline SymmetricMatrix laplacian_matrix(const Graph& g) {
    SymmetricMatrix l(g.order());
    for (Vertex v = 0; v < g.order(); ++v) l(v, v) = static_cast<double>(g.degree(v));
    for (auto [u, v] : g.edges()) l(u, v) = l(v, u) = -1.0;
    return l;
}

struct EigenResult {
    std::vector<double> values; ///< ascending
    std::size_t sweeps = 0;
    double residual = 0.0; ///< max |off-diagonal| at exit
};

inline constexpr double default_jacobi_tol = 1e-10;
inline constexpr std::size_t default_jacobi_sweeps = 100;

/**
 * Eigenvalues of a real symmetric matrix by cyclic Jacobi rotations.
 *
 * Each sweep annihilates every off-diagonal entry once in row order. The
 * loop stops as soon as the largest off-diagonal magnitude drops below `tol`;
 * the diagonal then holds the eigenvalues to within that residual.
 */
inline EigenResult jacobi_eigenvalues(SymmetricMatrix a, double tol = default_jacobi_tol,
                                      std::size_t max_sweeps = default_jacobi_sweeps) {
    if (!(tol > 0.0)) throw InvalidArgument("jacobi: tolerance must be positive");
    const std::size_t n = a.dim();
    EigenResult out;
    out.residual = a.max_off_diagonal();
    while (out.residual >= tol) {
        if (out.sweeps == max_sweeps)
            throw ConvergenceError("jacobi: no convergence after " + std::to_string(max_sweeps) +
                                       " sweeps, residual " + std::to_string(out.residual),
                                   out.residual);
        for (std::size_t p = 0; p + 1 < n; ++p) {
            for (std::size_t q = p + 1; q < n; ++q) {
                const double apq = a(p, q);
                if (apq == 0.0) continue;
                // tan of the rotation angle, smaller root for stability
                const double theta = (a(q, q) - a(p, p)) / (2.0 * apq);
                const double t = std::copysign(1.0, theta) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
                const double c = 1.0 / std::sqrt(t * t + 1.0);
                const double s = t * c;
                a(p, p) -= t * apq;
                a(q, q) += t * apq;
                a(p, q) = a(q, p) = 0.0;
                for (std::size_t r = 0; r < n; ++r) {
                    if (r == p || r == q) continue;
                    const double arp = a(r, p);
                    const double arq = a(r, q);
                    a(r, p) = a(p, r) = c * arp - s * arq;
                    a(r, q) = a(q, r) = s * arp + c * arq;
                }
            }
        }
        ++out.sweeps;
        out.residual = a.max_off_diagonal();
    }
    out.values.resize(n);
    for (std::size_t i = 0; i < n; ++i) out.values[i] = a(i, i);
    std::sort(out.values.begin(), out.values.end());
    return out;
}

/// λ, μ and μ* of a graph, plus the spectra they were read from.
struct SpectralSummary {
    double lambda = 0.0;   ///< adjacency spectral radius
    double mu = 0.0;       ///< algebraic connectivity
    double mu_star = 0.0;  ///< Laplacian spectral radius
    std::vector<double> laplacian_spectrum;
    std::vector<double> adjacency_spectrum;
    std::size_t iterations = 0; ///< Jacobi sweeps, both matrices combined
    double residual = 0.0;      ///< worst off-diagonal residual of the two runs
    bool connected = false;
};

inline SpectralSummary spectral_summary(const Graph& g, double tol = default_jacobi_tol,
                                        std::size_t max_sweeps = default_jacobi_sweeps) {
    if (g.order() < 2)
        throw UndefinedQuantity("algebraic connectivity is undefined for graphs with fewer than 2 vertices");
    const auto lap = jacobi_eigenvalues(laplacian_matrix(g), tol, max_sweeps);
    const auto adj = jacobi_eigenvalues(adjacency_matrix(g), tol, max_sweeps);
    SpectralSummary s;
    s.laplacian_spectrum = lap.values;
    s.adjacency_spectrum = adj.values;
    s.mu = lap.values[1];
    s.mu_star = lap.values.back();
    s.lambda = adj.values.back();
    s.iterations = lap.sweeps + adj.sweeps;
    s.residual = std::max(lap.residual, adj.residual);
    s.connected = is_connected(g);
    return s;
}

/// n·e(S, V∖S) / (|S|·(n−|S|)): the Laplacian Rayleigh quotient scaled by n,
/// evaluated on the indicator vector of S. Lies between μ and μ*.
inline double rayleigh_indicator(const Graph& g, const VertexSet& s) {
    detail::check_set(g, s);
    const std::size_t n = g.order();
    const std::size_t k = s.size();
    if (k == 0 || k == n) throw InvalidArgument("rayleigh_indicator: S must be a proper nonempty subset");
    std::size_t cut = 0;
    s.for_each([&](Vertex v) { cut += neighbors_out(g, v, s); });
    return static_cast<double>(n) * static_cast<double>(cut) /
           (static_cast<double>(k) * static_cast<double>(n - k));
}

enum class MatrixKind { adjacency, laplacian };

/**
 * Dominant eigenvalue by power iteration, independent of the Jacobi path.
 *
 * The adjacency matrix is shifted to A + I so that the Perron root of a
 * connected graph strictly dominates -λ (bipartite graphs). The Laplacian is
 * positive semidefinite, so μ* already dominates in magnitude. Iteration
 * stops once the residual ‖Mx − ρx‖ of the Rayleigh quotient ρ falls below
 * `tol`, which for a symmetric matrix bounds the distance from ρ to an
 * eigenvalue.
 */
inline double power_iteration_radius(const Graph& g, MatrixKind which, double tol = 1e-10,
                                     std::size_t max_iter = 200000) {
    if (which == MatrixKind::adjacency && !is_connected(g))
        throw InvalidArgument("power_iteration_radius: adjacency mode requires a connected graph");
    const std::size_t n = g.order();
    const double shift = which == MatrixKind::adjacency ? 1.0 : 0.0;
    const auto apply = [&](const std::vector<double>& x, std::vector<double>& y) {
        for (Vertex v = 0; v < n; ++v) {
            double acc = 0.0;
            for (Vertex w : g.neighbors(v)) acc += x[w];
            if (which == MatrixKind::adjacency)
                y[v] = acc + shift * x[v];
            else
                y[v] = static_cast<double>(g.degree(v)) * x[v] - acc;
        }
    };
    const auto normalize = [](std::vector<double>& x) {
        double norm = 0.0;
        for (double xi : x) norm += xi * xi;
        norm = std::sqrt(norm);
        for (double& xi : x) xi /= norm;
        return norm;
    };

    // fixed pseudo-random start: never orthogonal to the dominant eigenvector in practice
    std::mt19937_64 rng(0x5eed);
    std::vector<double> x(n), y(n);
    for (double& xi : x) xi = 0.5 + static_cast<double>(rng() >> 11) * 0x1.0p-53;
    normalize(x);

    double residual = 0.0;
    for (std::size_t it = 0; it < max_iter; ++it) {
        apply(x, y);
        double rho = 0.0;
        for (std::size_t i = 0; i < n; ++i) rho += x[i] * y[i];
        residual = 0.0;
        for (std::size_t i = 0; i < n; ++i) residual += (y[i] - rho * x[i]) * (y[i] - rho * x[i]);
        residual = std::sqrt(residual);
        if (residual < tol) return rho - shift;
        normalize(y);
        std::swap(x, y);
    }
    throw ConvergenceError("power iteration: no convergence after " + std::to_string(max_iter) +
                               " iterations, residual " + std::to_string(residual),
                           residual);
}

} // namespace alliance
