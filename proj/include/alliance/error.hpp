#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace alliance {

/// Bad caller input: out-of-range vertex, empty set where one is required,
/// infeasible generator parameters.
class InvalidArgument : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Malformed edgelist / graph6 / family-spec text. `position` is a 1-based
/// line number for edgelists and a 0-based byte offset for graph6.
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& what, std::size_t position)
        : std::runtime_error(what), position_(position) {}

    std::size_t position() const noexcept { return position_; }

private:
    std::size_t position_;
};

/// A spectral quantity that is not defined for the given input (e.g. the
/// algebraic connectivity of K_1).
class UndefinedQuantity : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

class ConvergenceError : public std::runtime_error {
public:
    ConvergenceError(const std::string& what, double residual)
        : std::runtime_error(what), residual_(residual) {}

    double residual() const noexcept { return residual_; }

private:
    double residual_;
};

/// Graph too large for the exact solver under the configured ceiling.
class ResourceLimit : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Search budget exhausted. Every cardinality below `proven_lower_bound` was
/// exhausted without finding an alliance.
class SearchTimeout : public std::runtime_error {
public:
    SearchTimeout(const std::string& what, std::size_t proven_lower_bound,
                  std::size_t nodes)
        : std::runtime_error(what), lower_(proven_lower_bound), nodes_(nodes) {}

    std::size_t proven_lower_bound() const noexcept { return lower_; }
    std::size_t nodes_explored() const noexcept { return nodes_; }

private:
    std::size_t lower_;
    std::size_t nodes_;
};

} // namespace alliance
