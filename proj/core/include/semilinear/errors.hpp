#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace semilinear {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class InvalidPair : public Error {
public:
    using Error::Error;
};

class IndexError : public Error {
public:
    using Error::Error;
};

class InvalidParams : public Error {
public:
    using Error::Error;
};

class DomainMismatch : public Error {
public:
    using Error::Error;
};

/// Edge formula changes value when the two endpoints are swapped.
class SymmetryError : public Error {
public:
    SymmetryError(const std::string& what, std::size_t u, std::size_t v)
        : Error(what), u_(u), v_(v) {}

    std::pair<std::size_t, std::size_t> pair() const { return {u_, v_}; }

private:
    std::size_t u_;
    std::size_t v_;
};

class NotPerturbed : public Error {
public:
    using Error::Error;
};

class NotPartialOrder : public Error {
public:
    using Error::Error;
};

/// A caller-supplied guarantee (clique bound, balance, ...) does not hold.
/// When the violation is a clique, its vertices are attached.
class PreconditionViolated : public Error {
public:
    explicit PreconditionViolated(const std::string& what,
                                  std::vector<std::size_t> witness = {})
        : Error(what), witness_(std::move(witness)) {}

    const std::vector<std::size_t>& witness() const { return witness_; }

private:
    std::vector<std::size_t> witness_;
};

/// A structural claim from a correctness argument failed at runtime.
class ProofInvariantViolated : public Error {
public:
    explicit ProofInvariantViolated(const std::string& what,
                                    std::vector<std::size_t> counterexample = {})
        : Error(what), counterexample_(std::move(counterexample)) {}

    const std::vector<std::size_t>& counterexample() const { return counterexample_; }

private:
    std::vector<std::size_t> counterexample_;
};

class InvalidCotree : public Error {
public:
    using Error::Error;
};

class SamplingFailed : public Error {
public:
    SamplingFailed(const std::string& what, std::size_t attempts, std::size_t best_edges)
        : Error(what), attempts_(attempts), best_edges_(best_edges) {}

    std::size_t attempts() const { return attempts_; }
    std::size_t best_edges() const { return best_edges_; }

private:
    std::size_t attempts_;
    std::size_t best_edges_;
};

class TooLarge : public Error {
public:
    using Error::Error;
};

class DegenerateInput : public Error {
public:
    using Error::Error;
};

class OverBudget : public Error {
public:
    using Error::Error;
};

}  // namespace semilinear
