#pragma once

#include <stdexcept>
#include <string>

namespace gammaq {

/// Argument outside the domain of an operation (poles, parameter hypotheses).
class domain_error : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// An internal algebraic invariant failed. Signals a bug, never bad input.
class algebra_error : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

/// Forward iteration of a recurrence hit a vanishing leading coefficient,
/// or a residual was requested outside the supplied window.
class recurrence_error : public std::runtime_error {
public:
    recurrence_error(const std::string& what, long index)
        : std::runtime_error(what + " (index " + std::to_string(index) + ")"), index_(index) {}

    long index() const noexcept { return index_; }

private:
    long index_;
};

/// A numeric routine could not reach the requested precision.
class precision_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace gammaq
