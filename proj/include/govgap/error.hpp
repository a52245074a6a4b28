#pragma once

#include <stdexcept>
#include <string>

namespace govgap {

/// Input outside an operation's mathematical domain (non-positive θ, θ_F ≤ θ_L, ...).
class DomainError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// A root search was started on an interval without a sign change.
class BracketError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class ConvergenceError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// An objective returned NaN or ±inf at a grid point.
class NonFiniteError : public std::runtime_error {
public:
    NonFiniteError(const std::string& what, double x, double y)
        : std::runtime_error(what), x_(x), y_(y) {}
    double x() const noexcept { return x_; }
    double y() const noexcept { return y_; }

private:
    double x_;
    double y_;
};

/// Bad command-line or config input; maps to exit code 2.
class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace govgap
