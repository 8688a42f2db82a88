#pragma once

#include <stdexcept>
#include <string>

namespace fcat {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// An argument lies outside the set where the operation is defined.
class DomainError : public Error {
public:
    using Error::Error;
};

/// An improper integral was requested at an endpoint where it diverges.
class DivergenceError : public DomainError {
public:
    using DomainError::DomainError;
};

/// The tangent plane is degenerate (X_u, X_v dependent) or lightlike at (u, v).
class DegeneratePointError : public Error {
public:
    DegeneratePointError(const std::string& what, double u, double v)
        : Error(what), u_(u), v_(v) {}

    double u() const noexcept { return u_; }
    double v() const noexcept { return v_; }

private:
    double u_;
    double v_;
};

/// No sign change on the bracket, or the function returned NaN.
class RootBracketError : public Error {
public:
    using Error::Error;
};

}  // namespace fcat
