#pragma once

// Numerical kernels: adaptive Gauss-Kronrod quadrature with optional
// inverse-square-root endpoint handling, Brent root bracketing, and
// fourth-order central differences.

#include <cstddef>
#include <functional>

#include "fcat/errors.hpp"

namespace fcat {

using RealFn = std::function<double(double)>;

struct QuadratureResult {
    double value = 0.0;
    double error_estimate = 0.0;
    std::size_t evaluations = 0;
};

/// Endpoint at which the integrand may blow up like |tau - end|^(-1/2).
enum class SingularEnd { None, Lower, Upper };

/// Thrown when the budget is exhausted or the integrand is non-finite; carries the best estimate.
class QuadratureError : public Error {
public:
    QuadratureError(const std::string& what, QuadratureResult best)
        : Error(what), best_(best) {}
    const QuadratureResult& best() const noexcept { return best_; }

private:
    QuadratureResult best_;
};

inline constexpr std::size_t kQuadratureBudget = 1'000'000;

/// Globally adaptive G7/K15 integration of fn over [a, b] to absolute tolerance tol.
///
/// With a flagged singular end the variable is changed to w^2 = distance to that
/// end before refinement, which removes an inverse-square-root singularity.
QuadratureResult integrate(const RealFn& fn, double a, double b, double tol,
                           SingularEnd singular = SingularEnd::None);

inline constexpr double kRootTolerance = 1e-12;

struct RootBracket {
    double root = 0.0;  ///< bracket end with the smaller |fn|
    double lo = 0.0;
    double hi = 0.0;
    int iterations = 0;
};

/// Brent's method. The returned bracket has width <= tol, or a few ulps of the
/// root when tol is below machine resolution (pass 0 to refine fully).
RootBracket find_root_bracket(const RealFn& fn, double lo, double hi,
                              double tol = kRootTolerance);

double find_root(const RealFn& fn, double lo, double hi, double tol = kRootTolerance);

/// Fourth-order central difference. Step is scale*1e-4 for order 1 and
/// scale*1e-3 for order 2.
double diff(const RealFn& fn, double u, int order, double scale = 1.0);

}  // namespace fcat
