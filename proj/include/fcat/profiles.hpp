#pragma once

// Generatrices of the rotational zero-H_f surfaces about the z-axis
// ("f-Catenoids") and the analysis of their domains.

#include <array>
#include <limits>
#include <optional>
#include <span>
#include <vector>

#include "fcat/surfaces.hpp"

namespace fcat {

enum class CatenoidKind { Spacelike, Timelike };

/// Sign branch of g'.
enum class Branch : int { Positive = 1, Negative = -1 };

inline constexpr double sign_of(Branch b) { return static_cast<int>(b); }

/// Open interval; infinite ends allowed.
struct Interval {
    double lo = -std::numeric_limits<double>::infinity();
    double hi = std::numeric_limits<double>::infinity();

    bool contains(double x) const { return x > lo && x < hi; }
    bool bounded() const;
};

// --- spacelike family: g' = +-1/sqrt(1 + u^2 e^(u^2 + C)), defined on all of R ---

double spacelike_gprime(double u, double C, Branch sign = Branch::Positive);
double spacelike_gsecond(double u, double C, Branch sign = Branch::Positive);

/// int_0^u 1/sqrt(1 + t^2 e^(t^2 + C)) dt, to 1e-12.
double spacelike_height(double u, double C);

// --- domain of e^(u^2) - C u^2 ---

enum class DomainTag { WholeLine, PuncturedAtOne, ThreeIntervals };

struct DomainRoots {
    double u1;  ///< 0 < u1 < 1
    double u2;  ///< u2 > 1
};

struct DomainCase {
    DomainTag tag;
    std::optional<DomainRoots> roots;  ///< set iff tag == ThreeIntervals
};

/// |C - e| at or below this classifies as C = e.
inline constexpr double kPuncturedTolerance = 1e-12;

/// Throws DomainError for C <= 0.
DomainCase domain_case(double C);

/// The positivity set of e^(u^2) - C u^2 as disjoint open intervals, ascending.
std::vector<Interval> domain_components(double C);

enum class Component { Inner, OuterPositive, OuterNegative };

Interval component_interval(double C, Component which);

/// Base point u0 of the integral on a component: 0 on the inner one, the
/// root +-u2 on the outer ones when C > e, and +-2 when C = e (the roots +-1
/// are double there and the integral diverges at them).
double default_base_point(double C, Component which);

// --- timelike family: g' = +-sqrt(e^(u^2)/(e^(u^2) - C u^2)) ---

/// Throws DomainError unless e^(u^2) - C u^2 > 0 (at a root: divergence).
double timelike_gprime(double u, double C, Branch sign = Branch::Positive);
double timelike_gsecond(double u, double C, Branch sign = Branch::Positive);

/// int_{u0}^{u} sqrt(e^(t^2)/(e^(t^2) - C t^2)) dt. Endpoints may sit on a
/// simple root when C > e; C = e with an endpoint at +-1 raises DivergenceError.
double timelike_height(double u, double C, double u0);

/// Residual of the zero-H_f ODE for the given kind at (g', g'', u).
double ode_residual(CatenoidKind kind, double gprime, double gsecond, double u);

struct TableRow {
    double C;
    double u1;
    double u2;
    double I1;  ///< int_0^{u1}
    double I2;  ///< int_{u2}^{4}
};

/// Upper limit of I2 in the table.
inline constexpr double kTableUpperLimit = 4.0;

/// Requires C > e.
TableRow table_row(double C);

/// The 25 published reference rows (u1, u2 to 10 digits; I1, I2 to 10 digits
/// except the C = 2.72 integrals, given to 6).
std::span<const TableRow> reference_table();

/// int_0^{1 - eps} of the timelike integrand at C = e, for 0 < eps < 1.
double divergence_probe(double eps);

/// A solved generatrix u -> g(u) of either family.
class GeneratrixProfile {
public:
    /// Defined on all of R with base point 0.
    static GeneratrixProfile spacelike(double C, Branch sign = Branch::Positive);

    /// On a component of the domain with its default base point.
    static GeneratrixProfile timelike(double C, Component which = Component::Inner,
                                      Branch sign = Branch::Positive, double B = 0.0);

    /// Explicit base point; u0 must lie in the closure of the component when it
    /// is a simple root, strictly inside otherwise.
    static GeneratrixProfile timelike_with_base(double C, Component which, double u0,
                                                Branch sign = Branch::Positive, double B = 0.0);

    CatenoidKind kind() const { return kind_; }
    double C() const { return C_; }
    double u0() const { return u0_; }
    double B() const { return B_; }
    Branch branch() const { return sign_; }
    const Interval& interval() const { return interval_; }

    double g(double u) const;
    double gprime(double u) const;
    double gsecond(double u) const;

    /// g on an ascending grid by accumulating one quadrature per gap.
    std::vector<double> sample_g(std::span<const double> us) const;

private:
    GeneratrixProfile(CatenoidKind kind, double C, double u0, double B, Branch sign,
                      Interval interval)
        : kind_(kind), C_(C), u0_(u0), B_(B), sign_(sign), interval_(interval) {}

    void require_in_closure(double u) const;

    CatenoidKind kind_;
    double C_;
    double u0_;
    double B_;
    Branch sign_;
    Interval interval_;
};

/// Default fraction of the u-range trimmed at degenerate ends.
inline constexpr double kEdgeMargin = 1e-3;

/// The surface of revolution about the z-axis:
///   spacelike (u cos v, u sin v, g(u)),  timelike (u sin v, u cos v, g(u) + B).
/// Ends of [u_lo, u_hi] that are degenerate (u = 0 or a finite end of the
/// profile interval) are pulled in by edge_margin * (u_hi - u_lo).
ParametricSurface make_surface(const GeneratrixProfile& profile, double u_lo, double u_hi,
                               double edge_margin = kEdgeMargin);

}  // namespace fcat
