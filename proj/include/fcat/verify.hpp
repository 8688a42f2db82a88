#pragma once

// Numerical evidence for the classification of rotational surfaces with
// vanishing weighted mean curvature: pairings along orbits for every axis
// type, the planes and cylinders of the corollary, and randomized sweeps.

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "fcat/numerics.hpp"
#include "fcat/profiles.hpp"
#include "fcat/surfaces.hpp"

namespace fcat {

/// Causal character of the surface being rotated: spacelike surfaces have a
/// generatrix (u, 0, g(u)), timelike ones (g(u), 0, u); both need |g'| < 1.
enum class SurfaceFamily { Spacelike, Timelike };

std::string_view to_string(SurfaceFamily f);

struct Generatrix {
    RealFn g;
    RealFn gp;
    RealFn gpp;
    double u_lo = 0.0;
    double u_hi = 1.0;

    static Generatrix constant(double c, double u_lo, double u_hi);
    /// c0 + c1 t + c2 t^2 + c3 t^3 with t = u - center.
    static Generatrix cubic(const std::array<double, 4>& c, double center, double u_lo,
                            double u_hi);
    static Generatrix from_profile(const GeneratrixProfile& p, double u_lo, double u_hi);
};

struct AxisSpec {
    CausalType causal = CausalType::Timelike;
    double theta = 0.0;  ///< tilt (rapidity) of the axis; unused for a lightlike axis
    double a = 0.0;      ///< offset of the axis
    Generatrix generatrix;
};

/// X(u, v) = M_y(theta) R(v) gamma(u) + t for the rotation group R of the axis.
/// v runs over [0, 2 pi) for a timelike axis and over [-3, 3] otherwise.
ParametricSurface revolution_surface(const AxisSpec& axis, SurfaceFamily family);

/// Closed-form pairing where a consistent one is known (spacelike family about
/// a timelike axis, timelike family about a timelike axis).
std::optional<double> closed_form_pairing(const AxisSpec& axis, SurfaceFamily family, double u,
                                          double v);

struct PairingSpread {
    double min = 0.0;
    double max = 0.0;
    double spread = 0.0;
    std::optional<double> closed_form_deviation;
};

inline constexpr int kOrbitSamples = 256;

PairingSpread pairing_along_circle(const AxisSpec& axis, SurfaceFamily family, double u,
                                   int v_samples = kOrbitSamples);

struct QStat {
    double u = 0.0;
    double v = 0.0;
    double Q = 0.0;                  ///< closed form
    double finite_difference = 0.0;  ///< d/dv of sqrt(1 - g'^2) <grad f, N>, oriented
};

/// Spacelike family about a spacelike axis only.
QStat q_statistic(const AxisSpec& axis, double u, double v);

enum class Verdict { ConsistentWithTheorem, Violation };

std::string_view to_string(Verdict v);

enum class BoundKind { AtMost, AtLeast };

struct Check {
    std::string label;
    double value = 0.0;
    double tolerance = 0.0;
    BoundKind kind = BoundKind::AtMost;

    bool passed() const;
    /// Off by more than a factor 10 in the failing direction.
    bool violated() const;
};

struct SpreadRecord {
    std::string label;
    double min_over_v = 0.0;
    double max_over_v = 0.0;
    double spread = 0.0;
    bool escape = false;
};

struct VerificationReport {
    std::string suite;
    std::vector<Check> checks;
    std::vector<SpreadRecord> spreads;

    void add(std::string label, double value, double tolerance,
             BoundKind kind = BoundKind::AtMost);
    void merge(const VerificationReport& other);
    bool all_passed() const;
    Verdict verdict() const;
};

VerificationReport corollary_suite();

struct SweepOptions {
    int trials = 200;
    std::uint64_t seed = 0;
    double spread_tol = 1e-4;
    double escape_tol = 1e-10;
    double residual_tol = 1e-6;
    int grid = 64;
};

VerificationReport theorem_sweep(SurfaceFamily family, const SweepOptions& opts = {});

/// |pairing| against distance-to-tangent-plane over random points and normals.
VerificationReport lemma1_suite(int count = 1000, std::uint64_t seed = 0, double tol = 1e-10);

/// The 25 reference rows and the logarithmic growth of the C = e probe.
VerificationReport table_suite();

struct ResidualOptions {
    std::uint64_t seed = 0;
    int ode_points = 100;
    int formula_points = 500;
    double ode_tol = 1e-10;
    double formula_tol = 1e-8;
    double residual_tol = 1e-6;
    int grid = 64;
};

/// ODE residuals, the z-axis formulas for H and the pairing, and H_f grids.
VerificationReport residual_suite(const ResidualOptions& opts = {});

struct CatenoidCase {
    std::string label;
    ParametricSurface surface;
};

/// The zero-H_f surfaces checked on grids: spacelike C in {-2, 0, 2} on
/// [-3, 3], timelike C in {0.5, 1, 2} on [-3, 3], C = 3.1 on (-u1, u1) and (u2, 3).
std::vector<CatenoidCase> catenoid_cases();

}  // namespace fcat
