#pragma once

// Parametric surfaces in R^3_1 and their weighted mean curvature for the
// Gaussian-Euclidean density f = (x^2 + y^2)/2 + ln(2 pi).

#include <functional>
#include <numbers>

#include "fcat/minkowski.hpp"

namespace fcat {

/// Position and first/second partials of X at one parameter point.
struct SurfaceJet {
    LVec3 x;
    LVec3 xu;
    LVec3 xv;
    LVec3 xuu;
    LVec3 xuv;
    LVec3 xvv;
};

struct ParamDomain {
    double u_lo = 0.0;
    double u_hi = 1.0;
    double v_lo = 0.0;
    double v_hi = 2.0 * std::numbers::pi;
    bool periodic_v = true;
};

/// Minimum Euclidean length of X_u ^ X_v at a regular point.
inline constexpr double kDegenerateTolerance = 1e-12;

class ParametricSurface {
public:
    using PositionFn = std::function<LVec3(double, double)>;
    using JetFn = std::function<SurfaceJet(double, double)>;

    /// Partials are taken by finite differences with step hint derivative_scale.
    ParametricSurface(ParamDomain domain, PositionFn position, double derivative_scale = 1.0);
    ParametricSurface(ParamDomain domain, PositionFn position, JetFn jet,
                      double derivative_scale = 1.0);

    const ParamDomain& domain() const { return domain_; }
    double derivative_scale() const { return scale_; }
    bool has_analytic_jet() const { return static_cast<bool>(jet_); }

    LVec3 position(double u, double v) const { return position_(u, v); }

    /// Analytic partials when available, finite differences otherwise.
    SurfaceJet jet(double u, double v) const;
    SurfaceJet finite_difference_jet(double u, double v) const;

    /// Same immersion with the analytic partials dropped.
    ParametricSurface without_analytic_jet() const;

    /// The surface M X + t, with partials mapped through M.
    ParametricSurface transformed(const LMat3& m, const LVec3& t) const;

private:
    ParamDomain domain_;
    PositionFn position_;
    JetFn jet_;
    double scale_;
};

struct FirstForm {
    double E;
    double F;
    double G;
};

/// First and second fundamental forms. The second-form coefficients are
/// e2 = <X_uu, N>, f2 = <X_uv, N>, g2 = <X_vv, N>; eps is -1 on spacelike
/// surfaces and +1 on timelike ones.
struct FundamentalForms {
    double E;
    double F;
    double G;
    double e2;
    double f2;
    double g2;
    int eps;
};

struct UnitNormal {
    LVec3 n;
    CausalType type;  ///< causal type of n (timelike n means a spacelike surface)
};

struct DensityPoint {
    LVec3 p;
    LVec3 grad_f;
    double f_value;
};

DensityPoint density(const LVec3& p);

FirstForm first_fundamental(const ParametricSurface& s, double u, double v);

/// N = (X_u ^ X_v)/||X_u ^ X_v|| with no re-orientation.
UnitNormal unit_normal(const ParametricSurface& s, double u, double v);

FundamentalForms fundamental_forms(const ParametricSurface& s, double u, double v);

double mean_curvature(const ParametricSurface& s, double u, double v);

/// <grad f, N> at X(u, v).
double pairing(const ParametricSurface& s, double u, double v);

/// H_f = H + <grad f, N>/2.
double f_mean_curvature(const ParametricSurface& s, double u, double v);

/// Everything above from a single jet evaluation.
struct CurvatureSample {
    LVec3 x;
    FundamentalForms forms;
    UnitNormal normal;
    double H;
    double pairing;
    double Hf;
};

CurvatureSample evaluate(const ParametricSurface& s, double u, double v);
CurvatureSample evaluate_jet(const SurfaceJet& jet, double u, double v);

/// max |H_f| over an nu x nv cell-centred grid of the surface domain.
double max_abs_f_mean_curvature(const ParametricSurface& s, int nu, int nv);

struct Lemma1Sides {
    double lhs;  ///< |<grad f, N>(p)|
    double rhs;  ///< d_E(rho(p), T_p) * |N|_E
};

/// Both sides of |<grad f, N>| = d_E(projection of p onto the z-axis, tangent plane) * |N|_E.
Lemma1Sides lemma1_distance_identity(const LVec3& p, const LVec3& n);

// Reference surfaces. Domains are bounded windows; v is periodic only for the cylinder.
ParametricSurface make_horizontal_plane(double height);
/// The vertical plane x cos(angle) + y sin(angle) = offset.
ParametricSurface make_vertical_plane(double angle, double offset);
/// The cylinder x^2 + y^2 = radius^2, X = (r cos v, r sin v, u).
ParametricSurface make_cylinder(double radius);

}  // namespace fcat
