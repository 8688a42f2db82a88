#include "fcat/surfaces.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "fcat/errors.hpp"
#include "fcat/numerics.hpp"

namespace fcat {

namespace {

// Component-wise derivative of a vector-valued function of one variable.
LVec3 diff_vec(const std::function<LVec3(double)>& fn, double t, int order, double scale)
{
    return {diff([&](double s) { return fn(s).x; }, t, order, scale),
            diff([&](double s) { return fn(s).y; }, t, order, scale),
            diff([&](double s) { return fn(s).z; }, t, order, scale)};
}

void require_in_domain(const ParamDomain& d, double u, double v)
{
    const double su = 1e-12 * std::max(1.0, d.u_hi - d.u_lo);
    const double sv = 1e-12 * std::max(1.0, d.v_hi - d.v_lo);
    const bool u_ok = u >= d.u_lo - su && u <= d.u_hi + su;
    const bool v_ok = d.periodic_v || (v >= d.v_lo - sv && v <= d.v_hi + sv);
    if (!(u_ok && v_ok) || !std::isfinite(u) || !std::isfinite(v)) {
        std::ostringstream os;
        os << "surface evaluated outside its domain at (u, v) = (" << u << ", " << v << ")";
        throw DomainError(os.str());
    }
}

}  // namespace

ParametricSurface::ParametricSurface(ParamDomain domain, PositionFn position,
                                     double derivative_scale)
    : domain_(domain), position_(std::move(position)), scale_(derivative_scale)
{
}

ParametricSurface::ParametricSurface(ParamDomain domain, PositionFn position, JetFn jet,
                                     double derivative_scale)
    : domain_(domain), position_(std::move(position)), jet_(std::move(jet)),
      scale_(derivative_scale)
{
}

SurfaceJet ParametricSurface::jet(double u, double v) const
{
    return jet_ ? jet_(u, v) : finite_difference_jet(u, v);
}

SurfaceJet ParametricSurface::finite_difference_jet(double u, double v) const
{
    const auto along_u = [&](double s) { return position_(s, v); };
    const auto along_v = [&](double s) { return position_(u, s); };
    SurfaceJet j;
    j.x = position_(u, v);
    j.xu = diff_vec(along_u, u, 1, scale_);
    j.xv = diff_vec(along_v, v, 1, scale_);
    j.xuu = diff_vec(along_u, u, 2, scale_);
    j.xvv = diff_vec(along_v, v, 2, scale_);
    // Nested first differences with the wider second-order step (h = scale*1e-3).
    const double wide = 10.0 * scale_;
    j.xuv = diff_vec(
        [&](double s) { return diff_vec([&](double t) { return position_(s, t); }, v, 1, wide); },
        u, 1, wide);
    return j;
}

ParametricSurface ParametricSurface::without_analytic_jet() const
{
    return ParametricSurface(domain_, position_, scale_);
}

ParametricSurface ParametricSurface::transformed(const LMat3& m, const LVec3& t) const
{
    auto pos = [p = position_, m, t](double u, double v) { return m * p(u, v) + t; };
    if (!jet_)
        return ParametricSurface(domain_, pos, scale_);
    auto jet = [j = jet_, m, t](double u, double v) {
        const SurfaceJet s = j(u, v);
        return SurfaceJet{m * s.x + t, m * s.xu, m * s.xv, m * s.xuu, m * s.xuv, m * s.xvv};
    };
    return ParametricSurface(domain_, pos, jet, scale_);
}

DensityPoint density(const LVec3& p)
{
    return {p, {p.x, p.y, 0.0},
            0.5 * (p.x * p.x + p.y * p.y) + std::log(2.0 * std::numbers::pi)};
}

FirstForm first_fundamental(const ParametricSurface& s, double u, double v)
{
    require_in_domain(s.domain(), u, v);
    const SurfaceJet j = s.jet(u, v);
    if (euclid_norm(wedge(j.xu, j.xv)) <= kDegenerateTolerance)
        throw DegeneratePointError("first_fundamental: X_u and X_v are dependent", u, v);
    return {lorentz_dot(j.xu, j.xu), lorentz_dot(j.xu, j.xv), lorentz_dot(j.xv, j.xv)};
}

CurvatureSample evaluate_jet(const SurfaceJet& j, double u, double v)
{
    const LVec3 w = wedge(j.xu, j.xv);
    if (!w.is_finite() || euclid_norm(w) <= kDegenerateTolerance) {
        std::ostringstream os;
        os << "degenerate tangent plane at (u, v) = (" << u << ", " << v << ")";
        throw DegeneratePointError(os.str(), u, v);
    }
    const CausalType type = causal_type(w);
    if (type == CausalType::Lightlike) {
        std::ostringstream os;
        os << "lightlike normal (degenerate metric) at (u, v) = (" << u << ", " << v << ")";
        throw DegeneratePointError(os.str(), u, v);
    }
    const LVec3 n = w / lorentz_norm(w);

    FundamentalForms ff{};
    ff.E = lorentz_dot(j.xu, j.xu);
    ff.F = lorentz_dot(j.xu, j.xv);
    ff.G = lorentz_dot(j.xv, j.xv);
    ff.e2 = lorentz_dot(j.xuu, n);
    ff.f2 = lorentz_dot(j.xuv, n);
    ff.g2 = lorentz_dot(j.xvv, n);
    ff.eps = type == CausalType::Timelike ? -1 : 1;

    const double gram = ff.E * ff.G - ff.F * ff.F;
    const double H = ff.eps * (ff.E * ff.g2 - 2.0 * ff.F * ff.f2 + ff.G * ff.e2) / (2.0 * gram);
    const double pr = lorentz_dot(density(j.x).grad_f, n);
    return {j.x, ff, {n, type}, H, pr, H + 0.5 * pr};
}

CurvatureSample evaluate(const ParametricSurface& s, double u, double v)
{
    require_in_domain(s.domain(), u, v);
    return evaluate_jet(s.jet(u, v), u, v);
}

UnitNormal unit_normal(const ParametricSurface& s, double u, double v)
{
    return evaluate(s, u, v).normal;
}

FundamentalForms fundamental_forms(const ParametricSurface& s, double u, double v)
{
    return evaluate(s, u, v).forms;
}

double mean_curvature(const ParametricSurface& s, double u, double v)
{
    return evaluate(s, u, v).H;
}

double pairing(const ParametricSurface& s, double u, double v)
{
    return evaluate(s, u, v).pairing;
}

double f_mean_curvature(const ParametricSurface& s, double u, double v)
{
    return evaluate(s, u, v).Hf;
}

double max_abs_f_mean_curvature(const ParametricSurface& s, int nu, int nv)
{
    const ParamDomain& d = s.domain();
    const double du = (d.u_hi - d.u_lo) / nu;
    const double dv = (d.v_hi - d.v_lo) / nv;
    double worst = 0.0;
    for (int i = 0; i < nu; ++i) {
        const double u = d.u_lo + (i + 0.5) * du;
        for (int k = 0; k < nv; ++k) {
            const double v = d.v_lo + (k + 0.5) * dv;
            worst = std::max(worst, std::abs(f_mean_curvature(s, u, v)));
        }
    }
    return worst;
}

Lemma1Sides lemma1_distance_identity(const LVec3& p, const LVec3& n)
{
    const double lhs = std::abs(lorentz_dot(density(p).grad_f, n));
    // Tangent plane a x + b y - c z + d = 0 through p has Euclidean normal (a, b, -c).
    const LVec3 plane_normal{n.x, n.y, -n.z};
    const double d = -euclid_dot(plane_normal, p);
    const LVec3 foot{0.0, 0.0, p.z};
    const double dist = std::abs(euclid_dot(plane_normal, foot) + d) / euclid_norm(plane_normal);
    return {lhs, dist * euclid_norm(n)};
}

ParametricSurface make_horizontal_plane(double height)
{
    ParamDomain dom{-2.0, 2.0, -2.0, 2.0, false};
    auto pos = [height](double u, double v) { return LVec3{u, v, height}; };
    auto jet = [height](double u, double v) {
        return SurfaceJet{{u, v, height}, {1, 0, 0}, {0, 1, 0}, {}, {}, {}};
    };
    return ParametricSurface(dom, pos, jet);
}

ParametricSurface make_vertical_plane(double angle, double offset)
{
    const double c = std::cos(angle), s = std::sin(angle);
    ParamDomain dom{-2.0, 2.0, -2.0, 2.0, false};
    auto pos = [=](double u, double v) {
        return LVec3{offset * c - u * s, offset * s + u * c, v};
    };
    auto jet = [=](double u, double v) {
        return SurfaceJet{{offset * c - u * s, offset * s + u * c, v}, {-s, c, 0}, {0, 0, 1},
                          {}, {}, {}};
    };
    return ParametricSurface(dom, pos, jet);
}

ParametricSurface make_cylinder(double radius)
{
    if (!(radius > 0.0))
        throw DomainError("make_cylinder: radius must be positive");
    ParamDomain dom{-2.0, 2.0, 0.0, 2.0 * std::numbers::pi, true};
    auto pos = [radius](double u, double v) {
        return LVec3{radius * std::cos(v), radius * std::sin(v), u};
    };
    auto jet = [radius](double u, double v) {
        const double c = std::cos(v), s = std::sin(v);
        return SurfaceJet{{radius * c, radius * s, u}, {0, 0, 1}, {-radius * s, radius * c, 0},
                          {}, {}, {-radius * c, -radius * s, 0}};
    };
    return ParametricSurface(dom, pos, jet);
}

}  // namespace fcat
