#include "fcat/profiles.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>

#include "fcat/errors.hpp"
#include "fcat/numerics.hpp"

namespace fcat {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();
constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kHeightTolerance = 1e-12;

double spacelike_integrand(double t, double C)
{
    return 1.0 / std::sqrt(1.0 + t * t * std::exp(t * t + C));
}

// (e^(t^2) - C t^2) / e^(t^2); same sign as the domain function, never overflows.
double reduced_domain_fn(double t, double C)
{
    return 1.0 - C * t * t * std::exp(-t * t);
}

double timelike_integrand(double t, double C)
{
    return 1.0 / std::sqrt(reduced_domain_fn(t, C));
}

// Integral of the timelike integrand between a simple root r and another point,
// with t = r +- w^2. Close to r the radicand divided by w^2 is taken from its
// Taylor polynomial, because 1 - C t^2 e^(-t^2) cancels catastrophically there.
double root_segment(double C, double r, double other)
{
    const double s = other < r ? -1.0 : 1.0;
    const double e = std::exp(-r * r), r2 = r * r;
    const double d1 = -C * (2.0 * r - 2.0 * r * r2) * e;
    const double d2 = -C * (2.0 - 10.0 * r2 + 4.0 * r2 * r2) * e;
    const double d3 = -C * (-24.0 * r + 36.0 * r * r2 - 8.0 * r * r2 * r2) * e;
    const RealFn f = [=](double w) {
        const double w2 = w * w;
        if (w2 < 1e-4) {
            const double q = s * d1 + 0.5 * d2 * w2 + s * d3 * w2 * w2 / 6.0;
            return 2.0 / std::sqrt(q);
        }
        return 2.0 * w / std::sqrt(reduced_domain_fn(r + s * w2, C));
    };
    return integrate(f, 0.0, std::sqrt(std::abs(other - r)), kHeightTolerance).value;
}

double spacelike_segment(double a, double b, double C)
{
    if (a == b)
        return 0.0;
    const RealFn f = [C](double t) { return spacelike_integrand(t, C); };
    if (a < b)
        return integrate(f, a, b, kHeightTolerance).value;
    return -integrate(f, b, a, kHeightTolerance).value;
}

bool is_punctured(double C)
{
    return std::abs(C - std::numbers::e) <= kPuncturedTolerance;
}

std::string describe(const char* what, double value)
{
    std::ostringstream os;
    os.precision(12);
    os << what << value;
    return os.str();
}

// Refines a root of the reduced domain function and returns the bracket end on
// the positive side, so the integrand stays real right up to it.
double admissible_root(double C, double lo, double hi)
{
    const RealFn h = [C](double t) { return reduced_domain_fn(t, C); };
    const RootBracket br = find_root_bracket(h, lo, hi, 0.0);
    if (br.lo == br.hi)
        return br.root;
    return h(br.lo) > 0.0 ? br.lo : br.hi;
}

struct Endpoint {
    double value;
    bool singular;
    int component;
};

}  // namespace

bool Interval::bounded() const
{
    return std::isfinite(lo) && std::isfinite(hi);
}

double spacelike_gprime(double u, double C, Branch sign)
{
    return sign_of(sign) / std::sqrt(1.0 + u * u * std::exp(u * u + C));
}

double spacelike_gsecond(double u, double C, Branch sign)
{
    if (u == 0.0)
        return 0.0;
    const double q = u * u * std::exp(u * u + C);
    if (!std::isfinite(q))
        return 0.0;
    // g'' = -s u (1 + u^2) e^(u^2 + C) (1 + q)^(-3/2), written via q to avoid inf * 0.
    return -sign_of(sign) * (1.0 + u * u) / u * q / std::pow(1.0 + q, 1.5);
}

double spacelike_height(double u, double C)
{
    if (!std::isfinite(u))
        throw DomainError("spacelike_height: u must be finite");
    return spacelike_segment(0.0, u, C);
}

DomainCase domain_case(double C)
{
    if (!(C > 0.0) || !std::isfinite(C))
        throw DomainError(describe("domain_case: C must be a positive constant, got ", C));
    if (is_punctured(C))
        return {DomainTag::PuncturedAtOne, std::nullopt};
    if (C < std::numbers::e)
        return {DomainTag::WholeLine, std::nullopt};

    const double u1 = admissible_root(C, 0.0, 1.0);
    double hi = 4.0;
    while (reduced_domain_fn(hi, C) <= 0.0)
        hi *= 2.0;
    const double u2 = admissible_root(C, 1.0, hi);
    return {DomainTag::ThreeIntervals, DomainRoots{u1, u2}};
}

std::vector<Interval> domain_components(double C)
{
    const DomainCase dc = domain_case(C);
    switch (dc.tag) {
    case DomainTag::WholeLine:
        return {Interval{-kInf, kInf}};
    case DomainTag::PuncturedAtOne:
        return {Interval{-kInf, -1.0}, Interval{-1.0, 1.0}, Interval{1.0, kInf}};
    case DomainTag::ThreeIntervals: {
        const auto [u1, u2] = *dc.roots;
        return {Interval{-kInf, -u2}, Interval{-u1, u1}, Interval{u2, kInf}};
    }
    }
    return {};
}

Interval component_interval(double C, Component which)
{
    const std::vector<Interval> parts = domain_components(C);
    if (parts.size() == 1) {
        if (which != Component::Inner)
            throw DomainError(describe("no outer component for 0 < C < e, C = ", C));
        return parts.front();
    }
    switch (which) {
    case Component::OuterNegative: return parts[0];
    case Component::Inner: return parts[1];
    case Component::OuterPositive: return parts[2];
    }
    return parts[1];
}

double default_base_point(double C, Component which)
{
    const DomainCase dc = domain_case(C);
    if (which == Component::Inner)
        return 0.0;
    const double side = which == Component::OuterPositive ? 1.0 : -1.0;
    switch (dc.tag) {
    case DomainTag::WholeLine:
        throw DomainError(describe("no outer component for 0 < C < e, C = ", C));
    case DomainTag::PuncturedAtOne:
        return 2.0 * side;
    case DomainTag::ThreeIntervals:
        return dc.roots->u2 * side;
    }
    return 0.0;
}

double timelike_gprime(double u, double C, Branch sign)
{
    if (!(C > 0.0))
        throw DomainError(describe("timelike_gprime: C must be positive, got ", C));
    const double r = reduced_domain_fn(u, C);
    if (r < 0.0)
        throw DomainError(describe("timelike_gprime: e^(u^2) - C u^2 < 0 at u = ", u));
    if (r <= 64.0 * kEps)
        throw DivergenceError(describe("timelike_gprime: g' diverges at the root u = ", u));
    return sign_of(sign) / std::sqrt(r);
}

double timelike_gsecond(double u, double C, Branch sign)
{
    // Validates the domain and divergence like g' does.
    (void)timelike_gprime(u, C, sign);
    const double r = reduced_domain_fn(u, C);
    return sign_of(sign) * u * C * (1.0 - u * u) * std::exp(-u * u) / std::pow(r, 1.5);
}

double timelike_height(double u, double C, double u0)
{
    if (!std::isfinite(u) || !std::isfinite(u0))
        throw DomainError("timelike_height: endpoints must be finite");
    const DomainCase dc = domain_case(C);
    if (u == u0)
        return 0.0;

    auto classify = [&](double x) -> Endpoint {
        switch (dc.tag) {
        case DomainTag::WholeLine:
            return {x, false, 0};
        case DomainTag::PuncturedAtOne: {
            if (std::abs(std::abs(x) - 1.0) <= 16.0 * kEps)
                throw DivergenceError(
                    describe("timelike_height: the integral diverges at the double root u = ", x));
            return {x, false, x < -1.0 ? 0 : (x < 1.0 ? 1 : 2)};
        }
        case DomainTag::ThreeIntervals: {
            const auto [u1, u2] = *dc.roots;
            const double ax = std::abs(x);
            if (std::abs(ax - u1) <= 16.0 * kEps * std::max(1.0, u1))
                return {std::copysign(u1, x), true, 1};
            if (std::abs(ax - u2) <= 16.0 * kEps * std::max(1.0, u2))
                return {std::copysign(u2, x), true, x < 0.0 ? 0 : 2};
            if (ax < u1)
                return {x, false, 1};
            if (ax > u2)
                return {x, false, x < 0.0 ? 0 : 2};
            throw DomainError(describe("timelike_height: e^(u^2) - C u^2 < 0 at u = ", x));
        }
        }
        return {x, false, 0};
    };

    const Endpoint p = classify(std::min(u, u0));
    const Endpoint q = classify(std::max(u, u0));
    if (p.component != q.component) {
        std::ostringstream os;
        os << "timelike_height: [" << p.value << ", " << q.value
           << "] crosses the zero set of e^(u^2) - C u^2 (C = " << C << ")";
        throw DomainError(os.str());
    }

    double value = 0.0;
    if (p.singular && q.singular) {
        const double mid = 0.5 * (p.value + q.value);
        value = root_segment(C, p.value, mid) + root_segment(C, q.value, mid);
    } else if (p.singular) {
        value = root_segment(C, p.value, q.value);
    } else if (q.singular) {
        value = root_segment(C, q.value, p.value);
    } else {
        const RealFn f = [C](double t) { return timelike_integrand(t, C); };
        value = integrate(f, p.value, q.value, kHeightTolerance).value;
    }
    return u > u0 ? value : -value;
}

double ode_residual(CatenoidKind kind, double gp, double gpp, double u)
{
    const double w = 1.0 - gp * gp;
    if (kind == CatenoidKind::Spacelike)
        return w * gp + u * gpp + u * u * gp * w;
    return gpp * u + gp * w - u * u * gp * w;
}

TableRow table_row(double C)
{
    if (!(C > std::numbers::e + kPuncturedTolerance))
        throw DomainError(describe("table_row: requires C > e, got C = ", C));
    const DomainRoots r = *domain_case(C).roots;
    if (!(r.u2 < kTableUpperLimit))
        throw DomainError(describe("table_row: u2 exceeds the upper limit 4 for C = ", C));
    return {C, r.u1, r.u2, timelike_height(r.u1, C, 0.0),
            timelike_height(kTableUpperLimit, C, r.u2)};
}

std::span<const TableRow> reference_table()
{
    static constexpr std::array<TableRow, 25> rows = {{
        {2.72, 0.9822782644, 1.017827051, 3.39646, 5.63324},
        {2.725, 0.9650767467, 1.035334695, 2.913861676, 5.150340780},
        {2.73, 0.9539872965, 1.046729750, 2.716714471, 4.952913186},
        {2.74, 0.9375982937, 1.063728407, 2.497786122, 4.733425412},
        {2.75, 0.9248309636, 1.077103331, 2.363204279, 4.598285949},
        {2.8, 0.8808758710, 1.124065962, 2.026032087, 4.258352255},
        {2.9, 0.8258522408, 1.184957908, 1.740252676, 3.967178286},
        {3.0, 0.7868044780, 1.229688803, 1.583315220, 3.805008572},
        {3.1, 0.7556136794, 1.266389104, 1.474783161, 3.691396684},
        {3.2, 0.7293528965, 1.297996253, 1.391943189, 3.603620332},
        {4.0, 0.5978318795, 1.467410087, 1.051169565, 3.227665154},
        {5.0, 0.5090885010, 1.594566197, 0.8629326647, 3.003422822},
        {6.0, 0.4521962510, 1.683195738, 0.7526390978, 2.863129355},
        {7.0, 0.4113302857, 1.751120026, 0.6770807650, 2.761819500},
        {8.0, 0.3800280951, 1.806013755, 0.6208959900, 2.683055126},
        {10.0, 0.3344137545, 1.891336053, 0.5412131026, 2.565108172},
        {20.0, 0.2295778377, 2.121262664, 0.3655508690, 2.266933975},
        {30.0, 0.1857512382, 2.239037675, 0.2943554575, 2.122055409},
        {40.0, 0.1601547153, 2.317248453, 0.2532125983, 2.027988230},
        {50.0, 0.1428721249, 2.375356389, 0.2255845814, 1.959035117},
        {100.0, 0.1005063540, 2.544164917, 0.1582764960, 1.762485425},
        {200.0, 0.07088856878, 2.698888129, 0.1114918791, 1.586306978},
        {300.0, 0.05783165509, 2.784186390, 0.09091788154, 1.490482830},
        {400.0, 0.05006269611, 2.842705995, 0.07868765650, 1.425201168},
        {500.0, 0.04476619308, 2.887054100, 0.07035385008, 1.375955282},
    }};
    return rows;
}

double divergence_probe(double eps)
{
    if (!(eps > 0.0 && eps < 1.0))
        throw DomainError(describe("divergence_probe: requires 0 < eps < 1, got ", eps));
    // At C = e the reduced domain function is 1 - (1 + x) e^(-x) with x = t^2 - 1,
    // which has a double zero at x = 0; sum its series there to keep digits.
    const RealFn f = [](double t) {
        const double x = (t - 1.0) * (t + 1.0);
        double r;
        if (std::abs(x) < 0.5) {
            r = 0.0;
            double term = x;  // x^k / k!
            for (int k = 2; k < 30; ++k) {
                term *= x / k;
                r += (k % 2 == 0 ? 1.0 : -1.0) * (k - 1) * term;
            }
        } else {
            r = 1.0 - (1.0 + x) * std::exp(-x);
        }
        return 1.0 / std::sqrt(r);
    };
    return integrate(f, 0.0, 1.0 - eps, 1e-10).value;
}

// --- GeneratrixProfile ---

GeneratrixProfile GeneratrixProfile::spacelike(double C, Branch sign)
{
    if (!std::isfinite(C))
        throw DomainError("spacelike profile: C must be finite");
    return GeneratrixProfile(CatenoidKind::Spacelike, C, 0.0, 0.0, sign, Interval{});
}

GeneratrixProfile GeneratrixProfile::timelike(double C, Component which, Branch sign, double B)
{
    return GeneratrixProfile(CatenoidKind::Timelike, C, default_base_point(C, which), B, sign,
                             component_interval(C, which));
}

GeneratrixProfile GeneratrixProfile::timelike_with_base(double C, Component which, double u0,
                                                        Branch sign, double B)
{
    GeneratrixProfile p(CatenoidKind::Timelike, C, u0, B, sign, component_interval(C, which));
    if (!p.interval_.contains(u0)) {
        const DomainCase dc = domain_case(C);
        const bool at_root = dc.tag == DomainTag::ThreeIntervals &&
                             (u0 == p.interval_.lo || u0 == p.interval_.hi);
        if (!at_root)
            throw DomainError(describe("timelike profile: base point outside the component, u0 = ",
                                       u0));
    }
    return p;
}

void GeneratrixProfile::require_in_closure(double u) const
{
    if (!std::isfinite(u) || u < interval_.lo || u > interval_.hi)
        throw DomainError(describe("generatrix evaluated outside its interval at u = ", u));
}

double GeneratrixProfile::g(double u) const
{
    require_in_closure(u);
    if (kind_ == CatenoidKind::Spacelike)
        return sign_of(sign_) * spacelike_height(u, C_);
    return sign_of(sign_) * timelike_height(u, C_, u0_) + B_;
}

double GeneratrixProfile::gprime(double u) const
{
    require_in_closure(u);
    return kind_ == CatenoidKind::Spacelike ? spacelike_gprime(u, C_, sign_)
                                            : timelike_gprime(u, C_, sign_);
}

double GeneratrixProfile::gsecond(double u) const
{
    require_in_closure(u);
    return kind_ == CatenoidKind::Spacelike ? spacelike_gsecond(u, C_, sign_)
                                            : timelike_gsecond(u, C_, sign_);
}

std::vector<double> GeneratrixProfile::sample_g(std::span<const double> us) const
{
    std::vector<double> out;
    out.reserve(us.size());
    for (std::size_t k = 0; k < us.size(); ++k) {
        if (k == 0) {
            out.push_back(g(us[0]));
            continue;
        }
        if (!(us[k] >= us[k - 1]))
            throw DomainError("sample_g: grid must be ascending");
        require_in_closure(us[k]);
        const double step = kind_ == CatenoidKind::Spacelike
                                ? spacelike_segment(us[k - 1], us[k], C_)
                                : timelike_height(us[k], C_, us[k - 1]);
        out.push_back(out.back() + sign_of(sign_) * step);
    }
    return out;
}

ParametricSurface make_surface(const GeneratrixProfile& profile, double u_lo, double u_hi,
                               double edge_margin)
{
    if (!(std::isfinite(u_lo) && std::isfinite(u_hi) && u_lo < u_hi))
        throw DomainError("make_surface: requires finite u_lo < u_hi");
    if (!(edge_margin >= 0.0 && edge_margin < 0.5))
        throw DomainError("make_surface: edge margin must lie in [0, 0.5)");
    const Interval& iv = profile.interval();
    if (u_lo < iv.lo || u_hi > iv.hi) {
        std::ostringstream os;
        os << "make_surface: [" << u_lo << ", " << u_hi << "] is not inside the profile interval ("
           << iv.lo << ", " << iv.hi << ")";
        throw DomainError(os.str());
    }

    auto degenerate_end = [&](double e) {
        const double tol = 1e-12 * std::max(1.0, std::abs(e));
        return std::abs(e) <= tol || std::abs(e - iv.lo) <= tol || std::abs(e - iv.hi) <= tol;
    };
    const double length = u_hi - u_lo;
    const double lo = degenerate_end(u_lo) ? u_lo + edge_margin * length : u_lo;
    const double hi = degenerate_end(u_hi) ? u_hi - edge_margin * length : u_hi;
    if (!(lo < hi))
        throw DomainError("make_surface: empty u-range after edge margins");

    const ParamDomain dom{lo, hi, 0.0, 2.0 * std::numbers::pi, true};
    const double scale = std::min(1.0, 0.25 * (hi - lo));

    if (profile.kind() == CatenoidKind::Spacelike) {
        auto pos = [profile](double u, double v) {
            return LVec3{u * std::cos(v), u * std::sin(v), profile.g(u)};
        };
        auto jet = [profile](double u, double v) {
            const double c = std::cos(v), s = std::sin(v);
            const double gp = profile.gprime(u), gpp = profile.gsecond(u);
            return SurfaceJet{{u * c, u * s, profile.g(u)},
                              {c, s, gp},
                              {-u * s, u * c, 0.0},
                              {0.0, 0.0, gpp},
                              {-s, c, 0.0},
                              {-u * c, -u * s, 0.0}};
        };
        return ParametricSurface(dom, pos, jet, scale);
    }

    auto pos = [profile](double u, double v) {
        return LVec3{u * std::sin(v), u * std::cos(v), profile.g(u)};
    };
    auto jet = [profile](double u, double v) {
        const double c = std::cos(v), s = std::sin(v);
        const double gp = profile.gprime(u), gpp = profile.gsecond(u);
        return SurfaceJet{{u * s, u * c, profile.g(u)},
                          {s, c, gp},
                          {u * c, -u * s, 0.0},
                          {0.0, 0.0, gpp},
                          {c, -s, 0.0},
                          {-u * s, -u * c, 0.0}};
    };
    return ParametricSurface(dom, pos, jet, scale);
}

}  // namespace fcat
