#include "fcat/verify.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <random>
#include <sstream>

#include "fcat/errors.hpp"

namespace fcat {

namespace {

constexpr double kPi = std::numbers::pi;

// Reproducible uniform draws; one independent stream per (seed, tag, index).
class Stream {
public:
    Stream(std::uint64_t seed, std::uint32_t tag, std::uint32_t index)
    {
        std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                          tag, index};
        engine_.seed(seq);
    }

    double uniform() { return static_cast<double>(engine_() >> 11) * 0x1p-53; }
    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }
    double sign() { return uniform() < 0.5 ? -1.0 : 1.0; }

private:
    std::mt19937_64 engine_;
};

std::string fmt(double x)
{
    std::ostringstream os;
    os.precision(4);
    os << x;
    return os.str();
}

struct RotationJet {
    LMat3 r;
    LMat3 dr;
    LMat3 ddr;
};

RotationJet orbit_rotation(CausalType axis, SurfaceFamily family, double v)
{
    switch (axis) {
    case CausalType::Spacelike: {
        const double ch = std::cosh(v), sh = std::sinh(v);
        return {LMat3({{{1, 0, 0}, {0, ch, sh}, {0, sh, ch}}}),
                LMat3({{{0, 0, 0}, {0, sh, ch}, {0, ch, sh}}}),
                LMat3({{{0, 0, 0}, {0, ch, sh}, {0, sh, ch}}})};
    }
    case CausalType::Lightlike:
        return {rotation(RotationAxis::LightlikeXZ, v),
                LMat3({{{-v, -1, v}, {1, 0, -1}, {-v, -1, v}}}),
                LMat3({{{-1, 0, 1}, {0, 0, 0}, {-1, 0, 1}}})};
    case CausalType::Timelike: {
        const double c = std::cos(v), s = std::sin(v);
        if (family == SurfaceFamily::Spacelike)
            return {rotation(RotationAxis::TimelikeZ, v),
                    LMat3({{{-s, -c, 0}, {c, -s, 0}, {0, 0, 0}}}),
                    LMat3({{{-c, s, 0}, {-s, -c, 0}, {0, 0, 0}}})};
        return {LMat3({{{s, c, 0}, {c, -s, 0}, {0, 0, 1}}}),
                LMat3({{{c, -s, 0}, {-s, -c, 0}, {0, 0, 0}}}),
                LMat3({{{-s, -c, 0}, {-c, s, 0}, {0, 0, 0}}})};
    }
    }
    return {};
}

std::string_view axis_name(CausalType t)
{
    switch (t) {
    case CausalType::Spacelike: return "spacelike axis";
    case CausalType::Lightlike: return "lightlike axis";
    case CausalType::Timelike: return "timelike axis";
    }
    return "axis";
}

double sgn(double x) { return x < 0.0 ? -1.0 : 1.0; }

// Maximum of fn over the cell-centred nu x nv grid of the surface domain.
template <class Fn>
double grid_max(const ParametricSurface& s, int nu, int nv, Fn&& fn)
{
    const ParamDomain& d = s.domain();
    double worst = -std::numeric_limits<double>::infinity();
    for (int i = 0; i < nu; ++i) {
        const double u = d.u_lo + (i + 0.5) * (d.u_hi - d.u_lo) / nu;
        for (int j = 0; j < nv; ++j) {
            const double v = d.v_lo + (j + 0.5) * (d.v_hi - d.v_lo) / nv;
            const double value = fn(evaluate(s, u, v));
            if (!(value <= worst))
                worst = value;
        }
    }
    return worst;
}

}  // namespace

std::string_view to_string(SurfaceFamily f)
{
    return f == SurfaceFamily::Spacelike ? "spacelike" : "timelike";
}

std::string_view to_string(Verdict v)
{
    return v == Verdict::ConsistentWithTheorem ? "ConsistentWithTheorem" : "Violation";
}

Generatrix Generatrix::constant(double c, double u_lo, double u_hi)
{
    return {[c](double) { return c; }, [](double) { return 0.0; }, [](double) { return 0.0; },
            u_lo, u_hi};
}

Generatrix Generatrix::cubic(const std::array<double, 4>& c, double center, double u_lo,
                             double u_hi)
{
    return {[c, center](double u) {
                const double t = u - center;
                return c[0] + t * (c[1] + t * (c[2] + t * c[3]));
            },
            [c, center](double u) {
                const double t = u - center;
                return c[1] + t * (2.0 * c[2] + 3.0 * t * c[3]);
            },
            [c, center](double u) { return 2.0 * c[2] + 6.0 * c[3] * (u - center); },
            u_lo, u_hi};
}

Generatrix Generatrix::from_profile(const GeneratrixProfile& p, double u_lo, double u_hi)
{
    return {[p](double u) { return p.g(u); }, [p](double u) { return p.gprime(u); },
            [p](double u) { return p.gsecond(u); }, u_lo, u_hi};
}

ParametricSurface revolution_surface(const AxisSpec& axis, SurfaceFamily family)
{
    const Generatrix& gen = axis.generatrix;
    if (!(gen.u_lo < gen.u_hi) || !gen.g || !gen.gp || !gen.gpp)
        throw DomainError("revolution_surface: generatrix needs g, g', g'' on u_lo < u_hi");
    for (int k = 0; k <= 64; ++k) {
        const double u = gen.u_lo + k * (gen.u_hi - gen.u_lo) / 64.0;
        if (!(std::abs(gen.gp(u)) < 1.0)) {
            std::ostringstream os;
            os << "revolution_surface: " << to_string(family)
               << " surface needs |g'| < 1, violated at u = " << u;
            throw DomainError(os.str());
        }
    }

    const bool lightlike = axis.causal == CausalType::Lightlike;
    const LMat3 tilt = lightlike ? LMat3::identity() : rotation(RotationAxis::SpacelikeY, axis.theta);
    const LVec3 shift = lightlike ? LVec3{axis.a, 0.0, 0.0} : LVec3{0.0, axis.a, 0.0};
    const CausalType type = axis.causal;

    ParamDomain dom{gen.u_lo, gen.u_hi, -3.0, 3.0, false};
    if (type == CausalType::Timelike)
        dom = {gen.u_lo, gen.u_hi, 0.0, 2.0 * kPi, true};

    auto jet = [gen, tilt, shift, type, family](double u, double v) {
        const double g = gen.g(u), gp = gen.gp(u), gpp = gen.gpp(u);
        LVec3 c0, c1, c2;
        if (family == SurfaceFamily::Spacelike) {
            c0 = {u, 0.0, g};
            c1 = {1.0, 0.0, gp};
            c2 = {0.0, 0.0, gpp};
        } else {
            c0 = {g, 0.0, u};
            c1 = {gp, 0.0, 1.0};
            c2 = {gpp, 0.0, 0.0};
        }
        const RotationJet R = orbit_rotation(type, family, v);
        const LMat3 m0 = tilt * R.r, m1 = tilt * R.dr, m2 = tilt * R.ddr;
        return SurfaceJet{m0 * c0 + shift, m0 * c1, m1 * c0, m0 * c2, m1 * c1, m2 * c0};
    };
    auto pos = [jet](double u, double v) { return jet(u, v).x; };
    return ParametricSurface(dom, pos, jet, std::min(1.0, 0.25 * (gen.u_hi - gen.u_lo)));
}

std::optional<double> closed_form_pairing(const AxisSpec& axis, SurfaceFamily family, double u,
                                          double v)
{
    if (axis.causal != CausalType::Timelike)
        return std::nullopt;
    const Generatrix& gen = axis.generatrix;
    const double g = gen.g(u), gp = gen.gp(u);
    const double sh = std::sinh(axis.theta), ch = std::cosh(axis.theta);
    const double c = std::cos(v), s = std::sin(v);
    const double root = std::sqrt(1.0 - gp * gp);
    if (family == SurfaceFamily::Spacelike) {
        const double bracket = u * gp * (1.0 + c * c * sh * sh) + (u + g * gp) * sh * ch * c +
                               g * sh * sh + axis.a * gp * s;
        return -sgn(u) * bracket / root;
    }
    const double numer = axis.a * c + (u + g * gp) * sh * ch * s + u * gp * sh * sh +
                         g * ch * ch * s * s + g * c * c;
    return sgn(g) * numer / root;
}

PairingSpread pairing_along_circle(const AxisSpec& axis, SurfaceFamily family, double u,
                                   int v_samples)
{
    if (v_samples < 2)
        throw DomainError("pairing_along_circle: needs at least two samples in v");
    const ParametricSurface s = revolution_surface(axis, family);
    const ParamDomain& d = s.domain();
    PairingSpread out;
    out.min = std::numeric_limits<double>::infinity();
    out.max = -out.min;
    double deviation = 0.0;
    bool have_closed = false;
    for (int k = 0; k < v_samples; ++k) {
        const double v = d.periodic_v ? d.v_lo + k * (d.v_hi - d.v_lo) / v_samples
                                      : d.v_lo + k * (d.v_hi - d.v_lo) / (v_samples - 1);
        const double p = evaluate(s, u, v).pairing;
        out.min = std::min(out.min, p);
        out.max = std::max(out.max, p);
        if (const auto cf = closed_form_pairing(axis, family, u, v)) {
            have_closed = true;
            deviation = std::max(deviation, std::abs(*cf - p));
        }
    }
    out.spread = out.max - out.min;
    if (have_closed)
        out.closed_form_deviation = deviation;
    return out;
}

QStat q_statistic(const AxisSpec& axis, double u, double v)
{
    if (axis.causal != CausalType::Spacelike)
        throw DomainError("q_statistic: defined for a spacelike axis only");
    const Generatrix& gen = axis.generatrix;
    const double g = gen.g(u), gp = gen.gp(u);
    const double th = axis.theta;
    const double ch = std::cosh(th);

    QStat q;
    q.u = u;
    q.v = v;
    q.Q = g * std::sinh(2.0 * v) * ch * ch + (u + g * gp) * 0.5 * std::sinh(2.0 * th) * std::sinh(v) +
          axis.a * std::cosh(v);

    const ParametricSurface s = revolution_surface(axis, SurfaceFamily::Spacelike);
    const double root = std::sqrt(1.0 - gp * gp);
    const RealFn along = [&](double t) { return root * pairing(s, u, t); };
    q.finite_difference = -sgn(g) * diff(along, v, 1);
    return q;
}

// --- reports ---

bool Check::passed() const
{
    return kind == BoundKind::AtMost ? value <= tolerance : value > tolerance;
}

bool Check::violated() const
{
    return kind == BoundKind::AtMost ? !(value <= 10.0 * tolerance) : !(value > tolerance / 10.0);
}

void VerificationReport::add(std::string label, double value, double tolerance, BoundKind kind)
{
    checks.push_back({std::move(label), value, tolerance, kind});
}

void VerificationReport::merge(const VerificationReport& other)
{
    checks.insert(checks.end(), other.checks.begin(), other.checks.end());
    spreads.insert(spreads.end(), other.spreads.begin(), other.spreads.end());
}

bool VerificationReport::all_passed() const
{
    return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.passed(); });
}

Verdict VerificationReport::verdict() const
{
    const bool bad =
        std::any_of(checks.begin(), checks.end(), [](const Check& c) { return c.violated(); });
    return bad ? Verdict::Violation : Verdict::ConsistentWithTheorem;
}

// --- suites ---

VerificationReport corollary_suite()
{
    VerificationReport rep;
    rep.suite = "corollary";
    constexpr int n = 32;

    for (double h : {0.0, 3.0, -1.5}) {
        const double m = grid_max(make_horizontal_plane(h), n, n,
                                  [](const CurvatureSample& c) { return std::abs(c.Hf); });
        rep.add("horizontal plane z=" + fmt(h) + " max|H_f|", m, 1e-12);
    }

    for (double d : {0.0, 1.0, 2.0}) {
        const ParametricSurface s = make_vertical_plane(0.7, d);
        const std::string tag = "vertical plane d=" + fmt(d);
        rep.add(tag + " max||pairing|-d|", grid_max(s, n, n, [d](const CurvatureSample& c) {
                    return std::abs(std::abs(c.pairing) - d);
                }), 1e-10);
        rep.add(tag + " max||H_f|-d/2|", grid_max(s, n, n, [d](const CurvatureSample& c) {
                    return std::abs(std::abs(c.Hf) - 0.5 * d);
                }), 1e-10);
        const double max_hf =
            grid_max(s, n, n, [](const CurvatureSample& c) { return std::abs(c.Hf); });
        if (d == 0.0) {
            rep.add(tag + " max|H_f|", max_hf, 1e-12);
        } else {
            const double min_hf =
                -grid_max(s, n, n, [](const CurvatureSample& c) { return -std::abs(c.Hf); });
            rep.add(tag + " min|H_f| (nonzero)", min_hf, 1e-6, BoundKind::AtLeast);
        }
    }

    for (double r : {1.0, 0.5, 2.0, 3.0}) {
        const ParametricSurface s = make_cylinder(r);
        const double expected = std::abs(0.5 * r - 0.5 / r);
        const std::string tag = "cylinder r=" + fmt(r);
        rep.add(tag + " max||H_f|-|r/2-1/(2r)||", grid_max(s, n, n, [expected](const CurvatureSample& c) {
                    return std::abs(std::abs(c.Hf) - expected);
                }), 1e-10);
        if (r == 1.0)
            rep.add(tag + " max|H_f|",
                    grid_max(s, n, n, [](const CurvatureSample& c) { return std::abs(c.Hf); }),
                    1e-12);
    }
    return rep;
}

std::vector<CatenoidCase> catenoid_cases()
{
    std::vector<CatenoidCase> out;
    for (double C : {-2.0, 0.0, 2.0})
        out.push_back({"spacelike f-catenoid C=" + fmt(C),
                       make_surface(GeneratrixProfile::spacelike(C), -3.0, 3.0)});
    for (double C : {0.5, 1.0, 2.0})
        out.push_back({"timelike f-catenoid C=" + fmt(C),
                       make_surface(GeneratrixProfile::timelike(C), -3.0, 3.0)});
    const DomainRoots r = *domain_case(3.1).roots;
    out.push_back({"timelike f-catenoid C=3.1 inner",
                   make_surface(GeneratrixProfile::timelike(3.1, Component::Inner), -r.u1, r.u1)});
    out.push_back({"timelike f-catenoid C=3.1 outer",
                   make_surface(GeneratrixProfile::timelike(3.1, Component::OuterPositive), r.u2,
                                3.0)});
    return out;
}

namespace {

struct Trial {
    AxisSpec axis;
    bool escape = false;
    std::string label;
};

bool admissible(const Generatrix& gen, const AxisSpec& axis, SurfaceFamily family,
                double min_slope)
{
    for (int k = 0; k <= 64; ++k) {
        const double u = gen.u_lo + k * (gen.u_hi - gen.u_lo) / 64.0;
        const double g = gen.g(u), slope = std::abs(gen.gp(u));
        if (slope > 0.9 || slope < min_slope)
            return false;
        const bool needs_g = (axis.causal == CausalType::Spacelike) ==
                             (family == SurfaceFamily::Spacelike);
        if (axis.causal == CausalType::Lightlike) {
            if (std::abs(u - g) < 0.1)
                return false;
        } else if (needs_g && std::abs(g) < 0.1) {
            return false;
        }
    }
    return true;
}

Generatrix draw_cubic(Stream& rng)
{
    const double lo = rng.uniform(0.2, 1.5);
    const double hi = lo + 0.5;
    const std::array<double, 4> c{rng.uniform(-1, 1), rng.uniform(-1, 1), rng.uniform(-1, 1),
                                  rng.uniform(-1, 1)};
    return Generatrix::cubic(c, 0.5 * (lo + hi), lo, hi);
}

constexpr int kRedrawBudget = 1000;

Trial draw_trial(SurfaceFamily family, int trial, Stream& rng)
{
    Trial t;
    std::ostringstream label;
    label << to_string(family) << " trial " << trial << ": ";

    if (trial % 5 == 4) {
        t.escape = true;
        const bool vertical_plane = family == SurfaceFamily::Timelike && (trial / 5) % 2 == 1;
        if (vertical_plane) {
            t.axis.causal = CausalType::Spacelike;
            t.axis.a = (trial / 10) % 2 == 0 ? 0.0 : rng.sign() * rng.uniform(0.1, 1.0);
            const double c = rng.sign() * rng.uniform(0.2, 1.0);
            const double lo = rng.uniform(0.2, 1.5);
            t.axis.generatrix = Generatrix::constant(c, lo, lo + 0.5);
            label << "escape, spacelike axis, theta=0, a=" << fmt(t.axis.a) << ", g=" << fmt(c);
        } else {
            t.axis.causal = CausalType::Timelike;
            for (int k = 0;; ++k) {
                if (k == kRedrawBudget)
                    throw Error("theorem_sweep: redraw budget exhausted");
                t.axis.generatrix = draw_cubic(rng);
                if (admissible(t.axis.generatrix, t.axis, family, 0.0))
                    break;
            }
            label << "escape, timelike axis, theta=a=0";
        }
        t.label = label.str();
        return t;
    }

    const int j = trial - trial / 5;
    static constexpr CausalType axes[] = {CausalType::Spacelike, CausalType::Timelike,
                                          CausalType::Lightlike};
    t.axis.causal = axes[j % 3];
    const int mode = (j / 3) % 3;
    t.axis.theta = mode == 1 ? 0.0 : rng.sign() * rng.uniform(0.1, 1.0);
    t.axis.a = mode == 2 ? 0.0 : rng.sign() * rng.uniform(0.1, 1.0);
    for (int k = 0;; ++k) {
        if (k == kRedrawBudget)
            throw Error("theorem_sweep: redraw budget exhausted");
        t.axis.generatrix = draw_cubic(rng);
        if (admissible(t.axis.generatrix, t.axis, family, 0.1))
            break;
    }
    label << axis_name(t.axis.causal) << ", theta=" << fmt(t.axis.theta)
          << ", a=" << fmt(t.axis.a);
    t.label = label.str();
    return t;
}

}  // namespace

VerificationReport theorem_sweep(SurfaceFamily family, const SweepOptions& opts)
{
    if (opts.trials < 1)
        throw DomainError("theorem_sweep: needs at least one trial");
    VerificationReport rep;
    rep.suite = "classification (" + std::string(to_string(family)) + ")";

    double min_spread = std::numeric_limits<double>::infinity();
    double max_escape = 0.0;
    double max_deviation = 0.0;
    bool any_closed = false;
    constexpr int u_samples = 5;

    for (int trial = 0; trial < opts.trials; ++trial) {
        Stream rng(opts.seed, family == SurfaceFamily::Spacelike ? 1u : 2u,
                   static_cast<std::uint32_t>(trial));
        const Trial t = draw_trial(family, trial, rng);
        const Generatrix& gen = t.axis.generatrix;

        SpreadRecord rec{t.label, std::numeric_limits<double>::infinity(),
                         -std::numeric_limits<double>::infinity(), 0.0, t.escape};
        for (int k = 0; k < u_samples; ++k) {
            const double u = gen.u_lo + (k + 0.5) * (gen.u_hi - gen.u_lo) / u_samples;
            const PairingSpread ps = pairing_along_circle(t.axis, family, u);
            rec.min_over_v = std::min(rec.min_over_v, ps.min);
            rec.max_over_v = std::max(rec.max_over_v, ps.max);
            rec.spread = std::max(rec.spread, ps.spread);
            if (ps.closed_form_deviation) {
                any_closed = true;
                max_deviation = std::max(max_deviation, *ps.closed_form_deviation);
            }
        }
        if (t.escape)
            max_escape = std::max(max_escape, rec.spread);
        else
            min_spread = std::min(min_spread, rec.spread);
        rep.spreads.push_back(std::move(rec));
    }

    if (std::isfinite(min_spread))
        rep.add("min spread over non-classified trials", min_spread, opts.spread_tol,
                BoundKind::AtLeast);
    if (opts.trials >= 5)
        rep.add("max spread over escape trials", max_escape, opts.escape_tol);
    if (any_closed)
        rep.add("max |closed-form pairing - computed pairing|", max_deviation, 1e-8);

    const int n = opts.grid;
    auto residual = [&](const std::string& label, const ParametricSurface& s) {
        rep.add(label + " max|H_f|", max_abs_f_mean_curvature(s, n, n), opts.residual_tol);
    };
    if (family == SurfaceFamily::Spacelike) {
        residual("horizontal plane z=1", make_horizontal_plane(1.0));
    } else {
        residual("vertical plane through the z-axis", make_vertical_plane(0.7, 0.0));
        residual("unit cylinder", make_cylinder(1.0));
    }
    for (const CatenoidCase& c : catenoid_cases()) {
        const bool spacelike = c.label.rfind("spacelike", 0) == 0;
        if (spacelike == (family == SurfaceFamily::Spacelike))
            residual(c.label, c.surface);
    }
    return rep;
}

VerificationReport lemma1_suite(int count, std::uint64_t seed, double tol)
{
    if (count < 1)
        throw DomainError("lemma1_suite: needs at least one sample");
    VerificationReport rep;
    rep.suite = "lemma1";
    double worst = 0.0;
    for (int i = 0; i < count; ++i) {
        Stream rng(seed, 3u, static_cast<std::uint32_t>(i));
        const LVec3 p{rng.uniform(-5, 5), rng.uniform(-5, 5), rng.uniform(-5, 5)};
        LVec3 n;
        for (;;) {
            n = {rng.uniform(-1, 1), rng.uniform(-1, 1), rng.uniform(-1, 1)};
            const double e2 = euclid_dot(n, n);
            if (e2 > 0.01 && std::abs(lorentz_dot(n, n)) >= 0.1 * e2)
                break;
        }
        n = n / lorentz_norm(n);
        const Lemma1Sides sides = lemma1_distance_identity(p, n);
        worst = std::max(worst, std::abs(sides.lhs - sides.rhs));
    }
    rep.add("max | |<grad f,N>| - d_E(rho(p),T_p)|N|_E | over " + std::to_string(count) +
                " pairs",
            worst, tol);
    return rep;
}

VerificationReport table_suite()
{
    VerificationReport rep;
    rep.suite = "tables";
    for (const TableRow& ref : reference_table()) {
        const TableRow got = table_row(ref.C);
        const std::string tag = "C=" + fmt(ref.C);
        const double rel = ref.C == 2.72 ? 1e-3 : 1e-5;
        rep.add(tag + " |u1 - table|", std::abs(got.u1 - ref.u1), 1e-8);
        rep.add(tag + " |u2 - table|", std::abs(got.u2 - ref.u2), 1e-8);
        rep.add(tag + " rel |I1 - table|", std::abs(got.I1 - ref.I1) / std::abs(ref.I1), rel);
        rep.add(tag + " rel |I2 - table|", std::abs(got.I2 - ref.I2) / std::abs(ref.I2), rel);
    }

    std::vector<double> inc;
    double prev = divergence_probe(1e-2);
    for (double eps : {1e-3, 1e-4, 1e-5}) {
        const double next = divergence_probe(eps);
        inc.push_back(next - prev);
        prev = next;
    }
    const auto [lo, hi] = std::minmax_element(inc.begin(), inc.end());
    rep.add("C=e probe: smallest increment per decade", *lo, 0.0, BoundKind::AtLeast);
    rep.add("C=e probe: increment spread (max-min)/min", (*hi - *lo) / *lo, 0.15);
    return rep;
}

VerificationReport residual_suite(const ResidualOptions& opts)
{
    VerificationReport rep;
    rep.suite = "residuals";

    // ODE residuals of the closed-form derivatives.
    double worst_s = 0.0, worst_t = 0.0;
    for (int i = 0; i < opts.ode_points; ++i) {
        Stream rng(opts.seed, 4u, static_cast<std::uint32_t>(i));
        const Branch b = rng.uniform() < 0.5 ? Branch::Positive : Branch::Negative;
        const double Cs = rng.uniform(-2, 2), us = rng.uniform(-3, 3);
        worst_s = std::max(worst_s, std::abs(ode_residual(CatenoidKind::Spacelike,
                                                          spacelike_gprime(us, Cs, b),
                                                          spacelike_gsecond(us, Cs, b), us)));
        double Ct, ut;
        switch (i % 3) {
        case 0:
            Ct = rng.uniform(0.5, 2.5);
            ut = rng.uniform(-3, 3);
            break;
        case 1: {
            Ct = rng.uniform(2.8, 10.0);
            const double u1 = domain_case(Ct).roots->u1;
            ut = rng.uniform(-0.95, 0.95) * u1;
            break;
        }
        default: {
            Ct = rng.uniform(2.8, 10.0);
            const double u2 = domain_case(Ct).roots->u2;
            ut = rng.sign() * rng.uniform(u2 + 0.05, 3.5);
            break;
        }
        }
        worst_t = std::max(worst_t, std::abs(ode_residual(CatenoidKind::Timelike,
                                                          timelike_gprime(ut, Ct, b),
                                                          timelike_gsecond(ut, Ct, b), ut)));
    }
    rep.add("spacelike ODE max residual (" + std::to_string(opts.ode_points) + " points)", worst_s,
            opts.ode_tol);
    rep.add("timelike ODE max residual (" + std::to_string(opts.ode_points) + " points)", worst_t,
            opts.ode_tol);

    // z-axis revolution formulas for H and <grad f, N> against the generic pipeline.
    double dev_h = 0.0, dev_p = 0.0;
    for (int i = 0; i < opts.formula_points; ++i) {
        Stream rng(opts.seed, 5u, static_cast<std::uint32_t>(i));
        const Branch b = rng.uniform() < 0.5 ? Branch::Positive : Branch::Negative;
        const double v = rng.uniform(0.0, 2.0 * kPi);
        double u, H, P;
        std::optional<ParametricSurface> s;
        if (i % 2 == 0) {
            const double C = rng.uniform(-2, 2);
            u = rng.uniform(0.1, 3.0);
            const GeneratrixProfile p = GeneratrixProfile::spacelike(C, b);
            s = make_surface(p, 0.05, 3.5);
            const double gp = p.gprime(u), gpp = p.gsecond(u), w = 1.0 - gp * gp;
            H = -0.5 * (w * gp + u * gpp) / (u * std::pow(w, 1.5));
            P = -gp * u / std::sqrt(w);
        } else {
            std::optional<GeneratrixProfile> p;
            double lo, hi;
            switch ((i / 2) % 3) {
            case 0: {
                const double C = rng.uniform(0.5, 2.5);
                p = GeneratrixProfile::timelike(C, Component::Inner, b);
                lo = 0.05;
                hi = 3.5;
                u = rng.uniform(0.1, 3.0);
                break;
            }
            case 1: {
                const double C = rng.uniform(2.8, 10.0);
                p = GeneratrixProfile::timelike(C, Component::Inner, b);
                lo = 0.0;
                hi = p->interval().hi;
                u = rng.uniform(0.1, 0.9) * hi;
                break;
            }
            default: {
                const double C = rng.uniform(2.8, 10.0);
                p = GeneratrixProfile::timelike(C, Component::OuterPositive, b);
                lo = p->interval().lo;
                hi = 4.0;
                u = rng.uniform(lo + 0.05, 3.5);
                break;
            }
            }
            s = make_surface(*p, lo, hi);
            const double gp = p->gprime(u), gpp = p->gsecond(u), w = 1.0 - gp * gp;
            H = -(w * gp + u * gpp) / (2.0 * u * w * std::sqrt(-w));
            P = gp * u / std::sqrt(-w);
        }
        const CurvatureSample c = evaluate(*s, u, v);
        dev_h = std::max(dev_h, std::abs(c.H - H));
        dev_p = std::max(dev_p, std::abs(c.pairing - P));
    }
    rep.add("z-axis formula for H vs generic, max deviation", dev_h, opts.formula_tol);
    rep.add("z-axis formula for <grad f,N> vs generic, max deviation", dev_p, opts.formula_tol);

    for (const CatenoidCase& c : catenoid_cases())
        rep.add(c.label + " max|H_f| on " + std::to_string(opts.grid) + "x" +
                    std::to_string(opts.grid),
                max_abs_f_mean_curvature(c.surface, opts.grid, opts.grid), opts.residual_tol);
    return rep;
}

}  // namespace fcat
