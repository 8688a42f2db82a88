#include "fcat/numerics.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <queue>
#include <sstream>
#include <vector>

namespace fcat {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();

// Kronrod abscissae on [-1, 1]; odd indices are the 7-point Gauss nodes.
constexpr std::array<double, 8> kXgk = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};

constexpr std::array<double, 8> kWgk = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};

constexpr std::array<double, 4> kWg = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

struct Segment {
    double a;
    double b;
    double value;
    double error;

    bool operator<(const Segment& o) const { return error < o.error; }
};

class Kronrod15 {
public:
    Kronrod15(const RealFn& f, std::size_t& evaluations) : f_(f), evals_(evaluations) {}

    Segment operator()(double a, double b) const
    {
        const double center = 0.5 * (a + b);
        const double half = 0.5 * (b - a);
        std::array<double, 7> f1{}, f2{};

        const double fc = eval(center);
        double resg = fc * kWg[3];
        double resk = fc * kWgk[7];
        double resabs = std::abs(resk);
        for (int j = 0; j < 7; ++j) {
            const double dx = half * kXgk[j];
            f1[j] = eval(center - dx);
            f2[j] = eval(center + dx);
            const double sum = f1[j] + f2[j];
            resk += kWgk[j] * sum;
            resabs += kWgk[j] * (std::abs(f1[j]) + std::abs(f2[j]));
            if (j % 2 == 1)
                resg += kWg[j / 2] * sum;
        }

        const double mean = 0.5 * resk;
        double resasc = kWgk[7] * std::abs(fc - mean);
        for (int j = 0; j < 7; ++j)
            resasc += kWgk[j] * (std::abs(f1[j] - mean) + std::abs(f2[j] - mean));

        const double ahalf = std::abs(half);
        resabs *= ahalf;
        resasc *= ahalf;
        double err = std::abs((resk - resg) * half);
        if (resasc != 0.0 && err != 0.0)
            err = resasc * std::min(1.0, std::pow(200.0 * err / resasc, 1.5));
        if (resabs > std::numeric_limits<double>::min() / (50.0 * kEps))
            err = std::max(50.0 * kEps * resabs, err);
        return {a, b, resk * half, err};
    }

private:
    double eval(double x) const
    {
        ++evals_;
        const double y = f_(x);
        if (!std::isfinite(y)) {
            std::ostringstream os;
            os << "integrate: non-finite integrand value at " << x;
            throw QuadratureError(os.str(), {std::numeric_limits<double>::quiet_NaN(), 0.0, evals_});
        }
        return y;
    }

    const RealFn& f_;
    std::size_t& evals_;
};

QuadratureResult integrate_regular(const RealFn& f, double a, double b, double tol)
{
    std::size_t evals = 0;
    const Kronrod15 rule(f, evals);

    std::priority_queue<Segment> work;
    std::vector<Segment> frozen;  // too narrow to split further
    Segment first = rule(a, b);
    double total = first.value;
    double total_err = first.error;
    work.push(first);

    while (total_err > tol) {
        if (work.empty() || evals + 30 > kQuadratureBudget) {
            std::ostringstream os;
            os << "integrate: no convergence on [" << a << ", " << b << "] (error estimate "
               << total_err << " > tol " << tol << " after " << evals << " evaluations)";
            throw QuadratureError(os.str(), {total, total_err, evals});
        }
        const Segment worst = work.top();
        work.pop();
        const double mid = 0.5 * (worst.a + worst.b);
        const double scale = std::max(std::abs(worst.a), std::abs(worst.b));
        if (worst.b - worst.a <= 100.0 * kEps * std::max(scale, 1e-300) || mid <= worst.a ||
            mid >= worst.b) {
            frozen.push_back(worst);
            continue;
        }
        const Segment left = rule(worst.a, mid);
        const Segment right = rule(mid, worst.b);
        total += left.value + right.value - worst.value;
        total_err += left.error + right.error - worst.error;
        work.push(left);
        work.push(right);
    }

    // Re-sum to drop the drift of the incremental updates.
    total = 0.0;
    total_err = 0.0;
    for (const auto& s : frozen) {
        total += s.value;
        total_err += s.error;
    }
    while (!work.empty()) {
        total += work.top().value;
        total_err += work.top().error;
        work.pop();
    }
    return {total, total_err, evals};
}

}  // namespace

QuadratureResult integrate(const RealFn& fn, double a, double b, double tol,
                           SingularEnd singular)
{
    if (!(std::isfinite(a) && std::isfinite(b)) || !(a < b))
        throw DomainError("integrate: requires finite a < b");
    if (!(tol > 0.0))
        throw DomainError("integrate: tolerance must be positive");

    switch (singular) {
    case SingularEnd::None:
        return integrate_regular(fn, a, b, tol);
    case SingularEnd::Lower: {
        // tau = a + w^2, dtau = 2 w dw
        const RealFn g = [&](double w) { return 2.0 * w * fn(a + w * w); };
        return integrate_regular(g, 0.0, std::sqrt(b - a), tol);
    }
    case SingularEnd::Upper: {
        // tau = b - w^2, dtau = -2 w dw
        const RealFn g = [&](double w) { return 2.0 * w * fn(b - w * w); };
        return integrate_regular(g, 0.0, std::sqrt(b - a), tol);
    }
    }
    return integrate_regular(fn, a, b, tol);
}

RootBracket find_root_bracket(const RealFn& fn, double lo, double hi, double tol)
{
    auto eval = [&](double x) {
        const double y = fn(x);
        if (std::isnan(y)) {
            std::ostringstream os;
            os << "find_root: function returned NaN at " << x;
            throw RootBracketError(os.str());
        }
        return y;
    };

    double a = lo, b = hi;
    double fa = eval(a), fb = eval(b);
    if (fa == 0.0)
        return {a, a, a, 0};
    if (fb == 0.0)
        return {b, b, b, 0};
    if ((fa > 0.0) == (fb > 0.0)) {
        std::ostringstream os;
        os << "find_root: no sign change on [" << lo << ", " << hi << "]";
        throw RootBracketError(os.str());
    }

    double c = a, fc = fa;
    double d = b - a, e = d;
    constexpr int kMaxIterations = 500;
    int it = 0;
    for (; it < kMaxIterations; ++it) {
        if ((fb > 0.0) == (fc > 0.0)) {
            c = a;
            fc = fa;
            d = e = b - a;
        }
        if (std::abs(fc) < std::abs(fb)) {
            a = b; b = c; c = a;
            fa = fb; fb = fc; fc = fa;
        }
        const double tol1 = std::max(0.5 * tol, 2.0 * kEps * std::abs(b));
        const double xm = 0.5 * (c - b);
        if (std::abs(xm) <= tol1 || fb == 0.0)
            break;

        if (std::abs(e) >= tol1 && std::abs(fa) > std::abs(fb)) {
            // Secant or inverse quadratic interpolation.
            const double s = fb / fa;
            double p, q;
            if (a == c) {
                p = 2.0 * xm * s;
                q = 1.0 - s;
            } else {
                const double qa = fa / fc;
                const double r = fb / fc;
                p = s * (2.0 * xm * qa * (qa - r) - (b - a) * (r - 1.0));
                q = (qa - 1.0) * (r - 1.0) * (s - 1.0);
            }
            if (p > 0.0)
                q = -q;
            p = std::abs(p);
            const double min1 = 3.0 * xm * q - std::abs(tol1 * q);
            const double min2 = std::abs(e * q);
            if (2.0 * p < std::min(min1, min2)) {
                e = d;
                d = p / q;
            } else {
                d = xm;
                e = d;
            }
        } else {
            d = xm;
            e = d;
        }
        a = b;
        fa = fb;
        b += std::abs(d) > tol1 ? d : std::copysign(tol1, xm);
        fb = eval(b);
    }
    if (fb == 0.0)
        return {b, b, b, it};
    return {b, std::min(b, c), std::max(b, c), it};
}

double find_root(const RealFn& fn, double lo, double hi, double tol)
{
    return find_root_bracket(fn, lo, hi, tol).root;
}

double diff(const RealFn& fn, double u, int order, double scale)
{
    if (!(scale > 0.0))
        throw DomainError("diff: scale must be positive");
    if (order == 1) {
        const double h = scale * 1e-4;
        return (fn(u - 2 * h) - 8 * fn(u - h) + 8 * fn(u + h) - fn(u + 2 * h)) / (12 * h);
    }
    if (order == 2) {
        const double h = scale * 1e-3;
        return (-fn(u - 2 * h) + 16 * fn(u - h) - 30 * fn(u) + 16 * fn(u + h) - fn(u + 2 * h)) /
               (12 * h * h);
    }
    throw DomainError("diff: order must be 1 or 2");
}

}  // namespace fcat
