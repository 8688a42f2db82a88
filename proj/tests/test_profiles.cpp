#include "doctest.h"

#include <cmath>
#include <numbers>
#include <vector>

#include "fcat/errors.hpp"
#include "fcat/numerics.hpp"
#include "fcat/profiles.hpp"

using namespace fcat;

namespace {

double simpson(const RealFn& f, double a, double b, int n)
{
    const double h = (b - a) / n;
    double s = f(a) + f(b);
    for (int i = 1; i < n; ++i)
        s += f(a + i * h) * (i % 2 ? 4.0 : 2.0);
    return s * h / 3.0;
}

// Richardson on composite Simpson (error ~ h^4).
double simpson_extrapolated(const RealFn& f, double a, double b)
{
    const double s1 = simpson(f, a, b, 4096), s2 = simpson(f, a, b, 8192);
    return s2 + (s2 - s1) / 15.0;
}

}  // namespace

TEST_CASE("spacelike height against an independent Simpson oracle")
{
    for (double C : {-2.0, 0.0, 2.0}) {
        const RealFn f = [C](double t) { return 1.0 / std::sqrt(1.0 + t * t * std::exp(t * t + C)); };
        for (double u : {0.5, 1.0, 2.5}) {
            CHECK(std::abs(spacelike_height(u, C) - simpson_extrapolated(f, 0.0, u)) <= 1e-10);
            CHECK(spacelike_height(-u, C) == doctest::Approx(-spacelike_height(u, C)).epsilon(1e-14));
        }
    }
    CHECK(spacelike_height(0.0, 1.0) == 0.0);
}

TEST_CASE("closed-form derivatives match differences of the heights")
{
    for (double C : {-1.0, 0.5}) {
        const RealFn h = [C](double u) { return spacelike_height(u, C); };
        const RealFn gp = [C](double u) { return spacelike_gprime(u, C); };
        for (double u : {-1.2, 0.4, 1.9}) {
            CHECK(std::abs(diff(h, u, 1, 0.1) - spacelike_gprime(u, C)) <= 1e-9);
            CHECK(std::abs(diff(gp, u, 1, 0.1) - spacelike_gsecond(u, C)) <= 1e-8);
            CHECK(spacelike_gprime(u, C, Branch::Negative) == -spacelike_gprime(u, C));
        }
    }
    for (double C : {1.0, 3.1}) {
        const RealFn h = [C](double u) { return timelike_height(u, C, 0.0); };
        const RealFn gp = [C](double u) { return timelike_gprime(u, C); };
        for (double u : {-0.5, 0.2, 0.6}) {
            CHECK(std::abs(diff(h, u, 1, 0.1) - timelike_gprime(u, C)) <= 1e-8);
            CHECK(std::abs(diff(gp, u, 1, 0.1) - timelike_gsecond(u, C)) <= 1e-7);
        }
    }
    CHECK(spacelike_gsecond(50.0, 0.0) == 0.0);
    CHECK(std::isfinite(spacelike_gprime(40.0, 3.0)));
}

TEST_CASE("domain trichotomy")
{
    for (double C : {0.5, 1.0, 2.0, 2.7})
        CHECK(domain_case(C).tag == DomainTag::WholeLine);
    CHECK(domain_case(std::numbers::e).tag == DomainTag::PuncturedAtOne);
    for (double C : {2.72, 3.1, 10.0, 500.0}) {
        const DomainCase dc = domain_case(C);
        REQUIRE(dc.tag == DomainTag::ThreeIntervals);
        REQUIRE(dc.roots);
        for (double r : {dc.roots->u1, dc.roots->u2}) {
            CHECK(std::abs(std::exp(r * r) - C * r * r) <= 1e-9);
            CHECK(1.0 - C * r * r * std::exp(-r * r) >= 0.0);
        }
        CHECK(dc.roots->u1 < 1.0);
        CHECK(dc.roots->u2 > 1.0);
    }
    CHECK_THROWS_AS(domain_case(0.0), DomainError);
    CHECK_THROWS_AS(domain_case(-1.0), DomainError);

    CHECK(domain_components(1.0).size() == 1);
    const auto parts = domain_components(3.1);
    REQUIRE(parts.size() == 3);
    CHECK(parts[0].hi == doctest::Approx(-1.266389104));
    CHECK(parts[1].hi == doctest::Approx(0.7556136794));
    CHECK(parts[1].contains(0.0));
    CHECK_FALSE(parts[1].contains(0.76));
    CHECK(default_base_point(3.1, Component::OuterNegative) == -parts[2].lo);
    CHECK(default_base_point(std::numbers::e, Component::OuterPositive) == 2.0);
    CHECK_THROWS_AS(default_base_point(2.0, Component::OuterPositive), DomainError);
}

TEST_CASE("singular endpoint integrals against sqrt-extrapolated truncations")
{
    // I(eps) = int_0^{u1 - eps} behaves like I - a sqrt(eps) - b eps - ...;
    // Neville in s = sqrt(eps) removes the leading terms.
    for (double C : {3.1, 5.0}) {
        const double u1 = domain_case(C).roots->u1;
        const RealFn f = [C](double t) { return 1.0 / std::sqrt(1.0 - C * t * t * std::exp(-t * t)); };
        std::vector<double> s, y;
        for (double eps : {1.6e-3, 4e-4, 1e-4, 2.5e-5}) {
            s.push_back(std::sqrt(eps));
            y.push_back(integrate(f, 0.0, u1 - eps, 1e-13).value);
        }
        for (std::size_t k = 1; k < s.size(); ++k)
            for (std::size_t i = s.size() - 1; i >= k; --i)
                y[i] = (s[i - k] * y[i] - s[i] * y[i - 1]) / (s[i - k] - s[i]);
        CHECK(std::abs(timelike_height(u1, C, 0.0) - y.back()) <= 1e-6);
    }
}

TEST_CASE("timelike height: domain handling")
{
    const double e = std::numbers::e;
    CHECK_THROWS_AS(timelike_height(1.0, e, 0.0), DivergenceError);
    CHECK_THROWS_AS(timelike_height(-1.0, e, 0.0), DivergenceError);
    CHECK_THROWS_AS(timelike_height(1.5, e, 0.5), DomainError);
    CHECK(timelike_height(0.9, e, 0.0) > 0.0);
    CHECK_THROWS_AS(timelike_height(1.0, 3.1, 0.0), DomainError);
    CHECK_THROWS_AS(timelike_height(2.0, 3.1, 0.0), DomainError);
    CHECK_THROWS_AS(timelike_gprime(1.0, 3.1), DomainError);
    const double u1 = domain_case(3.1).roots->u1;
    CHECK_THROWS_AS(timelike_gprime(u1, 3.1), DivergenceError);
    CHECK(timelike_height(0.3, 2.0, 0.7) == doctest::Approx(-timelike_height(0.7, 2.0, 0.3)));
    CHECK(timelike_height(0.5, 2.0, 0.5) == 0.0);
    // Both ends on roots: the full inner chord.
    CHECK(timelike_height(u1, 3.1, -u1) == doctest::Approx(2.0 * timelike_height(u1, 3.1, 0.0)).epsilon(1e-10));
}

TEST_CASE("ODE residuals of both families vanish")
{
    for (double C : {-2.0, 0.0, 2.0})
        for (double u : {-2.5, -0.3, 0.01, 1.0, 2.9})
            CHECK(std::abs(ode_residual(CatenoidKind::Spacelike, spacelike_gprime(u, C),
                                        spacelike_gsecond(u, C), u)) <= 1e-12);
    for (double C : {0.5, 2.0})
        for (double u : {-2.0, 0.4, 1.5})
            CHECK(std::abs(ode_residual(CatenoidKind::Timelike, timelike_gprime(u, C),
                                        timelike_gsecond(u, C), u)) <= 1e-12);
    // A non-solution leaves a residual.
    CHECK(std::abs(ode_residual(CatenoidKind::Spacelike, 0.5, 0.0, 1.0)) > 0.1);
}

TEST_CASE("reference table rows")
{
    const auto table = reference_table();
    REQUIRE(table.size() == 25);
    CHECK(table.front().C == 2.72);
    CHECK(table.back().C == 500.0);
    const TableRow r = table_row(2.75);
    CHECK(std::abs(r.u1 - 0.9248309636) <= 1e-8);
    CHECK(std::abs(r.u2 - 1.077103331) <= 1e-8);
    CHECK(std::abs(r.I1 / 2.363204279 - 1.0) <= 1e-5);
    CHECK(std::abs(r.I2 / 4.598285949 - 1.0) <= 1e-5);
    CHECK_THROWS_AS(table_row(2.0), DomainError);
    CHECK_THROWS_AS(table_row(std::numbers::e), DomainError);
    CHECK_THROWS_AS(table_row(1e8), DomainError);
}

TEST_CASE("divergence probe grows like ln(1/eps)/sqrt(2)")
{
    double prev = divergence_probe(1e-3);
    for (double eps : {1e-4, 1e-5, 1e-6}) {
        const double next = divergence_probe(eps);
        CHECK((next - prev) == doctest::Approx(std::log(10.0) / std::sqrt(2.0)).epsilon(0.02));
        prev = next;
    }
    CHECK_THROWS_AS(divergence_probe(0.0), DomainError);
    CHECK_THROWS_AS(divergence_probe(1.0), DomainError);
}

TEST_CASE("generatrix profiles")
{
    const auto s = GeneratrixProfile::spacelike(0.0);
    CHECK(s.g(0.0) == 0.0);
    CHECK(s.g(-1.3) == doctest::Approx(-s.g(1.3)));
    const auto sn = GeneratrixProfile::spacelike(0.0, Branch::Negative);
    CHECK(sn.g(0.7) == doctest::Approx(-s.g(0.7)));
    CHECK(sn.gprime(0.7) == -s.gprime(0.7));

    const auto t = GeneratrixProfile::timelike(2.0, Component::Inner, Branch::Positive, 1.5);
    CHECK(t.g(0.0) == 1.5);
    CHECK(t.g(0.8) == doctest::Approx(1.5 + timelike_height(0.8, 2.0, 0.0)));

    const auto outer = GeneratrixProfile::timelike(3.1, Component::OuterPositive);
    CHECK(outer.g(outer.u0()) == 0.0);
    CHECK(outer.u0() == outer.interval().lo);
    CHECK_THROWS_AS(outer.g(1.0), DomainError);

    const std::vector<double> us{outer.u0(), 1.4, 1.9, 2.5, 3.0};
    const auto gs = outer.sample_g(us);
    for (std::size_t i = 0; i < us.size(); ++i)
        CHECK(std::abs(gs[i] - outer.g(us[i])) <= 1e-10);
    const std::vector<double> bad{1.5, 1.4};
    CHECK_THROWS_AS(outer.sample_g(bad), DomainError);

    const auto based = GeneratrixProfile::timelike_with_base(3.1, Component::Inner, 0.5);
    CHECK(based.g(0.5) == 0.0);
    CHECK_THROWS_AS(GeneratrixProfile::timelike_with_base(3.1, Component::Inner, 0.9), DomainError);
    CHECK_THROWS_AS(GeneratrixProfile::timelike(2.0, Component::OuterPositive), DomainError);
}

TEST_CASE("surfaces of the two families have H_f = 0")
{
    const auto s = make_surface(GeneratrixProfile::spacelike(0.0), -2.0, 2.0);
    CHECK(s.domain().u_lo == -2.0);
    CHECK(std::abs(f_mean_curvature(s, 0.7, 1.0)) <= 1e-9);
    CHECK(std::abs(f_mean_curvature(s.without_analytic_jet(), 0.7, 1.0)) <= 1e-6);
    CHECK(evaluate(s, 0.7, 1.0).normal.type == CausalType::Timelike);

    const auto p = GeneratrixProfile::timelike(3.1);
    const double u1 = p.interval().hi;
    const auto t = make_surface(p, 0.0, u1);
    CHECK(t.domain().u_lo == doctest::Approx(1e-3 * u1));
    CHECK(t.domain().u_hi == doctest::Approx(u1 * (1 - 1e-3)));
    CHECK(std::abs(f_mean_curvature(t, 0.5, 2.0)) <= 1e-9);
    CHECK(evaluate(t, 0.5, 2.0).normal.type == CausalType::Spacelike);
    const LVec3 x = t.position(0.5, 0.0);
    CHECK(x.x == 0.0);
    CHECK(x.y == 0.5);

    CHECK_THROWS_AS(make_surface(p, 0.0, 1.0), DomainError);
    CHECK_THROWS_AS(make_surface(p, 0.5, 0.4), DomainError);
}
