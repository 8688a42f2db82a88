#include "doctest.h"

#include <cmath>
#include <random>

#include "fcat/errors.hpp"
#include "fcat/minkowski.hpp"

using namespace fcat;

namespace {

LVec3 random_vec(std::mt19937_64& rng)
{
    std::uniform_real_distribution<double> d(-2.0, 2.0);
    return {d(rng), d(rng), d(rng)};
}

// Determinant by cofactor expansion along the first row.
double det_cofactor(const LVec3& a, const LVec3& b, const LVec3& c)
{
    return a.x * (b.y * c.z - b.z * c.y) - a.y * (b.x * c.z - b.z * c.x) +
           a.z * (b.x * c.y - b.y * c.x);
}

}  // namespace

TEST_CASE("scalar product has signature (+, +, -)")
{
    CHECK(lorentz_dot({1, 2, 3}, {4, 5, 6}) == 4 + 10 - 18);
    CHECK(lorentz_dot({0, 0, 1}, {0, 0, 1}) == -1);
    CHECK(euclid_dot({1, 2, 3}, {4, 5, 6}) == 32);
    CHECK(euclid_norm({3, 4, 0}) == 5);
    CHECK(lorentz_norm({0, 3, 5}) == doctest::Approx(4.0));
    CHECK(lorentz_norm({1, 0, 1}) == 0.0);
}

TEST_CASE("causal types")
{
    CHECK(causal_type({1, 0, 0}) == CausalType::Spacelike);
    CHECK(causal_type({0, 0, 1}) == CausalType::Timelike);
    CHECK(causal_type({1, 0, 1}) == CausalType::Lightlike);
    CHECK(causal_type({0.6, 0.8, 1.0}) == CausalType::Lightlike);
    CHECK(causal_type({0.6, 0.8, 1.0 + 1e-6}) == CausalType::Timelike);
    CHECK(to_string(CausalType::Timelike) == "timelike");
    CHECK_THROWS_AS(causal_type({0, 0, 0}), DomainError);
    CHECK_THROWS_AS(causal_type({NAN, 0, 1}), DomainError);
}

TEST_CASE("wedge product: <c, a^b> = det(c, a, b) and the Gram identity")
{
    std::mt19937_64 rng(11);
    for (int i = 0; i < 500; ++i) {
        const LVec3 a = random_vec(rng), b = random_vec(rng), c = random_vec(rng);
        const LVec3 w = wedge(a, b);
        CHECK(std::abs(lorentz_dot(c, w) - det_cofactor(c, a, b)) <= 1e-12);
        CHECK(std::abs(det3(c, a, b) - det_cofactor(c, a, b)) <= 1e-12);
        CHECK(std::abs(lorentz_dot(w, a)) <= 1e-12);
        CHECK(std::abs(lorentz_dot(w, b)) <= 1e-12);
        const double gram =
            lorentz_dot(a, a) * lorentz_dot(b, b) - lorentz_dot(a, b) * lorentz_dot(a, b);
        CHECK(std::abs(lorentz_dot(w, w) + gram) <= 1e-11);
    }
    // e1 ^ e2 points along -e3 in this metric.
    CHECK(wedge({1, 0, 0}, {0, 1, 0}) == LVec3{0, 0, -1});
}

TEST_CASE("rotations are Lorentz isometries with unit determinant")
{
    std::mt19937_64 rng(5);
    for (RotationAxis ax : {RotationAxis::SpacelikeY, RotationAxis::LightlikeXZ,
                            RotationAxis::TimelikeZ}) {
        for (double p : {-1.3, -0.2, 0.0, 0.7, 2.1}) {
            const LMat3 m = rotation(ax, p);
            CHECK(m.det() == doctest::Approx(1.0).epsilon(1e-12));
            for (int k = 0; k < 20; ++k) {
                const LVec3 a = random_vec(rng), b = random_vec(rng);
                CHECK(std::abs(lorentz_dot(m * a, m * b) - lorentz_dot(a, b)) <= 1e-10);
            }
        }
    }
}

TEST_CASE("rotations fix their axes")
{
    for (double p : {-0.9, 0.4, 1.7}) {
        const LVec3 l = rotation(RotationAxis::LightlikeXZ, p) * LVec3{1, 0, 1};
        CHECK(l == LVec3{1, 0, 1});
        const LVec3 z = rotation(RotationAxis::TimelikeZ, p) * LVec3{0, 0, 1};
        CHECK(z == LVec3{0, 0, 1});
        const LVec3 y = rotation(RotationAxis::SpacelikeY, p) * LVec3{0, 1, 0};
        CHECK(y == LVec3{0, 1, 0});
    }
}

TEST_CASE("rotation families are one-parameter groups")
{
    for (RotationAxis ax : {RotationAxis::SpacelikeY, RotationAxis::LightlikeXZ,
                            RotationAxis::TimelikeZ}) {
        const LMat3 ab = rotation(ax, 0.3) * rotation(ax, 0.5);
        const LMat3 c = rotation(ax, 0.8);
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j)
                CHECK(ab(i, j) == doctest::Approx(c(i, j)).epsilon(1e-13));
    }
    const LMat3 id = LMat3::identity();
    CHECK(id * LVec3{1, 2, 3} == LVec3{1, 2, 3});
}
