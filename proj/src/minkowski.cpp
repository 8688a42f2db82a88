#include "fcat/minkowski.hpp"

#include <cmath>

#include "fcat/errors.hpp"

namespace fcat {

bool LVec3::is_finite() const
{
    return std::isfinite(x) && std::isfinite(y) && std::isfinite(z);
}

std::string_view to_string(CausalType t)
{
    switch (t) {
    case CausalType::Spacelike: return "spacelike";
    case CausalType::Lightlike: return "lightlike";
    case CausalType::Timelike: return "timelike";
    }
    return "unknown";
}

double lorentz_dot(const LVec3& a, const LVec3& b)
{
    return a.x * b.x + a.y * b.y - a.z * b.z;
}

double euclid_dot(const LVec3& a, const LVec3& b)
{
    return a.x * b.x + a.y * b.y + a.z * b.z;
}

double euclid_norm(const LVec3& a)
{
    return std::hypot(a.x, a.y, a.z);
}

double lorentz_norm(const LVec3& a)
{
    return std::sqrt(std::abs(lorentz_dot(a, a)));
}

CausalType causal_type(const LVec3& a)
{
    if (!a.is_finite())
        throw DomainError("causal_type: non-finite vector");
    const double e2 = euclid_dot(a, a);
    if (e2 == 0.0)
        throw DomainError("causal_type: the zero vector has no causal type");
    const double l2 = lorentz_dot(a, a);
    if (std::abs(l2) <= kCausalTolerance * e2)
        return CausalType::Lightlike;
    return l2 > 0.0 ? CausalType::Spacelike : CausalType::Timelike;
}

LVec3 wedge(const LVec3& a, const LVec3& b)
{
    // Cofactor expansion of | e1 e2 -e3 ; a ; b |.
    return {a.y * b.z - a.z * b.y,
            a.z * b.x - a.x * b.z,
            -(a.x * b.y - a.y * b.x)};
}

double det3(const LVec3& a, const LVec3& b, const LVec3& c)
{
    return a.x * (b.y * c.z - b.z * c.y)
         - a.y * (b.x * c.z - b.z * c.x)
         + a.z * (b.x * c.y - b.y * c.x);
}

LVec3 LMat3::operator*(const LVec3& v) const
{
    return {m_[0][0] * v.x + m_[0][1] * v.y + m_[0][2] * v.z,
            m_[1][0] * v.x + m_[1][1] * v.y + m_[1][2] * v.z,
            m_[2][0] * v.x + m_[2][1] * v.y + m_[2][2] * v.z};
}

LMat3 LMat3::operator*(const LMat3& o) const
{
    std::array<std::array<double, 3>, 3> r{};
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            for (int k = 0; k < 3; ++k)
                r[i][j] += m_[i][k] * o.m_[k][j];
    return LMat3(r);
}

double LMat3::det() const
{
    return det3({m_[0][0], m_[0][1], m_[0][2]},
                {m_[1][0], m_[1][1], m_[1][2]},
                {m_[2][0], m_[2][1], m_[2][2]});
}

LMat3 rotation(RotationAxis axis, double p)
{
    switch (axis) {
    case RotationAxis::SpacelikeY: {
        const double ch = std::cosh(p), sh = std::sinh(p);
        return LMat3({{{ch, 0, sh}, {0, 1, 0}, {sh, 0, ch}}});
    }
    case RotationAxis::LightlikeXZ: {
        const double h = 0.5 * p * p;
        return LMat3({{{1 - h, -p, h}, {p, 1, -p}, {-h, -p, 1 + h}}});
    }
    case RotationAxis::TimelikeZ: {
        const double c = std::cos(p), s = std::sin(p);
        return LMat3({{{c, -s, 0}, {s, c, 0}, {0, 0, 1}}});
    }
    }
    return LMat3::identity();
}

}  // namespace fcat
