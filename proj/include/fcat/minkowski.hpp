#pragma once

// Linear algebra of Lorentz-Minkowski space R^3_1 with metric dx^2 + dy^2 - dz^2.

#include <array>
#include <string_view>

namespace fcat {

struct LVec3 {
    double x = 0.0;
    double y = 0.0;
    double z = 0.0;

    constexpr LVec3 operator+(const LVec3& o) const { return {x + o.x, y + o.y, z + o.z}; }
    constexpr LVec3 operator-(const LVec3& o) const { return {x - o.x, y - o.y, z - o.z}; }
    constexpr LVec3 operator-() const { return {-x, -y, -z}; }
    constexpr LVec3 operator*(double s) const { return {x * s, y * s, z * s}; }
    constexpr LVec3 operator/(double s) const { return {x / s, y / s, z / s}; }
    constexpr bool operator==(const LVec3&) const = default;

    bool is_finite() const;
};

constexpr LVec3 operator*(double s, const LVec3& a) { return a * s; }

enum class CausalType { Spacelike, Lightlike, Timelike };

std::string_view to_string(CausalType t);

/// Relative width of the lightlike band: |<a,a>| <= kCausalTolerance * |a|_E^2.
inline constexpr double kCausalTolerance = 1e-10;

double lorentz_dot(const LVec3& a, const LVec3& b);
double euclid_dot(const LVec3& a, const LVec3& b);
double euclid_norm(const LVec3& a);

/// sqrt(|<a,a>|); zero for lightlike and zero vectors.
double lorentz_norm(const LVec3& a);

/// Throws DomainError for the zero vector or non-finite components.
CausalType causal_type(const LVec3& a);

/// Lorentzian vector product: <c, a^b> = det(c, a, b) for every c.
LVec3 wedge(const LVec3& a, const LVec3& b);

/// Ordinary determinant of the 3x3 matrix with rows a, b, c.
double det3(const LVec3& a, const LVec3& b, const LVec3& c);

/// 3x3 matrix acting on column vectors.
class LMat3 {
public:
    constexpr LMat3() = default;
    constexpr explicit LMat3(const std::array<std::array<double, 3>, 3>& rows) : m_(rows) {}

    static constexpr LMat3 identity() { return LMat3({{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}}); }

    constexpr double operator()(int row, int col) const { return m_[row][col]; }

    LVec3 operator*(const LVec3& x) const;
    LMat3 operator*(const LMat3& other) const;
    double det() const;

private:
    std::array<std::array<double, 3>, 3> m_{};
};

/// The three one-parameter rotation families used for surfaces of revolution.
enum class RotationAxis {
    SpacelikeY,   ///< hyperbolic rotation about the y-axis, parameter = rapidity
    LightlikeXZ,  ///< parabolic rotation about the line x = z, y = 0
    TimelikeZ,    ///< Euclidean rotation about the z-axis, parameter = angle
};

LMat3 rotation(RotationAxis axis, double param);

}  // namespace fcat
