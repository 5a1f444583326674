#pragma once

#include <array>
#include <cmath>

namespace tsol {

// Vector in E^3_1, the Minkowski 3-space with metric dx^2 + dy^2 - dz^2.
struct MVec3 {
    double x = 0.0;
    double y = 0.0;
    double z = 0.0;

    MVec3 operator+(const MVec3& o) const { return {x + o.x, y + o.y, z + o.z}; }
    MVec3 operator-(const MVec3& o) const { return {x - o.x, y - o.y, z - o.z}; }
    MVec3 operator-() const { return {-x, -y, -z}; }
    MVec3 operator*(double c) const { return {c * x, c * y, c * z}; }
    MVec3& operator+=(const MVec3& o) { x += o.x; y += o.y; z += o.z; return *this; }
};

inline MVec3 operator*(double c, const MVec3& v) { return v * c; }

/// Indefinite scalar product <a,b> = ax*bx + ay*by - az*bz.
inline double mink_dot(const MVec3& a, const MVec3& b) {
    return a.x * b.x + a.y * b.y - a.z * b.z;
}

inline double euclid_norm2(const MVec3& a) { return a.x * a.x + a.y * a.y + a.z * a.z; }
inline double euclid_norm(const MVec3& a) { return std::sqrt(euclid_norm2(a)); }

/// Lorentzian cross product, defined by <a x b, c> = det(a, b, c) for all c.
///
/// Beware: the z component carries the opposite sign relative to the Euclidean
/// cross product, so e1 x e2 = -e3 here. Every normal-vector formula in this
/// library is stated for this convention.
inline MVec3 mink_cross(const MVec3& a, const MVec3& b) {
    return {a.y * b.z - a.z * b.y,
            a.z * b.x - a.x * b.z,
            -(a.x * b.y - a.y * b.x)};
}

/// det(a, b, c) with a, b, c as rows. Equals <mink_cross(a,b), c>.
inline double triple(const MVec3& a, const MVec3& b, const MVec3& c) {
    return mink_dot(mink_cross(a, b), c);
}

bool is_finite(const MVec3& a);

enum class CausalCharacter { Spacelike, Timelike, Lightlike, ZeroVector };

const char* causal_character_name(CausalCharacter c);

/// Sign classification of <a,a>. A vector counts as lightlike when |<a,a>| lies
/// within tol times its squared Euclidean length, so the band scales with the
/// vector; the zero vector is reported separately.
CausalCharacter causal_character(const MVec3& a, double tol = 1e-10);

/// v / sqrt(|<v,v>|). Throws Error(LightlikeNormalization) for lightlike or
/// zero input (the causal_character band decides).
MVec3 normalize(const MVec3& v, double tol = 1e-10);

// Linear isometry of E^3_1 (rows applied to column vectors).
struct LinearMap3 {
    std::array<std::array<double, 3>, 3> m{};

    MVec3 operator()(const MVec3& v) const {
        return {m[0][0] * v.x + m[0][1] * v.y + m[0][2] * v.z,
                m[1][0] * v.x + m[1][1] * v.y + m[1][2] * v.z,
                m[2][0] * v.x + m[2][1] * v.y + m[2][2] * v.z};
    }
};

/// Lorentz boost fixing the x-axis: rows (1,0,0), (0,cosh,sinh), (0,sinh,cosh).
LinearMap3 boost_x(double phi);

/// Euclidean rotation of the (spacelike) xy-plane, fixing e3.
LinearMap3 rot_z(double theta);

} // namespace tsol
