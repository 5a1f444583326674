#include <doctest.h>

#include "tsol/errors.hpp"
#include "tsol/minkowski.hpp"

#include <cmath>
#include <random>

using namespace tsol;

namespace {
std::mt19937 rng(20240517);
MVec3 rand_vec(double lo = -2.0, double hi = 2.0) {
    std::uniform_real_distribution<double> d(lo, hi);
    return {d(rng), d(rng), d(rng)};
}
} // namespace

TEST_CASE("indefinite scalar product has signature (+,+,-)") {
    CHECK(mink_dot({1, 0, 0}, {1, 0, 0}) == 1.0);
    CHECK(mink_dot({0, 1, 0}, {0, 1, 0}) == 1.0);
    CHECK(mink_dot({0, 0, 1}, {0, 0, 1}) == -1.0);
    CHECK(mink_dot({1, 2, 3}, {4, 5, 6}) == doctest::Approx(4 + 10 - 18));
}

TEST_CASE("cross product satisfies its defining determinant identity") {
    // the z sign flips relative to the Euclidean cross product
    MVec3 c = mink_cross({1, 0, 0}, {0, 1, 0});
    CHECK(c.x == 0.0);
    CHECK(c.y == 0.0);
    CHECK(c.z == -1.0);

    MVec3 d = mink_cross({1, 2, 2}, {0, 1, 1});
    CHECK(d.x == doctest::Approx(0.0));
    CHECK(d.y == doctest::Approx(-1.0));
    CHECK(d.z == doctest::Approx(-1.0));

    for (int i = 0; i < 50; ++i) {
        MVec3 a = rand_vec(), b = rand_vec(), v = rand_vec();
        double det = a.x * (b.y * v.z - b.z * v.y) - a.y * (b.x * v.z - b.z * v.x) +
                     a.z * (b.x * v.y - b.y * v.x);
        CHECK(triple(a, b, v) == doctest::Approx(det).epsilon(1e-12));
        CHECK(mink_dot(mink_cross(a, b), a) == doctest::Approx(0.0).epsilon(1e-12));
        CHECK(mink_dot(mink_cross(a, b), b) == doctest::Approx(0.0).epsilon(1e-12));
    }
}

TEST_CASE("Lagrange identity: <a x b, a x b> = <a,b>^2 - <a,a><b,b>") {
    for (int i = 0; i < 100; ++i) {
        MVec3 a = rand_vec(), b = rand_vec();
        MVec3 c = mink_cross(a, b);
        double lhs = mink_dot(c, c);
        double rhs = mink_dot(a, b) * mink_dot(a, b) - mink_dot(a, a) * mink_dot(b, b);
        CHECK(lhs == doctest::Approx(rhs).epsilon(1e-12));
    }
}

TEST_CASE("causal character classification") {
    CHECK(causal_character({1, 0, 0}) == CausalCharacter::Spacelike);
    CHECK(causal_character({0, 0, 1}) == CausalCharacter::Timelike);
    CHECK(causal_character({1, 0, 1}) == CausalCharacter::Lightlike);
    CHECK(causal_character({3, 4, 5}) == CausalCharacter::Lightlike);
    CHECK(causal_character({0, 0, 0}) == CausalCharacter::ZeroVector);
    // the lightlike band is relative to the Euclidean size
    CHECK(causal_character({1e8, 0, 1e8 + 1e-4}) == CausalCharacter::Lightlike);
    CHECK(causal_character_name(CausalCharacter::Timelike) == std::string("timelike"));
}

TEST_CASE("normalize rejects lightlike vectors and fixes the square to +-1") {
    MVec3 a = normalize({3, 0, 1});
    CHECK(mink_dot(a, a) == doctest::Approx(1.0));
    MVec3 b = normalize({0, 1, 4});
    CHECK(mink_dot(b, b) == doctest::Approx(-1.0));
    CHECK_THROWS_AS((void)normalize({1, 0, 1}), Error);
    CHECK_THROWS_AS((void)normalize({0, 0, 0}), Error);
    try {
        (void)normalize({1, 0, 1});
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::LightlikeNormalization);
    }
}

TEST_CASE("boosts and rotations are isometries") {
    LinearMap3 b = boost_x(0.7);
    LinearMap3 r = rot_z(1.3);
    for (int i = 0; i < 50; ++i) {
        MVec3 u = rand_vec(), v = rand_vec();
        CHECK(mink_dot(b(u), b(v)) == doctest::Approx(mink_dot(u, v)).epsilon(1e-12));
        CHECK(mink_dot(r(u), r(v)) == doctest::Approx(mink_dot(u, v)).epsilon(1e-12));
    }
    // boost mixes y,z hyperbolically and fixes x
    MVec3 e3 = b({0, 0, 1});
    CHECK(e3.x == 0.0);
    CHECK(e3.y == doctest::Approx(std::sinh(0.7)));
    CHECK(e3.z == doctest::Approx(std::cosh(0.7)));
    CHECK(b({1, 0, 0}).x == doctest::Approx(1.0));
}
