#include <doctest.h>

#include "gyrokit/gyro.hpp"

using namespace gyrokit;

TEST_CASE("velocity construction rejects out-of-ball vectors") {
    CHECK_THROWS_AS(Velocity(1.1, 0, 0), OutOfBall);
    CHECK_THROWS_AS(Velocity(0.6, 0.6, 0.6), OutOfBall);
    CHECK_NOTHROW(Velocity(0.6, 0.6, 0.4));
}

TEST_CASE("lorentz_factor fixed values") {
    CHECK(lorentz_factor(Velocity(0, 0, 0)) == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(lorentz_factor(Velocity(0.6, 0, 0)) == doctest::Approx(1.25).epsilon(1e-15));
    CHECK(lorentz_factor(Velocity(0, 0.8, 0)) == doctest::Approx(5.0 / 3.0).epsilon(1e-15));
}

TEST_CASE("einstein_add fixed values") {
    const Velocity u(0.3, 0.4, 0);
    CHECK(norm(einstein_add(u, Velocity(0, 0, 0)).vec() - u.vec()) < 1e-15);

    // collinear case reduces to (a+b)/(1+ab)
    const Vec3 r1 = einstein_add(Velocity(0.5, 0, 0), Velocity(0.5, 0, 0)).vec();
    CHECK(norm(r1 - Vec3{0.8, 0, 0}) < 1e-15);

    // orthogonal case: u + v/gamma_u with gamma_u = 1.25
    const Vec3 r2 = einstein_add(Velocity(0.6, 0, 0), Velocity(0, 0.6, 0)).vec();
    CHECK(norm(r2 - Vec3{0.6, 0.48, 0}) < 1e-15);
}

TEST_CASE("gyro_neg is the inverse element") {
    CHECK(norm(gyro_neg(Velocity(0, 0, 0)).vec()) == 0.0);
    CHECK(norm(gyro_neg(Velocity(0.6, 0, 0)).vec() - Vec3{-0.6, 0, 0}) < 1e-16);
    const Velocity u(0.3, 0.4, 0.5);
    CHECK(norm(einstein_add(u, gyro_neg(u)).vec()) < 1e-14);
}

TEST_CASE("sample_velocity determinism and bounds") {
    Rng a(7), b(7);
    const Vec3 va = sample_velocity(a).vec();
    const Vec3 vb = sample_velocity(b).vec();
    CHECK(va.x == vb.x);
    CHECK(va.y == vb.y);
    CHECK(va.z == vb.z);

    Rng rng(11);
    Vec3 mean{0, 0, 0};
    for (int i = 0; i < 10000; ++i) {
        const Vec3 v = sample_velocity(rng).vec();
        CHECK(norm(v) <= 0.95);
        mean = mean + (1.0 / 10000) * v;
    }
    CHECK(std::abs(mean.x) < 0.02);
    CHECK(std::abs(mean.y) < 0.02);
    CHECK(std::abs(mean.z) < 0.02);
}

TEST_CASE("non-commutativity and non-associativity witnesses") {
    const Velocity u(0.6, 0, 0), v(0, 0.6, 0);
    CHECK(norm(einstein_add(u, v).vec() - einstein_add(v, u).vec()) > 0.01);

    const Velocity w(0.2, 0.5, -0.3);
    const Vec3 lhs = einstein_add(einstein_add(u, v), w).vec();
    const Vec3 rhs = einstein_add(u, einstein_add(v, w)).vec();
    CHECK(norm(lhs - rhs) > 0.01);
}

TEST_CASE("closure over random pairs") {
    Rng rng(13);
    for (int i = 0; i < 10000; ++i) {
        const Velocity u = sample_velocity(rng);
        const Velocity v = sample_velocity(rng);
        CHECK(norm(einstein_add(u, v).vec()) < 1.0);
    }
}
