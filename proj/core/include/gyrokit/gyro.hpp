#pragma once

#include "gyrokit/rng.hpp"
#include "gyrokit/smallmat.hpp"

namespace gyrokit {

// Element of the open unit ball B of R^3. Construction rejects vectors with
// ||v|| >= 1 - 1e-15 rather than clamping; silent clamping would mask
// closure violations the verification suite must detect.
class Velocity {
public:
    Velocity() = default;
    explicit Velocity(const Vec3& v) : v_(v) {
        if (!(norm(v) < 1.0 - 1e-15))
            throw OutOfBall("||v|| = " + std::to_string(norm(v)));
    }
    Velocity(double x, double y, double z) : Velocity(Vec3{x, y, z}) {}

    const Vec3& vec() const { return v_; }

private:
    Vec3 v_{};
};

// gamma_u = (1 - ||u||^2)^{-1/2}
double lorentz_factor(const Velocity& u);

// Einstein velocity addition on B.
Velocity einstein_add(const Velocity& u, const Velocity& v);

inline Velocity gyro_neg(const Velocity& u) { return Velocity(-u.vec()); }

// Uniform-in-volume sample with ||v|| <= 0.95. The radius stays away from
// the boundary: the Lorentz factor diverges there and homomorphism residuals
// would lose precision.
Velocity sample_velocity(Rng& rng);

} // namespace gyrokit
