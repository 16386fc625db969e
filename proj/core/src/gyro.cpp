#include "gyrokit/gyro.hpp"

namespace gyrokit {

double lorentz_factor(const Velocity& u) {
    return 1.0 / std::sqrt(1.0 - dot(u.vec(), u.vec()));
}

Velocity einstein_add(const Velocity& u, const Velocity& v) {
    const Vec3& uv = u.vec();
    const Vec3& vv = v.vec();
    const double ip = dot(uv, vv);
    const double gu = lorentz_factor(u);
    const Vec3 sum = uv + (1.0 / gu) * vv + (gu / (1.0 + gu)) * ip * uv;
    return Velocity((1.0 / (1.0 + ip)) * sum);
}

Velocity sample_velocity(Rng& rng) {
    // direction uniform on the sphere, radius 0.95 * t^{1/3}
    const double z = rng.uniform(-1.0, 1.0);
    const double phi = rng.uniform(0.0, 2.0 * M_PI);
    const double s = std::sqrt(std::max(1.0 - z * z, 0.0));
    const double r = 0.95 * std::cbrt(rng.uniform());
    return Velocity(r * Vec3{s * std::cos(phi), s * std::sin(phi), z});
}

} // namespace gyrokit
