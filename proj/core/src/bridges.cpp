#include "gyrokit/bridges.hpp"

namespace gyrokit {

DensityMat bloch(const Velocity& v) {
    const Vec3& w = v.vec();
    return DensityMat{Mat2C{cplx(0.5 * (1.0 + w.z), 0.0), cplx(0.5 * w.x, -0.5 * w.y),
                            cplx(0.5 * w.x, 0.5 * w.y), cplx(0.5 * (1.0 - w.z), 0.0)}};
}

Velocity bloch_inv(const DensityMat& a) {
    const Mat2C& m = a.mat();
    const Vec3 v{2.0 * m.a21.real(), 2.0 * m.a21.imag(), 2.0 * m.a11.real() - 1.0};
    return Velocity(v);  // throws OutOfBall when ||v|| >= 1
}

UnitDetMat tau(const DensityMat& a) {
    const double sd = std::sqrt(det2(a.mat()).real());
    return UnitDetMat((1.0 / sd) * a.mat());
}

DensityMat tau_inv(const UnitDetMat& a) {
    const double tr = trace2(a.mat()).real();
    return DensityMat((1.0 / tr) * a.mat());
}

TracelessHerm gamma_map(const Vec3& v) {
    return TracelessHerm{Mat2C{cplx(v.z, 0.0), cplx(v.x, -v.y),
                               cplx(v.x, v.y), cplx(-v.z, 0.0)}};
}

Vec3 gamma_inv(const TracelessHerm& h) {
    const Mat2C& m = h.mat();
    return {m.a21.real(), m.a21.imag(), m.a11.real()};
}

OrthogonalMat3 adjoint_rotation(const UnitaryMat2& u) {
    const Mat2C basis[3] = {
        gamma_map({1, 0, 0}).mat(),
        gamma_map({0, 1, 0}).mat(),
        gamma_map({0, 0, 1}).mat(),
    };
    const Mat2C ua = u.mat().adjoint();
    Mat3R r;
    for (int j = 0; j < 3; ++j) {
        const Mat2C img = u.mat() * basis[j] * ua;
        for (int i = 0; i < 3; ++i)
            r.m[i][j] = 0.5 * trace2(basis[i] * img).real();
    }
    return OrthogonalMat3(r);
}

namespace {

struct Quat {
    double w, x, y, z;
};

// Standard 4-branch extraction; stable for all angles including near pi.
Quat quat_from_rotation(const Mat3R& a) {
    const auto& m = a.m;
    const double tr = m[0][0] + m[1][1] + m[2][2];
    Quat q;
    if (tr > 0.0) {
        const double s = 2.0 * std::sqrt(tr + 1.0);
        q.w = 0.25 * s;
        q.x = (m[2][1] - m[1][2]) / s;
        q.y = (m[0][2] - m[2][0]) / s;
        q.z = (m[1][0] - m[0][1]) / s;
    } else if (m[0][0] > m[1][1] && m[0][0] > m[2][2]) {
        const double s = 2.0 * std::sqrt(1.0 + m[0][0] - m[1][1] - m[2][2]);
        q.w = (m[2][1] - m[1][2]) / s;
        q.x = 0.25 * s;
        q.y = (m[0][1] + m[1][0]) / s;
        q.z = (m[0][2] + m[2][0]) / s;
    } else if (m[1][1] > m[2][2]) {
        const double s = 2.0 * std::sqrt(1.0 + m[1][1] - m[0][0] - m[2][2]);
        q.w = (m[0][2] - m[2][0]) / s;
        q.x = (m[0][1] + m[1][0]) / s;
        q.y = 0.25 * s;
        q.z = (m[1][2] + m[2][1]) / s;
    } else {
        const double s = 2.0 * std::sqrt(1.0 + m[2][2] - m[0][0] - m[1][1]);
        q.w = (m[1][0] - m[0][1]) / s;
        q.x = (m[0][2] + m[2][0]) / s;
        q.y = (m[1][2] + m[2][1]) / s;
        q.z = 0.25 * s;
    }
    const double n = std::sqrt(q.w * q.w + q.x * q.x + q.y * q.y + q.z * q.z);
    q.w /= n; q.x /= n; q.y /= n; q.z /= n;
    return q;
}

Mat3R rotation_from_quat(const Quat& q) {
    const double w = q.w, x = q.x, y = q.y, z = q.z;
    Mat3R r;
    r.m[0][0] = 1 - 2 * (y * y + z * z);
    r.m[0][1] = 2 * (x * y - w * z);
    r.m[0][2] = 2 * (x * z + w * y);
    r.m[1][0] = 2 * (x * y + w * z);
    r.m[1][1] = 1 - 2 * (x * x + z * z);
    r.m[1][2] = 2 * (y * z - w * x);
    r.m[2][0] = 2 * (x * z - w * y);
    r.m[2][1] = 2 * (y * z + w * x);
    r.m[2][2] = 1 - 2 * (x * x + y * y);
    return r;
}

// U = w I - i (x sx + y sy + z sz); conjugation by U realizes the quaternion's
// rotation on gamma(R^3).
Mat2C su2_from_quat(const Quat& q) {
    return {cplx(q.w, -q.z), cplx(-q.y, -q.x),
            cplx(q.y, -q.x), cplx(q.w, q.z)};
}

} // namespace

UnitaryMat2 su2_lift(const OrthogonalMat3& r) {
    if (std::abs(r.det() - 1.0) > kOrthoTol)
        throw NotRotation("det != +1");
    Quat q = quat_from_rotation(r.mat());
    if (q.w < 0.0) { q.w = -q.w; q.x = -q.x; q.y = -q.y; q.z = -q.z; }
    Mat2C u = su2_from_quat(q);
    if (std::abs(q.w) <= 1e-14) {
        // trace of U is zero; tie-break on the first nonzero entry
        const cplx* entries[4] = {&u.a11, &u.a12, &u.a21, &u.a22};
        for (const cplx* e : entries) {
            if (std::abs(*e) > 1e-14) {
                if (e->real() < 0.0) u = cplx(-1.0) * u;
                break;
            }
        }
    }
    return UnitaryMat2(u);
}

UnitaryMat2 sample_unitary(Rng& rng) {
    Quat q{rng.normal(), rng.normal(), rng.normal(), rng.normal()};
    const double n = std::sqrt(q.w * q.w + q.x * q.x + q.y * q.y + q.z * q.z);
    q.w /= n; q.x /= n; q.y /= n; q.z /= n;
    const cplx phase = std::polar(1.0, rng.uniform(0.0, 2.0 * M_PI));
    return UnitaryMat2(phase * su2_from_quat(q));
}

OrthogonalMat3 sample_rotation(Rng& rng) {
    Quat q{rng.normal(), rng.normal(), rng.normal(), rng.normal()};
    const double n = std::sqrt(q.w * q.w + q.x * q.x + q.y * q.y + q.z * q.z);
    q.w /= n; q.x /= n; q.y /= n; q.z /= n;
    return OrthogonalMat3(rotation_from_quat(q));
}

OrthogonalMat3 sample_reflection(Rng& rng) {
    Mat3R flip = Mat3R::identity();
    flip.m[2][2] = -1.0;
    return OrthogonalMat3(sample_rotation(rng).mat() * flip);
}

} // namespace gyrokit
