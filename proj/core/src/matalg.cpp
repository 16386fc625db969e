#include "gyrokit/matalg.hpp"

#include "gyrokit/bridges.hpp"
#include "gyrokit/gyro.hpp"

namespace gyrokit {

DensityMat odot(const DensityMat& a, const DensityMat& b) {
    const Mat2C s = sqrt_posdef(a.mat());
    const Mat2C num = s * b.mat() * s;
    const double tr_ab = trace2(a.mat() * b.mat()).real();
    return DensityMat(hermitize((1.0 / tr_ab) * num));
}

UnitDetMat boxdot(const UnitDetMat& a, const UnitDetMat& b) {
    const Mat2C s = sqrt_posdef(a.mat());
    return UnitDetMat(hermitize(s * b.mat() * s));
}

PosDefMat jordan_triple(const PosDefMat& a, const PosDefMat& b) {
    return PosDefMat(hermitize(mul3_accurate(a.mat(), b.mat(), a.mat())));
}

DensityMat sample_density(Rng& rng) {
    return bloch(sample_velocity(rng));
}

PosDefMat sample_posdef(Rng& rng) {
    const double lg = std::log(10.0 / 0.1);
    const double l1 = 0.1 * std::exp(lg * rng.uniform());
    const double l2 = 0.1 * std::exp(lg * rng.uniform());
    const double theta = rng.uniform(0.0, 2.0 * M_PI);
    const double phi = rng.uniform(0.0, 2.0 * M_PI);
    const double psi = rng.uniform(0.0, 2.0 * M_PI);
    const cplx ephi = std::polar(1.0, phi);
    const cplx epsi = std::polar(1.0, psi);
    const double c = std::cos(theta), s = std::sin(theta);
    const Mat2C v{c * ephi, s * epsi, -s * std::conj(epsi), c * std::conj(ephi)};
    const Mat2C d = Mat2C::diag(l1, l2);
    return PosDefMat(hermitize(v * d * v.adjoint()));
}

UnitDetMat sample_unitdet(Rng& rng) {
    // tau of a density sample; keeps entry magnitudes small enough that
    // sequential products hold the det = 1 invariant at 1e-12
    return tau(sample_density(rng));
}

} // namespace gyrokit
