#pragma once

#include "gyrokit/gyro.hpp"
#include "gyrokit/matalg.hpp"
#include "gyrokit/smallmat.hpp"

namespace gyrokit {

// Traceless self-adjoint 2x2 complex matrix (the space H_2^0, carrying the
// inner product <A,B> = 1/2 Tr AB).
class TracelessHerm {
public:
    TracelessHerm() : m_(Mat2C::zero()) {}
    explicit TracelessHerm(const Mat2C& m) : m_(m) {
        if (herm_defect(m_) > kHermTol) throw NotHermitian("TracelessHerm");
        if (std::abs(trace2(m_)) > kHermTol) throw NotTraceless();
    }
    const Mat2C& mat() const { return m_; }

private:
    Mat2C m_;
};

class UnitaryMat2 {
public:
    UnitaryMat2() : m_(Mat2C::identity()) {}
    explicit UnitaryMat2(const Mat2C& m) : m_(m) {
        if (frob(m_ * m_.adjoint() - Mat2C::identity()) > kHermTol)
            throw NotUnitary();
    }
    const Mat2C& mat() const { return m_; }

private:
    Mat2C m_;
};

class OrthogonalMat3 {
public:
    OrthogonalMat3() : m_(Mat3R::identity()) {}
    explicit OrthogonalMat3(const Mat3R& m) : m_(m) {
        if (frob(m_.transpose() * m_ - Mat3R::identity()) > kOrthoTol)
            throw NotRotation("not orthogonal");
        const double d = det3(m_);
        if (std::abs(std::abs(d) - 1.0) > kOrthoTol)
            throw NotRotation("det not +-1");
    }
    const Mat3R& mat() const { return m_; }
    double det() const { return det3(m_); }

private:
    Mat3R m_;
};

// Bloch parametrization: v -> 1/2 [[1+v3, v1-i v2], [v1+i v2, 1-v3]].
DensityMat bloch(const Velocity& v);

// Inverse of the Bloch map; throws OutOfBall if the recovered vector has
// norm >= 1 (the input was not strictly positive definite).
Velocity bloch_inv(const DensityMat& a);

// tau(A) = A / sqrt(Det A), the isomorphism (D, odot) -> (P_2^1, boxdot).
UnitDetMat tau(const DensityMat& a);

// tau^{-1}(A) = A / Tr A.
DensityMat tau_inv(const UnitDetMat& a);

// gamma(v) = [[v3, v1-i v2], [v1+i v2, -v3]], defined on all of R^3.
TracelessHerm gamma_map(const Vec3& v);

Vec3 gamma_inv(const TracelessHerm& h);

// The rotation induced on R^3 by unitary conjugation on H_2^0:
// R_ij = 1/2 Tr(gamma(e_i) U gamma(e_j) U*), so U gamma(v) U* = gamma(R v).
OrthogonalMat3 adjoint_rotation(const UnitaryMat2& u);

// Right inverse of adjoint_rotation on SO(3). Representative with
// Re(Tr U) >= 0; ties broken by the first nonzero entry in reading order
// having nonnegative real part.
UnitaryMat2 su2_lift(const OrthogonalMat3& r);

// Samplers used by endomorphism parameterizations and the test harness.
UnitaryMat2 sample_unitary(Rng& rng);
OrthogonalMat3 sample_rotation(Rng& rng);
OrthogonalMat3 sample_reflection(Rng& rng);

} // namespace gyrokit
