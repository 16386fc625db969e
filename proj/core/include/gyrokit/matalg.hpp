#pragma once

#include "gyrokit/rng.hpp"
#include "gyrokit/smallmat.hpp"

namespace gyrokit {

namespace detail {
// min/max eigenvalue of a Hermitian 2x2, without the full decomposition
inline double min_eig_herm(const Mat2C& m) {
    const double tr = trace2(m).real();
    const double dt = det2(m).real();
    return 0.5 * (tr - std::sqrt(std::max(tr * tr - 4.0 * dt, 0.0)));
}

inline void require_posdef(const Mat2C& m, const char* what) {
    if (herm_defect(m) > kHermTol)
        throw NotHermitian(what);
    if (min_eig_herm(m) <= kPosDefTol)
        throw NotPositiveDefinite(what);
}
} // namespace detail

// Element of P_2: 2x2 positive definite complex matrix.
class PosDefMat {
public:
    PosDefMat() : m_(Mat2C::identity()) {}
    explicit PosDefMat(const Mat2C& m) : m_(m) {
        detail::require_posdef(m_, "PosDefMat");
    }
    const Mat2C& mat() const { return m_; }

private:
    Mat2C m_;
};

// Element of D: positive definite with trace 1 (a regular density matrix).
class DensityMat {
public:
    DensityMat() : m_(Mat2C::diag(0.5, 0.5)) {}
    explicit DensityMat(const Mat2C& m) : m_(m) {
        detail::require_posdef(m_, "DensityMat");
        if (std::abs(trace2(m_) - cplx(1.0)) > kHermTol)
            throw NotPositiveDefinite("DensityMat: trace != 1");
    }
    const Mat2C& mat() const { return m_; }

private:
    Mat2C m_;
};

// Element of P_2^1: positive definite with determinant 1.
class UnitDetMat {
public:
    UnitDetMat() : m_(Mat2C::identity()) {}
    explicit UnitDetMat(const Mat2C& m) : m_(m) {
        detail::require_posdef(m_, "UnitDetMat");
        if (std::abs(det2(m_) - cplx(1.0)) > kHermTol)
            throw NotPositiveDefinite("UnitDetMat: det != 1");
    }
    const Mat2C& mat() const { return m_; }

private:
    Mat2C m_;
};

// Normalized sequential product on D: A^{1/2} B A^{1/2} / Tr(AB).
DensityMat odot(const DensityMat& a, const DensityMat& b);

// Sequential product on P_2^1: A^{1/2} B A^{1/2}.
UnitDetMat boxdot(const UnitDetMat& a, const UnitDetMat& b);

// The Jordan triple product A B A on P_2.
PosDefMat jordan_triple(const PosDefMat& a, const PosDefMat& b);

// Density sample via the Bloch map of a ball sample, so the distribution
// exactly matches the geometry under test.
DensityMat sample_density(Rng& rng);

// V diag(l1, l2) V* with l_i log-uniform in [0.1, 10] and V a random
// unitary built from two angles and a phase.
PosDefMat sample_posdef(Rng& rng);

UnitDetMat sample_unitdet(Rng& rng);

} // namespace gyrokit
