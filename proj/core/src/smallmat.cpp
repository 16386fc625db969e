#include "gyrokit/smallmat.hpp"

#include <algorithm>

namespace gyrokit {

Mat2C inv2(const Mat2C& m) {
    const cplx d = det2(m);
    if (std::abs(d) <= kSingularTol)
        throw SingularMatrix("|det| = " + std::to_string(std::abs(d)));
    const cplx s = 1.0 / d;
    return {s * m.a22, -s * m.a12, -s * m.a21, s * m.a11};
}

Mat2C mul3_accurate(const Mat2C& a, const Mat2C& b, const Mat2C& c) {
    using lcplx = std::complex<long double>;
    const auto lift = [](const Mat2C& m) {
        return std::array<lcplx, 4>{lcplx(m.a11), lcplx(m.a12), lcplx(m.a21), lcplx(m.a22)};
    };
    const auto la = lift(a), lb = lift(b), lc = lift(c);
    std::array<lcplx, 4> ab{}, r{};
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            for (int k = 0; k < 2; ++k)
                ab[2 * i + j] += la[2 * i + k] * lb[2 * k + j];
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            for (int k = 0; k < 2; ++k)
                r[2 * i + j] += ab[2 * i + k] * lc[2 * k + j];
    const auto drop = [](const lcplx& z) {
        return cplx(static_cast<double>(z.real()), static_cast<double>(z.imag()));
    };
    return {drop(r[0]), drop(r[1]), drop(r[2]), drop(r[3])};
}

Mat2C sqrt_posdef(const Mat2C& a) {
    if (herm_defect(a) > kHermTol) throw NotPositiveDefinite("not Hermitian");
    const double tr = trace2(a).real();
    const double dt = det2(a).real();
    // min eigenvalue of a Hermitian 2x2 is (tr - sqrt(tr^2 - 4 det)) / 2
    const double disc = std::max(tr * tr - 4.0 * dt, 0.0);
    const double lmin = 0.5 * (tr - std::sqrt(disc));
    if (lmin <= kPosDefTol) throw NotPositiveDefinite("min eigenvalue " + std::to_string(lmin));
    const double s = std::sqrt(dt);
    const double t = std::sqrt(tr + 2.0 * s);
    return (1.0 / t) * (a + Mat2C::diag(s, s));
}

EigHerm2 eig_herm2(const Mat2C& h) {
    if (herm_defect(h) > kHermTol) throw NotHermitian();
    const double a = h.a11.real();
    const double c = h.a22.real();
    const cplx b = h.a12;  // h.a21 == conj(b) up to tolerance
    const double mean = 0.5 * (a + c);
    const double r = std::hypot(0.5 * (a - c), std::abs(b));

    EigHerm2 out;
    out.lambda1 = mean + r;
    out.lambda2 = mean - r;

    cplx v1a, v1b;
    if (std::abs(b) <= 1e-300) {
        // already diagonal; order eigenvectors to match descending eigenvalues
        if (a >= c) { v1a = 1; v1b = 0; }
        else        { v1a = 0; v1b = 1; }
    } else {
        v1a = b;
        v1b = cplx(out.lambda1 - a, 0);
        const double n = std::sqrt(std::norm(v1a) + std::norm(v1b));
        v1a /= n;
        v1b /= n;
    }
    // orthogonal partner
    cplx v2a = -std::conj(v1b);
    cplx v2b = std::conj(v1a);

    // phase fix: first nonzero component real positive
    auto fix = [](cplx& p, cplx& q) {
        cplx lead = (std::abs(p) > 1e-14) ? p : q;
        cplx phase = std::conj(lead) / std::abs(lead);
        p *= phase;
        q *= phase;
    };
    fix(v1a, v1b);
    fix(v2a, v2b);

    out.vectors = {v1a, v2a, v1b, v2b};
    return out;
}

double det3(const Mat3R& a) {
    const auto& m = a.m;
    return m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1])
         - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0])
         + m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
}

Mat3R inv3(const Mat3R& a) {
    const double d = det3(a);
    if (std::abs(d) <= kSingularTol) throw SingularMatrix("3x3 |det| too small");
    const auto& m = a.m;
    Mat3R r;
    r.m[0][0] = (m[1][1] * m[2][2] - m[1][2] * m[2][1]) / d;
    r.m[0][1] = (m[0][2] * m[2][1] - m[0][1] * m[2][2]) / d;
    r.m[0][2] = (m[0][1] * m[1][2] - m[0][2] * m[1][1]) / d;
    r.m[1][0] = (m[1][2] * m[2][0] - m[1][0] * m[2][2]) / d;
    r.m[1][1] = (m[0][0] * m[2][2] - m[0][2] * m[2][0]) / d;
    r.m[1][2] = (m[0][2] * m[1][0] - m[0][0] * m[1][2]) / d;
    r.m[2][0] = (m[1][0] * m[2][1] - m[1][1] * m[2][0]) / d;
    r.m[2][1] = (m[0][1] * m[2][0] - m[0][0] * m[2][1]) / d;
    r.m[2][2] = (m[0][0] * m[1][1] - m[0][1] * m[1][0]) / d;
    return r;
}

} // namespace gyrokit
