#pragma once

#include <array>
#include <cmath>
#include <complex>
#include <initializer_list>
#include <utility>

#include "gyrokit/errors.hpp"

namespace gyrokit {

using cplx = std::complex<double>;

// Tolerances shared by all structural invariant checks. Inputs are
// normalized structures with ||.||_F = O(1), so absolute tolerances suffice.
inline constexpr double kHermTol = 1e-12;
inline constexpr double kPosDefTol = 1e-12;
inline constexpr double kSingularTol = 1e-12;
inline constexpr double kOrthoTol = 1e-10;

struct Vec3 {
    double x = 0, y = 0, z = 0;

    friend Vec3 operator+(const Vec3& a, const Vec3& b) { return {a.x + b.x, a.y + b.y, a.z + b.z}; }
    friend Vec3 operator-(const Vec3& a, const Vec3& b) { return {a.x - b.x, a.y - b.y, a.z - b.z}; }
    friend Vec3 operator*(double s, const Vec3& v) { return {s * v.x, s * v.y, s * v.z}; }
    Vec3 operator-() const { return {-x, -y, -z}; }
};

inline double dot(const Vec3& a, const Vec3& b) { return a.x * b.x + a.y * b.y + a.z * b.z; }
inline double norm(const Vec3& v) { return std::sqrt(dot(v, v)); }

// 2x2 complex matrix, row major.
struct Mat2C {
    cplx a11, a12, a21, a22;

    static Mat2C identity() { return {1, 0, 0, 1}; }
    static Mat2C zero() { return {0, 0, 0, 0}; }
    static Mat2C diag(cplx d1, cplx d2) { return {d1, 0, 0, d2}; }

    Mat2C adjoint() const {
        return {std::conj(a11), std::conj(a21), std::conj(a12), std::conj(a22)};
    }

    friend Mat2C operator+(const Mat2C& a, const Mat2C& b) {
        return {a.a11 + b.a11, a.a12 + b.a12, a.a21 + b.a21, a.a22 + b.a22};
    }
    friend Mat2C operator-(const Mat2C& a, const Mat2C& b) {
        return {a.a11 - b.a11, a.a12 - b.a12, a.a21 - b.a21, a.a22 - b.a22};
    }
    friend Mat2C operator*(const Mat2C& a, const Mat2C& b) {
        return {a.a11 * b.a11 + a.a12 * b.a21, a.a11 * b.a12 + a.a12 * b.a22,
                a.a21 * b.a11 + a.a22 * b.a21, a.a21 * b.a12 + a.a22 * b.a22};
    }
    friend Mat2C operator*(cplx s, const Mat2C& a) {
        return {s * a.a11, s * a.a12, s * a.a21, s * a.a22};
    }
};

namespace detail {

// Compensated sum of products: each a*b is split exactly with fma and the
// heads and errors are Neumaier-summed, so cancellation between the four
// determinant terms does not destroy relative accuracy.
inline double prod_sum(std::initializer_list<std::pair<double, double>> terms) {
    double s = 0, comp = 0;
    auto add = [&](double x) {
        const double t = s + x;
        comp += (std::abs(s) >= std::abs(x)) ? (s - t) + x : (x - t) + s;
        s = t;
    };
    for (const auto& [a, b] : terms) {
        const double p = a * b;
        add(p);
        add(std::fma(a, b, -p));
    }
    return s + comp;
}

} // namespace detail

inline cplx det2(const Mat2C& m) {
    const double r11 = m.a11.real(), i11 = m.a11.imag();
    const double r12 = m.a12.real(), i12 = m.a12.imag();
    const double r21 = m.a21.real(), i21 = m.a21.imag();
    const double r22 = m.a22.real(), i22 = m.a22.imag();
    const double re = detail::prod_sum({{r11, r22}, {-i11, i22}, {-r12, r21}, {i12, i21}});
    const double im = detail::prod_sum({{r11, i22}, {i11, r22}, {-r12, i21}, {-i12, r21}});
    return {re, im};
}
inline cplx trace2(const Mat2C& m) { return m.a11 + m.a22; }

inline double frob(const Mat2C& m) {
    return std::sqrt(std::norm(m.a11) + std::norm(m.a12) + std::norm(m.a21) + std::norm(m.a22));
}

inline double herm_defect(const Mat2C& m) { return frob(m - m.adjoint()); }

// Average with the conjugate transpose. Used after products to suppress
// 1e-16-level drift before invariant checks.
inline Mat2C hermitize(const Mat2C& m) { return 0.5 * (m + m.adjoint()); }

Mat2C inv2(const Mat2C& m);

// a * b * c accumulated in extended precision; the triple products feeding
// ill-conditioned inversions would otherwise lose digits to rounding
Mat2C mul3_accurate(const Mat2C& a, const Mat2C& b, const Mat2C& c);

// Principal square root of a positive definite matrix, closed form
// S = (A + sqrt(det) I) / sqrt(trace + 2 sqrt(det)).
Mat2C sqrt_posdef(const Mat2C& a);

struct EigHerm2 {
    double lambda1 = 0;  // larger eigenvalue
    double lambda2 = 0;
    Mat2C vectors;       // unitary, columns are eigenvectors in the same order
};

// Eigendecomposition of a Hermitian 2x2 matrix. Eigenvalues descending;
// eigenvector phase fixed by making the first nonzero component real positive.
EigHerm2 eig_herm2(const Mat2C& h);

// 3x3 real matrix, row major.
struct Mat3R {
    std::array<std::array<double, 3>, 3> m{};

    static Mat3R identity() {
        Mat3R r;
        r.m[0][0] = r.m[1][1] = r.m[2][2] = 1.0;
        return r;
    }

    Mat3R transpose() const {
        Mat3R r;
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) r.m[i][j] = m[j][i];
        return r;
    }

    friend Mat3R operator+(const Mat3R& a, const Mat3R& b) {
        Mat3R r;
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) r.m[i][j] = a.m[i][j] + b.m[i][j];
        return r;
    }
    friend Mat3R operator-(const Mat3R& a, const Mat3R& b) {
        Mat3R r;
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) r.m[i][j] = a.m[i][j] - b.m[i][j];
        return r;
    }
    friend Mat3R operator*(double s, const Mat3R& a) {
        Mat3R r;
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) r.m[i][j] = s * a.m[i][j];
        return r;
    }
    friend Mat3R operator*(const Mat3R& a, const Mat3R& b) {
        Mat3R r;
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) {
                double s = 0;
                for (int k = 0; k < 3; ++k) s += a.m[i][k] * b.m[k][j];
                r.m[i][j] = s;
            }
        return r;
    }
    friend Vec3 operator*(const Mat3R& a, const Vec3& v) {
        return {a.m[0][0] * v.x + a.m[0][1] * v.y + a.m[0][2] * v.z,
                a.m[1][0] * v.x + a.m[1][1] * v.y + a.m[1][2] * v.z,
                a.m[2][0] * v.x + a.m[2][1] * v.y + a.m[2][2] * v.z};
    }
    Mat3R operator-() const { return -1.0 * *this; }
};

double det3(const Mat3R& a);
Mat3R inv3(const Mat3R& a);

inline double frob(const Mat3R& a) {
    double s = 0;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) s += a.m[i][j] * a.m[i][j];
    return std::sqrt(s);
}

// Largest absolute entry.
inline double max_abs(const Mat3R& a) {
    double s = 0;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) s = std::max(s, std::abs(a.m[i][j]));
    return s;
}

} // namespace gyrokit
