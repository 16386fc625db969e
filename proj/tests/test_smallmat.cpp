#include <doctest.h>

#include "gyrokit/rng.hpp"
#include "gyrokit/smallmat.hpp"

using namespace gyrokit;

namespace {

Mat2C random_mat(Rng& rng) {
    auto c = [&] { return cplx(rng.normal(), rng.normal()); };
    return {c(), c(), c(), c()};
}

Mat2C random_herm(Rng& rng) {
    return hermitize(random_mat(rng));
}

Mat2C random_posdef(Rng& rng) {
    const Mat2C m = random_mat(rng);
    // M M* + 0.1 I
    return hermitize(m * m.adjoint() + Mat2C::diag(0.1, 0.1));
}

} // namespace

TEST_CASE("det2 on fixed matrices") {
    CHECK(det2(Mat2C::identity()) == cplx(1.0));
    CHECK(det2(Mat2C::diag(2.0, 0.5)) == cplx(1.0));
    // Bloch matrix of (0,0,0.5): det = (1 - ||v||^2)/4
    CHECK(det2(Mat2C::diag(0.75, 0.25)).real() == doctest::Approx(0.1875).epsilon(1e-15));
}

TEST_CASE("trace2 on fixed matrices") {
    CHECK(trace2(Mat2C::identity()) == cplx(2.0));
    CHECK(trace2(Mat2C::diag(0.75, 0.25)) == cplx(1.0));
}

TEST_CASE("inv2 fixed values") {
    CHECK(frob(inv2(Mat2C::identity()) - Mat2C::identity()) < 1e-15);
    CHECK(frob(inv2(Mat2C::diag(2.0, 4.0)) - Mat2C::diag(0.5, 0.25)) < 1e-15);
    const Mat2C m{2, 1, 1, 2};
    const Mat2C expect{2.0 / 3, -1.0 / 3, -1.0 / 3, 2.0 / 3};
    CHECK(frob(inv2(m) - expect) < 1e-15);
}

TEST_CASE("inv2 rejects singular input") {
    CHECK_THROWS_AS(inv2(Mat2C{1, 1, 1, 1}), SingularMatrix);
}

TEST_CASE("sqrt_posdef fixed values") {
    CHECK(frob(sqrt_posdef(Mat2C::identity()) - Mat2C::identity()) < 1e-15);
    CHECK(frob(sqrt_posdef(Mat2C::diag(4.0, 9.0)) - Mat2C::diag(2.0, 3.0)) < 1e-14);
    const double s3 = std::sqrt(3.0);
    const Mat2C expect{(s3 + 1) / 2, (s3 - 1) / 2, (s3 - 1) / 2, (s3 + 1) / 2};
    CHECK(frob(sqrt_posdef(Mat2C{2, 1, 1, 2}) - expect) < 1e-14);
}

TEST_CASE("sqrt_posdef rejects indefinite and non-Hermitian input") {
    CHECK_THROWS_AS(sqrt_posdef(Mat2C::diag(1.0, -1.0)), NotPositiveDefinite);
    CHECK_THROWS_AS(sqrt_posdef(Mat2C{1, 1, 0, 1}), NotPositiveDefinite);
}

TEST_CASE("eig_herm2 fixed values") {
    const auto e1 = eig_herm2(Mat2C::diag(1.0, 2.0));
    CHECK(e1.lambda1 == doctest::Approx(2.0));
    CHECK(e1.lambda2 == doctest::Approx(1.0));

    const auto e2 = eig_herm2(Mat2C{0, 1, 1, 0});  // char poly: l^2 - 1
    CHECK(e2.lambda1 == doctest::Approx(1.0));
    CHECK(e2.lambda2 == doctest::Approx(-1.0));

    const auto e3 = eig_herm2(Mat2C{2, 1, 1, 2});  // l^2 - 4l + 3
    CHECK(e3.lambda1 == doctest::Approx(3.0));
    CHECK(e3.lambda2 == doctest::Approx(1.0));

    CHECK_THROWS_AS(eig_herm2(Mat2C{0, 1, 2, 0}), NotHermitian);
}

TEST_CASE("eig_herm2 reconstruction over random Hermitian matrices") {
    Rng rng(1);
    for (int i = 0; i < 10000; ++i) {
        const Mat2C h = random_herm(rng);
        const auto e = eig_herm2(h);
        const Mat2C recon =
            e.vectors * Mat2C::diag(e.lambda1, e.lambda2) * e.vectors.adjoint();
        CHECK(frob(recon - h) < 1e-12 * (1.0 + frob(h)));
        CHECK(frob(e.vectors * e.vectors.adjoint() - Mat2C::identity()) < 1e-13);
    }
}

TEST_CASE("sqrt_posdef square and Hermiticity over random positive definite matrices") {
    Rng rng(2);
    for (int i = 0; i < 10000; ++i) {
        const Mat2C a = random_posdef(rng);
        const Mat2C s = sqrt_posdef(a);
        CHECK(frob(s * s - a) < 1e-12 * (1.0 + frob(a)));
        CHECK(herm_defect(s) < 1e-13);
    }
}

TEST_CASE("inv2 inverse property and det multiplicativity") {
    Rng rng(3);
    for (int i = 0; i < 10000; ++i) {
        const Mat2C m = random_mat(rng);
        const Mat2C n = random_mat(rng);
        if (std::abs(det2(m)) > 1e-6)
            CHECK(frob(inv2(m) * m - Mat2C::identity()) < 1e-12 * (1.0 + frob(m)));
        const cplx lhs = det2(m * n);
        const cplx rhs = det2(m) * det2(n);
        CHECK(std::abs(lhs - rhs) < 1e-12 * (1.0 + std::abs(rhs)));
    }
}

TEST_CASE("inv3 and det3") {
    Rng rng(4);
    for (int i = 0; i < 1000; ++i) {
        Mat3R m;
        for (int r = 0; r < 3; ++r)
            for (int c = 0; c < 3; ++c) m.m[r][c] = rng.normal();
        if (std::abs(det3(m)) < 1e-3) continue;
        CHECK(frob(inv3(m) * m - Mat3R::identity()) < 1e-10 * (1.0 + frob(m)));
    }
}
