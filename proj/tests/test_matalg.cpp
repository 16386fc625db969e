#include <doctest.h>

#include "gyrokit/matalg.hpp"

using namespace gyrokit;

namespace {
const Mat2C half_identity = Mat2C::diag(0.5, 0.5);
}

TEST_CASE("domain type invariants") {
    CHECK_THROWS_AS(DensityMat(Mat2C::diag(0.6, 0.6)), NotPositiveDefinite);  // trace 1.2
    CHECK_THROWS_AS(DensityMat(Mat2C::diag(1.5, -0.5)), NotPositiveDefinite);
    CHECK_THROWS_AS(UnitDetMat(Mat2C::diag(2.0, 2.0)), NotPositiveDefinite);  // det 4
    CHECK_THROWS_AS(PosDefMat(Mat2C{1, 1, 0, 1}), NotHermitian);
    CHECK_NOTHROW(UnitDetMat(Mat2C::diag(2.0, 0.5)));
}

TEST_CASE("odot fixed values") {
    const DensityMat max_mixed{half_identity};
    CHECK(frob(odot(max_mixed, max_mixed).mat() - half_identity) < 1e-15);

    const DensityMat a{Mat2C::diag(0.75, 0.25)};
    CHECK(frob(odot(a, max_mixed).mat() - a.mat()) < 1e-15);

    const DensityMat b{Mat2C::diag(0.25, 0.75)};
    CHECK(frob(odot(a, b).mat() - half_identity) < 1e-15);
}

TEST_CASE("boxdot fixed values") {
    const UnitDetMat b{Mat2C::diag(2.0, 0.5)};
    CHECK(frob(boxdot(UnitDetMat{Mat2C::identity()}, b).mat() - b.mat()) < 1e-15);
    CHECK(frob(boxdot(b, b).mat() - Mat2C::diag(4.0, 0.25)) < 1e-14);

    const double s3 = std::sqrt(3.0);
    const UnitDetMat c{(1.0 / s3) * Mat2C{2, 1, 1, 2}};
    CHECK(frob(boxdot(c, UnitDetMat{Mat2C::identity()}).mat() - c.mat()) < 1e-14);
}

TEST_CASE("jordan_triple fixed values") {
    const PosDefMat b{Mat2C::diag(3.0, 1.0)};
    CHECK(frob(jordan_triple(PosDefMat{Mat2C::identity()}, b).mat() - b.mat()) < 1e-15);
    CHECK(frob(jordan_triple(PosDefMat{Mat2C::diag(2.0, 1.0)}, PosDefMat{Mat2C::diag(1.0, 5.0)}).mat() -
               Mat2C::diag(4.0, 5.0)) < 1e-14);
    CHECK(frob(jordan_triple(PosDefMat{Mat2C{2, 1, 1, 2}}, PosDefMat{Mat2C::identity()}).mat() -
               Mat2C{5, 4, 4, 5}) < 1e-14);
}

TEST_CASE("sampler determinism") {
    Rng a(5), b(5);
    CHECK(frob(sample_density(a).mat() - sample_density(b).mat()) == 0.0);
    Rng c(5), d(5);
    CHECK(frob(sample_posdef(c).mat() - sample_posdef(d).mat()) == 0.0);
}

TEST_CASE("density samples stay in D") {
    Rng rng(6);
    for (int i = 0; i < 10000; ++i) {
        const Mat2C m = sample_density(rng).mat();
        CHECK(std::abs(trace2(m).real() - 1.0) < 1e-14);
        const double lmin = detail::min_eig_herm(m);
        CHECK(lmin > 0.0);
        CHECK(lmin < 1.0);
    }
}

TEST_CASE("posdef samples respect the eigenvalue floor") {
    Rng rng(7);
    for (int i = 0; i < 10000; ++i)
        CHECK(detail::min_eig_herm(sample_posdef(rng).mat()) >= 0.1 * (1.0 - 1e-12));
}

TEST_CASE("odot and boxdot closure over random pairs") {
    Rng rng(8);
    for (int i = 0; i < 10000; ++i) {
        const DensityMat a = sample_density(rng);
        const DensityMat b = sample_density(rng);
        const Mat2C p = odot(a, b).mat();
        CHECK(herm_defect(p) < 1e-12);
        CHECK(std::abs(trace2(p).real() - 1.0) < 1e-12);
        CHECK(detail::min_eig_herm(p) > 0.0);

        const UnitDetMat x = sample_unitdet(rng);
        const UnitDetMat y = sample_unitdet(rng);
        CHECK(std::abs(det2(boxdot(x, y).mat()).real() - 1.0) < 1e-12);
    }
}

TEST_CASE("odot non-commutativity witness") {
    Rng rng(9);
    double best = 0;
    for (int i = 0; i < 100; ++i) {
        const DensityMat a = sample_density(rng);
        const DensityMat b = sample_density(rng);
        best = std::max(best, frob(odot(a, b).mat() - odot(b, a).mat()));
    }
    CHECK(best > 0.01);
}
