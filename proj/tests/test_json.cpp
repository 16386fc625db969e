#include <doctest.h>

#include "gyrokit/json_io.hpp"
#include "gyrokit/rng.hpp"

using namespace gyrokit;

TEST_CASE("number formatting is lossless for 64-bit floats") {
    Rng rng(41);
    for (int i = 0; i < 1000; ++i) {
        const double x = rng.normal() * std::pow(10.0, rng.uniform(-12, 12));
        CHECK(std::stod(io::fmt_number(x)) == x);
    }
    CHECK(io::fmt_number(0.0) == "0");
    CHECK(io::fmt_number(1.0) == "1");
}

TEST_CASE("vec3 and mat2 round trips") {
    Rng rng(42);
    for (int i = 0; i < 200; ++i) {
        const Vec3 v{rng.normal(), rng.normal(), rng.normal()};
        const Vec3 w = io::decode_vec3(io::encode(v));
        CHECK(w.x == v.x);
        CHECK(w.y == v.y);
        CHECK(w.z == v.z);

        const Mat2C m{cplx(rng.normal(), rng.normal()), cplx(rng.normal(), rng.normal()),
                      cplx(rng.normal(), rng.normal()), cplx(rng.normal(), rng.normal())};
        CHECK(frob(io::decode_mat2(io::encode(m)) - m) == 0.0);
    }
}

TEST_CASE("fixed encodings") {
    CHECK(io::encode(Vec3{0, 0, 0}) == "[0,0,0]");
    CHECK(io::encode(Mat2C::identity()) == "[[[1,0],[0,0]],[[0,0],[1,0]]]");
    CHECK(io::encode(DensityMat{Mat2C::diag(0.5, 0.5)}) ==
          "{\"kind\":\"density\",\"m\":[[[0.5,0],[0,0]],[[0,0],[0.5,0]]]}");
}

TEST_CASE("endo descriptor round trips") {
    Rng rng(43);
    const std::vector<EndoDescriptor> descs = {
        JTE1{sample_unitary(rng), 0.25},
        JTE2{sample_unitary(rng), -0.5},
        JTE3{sample_unitary(rng), 0.1, -0.2},
        P21Conj{sample_unitary(rng)},
        P21InvConj{sample_unitary(rng)},
        P21Const{},
        DConj{sample_unitary(rng)},
        DInvConj{sample_unitary(rng)},
        DConst{},
        BallOrtho{sample_rotation(rng)},
        BallZero{},
    };
    for (const auto& d : descs) {
        const EndoDescriptor back = io::decode_endo(io::encode(d));
        CHECK(back.index() == d.index());
        CHECK(io::encode(back) == io::encode(d));
    }
}

TEST_CASE("classify input dispatch") {
    const auto desc = io::decode_classify_input("{\"form\":\"BallZero\"}");
    CHECK(desc.descriptor.has_value());
    CHECK_FALSE(desc.table.has_value());

    const auto table = io::decode_classify_input(
        "[{\"in\":[0.001,0,0],\"out\":[0,0.001,0]}]");
    CHECK(table.table.has_value());
    CHECK(table.table->size() == 1);

    CHECK_THROWS_AS(io::decode_classify_input("3.5"), ParseError);
    CHECK_THROWS_AS(io::decode_classify_input("{\"form\":\"Nope\"}"), ParseError);
    CHECK_THROWS_AS(io::decode_vec3("[1,2]"), ParseError);
}
