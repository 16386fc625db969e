#pragma once

#include <string>
#include <vector>

#include "gyrokit/bridges.hpp"
#include "gyrokit/endo.hpp"
#include "gyrokit/matalg.hpp"
#include "gyrokit/smallmat.hpp"

namespace gyrokit::io {

// Shared wire encoding. Vec3 -> [x,y,z]; Complex -> [re,im];
// Mat2C -> [[[re,im],[re,im]],[[re,im],[re,im]]]; Mat3R -> 3x3 real arrays.
// Numbers are emitted with 17 significant digits so round-trips are lossless
// for 64-bit floats.

std::string fmt_number(double x);

std::string encode(const Vec3& v);
std::string encode(const cplx& z);
std::string encode(const Mat2C& m);
std::string encode(const Mat3R& m);

// kind-tagged structures: {"kind":"density","m":<Mat2C>} etc.
std::string encode(const DensityMat& a);
std::string encode(const UnitDetMat& a);
std::string encode(const PosDefMat& a);
std::string encode(const UnitaryMat2& u);
std::string encode(const OrthogonalMat3& o);

// {"form":"JTE1","U":<Mat2C>,"c":<real>} and analogous per family.
std::string encode(const EndoDescriptor& d);
std::string encode(const HomReport& r);
std::string encode(const BallClassification& c);

Vec3 decode_vec3(const std::string& text);
Mat2C decode_mat2(const std::string& text);
Mat3R decode_mat3(const std::string& text);
EndoDescriptor decode_endo(const std::string& text);

// Either an EndoDescriptor document or a probe table
// [{"in":[..],"out":[..]}, ...]. Exactly one of the results is set.
struct ClassifyInput {
    std::optional<EndoDescriptor> descriptor;
    std::optional<std::vector<ProbePair>> table;
};
ClassifyInput decode_classify_input(const std::string& text);

} // namespace gyrokit::io
