#include "gyrokit/json_io.hpp"

#include <cstdio>

#include <json.hpp>

namespace gyrokit::io {

using nlohmann::json;

std::string fmt_number(double x) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", x);
    return buf;
}

std::string encode(const Vec3& v) {
    return "[" + fmt_number(v.x) + "," + fmt_number(v.y) + "," + fmt_number(v.z) + "]";
}

std::string encode(const cplx& z) {
    return "[" + fmt_number(z.real()) + "," + fmt_number(z.imag()) + "]";
}

std::string encode(const Mat2C& m) {
    return "[[" + encode(m.a11) + "," + encode(m.a12) + "],[" +
           encode(m.a21) + "," + encode(m.a22) + "]]";
}

std::string encode(const Mat3R& m) {
    std::string out = "[";
    for (int i = 0; i < 3; ++i) {
        out += (i ? ",[" : "[");
        for (int j = 0; j < 3; ++j)
            out += (j ? "," : "") + fmt_number(m.m[i][j]);
        out += "]";
    }
    return out + "]";
}

namespace {
std::string kind_tagged(const char* kind, const std::string& body) {
    return std::string("{\"kind\":\"") + kind + "\",\"m\":" + body + "}";
}
} // namespace

std::string encode(const DensityMat& a) { return kind_tagged("density", encode(a.mat())); }
std::string encode(const UnitDetMat& a) { return kind_tagged("unitdet", encode(a.mat())); }
std::string encode(const PosDefMat& a) { return kind_tagged("posdef", encode(a.mat())); }
std::string encode(const UnitaryMat2& u) { return kind_tagged("unitary", encode(u.mat())); }
std::string encode(const OrthogonalMat3& o) { return kind_tagged("orthogonal", encode(o.mat())); }

std::string encode(const EndoDescriptor& d) {
    struct V {
        std::string operator()(const JTE1& f) const {
            return "{\"form\":\"JTE1\",\"U\":" + encode(f.U.mat()) + ",\"c\":" + fmt_number(f.c) + "}";
        }
        std::string operator()(const JTE2& f) const {
            return "{\"form\":\"JTE2\",\"V\":" + encode(f.V.mat()) + ",\"d\":" + fmt_number(f.d) + "}";
        }
        std::string operator()(const JTE3& f) const {
            return "{\"form\":\"JTE3\",\"W\":" + encode(f.W.mat()) + ",\"c1\":" + fmt_number(f.c1) +
                   ",\"c2\":" + fmt_number(f.c2) + "}";
        }
        std::string operator()(const P21Conj& f) const {
            return "{\"form\":\"P21Conj\",\"U\":" + encode(f.U.mat()) + "}";
        }
        std::string operator()(const P21InvConj& f) const {
            return "{\"form\":\"P21InvConj\",\"V\":" + encode(f.V.mat()) + "}";
        }
        std::string operator()(const P21Const&) const { return "{\"form\":\"P21Const\"}"; }
        std::string operator()(const DConj& f) const {
            return "{\"form\":\"DConj\",\"U\":" + encode(f.U.mat()) + "}";
        }
        std::string operator()(const DInvConj& f) const {
            return "{\"form\":\"DInvConj\",\"V\":" + encode(f.V.mat()) + "}";
        }
        std::string operator()(const DConst&) const { return "{\"form\":\"DConst\"}"; }
        std::string operator()(const BallOrtho& f) const {
            return "{\"form\":\"BallOrtho\",\"O\":" + encode(f.O.mat()) + "}";
        }
        std::string operator()(const BallZero&) const { return "{\"form\":\"BallZero\"}"; }
    };
    return std::visit(V{}, d);
}

std::string encode(const HomReport& r) {
    return "{\"samples\":" + std::to_string(r.samples) +
           ",\"max_residual\":" + fmt_number(r.max_residual) +
           ",\"mean_residual\":" + fmt_number(r.mean_residual) +
           ",\"pass\":" + (r.pass ? "true" : "false") +
           ",\"tolerance\":" + fmt_number(r.tolerance) + "}";
}

std::string encode(const BallClassification& c) {
    switch (c.verdict) {
        case BallClassification::Verdict::Zero:
            return "{\"verdict\":\"zero\"}";
        case BallClassification::Verdict::Orthogonal:
            return "{\"verdict\":\"orthogonal\",\"O\":" + encode(c.O->mat()) +
                   ",\"fit_residual\":" + fmt_number(c.residual) + "}";
        default:
            return "{\"verdict\":\"unclassified\",\"max_residual\":" + fmt_number(c.residual) + "}";
    }
}

namespace {

json parse(const std::string& text) {
    json j = json::parse(text, nullptr, false);
    if (j.is_discarded()) throw ParseError("invalid JSON");
    return j;
}

double as_number(const json& j) {
    if (!j.is_number()) throw ParseError("expected a number");
    return j.get<double>();
}

Vec3 vec3_of(const json& j) {
    if (!j.is_array() || j.size() != 3) throw ParseError("Vec3 must be [x,y,z]");
    return {as_number(j[0]), as_number(j[1]), as_number(j[2])};
}

cplx cplx_of(const json& j) {
    if (!j.is_array() || j.size() != 2) throw ParseError("Complex must be [re,im]");
    return {as_number(j[0]), as_number(j[1])};
}

Mat2C mat2_of(const json& j) {
    if (!j.is_array() || j.size() != 2 || !j[0].is_array() || j[0].size() != 2 ||
        !j[1].is_array() || j[1].size() != 2)
        throw ParseError("Mat2C must be a 2x2 array of [re,im] pairs");
    return {cplx_of(j[0][0]), cplx_of(j[0][1]), cplx_of(j[1][0]), cplx_of(j[1][1])};
}

Mat3R mat3_of(const json& j) {
    if (!j.is_array() || j.size() != 3) throw ParseError("Mat3R must be 3x3");
    Mat3R m;
    for (int i = 0; i < 3; ++i) {
        if (!j[i].is_array() || j[i].size() != 3) throw ParseError("Mat3R must be 3x3");
        for (int k = 0; k < 3; ++k) m.m[i][k] = as_number(j[i][k]);
    }
    return m;
}

const json& field(const json& j, const char* name) {
    auto it = j.find(name);
    if (it == j.end()) throw ParseError(std::string("missing field \"") + name + "\"");
    return *it;
}

EndoDescriptor endo_of(const json& j) {
    const std::string form = field(j, "form").get<std::string>();
    auto unitary = [&](const char* key) { return UnitaryMat2(mat2_of(field(j, key))); };
    if (form == "JTE1") return JTE1{unitary("U"), as_number(field(j, "c"))};
    if (form == "JTE2") return JTE2{unitary("V"), as_number(field(j, "d"))};
    if (form == "JTE3")
        return JTE3{unitary("W"), as_number(field(j, "c1")), as_number(field(j, "c2"))};
    if (form == "P21Conj") return P21Conj{unitary("U")};
    if (form == "P21InvConj") return P21InvConj{unitary("V")};
    if (form == "P21Const") return P21Const{};
    if (form == "DConj") return DConj{unitary("U")};
    if (form == "DInvConj") return DInvConj{unitary("V")};
    if (form == "DConst") return DConst{};
    if (form == "BallOrtho") return BallOrtho{OrthogonalMat3(mat3_of(field(j, "O")))};
    if (form == "BallZero") return BallZero{};
    throw ParseError("unknown endomorphism form \"" + form + "\"");
}

} // namespace

Vec3 decode_vec3(const std::string& text) { return vec3_of(parse(text)); }
Mat2C decode_mat2(const std::string& text) { return mat2_of(parse(text)); }
Mat3R decode_mat3(const std::string& text) { return mat3_of(parse(text)); }
EndoDescriptor decode_endo(const std::string& text) { return endo_of(parse(text)); }

ClassifyInput decode_classify_input(const std::string& text) {
    const json j = parse(text);
    ClassifyInput out;
    if (j.is_object()) {
        out.descriptor = endo_of(j);
        return out;
    }
    if (j.is_array()) {
        std::vector<ProbePair> table;
        table.reserve(j.size());
        for (const auto& row : j) {
            if (!row.is_object()) throw ParseError("probe rows must be objects");
            table.push_back({vec3_of(field(row, "in")), vec3_of(field(row, "out"))});
        }
        out.table = std::move(table);
        return out;
    }
    throw ParseError("classify input must be a descriptor object or a probe table array");
}

} // namespace gyrokit::io
