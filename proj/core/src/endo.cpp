#include "gyrokit/endo.hpp"

#include <cmath>

namespace gyrokit {

namespace {

double real_det(const Mat2C& m) { return det2(m).real(); }

Mat2C conj_by(const Mat2C& u, const Mat2C& a) { return u * a * u.adjoint(); }

} // namespace

PosDefMat apply_endo(const EndoDescriptor& d, const PosDefMat& a) {
    const Mat2C& m = a.mat();
    if (const auto* f = std::get_if<JTE1>(&d)) {
        const double s = std::pow(real_det(m), f->c);
        return PosDefMat(hermitize(s * conj_by(f->U.mat(), m)));
    }
    if (const auto* f = std::get_if<JTE2>(&d)) {
        const double s = std::pow(real_det(m), f->d);
        return PosDefMat(hermitize(s * conj_by(f->V.mat(), inv2(m))));
    }
    if (const auto* f = std::get_if<JTE3>(&d)) {
        const double dt = real_det(m);
        const Mat2C diag = Mat2C::diag(std::pow(dt, f->c1), std::pow(dt, f->c2));
        return PosDefMat(hermitize(conj_by(f->W.mat(), diag)));
    }
    throw StructureMismatch("descriptor does not act on P_2");
}

UnitDetMat apply_endo(const EndoDescriptor& d, const UnitDetMat& a) {
    const Mat2C& m = a.mat();
    if (const auto* f = std::get_if<P21Conj>(&d))
        return UnitDetMat(hermitize(conj_by(f->U.mat(), m)));
    if (const auto* f = std::get_if<P21InvConj>(&d))
        return UnitDetMat(hermitize(conj_by(f->V.mat(), inv2(m))));
    if (std::holds_alternative<P21Const>(d))
        return UnitDetMat(Mat2C::identity());
    throw StructureMismatch("descriptor does not act on P_2^1");
}

DensityMat apply_endo(const EndoDescriptor& d, const DensityMat& a) {
    const Mat2C& m = a.mat();
    if (const auto* f = std::get_if<DConj>(&d))
        return DensityMat(hermitize(conj_by(f->U.mat(), m)));
    if (const auto* f = std::get_if<DInvConj>(&d)) {
        const Mat2C mi = inv2(m);
        const double tr = trace2(mi).real();
        return DensityMat(hermitize((1.0 / tr) * conj_by(f->V.mat(), mi)));
    }
    if (std::holds_alternative<DConst>(d))
        return DensityMat(Mat2C::diag(0.5, 0.5));
    throw StructureMismatch("descriptor does not act on D");
}

Velocity apply_endo(const EndoDescriptor& d, const Velocity& v) {
    if (const auto* f = std::get_if<BallOrtho>(&d))
        return Velocity(f->O.mat() * v.vec());
    if (std::holds_alternative<BallZero>(d))
        return Velocity(Vec3{0, 0, 0});
    throw StructureMismatch("descriptor does not act on B");
}

std::function<PosDefMat(const PosDefMat&)> psi_extend(const EndoDescriptor& d) {
    if (!std::holds_alternative<P21Conj>(d) && !std::holds_alternative<P21InvConj>(d) &&
        !std::holds_alternative<P21Const>(d))
        throw StructureMismatch("psi_extend needs a P_2^1 descriptor");
    return [d](const PosDefMat& a) {
        const double sd = std::sqrt(real_det(a.mat()));
        // det of the normalized matrix is 1 only up to rounding when a is
        // ill conditioned, so apply the form directly instead of routing
        // through the checked UnitDetMat constructor
        const Mat2C n = (1.0 / sd) * a.mat();
        Mat2C img;
        if (const auto* f = std::get_if<P21Conj>(&d)) img = conj_by(f->U.mat(), n);
        else if (const auto* f = std::get_if<P21InvConj>(&d)) img = conj_by(f->V.mat(), inv2(n));
        else img = Mat2C::identity();
        return PosDefMat(hermitize(sd * img));
    };
}

namespace {

template <typename Sampler, typename Residual>
HomReport hom_residual_impl(Sampler sample, Residual res, long n, double tol, Rng& rng) {
    HomReport rep;
    rep.samples = n;
    rep.tolerance = tol;
    double sum = 0;
    for (long i = 0; i < n; ++i) {
        const auto x = sample(rng);
        const auto y = sample(rng);
        const double r = res(x, y);
        rep.max_residual = std::max(rep.max_residual, r);
        sum += r;
    }
    rep.mean_residual = (n > 0) ? sum / static_cast<double>(n) : 0.0;
    rep.pass = rep.max_residual < tol;
    return rep;
}

} // namespace

HomReport hom_residual_ball(const BallMap& f, const BallMap& g, long n, double tol, Rng& rng) {
    auto res = [&](const Velocity& x, const Velocity& y) {
        const Vec3 lhs = f(einstein_add(x, y).vec());
        const Vec3 rhs = einstein_add(Velocity(g(x.vec())), Velocity(g(y.vec()))).vec();
        return norm(lhs - rhs);
    };
    return hom_residual_impl([](Rng& r) { return sample_velocity(r); }, res, n, tol, rng);
}

HomReport hom_residual_density(const DensityMap& f, const DensityMap& g, long n, double tol, Rng& rng) {
    auto res = [&](const DensityMat& x, const DensityMat& y) {
        const Mat2C lhs = f(odot(x, y)).mat();
        const Mat2C rhs = odot(g(x), g(y)).mat();
        return frob(lhs - rhs);
    };
    return hom_residual_impl([](Rng& r) { return sample_density(r); }, res, n, tol, rng);
}

HomReport hom_residual_unitdet(const UnitDetMap& f, const UnitDetMap& g, long n, double tol, Rng& rng) {
    auto res = [&](const UnitDetMat& x, const UnitDetMat& y) {
        const Mat2C lhs = f(boxdot(x, y)).mat();
        const Mat2C rhs = boxdot(g(x), g(y)).mat();
        return frob(lhs - rhs);
    };
    return hom_residual_impl([](Rng& r) { return sample_unitdet(r); }, res, n, tol, rng);
}

HomReport hom_residual_triple(const PosDefMap& f, const PosDefMap& g, long n, double tol, Rng& rng) {
    // ||A B A|| is unbounded on P_2, so the triple-law residual is measured
    // relative to the natural scale of the identity, ||g(x)||^2 ||g(y)||,
    // which also bounds the rounding floor of forming the right-hand side
    auto res = [&](const PosDefMat& x, const PosDefMat& y) {
        const Mat2C lhs = f(jordan_triple(x, y)).mat();
        const Mat2C gx = g(x).mat();
        const Mat2C gy = g(y).mat();
        const Mat2C rhs = mul3_accurate(gx, gy, gx);
        const double scale = frob(gx) * frob(gx) * frob(gy);
        return frob(lhs - rhs) / (1.0 + std::max(frob(lhs), scale));
    };
    return hom_residual_impl([](Rng& r) { return sample_posdef(r); }, res, n, tol, rng);
}

namespace {

constexpr double kProbeEps = 1e-3;
constexpr double kZeroThreshold = 1e-8;
constexpr int kProbeCount = 64;

Vec3 axis(int i) {
    Vec3 e{0, 0, 0};
    (i == 0 ? e.x : i == 1 ? e.y : e.z) = 1.0;
    return e;
}

// Nearest orthogonal matrix by Newton averaging X <- (X + X^{-T}) / 2.
Mat3R polar_correct(Mat3R x) {
    try {
        for (int it = 0; it < 20; ++it)
            x = 0.5 * (x + inv3(x).transpose());
    } catch (const SingularMatrix&) {
        // degenerate columns; the residual check below rejects the map
    }
    return x;
}

BallClassification classify_from_probes(const std::vector<ProbePair>& probes,
                                        const Mat3R& raw_columns, double tol) {
    double sup = 0;
    for (const auto& p : probes) sup = std::max(sup, norm(p.out));
    BallClassification out;
    if (sup < kZeroThreshold) {
        out.verdict = BallClassification::Verdict::Zero;
        out.residual = sup;
        return out;
    }
    const Mat3R ortho = polar_correct(raw_columns);
    double r = 0;
    for (const auto& p : probes) r = std::max(r, norm(p.out - ortho * p.in));
    out.residual = r;
    if (r < tol) {
        out.verdict = BallClassification::Verdict::Orthogonal;
        out.O = OrthogonalMat3(ortho);
    } else {
        out.verdict = BallClassification::Verdict::Unclassified;
    }
    return out;
}

} // namespace

BallClassification classify_ball_endo(const BallMap& f, double tol, Rng& rng) {
    std::vector<ProbePair> probes;
    probes.reserve(kProbeCount);
    auto eval = [&](const Vec3& in) {
        const Vec3 out = f(in);
        if (!(norm(out) < 1.0))
            throw ProbeOutOfBall("black box returned a point outside B");
        probes.push_back({in, out});
        return out;
    };

    Mat3R columns;
    for (int i = 0; i < 3; ++i) {
        const Vec3 col = (1.0 / kProbeEps) * eval(kProbeEps * axis(i));
        eval(-kProbeEps * axis(i));
        columns.m[0][i] = col.x;
        columns.m[1][i] = col.y;
        columns.m[2][i] = col.z;
    }
    while (static_cast<int>(probes.size()) < kProbeCount)
        eval(sample_velocity(rng).vec());

    return classify_from_probes(probes, columns, tol);
}

BallClassification classify_probe_table(const std::vector<ProbePair>& table, double tol) {
    if (table.size() < kProbeCount)
        throw ParseError("probe table needs at least 64 entries");
    for (const auto& p : table) {
        if (!(norm(p.in) < 1.0) || !(norm(p.out) < 1.0))
            throw ProbeOutOfBall("probe table contains points outside B");
    }
    Mat3R columns;
    for (int i = 0; i < 3; ++i) {
        for (int sign : {+1, -1}) {
            const Vec3 want = (sign * kProbeEps) * axis(i);
            const ProbePair* found = nullptr;
            for (const auto& p : table)
                if (norm(p.in - want) < 1e-12) { found = &p; break; }
            if (!found)
                throw ParseError("probe table is missing the +-eps*e_i probes");
            if (sign > 0) {
                const Vec3 col = (1.0 / kProbeEps) * found->out;
                columns.m[0][i] = col.x;
                columns.m[1][i] = col.y;
                columns.m[2][i] = col.z;
            }
        }
    }
    return classify_from_probes(table, columns, tol);
}

DensityClassification classify_density_endo(const DensityMap& a, double tol, Rng& rng) {
    const BallMap ball_map = [&](const Vec3& v) {
        return bloch_inv(a(bloch(Velocity(v)))).vec();
    };
    DensityClassification out;
    out.ball = classify_ball_endo(ball_map, tol, rng);

    EndoDescriptor candidate = DConst{};
    if (out.ball.verdict == BallClassification::Verdict::Orthogonal) {
        const OrthogonalMat3& o = *out.ball.O;
        if (o.det() > 0) {
            candidate = DConj{su2_lift(o)};
        } else {
            // inversion composes with conjugation: the ball map of
            // A -> V A^{-1} V* / Tr A^{-1} is v -> -O_V v, so O_V = -Ohat
            candidate = DInvConj{su2_lift(OrthogonalMat3(-o.mat()))};
        }
    } else if (out.ball.verdict == BallClassification::Verdict::Unclassified) {
        out.residual = out.ball.residual;
        return out;
    }

    double r = 0;
    for (int i = 0; i < 128; ++i) {
        const DensityMat probe = sample_density(rng);
        r = std::max(r, frob(a(probe).mat() - apply_endo(candidate, probe).mat()));
    }
    out.residual = r;
    if (r < tol) out.descriptor = candidate;
    return out;
}

} // namespace gyrokit
