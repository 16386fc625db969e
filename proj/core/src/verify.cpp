#include "gyrokit/verify.hpp"

#include <algorithm>
#include <cmath>
#include <functional>

#include "gyrokit/bridges.hpp"
#include "gyrokit/endo.hpp"
#include "gyrokit/gyro.hpp"
#include "gyrokit/json_io.hpp"
#include "gyrokit/matalg.hpp"

namespace gyrokit {

namespace {

constexpr double kWitnessDefect = 0.01;

InvariantResult upper(const std::string& name, double residual, double tol) {
    return {name, residual, tol, residual < tol, false};
}

InvariantResult lower(const std::string& name, double residual, double tol) {
    return {name, residual, tol, residual > tol, true};
}

double closure_defect(const Mat2C& m, double target_trace, bool check_trace) {
    double r = herm_defect(m);
    if (check_trace) r = std::max(r, std::abs(trace2(m).real() - target_trace));
    const double lmin = detail::min_eig_herm(m);
    if (lmin <= 0) r = std::max(r, 1.0);
    return r;
}

// f(v) = 0.5 * S v with a small shear; linear but neither orthogonal nor an
// endomorphism of (B, +). Negative control for the suites.
Vec3 scaled_shear(const Vec3& v) {
    return 0.5 * Vec3{v.x + 0.1 * v.y, v.y, v.z};
}

std::vector<InvariantResult> suite_gyro(const SuiteConfig& cfg) {
    Rng rng(cfg.seed);
    const long n = cfg.samples;
    double closure = 0, identity = 0, inverse = 0, noncomm = 0, nonassoc = 0;
    const Velocity zero(0, 0, 0);
    for (long i = 0; i < n; ++i) {
        const Velocity u = sample_velocity(rng);
        const Velocity v = sample_velocity(rng);
        const Velocity w = sample_velocity(rng);
        closure = std::max(closure, norm(einstein_add(u, v).vec()));
        identity = std::max({identity,
                             norm(einstein_add(zero, v).vec() - v.vec()),
                             norm(einstein_add(u, zero).vec() - u.vec())});
        inverse = std::max(inverse, norm(einstein_add(u, gyro_neg(u)).vec()));
        noncomm = std::max(noncomm, norm(einstein_add(u, v).vec() - einstein_add(v, u).vec()));
        nonassoc = std::max(nonassoc,
                            norm(einstein_add(einstein_add(u, v), w).vec() -
                                 einstein_add(u, einstein_add(v, w)).vec()));
    }
    return {
        upper("closure_norm_lt_1", closure, 1.0),
        upper("two_sided_identity", identity, 1e-15),
        upper("inverse", inverse, 1e-14),
        lower("noncommutativity_witness", noncomm, kWitnessDefect),
        lower("nonassociativity_witness", nonassoc, kWitnessDefect),
    };
}

std::vector<InvariantResult> suite_kim(const SuiteConfig& cfg) {
    Rng rng(cfg.seed);
    const long n = cfg.samples;
    double kim = 0, closure = 0;
    for (long i = 0; i < n; ++i) {
        const Velocity u = sample_velocity(rng);
        const Velocity v = sample_velocity(rng);
        const DensityMat prod = odot(bloch(u), bloch(v));
        kim = std::max(kim, frob(bloch(einstein_add(u, v)).mat() - prod.mat()));
        closure = std::max(closure, closure_defect(prod.mat(), 1.0, true));
    }
    return {
        upper("kim_isomorphism", kim, 1e-12),
        upper("odot_closure", closure, 1e-12),
    };
}

std::vector<InvariantResult> suite_tau(const SuiteConfig& cfg) {
    Rng rng(cfg.seed);
    const long n = cfg.samples;
    double intertwine = 0, roundtrip = 0, det_closure = 0, noncomm = 0;
    for (long i = 0; i < n; ++i) {
        const DensityMat a = sample_density(rng);
        const DensityMat b = sample_density(rng);
        const UnitDetMat boxed = boxdot(tau(a), tau(b));
        intertwine = std::max(intertwine, frob(tau(odot(a, b)).mat() - boxed.mat()));
        det_closure = std::max(det_closure, std::abs(det2(boxed.mat()).real() - 1.0));
        const UnitDetMat u = sample_unitdet(rng);
        roundtrip = std::max({roundtrip,
                              frob(tau_inv(tau(a)).mat() - a.mat()),
                              frob(tau(tau_inv(u)).mat() - u.mat())});
        noncomm = std::max(noncomm, frob(odot(a, b).mat() - odot(b, a).mat()));
    }
    return {
        upper("tau_intertwining", intertwine, 1e-12),
        upper("tau_roundtrip", roundtrip, 1e-13),
        upper("boxdot_closure", det_closure, 1e-12),
        lower("odot_noncommutativity_witness", noncomm, kWitnessDefect),
    };
}

constexpr int kParamCount = 100;
constexpr double kExpRange = 0.5;  // |c|, |d|, |c_i| <= 0.5 keeps magnitudes tame

long pair_count(const SuiteConfig& cfg) { return std::max(1L, cfg.samples / 10); }

PosDefMap triple_map(const EndoDescriptor& d) {
    return [d](const PosDefMat& a) { return apply_endo(d, a); };
}
UnitDetMap unitdet_map(const EndoDescriptor& d) {
    return [d](const UnitDetMat& a) { return apply_endo(d, a); };
}
DensityMap density_map(const EndoDescriptor& d) {
    return [d](const DensityMat& a) { return apply_endo(d, a); };
}
BallMap ball_map(const EndoDescriptor& d) {
    return [d](const Vec3& v) { return apply_endo(d, Velocity(v)).vec(); };
}

std::vector<InvariantResult> suite_jte(const SuiteConfig& cfg) {
    Rng rng(cfg.seed);
    const long np = pair_count(cfg);
    double r1 = 0, r2 = 0, r3 = 0, psi_agree = 0, psi_triple = 0;
    for (int p = 0; p < kParamCount; ++p) {
        const EndoDescriptor f1 = JTE1{sample_unitary(rng), rng.uniform(-kExpRange, kExpRange)};
        const EndoDescriptor f2 = JTE2{sample_unitary(rng), rng.uniform(-kExpRange, kExpRange)};
        const EndoDescriptor f3 = JTE3{sample_unitary(rng), rng.uniform(-kExpRange, kExpRange),
                                       rng.uniform(-kExpRange, kExpRange)};
        r1 = std::max(r1, hom_residual_triple(triple_map(f1), np, cfg.hom_tol, rng).max_residual);
        r2 = std::max(r2, hom_residual_triple(triple_map(f2), np, cfg.hom_tol, rng).max_residual);
        r3 = std::max(r3, hom_residual_triple(triple_map(f3), np, cfg.hom_tol, rng).max_residual);
    }
    for (int p = 0; p < kParamCount; ++p) {
        EndoDescriptor src;
        switch (p % 3) {
            case 0: src = P21Conj{sample_unitary(rng)}; break;
            case 1: src = P21InvConj{sample_unitary(rng)}; break;
            default: src = P21Const{}; break;
        }
        const auto psi = psi_extend(src);
        for (long i = 0; i < std::max(1L, np / 10); ++i) {
            const UnitDetMat a = sample_unitdet(rng);
            psi_agree = std::max(psi_agree,
                                 frob(psi(PosDefMat(a.mat())).mat() - apply_endo(src, a).mat()));
        }
        psi_triple = std::max(psi_triple,
                              hom_residual_triple(psi, std::max(1L, np / 10), cfg.hom_tol, rng)
                                  .max_residual);
    }
    return {
        upper("jte_form1_triple_law", r1, cfg.hom_tol),
        upper("jte_form2_triple_law", r2, cfg.hom_tol),
        upper("jte_form3_triple_law", r3, cfg.hom_tol),
        upper("psi_agrees_on_unit_det", psi_agree, 1e-13),
        upper("psi_triple_law", psi_triple, cfg.hom_tol),
    };
}

std::vector<InvariantResult> suite_corollaries(const SuiteConfig& cfg) {
    Rng rng(cfg.seed);
    const long np = pair_count(cfg);
    double p21c = 0, p21i = 0, p21k = 0, dc = 0, di = 0, dk = 0;
    for (int p = 0; p < kParamCount; ++p) {
        const UnitaryMat2 u = sample_unitary(rng);
        const UnitaryMat2 v = sample_unitary(rng);
        p21c = std::max(p21c, hom_residual_unitdet(unitdet_map(P21Conj{u}), np, cfg.hom_tol, rng).max_residual);
        p21i = std::max(p21i, hom_residual_unitdet(unitdet_map(P21InvConj{v}), np, cfg.hom_tol, rng).max_residual);
        dc = std::max(dc, hom_residual_density(density_map(DConj{u}), np, cfg.hom_tol, rng).max_residual);
        di = std::max(di, hom_residual_density(density_map(DInvConj{v}), np, cfg.hom_tol, rng).max_residual);
    }
    p21k = hom_residual_unitdet(unitdet_map(P21Const{}), np, cfg.hom_tol, rng).max_residual;
    dk = hom_residual_density(density_map(DConst{}), np, cfg.hom_tol, rng).max_residual;
    return {
        upper("p21_conjugation_hom", p21c, cfg.hom_tol),
        upper("p21_inverse_conjugation_hom", p21i, cfg.hom_tol),
        upper("p21_constant_hom", p21k, cfg.hom_tol),
        upper("density_conjugation_hom", dc, cfg.hom_tol),
        upper("density_inverse_conjugation_hom", di, cfg.hom_tol),
        upper("density_constant_hom", dk, cfg.hom_tol),
    };
}

std::vector<InvariantResult> suite_main(const SuiteConfig& cfg) {
    Rng rng(cfg.seed);
    const long n = cfg.samples;
    const long np = pair_count(cfg);

    double ortho_hom = 0;
    for (int p = 0; p < kParamCount; ++p) {
        const OrthogonalMat3 o = (p % 2) ? sample_reflection(rng) : sample_rotation(rng);
        ortho_hom = std::max(ortho_hom,
                             hom_residual_ball(ball_map(BallOrtho{o}), np, cfg.hom_tol, rng).max_residual);
    }
    const double zero_hom =
        hom_residual_ball(ball_map(BallZero{}), np, cfg.hom_tol, rng).max_residual;

    const double shear_hom = hom_residual_ball(scaled_shear, n, 1e-3, rng).max_residual;
    const BallClassification shear_cls = classify_ball_endo(scaled_shear, 1e-9, rng);
    const double shear_unclassified =
        (shear_cls.verdict == BallClassification::Verdict::Unclassified) ? shear_cls.residual : 0.0;

    double recover = 0;
    for (int p = 0; p < 200; ++p) {
        const OrthogonalMat3 o = (p < 100) ? sample_rotation(rng) : sample_reflection(rng);
        const BallClassification c = classify_ball_endo(ball_map(BallOrtho{o}), 1e-9, rng);
        if (c.verdict != BallClassification::Verdict::Orthogonal) { recover = 1.0; break; }
        recover = std::max(recover, max_abs(c.O->mat() - o.mat()));
    }

    const BallClassification zc = classify_ball_endo(ball_map(BallZero{}), 1e-9, rng);
    const double zero_verdict = (zc.verdict == BallClassification::Verdict::Zero) ? 0.0 : 1.0;

    double dichotomy = 0;
    for (int p = 0; p < 200; ++p) {
        const UnitaryMat2 u = sample_unitary(rng);
        const bool conj = p < 100;
        const EndoDescriptor d = conj ? EndoDescriptor(DConj{u}) : EndoDescriptor(DInvConj{u});
        const DensityClassification c = classify_density_endo(density_map(d), 1e-9, rng);
        const double want_det = conj ? 1.0 : -1.0;
        if (c.ball.verdict != BallClassification::Verdict::Orthogonal || !c.descriptor) {
            dichotomy = 1.0;
            break;
        }
        dichotomy = std::max({dichotomy, std::abs(c.ball.O->det() - want_det), c.residual});
    }

    double compose = 0;
    for (int p = 0; p < 20; ++p) {
        const OrthogonalMat3 o1 = sample_rotation(rng);
        const OrthogonalMat3 o2 = sample_reflection(rng);
        const BallMap f1 = ball_map(BallOrtho{o1});
        const BallMap f2 = ball_map(BallOrtho{o2});
        const BallMap composed = [f1, f2](const Vec3& v) { return f1(f2(v)); };
        const BallClassification c = classify_ball_endo(composed, 1e-9, rng);
        if (c.verdict != BallClassification::Verdict::Orthogonal) { compose = 1.0; break; }
        compose = std::max(compose, max_abs(c.O->mat() - o1.mat() * o2.mat()));
    }

    double gamma_ip = 0, gamma_rho = 0, inv_id = 0, adjoint_hom = 0;
    for (long i = 0; i < n; ++i) {
        const Vec3 u{rng.normal(), rng.normal(), rng.normal()};
        const Vec3 v{rng.normal(), rng.normal(), rng.normal()};
        const double ip = 0.5 * trace2(gamma_map(u).mat() * gamma_map(v).mat()).real();
        gamma_ip = std::max(gamma_ip, std::abs(ip - dot(u, v)));

        const Velocity w = sample_velocity(rng);
        const Mat2C rho = bloch(w).mat();
        gamma_rho = std::max(gamma_rho,
                             frob(gamma_map(w.vec()).mat() -
                                  (2.0 * rho - Mat2C::identity())));
        const Mat2C rho_inv = inv2(rho);
        inv_id = std::max(inv_id,
                          frob((1.0 / trace2(rho_inv).real()) * rho_inv -
                               bloch(gyro_neg(w)).mat()));
    }
    double su2_rt = 0;
    for (long i = 0; i < std::max(1L, n / 10); ++i) {
        const OrthogonalMat3 r = sample_rotation(rng);
        su2_rt = std::max(su2_rt, frob(adjoint_rotation(su2_lift(r)).mat() - r.mat()));

        const UnitaryMat2 u = sample_unitary(rng);
        const UnitaryMat2 v = sample_unitary(rng);
        const Mat3R lhs = adjoint_rotation(UnitaryMat2(u.mat() * v.mat())).mat();
        const Mat3R rhs = adjoint_rotation(u).mat() * adjoint_rotation(v).mat();
        adjoint_hom = std::max({adjoint_hom, frob(lhs - rhs),
                                std::abs(det3(lhs) - 1.0)});
    }

    return {
        upper("ball_orthogonal_hom", ortho_hom, cfg.hom_tol),
        upper("ball_zero_hom", zero_hom, cfg.hom_tol),
        lower("shear_negative_control_hom", shear_hom, 1e-3),
        lower("shear_negative_control_unclassified", shear_unclassified, 1e-3),
        upper("orthogonal_recovery", recover, 1e-10),
        upper("zero_map_recovery", zero_verdict, 0.5),
        upper("det_dichotomy_and_reconstruction", dichotomy, 1e-9),
        upper("composition_closure", compose, 1e-9),
        upper("gamma_inner_product", gamma_ip, 1e-13),
        upper("gamma_equals_2rho_minus_I", gamma_rho, 1e-14),
        upper("density_inverse_is_rho_of_neg", inv_id, 1e-12),
        upper("su2_lift_roundtrip", su2_rt, 1e-9),
        upper("adjoint_rotation_hom_det_plus_1", adjoint_hom, 1e-12),
    };
}

} // namespace

bool is_suite_name(const std::string& name) {
    return name == "gyro" || name == "kim" || name == "tau" || name == "jte" ||
           name == "corollaries" || name == "main" || name == "all";
}

SuiteReport run_suite(const std::string& name, const SuiteConfig& cfg) {
    SuiteReport rep;
    rep.suite = name;
    rep.seed = cfg.seed;
    rep.samples = cfg.samples;
    auto append = [&](std::vector<InvariantResult> rs) {
        for (auto& r : rs) rep.invariants.push_back(std::move(r));
    };
    if (name == "gyro" || name == "all") append(suite_gyro(cfg));
    if (name == "kim" || name == "all") append(suite_kim(cfg));
    if (name == "tau" || name == "all") append(suite_tau(cfg));
    if (name == "jte" || name == "all") append(suite_jte(cfg));
    if (name == "corollaries" || name == "all") append(suite_corollaries(cfg));
    if (name == "main" || name == "all") append(suite_main(cfg));
    if (rep.invariants.empty() && !is_suite_name(name))
        throw ParseError("unknown suite \"" + name + "\"");
    rep.pass = std::all_of(rep.invariants.begin(), rep.invariants.end(),
                           [](const InvariantResult& r) { return r.pass; });
    return rep;
}

std::string suite_report_json(const SuiteReport& rep) {
    std::string out = "{\"schema\":1,\"suite\":\"" + rep.suite + "\",\"seed\":" +
                      std::to_string(rep.seed) + ",\"samples\":" + std::to_string(rep.samples) +
                      ",\"invariants\":[";
    for (std::size_t i = 0; i < rep.invariants.size(); ++i) {
        const auto& r = rep.invariants[i];
        if (i) out += ",";
        out += "{\"name\":\"" + r.name + "\",\"max_residual\":" + io::fmt_number(r.max_residual) +
               ",\"tolerance\":" + io::fmt_number(r.tolerance) +
               ",\"witness\":" + (r.lower_bound ? "true" : "false") +
               ",\"pass\":" + (r.pass ? "true" : "false") + "}";
    }
    out += "],\"pass\":";
    out += rep.pass ? "true" : "false";
    out += "}";
    return out;
}

std::string suite_report_table(const SuiteReport& rep) {
    std::string out = "suite " + rep.suite + "  seed=" + std::to_string(rep.seed) +
                      "  samples=" + std::to_string(rep.samples) + "\n";
    for (const auto& r : rep.invariants) {
        char line[160];
        std::snprintf(line, sizeof(line), "  %-36s %c %10.3e  (tol %8.1e)  %s\n",
                      r.name.c_str(), r.lower_bound ? '>' : '<', r.max_residual,
                      r.tolerance, r.pass ? "pass" : "FAIL");
        out += line;
    }
    out += rep.pass ? "overall: pass\n" : "overall: FAIL\n";
    return out;
}

} // namespace gyrokit
