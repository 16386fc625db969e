#pragma once

#include <functional>
#include <optional>
#include <variant>
#include <vector>

#include "gyrokit/bridges.hpp"
#include "gyrokit/gyro.hpp"
#include "gyrokit/matalg.hpp"

namespace gyrokit {

// One classified endomorphism family with its parameters.
//
// Jordan triple endomorphisms of P_2:
//   JTE1: A -> (Det A)^c U A U*
//   JTE2: A -> (Det A)^d V A^{-1} V*
//   JTE3: A -> W Diag[(Det A)^{c1}, (Det A)^{c2}] W*
// Sequential endomorphisms of P_2^1:
//   P21Conj: A -> U A U*      P21InvConj: A -> V A^{-1} V*      P21Const: A -> I
// Endomorphisms of (D, odot):
//   DConj: A -> U A U*        DInvConj: A -> V A^{-1} V* / Tr A^{-1}
//   DConst: A -> I/2
// Endomorphisms of the Einstein gyrogroup (B, +):
//   BallOrtho: v -> O v       BallZero: v -> 0
struct JTE1 { UnitaryMat2 U; double c = 0; };
struct JTE2 { UnitaryMat2 V; double d = 0; };
struct JTE3 { UnitaryMat2 W; double c1 = 0, c2 = 0; };
struct P21Conj { UnitaryMat2 U; };
struct P21InvConj { UnitaryMat2 V; };
struct P21Const {};
struct DConj { UnitaryMat2 U; };
struct DInvConj { UnitaryMat2 V; };
struct DConst {};
struct BallOrtho { OrthogonalMat3 O; };
struct BallZero {};

using EndoDescriptor =
    std::variant<JTE1, JTE2, JTE3, P21Conj, P21InvConj, P21Const,
                 DConj, DInvConj, DConst, BallOrtho, BallZero>;

// Apply a descriptor to an element of its structure. Throws
// StructureMismatch when the descriptor does not act on that structure.
PosDefMat apply_endo(const EndoDescriptor& d, const PosDefMat& a);
UnitDetMat apply_endo(const EndoDescriptor& d, const UnitDetMat& a);
DensityMat apply_endo(const EndoDescriptor& d, const DensityMat& a);
Velocity apply_endo(const EndoDescriptor& d, const Velocity& v);

// Extension of a P_2^1 endomorphism phi to all of P_2:
// psi(A) = sqrt(Det A) * phi(A / sqrt(Det A)).
std::function<PosDefMat(const PosDefMat&)> psi_extend(const EndoDescriptor& d);

struct HomReport {
    long samples = 0;
    double max_residual = 0;
    double mean_residual = 0;
    bool pass = false;
    double tolerance = 0;
};

using BallMap = std::function<Vec3(const Vec3&)>;
using DensityMap = std::function<DensityMat(const DensityMat&)>;
using UnitDetMap = std::function<UnitDetMat(const UnitDetMat&)>;
using PosDefMap = std::function<PosDefMat(const PosDefMat&)>;

// Homomorphism residual over n sampled pairs:
// max/mean of ||f(x o y) - g(x) o g(y)||. The two-argument overloads
// test f against itself.
HomReport hom_residual_ball(const BallMap& f, const BallMap& g, long n, double tol, Rng& rng);
HomReport hom_residual_density(const DensityMap& f, const DensityMap& g, long n, double tol, Rng& rng);
HomReport hom_residual_unitdet(const UnitDetMap& f, const UnitDetMap& g, long n, double tol, Rng& rng);
// Jordan triple law on P_2:
// ||f(xyx) - g(x)g(y)g(x)||_F / (1 + max(||f(xyx)||_F, ||g(x)||^2 ||g(y)||));
// relative because ||ABA|| is unbounded on P_2.
HomReport hom_residual_triple(const PosDefMap& f, const PosDefMap& g, long n, double tol, Rng& rng);

inline HomReport hom_residual_ball(const BallMap& f, long n, double tol, Rng& rng) {
    return hom_residual_ball(f, f, n, tol, rng);
}
inline HomReport hom_residual_density(const DensityMap& f, long n, double tol, Rng& rng) {
    return hom_residual_density(f, f, n, tol, rng);
}
inline HomReport hom_residual_unitdet(const UnitDetMap& f, long n, double tol, Rng& rng) {
    return hom_residual_unitdet(f, f, n, tol, rng);
}
inline HomReport hom_residual_triple(const PosDefMap& f, long n, double tol, Rng& rng) {
    return hom_residual_triple(f, f, n, tol, rng);
}

struct BallClassification {
    enum class Verdict { Zero, Orthogonal, Unclassified };
    Verdict verdict = Verdict::Unclassified;
    std::optional<OrthogonalMat3> O;  // set for Orthogonal
    double residual = 0;              // fit residual (Orthogonal) or max residual
};

// Black-box classification against the continuous-endomorphism dichotomy:
// zero map, orthogonal map, or neither. Verdicts assume the black box
// actually is a continuous endomorphism; that hypothesis is not checkable
// from finitely many probes, so maps outside the families come back
// Unclassified with the measured residual as evidence.
BallClassification classify_ball_endo(const BallMap& f, double tol, Rng& rng);

// Classification from a finite probe table (pairs of input/output points).
// The table must contain the six +-eps*e_i probes with eps = 1e-3.
struct ProbePair {
    Vec3 in;
    Vec3 out;
};
BallClassification classify_probe_table(const std::vector<ProbePair>& table, double tol);

struct DensityClassification {
    std::optional<EndoDescriptor> descriptor;  // empty means unclassified
    double residual = 0;                       // max reconstruction residual over probes
    BallClassification ball;                   // transported ball-map classification
};

// Classify a black-box map on D by transporting it to the ball through the
// Bloch parametrization. det +1 ball maps come back as conjugations,
// det -1 as inversion forms.
DensityClassification classify_density_endo(const DensityMap& a, double tol, Rng& rng);

} // namespace gyrokit
