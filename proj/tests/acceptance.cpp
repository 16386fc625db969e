// Acceptance suite: one pass/fail line per criterion, exit 0 iff all pass.
// argv[1] (or GYROKIT_BIN) names the CLI binary used by the determinism check.

#include <array>
#include <cstdio>
#include <cstdlib>
#include <iostream>
#include <map>
#include <string>
#include <vector>

#include "gyrokit/verify.hpp"

using namespace gyrokit;

namespace {

int failures = 0;

void report(int criterion, const std::string& what, bool pass, const std::string& detail) {
    std::printf("[%s] criterion %2d: %s  (%s)\n", pass ? "PASS" : "FAIL", criterion,
                what.c_str(), detail.c_str());
    if (!pass) ++failures;
}

std::string run_cmd(const std::string& cmd, int& exit_code) {
    FILE* pipe = popen((cmd + " 2>&1").c_str(), "r");
    if (!pipe) { exit_code = -1; return {}; }
    std::string out;
    std::array<char, 4096> buf;
    while (std::size_t n = std::fread(buf.data(), 1, buf.size(), pipe)) out.append(buf.data(), n);
    const int status = pclose(pipe);
    exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return out;
}

} // namespace

int main(int argc, char** argv) {
    SuiteConfig cfg;  // seed 42, 10^4 samples, 1e-11 endomorphism tolerance
    const SuiteReport rep = run_suite("all", cfg);

    std::map<std::string, InvariantResult> by_name;
    for (const auto& inv : rep.invariants) by_name[inv.name] = inv;

    auto criterion = [&](int num, const std::string& what,
                         const std::vector<std::string>& names) {
        bool pass = true;
        std::string detail;
        for (const auto& n : names) {
            auto it = by_name.find(n);
            if (it == by_name.end()) {
                pass = false;
                detail += n + " missing; ";
                continue;
            }
            pass = pass && it->second.pass;
            char buf[96];
            std::snprintf(buf, sizeof(buf), "%s=%.2e ", n.c_str(), it->second.max_residual);
            detail += buf;
        }
        report(num, what, pass, detail);
    };

    criterion(1, "gyrogroup identities and defect witnesses",
              {"closure_norm_lt_1", "two_sided_identity", "inverse",
               "noncommutativity_witness", "nonassociativity_witness"});
    criterion(2, "Bloch map intertwines velocity addition and the normalized sequential product",
              {"kim_isomorphism"});
    criterion(3, "tau is an isomorphism (D,odot) -> (P21,boxdot)",
              {"tau_intertwining", "tau_roundtrip"});
    criterion(4, "Jordan triple law for all three classified forms",
              {"jte_form1_triple_law", "jte_form2_triple_law", "jte_form3_triple_law"});
    criterion(5, "psi extension agrees with its source and obeys the triple law",
              {"psi_agrees_on_unit_det", "psi_triple_law"});
    criterion(6, "P21 and density endomorphism families are homomorphisms",
              {"p21_conjugation_hom", "p21_inverse_conjugation_hom", "p21_constant_hom",
               "density_conjugation_hom", "density_inverse_conjugation_hom",
               "density_constant_hom"});
    criterion(7, "orthogonal and zero ball maps are endomorphisms",
              {"ball_orthogonal_hom", "ball_zero_hom"});
    criterion(8, "classifier recovers orthogonal/zero maps and the det dichotomy",
              {"orthogonal_recovery", "zero_map_recovery", "det_dichotomy_and_reconstruction"});
    criterion(9, "scaled shear fails the homomorphism test and is unclassified",
              {"shear_negative_control_hom", "shear_negative_control_unclassified"});
    criterion(10, "proof-apparatus identities (gamma, inversion, SU(2) lift)",
              {"gamma_inner_product", "gamma_equals_2rho_minus_I",
               "density_inverse_is_rho_of_neg", "su2_lift_roundtrip"});

    // criterion 11: byte-identical reports from two consecutive CLI runs
    const char* bin = (argc > 1) ? argv[1] : std::getenv("GYROKIT_BIN");
    if (!bin) {
        report(11, "verify all --seed 42 reproducibility", false, "CLI binary path not provided");
    } else {
        const std::string cmd = std::string(bin) + " verify all --seed 42 --json";
        int code1 = -1, code2 = -1;
        const std::string out1 = run_cmd(cmd, code1);
        const std::string out2 = run_cmd(cmd, code2);
        const bool pass = code1 == 0 && code2 == 0 && !out1.empty() && out1 == out2;
        char detail[64];
        std::snprintf(detail, sizeof(detail), "exit=%d,%d bytes=%zu", code1, code2, out1.size());
        report(11, "verify all --seed 42 reproducibility", pass, detail);
    }

    if (failures) std::printf("%d criterion(s) FAILED\n", failures);
    else std::printf("all acceptance criteria passed\n");
    return failures ? 1 : 0;
}
