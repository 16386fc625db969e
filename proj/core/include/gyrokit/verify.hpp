#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace gyrokit {

struct InvariantResult {
    std::string name;
    double max_residual = 0;
    double tolerance = 0;
    bool pass = false;
    // witness invariants (non-commutativity etc.) pass when the residual
    // EXCEEDS the tolerance; recorded so reports stay self-describing
    bool lower_bound = false;
};

struct SuiteReport {
    std::string suite;
    std::uint64_t seed = 42;
    long samples = 0;
    std::vector<InvariantResult> invariants;
    bool pass = false;
};

struct SuiteConfig {
    std::uint64_t seed = 42;
    long samples = 10000;
    // tolerance for the endomorphism-law invariants; structural identity
    // tolerances are pinned per invariant and not affected
    double hom_tol = 1e-11;
};

// Suite names: gyro, kim, tau, jte, corollaries, main, all.
bool is_suite_name(const std::string& name);
SuiteReport run_suite(const std::string& name, const SuiteConfig& cfg);

std::string suite_report_json(const SuiteReport& rep);
std::string suite_report_table(const SuiteReport& rep);

} // namespace gyrokit
