#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "gyrokit/bridges.hpp"
#include "gyrokit/endo.hpp"
#include "gyrokit/errors.hpp"
#include "gyrokit/gyro.hpp"
#include "gyrokit/json_io.hpp"
#include "gyrokit/matalg.hpp"
#include "gyrokit/verify.hpp"

namespace {

using namespace gyrokit;

// Operands are inline JSON (starting with '[' or '{') or file paths.
std::string load_operand(const std::string& arg) {
    if (!arg.empty() && (arg[0] == '[' || arg[0] == '{')) return arg;
    std::ifstream in(arg);
    if (!in) throw ParseError("cannot read file \"" + arg + "\"");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

// Accept a raw Mat2C document or a kind-tagged {"kind":...,"m":...} wrapper.
Mat2C load_mat2(const std::string& arg) {
    const std::string text = load_operand(arg);
    const auto j = nlohmann::json::parse(text, nullptr, false);
    if (!j.is_discarded() && j.is_object() && j.contains("m"))
        return io::decode_mat2(j["m"].dump());
    return io::decode_mat2(text);
}

int cmd_eval(const std::string& op, const std::vector<std::string>& args) {
    auto vec = [&](int i) { return Velocity(io::decode_vec3(load_operand(args.at(i)))); };
    auto density = [&](int i) { return DensityMat(load_mat2(args.at(i))); };
    auto unitdet = [&](int i) { return UnitDetMat(load_mat2(args.at(i))); };

    std::string out;
    if (op == "add") {
        out = io::encode(einstein_add(vec(0), vec(1)).vec());
    } else if (op == "gamma-factor") {
        out = io::fmt_number(lorentz_factor(vec(0)));
    } else if (op == "bloch") {
        out = io::encode(bloch(vec(0)));
    } else if (op == "bloch-inv") {
        out = io::encode(bloch_inv(density(0)).vec());
    } else if (op == "tau") {
        out = io::encode(tau(density(0)));
    } else if (op == "odot") {
        out = io::encode(odot(density(0), density(1)));
    } else if (op == "boxdot") {
        out = io::encode(boxdot(unitdet(0), unitdet(1)));
    } else {
        throw ParseError("unknown eval operation \"" + op + "\"");
    }
    std::cout << out << "\n";
    return 0;
}

int cmd_verify(const std::string& suite, const SuiteConfig& cfg, bool as_json) {
    const SuiteReport rep = run_suite(suite, cfg);
    std::cout << (as_json ? suite_report_json(rep) : suite_report_table(rep));
    if (as_json) std::cout << "\n";
    return rep.pass ? 0 : 1;
}

int cmd_classify(const std::string& input, double tol, std::uint64_t seed) {
    const io::ClassifyInput in = io::decode_classify_input(load_operand(input));
    Rng rng(seed);
    BallClassification cls;
    if (in.table) {
        cls = classify_probe_table(*in.table, tol);
    } else {
        const EndoDescriptor& d = *in.descriptor;
        if (std::holds_alternative<BallOrtho>(d) || std::holds_alternative<BallZero>(d)) {
            cls = classify_ball_endo(
                [&d](const Vec3& v) { return apply_endo(d, Velocity(v)).vec(); }, tol, rng);
        } else if (std::holds_alternative<DConj>(d) || std::holds_alternative<DInvConj>(d) ||
                   std::holds_alternative<DConst>(d)) {
            cls = classify_density_endo(
                      [&d](const DensityMat& a) { return apply_endo(d, a); }, tol, rng)
                      .ball;
        } else {
            throw ParseError("classify accepts Ball* or D* descriptors, or a probe table");
        }
    }
    std::cout << io::encode(cls) << "\n";
    return (cls.verdict == BallClassification::Verdict::Unclassified) ? 1 : 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Einstein gyrogroup toolkit: evaluation, verification suites, classification"};
    app.require_subcommand(1);

    // eval
    auto* eval = app.add_subcommand("eval", "evaluate one operation and print the JSON result");
    std::string eval_op;
    eval->add_option("operation", eval_op, "add | gamma-factor | bloch | bloch-inv | tau | odot | boxdot")
        ->required();
    // operands are collected from the remaining argv; CLI11 option parsing
    // would otherwise interpret bracketed JSON as a list
    eval->allow_extras();

    // verify
    auto* verify = app.add_subcommand("verify", "run a verification suite");
    std::string suite;
    SuiteConfig cfg;
    bool as_json = false;
    verify->add_option("suite", suite, "gyro | kim | tau | jte | corollaries | main | all")
        ->required()
        ->check(CLI::IsMember({"gyro", "kim", "tau", "jte", "corollaries", "main", "all"}));
    verify->add_option("--seed", cfg.seed, "rng seed")->envname("GYROKIT_SEED")
        ->default_val(42);
    verify->add_option("--samples", cfg.samples, "sample pair count")
        ->default_val(10000)->check(CLI::PositiveNumber);
    verify->add_option("--tol", cfg.hom_tol, "endomorphism-law tolerance")->default_val(1e-11);
    verify->add_flag("--json", as_json, "emit the report as JSON");

    // classify
    auto* classify = app.add_subcommand("classify", "classify a black-box ball endomorphism");
    std::string input;
    double ctol = 1e-9;
    std::uint64_t cseed = 42;
    classify->add_option("--input", input, "EndoDescriptor JSON or probe table (inline or file)")
        ->required();
    classify->add_option("--tol", ctol, "classification tolerance")->default_val(1e-9);
    classify->add_option("--seed", cseed, "rng seed for probing")->envname("GYROKIT_SEED")
        ->default_val(42);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (eval->parsed()) return cmd_eval(eval_op, eval->remaining());
        if (verify->parsed()) return cmd_verify(suite, cfg, as_json);
        return cmd_classify(input, ctol, cseed);
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
