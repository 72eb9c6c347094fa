// gsmcalc: command-line surface for the generalized partial-slice calculus.
//
// Subcommands build slice pairs from expression data (ck, gck), transform
// them (tau, dual-radon), check residual systems (check), and run the full
// identity verification suite (verify-suite). All structured output is JSON.
//
// Exit codes: 0 success, 1 identity/check failure, 2 input error.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <string>

#include "gsm/gsm.hpp"

namespace {

struct CommonInput {
    int p = 0;
    int q = 1;
    std::string f0_text;
    std::string out_path;
};

void write_json(const gsm::Json& j, const std::string& path) {
    if (path.empty()) {
        std::cout << j.dump(2) << std::endl;
        return;
    }
    std::ofstream out(path);
    if (!out) throw gsm::Error("cannot open output file: " + path);
    out << j.dump(2) << "\n";
}

gsm::SlicePair load_pair(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw gsm::Error("cannot open pair file: " + path);
    gsm::Json j;
    try {
        in >> j;
    } catch (const std::exception& e) {
        throw gsm::Error("malformed JSON in " + path + ": " + e.what());
    }
    return gsm::slice_pair_from_json(j);
}

gsm::Poly parse_f0(const CommonInput& in) {
    gsm::AlgebraContext ctx(in.p, in.q);
    gsm::Poly f0 = gsm::parse_polynomial(in.f0_text, ctx, gsm::VarSet::Slice);
    gsm::require_real_slice(f0);
    return f0;
}

int run_extension(const CommonInput& in, bool generalized) {
    gsm::Poly f0 = parse_f0(in);
    gsm::SlicePair pair = generalized ? gsm::gck(f0) : gsm::ck(f0);
    write_json(gsm::slice_pair_to_json(pair), in.out_path);
    return 0;
}

int run_tau(const std::string& pair_path, int q_flag, const std::string& out_path) {
    gsm::SlicePair F = load_pair(pair_path);
    if (q_flag >= 0 && q_flag != F.ctx().q)
        throw gsm::Error("--q does not match the pair file (q=" + std::to_string(F.ctx().q) + ")");
    if (F.ctx().q % 2 == 0) throw gsm::Error("q must be odd");
    write_json(gsm::slice_pair_to_json(gsm::tau_q(F)), out_path);
    return 0;
}

int run_dual_radon(const std::string& pair_path, const std::string& out_path) {
    gsm::SlicePair F = load_pair(pair_path);
    write_json(gsm::slice_pair_to_json(gsm::dual_radon(F)), out_path);
    return 0;
}

int run_check(const std::string& pair_path, const std::string& what,
              const std::string& out_path) {
    gsm::SlicePair F = load_pair(pair_path);
    gsm::Json result{{"what", what}, {"p", F.ctx().p}, {"q", F.ctx().q}};
    bool pass = false;
    if (what == "cr") {
        auto [P1, P2] = gsm::cr_residual(F);
        pass = P1.is_zero() && P2.is_zero();
        result["residual1"] = gsm::to_string(P1);
        result["residual2"] = gsm::to_string(P2);
    } else if (what == "vekua") {
        auto [P1, P2] = gsm::vekua_residual(F);
        pass = P1.is_zero() && P2.is_zero();
        result["residual1"] = gsm::to_string(P1);
        result["residual2"] = gsm::to_string(P2);
    } else if (what == "monogenic") {
        gsm::Poly D = gsm::dirac_full(gsm::to_full(F));
        pass = D.is_zero();
        result["residual"] = gsm::to_string(D);
    } else {
        throw gsm::Error("--what must be one of cr|vekua|monogenic");
    }
    result["status"] = pass ? "pass" : "fail";
    write_json(result, out_path);
    return pass ? 0 : 1;
}

int run_suite(const std::string& grid_text, int degree, int trials, std::uint64_t seed,
              std::size_t mc_samples, const std::string& report_path) {
    gsm::SuiteConfig cfg;
    if (!grid_text.empty()) cfg.grid = gsm::parse_grid(grid_text);
    cfg.degree = degree;
    cfg.trials = trials;
    cfg.seed = seed;
    cfg.mc_samples = mc_samples;

    gsm::SuiteReport report = gsm::run_verification_suite(cfg);
    write_json(gsm::report_to_json(report), report_path);
    for (const auto& rec : report.identities) {
        const char* status = rec.status == gsm::CheckStatus::Fail
                                 ? "FAIL"
                                 : (rec.numeric ? "numeric-pass" : "exact-pass");
        std::cerr << rec.id << ": " << status << " (" << rec.checks << " checks)\n";
        if (rec.status == gsm::CheckStatus::Fail) std::cerr << "  " << rec.failure << "\n";
    }
    return report.all_pass() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact calculus for generalized partial-slice monogenic functions"};
    app.require_subcommand(1);

    CommonInput ck_in, gck_in;
    auto add_extension_flags = [](CLI::App* cmd, CommonInput& in) {
        cmd->add_option("--p", in.p, "number of commuting slice variables beyond x0")->required();
        cmd->add_option("--q", in.q, "dimension of the vector part")->required();
        cmd->add_option("--f0", in.f0_text, "restriction data, e.g. \"x0^2 - 2 x1 [e1]\"")
            ->required();
        cmd->add_option("--out", in.out_path, "output file (default: stdout)");
    };
    auto* ck_cmd = app.add_subcommand("ck", "slice Cauchy-Kovalevskaya extension of f0");
    add_extension_flags(ck_cmd, ck_in);
    auto* gck_cmd = app.add_subcommand("gck", "generalized (monogenic) CK extension of f0");
    add_extension_flags(gck_cmd, gck_in);

    std::string tau_pair, tau_out;
    int tau_q_flag = -1;
    auto* tau_cmd = app.add_subcommand("tau", "apply the Fueter-Sce map to a slice pair");
    tau_cmd->add_option("--pair", tau_pair, "slice pair JSON file")->required();
    tau_cmd->add_option("--q", tau_q_flag, "expected q (must be odd and match the pair)");
    tau_cmd->add_option("--out", tau_out, "output file (default: stdout)");

    std::string radon_pair, radon_out;
    auto* radon_cmd = app.add_subcommand("dual-radon", "apply the dual Radon transform");
    radon_cmd->add_option("--pair", radon_pair, "slice pair JSON file")->required();
    radon_cmd->add_option("--out", radon_out, "output file (default: stdout)");

    std::string check_pair, check_what, check_out;
    auto* check_cmd = app.add_subcommand("check", "evaluate residual systems for a slice pair");
    check_cmd->add_option("--pair", check_pair, "slice pair JSON file")->required();
    check_cmd->add_option("--what", check_what, "cr | vekua | monogenic")->required();
    check_cmd->add_option("--out", check_out, "output file (default: stdout)");

    std::string suite_grid, suite_report;
    int suite_degree = 6, suite_trials = 25;
    std::uint64_t suite_seed = 42;
    std::size_t suite_mc = 1000000;
    auto* suite_cmd = app.add_subcommand("verify-suite", "run the full identity suite");
    suite_cmd->add_option("--grid", suite_grid, "cells, e.g. \"(0,1);(0,3);(1,3);(2,3);(1,5)\"");
    suite_cmd->add_option("--degree", suite_degree, "max total degree of random data");
    suite_cmd->add_option("--trials", suite_trials, "random trials per grid cell");
    suite_cmd->add_option("--seed", suite_seed, "master seed");
    suite_cmd->add_option("--mc-samples", suite_mc, "Monte-Carlo sample count");
    suite_cmd->add_option("--report", suite_report, "report file (default: stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (ck_cmd->parsed()) return run_extension(ck_in, false);
        if (gck_cmd->parsed()) return run_extension(gck_in, true);
        if (tau_cmd->parsed()) return run_tau(tau_pair, tau_q_flag, tau_out);
        if (radon_cmd->parsed()) return run_dual_radon(radon_pair, radon_out);
        if (check_cmd->parsed()) return run_check(check_pair, check_what, check_out);
        if (suite_cmd->parsed())
            return run_suite(suite_grid, suite_degree, suite_trials, suite_seed, suite_mc,
                             suite_report);
    } catch (const gsm::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
