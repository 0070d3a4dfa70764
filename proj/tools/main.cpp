// slhelix: construct and certify constant-angle surfaces in SL(2,R).
//
// Exit codes: 0 success, 1 usage/config error, 2 certification failure.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "export.hpp"
#include "jobconfig.hpp"
#include "slhelix/certify.hpp"

using namespace slhelix;
using cli::JobConfig;

namespace {

struct FlagValues {
    std::string config_path;
    std::optional<double> tau, theta, cos_theta, xi_const, xi2_init, tol_scale;
    std::string case_tag, xi1_spec, xi3_spec, xi2_spec, u_range, v_range, grid;
    std::string out_path, report_path;
    bool dump_config = false;
};

void add_common_flags(CLI::App* cmd, FlagValues& f) {
    cmd->add_option("--config", f.config_path, "JSON config file (flags override it)");
    cmd->add_option("--tau", f.tau, "bundle parameter tau > 0");
    cmd->add_option("--theta", f.theta, "constant angle theta in (0, pi/2)");
    cmd->add_option("--cos-theta", f.cos_theta, "cosine of the constant angle");
    cmd->add_option("--case", f.case_tag, "b0 | bpos | bneg")
        ->check(CLI::IsMember({"b0", "bpos", "bneg"}));
    cmd->add_option("--xi", f.xi_const, "constant value of xi");
    cmd->add_option("--xi1", f.xi1_spec, "xi1 spec: const:V | poly:C0,C1,... | sin:A,B,C,D");
    cmd->add_option("--xi3", f.xi3_spec, "xi3 spec (same syntax as --xi1)");
    cmd->add_option("--xi2-init", f.xi2_init, "initial value for the solved xi2");
    cmd->add_option("--xi2", f.xi2_spec, "explicit xi2 spec (skips the admissibility solve)");
    cmd->add_option("--u-range", f.u_range, "u interval as a:b");
    cmd->add_option("--v-range", f.v_range, "v interval as a:b");
    cmd->add_option("--grid", f.grid, "sample grid as NUxNV");
    cmd->add_option("--out", f.out_path, "output mesh path (.obj)");
    cmd->add_option("--report", f.report_path, "certification report path (.json)");
    cmd->add_option("--tol-scale", f.tol_scale, "multiplies every certification tolerance");
    cmd->add_flag("--dump-config", f.dump_config,
                  "print the effective JSON config and exit");
}

std::pair<double, double> parse_range(const std::string& text) {
    auto colon = text.find(':');
    if (colon == std::string::npos)
        throw std::invalid_argument("range must be a:b, got '" + text + "'");
    return {std::stod(text.substr(0, colon)), std::stod(text.substr(colon + 1))};
}

std::pair<int, int> parse_grid(const std::string& text) {
    auto x = text.find('x');
    if (x == std::string::npos)
        throw std::invalid_argument("grid must be NUxNV, got '" + text + "'");
    return {std::stoi(text.substr(0, x)), std::stoi(text.substr(x + 1))};
}

JobConfig merge(const std::string& command, const FlagValues& f) {
    JobConfig c;
    if (!f.config_path.empty()) c = JobConfig::from_json_file(f.config_path);
    c.command = command;
    if (f.tau) c.tau = *f.tau;
    if (f.theta) c.theta = *f.theta;
    if (f.cos_theta) c.cos_theta = *f.cos_theta;
    if (!f.case_tag.empty()) c.case_override = f.case_tag;
    if (f.xi_const) c.xi = XiFn::constant(*f.xi_const);
    if (!f.xi1_spec.empty()) c.xi1 = cli::parse_xifn(f.xi1_spec);
    if (!f.xi3_spec.empty()) c.xi3 = cli::parse_xifn(f.xi3_spec);
    if (f.xi2_init) {
        c.xi2.solve = true;
        c.xi2.init = *f.xi2_init;
    }
    if (!f.xi2_spec.empty()) {
        c.xi2.solve = false;
        c.xi2.explicit_fn = cli::parse_xifn(f.xi2_spec);
    }
    if (!f.u_range.empty()) std::tie(c.u_min, c.u_max) = parse_range(f.u_range);
    if (!f.v_range.empty()) std::tie(c.v_min, c.v_max) = parse_range(f.v_range);
    if (!f.grid.empty()) std::tie(c.nu, c.nv) = parse_grid(f.grid);
    if (!f.out_path.empty()) c.out_path = f.out_path;
    if (!f.report_path.empty()) c.report_path = f.report_path;
    if (f.tol_scale) c.tol_scale = *f.tol_scale;
    return c;
}

int run_generate(const JobConfig& c) {
    if (c.out_path.empty()) throw std::invalid_argument("generate needs --out");
    HelixSurface s = c.build_surface();
    std::string csv = cli::write_mesh(s, c.nu, c.nv, c.out_path);
    std::printf("wrote %s and %s (%d x %d vertices)\n", c.out_path.c_str(), csv.c_str(),
                c.nu, c.nv);
    return 0;
}

int run_certify(const JobConfig& c) {
    HelixSurface s = c.build_surface();
    ReportOptions opt;
    opt.tol_scale = c.tol_scale;
    CertReport rep = full_report(s, c.nu, c.nv, opt);
    std::string text = rep.to_json();
    if (!c.report_path.empty()) {
        std::ofstream out(c.report_path);
        if (!out) throw std::runtime_error("cannot write " + c.report_path);
        out << text << "\n";
    }
    for (const auto& [name, chk] : rep.checks)
        std::printf("%-22s %s  max %.3e  tol %.1e%s%s\n", name.c_str(),
                    chk.pass ? "pass" : "FAIL", chk.max_residual, chk.tolerance,
                    chk.note.empty() ? "" : "  ", chk.note.c_str());
    if (rep.all_pass()) {
        std::printf("certification PASSED (%zu checks)\n", rep.checks.size());
        return 0;
    }
    std::printf("certification FAILED\n");
    return 2;
}

int run_hopf(const JobConfig& c) {
    if (c.out_path.empty()) throw std::invalid_argument("hopf-project needs --out");
    HelixSurface s = c.build_surface();
    cli::write_hopf_mesh(s, c.nu, c.nv, c.out_path);
    std::printf("wrote %s (%d x %d vertices on H^2(-4))\n", c.out_path.c_str(), c.nu, c.nv);
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"constant-angle (helix) surfaces in SL(2,R): generation, "
                 "certification and Hopf projection"};
    app.require_subcommand(1);

    FlagValues fg, fc, fh;
    CLI::App* gen = app.add_subcommand("generate", "write a surface mesh (OBJ + CSV)");
    add_common_flags(gen, fg);
    CLI::App* cert = app.add_subcommand("certify", "run every certification check");
    add_common_flags(cert, fc);
    CLI::App* hopf = app.add_subcommand("hopf-project", "write the H^2(-4) projection");
    add_common_flags(hopf, fh);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 1;
    }

    try {
        std::string cmd;
        const FlagValues* f = nullptr;
        if (gen->parsed()) { cmd = "generate"; f = &fg; }
        else if (cert->parsed()) { cmd = "certify"; f = &fc; }
        else { cmd = "hopf-project"; f = &fh; }

        JobConfig c = merge(cmd, *f);
        if (f->dump_config) {
            std::cout << c.to_json() << "\n";
            return 0;
        }
        if (cmd == "generate") return run_generate(c);
        if (cmd == "certify") return run_certify(c);
        return run_hopf(c);
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 1;
    }
}
