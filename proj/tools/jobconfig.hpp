#pragma once

#include <optional>
#include <string>

#include "slhelix/certify.hpp"
#include "slhelix/helix.hpp"

// Job configuration shared by the CLI flags and the JSON config file.

namespace slhelix::cli {

// "const:VALUE" | "poly:C0,C1,..." | "sin:A,B,C,D"  (A sin(B v + C) + D)
XiFn parse_xifn(const std::string& spec);
std::string xifn_to_string(const XiFn& f);

struct Xi2Choice {
    bool solve = true;
    double init = 0.0;                 // used when solve
    std::optional<XiFn> explicit_fn;   // used otherwise
};

struct JobConfig {
    std::string command;               // generate | certify | hopf-project
    double tau = 1.0;
    std::optional<double> theta;
    std::optional<double> cos_theta;
    std::optional<std::string> case_override;   // b0 | bpos | bneg
    XiFn xi = XiFn::constant(0.0);
    XiFn xi1 = XiFn::constant(0.0);
    XiFn xi3 = XiFn::constant(0.0);
    Xi2Choice xi2;
    double u_min = 0.0, u_max = 1.0;
    double v_min = 0.0, v_max = 1.0;
    int nu = 50, nv = 50;
    std::string out_path;
    std::string report_path;
    double tol_scale = 1.0;

    static JobConfig from_json_file(const std::string& path);
    static JobConfig from_json_text(const std::string& text);
    std::string to_json() const;

    // Validates the angle/case combination and builds the surface.
    ModelParams resolve_params() const;
    HelixSurface build_surface() const;
};

bool operator==(const JobConfig& a, const JobConfig& b);

} // namespace slhelix::cli
