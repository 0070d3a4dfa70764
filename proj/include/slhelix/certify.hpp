#pragma once

#include <map>
#include <string>

#include "slhelix/diffgeo.hpp"
#include "slhelix/helix.hpp"

// Aggregate certification: residuals for every identity the construction
// must satisfy, evaluated over a grid, with an independent first-order ODE
// oracle, collected into a deterministic pass/fail report.

namespace slhelix {

struct CheckResult {
    double max_residual = 0.0;
    double tolerance = 0.0;
    long samples = 0;
    bool pass = false;
    std::string note;       // "", "not applicable", "exact", or an error message
};

struct CertReport {
    double tau = 0.0;
    double cos_theta = 0.0;
    double B = 0.0;
    std::string case_tag;
    std::string family_digest;
    int grid_nu = 0, grid_nv = 0;
    std::map<std::string, CheckResult> checks;   // sorted keys: stable order

    bool all_pass() const;
    /// JSON document with stable key order.
    std::string to_json(int indent = 2) const;
};

struct ViceversaResiduals {
    double r1 = 0.0;   // g_tau(F_u,F_u) - sin^2
    double r2 = 0.0;   // g_tau(E1,F_u) - sin^2
    double r3 = 0.0;   // g_tau(F_v,E1) - g_tau(F_u,F_v)
};

ViceversaResiduals viceversa_residuals(const HelixSurface& s, double u, double v);

/// max-norm of F_uuuu + (bt^2 - 2 at) F_uu + at^2 F (B != 0) or of F_uu (B = 0),
/// from analytic derivatives.
double fourth_order_residual(const HelixSurface& s, double u, double v);

/// Residuals of the ten <.,.> product relations and the six J1 identities,
/// keyed by name. Requires B != 0 (throws std::invalid_argument for B = 0).
std::map<std::string, double> product_relations_residuals(const HelixSurface& s,
                                                          double u, double v);

/// RK4 integration of F_u = sin[ sin (-J1 F / tau) - cos cos(phi(u)) J2 F
/// - cos sin(phi(u)) J3 F ] from F(0,v), phi fitted at u=0 and advanced with
/// the case slope; returns max over the step grid of ||F_rk4 - F_closed||_max.
/// steps must be >= 100.
double ode_oracle_integrate(const HelixSurface& s, double v, double u_max,
                            int steps);

// Oracle errors at a coarse/doubled step pair, for convergence diagnostics.
// Runs below the steps >= 100 floor on purpose: at fine steps the truncation
// error of this system sits under the double-precision floor and no order is
// observable. For B = 0 the profile is affine and RK4 is exact at any step
// count, so order() is meaningless there; check err_fine against the
// tolerance instead.
struct OracleConvergence {
    double err_coarse = 0.0;
    double err_fine = 0.0;
    double order() const;   // log2(err_coarse / err_fine)
};

OracleConvergence ode_oracle_convergence(const HelixSurface& s, double v,
                                         double u_max, int coarse_steps = 8);

struct ReportOptions {
    int oracle_steps = 10000;
    double tol_scale = 1.0;
    int max_shape_points = 8;
    int max_curvature_points = 25;
};

/// Runs every certification check over an nu x nv grid. Deterministic for
/// identical inputs; sub-check errors are recorded in the report, not thrown.
CertReport full_report(const HelixSurface& s, int nu, int nv,
                       const ReportOptions& opt = {});

} // namespace slhelix
