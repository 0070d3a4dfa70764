#pragma once

#include <optional>

// Case constants of the classification. The discriminant
// B = (tau^2+1) cos^2(theta) - 1 selects one of three families.

namespace slhelix {

enum class CaseTag { B0, BPos, BNeg };

const char* case_name(CaseTag t);

struct ModelParams {
    double tau = 0.0;
    double cos_theta = 0.0;
    double sin_theta = 0.0;
    double B = 0.0;
    double a_tilde = 0.0;          // -sin^2(theta) B / tau^2
    double b_tilde = 0.0;          // -2 B / tau
    CaseTag tag = CaseTag::B0;

    // B > 0 only
    double alpha1 = 0.0, alpha2 = 0.0, g11 = 0.0, g33 = 0.0;
    // B < 0 only
    double beta = 0.0;

    /// -4 (1+tau^2) cos^2(theta), the constant Gauss curvature of every
    /// helix surface with these parameters.
    double gauss_curvature() const;
};

/// Constants from (tau, theta). theta outside (0, pi/2) is rejected:
/// theta = pi/2 would make the surface a Hopf cylinder, theta = 0 is
/// impossible (the horizontal distribution of the Hopf map is not
/// integrable). |B| < 1e-12 collapses to the B = 0 case.
ModelParams case_params(double tau, double theta);

/// Same, from cos(theta) in (0,1).
ModelParams case_params_from_cos(double tau, double cos_theta);

/// The B = 0 case: cos(theta) = 1/sqrt(1+tau^2) exactly.
ModelParams case_params_b0(double tau);

} // namespace slhelix
