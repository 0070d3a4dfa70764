#pragma once

#include <utility>

#include "slhelix/isofam.hpp"
#include "slhelix/params.hpp"
#include "slhelix/pseudolin.hpp"

// Profile curves gamma(u) of the three families, the swept surface
// F(u,v) = A(v) gamma(u), and the closed-form structure functions
// lambda, phi, a, b used as cross-checks.

namespace slhelix {

struct ProfileCurve {
    ModelParams params;

    /// order-th analytic u-derivative of gamma, order in 0..4.
    ///   B = 0: (1, -tau u/(1+tau^2), tau u/(1+tau^2), 0)
    ///   B > 0: (sqrt(g33) cos(a2 u), -sqrt(g33) sin(a2 u),
    ///           sqrt(-g11) cos(a1 u), sqrt(-g11) sin(a1 u))
    ///   B < 0: trig-hyperbolic components built from cos/sin(bt u/2),
    ///          cosh/sinh(beta u) and sin(theta)/sqrt(-B).
    Vec4 eval(double u, int order = 0) const;
};

struct Domain {
    double u_min = 0.0, u_max = 1.0;
    double v_min = 0.0, v_max = 1.0;
};

struct HelixSurface {
    ModelParams params;
    IsometryFamily family;
    ProfileCurve profile;
    Domain domain;

    // Validates that the family's case tag matches params.
    HelixSurface(ModelParams p, IsometryFamily fam, Domain dom);

    /// F(u,v) = A(v) gamma(u); |<F,F> - 1| stays within 1e-10.
    Vec4 eval(double u, double v) const;

    /// d^{ou}/du^{ou} d^{ov}/dv^{ov} F with ou in 0..4, ov in 0..1,
    /// analytic in both slots.
    Vec4 partial(double u, double v, int order_u, int order_v = 0) const;

    void require_in_domain(double u, double v) const;
};

/// Closed-form lambda with the v-dependence frozen to the scalar eta:
///   B = 0: 1/(u cos(theta) + eta)
///   B > 0: 2 sqrt(B) tan(eta - 2 cos(theta) sqrt(B) u)
///   B < 0: 2 sqrt(-B) tanh(eta + 2 cos(theta) sqrt(-B) u)
/// Throws std::runtime_error on the B=0 pole (|u cos+eta| < 1e-10) and when
/// the B>0 tan argument is within 1e-6 of pi/2 + k pi.
double lambda_closed(const ModelParams& params, double u, double eta);

/// phi along a u-line: -2 B u / tau + c for B != 0; the constant c for B = 0.
double phi_closed(const ModelParams& params, double u, double c);

/// Closed-form coordinate decomposition coefficients (a, b) of d_v = a T + b JT
/// with the v-dependence frozen to eta:
///   B = 0: a = -tau u cos (u cos + 2 eta), b = u cos + eta
///   B > 0: a = tau/sqrt(B) sin(arg),  b = cos(arg),  arg = eta - 2 cos sqrt(B) u
///   B < 0: a = -tau/sqrt(-B) sinh(arg), b = cosh(arg), arg = eta + 2 cos sqrt(-B) u
std::pair<double, double> ab_closed(const ModelParams& params, double u, double eta);

} // namespace slhelix
