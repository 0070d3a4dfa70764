#include "slhelix/helix.hpp"

#include <cmath>
#include <complex>
#include <stdexcept>

namespace slhelix {

Vec4 ProfileCurve::eval(double u, int order) const {
    if (order < 0 || order > 4)
        throw std::invalid_argument("profile derivative order must be in 0..4");
    const ModelParams& P = params;
    switch (P.tag) {
        case CaseTag::B0: {
            double c = P.tau / (1.0 + P.tau*P.tau);
            if (order == 0) return {1.0, -c*u, c*u, 0.0};
            if (order == 1) return {0.0, -c, c, 0.0};
            return {0.0, 0.0, 0.0, 0.0};
        }
        case CaseTag::BPos: {
            // d^n cos(a u) = a^n cos(a u + n pi/2), likewise for sin
            double s3 = std::sqrt(P.g33), s1 = std::sqrt(-P.g11);
            double ph = order * (std::acos(-1.0) / 2.0);
            double k1 = std::pow(P.alpha1, order), k2 = std::pow(P.alpha2, order);
            return {s3*k2*std::cos(P.alpha2*u + ph), -s3*k2*std::sin(P.alpha2*u + ph),
                    s1*k1*std::cos(P.alpha1*u + ph), s1*k1*std::sin(P.alpha1*u + ph)};
        }
        case CaseTag::BNeg: {
            // components are Re/Im combinations of exp((+-beta + i bt/2) u),
            // so every derivative is exact
            std::complex<double> lp(P.beta, P.b_tilde/2.0), lm(-P.beta, P.b_tilde/2.0);
            std::complex<double> Ep = std::exp(lp*u) * std::pow(lp, order);
            std::complex<double> Em = std::exp(lm*u) * std::pow(lm, order);
            double cch = (Ep + Em).real() / 2.0;   // cos(bt u/2) cosh(beta u)
            double sch = (Ep + Em).imag() / 2.0;   // sin * cosh
            double csh = (Ep - Em).real() / 2.0;   // cos * sinh
            double ssh = (Ep - Em).imag() / 2.0;   // sin * sinh
            double k = 2.0*P.beta / P.b_tilde;
            double s = P.sin_theta / std::sqrt(-P.B);
            return {cch - k*ssh, sch + k*csh, s*csh, s*ssh};
        }
    }
    return {};
}

HelixSurface::HelixSurface(ModelParams p, IsometryFamily fam, Domain dom)
    : params(p), family(std::move(fam)), profile{p}, domain(dom) {
    if (family.tag != params.tag)
        throw std::invalid_argument("family case tag does not match the surface parameters");
    if (!(domain.u_min < domain.u_max) || !(domain.v_min < domain.v_max))
        throw std::invalid_argument("empty surface domain");
    if (domain.v_min < family.spec.v_min - 1e-12 || domain.v_max > family.spec.v_max + 1e-12)
        throw std::invalid_argument("surface v-range exceeds the family domain");
}

void HelixSurface::require_in_domain(double u, double v) const {
    double su = 1e-9 * (1.0 + domain.u_max - domain.u_min);
    double sv = 1e-9 * (1.0 + domain.v_max - domain.v_min);
    if (u < domain.u_min - su || u > domain.u_max + su ||
        v < domain.v_min - sv || v > domain.v_max + sv)
        throw std::out_of_range("(u,v) outside the surface domain");
}

Vec4 HelixSurface::eval(double u, double v) const {
    require_in_domain(u, v);
    return build_A(family, v) * profile.eval(u, 0);
}

Vec4 HelixSurface::partial(double u, double v, int order_u, int order_v) const {
    require_in_domain(u, v);
    if (order_v < 0 || order_v > 1)
        throw std::invalid_argument("v-derivative order must be 0 or 1");
    Mat4 A = (order_v == 0) ? build_A(family, v) : build_A_deriv(family, v);
    return A * profile.eval(u, order_u);
}

double lambda_closed(const ModelParams& P, double u, double eta) {
    const double pi = std::acos(-1.0);
    switch (P.tag) {
        case CaseTag::B0: {
            double den = u*P.cos_theta + eta;
            if (std::fabs(den) < 1e-10)
                throw std::runtime_error("lambda singularity: u cos(theta) + eta ~ 0");
            return 1.0 / den;
        }
        case CaseTag::BPos: {
            double sB = std::sqrt(P.B);
            double arg = eta - 2.0*P.cos_theta*sB*u;
            double dist = std::fabs(std::remainder(arg - pi/2.0, pi));
            if (dist < 1e-6)
                throw std::runtime_error("lambda singularity: tan argument near pi/2 + k pi");
            return 2.0*sB*std::tan(arg);
        }
        case CaseTag::BNeg: {
            double sB = std::sqrt(-P.B);
            return 2.0*sB*std::tanh(eta + 2.0*P.cos_theta*sB*u);
        }
    }
    return 0.0;
}

double phi_closed(const ModelParams& P, double u, double c) {
    if (P.tag == CaseTag::B0) return c;
    return -2.0*P.B/P.tau * u + c;
}

std::pair<double, double> ab_closed(const ModelParams& P, double u, double eta) {
    switch (P.tag) {
        case CaseTag::B0: {
            double uc = u*P.cos_theta;
            return {-P.tau*uc*(uc + 2.0*eta), uc + eta};
        }
        case CaseTag::BPos: {
            double sB = std::sqrt(P.B);
            double arg = eta - 2.0*P.cos_theta*sB*u;
            return {P.tau/sB*std::sin(arg), std::cos(arg)};
        }
        case CaseTag::BNeg: {
            double sB = std::sqrt(-P.B);
            double arg = eta + 2.0*P.cos_theta*sB*u;
            return {-P.tau/sB*std::sinh(arg), std::cosh(arg)};
        }
    }
    return {0.0, 0.0};
}

} // namespace slhelix
