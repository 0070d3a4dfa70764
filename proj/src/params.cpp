#include "slhelix/params.hpp"

#include <cmath>
#include <stdexcept>

namespace slhelix {

const char* case_name(CaseTag t) {
    switch (t) {
        case CaseTag::B0: return "b0";
        case CaseTag::BPos: return "bpos";
        default: return "bneg";
    }
}

double ModelParams::gauss_curvature() const {
    return -4.0 * (1.0 + tau*tau) * cos_theta*cos_theta;
}

ModelParams case_params_from_cos(double tau, double cos_theta) {
    if (!(tau > 0.0)) throw std::invalid_argument("tau must be positive");
    if (cos_theta >= 1.0)
        throw std::invalid_argument(
            "theta = 0 is impossible: the horizontal distribution of the Hopf map "
            "is not integrable");
    if (cos_theta <= 0.0)
        throw std::invalid_argument("theta = pi/2 rejected: M is a Hopf cylinder");

    ModelParams mp;
    mp.tau = tau;
    mp.cos_theta = cos_theta;
    mp.sin_theta = std::sqrt(1.0 - cos_theta*cos_theta);
    mp.B = (tau*tau + 1.0) * cos_theta*cos_theta - 1.0;
    if (std::fabs(mp.B) < 1e-12) mp.B = 0.0;
    mp.a_tilde = -mp.sin_theta*mp.sin_theta * mp.B / (tau*tau);
    mp.b_tilde = -2.0 * mp.B / tau;

    if (mp.B > 0.0) {
        mp.tag = CaseTag::BPos;
        double sB = std::sqrt(mp.B);
        mp.alpha1 = (tau * sB * cos_theta + mp.B) / tau;
        mp.alpha2 = (tau * sB * cos_theta - mp.B) / tau;
        mp.g11 = (sB - tau*cos_theta) / (2.0*sB);
        mp.g33 = (sB + tau*cos_theta) / (2.0*sB);
    } else if (mp.B < 0.0) {
        mp.tag = CaseTag::BNeg;
        mp.beta = std::sqrt(-mp.B) * cos_theta;
    } else {
        mp.tag = CaseTag::B0;
    }
    return mp;
}

ModelParams case_params(double tau, double theta) {
    if (!(theta > 0.0))
        throw std::invalid_argument(
            "theta = 0 is impossible: the horizontal distribution of the Hopf map "
            "is not integrable");
    if (!(theta < std::acos(-1.0)/2.0))
        throw std::invalid_argument("theta = pi/2 rejected: M is a Hopf cylinder");
    return case_params_from_cos(tau, std::cos(theta));
}

ModelParams case_params_b0(double tau) {
    if (!(tau > 0.0)) throw std::invalid_argument("tau must be positive");
    return case_params_from_cos(tau, 1.0 / std::sqrt(1.0 + tau*tau));
}

} // namespace slhelix
