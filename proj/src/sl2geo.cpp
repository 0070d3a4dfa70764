#include "slhelix/sl2geo.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace slhelix {

Tau::Tau(double t) : value(t) {
    if (!(t > 0.0))
        throw std::invalid_argument("tau must be positive");
}

SL2Point::SL2Point(const Vec4& v, double tol) : p(v) {
    if (std::fabs(dot22(v, v) - 1.0) > tol)
        throw std::invalid_argument("point is not on SL(2,R): <p,p> != 1 (|" +
                                    std::to_string(dot22(v, v)) + " - 1| > tol)");
}

FrameAtPoint frame(const SL2Point& p, Tau tau) {
    return {apply_J(1, p.p) * (-1.0 / tau.value), apply_J(2, p.p), apply_J(3, p.p)};
}

double g_tau(const SL2Point& p, const Vec4& X, const Vec4& Y, Tau tau) {
    Vec4 X1 = apply_J(1, p.p);
    return -dot22(X, Y) + (1.0 + tau.value*tau.value) * dot22(X, X1) * dot22(Y, X1);
}

Vec4 g_tau_row(const SL2Point& p, const Vec4& X, Tau tau) {
    // g_tau(n, X) = n . [ -eps X + (1+tau^2) <X, J1 p> eps J1 p ]
    Vec4 X1 = apply_J(1, p.p);
    Vec4 epsX{X[0], X[1], -X[2], -X[3]};
    Vec4 epsX1{X1[0], X1[1], -X1[2], -X1[3]};
    double k = (1.0 + tau.value*tau.value) * dot22(X, X1);
    return (-1.0)*epsX + k*epsX1;
}

Vec3 hopf_project(const SL2Point& p) {
    const auto& x = p.p;
    // z wbar = (x1 + i x2)(x3 - i x4)
    double re = x[0]*x[2] + x[1]*x[3];
    double im = x[1]*x[2] - x[0]*x[3];
    double h = 0.5*(x[0]*x[0] + x[1]*x[1] + x[2]*x[2] + x[3]*x[3]);
    return {re, im, h};
}

double conn_coeff(Tau tau, int i, int j, int k) {
    const double t = tau.value;
    const double m = (2.0 + t*t) / t;
    // nabla_{E1}E2 = -m E3, nabla_{E1}E3 = m E2,
    // nabla_{E2}E1 = -t E3, nabla_{E3}E1 = t E2,
    // nabla_{E3}E2 = -t E1 = -nabla_{E2}E3; diagonal terms vanish.
    if (i == 0 && j == 1 && k == 2) return -m;
    if (i == 0 && j == 2 && k == 1) return m;
    if (i == 1 && j == 0 && k == 2) return -t;
    if (i == 2 && j == 0 && k == 1) return t;
    if (i == 2 && j == 1 && k == 0) return -t;
    if (i == 1 && j == 2 && k == 0) return t;
    return 0.0;
}

Vec3 covariant_derivative(Tau tau, const Vec3& X, const Vec3& dY, const Vec3& Y) {
    Vec3 out = dY;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            if (X[i] == 0.0 || Y[j] == 0.0) continue;
            for (int k = 0; k < 3; ++k)
                out[k] += X[i] * Y[j] * conn_coeff(tau, i, j, k);
        }
    return out;
}

Vec3 frame_components(const SL2Point& p, Tau tau, const Vec4& X, double tangency_tol) {
    double sc = std::max(1.0, max_abs(X));
    if (std::fabs(dot22(X, p.p)) > tangency_tol * sc)
        throw std::runtime_error("frame_components: X is not tangent to SL(2,R) at p");
    FrameAtPoint E = frame(p, tau);
    return {g_tau(p, X, E.E1, tau), g_tau(p, X, E.E2, tau), g_tau(p, X, E.E3, tau)};
}

} // namespace slhelix
