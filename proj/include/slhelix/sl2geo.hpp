#pragma once

#include <array>

#include "slhelix/pseudolin.hpp"

// Ambient geometry of SL(2,R)_tau: the unit pseudo-sphere {<v,v> = 1} of R^4_2
// carrying the metric family g_tau, its orthonormal frame E1,E2,E3, the
// Levi-Civita connection table and the Hopf projection onto H^2(-1/4-scaled).

namespace slhelix {

using Vec3 = std::array<double, 3>;

struct Tau {
    double value;
    explicit Tau(double t);   // requires t > 0
};

struct SL2Point {
    Vec4 p;
    // Validates <p,p> = 1 within tol.
    explicit SL2Point(const Vec4& v, double tol = 1e-10);
};

// Frame values at a point: E1 = -J1 p / tau, E2 = J2 p, E3 = J3 p.
struct FrameAtPoint {
    Vec4 E1, E2, E3;
    const Vec4& operator[](int i) const { return i == 0 ? E1 : (i == 1 ? E2 : E3); }
};

FrameAtPoint frame(const SL2Point& p, Tau tau);

/// g_tau(X,Y) = -<X,Y> + (1+tau^2) <X,J1 p> <Y,J1 p>.
double g_tau(const SL2Point& p, const Vec4& X, const Vec4& Y, Tau tau);

/// Row r such that r . n = g_tau(n, X) for every n (Euclidean dot).
Vec4 g_tau_row(const SL2Point& p, const Vec4& X, Tau tau);

/// Hopf projection: with z = x1+i x2, w = x3+i x4 returns
/// (Re(z wbar), Im(z wbar), (|z|^2+|w|^2)/2), a point of {x^2+y^2-z^2 = -1/4}.
Vec3 hopf_project(const SL2Point& p);

/// Components of nabla^tau_X Y in the E-frame: dY holds the directional
/// derivatives (X y_i); the connection table of SL(2,R)_tau supplies the rest.
Vec3 covariant_derivative(Tau tau, const Vec3& X, const Vec3& dY, const Vec3& Y);

/// nabla^tau_{E_i} E_j = sum_k conn_coeff(tau,i,j,k) E_k   (i,j,k in 0..2).
double conn_coeff(Tau tau, int i, int j, int k);

/// (g_tau(X,E1), g_tau(X,E2), g_tau(X,E3)); X must be tangent:
/// |<X,p>| <= tangency_tol * max(1,|X|), else throws std::runtime_error.
Vec3 frame_components(const SL2Point& p, Tau tau, const Vec4& X,
                      double tangency_tol = 1e-8);

} // namespace slhelix
