#pragma once

#include <array>
#include <utility>

#include "slhelix/helix.hpp"
#include "slhelix/sl2geo.hpp"

// Numerical extrinsic geometry of a parametrized surface in SL(2,R)_tau:
// nothing here trusts the closed forms beyond the surface evaluator itself.

namespace slhelix {

struct Mat2 {
    // row-major [[a00,a01],[a10,a11]]
    std::array<double, 4> m{};
    double& operator()(int r, int c) { return m[2*r + c]; }
    double operator()(int r, int c) const { return m[2*r + c]; }
    double det() const { return m[0]*m[3] - m[1]*m[2]; }
    double trace() const { return m[0] + m[3]; }
};

struct SurfacePointData {
    SL2Point p;
    Vec4 F_u, F_v;
    Vec4 N;                 // g_tau-unit, oriented so g_tau(E1,N) >= 0
    double cos_theta_hat = 0.0;
    double sin_theta_hat = 0.0;
    double phi_hat = 0.0;   // azimuth of N in the {E2,E3} plane
    Vec4 T, JT;             // adapted tangent frame
};

/// g_tau-unit normal from the three linear conditions
/// {<N,p> = 0, g_tau(N,F_u) = 0, g_tau(N,F_v) = 0}, oriented g_tau(E1,N) >= 0.
/// Throws: "degenerate tangent plane" (rank drop), "null normal"
/// (g_tau(n,n) <= 1e-14 before normalization).
Vec4 unit_normal(const SL2Point& p, const Vec4& F_u, const Vec4& F_v, Tau tau);

/// Full per-point bundle: normal, measured angle, phi, T and JT.
/// Throws "angle degenerate" when sin(theta_hat) <= 1e-6 (phi undefined).
SurfacePointData surface_point_data(const HelixSurface& s, double u, double v);

/// g_tau(E1(p), N); equals cos(theta) at every point of a helix surface.
double measured_angle(const SurfacePointData& d, Tau tau);

/// phi from atan2 of the E3/E2 components of N.
double extract_phi(const SurfacePointData& d, Tau tau);

/// T = E1 - cos(theta_hat) N and JT = sin(theta_hat)(sin(phi) E2 - cos(phi) E3).
std::pair<Vec4, Vec4> tangent_frame(const SurfacePointData& d, Tau tau);

/// Coordinate decomposition d_v = a T + b JT:
/// a = g_tau(F_v,T)/sin^2, b = g_tau(F_v,JT)/sin^2.
std::pair<double, double> decompose_Fv(const SurfacePointData& d, Tau tau);

/// Shape operator matrix in the {T, JT} basis from 5-point finite-difference
/// stencils (step h) of the normal's frame components; expected form
/// [[0, -tau], [-tau, lambda]]. Throws "degenerate v-decomposition" when
/// |b| < 1e-8 and "stencil leaves domain" near the boundary.
Mat2 shape_operator(const HelixSurface& s, double u, double v, double h = 1e-4);

/// Entry (2,2) of the shape matrix: the free structure function lambda.
double extract_lambda(const Mat2& shape);

/// Intrinsic Gauss curvature via the Brioschi formula from finite differences
/// of the first fundamental form (step h); independent of the shape-operator
/// pipeline.
double gauss_curvature(const HelixSurface& s, double u, double v, double h = 1e-3);

/// Tangential parts of nabla^tau_T T and nabla^tau_{JT} JT, expressed in the
/// {T, JT} basis (coefficients of T and JT). Used by the induced-connection
/// checks: expected (0, -2 tau cos) and (-lambda cos, 0).
std::pair<std::array<double, 2>, std::array<double, 2>>
induced_connection(const HelixSurface& s, double u, double v, double h = 1e-4);

} // namespace slhelix
