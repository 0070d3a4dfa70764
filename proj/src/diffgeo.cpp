#include "slhelix/diffgeo.hpp"

#include <cmath>
#include <stdexcept>

namespace slhelix {

Vec4 unit_normal(const SL2Point& p, const Vec4& F_u, const Vec4& F_v, Tau tau) {
    // <n,p> = 0 row is eps p; the two metric conditions as g_tau rows.
    Vec4 row0{p.p[0], p.p[1], -p.p[2], -p.p[3]};
    Vec4 n = nullspace3(row0, g_tau_row(p, F_u, tau), g_tau_row(p, F_v, tau));
    double q = g_tau(p, n, n, tau);
    if (q <= 1e-14)
        throw std::runtime_error("null normal: g_tau(n,n) not positive");
    n = n * (1.0 / std::sqrt(q));
    Vec4 E1 = apply_J(1, p.p) * (-1.0 / tau.value);
    if (g_tau(p, E1, n, tau) < 0.0) n = -n;
    return n;
}

double measured_angle(const SurfacePointData& d, Tau tau) {
    Vec4 E1 = apply_J(1, d.p.p) * (-1.0 / tau.value);
    return g_tau(d.p, E1, d.N, tau);
}

double extract_phi(const SurfacePointData& d, Tau tau) {
    if (d.sin_theta_hat <= 1e-6)
        throw std::runtime_error("angle degenerate: sin(theta) too small for phi");
    Vec3 nc = frame_components(d.p, tau, d.N);
    return std::atan2(nc[2], nc[1]);
}

std::pair<Vec4, Vec4> tangent_frame(const SurfacePointData& d, Tau tau) {
    FrameAtPoint E = frame(d.p, tau);
    Vec4 T = E.E1 - d.cos_theta_hat * d.N;
    Vec4 JT = d.sin_theta_hat * (std::sin(d.phi_hat)*E.E2 - std::cos(d.phi_hat)*E.E3);
    return {T, JT};
}

SurfacePointData surface_point_data(const HelixSurface& s, double u, double v) {
    Tau tau{s.params.tau};
    Vec4 F = s.eval(u, v);
    SurfacePointData d{SL2Point(F), s.partial(u, v, 1, 0), s.partial(u, v, 0, 1),
                       Vec4{}, 0.0, 0.0, 0.0, Vec4{}, Vec4{}};
    d.N = unit_normal(d.p, d.F_u, d.F_v, tau);
    d.cos_theta_hat = measured_angle(d, tau);
    double s2 = 1.0 - d.cos_theta_hat*d.cos_theta_hat;
    d.sin_theta_hat = s2 > 0.0 ? std::sqrt(s2) : 0.0;
    d.phi_hat = extract_phi(d, tau);
    auto [T, JT] = tangent_frame(d, tau);
    d.T = T;
    d.JT = JT;
    return d;
}

std::pair<double, double> decompose_Fv(const SurfacePointData& d, Tau tau) {
    if (d.sin_theta_hat <= 1e-6)
        throw std::runtime_error("angle degenerate: cannot decompose F_v");
    double s2 = d.sin_theta_hat * d.sin_theta_hat;
    return {g_tau(d.p, d.F_v, d.T, tau) / s2, g_tau(d.p, d.F_v, d.JT, tau) / s2};
}

namespace {

void require_stencil(const HelixSurface& s, double u, double v, double ru, double rv) {
    const Domain& D = s.domain;
    if (u - ru < D.u_min - 1e-12 || u + ru > D.u_max + 1e-12 ||
        v - rv < D.v_min - 1e-12 || v + rv > D.v_max + 1e-12)
        throw std::out_of_range("stencil leaves domain");
}

Vec3 normal_components(const HelixSurface& s, double u, double v) {
    Tau tau{s.params.tau};
    SurfacePointData d = surface_point_data(s, u, v);
    return frame_components(d.p, tau, d.N);
}

Vec3 axpy(double a, const Vec3& x, double b, const Vec3& y) {
    return {a*x[0] + b*y[0], a*x[1] + b*y[1], a*x[2] + b*y[2]};
}

double dot3(const Vec3& x, const Vec3& y) {
    return x[0]*y[0] + x[1]*y[1] + x[2]*y[2];
}

} // namespace

Mat2 shape_operator(const HelixSurface& s, double u, double v, double h) {
    if (!(h > 0.0)) throw std::invalid_argument("shape_operator: h must be positive");
    require_stencil(s, u, v, 2.0*h, 2.0*h);
    Tau tau{s.params.tau};
    SurfacePointData d = surface_point_data(s, u, v);
    auto [a, b] = decompose_Fv(d, tau);
    if (std::fabs(b) < 1e-8)
        throw std::runtime_error("degenerate v-decomposition: |b| ~ 0");

    auto nc = [&](double uu, double vv) { return normal_components(s, uu, vv); };
    Vec3 um2 = nc(u-2*h, v), um1 = nc(u-h, v), up1 = nc(u+h, v), up2 = nc(u+2*h, v);
    Vec3 vm2 = nc(u, v-2*h), vm1 = nc(u, v-h), vp1 = nc(u, v+h), vp2 = nc(u, v+2*h);
    Vec3 du, dv;
    for (int i = 0; i < 3; ++i) {
        du[i] = (um2[i] - 8.0*um1[i] + 8.0*up1[i] - up2[i]) / (12.0*h);
        dv[i] = (vm2[i] - 8.0*vm1[i] + 8.0*vp1[i] - vp2[i]) / (12.0*h);
    }

    Vec3 Nc = frame_components(d.p, tau, d.N);
    Vec3 Tc = frame_components(d.p, tau, d.T);
    Vec3 JTc = frame_components(d.p, tau, d.JT);
    Vec3 dN_T = du;                               // d_u = T
    Vec3 dN_JT = axpy(1.0/b, dv, -a/b, du);       // JT = (d_v - a d_u)/b

    Vec3 AT = covariant_derivative(tau, Tc, dN_T, Nc);
    Vec3 AJT = covariant_derivative(tau, JTc, dN_JT, Nc);
    for (int i = 0; i < 3; ++i) { AT[i] = -AT[i]; AJT[i] = -AJT[i]; }

    double s2 = d.sin_theta_hat * d.sin_theta_hat;
    Mat2 m;
    m(0, 0) = dot3(AT, Tc) / s2;
    m(0, 1) = dot3(AJT, Tc) / s2;
    m(1, 0) = dot3(AT, JTc) / s2;
    m(1, 1) = dot3(AJT, JTc) / s2;
    return m;
}

double extract_lambda(const Mat2& shape) { return shape(1, 1); }

double gauss_curvature(const HelixSurface& s, double u, double v, double h) {
    require_stencil(s, u, v, h, h);
    Tau tau{s.params.tau};
    auto fff = [&](double uu, double vv) {
        SL2Point p(s.eval(uu, vv));
        Vec4 Fu = s.partial(uu, vv, 1, 0), Fv = s.partial(uu, vv, 0, 1);
        return Vec3{g_tau(p, Fu, Fu, tau), g_tau(p, Fu, Fv, tau), g_tau(p, Fv, Fv, tau)};
    };
    Vec3 c0 = fff(u, v);
    Vec3 pu = fff(u+h, v), mu = fff(u-h, v), pv = fff(u, v+h), mv = fff(u, v-h);
    Vec3 pp = fff(u+h, v+h), pm = fff(u+h, v-h), mp = fff(u-h, v+h), mm = fff(u-h, v-h);

    double E = c0[0], F = c0[1], G = c0[2];
    double Eu = (pu[0]-mu[0])/(2*h), Ev = (pv[0]-mv[0])/(2*h);
    double Fu = (pu[1]-mu[1])/(2*h), Fv = (pv[1]-mv[1])/(2*h);
    double Gu = (pu[2]-mu[2])/(2*h), Gv = (pv[2]-mv[2])/(2*h);
    double Evv = (pv[0]-2*E+mv[0])/(h*h);
    double Guu = (pu[2]-2*G+mu[2])/(h*h);
    double Fuv = (pp[1]-pm[1]-mp[1]+mm[1])/(4*h*h);

    auto det3 = [](double a00, double a01, double a02,
                   double a10, double a11, double a12,
                   double a20, double a21, double a22) {
        return a00*(a11*a22 - a12*a21) - a01*(a10*a22 - a12*a20) + a02*(a10*a21 - a11*a20);
    };
    double d1 = det3(-Evv/2 + Fuv - Guu/2, Eu/2, Fu - Ev/2,
                     Fv - Gu/2, E, F,
                     Gv/2, F, G);
    double d2 = det3(0.0, Ev/2, Gu/2,
                     Ev/2, E, F,
                     Gu/2, F, G);
    double W = E*G - F*F;
    return (d1 - d2) / (W*W);
}

std::pair<std::array<double, 2>, std::array<double, 2>>
induced_connection(const HelixSurface& s, double u, double v, double h) {
    require_stencil(s, u, v, 2.0*h, 2.0*h);
    Tau tau{s.params.tau};
    SurfacePointData d = surface_point_data(s, u, v);
    auto [a, b] = decompose_Fv(d, tau);
    if (std::fabs(b) < 1e-8)
        throw std::runtime_error("degenerate v-decomposition: |b| ~ 0");

    auto comp = [&](double uu, double vv, bool want_T) {
        Tau t2{s.params.tau};
        SurfacePointData dd = surface_point_data(s, uu, vv);
        return frame_components(dd.p, t2, want_T ? dd.T : dd.JT);
    };
    auto stencil = [&](bool want_T, bool along_u) {
        Vec3 m2 = along_u ? comp(u-2*h, v, want_T) : comp(u, v-2*h, want_T);
        Vec3 m1 = along_u ? comp(u-h, v, want_T) : comp(u, v-h, want_T);
        Vec3 p1 = along_u ? comp(u+h, v, want_T) : comp(u, v+h, want_T);
        Vec3 p2 = along_u ? comp(u+2*h, v, want_T) : comp(u, v+2*h, want_T);
        Vec3 out;
        for (int i = 0; i < 3; ++i)
            out[i] = (m2[i] - 8.0*m1[i] + 8.0*p1[i] - p2[i]) / (12.0*h);
        return out;
    };

    Vec3 Tc = frame_components(d.p, tau, d.T);
    Vec3 JTc = frame_components(d.p, tau, d.JT);
    Vec3 Nc = frame_components(d.p, tau, d.N);
    double s2 = d.sin_theta_hat * d.sin_theta_hat;

    // nabla_T T: differentiate T-components along u
    Vec3 dT_u = stencil(true, true);
    Vec3 covTT = covariant_derivative(tau, Tc, dT_u, Tc);
    // nabla_JT JT: JT-direction derivative of JT-components
    Vec3 dJT_u = stencil(false, true);
    Vec3 dJT_v = stencil(false, false);
    Vec3 dJT_dir = axpy(1.0/b, dJT_v, -a/b, dJT_u);
    Vec3 covJJ = covariant_derivative(tau, JTc, dJT_dir, JTc);

    auto tangential = [&](const Vec3& w) {
        double wn = dot3(w, Nc);   // g_tau(w, N), frame components are orthonormal
        std::array<double, 2> out{};
        out[0] = (dot3(w, Tc) - wn*dot3(Nc, Tc)) / s2;
        out[1] = (dot3(w, JTc) - wn*dot3(Nc, JTc)) / s2;
        return out;
    };
    return {tangential(covTT), tangential(covJJ)};
}

} // namespace slhelix
