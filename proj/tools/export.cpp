#include "export.hpp"

#include <algorithm>
#include <fstream>
#include <stdexcept>

#include "slhelix/diffgeo.hpp"

namespace slhelix::cli {

namespace {

std::ofstream open_out(const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write " + path);
    out.precision(15);
    return out;
}

void write_quads(std::ofstream& out, int nu, int nv) {
    // row-major vertex grid, 1-based OBJ indices
    for (int i = 0; i + 1 < nu; ++i)
        for (int j = 0; j + 1 < nv; ++j) {
            int a = i*nv + j + 1;
            int b = (i+1)*nv + j + 1;
            out << "f " << a << " " << b << " " << (b + 1) << " " << (a + 1) << "\n";
        }
}

std::string csv_sidecar_path(const std::string& obj_path) {
    auto dot = obj_path.rfind('.');
    if (dot == std::string::npos || obj_path.substr(dot) != ".obj")
        return obj_path + ".csv";
    return obj_path.substr(0, dot) + ".csv";
}

} // namespace

std::string write_mesh(const HelixSurface& s, int nu, int nv,
                       const std::string& obj_path) {
    if (nu < 2 || nv < 2) throw std::invalid_argument("mesh grid must be at least 2x2");
    const Domain& D = s.domain;
    Tau tau{s.params.tau};

    std::ofstream obj = open_out(obj_path);
    std::string csv_path = csv_sidecar_path(obj_path);
    std::ofstream csv = open_out(csv_path);

    obj << "# helix surface in SL(2,R), Hopf-projected mesh\n";
    obj << "# tau " << s.params.tau << " cos_theta " << s.params.cos_theta
        << " case " << case_name(s.params.tag) << "\n";
    csv << "u,v,x1,x2,x3,x4,hopf_x,hopf_y,hopf_z,cos_theta,gauss_curvature,phi\n";

    // curvature stencils need interior points: clamp the attribute location
    const double hK = 1e-3;
    auto clamp_in = [](double x, double lo, double hi) {
        return std::max(lo, std::min(hi, x));
    };

    for (int i = 0; i < nu; ++i) {
        double u = D.u_min + (D.u_max - D.u_min) * i / (nu - 1.0);
        for (int j = 0; j < nv; ++j) {
            double v = D.v_min + (D.v_max - D.v_min) * j / (nv - 1.0);
            SurfacePointData d = surface_point_data(s, u, v);
            Vec3 h = hopf_project(d.p);
            double uK = clamp_in(u, D.u_min + hK, D.u_max - hK);
            double vK = clamp_in(v, D.v_min + hK, D.v_max - hK);
            double K = gauss_curvature(s, uK, vK);
            obj << "v " << h[0] << " " << h[1] << " " << h[2] << "\n";
            csv << u << "," << v << "," << d.p.p[0] << "," << d.p.p[1] << ","
                << d.p.p[2] << "," << d.p.p[3] << "," << h[0] << "," << h[1] << ","
                << h[2] << "," << d.cos_theta_hat << "," << K << "," << d.phi_hat << "\n";
        }
    }
    write_quads(obj, nu, nv);
    return csv_path;
}

void write_hopf_mesh(const HelixSurface& s, int nu, int nv,
                     const std::string& obj_path) {
    if (nu < 2 || nv < 2) throw std::invalid_argument("mesh grid must be at least 2x2");
    const Domain& D = s.domain;
    std::ofstream obj = open_out(obj_path);
    obj << "# Hopf projection of a helix surface onto H^2(-4)\n";
    for (int i = 0; i < nu; ++i) {
        double u = D.u_min + (D.u_max - D.u_min) * i / (nu - 1.0);
        for (int j = 0; j < nv; ++j) {
            double v = D.v_min + (D.v_max - D.v_min) * j / (nv - 1.0);
            Vec3 h = hopf_project(SL2Point(s.eval(u, v)));
            obj << "v " << h[0] << " " << h[1] << " " << h[2] << "\n";
        }
    }
    write_quads(obj, nu, nv);
}

} // namespace slhelix::cli
