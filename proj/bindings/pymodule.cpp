#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <array>
#include <optional>
#include <vector>

#include "slhelix/certify.hpp"
#include "slhelix/diffgeo.hpp"
#include "slhelix/helix.hpp"
#include "slhelix/sl2geo.hpp"

namespace py = pybind11;
using namespace slhelix;

namespace {

std::array<double, 4> to_arr(const Vec4& v) { return {v[0], v[1], v[2], v[3]}; }
Vec4 from_arr(const std::array<double, 4>& a) { return {a[0], a[1], a[2], a[3]}; }

std::vector<std::vector<double>> mat_rows(const Mat4& m) {
    std::vector<std::vector<double>> out(4, std::vector<double>(4));
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) out[i][j] = m(i, j);
    return out;
}

ModelParams make_params(double tau, std::optional<double> theta,
                        std::optional<double> cos_theta) {
    if (theta && cos_theta)
        throw std::invalid_argument("give either theta or cos_theta, not both");
    if (theta) return case_params(tau, *theta);
    if (cos_theta) return case_params_from_cos(tau, *cos_theta);
    return case_params_b0(tau);
}

} // namespace

PYBIND11_MODULE(_slhelix, m) {
    m.doc() = "constant-angle (helix) surfaces in SL(2,R): construction, "
              "differential geometry and certification";

    // ---- pseudo-Euclidean kernel ----------------------------------------
    m.def("dot22",
          [](const std::array<double, 4>& v, const std::array<double, 4>& w) {
              return dot22(from_arr(v), from_arr(w));
          },
          py::arg("v"), py::arg("w"),
          "indefinite inner product of R^4_2, signature (+,+,-,-)");
    m.def("apply_J",
          [](int k, const std::array<double, 4>& v) { return to_arr(apply_J(k, from_arr(v))); },
          py::arg("k"), py::arg("v"), "product structure J_k (k in 1..3) applied to v");
    m.def("hopf_project",
          [](const std::array<double, 4>& p) { return hopf_project(SL2Point(from_arr(p))); },
          py::arg("p"), "Hopf projection of a point of SL(2,R) onto H^2(-4)");

    // ---- parameters -------------------------------------------------------
    py::class_<ModelParams>(m, "ModelParams")
        .def_readonly("tau", &ModelParams::tau)
        .def_readonly("cos_theta", &ModelParams::cos_theta)
        .def_readonly("sin_theta", &ModelParams::sin_theta)
        .def_readonly("B", &ModelParams::B)
        .def_readonly("a_tilde", &ModelParams::a_tilde)
        .def_readonly("b_tilde", &ModelParams::b_tilde)
        .def_readonly("alpha1", &ModelParams::alpha1)
        .def_readonly("alpha2", &ModelParams::alpha2)
        .def_readonly("g11", &ModelParams::g11)
        .def_readonly("g33", &ModelParams::g33)
        .def_readonly("beta", &ModelParams::beta)
        .def_property_readonly("case",
                               [](const ModelParams& p) { return case_name(p.tag); })
        .def("gauss_curvature", &ModelParams::gauss_curvature)
        .def("__repr__", [](const ModelParams& p) {
            return "ModelParams(tau=" + std::to_string(p.tau) +
                   ", cos_theta=" + std::to_string(p.cos_theta) +
                   ", case=" + case_name(p.tag) + ")";
        });

    m.def("case_params", &make_params, py::arg("tau"), py::arg("theta") = py::none(),
          py::arg("cos_theta") = py::none(),
          "case constants from tau and the angle; omit both angle arguments "
          "for the B = 0 case");

    // ---- xi functions and families -----------------------------------------
    py::class_<XiFn>(m, "XiFn")
        .def_static("constant", &XiFn::constant, py::arg("value"))
        .def_static("polynomial", &XiFn::polynomial, py::arg("coeffs"))
        .def_static("sinusoid", &XiFn::sinusoid, py::arg("a"), py::arg("b"),
                    py::arg("c"), py::arg("d"), "a*sin(b v + c) + d")
        .def("__call__", &XiFn::operator())
        .def("deriv", &XiFn::deriv)
        .def("is_constant", &XiFn::is_constant);

    py::class_<IsometryFamily>(m, "IsometryFamily")
        .def_readonly("sign", &IsometryFamily::sign)
        .def_property_readonly("case",
                               [](const IsometryFamily& f) { return case_name(f.tag); })
        .def("matrix",
             [](const IsometryFamily& f, double v) { return mat_rows(build_A(f, v)); },
             py::arg("v"), "the 4x4 family matrix A(v), row-major")
        .def("matrix_deriv",
             [](const IsometryFamily& f, double v) { return mat_rows(build_A_deriv(f, v)); },
             py::arg("v"))
        .def("xi2_value", [](const IsometryFamily& f, double v) { return f.spec.xi2(v); },
             py::arg("v"));

    m.def("admissibility_residual", &admissibility_residual, py::arg("family"),
          py::arg("v"), py::arg("params"));

    m.def("solve_admissible",
          [](const ModelParams& P, const XiFn& xi, const XiFn& xi1, const XiFn& xi3,
             double xi2_init, double v_min, double v_max, int nodes) {
              return solve_admissible(P.tag, P, xi, xi1, xi3, xi2_init,
                                      VGrid{v_min, v_max, nodes});
          },
          py::arg("params"), py::arg("xi"), py::arg("xi1"), py::arg("xi3"),
          py::arg("xi2_init"), py::arg("v_min") = 0.0, py::arg("v_max") = 1.0,
          py::arg("nodes") = 1001,
          "solve the admissibility constraint for xi2 and build the family");

    // ---- the surface ---------------------------------------------------------
    py::class_<HelixSurface>(m, "HelixSurface")
        .def(py::init([](const ModelParams& P, const IsometryFamily& fam,
                         std::array<double, 2> u_range, std::array<double, 2> v_range) {
                 return HelixSurface(P, fam,
                                     Domain{u_range[0], u_range[1], v_range[0], v_range[1]});
             }),
             py::arg("params"), py::arg("family"),
             py::arg("u_range") = std::array<double, 2>{0.0, 1.0},
             py::arg("v_range") = std::array<double, 2>{0.0, 1.0})
        .def_readonly("params", &HelixSurface::params)
        .def("eval",
             [](const HelixSurface& s, double u, double v) { return to_arr(s.eval(u, v)); },
             py::arg("u"), py::arg("v"), "F(u,v) = A(v) gamma(u)")
        .def("partial",
             [](const HelixSurface& s, double u, double v, int ou, int ov) {
                 return to_arr(s.partial(u, v, ou, ov));
             },
             py::arg("u"), py::arg("v"), py::arg("order_u"), py::arg("order_v") = 0)
        .def("measured_angle",
             [](const HelixSurface& s, double u, double v) {
                 return surface_point_data(s, u, v).cos_theta_hat;
             },
             py::arg("u"), py::arg("v"), "g_tau(E1, N) at the point; cos(theta) on a helix surface")
        .def("phi",
             [](const HelixSurface& s, double u, double v) {
                 return surface_point_data(s, u, v).phi_hat;
             },
             py::arg("u"), py::arg("v"))
        .def("normal",
             [](const HelixSurface& s, double u, double v) {
                 return to_arr(surface_point_data(s, u, v).N);
             },
             py::arg("u"), py::arg("v"))
        .def("shape_operator",
             [](const HelixSurface& s, double u, double v) {
                 Mat2 mm = shape_operator(s, u, v);
                 return std::vector<std::vector<double>>{{mm(0, 0), mm(0, 1)},
                                                         {mm(1, 0), mm(1, 1)}};
             },
             py::arg("u"), py::arg("v"))
        .def("gauss_curvature",
             [](const HelixSurface& s, double u, double v) { return gauss_curvature(s, u, v); },
             py::arg("u"), py::arg("v"), "intrinsic curvature via the Brioschi formula")
        .def("viceversa_residuals",
             [](const HelixSurface& s, double u, double v) {
                 ViceversaResiduals r = viceversa_residuals(s, u, v);
                 return std::array<double, 3>{r.r1, r.r2, r.r3};
             },
             py::arg("u"), py::arg("v"))
        .def("ode_oracle",
             [](const HelixSurface& s, double v, double u_max, int steps) {
                 return ode_oracle_integrate(s, v, u_max, steps);
             },
             py::arg("v"), py::arg("u_max") = 1.0, py::arg("steps") = 10000)
        .def("certify_json",
             [](const HelixSurface& s, int nu, int nv, double tol_scale) {
                 ReportOptions opt;
                 opt.tol_scale = tol_scale;
                 return full_report(s, nu, nv, opt).to_json();
             },
             py::arg("nu") = 25, py::arg("nv") = 25, py::arg("tol_scale") = 1.0,
             "full certification report as a JSON string");
}
