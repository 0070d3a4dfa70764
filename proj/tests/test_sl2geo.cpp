#include <doctest.h>

#include <stdexcept>

#include <cmath>
#include <complex>
#include <random>

#include "slhelix/sl2geo.hpp"

using namespace slhelix;

namespace {

std::mt19937 rng(777);

SL2Point random_point() {
    std::uniform_real_distribution<double> d(-1.5, 1.5);
    for (;;) {
        Vec4 v{d(rng), d(rng), d(rng), d(rng)};
        double q = dot22(v, v);
        if (q > 0.1) return SL2Point(v * (1.0/std::sqrt(q)));
    }
}

Vec4 rotate_fiber(const Vec4& p, double t) {
    // exp(t J1): multiplies both complex coordinates by e^{it}
    double c = std::cos(t), s = std::sin(t);
    return {c*p[0] - s*p[1], s*p[0] + c*p[1], c*p[2] - s*p[3], s*p[2] + c*p[3]};
}

} // namespace

TEST_CASE("SL2Point membership validation") {
    CHECK_NOTHROW(SL2Point({1, 0, 0, 0}));
    CHECK_THROWS_AS(SL2Point({1, 1, 0, 0}), std::invalid_argument);   // norm 2
    CHECK_THROWS_AS(SL2Point({1, 0, 1, 0}), std::invalid_argument);   // null vector
    CHECK_THROWS_AS(SL2Point({0, 0, 1, 0}), std::invalid_argument);   // norm -1
}

TEST_CASE("Tau validation") {
    CHECK_NOTHROW(Tau(0.5));
    CHECK_THROWS_AS(Tau(0.0), std::invalid_argument);
    CHECK_THROWS_AS(Tau(-1.0), std::invalid_argument);
}

TEST_CASE("frame at the base point") {
    SL2Point p({1, 0, 0, 0});
    FrameAtPoint E = frame(p, Tau(1.0));
    CHECK(E.E1[0] == 0.0); CHECK(E.E1[1] == -1.0); CHECK(E.E1[2] == 0.0); CHECK(E.E1[3] == 0.0);
    CHECK(E.E2[0] == 0.0); CHECK(E.E2[1] == 0.0); CHECK(E.E2[2] == 0.0); CHECK(E.E2[3] == 1.0);
    CHECK(E.E3[0] == 0.0); CHECK(E.E3[1] == 0.0); CHECK(E.E3[2] == 1.0); CHECK(E.E3[3] == 0.0);
}

TEST_CASE("the complex description X_i(z,w) matches the J structures") {
    // X1 = (iz, iw), X2 = (i wbar, i zbar), X3 = (wbar, zbar) under
    // (z,w) = (x1 + i x2, x3 + i x4)
    for (int i = 0; i < 100; ++i) {
        SL2Point p = random_point();
        std::complex<double> z(p.p[0], p.p[1]), w(p.p[2], p.p[3]);
        const std::complex<double> I(0, 1);
        std::complex<double> X1z = I*z, X1w = I*w;
        std::complex<double> X2z = I*std::conj(w), X2w = I*std::conj(z);
        std::complex<double> X3z = std::conj(w), X3w = std::conj(z);
        Vec4 X1{X1z.real(), X1z.imag(), X1w.real(), X1w.imag()};
        Vec4 X2{X2z.real(), X2z.imag(), X2w.real(), X2w.imag()};
        Vec4 X3{X3z.real(), X3z.imag(), X3w.real(), X3w.imag()};
        CHECK(max_abs(X1 - apply_J(1, p.p)) < 1e-12);
        CHECK(max_abs(X2 - apply_J(2, p.p)) < 1e-12);
        CHECK(max_abs(X3 - apply_J(3, p.p)) < 1e-12);
    }
}

TEST_CASE("g_tau on the X frame") {
    Tau tau(1.7);
    for (int i = 0; i < 50; ++i) {
        SL2Point p = random_point();
        Vec4 X1 = apply_J(1, p.p), X2 = apply_J(2, p.p), X3 = apply_J(3, p.p);
        CHECK(g_tau(p, X1, X1, tau) == doctest::Approx(tau.value*tau.value).epsilon(1e-12));
        CHECK(std::fabs(g_tau(p, X2, X3, tau)) < 1e-12);
        CHECK(std::fabs(g_tau(p, X1, X2, tau)) < 1e-12);
        CHECK(g_tau(p, X2, X2, tau) == doctest::Approx(1.0).epsilon(1e-12));
        CHECK(dot22(X2, X2) == doctest::Approx(-1.0).epsilon(1e-12));
    }
}

TEST_CASE("frame orthonormality at many random points") {
    // two representative tau values, lots of points
    for (double t : {0.6, 2.3}) {
        Tau tau(t);
        for (int i = 0; i < 5000; ++i) {
            SL2Point p = random_point();
            FrameAtPoint E = frame(p, tau);
            for (int a = 0; a < 3; ++a)
                for (int b = 0; b < 3; ++b) {
                    double want = (a == b) ? 1.0 : 0.0;
                    CHECK(std::fabs(g_tau(p, E[a], E[b], tau) - want) < 1e-10);
                }
        }
    }
}

TEST_CASE("hopf projection") {
    SL2Point e1({1, 0, 0, 0});
    Vec3 h = hopf_project(e1);
    CHECK(h[0] == 0.0);
    CHECK(h[1] == 0.0);
    CHECK(h[2] == doctest::Approx(0.5).epsilon(1e-15));

    std::uniform_real_distribution<double> d(-3.0, 3.0);
    for (int i = 0; i < 200; ++i) {
        SL2Point p = random_point();
        Vec3 q = hopf_project(p);
        CHECK(std::fabs(q[0]*q[0] + q[1]*q[1] - q[2]*q[2] + 0.25) < 1e-10);
        // fiber invariance
        double t = d(rng);
        Vec3 qr = hopf_project(SL2Point(rotate_fiber(p.p, t)));
        for (int k = 0; k < 3; ++k) CHECK(std::fabs(q[k] - qr[k]) < 1e-10);
    }
}

TEST_CASE("connection table entries") {
    Tau tau(1.3);
    Vec3 zero{0, 0, 0};
    // nabla_{E2} E1 = -tau E3 for a constant field
    Vec3 r = covariant_derivative(tau, {0, 1, 0}, zero, {1, 0, 0});
    CHECK(r[0] == 0.0); CHECK(r[1] == 0.0);
    CHECK(r[2] == doctest::Approx(-tau.value).epsilon(1e-15));
    // nabla_{E1} E1 = 0
    r = covariant_derivative(tau, {1, 0, 0}, zero, {1, 0, 0});
    CHECK(r[0] == 0.0); CHECK(r[1] == 0.0); CHECK(r[2] == 0.0);
    // nabla_{E3} E2 = -tau E1
    r = covariant_derivative(tau, {0, 0, 1}, zero, {0, 1, 0});
    CHECK(r[0] == doctest::Approx(-tau.value).epsilon(1e-15));
    CHECK(r[1] == 0.0); CHECK(r[2] == 0.0);
    // directional-derivative term passes through
    r = covariant_derivative(tau, {0, 0, 0}, {0.5, -2.0, 3.0}, {0, 0, 0});
    CHECK(r[0] == 0.5); CHECK(r[1] == -2.0); CHECK(r[2] == 3.0);
}

TEST_CASE("connection table is metric compatible") {
    Tau tau(0.8);
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            for (int k = 0; k < 3; ++k)
                CHECK(conn_coeff(tau, i, j, k) + conn_coeff(tau, i, k, j) == 0.0);
}

TEST_CASE("frame_components and reconstruction") {
    Tau tau(1.1);
    for (int i = 0; i < 100; ++i) {
        SL2Point p = random_point();
        FrameAtPoint E = frame(p, tau);
        Vec3 c = frame_components(p, tau, E.E2);
        CHECK(std::fabs(c[0]) < 1e-10);
        CHECK(c[1] == doctest::Approx(1.0).epsilon(1e-10));
        CHECK(std::fabs(c[2]) < 1e-10);

        Vec4 X = 2.0*E.E1 + 3.0*E.E3;
        c = frame_components(p, tau, X);
        CHECK(c[0] == doctest::Approx(2.0).epsilon(1e-10));
        CHECK(std::fabs(c[1]) < 1e-10);
        CHECK(c[2] == doctest::Approx(3.0).epsilon(1e-10));

        std::uniform_real_distribution<double> d(-2.0, 2.0);
        Vec4 Y = d(rng)*E.E1 + d(rng)*E.E2 + d(rng)*E.E3;
        Vec3 yc = frame_components(p, tau, Y);
        Vec4 rec = yc[0]*E.E1 + yc[1]*E.E2 + yc[2]*E.E3;
        CHECK(max_abs(rec - Y) < 1e-9);
    }
}

TEST_CASE("frame_components rejects non-tangent input") {
    Tau tau(1.0);
    SL2Point p({1, 0, 0, 0});
    CHECK_THROWS_AS(frame_components(p, tau, {1, 0, 0, 0}), std::runtime_error);
}
