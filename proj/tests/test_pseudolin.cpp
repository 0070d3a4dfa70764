#include <doctest.h>

#include <stdexcept>

#include <cmath>
#include <random>

#include "slhelix/pseudolin.hpp"

using namespace slhelix;

namespace {

std::mt19937 rng(12345);

Vec4 random_vec(double lo = -2.0, double hi = 2.0) {
    std::uniform_real_distribution<double> d(lo, hi);
    return {d(rng), d(rng), d(rng), d(rng)};
}

// general unit vector of R^4_2: the cosh/cos parametrization covers <r,r>=1
Vec4 random_unit() {
    std::uniform_real_distribution<double> d(-1.5, 1.5);
    double x1 = d(rng), x2 = d(rng), x3 = d(rng);
    return {std::cosh(x1)*std::cos(x2), -std::cosh(x1)*std::sin(x2),
            std::sinh(x1)*std::cos(x3), -std::sinh(x1)*std::sin(x3)};
}

} // namespace

TEST_CASE("dot22 signature examples") {
    CHECK(dot22({1, 0, 0, 0}, {1, 0, 0, 0}) == 1.0);
    CHECK(dot22({0, 0, 1, 0}, {0, 0, 1, 0}) == -1.0);
    CHECK(dot22({1, 0, 1, 0}, {1, 0, 1, 0}) == 0.0);
}

TEST_CASE("dot22 is symmetric and bilinear") {
    for (int i = 0; i < 200; ++i) {
        Vec4 v = random_vec(), w = random_vec(), z = random_vec();
        double a = 1.7, b = -0.3;
        CHECK(std::fabs(dot22(v, w) - dot22(w, v)) < 1e-12);
        CHECK(std::fabs(dot22(a*v + b*z, w) - (a*dot22(v, w) + b*dot22(z, w))) < 1e-12);
    }
}

TEST_CASE("apply_J basics") {
    Vec4 e1{1, 0, 0, 0};
    Vec4 j1 = apply_J(1, e1);
    CHECK(j1[0] == 0.0); CHECK(j1[1] == 1.0); CHECK(j1[2] == 0.0); CHECK(j1[3] == 0.0);

    Vec4 v{1.5, -2.0, 0.25, 4.0};
    Vec4 j2 = apply_J(2, v);
    CHECK(j2[0] == v[3]); CHECK(j2[1] == v[2]); CHECK(j2[2] == v[1]); CHECK(j2[3] == v[0]);

    Vec4 j3 = apply_J(3, e1);
    CHECK(j3[0] == 0.0); CHECK(j3[1] == 0.0); CHECK(j3[2] == 1.0); CHECK(j3[3] == 0.0);

    CHECK_THROWS_AS(apply_J(0, v), std::invalid_argument);
    CHECK_THROWS_AS(apply_J(4, v), std::invalid_argument);
}

TEST_CASE("J1 squares to minus identity, exactly") {
    for (int i = 0; i < 50; ++i) {
        Vec4 v = random_vec();
        Vec4 w = apply_J(1, apply_J(1, v));
        for (int k = 0; k < 4; ++k) CHECK(w[k] == -v[k]);
    }
}

TEST_CASE("J structures and the inner product") {
    for (int i = 0; i < 200; ++i) {
        Vec4 v = random_vec(), w = random_vec();
        CHECK(std::fabs(dot22(apply_J(1, v), apply_J(1, w)) - dot22(v, w)) < 1e-12);
        CHECK(std::fabs(dot22(apply_J(2, v), apply_J(2, w)) + dot22(v, w)) < 1e-12);
        CHECK(std::fabs(dot22(apply_J(3, v), apply_J(3, w)) + dot22(v, w)) < 1e-12);
    }
}

TEST_CASE("pseudo-orthonormal quadruple from a unit vector") {
    for (int i = 0; i < 100; ++i) {
        Vec4 r = random_unit();
        REQUIRE(std::fabs(dot22(r, r) - 1.0) < 1e-12);
        Vec4 q[4] = {r, apply_J(1, r), apply_J(2, r), apply_J(3, r)};
        double norms[4] = {1.0, 1.0, -1.0, -1.0};
        for (int a = 0; a < 4; ++a)
            for (int b = 0; b < 4; ++b) {
                double want = (a == b) ? norms[a] : 0.0;
                CHECK(std::fabs(dot22(q[a], q[b]) - want) < 1e-12);
            }
    }
}

TEST_CASE("is_indefinite_orthogonal") {
    CHECK(is_indefinite_orthogonal(Mat4::identity(), 1e-12));

    Mat4 s = Mat4::identity();
    s(0, 0) = 2.0;
    CHECK_FALSE(is_indefinite_orthogonal(s, 1e-12));

    // the zero-argument family matrix: rows e1, e2, e4, -e3
    Mat4 A = Mat4::from_rows({1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 0, 1}, {0, 0, -1, 0});
    CHECK(is_indefinite_orthogonal(A, 1e-12));
    CHECK(j1_commutation_sign(A, 1e-12) == 1);
}

TEST_CASE("orthogonal maps preserve dot22") {
    Mat4 A = Mat4::from_rows({1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 0, 1}, {0, 0, -1, 0});
    // a hyperbolic rotation in the (1,3) plane is also in O_2(4)
    double t = 0.8;
    Mat4 H = Mat4::identity();
    H(0, 0) = std::cosh(t); H(0, 2) = std::sinh(t);
    H(2, 0) = std::sinh(t); H(2, 2) = std::cosh(t);
    REQUIRE(is_indefinite_orthogonal(H, 1e-12));
    for (const Mat4& M : {A, H, H*A}) {
        REQUIRE(is_indefinite_orthogonal(M, 1e-10));
        for (int i = 0; i < 100; ++i) {
            Vec4 v = random_vec(), w = random_vec();
            CHECK(std::fabs(dot22(M*v, M*w) - dot22(v, w)) < 1e-10);
        }
    }
}

TEST_CASE("j1_commutation_sign") {
    CHECK(j1_commutation_sign(Mat4::identity()) == 1);
    CHECK(j1_commutation_sign(J_mat(2)) == -1);   // J2 J1 = -J1 J2
    Mat4 d = Mat4::identity();
    d(1, 1) = 2.0; d(2, 2) = 3.0; d(3, 3) = 4.0;
    CHECK_THROWS_WITH_AS(j1_commutation_sign(d),
                         doctest::Contains("not in U_1(2)"), std::runtime_error);
}

TEST_CASE("nullspace3 coordinate rows") {
    Vec4 n = nullspace3({1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 0});
    CHECK(n[0] == 0.0); CHECK(n[1] == 0.0); CHECK(n[2] == 0.0);
    CHECK(std::fabs(n[3]) > 0.0);

    Vec4 m = nullspace3({1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 0, 1});
    CHECK(m[0] == 0.0); CHECK(m[1] == 0.0); CHECK(m[3] == 0.0);
    CHECK(std::fabs(m[2]) > 0.0);
}

TEST_CASE("nullspace3 solves random full-rank systems") {
    for (int i = 0; i < 200; ++i) {
        Vec4 r1 = random_vec(), r2 = random_vec(), r3 = random_vec();
        Vec4 n = nullspace3(r1, r2, r3);
        double sc = max_abs(n);
        REQUIRE(sc > 0.0);
        CHECK(std::fabs(dot4(r1, n)) / sc < 1e-9);
        CHECK(std::fabs(dot4(r2, n)) / sc < 1e-9);
        CHECK(std::fabs(dot4(r3, n)) / sc < 1e-9);
    }
}

TEST_CASE("nullspace3 rejects rank-deficient rows") {
    CHECK_THROWS_WITH_AS(nullspace3({1, 0, 0, 0}, {2, 0, 0, 0}, {0, 0, 1, 0}),
                         doctest::Contains("degenerate tangent plane"),
                         std::runtime_error);
    Vec4 a = random_vec(), b = random_vec();
    CHECK_THROWS_AS(nullspace3(a, b, a + b), std::runtime_error);
}
