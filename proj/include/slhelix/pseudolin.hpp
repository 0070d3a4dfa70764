#pragma once

#include <array>
#include <cstddef>

// Linear algebra of the pseudo-Euclidean space R^4_2, signature (+,+,-,-).
// Everything here is value-semantic and thread-safe.

namespace slhelix {

struct Vec4 {
    std::array<double, 4> c{0.0, 0.0, 0.0, 0.0};

    Vec4() = default;
    Vec4(double a, double b, double d, double e) : c{a, b, d, e} {}

    double& operator[](std::size_t i) { return c[i]; }
    double operator[](std::size_t i) const { return c[i]; }

    Vec4 operator+(const Vec4& o) const { return {c[0]+o.c[0], c[1]+o.c[1], c[2]+o.c[2], c[3]+o.c[3]}; }
    Vec4 operator-(const Vec4& o) const { return {c[0]-o.c[0], c[1]-o.c[1], c[2]-o.c[2], c[3]-o.c[3]}; }
    Vec4 operator-() const { return {-c[0], -c[1], -c[2], -c[3]}; }
    Vec4 operator*(double s) const { return {c[0]*s, c[1]*s, c[2]*s, c[3]*s}; }
    Vec4& operator+=(const Vec4& o) { for (int i = 0; i < 4; ++i) c[i] += o.c[i]; return *this; }
};

inline Vec4 operator*(double s, const Vec4& v) { return v * s; }

// Row-major 4x4 linear map on R^4_2.
struct Mat4 {
    std::array<double, 16> m{};

    double& operator()(std::size_t r, std::size_t c) { return m[4*r + c]; }
    double operator()(std::size_t r, std::size_t c) const { return m[4*r + c]; }

    static Mat4 identity();
    static Mat4 from_rows(const Vec4& r1, const Vec4& r2, const Vec4& r3, const Vec4& r4);

    Vec4 row(std::size_t r) const { return {m[4*r], m[4*r+1], m[4*r+2], m[4*r+3]}; }

    Vec4 operator*(const Vec4& v) const;
    Mat4 operator*(const Mat4& o) const;
    Mat4 operator+(const Mat4& o) const;
    Mat4 operator-(const Mat4& o) const;
    Mat4 operator*(double s) const;
};

/// Indefinite inner product <v,w> = v1 w1 + v2 w2 - v3 w3 - v4 w4.
double dot22(const Vec4& v, const Vec4& w);

/// Euclidean dot product (used for frame-component arithmetic).
double dot4(const Vec4& v, const Vec4& w);

double max_abs(const Vec4& v);
double max_abs(const Mat4& m);

/// The product structures J1 (complex structure, blockdiag(J,J)), J2, J3 of R^4_2.
const Mat4& J_mat(int k);

/// J_k v for k in {1,2,3}; throws std::invalid_argument on any other k.
Vec4 apply_J(int k, const Vec4& v);

/// diag(1,1,-1,-1).
const Mat4& epsilon_mat();

/// True iff ||M^t eps M - eps||_max <= tol, i.e. M preserves dot22.
bool is_indefinite_orthogonal(const Mat4& M, double tol = 1e-10);

/// +1 if M J1 = J1 M within tol, -1 if M J1 = -J1 M within tol.
/// Throws std::runtime_error("not in U_1(2)") if neither holds.
int j1_commutation_sign(const Mat4& M, double tol = 1e-10);

/// Nonzero n with c_i . n = 0 (Euclidean rows) for the three constraint rows,
/// by Gaussian elimination with partial pivoting. Not normalized.
/// Throws std::runtime_error("degenerate tangent plane") when the row rank
/// drops below 3 (pivot below rel_pivot_tol * scale).
Vec4 nullspace3(const Vec4& c1, const Vec4& c2, const Vec4& c3,
                double rel_pivot_tol = 1e-10);

} // namespace slhelix
