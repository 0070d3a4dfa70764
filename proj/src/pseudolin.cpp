#include "slhelix/pseudolin.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace slhelix {

Mat4 Mat4::identity() {
    Mat4 r;
    for (int i = 0; i < 4; ++i) r(i, i) = 1.0;
    return r;
}

Mat4 Mat4::from_rows(const Vec4& r1, const Vec4& r2, const Vec4& r3, const Vec4& r4) {
    Mat4 out;
    const Vec4* rows[4] = {&r1, &r2, &r3, &r4};
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) out(i, j) = (*rows[i])[j];
    return out;
}

Vec4 Mat4::operator*(const Vec4& v) const {
    Vec4 out;
    for (int i = 0; i < 4; ++i) {
        double s = 0.0;
        for (int j = 0; j < 4; ++j) s += (*this)(i, j) * v[j];
        out[i] = s;
    }
    return out;
}

Mat4 Mat4::operator*(const Mat4& o) const {
    Mat4 out;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) {
            double s = 0.0;
            for (int k = 0; k < 4; ++k) s += (*this)(i, k) * o(k, j);
            out(i, j) = s;
        }
    return out;
}

Mat4 Mat4::operator+(const Mat4& o) const {
    Mat4 out;
    for (int i = 0; i < 16; ++i) out.m[i] = m[i] + o.m[i];
    return out;
}

Mat4 Mat4::operator-(const Mat4& o) const {
    Mat4 out;
    for (int i = 0; i < 16; ++i) out.m[i] = m[i] - o.m[i];
    return out;
}

Mat4 Mat4::operator*(double s) const {
    Mat4 out;
    for (int i = 0; i < 16; ++i) out.m[i] = m[i] * s;
    return out;
}

double dot22(const Vec4& v, const Vec4& w) {
    return v[0]*w[0] + v[1]*w[1] - v[2]*w[2] - v[3]*w[3];
}

double dot4(const Vec4& v, const Vec4& w) {
    return v[0]*w[0] + v[1]*w[1] + v[2]*w[2] + v[3]*w[3];
}

double max_abs(const Vec4& v) {
    double m = 0.0;
    for (int i = 0; i < 4; ++i) m = std::max(m, std::fabs(v[i]));
    return m;
}

double max_abs(const Mat4& mat) {
    double m = 0.0;
    for (double x : mat.m) m = std::max(m, std::fabs(x));
    return m;
}

namespace {

Mat4 make_J1() {
    Mat4 J;
    J(0, 1) = -1.0; J(1, 0) = 1.0;
    J(2, 3) = -1.0; J(3, 2) = 1.0;
    return J;
}

Mat4 make_J2() {
    Mat4 J;
    J(0, 3) = 1.0; J(1, 2) = 1.0; J(2, 1) = 1.0; J(3, 0) = 1.0;
    return J;
}

Mat4 make_J3() {
    Mat4 J;
    J(0, 2) = 1.0; J(1, 3) = -1.0; J(2, 0) = 1.0; J(3, 1) = -1.0;
    return J;
}

Mat4 make_eps() {
    Mat4 e;
    e(0, 0) = 1.0; e(1, 1) = 1.0; e(2, 2) = -1.0; e(3, 3) = -1.0;
    return e;
}

} // namespace

const Mat4& J_mat(int k) {
    static const Mat4 J1 = make_J1(), J2 = make_J2(), J3 = make_J3();
    switch (k) {
        case 1: return J1;
        case 2: return J2;
        case 3: return J3;
        default: throw std::invalid_argument("apply_J: k must be 1, 2 or 3");
    }
}

Vec4 apply_J(int k, const Vec4& v) {
    switch (k) {
        case 1: return {-v[1], v[0], -v[3], v[2]};
        case 2: return {v[3], v[2], v[1], v[0]};
        case 3: return {v[2], -v[3], v[0], -v[1]};
        default: throw std::invalid_argument("apply_J: k must be 1, 2 or 3");
    }
}

const Mat4& epsilon_mat() {
    static const Mat4 e = make_eps();
    return e;
}

bool is_indefinite_orthogonal(const Mat4& M, double tol) {
    // M^t eps M - eps, written with column dot products:
    // (M^t eps M)_{ij} = <col_i, col_j>_{2,2}.
    double worst = 0.0;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) {
            double s = M(0, i)*M(0, j) + M(1, i)*M(1, j) - M(2, i)*M(2, j) - M(3, i)*M(3, j);
            double target = (i == j) ? (i < 2 ? 1.0 : -1.0) : 0.0;
            worst = std::max(worst, std::fabs(s - target));
        }
    return worst <= tol;
}

int j1_commutation_sign(const Mat4& M, double tol) {
    const Mat4& J1 = J_mat(1);
    Mat4 MJ = M * J1;
    Mat4 JM = J1 * M;
    if (max_abs(MJ - JM) <= tol) return +1;
    if (max_abs(MJ + JM) <= tol) return -1;
    throw std::runtime_error("not in U_1(2): neither J1-commuting nor anticommuting");
}

Vec4 nullspace3(const Vec4& c1, const Vec4& c2, const Vec4& c3, double rel_pivot_tol) {
    double M[3][4];
    const Vec4* rows[3] = {&c1, &c2, &c3};
    double scale = 0.0;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 4; ++j) {
            M[i][j] = (*rows[i])[j];
            scale = std::max(scale, std::fabs(M[i][j]));
        }
    if (scale == 0.0) throw std::runtime_error("degenerate tangent plane");

    int piv_col[3] = {-1, -1, -1};
    int r = 0;
    for (int c = 0; c < 4 && r < 3; ++c) {
        int imax = r;
        for (int i = r + 1; i < 3; ++i)
            if (std::fabs(M[i][c]) > std::fabs(M[imax][c])) imax = i;
        if (std::fabs(M[imax][c]) < rel_pivot_tol * scale) continue;
        std::swap_ranges(M[r], M[r] + 4, M[imax]);
        double inv = 1.0 / M[r][c];
        for (int j = 0; j < 4; ++j) M[r][j] *= inv;
        for (int i = 0; i < 3; ++i) {
            if (i == r) continue;
            double f = M[i][c];
            for (int j = 0; j < 4; ++j) M[i][j] -= f * M[r][j];
        }
        piv_col[r] = c;
        ++r;
    }
    if (r < 3) throw std::runtime_error("degenerate tangent plane");

    int free_col = 0;
    for (int c = 0; c < 4; ++c)
        if (c != piv_col[0] && c != piv_col[1] && c != piv_col[2]) free_col = c;

    Vec4 n;
    n[free_col] = 1.0;
    for (int i = 0; i < 3; ++i) n[piv_col[i]] = -M[i][free_col];
    return n;
}

} // namespace slhelix
