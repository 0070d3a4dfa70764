#include "slhelix/isofam.hpp"

#include <cmath>
#include <stdexcept>

namespace slhelix {

// ---------------------------------------------------------------- XiFn

XiFn XiFn::constant(double value) { return XiFn(Kind::Constant, {value}); }

XiFn XiFn::polynomial(std::vector<double> coeffs) {
    if (coeffs.empty()) coeffs.push_back(0.0);
    return XiFn(Kind::Polynomial, std::move(coeffs));
}

XiFn XiFn::sinusoid(double a, double b, double c, double d) {
    return XiFn(Kind::Sinusoid, {a, b, c, d});
}

XiFn XiFn::sampled(double v_min, double step,
                   std::vector<double> values, std::vector<double> derivs) {
    if (values.size() < 2 || values.size() != derivs.size())
        throw std::invalid_argument("sampled XiFn needs matching value/derivative nodes");
    XiFn f(Kind::Sampled, {});
    f.v_min_ = v_min;
    f.step_ = step;
    f.ys_ = std::move(values);
    f.ds_ = std::move(derivs);
    return f;
}

namespace {

// cubic Hermite basis on [0,1]
inline double h00(double t) { return (1.0 + 2.0*t) * (1.0-t) * (1.0-t); }
inline double h10(double t) { return t * (1.0-t) * (1.0-t); }
inline double h01(double t) { return t * t * (3.0 - 2.0*t); }
inline double h11(double t) { return t * t * (t - 1.0); }

inline double dh00(double t) { return 6.0*t*t - 6.0*t; }
inline double dh10(double t) { return 3.0*t*t - 4.0*t + 1.0; }
inline double dh01(double t) { return -6.0*t*t + 6.0*t; }
inline double dh11(double t) { return 3.0*t*t - 2.0*t; }

} // namespace

double XiFn::operator()(double v) const {
    switch (kind_) {
        case Kind::Constant: return p_[0];
        case Kind::Polynomial: {
            double s = 0.0;
            for (std::size_t i = p_.size(); i-- > 0;) s = s*v + p_[i];
            return s;
        }
        case Kind::Sinusoid: return p_[0]*std::sin(p_[1]*v + p_[2]) + p_[3];
        case Kind::Sampled: {
            double t = (v - v_min_) / step_;
            long i = static_cast<long>(std::floor(t));
            if (i < 0) i = 0;
            if (i > static_cast<long>(ys_.size()) - 2) i = static_cast<long>(ys_.size()) - 2;
            t -= static_cast<double>(i);
            return h00(t)*ys_[i] + h10(t)*step_*ds_[i] + h01(t)*ys_[i+1] + h11(t)*step_*ds_[i+1];
        }
    }
    return 0.0;
}

double XiFn::deriv(double v) const {
    switch (kind_) {
        case Kind::Constant: return 0.0;
        case Kind::Polynomial: {
            double s = 0.0;
            for (std::size_t i = p_.size(); i-- > 1;) s = s*v + p_[i] * static_cast<double>(i);
            return s;
        }
        case Kind::Sinusoid: return p_[0]*p_[1]*std::cos(p_[1]*v + p_[2]);
        case Kind::Sampled: {
            double t = (v - v_min_) / step_;
            long i = static_cast<long>(std::floor(t));
            if (i < 0) i = 0;
            if (i > static_cast<long>(ys_.size()) - 2) i = static_cast<long>(ys_.size()) - 2;
            t -= static_cast<double>(i);
            return (dh00(t)*ys_[i] + dh01(t)*ys_[i+1]) / step_
                   + dh10(t)*ds_[i] + dh11(t)*ds_[i+1];
        }
    }
    return 0.0;
}

bool XiFn::is_constant() const {
    switch (kind_) {
        case Kind::Constant: return true;
        case Kind::Polynomial: {
            for (std::size_t i = 1; i < p_.size(); ++i)
                if (p_[i] != 0.0) return false;
            return true;
        }
        case Kind::Sinusoid: return p_[0] == 0.0 || p_[1] == 0.0;
        case Kind::Sampled: return false;
    }
    return false;
}

// ------------------------------------------------------- IsometryFamily

IsometryFamily::IsometryFamily(XiSpec s, CaseTag t) : spec(std::move(s)), tag(t) {
    sign = (tag == CaseTag::BNeg) ? -1 : +1;
    if (tag != CaseTag::B0 && !spec.xi.is_constant())
        throw std::invalid_argument("xi must be constant for B != 0 families");
    if (!(spec.v_min < spec.v_max))
        throw std::invalid_argument("empty family domain");
}

void IsometryFamily::require_in_domain(double v) const {
    double slack = 1e-9 * (1.0 + spec.v_max - spec.v_min);
    if (v < spec.v_min - slack || v > spec.v_max + slack)
        throw std::out_of_range("v outside the family domain");
}

namespace {

Vec4 first_row(double x1, double x2, double x3) {
    return {std::cosh(x1)*std::cos(x2), -std::cosh(x1)*std::sin(x2),
            std::sinh(x1)*std::cos(x3), -std::sinh(x1)*std::sin(x3)};
}

Vec4 first_row_deriv(double x1, double x2, double x3, double d1, double d2, double d3) {
    return {d1*std::sinh(x1)*std::cos(x2) - d2*std::cosh(x1)*std::sin(x2),
            -d1*std::sinh(x1)*std::sin(x2) - d2*std::cosh(x1)*std::cos(x2),
            d1*std::cosh(x1)*std::cos(x3) - d3*std::sinh(x1)*std::sin(x3),
            -d1*std::cosh(x1)*std::sin(x3) - d3*std::sinh(x1)*std::cos(x3)};
}

} // namespace

Mat4 build_A(const IsometryFamily& fam, double v) {
    fam.require_in_domain(v);
    double xi = fam.spec.xi(v);
    Vec4 r1 = first_row(fam.spec.xi1(v), fam.spec.xi2(v), fam.spec.xi3(v));
    double s = fam.sign;
    Vec4 j2r = apply_J(2, r1), j3r = apply_J(3, r1);
    Vec4 r2 = s * apply_J(1, r1);
    Vec4 r3 = std::cos(xi)*j2r + std::sin(xi)*j3r;
    Vec4 r4 = (-s*std::cos(xi))*j3r + (s*std::sin(xi))*j2r;
    return Mat4::from_rows(r1, r2, r3, r4);
}

Mat4 build_A_deriv(const IsometryFamily& fam, double v) {
    fam.require_in_domain(v);
    double xi = fam.spec.xi(v), dxi = fam.spec.xi.deriv(v);
    double x1 = fam.spec.xi1(v), x2 = fam.spec.xi2(v), x3 = fam.spec.xi3(v);
    double d1 = fam.spec.xi1.deriv(v), d2 = fam.spec.xi2.deriv(v), d3 = fam.spec.xi3.deriv(v);
    Vec4 r1 = first_row(x1, x2, x3);
    Vec4 r1p = first_row_deriv(x1, x2, x3, d1, d2, d3);
    double s = fam.sign;
    double cx = std::cos(xi), sx = std::sin(xi);
    Vec4 j2r = apply_J(2, r1), j3r = apply_J(3, r1);
    Vec4 j2rp = apply_J(2, r1p), j3rp = apply_J(3, r1p);
    Vec4 row2 = s * apply_J(1, r1p);
    Vec4 row3 = cx*j2rp + sx*j3rp + dxi*(-sx*j2r + cx*j3r);
    Vec4 row4 = (-s*cx)*j3rp + (s*sx)*j2rp + (s*dxi)*(sx*j3r + cx*j2r);
    return Mat4::from_rows(r1p, row2, row3, row4);
}

// ----------------------------------------------------- admissibility

namespace {

struct XiState {
    double xi, x1, x2, x3;
    double dxi, d1, d2, d3;
};

// Constraint LHS split as coef * xi2' + rest, so the same code serves the
// residual and the IVP right-hand side.
void constraint_parts(CaseTag tag, const ModelParams& P, const XiState& s,
                      double& coef, double& rest) {
    switch (tag) {
        case CaseTag::BPos: {
            double ch = std::cosh(s.x1), sh = std::sinh(s.x1);
            coef = ch*ch;
            rest = sh*sh * s.d3;
            return;
        }
        case CaseTag::BNeg: {
            double ch = std::cosh(s.x1), sh = std::sinh(s.x1);
            double s23 = std::sin(s.x2 - s.x3), c23 = std::cos(s.x2 - s.x3);
            double sh2 = std::sinh(2.0*s.x1);
            double k = 2.0 * P.tau * P.cos_theta;
            coef = P.sin_theta * s23 * sh2 - k * ch*ch;
            rest = P.sin_theta * (2.0*c23*s.d1 + s.d3*s23*sh2) - k * sh*sh * s.d3;
            return;
        }
        case CaseTag::B0: {
            double ch = std::cosh(s.x1), sh = std::sinh(s.x1);
            double s23 = std::sin(s.x2 - s.x3), c23 = std::cos(s.x2 - s.x3);
            double sh2 = std::sinh(2.0*s.x1);
            coef = s23*sh2 + 2.0*ch*ch;
            rest = (s.d3 - s.dxi)*s23*sh2 - 2.0*(s.dxi - s.d3)*sh*sh + 2.0*s.d1*c23;
            return;
        }
    }
    coef = 0.0;
    rest = 0.0;
}

} // namespace

double admissibility_residual(const IsometryFamily& fam, double v,
                              const ModelParams& params) {
    if (fam.tag != params.tag)
        throw std::invalid_argument("family case tag does not match the parameters");
    XiState s{fam.spec.xi(v), fam.spec.xi1(v), fam.spec.xi2(v), fam.spec.xi3(v),
              fam.spec.xi.deriv(v), fam.spec.xi1.deriv(v), fam.spec.xi2.deriv(v),
              fam.spec.xi3.deriv(v)};
    double coef, rest;
    constraint_parts(fam.tag, params, s, coef, rest);
    return coef * s.d2 + rest;
}

IsometryFamily solve_admissible(CaseTag tag, const ModelParams& params,
                                const XiFn& xi, const XiFn& xi1, const XiFn& xi3,
                                double xi2_initial, const VGrid& grid) {
    if (tag != params.tag)
        throw std::invalid_argument("requested case tag does not match the parameters");
    if (tag != CaseTag::B0 && !xi.is_constant())
        throw std::invalid_argument("xi must be constant for B != 0 families");
    if (grid.nodes < 2 || !(grid.v_min < grid.v_max))
        throw std::invalid_argument("solve_admissible: bad grid");

    const int n = grid.nodes;
    const double h = (grid.v_max - grid.v_min) / (n - 1);

    auto rhs = [&](double v, double x2val) {
        XiState s{xi(v), xi1(v), x2val, xi3(v),
                  xi.deriv(v), xi1.deriv(v), 0.0, xi3.deriv(v)};
        double coef, rest;
        constraint_parts(tag, params, s, coef, rest);
        if (std::fabs(coef) < 1e-8)
            throw std::runtime_error("singular constraint: xi2' coefficient vanishes");
        return -rest / coef;
    };

    std::vector<double> ys(n), ds(n);
    double y = xi2_initial;
    for (int i = 0; i < n; ++i) {
        double v = grid.v_min + i*h;
        ys[i] = y;
        ds[i] = rhs(v, y);
        if (i + 1 < n) {
            double k1 = ds[i];
            double k2 = rhs(v + h/2, y + h/2*k1);
            double k3 = rhs(v + h/2, y + h/2*k2);
            double k4 = rhs(v + h, y + h*k3);
            y += h/6.0 * (k1 + 2.0*k2 + 2.0*k3 + k4);
        }
    }

    XiSpec spec;
    spec.xi = xi;
    spec.xi1 = xi1;
    spec.xi2 = XiFn::sampled(grid.v_min, h, std::move(ys), std::move(ds));
    spec.xi3 = xi3;
    spec.v_min = grid.v_min;
    spec.v_max = grid.v_max;
    return IsometryFamily(std::move(spec), tag);
}

} // namespace slhelix
