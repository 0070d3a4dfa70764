#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "slhelix/params.hpp"
#include "slhelix/pseudolin.hpp"

// One-parameter families A(v) of indefinite orthogonal matrices commuting or
// anticommuting with J1, built row-wise from four scalar functions
// xi, xi1, xi2, xi3 of v, plus the per-case admissibility solve for xi2.

namespace slhelix {

// Scalar function of v with an analytic first derivative. Kinds:
//   constant; polynomial sum c_i v^i; sinusoid a sin(b v + c) + d;
//   sampled (cubic Hermite through solver nodes, used for solved xi2).
class XiFn {
  public:
    enum class Kind : std::uint8_t { Constant, Polynomial, Sinusoid, Sampled };

    static XiFn constant(double value);
    static XiFn polynomial(std::vector<double> coeffs);           // c0 + c1 v + ...
    static XiFn sinusoid(double a, double b, double c, double d); // a sin(b v + c) + d
    static XiFn sampled(double v_min, double step,
                        std::vector<double> values, std::vector<double> derivs);

    double operator()(double v) const;
    double deriv(double v) const;

    Kind kind() const { return kind_; }
    bool is_constant() const;
    const std::vector<double>& coeffs() const { return p_; }

  private:
    XiFn(Kind k, std::vector<double> p) : kind_(k), p_(std::move(p)) {}
    Kind kind_;
    std::vector<double> p_;   // layout depends on kind
    double v_min_ = 0.0, step_ = 0.0;
    std::vector<double> ys_, ds_;
};

struct XiSpec {
    XiFn xi = XiFn::constant(0.0);
    XiFn xi1 = XiFn::constant(0.0);
    XiFn xi2 = XiFn::constant(0.0);
    XiFn xi3 = XiFn::constant(0.0);
    double v_min = 0.0;
    double v_max = 1.0;
};

// A validated family: sign +1 (commuting with J1, cases B=0 and B>0) or
// -1 (anticommuting, case B<0); xi must be constant for B != 0.
struct IsometryFamily {
    XiSpec spec;
    int sign = +1;
    CaseTag tag = CaseTag::B0;

    IsometryFamily(XiSpec s, CaseTag t);   // derives and validates the sign

    void require_in_domain(double v) const;
};

/// The matrix A(xi, xi1, xi2, xi3)(v); rows
///   r1 = (cosh xi1 cos xi2, -cosh xi1 sin xi2, sinh xi1 cos xi3, -sinh xi1 sin xi3)
///   r2 = sign J1 r1
///   r3 = cos xi J2 r1 + sin xi J3 r1
///   r4 = -sign cos xi J3 r1 + sign sin xi J2 r1.
Mat4 build_A(const IsometryFamily& fam, double v);

/// dA/dv, analytic (every XiFn carries its derivative).
Mat4 build_A_deriv(const IsometryFamily& fam, double v);

/// Left-hand side of the case's admissibility constraint at v; zero iff the
/// family is admissible there. Throws std::invalid_argument on a case
/// mismatch between the family and params.
double admissibility_residual(const IsometryFamily& fam, double v,
                              const ModelParams& params);

struct VGrid {
    double v_min = 0.0;
    double v_max = 1.0;
    int nodes = 1001;   // RK4 step = spacing; default 1e-3 of the length
};

/// Solves the admissibility constraint for xi2 as an initial-value problem
/// (classical RK4 on the grid, cubic Hermite between nodes) and returns the
/// resulting family. xi must be constant for B != 0. Throws
/// std::runtime_error("singular constraint") when the coefficient of xi2'
/// falls below 1e-8 in magnitude anywhere on the grid.
IsometryFamily solve_admissible(CaseTag tag, const ModelParams& params,
                                const XiFn& xi, const XiFn& xi1, const XiFn& xi3,
                                double xi2_initial, const VGrid& grid);

} // namespace slhelix
