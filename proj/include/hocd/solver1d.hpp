#pragma once

#include <functional>
#include <span>
#include <vector>

#include "hocd/grid.hpp"
#include "hocd/linalg.hpp"

namespace hocd {

using TimeFunction = std::function<double(double)>;

/// u_t = c u_xx on [a, b] with u(x, 0) = phi(x), u(a, t) = g1(t), u(b, t) = g2(t).
struct HeatProblem1D {
    double c = 1.0;
    SpaceFunction1D phi;
    TimeFunction g1;
    TimeFunction g2;
};

struct SchemeParams1D {
    double c;
    double h;
    double tau;
    double s;  // 6 c tau / h^2
};

/// Assembled 1D compact scheme over the interior unknowns u_1..u_{N-1}:
///
///   (T1 - s T2) u^{k+1} = (T1 + s T2) u^k + F0,   T1 = tridiag(1, 10, 1), T2 = tridiag(1, -2, 1).
struct Stepper1D {
    Grid1D grid;
    SchemeParams1D params;
    Tridiagonal lhs;     // diag 10 + 2s, off 1 - s
    Tridiagonal rhs_op;  // diag 10 - 2s, off 1 + s
    TridiagonalFactor factor;
};

Stepper1D assemble_1d(double c, const Grid1D& grid, double tau);

/// F0: known boundary values moved to the right-hand side. Only the first and last entries are
/// nonzero; with N = 2 both land on the single unknown.
std::vector<double> boundary_rhs_1d(const Stepper1D& stepper, double g1_k, double g1_k1, double g2_k,
                                    double g2_k1);

/// Advances u^k to u^{k+1}; boundary nodes are overwritten from g1, g2 at level k+1.
/// Level k sits at time k * tau.
Field1D step_1d(const Stepper1D& stepper, const Field1D& u_k, const HeatProblem1D& problem, long k);

Field1D solve_1d(const HeatProblem1D& problem, const Grid1D& grid, const TimeGrid& time);

}  // namespace hocd
