#pragma once

#include <functional>
#include <vector>

#include "hocd/grid.hpp"
#include "hocd/kernels.hpp"
#include "hocd/linalg.hpp"

namespace hocd {

using EdgeFunction = std::function<double(double, double)>;  // (coordinate along edge, t)

/// u_t = u_xx + u_yy on [a, b] x [c, d].
///
/// g1 on x = a and g2 on x = b take (y, t); g3 on y = c and g4 on y = d take (x, t).
struct HeatProblem2D {
    SpaceFunction2D phi;
    EdgeFunction g1;
    EdgeFunction g2;
    EdgeFunction g3;
    EdgeFunction g4;
};

/// Assembled 2D compact scheme for a square grid, unknowns stacked by y-rows:
/// v[(j - 1) * (N - 1) + (i - 1)] = u_{ij}.
///
///   A1 = tridiag((1-8r)/12, (2+10r)/3, (1-8r)/12)   A2 = tridiag((1+8r)/12, (2-10r)/3, (1+8r)/12)
///   B1 = tridiag(r/6, (8r-1)/12, r/6)               B2 = tridiag(r/6, (8r+1)/12, r/6)
///
/// lhs has A1 on the block diagonal and -B1 off it; rhs_op has A2 and +B2.
struct Stepper2D {
    Grid2D grid;
    double tau;
    double r;  // tau / (2 h^2)
    int n;     // interior unknowns per axis, N - 1
    BlockTridiagonal lhs;
    BlockTridiagonal rhs_op;
    BlockTridiagonalFactor factor;
};

/// Throws ConfigError unless the grid is square with equal spacing.
Stepper2D assemble_2d(const Grid2D& grid, double tau);

/// Edge values at one time level. left/right are indexed by j = 0..N (y nodes) and include the
/// corners; bottom/top are indexed by i = 0..N (x nodes).
struct BoundarySamples2D {
    std::vector<double> left;
    std::vector<double> right;
    std::vector<double> bottom;
    std::vector<double> top;
};

BoundarySamples2D sample_boundary(const HeatProblem2D& problem, const Grid2D& grid, double t);

/// Sum of the U_h^{n+1}, U_h^n, B1 u_{h0/hN}^{n+1} and B2 u_{h0/hN}^n contributions.
/// Corner values enter only through the left/right vectors.
std::vector<double> boundary_rhs_2d(const Stepper2D& stepper, const BoundarySamples2D& level_k,
                                    const BoundarySamples2D& level_k1);

/// Writes boundary samples onto the edges of a field: x-edges (with corners) from left/right,
/// y-edges from bottom/top.
void impose_boundary(Field2D& u, const BoundarySamples2D& edges);

Field2D step_2d(const Stepper2D& stepper, const Field2D& u_k, const HeatProblem2D& problem, long k,
                Exec exec = Exec::Serial);

Field2D solve_2d(const HeatProblem2D& problem, const Grid2D& grid, const TimeGrid& time,
                 Exec exec = Exec::Serial);

}  // namespace hocd
