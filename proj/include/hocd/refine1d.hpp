#pragma once

#include <vector>

#include "hocd/grid.hpp"

namespace hocd {

/// Nodal derivative approximations P_j, defined for j = 1..N-1 only.
class GradientField1D {
public:
    GradientField1D(Grid1D grid, std::vector<double> values, double time_level);

    const Grid1D& grid() const noexcept { return grid_; }
    double time_level() const noexcept { return time_; }
    int first() const noexcept { return 1; }
    int last() const noexcept { return grid_.n_cells() - 1; }
    /// Throws IndexError outside first()..last().
    double at(int j) const;

private:
    Grid1D grid_;
    std::vector<double> values_;  // indexed by node, entries 0 and N unused
    double time_;
};

/// Values at x_{j+1/2} for j = 1..N-2.
class RefinedField1D {
public:
    RefinedField1D(Grid1D grid, std::vector<double> mid_values, double time_level);

    const Grid1D& grid() const noexcept { return grid_; }
    double time_level() const noexcept { return time_; }
    int first() const noexcept { return 1; }
    int last() const noexcept { return grid_.n_cells() - 2; }
    double at(int j) const;
    double coordinate(int j) const { return grid_.midpoint(j); }

private:
    Grid1D grid_;
    std::vector<double> mid_;  // indexed by j, entries 0 and N-1 unused
    double time_;
};

inline constexpr int kMinCellsRefine1D = 4;

/// Collocation gradient:
///   P_j     = (8u_{j+1} - 8u_{j-1} + u_{j-2} - u_{j+2}) / (12h),  j = 2..N-2
///   P_1     = (-2g1 - 3u_1 + 6u_2 - u_3) / (6h)
///   P_{N-1} = (2g2 + 3u_{N-1} - 6u_{N-2} + u_{N-3}) / (6h)
GradientField1D gradient_1d(const Field1D& u, double g1_t, double g2_t);

/// Cubic Hermite interpolant evaluated at the midpoint of [x_j, x_j + h].
inline double hermite_midpoint(double u_j, double u_j1, double p_j, double p_j1, double h) {
    return 0.5 * (u_j + u_j1) + 0.125 * h * (p_j - p_j1);
}

/// Midpoint refinement from gradient_1d. In the interior this collapses to the weights
/// (1, -9, 56, 56, -9, 1) / 96 on u_{j-2}..u_{j+3}.
RefinedField1D refine_1d(const Field1D& u, double g1_t, double g2_t);
RefinedField1D refine_1d(const Field1D& u, const GradientField1D& p);

}  // namespace hocd
