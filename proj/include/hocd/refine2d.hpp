#pragma once

#include <vector>

#include "hocd/grid.hpp"
#include "hocd/kernels.hpp"

namespace hocd {

inline constexpr int kMinCellsRefine2D = 5;

/// Values on an (Nx+1) x (Ny+1) node lattice that are only valid on an index box.
class BoxedArray2D {
public:
    BoxedArray2D() = default;
    BoxedArray2D(int nx, int ny, int i_first, int i_last, int j_first, int j_last);

    int i_first() const noexcept { return i0_; }
    int i_last() const noexcept { return i1_; }
    int j_first() const noexcept { return j0_; }
    int j_last() const noexcept { return j1_; }
    bool contains(int i, int j) const noexcept { return i >= i0_ && i <= i1_ && j >= j0_ && j <= j1_; }
    bool empty() const noexcept { return i1_ < i0_ || j1_ < j0_; }

    /// Throws IndexError outside the valid box.
    double at(int i, int j) const;
    double& ref(int i, int j) noexcept { return data_[index(i, j)]; }
    double get(int i, int j) const noexcept { return data_[index(i, j)]; }

private:
    std::size_t index(int i, int j) const noexcept {
        return static_cast<std::size_t>(i) * static_cast<std::size_t>(ny_ + 1) + static_cast<std::size_t>(j);
    }
    int nx_ = 0, ny_ = 0;
    int i0_ = 0, i1_ = -1, j0_ = 0, j1_ = -1;
    std::vector<double> data_;
};

/// K_ij ~ u_x on i = 2..N-2, j = 1..N-1 and L_ij ~ u_y on i = 1..N-1, j = 2..N-2.
struct GradientField2D {
    Grid2D grid;
    BoxedArray2D k_values;
    BoxedArray2D l_values;
    double time_level = 0.0;

    double k(int i, int j) const { return k_values.at(i, j); }
    double l(int i, int j) const { return l_values.at(i, j); }
};

/// x_mid(i, j) ~ u(x_{i+1/2}, y_j), y_mid(i, j) ~ u(x_i, y_{j+1/2}),
/// centers(i, j) ~ u(x_{i+1/2}, y_{j+1/2}).
struct RefinedField2D {
    Grid2D grid;
    BoxedArray2D x_mid;    // i = 2..N-3, j = 1..N-1
    BoxedArray2D y_mid;    // i = 1..N-1, j = 2..N-3
    BoxedArray2D centers;  // i, j = 2..N-3
    double time_level = 0.0;
};

/// Throws SizeError when either axis has fewer than kMinCellsRefine2D cells.
GradientField2D gradient_2d(const Field2D& u, Exec exec = Exec::Serial);

struct EdgeMidpoints2D {
    BoxedArray2D x_mid;
    BoxedArray2D y_mid;
};

EdgeMidpoints2D refine_edges_2d(const Field2D& u, const GradientField2D& grads, Exec exec = Exec::Serial);

/// Requires h_x == h_y (ConfigError otherwise).
BoxedArray2D refine_centers_2d(const Field2D& u, const GradientField2D& grads, Exec exec = Exec::Serial);

RefinedField2D refine_2d(const Field2D& u, const GradientField2D& grads, Exec exec = Exec::Serial);

}  // namespace hocd
