#pragma once

#include <cstddef>
#include <functional>
#include <vector>

namespace hocd {

/// Uniform partition of [a, b] into n_cells intervals.
///
/// Node i sits at a + i*h for i = 0..n_cells; node n_cells is pinned to b.
class Grid1D {
public:
    Grid1D(double a, double b, int n_cells);

    double a() const noexcept { return a_; }
    double b() const noexcept { return b_; }
    int n_cells() const noexcept { return n_; }
    double h() const noexcept { return h_; }
    std::size_t n_nodes() const noexcept { return static_cast<std::size_t>(n_) + 1; }

    /// Coordinate of node i; throws IndexError outside 0..N.
    double node(int i) const;
    /// Coordinate of x_{j+1/2}; throws IndexError outside 0..N-1.
    double midpoint(int j) const;

    bool operator==(const Grid1D&) const = default;

private:
    double a_;
    double b_;
    int n_;
    double h_;
};

/// Uniform partition of [0, T] into n_steps levels of size tau = T / M.
class TimeGrid {
public:
    TimeGrid(double t_end, long n_steps);

    /// Builds the grid whose step is closest to `tau`; rejects steps that do not divide T.
    static TimeGrid from_step(double t_end, double tau);

    double t_end() const noexcept { return t_end_; }
    long n_steps() const noexcept { return m_; }
    double tau() const noexcept { return tau_; }
    double time(long k) const noexcept { return static_cast<double>(k) * tau_; }

private:
    double t_end_;
    long m_;
    double tau_;
};

/// Tensor-product grid; x spacing may differ from y spacing.
class Grid2D {
public:
    Grid2D(Grid1D x_axis, Grid1D y_axis) : x_(x_axis), y_(y_axis) {}

    /// Unit square with N cells per axis.
    static Grid2D unit_square(int n_cells) { return {Grid1D(0.0, 1.0, n_cells), Grid1D(0.0, 1.0, n_cells)}; }

    const Grid1D& x() const noexcept { return x_; }
    const Grid1D& y() const noexcept { return y_; }
    bool is_square() const noexcept { return x_.n_cells() == y_.n_cells() && x_.h() == y_.h(); }

    bool operator==(const Grid2D&) const = default;

private:
    Grid1D x_;
    Grid1D y_;
};

inline double node_coordinate(const Grid1D& grid, int i) { return grid.node(i); }
inline double midpoint_coordinate(const Grid1D& grid, int j) { return grid.midpoint(j); }

/// Nodal values u_0..u_N at one time level.
struct Field1D {
    Grid1D grid;
    std::vector<double> values;
    double time_level = 0.0;

    Field1D(Grid1D g, std::vector<double> v, double t);

    int n_cells() const noexcept { return grid.n_cells(); }
    double operator[](std::size_t i) const { return values[i]; }
};

/// Nodal values u_{ij} at one time level.
///
/// Storage is row-major with the x index as the row: values[i * (Ny + 1) + j] holds u(x_i, y_j).
struct Field2D {
    Grid2D grid;
    std::vector<double> values;
    double time_level = 0.0;

    Field2D(Grid2D g, std::vector<double> v, double t);

    int nx() const noexcept { return grid.x().n_cells(); }
    int ny() const noexcept { return grid.y().n_cells(); }
    std::size_t index(int i, int j) const noexcept {
        return static_cast<std::size_t>(i) * static_cast<std::size_t>(ny() + 1) + static_cast<std::size_t>(j);
    }
    double operator()(int i, int j) const noexcept { return values[index(i, j)]; }
    double& operator()(int i, int j) noexcept { return values[index(i, j)]; }
};

using SpaceFunction1D = std::function<double(double)>;
using SpaceFunction2D = std::function<double(double, double)>;

/// Samples f at every node; time_level is 0. Throws DataError naming the node on a non-finite value.
Field1D sample_function(const Grid1D& grid, const SpaceFunction1D& f);
Field2D sample_function(const Grid2D& grid, const SpaceFunction2D& f);

}  // namespace hocd
