#include "hocd/grid.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "hocd/error.hpp"

namespace hocd {

Grid1D::Grid1D(double a, double b, int n_cells) : a_(a), b_(b), n_(n_cells), h_(0.0) {
    if (n_cells < 2) {
        throw SizeError("Grid1D needs at least 2 cells, got " + std::to_string(n_cells));
    }
    if (!(std::isfinite(a) && std::isfinite(b) && b > a)) {
        throw ConfigError("Grid1D needs finite endpoints with a < b");
    }
    h_ = (b - a) / n_cells;
}

double Grid1D::node(int i) const {
    if (i < 0 || i > n_) {
        throw IndexError("node index " + std::to_string(i) + " outside 0.." + std::to_string(n_));
    }
    if (i == n_) {
        return b_;
    }
    return a_ + i * h_;
}

double Grid1D::midpoint(int j) const {
    if (j < 0 || j >= n_) {
        throw IndexError("midpoint index " + std::to_string(j) + " outside 0.." + std::to_string(n_ - 1));
    }
    return a_ + (j + 0.5) * h_;
}

TimeGrid::TimeGrid(double t_end, long n_steps) : t_end_(t_end), m_(n_steps), tau_(0.0) {
    if (!(t_end > 0.0) || !std::isfinite(t_end)) {
        throw ConfigError("final time must be positive");
    }
    if (n_steps < 1) {
        throw ConfigError("number of time steps must be positive");
    }
    tau_ = t_end / static_cast<double>(n_steps);
}

TimeGrid TimeGrid::from_step(double t_end, double tau) {
    if (!(tau > 0.0) || !std::isfinite(tau)) {
        throw ConfigError("time step must be positive");
    }
    const double steps = t_end / tau;
    const long m = std::lround(steps);
    if (m < 1 || std::abs(steps - static_cast<double>(m)) > 1e-9 * std::max(1.0, steps)) {
        throw ConfigError("time step " + std::to_string(tau) + " does not divide T = " + std::to_string(t_end));
    }
    return TimeGrid(t_end, m);
}

Field1D::Field1D(Grid1D g, std::vector<double> v, double t) : grid(g), values(std::move(v)), time_level(t) {
    if (values.size() != grid.n_nodes()) {
        throw SizeError("Field1D has " + std::to_string(values.size()) + " values, grid has " +
                        std::to_string(grid.n_nodes()) + " nodes");
    }
}

Field2D::Field2D(Grid2D g, std::vector<double> v, double t) : grid(g), values(std::move(v)), time_level(t) {
    if (values.size() != grid.x().n_nodes() * grid.y().n_nodes()) {
        throw SizeError("Field2D value count does not match its grid");
    }
}

Field1D sample_function(const Grid1D& grid, const SpaceFunction1D& f) {
    std::vector<double> v(grid.n_nodes());
    for (int i = 0; i <= grid.n_cells(); ++i) {
        const double x = grid.node(i);
        v[i] = f(x);
        if (!std::isfinite(v[i])) {
            throw DataError("non-finite value at node " + std::to_string(i) + " (x = " + std::to_string(x) + ")");
        }
    }
    return Field1D(grid, std::move(v), 0.0);
}

Field2D sample_function(const Grid2D& grid, const SpaceFunction2D& f) {
    Field2D u(grid, std::vector<double>(grid.x().n_nodes() * grid.y().n_nodes()), 0.0);
    for (int i = 0; i <= grid.x().n_cells(); ++i) {
        const double x = grid.x().node(i);
        for (int j = 0; j <= grid.y().n_cells(); ++j) {
            const double y = grid.y().node(j);
            const double value = f(x, y);
            if (!std::isfinite(value)) {
                throw DataError("non-finite value at node (" + std::to_string(i) + ", " + std::to_string(j) + ")");
            }
            u(i, j) = value;
        }
    }
    return u;
}

}  // namespace hocd
