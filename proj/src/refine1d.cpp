#include "hocd/refine1d.hpp"

#include <string>

#include "hocd/error.hpp"

namespace hocd {

GradientField1D::GradientField1D(Grid1D grid, std::vector<double> values, double time_level)
    : grid_(grid), values_(std::move(values)), time_(time_level) {
    if (values_.size() != grid_.n_nodes()) throw SizeError("gradient field size does not match its grid");
}

double GradientField1D::at(int j) const {
    if (j < first() || j > last()) {
        throw IndexError("gradient index " + std::to_string(j) + " outside 1.." + std::to_string(last()));
    }
    return values_[static_cast<std::size_t>(j)];
}

RefinedField1D::RefinedField1D(Grid1D grid, std::vector<double> mid_values, double time_level)
    : grid_(grid), mid_(std::move(mid_values)), time_(time_level) {
    if (mid_.size() != static_cast<std::size_t>(grid_.n_cells())) {
        throw SizeError("refined field size does not match its grid");
    }
}

double RefinedField1D::at(int j) const {
    if (j < first() || j > last()) {
        throw IndexError("midpoint index " + std::to_string(j) + " outside 1.." + std::to_string(last()));
    }
    return mid_[static_cast<std::size_t>(j)];
}

namespace {

void require_cells(const Grid1D& grid) {
    if (grid.n_cells() < kMinCellsRefine1D) {
        throw SizeError("1D gradient/refinement needs at least " + std::to_string(kMinCellsRefine1D) +
                        " cells, got " + std::to_string(grid.n_cells()));
    }
}

}  // namespace

GradientField1D gradient_1d(const Field1D& u, double g1_t, double g2_t) {
    require_cells(u.grid);
    const int n = u.n_cells();
    const double h = u.grid.h();
    const auto& v = u.values;
    std::vector<double> p(v.size(), 0.0);
    for (int j = 2; j <= n - 2; ++j) {
        p[j] = (8.0 * v[j + 1] - 8.0 * v[j - 1] + v[j - 2] - v[j + 2]) / (12.0 * h);
    }
    p[1] = (-2.0 * g1_t - 3.0 * v[1] + 6.0 * v[2] - v[3]) / (6.0 * h);
    p[n - 1] = (2.0 * g2_t + 3.0 * v[n - 1] - 6.0 * v[n - 2] + v[n - 3]) / (6.0 * h);
    return GradientField1D(u.grid, std::move(p), u.time_level);
}

RefinedField1D refine_1d(const Field1D& u, const GradientField1D& p) {
    require_cells(u.grid);
    if (!(p.grid() == u.grid)) throw ConfigError("gradient grid does not match the field grid");
    const int n = u.n_cells();
    const double h = u.grid.h();
    std::vector<double> mid(static_cast<std::size_t>(n), 0.0);
    for (int j = 1; j <= n - 2; ++j) {
        mid[j] = hermite_midpoint(u.values[j], u.values[j + 1], p.at(j), p.at(j + 1), h);
    }
    return RefinedField1D(u.grid, std::move(mid), u.time_level);
}

RefinedField1D refine_1d(const Field1D& u, double g1_t, double g2_t) {
    return refine_1d(u, gradient_1d(u, g1_t, g2_t));
}

}  // namespace hocd
