#include "hocd/extrapolate.hpp"

#include <algorithm>
#include <cmath>

#include "hocd/error.hpp"

namespace hocd {

namespace {

void require_same_time(double coarse, double fine) {
    if (std::abs(coarse - fine) > 1e-12 * std::max(1.0, std::abs(coarse))) {
        throw ConfigError("extrapolation inputs are at different time levels");
    }
}

void require_halved(const Grid1D& coarse, const Grid1D& fine) {
    if (coarse.a() != fine.a() || coarse.b() != fine.b() || fine.n_cells() != 2 * coarse.n_cells()) {
        throw ConfigError("space-time extrapolation needs the fine grid to halve h on the same interval");
    }
}

// (4/3) f - (1/3) c and (16/15) f - (1/15) c, written as f + (f - c) / d so identical inputs
// come back unchanged bit for bit.
inline double time_combination(double coarse, double fine) { return fine + (fine - coarse) / 3.0; }
inline double spacetime_combination(double coarse, double fine) { return fine + (fine - coarse) / 15.0; }

}  // namespace

Field1D extrapolate_time(const Field1D& coarse, const Field1D& fine) {
    if (!(coarse.grid == fine.grid)) throw ConfigError("time extrapolation needs identical spatial grids");
    require_same_time(coarse.time_level, fine.time_level);
    std::vector<double> v(coarse.values.size());
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = time_combination(coarse.values[i], fine.values[i]);
    return Field1D(coarse.grid, std::move(v), coarse.time_level);
}

Field2D extrapolate_time(const Field2D& coarse, const Field2D& fine) {
    if (!(coarse.grid == fine.grid)) throw ConfigError("time extrapolation needs identical spatial grids");
    require_same_time(coarse.time_level, fine.time_level);
    std::vector<double> v(coarse.values.size());
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = time_combination(coarse.values[i], fine.values[i]);
    return Field2D(coarse.grid, std::move(v), coarse.time_level);
}

Field1D extrapolate_spacetime(const Field1D& coarse, const Field1D& fine) {
    require_halved(coarse.grid, fine.grid);
    require_same_time(coarse.time_level, fine.time_level);
    std::vector<double> v(coarse.values.size());
    for (std::size_t j = 0; j < v.size(); ++j) {
        v[j] = spacetime_combination(coarse.values[j], fine.values[2 * j]);
    }
    return Field1D(coarse.grid, std::move(v), coarse.time_level);
}

Field2D extrapolate_spacetime(const Field2D& coarse, const Field2D& fine) {
    require_halved(coarse.grid.x(), fine.grid.x());
    require_halved(coarse.grid.y(), fine.grid.y());
    require_same_time(coarse.time_level, fine.time_level);
    Field2D out = coarse;
    for (int i = 0; i <= coarse.nx(); ++i) {
        for (int j = 0; j <= coarse.ny(); ++j) {
            out(i, j) = spacetime_combination(coarse(i, j), fine(2 * i, 2 * j));
        }
    }
    return out;
}

}  // namespace hocd
