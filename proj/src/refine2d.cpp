#include "hocd/refine2d.hpp"

#include <string>

#include "hocd/error.hpp"

namespace hocd {

BoxedArray2D::BoxedArray2D(int nx, int ny, int i_first, int i_last, int j_first, int j_last)
    : nx_(nx), ny_(ny), i0_(i_first), i1_(i_last), j0_(j_first), j1_(j_last),
      data_(static_cast<std::size_t>(nx + 1) * static_cast<std::size_t>(ny + 1), 0.0) {}

double BoxedArray2D::at(int i, int j) const {
    if (!contains(i, j)) {
        throw IndexError("index (" + std::to_string(i) + ", " + std::to_string(j) + ") outside valid range i=" +
                         std::to_string(i0_) + ".." + std::to_string(i1_) + ", j=" + std::to_string(j0_) + ".." +
                         std::to_string(j1_));
    }
    return get(i, j);
}

namespace {

void require_cells(const Grid2D& grid) {
    if (grid.x().n_cells() < kMinCellsRefine2D || grid.y().n_cells() < kMinCellsRefine2D) {
        throw SizeError("2D gradient/refinement needs at least " + std::to_string(kMinCellsRefine2D) +
                        " cells per axis");
    }
}

// Runs body(i) for i in [first, last], serially or with OpenMP.
template <typename Body>
void for_rows(int first, int last, Exec exec, Body&& body) {
    if (exec == Exec::Parallel) {
#pragma omp parallel for schedule(static)
        for (int i = first; i <= last; ++i) body(i);
    } else {
        for (int i = first; i <= last; ++i) body(i);
    }
}

}  // namespace

GradientField2D gradient_2d(const Field2D& u, Exec exec) {
    require_cells(u.grid);
    const int nx = u.nx();
    const int ny = u.ny();
    const double hx = u.grid.x().h();
    const double hy = u.grid.y().h();
    GradientField2D g{u.grid, BoxedArray2D(nx, ny, 2, nx - 2, 1, ny - 1), BoxedArray2D(nx, ny, 1, nx - 1, 2, ny - 2),
                      u.time_level};
    for_rows(2, nx - 2, exec, [&](int i) {
        for (int j = 1; j <= ny - 1; ++j) {
            g.k_values.ref(i, j) = (8.0 * u(i + 1, j) - 8.0 * u(i - 1, j) + u(i - 2, j) - u(i + 2, j)) / (12.0 * hx);
        }
    });
    for_rows(1, nx - 1, exec, [&](int i) {
        for (int j = 2; j <= ny - 2; ++j) {
            g.l_values.ref(i, j) = (8.0 * u(i, j + 1) - 8.0 * u(i, j - 1) + u(i, j - 2) - u(i, j + 2)) / (12.0 * hy);
        }
    });
    return g;
}

EdgeMidpoints2D refine_edges_2d(const Field2D& u, const GradientField2D& grads, Exec exec) {
    require_cells(u.grid);
    if (!(grads.grid == u.grid)) throw ConfigError("gradient grid does not match the field grid");
    const int nx = u.nx();
    const int ny = u.ny();
    const double hx = u.grid.x().h();
    const double hy = u.grid.y().h();
    EdgeMidpoints2D out{BoxedArray2D(nx, ny, 2, nx - 3, 1, ny - 1), BoxedArray2D(nx, ny, 1, nx - 1, 2, ny - 3)};
    const BoxedArray2D& k = grads.k_values;
    const BoxedArray2D& l = grads.l_values;
    for_rows(2, nx - 3, exec, [&](int i) {
        for (int j = 1; j <= ny - 1; ++j) {
            out.x_mid.ref(i, j) = 0.5 * (u(i, j) + u(i + 1, j)) + 0.125 * hx * (k.get(i, j) - k.get(i + 1, j));
        }
    });
    for_rows(1, nx - 1, exec, [&](int i) {
        for (int j = 2; j <= ny - 3; ++j) {
            out.y_mid.ref(i, j) = 0.5 * (u(i, j) + u(i, j + 1)) + 0.125 * hy * (l.get(i, j) - l.get(i, j + 1));
        }
    });
    return out;
}

BoxedArray2D refine_centers_2d(const Field2D& u, const GradientField2D& grads, Exec exec) {
    require_cells(u.grid);
    if (!(grads.grid == u.grid)) throw ConfigError("gradient grid does not match the field grid");
    if (u.grid.x().h() != u.grid.y().h()) throw ConfigError("cell-center refinement needs h_x == h_y");
    const int nx = u.nx();
    const int ny = u.ny();
    const double h = u.grid.x().h();
    const BoxedArray2D& k = grads.k_values;
    const BoxedArray2D& l = grads.l_values;
    BoxedArray2D c(nx, ny, 2, nx - 3, 2, ny - 3);
    for_rows(2, nx - 3, exec, [&](int i) {
        for (int j = 2; j <= ny - 3; ++j) {
            const double avg = 0.25 * (u(i, j) + u(i, j + 1) + u(i + 1, j) + u(i + 1, j + 1));
            const double dl = l.get(i, j) - l.get(i, j + 1) + l.get(i + 1, j) - l.get(i + 1, j + 1);
            const double dk = k.get(i, j) - k.get(i + 1, j) + k.get(i, j + 1) - k.get(i + 1, j + 1);
            c.ref(i, j) = avg + (h / 16.0) * dl + (h / 16.0) * dk;
        }
    });
    return c;
}

RefinedField2D refine_2d(const Field2D& u, const GradientField2D& grads, Exec exec) {
    EdgeMidpoints2D edges = refine_edges_2d(u, grads, exec);
    BoxedArray2D centers = refine_centers_2d(u, grads, exec);
    return RefinedField2D{u.grid, std::move(edges.x_mid), std::move(edges.y_mid), std::move(centers), u.time_level};
}

}  // namespace hocd
