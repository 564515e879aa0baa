#include "hocd/solver2d.hpp"

#include <cmath>
#include <string>

#include "hocd/error.hpp"

namespace hocd {

Stepper2D assemble_2d(const Grid2D& grid, double tau) {
    if (!grid.is_square()) {
        throw ConfigError("the 2D compact scheme needs a square grid with h_x == h_y");
    }
    if (!(tau > 0.0) || !std::isfinite(tau)) throw ConfigError("time step must be positive");
    const double h = grid.x().h();
    const double r = tau / (2.0 * h * h);
    const int n = grid.x().n_cells() - 1;
    const auto nb = static_cast<std::size_t>(n);

    const Tridiagonal a1 = Tridiagonal::constant(nb, (1.0 - 8.0 * r) / 12.0, (2.0 + 10.0 * r) / 3.0, (1.0 - 8.0 * r) / 12.0);
    const Tridiagonal a2 = Tridiagonal::constant(nb, (1.0 + 8.0 * r) / 12.0, (2.0 - 10.0 * r) / 3.0, (1.0 + 8.0 * r) / 12.0);
    const Tridiagonal b1 = Tridiagonal::constant(nb, r / 6.0, (8.0 * r - 1.0) / 12.0, r / 6.0);
    const Tridiagonal b2 = Tridiagonal::constant(nb, r / 6.0, (8.0 * r + 1.0) / 12.0, r / 6.0);

    BlockTridiagonal lhs{a1, b1, nb, -1};
    BlockTridiagonal rhs{a2, b2, nb, +1};
    BlockTridiagonalFactor factor(lhs);
    return Stepper2D{grid, tau, r, n, std::move(lhs), std::move(rhs), std::move(factor)};
}

BoundarySamples2D sample_boundary(const HeatProblem2D& problem, const Grid2D& grid, double t) {
    const Grid1D& gx = grid.x();
    const Grid1D& gy = grid.y();
    BoundarySamples2D s;
    s.left.resize(gy.n_nodes());
    s.right.resize(gy.n_nodes());
    s.bottom.resize(gx.n_nodes());
    s.top.resize(gx.n_nodes());
    for (int j = 0; j <= gy.n_cells(); ++j) {
        s.left[j] = problem.g1(gy.node(j), t);
        s.right[j] = problem.g2(gy.node(j), t);
    }
    for (int i = 0; i <= gx.n_cells(); ++i) {
        s.bottom[i] = problem.g3(gx.node(i), t);
        s.top[i] = problem.g4(gx.node(i), t);
    }
    return s;
}

std::vector<double> boundary_rhs_2d(const Stepper2D& stepper, const BoundarySamples2D& level_k,
                                    const BoundarySamples2D& level_k1) {
    const int n = stepper.n;
    const int nn = n + 1;  // N
    for (const auto* s : {&level_k, &level_k1}) {
        if (s->left.size() != static_cast<std::size_t>(nn + 1) || s->right.size() != s->left.size() ||
            s->bottom.size() != s->left.size() || s->top.size() != s->left.size()) {
            throw SizeError("boundary samples do not match the stepper grid");
        }
    }
    const double r = stepper.r;
    const double w_new = (8.0 * r - 1.0) / 12.0;
    const double w_old = (8.0 * r + 1.0) / 12.0;
    const double w_diag = r / 6.0;
    const auto un = static_cast<std::size_t>(n);
    std::vector<double> f(un * un, 0.0);
    auto at = [&](int i, int j) -> double& {
        return f[static_cast<std::size_t>(j - 1) * un + static_cast<std::size_t>(i - 1)];
    };

    // U_hj^{n+1} + U_hj^n: x = a and x = b edges, including corner-adjacent values.
    for (int j = 1; j <= n; ++j) {
        const auto& l1 = level_k1.left;
        const auto& l0 = level_k.left;
        const auto& r1 = level_k1.right;
        const auto& r0 = level_k.right;
        at(1, j) += w_new * l1[j] + w_diag * (l1[j + 1] + l1[j - 1]) + w_old * l0[j] + w_diag * (l0[j + 1] + l0[j - 1]);
        at(n, j) += w_new * r1[j] + w_diag * (r1[j + 1] + r1[j - 1]) + w_old * r0[j] + w_diag * (r0[j + 1] + r0[j - 1]);
    }
    // B1 u_{h0}^{n+1} + B2 u_{h0}^n in the first block, B1 u_{hN}^{n+1} + B2 u_{hN}^n in the last.
    const auto& b1 = stepper.lhs.off_block;
    const auto& b2 = stepper.rhs_op.off_block;
    auto add_tri = [&](const Tridiagonal& m, const std::vector<double>& edge, int j) {
        for (int i = 1; i <= n; ++i) {
            const std::size_t k = static_cast<std::size_t>(i - 1);
            double s = m.diag[k] * edge[i];
            if (i > 1) s += m.lower[k - 1] * edge[i - 1];
            if (i < n) s += m.upper[k] * edge[i + 1];
            at(i, j) += s;
        }
    };
    add_tri(b1, level_k1.bottom, 1);
    add_tri(b2, level_k.bottom, 1);
    add_tri(b1, level_k1.top, n);
    add_tri(b2, level_k.top, n);
    return f;
}

void impose_boundary(Field2D& u, const BoundarySamples2D& edges) {
    const int nx = u.nx();
    const int ny = u.ny();
    for (int j = 0; j <= ny; ++j) {
        u(0, j) = edges.left[j];
        u(nx, j) = edges.right[j];
    }
    for (int i = 1; i < nx; ++i) {
        u(i, 0) = edges.bottom[i];
        u(i, ny) = edges.top[i];
    }
}

namespace {

void gather_interior(const Field2D& u, int n, std::vector<double>& v) {
    const auto un = static_cast<std::size_t>(n);
    v.resize(un * un);
    for (int j = 1; j <= n; ++j) {
        for (int i = 1; i <= n; ++i) {
            v[static_cast<std::size_t>(j - 1) * un + static_cast<std::size_t>(i - 1)] = u(i, j);
        }
    }
}

void scatter_interior(const std::vector<double>& v, int n, Field2D& u) {
    const auto un = static_cast<std::size_t>(n);
    for (int j = 1; j <= n; ++j) {
        for (int i = 1; i <= n; ++i) {
            u(i, j) = v[static_cast<std::size_t>(j - 1) * un + static_cast<std::size_t>(i - 1)];
        }
    }
}

void advance(const Stepper2D& st, const std::vector<double>& v, std::vector<double>& rhs,
             const BoundarySamples2D& edges_k, const BoundarySamples2D& edges_k1, Exec exec) {
    rhs.resize(v.size());
    apply_block_tridiagonal(st.rhs_op, v, rhs, exec);
    const std::vector<double> f = boundary_rhs_2d(st, edges_k, edges_k1);
    for (std::size_t q = 0; q < rhs.size(); ++q) rhs[q] += f[q];
    st.factor.solve(rhs);
}

}  // namespace

Field2D step_2d(const Stepper2D& stepper, const Field2D& u_k, const HeatProblem2D& problem, long k, Exec exec) {
    if (!(u_k.grid == stepper.grid)) throw ConfigError("field grid does not match the stepper grid");
    const double t0 = static_cast<double>(k) * stepper.tau;
    const double t1 = static_cast<double>(k + 1) * stepper.tau;
    const BoundarySamples2D e0 = sample_boundary(problem, stepper.grid, t0);
    const BoundarySamples2D e1 = sample_boundary(problem, stepper.grid, t1);

    std::vector<double> v, rhs;
    gather_interior(u_k, stepper.n, v);
    advance(stepper, v, rhs, e0, e1, exec);
    Field2D next(u_k.grid, std::vector<double>(u_k.values.size(), 0.0), t1);
    scatter_interior(rhs, stepper.n, next);
    impose_boundary(next, e1);
    return next;
}

Field2D solve_2d(const HeatProblem2D& problem, const Grid2D& grid, const TimeGrid& time, Exec exec) {
    const Stepper2D stepper = assemble_2d(grid, time.tau());
    Field2D u = sample_function(grid, problem.phi);
    std::vector<double> v, rhs;
    gather_interior(u, stepper.n, v);
    BoundarySamples2D prev = sample_boundary(problem, grid, time.time(0));
    for (long k = 0; k < time.n_steps(); ++k) {
        BoundarySamples2D next = sample_boundary(problem, grid, time.time(k + 1));
        advance(stepper, v, rhs, prev, next, exec);
        std::swap(v, rhs);
        prev = std::move(next);
    }
    scatter_interior(v, stepper.n, u);
    impose_boundary(u, prev);
    u.time_level = time.t_end();
    return u;
}

}  // namespace hocd
