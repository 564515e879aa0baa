#include "hocd/solver1d.hpp"

#include <cmath>
#include <string>

#include "hocd/error.hpp"

namespace hocd {

Stepper1D assemble_1d(double c, const Grid1D& grid, double tau) {
    if (!(c > 0.0) || !std::isfinite(c)) throw ConfigError("diffusivity must be positive");
    if (!(tau > 0.0) || !std::isfinite(tau)) throw ConfigError("time step must be positive");
    const double h = grid.h();
    const double s = 6.0 * c * tau / (h * h);
    const auto n = static_cast<std::size_t>(grid.n_cells() - 1);

    Tridiagonal lhs = Tridiagonal::constant(n, 1.0 - s, 10.0 + 2.0 * s, 1.0 - s);
    Tridiagonal rhs = Tridiagonal::constant(n, 1.0 + s, 10.0 - 2.0 * s, 1.0 + s);
    if (!lhs.strictly_diagonally_dominant()) {
        throw Error("assembled 1D operator is not diagonally dominant (s = " + std::to_string(s) + ")");
    }
    TridiagonalFactor factor(lhs);
    return Stepper1D{grid, SchemeParams1D{c, h, tau, s}, std::move(lhs), std::move(rhs), std::move(factor)};
}

std::vector<double> boundary_rhs_1d(const Stepper1D& stepper, double g1_k, double g1_k1, double g2_k,
                                    double g2_k1) {
    const double s = stepper.params.s;
    std::vector<double> f(stepper.lhs.order(), 0.0);
    f.front() += (s - 1.0) * g1_k1 + (s + 1.0) * g1_k;
    f.back() += (s - 1.0) * g2_k1 + (s + 1.0) * g2_k;
    return f;
}

namespace {

// rhs = rhs_op * u_interior + F0, written into `work`; then solved in place.
void advance_interior(const Stepper1D& st, std::span<const double> u, std::span<double> work, double g1_k,
                      double g1_k1, double g2_k, double g2_k1) {
    const std::size_t n = work.size();
    const double d = st.rhs_op.diag[0];
    const double o = st.rhs_op.lower.empty() ? 0.0 : st.rhs_op.lower[0];
    for (std::size_t i = 0; i < n; ++i) {
        // interior unknown i corresponds to node i + 1
        double s = d * u[i + 1];
        if (i > 0) s += o * u[i];
        if (i + 1 < n) s += o * u[i + 2];
        work[i] = s;
    }
    const double s = st.params.s;
    work[0] += (s - 1.0) * g1_k1 + (s + 1.0) * g1_k;
    work[n - 1] += (s - 1.0) * g2_k1 + (s + 1.0) * g2_k;
    st.factor.solve(work);
}

}  // namespace

Field1D step_1d(const Stepper1D& stepper, const Field1D& u_k, const HeatProblem1D& problem, long k) {
    if (!(u_k.grid == stepper.grid)) throw ConfigError("field grid does not match the stepper grid");
    const double tau = stepper.params.tau;
    const double t0 = static_cast<double>(k) * tau;
    const double t1 = static_cast<double>(k + 1) * tau;
    const double g1_k = problem.g1(t0), g1_k1 = problem.g1(t1);
    const double g2_k = problem.g2(t0), g2_k1 = problem.g2(t1);

    const std::size_t n = stepper.lhs.order();
    std::vector<double> next(u_k.values.size());
    advance_interior(stepper, u_k.values, std::span<double>(next).subspan(1, n), g1_k, g1_k1, g2_k, g2_k1);
    next.front() = g1_k1;
    next.back() = g2_k1;
    return Field1D(u_k.grid, std::move(next), t1);
}

Field1D solve_1d(const HeatProblem1D& problem, const Grid1D& grid, const TimeGrid& time) {
    const Stepper1D stepper = assemble_1d(problem.c, grid, time.tau());
    Field1D u = sample_function(grid, problem.phi);
    const std::size_t n = stepper.lhs.order();
    const long m = time.n_steps();

    std::vector<double> next(u.values.size());
    double g1_prev = problem.g1(time.time(0));
    double g2_prev = problem.g2(time.time(0));
    for (long k = 0; k < m; ++k) {
        const double t1 = time.time(k + 1);
        const double g1_next = problem.g1(t1);
        const double g2_next = problem.g2(t1);
        advance_interior(stepper, u.values, std::span<double>(next).subspan(1, n), g1_prev, g1_next, g2_prev,
                         g2_next);
        next.front() = g1_next;
        next.back() = g2_next;
        std::swap(u.values, next);
        g1_prev = g1_next;
        g2_prev = g2_next;
    }
    u.time_level = time.t_end();
    return u;
}

}  // namespace hocd
