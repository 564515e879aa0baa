#include "hocd/bench.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <exception>
#include <numbers>
#include <string>

#include "hocd/error.hpp"
#include "hocd/extrapolate.hpp"

namespace hocd {

using std::numbers::pi;

std::string to_string(BenchmarkId id) {
    switch (id) {
        case BenchmarkId::Ex41: return "ex41";
        case BenchmarkId::Ex42: return "ex42";
        case BenchmarkId::Ex43: return "ex43";
    }
    return "?";
}

BenchmarkId parse_benchmark(std::string_view name) {
    if (name == "ex41") return BenchmarkId::Ex41;
    if (name == "ex42") return BenchmarkId::Ex42;
    if (name == "ex43") return BenchmarkId::Ex43;
    throw ConfigError("unknown benchmark '" + std::string(name) + "' (expected ex41, ex42 or ex43)");
}

int benchmark_dim(BenchmarkId id) { return id == BenchmarkId::Ex43 ? 2 : 1; }

Benchmark1D make_benchmark_1d(BenchmarkId id, double c) {
    if (!(c > 0.0) || !std::isfinite(c)) throw ConfigError("diffusivity must be positive");
    switch (id) {
        case BenchmarkId::Ex41: {
            Benchmark1D b{id, {}, {}, {}};
            b.problem.c = c;
            b.problem.phi = [](double x) { return std::sin(pi * x); };
            b.problem.g1 = [](double) { return 0.0; };
            b.problem.g2 = [](double) { return 0.0; };
            b.exact = [c](double x, double t) { return std::exp(-c * pi * pi * t) * std::sin(pi * x); };
            b.exact_dx = [c](double x, double t) { return pi * std::exp(-c * pi * pi * t) * std::cos(pi * x); };
            return b;
        }
        case BenchmarkId::Ex42: {
            if (c != 1.0) throw ConfigError("ex42 is only an exact solution for c = 1");
            Benchmark1D b{id, {}, {}, {}};
            b.problem.c = 1.0;
            b.problem.phi = [](double x) { return std::exp(x); };
            b.problem.g1 = [](double t) { return std::exp(t); };
            b.problem.g2 = [](double t) { return std::exp(1.0 + t); };
            b.exact = [](double x, double t) { return std::exp(x + t); };
            b.exact_dx = b.exact;
            return b;
        }
        case BenchmarkId::Ex43: break;
    }
    throw ConfigError(to_string(id) + " is not a 1D benchmark");
}

Benchmark2D make_benchmark_2d(BenchmarkId id) {
    if (id != BenchmarkId::Ex43) throw ConfigError(to_string(id) + " is not a 2D benchmark");
    Benchmark2D b{id, {}, {}, {}, {}};
    b.problem.phi = [](double x, double y) { return std::sin(pi * x) * std::sin(pi * y); };
    const auto zero = [](double, double) { return 0.0; };
    b.problem.g1 = zero;
    b.problem.g2 = zero;
    b.problem.g3 = zero;
    b.problem.g4 = zero;
    b.exact = [](double x, double y, double t) {
        return std::exp(-2.0 * pi * pi * t) * std::sin(pi * x) * std::sin(pi * y);
    };
    b.exact_dx = [](double x, double y, double t) {
        return pi * std::exp(-2.0 * pi * pi * t) * std::cos(pi * x) * std::sin(pi * y);
    };
    b.exact_dy = [](double x, double y, double t) {
        return pi * std::exp(-2.0 * pi * pi * t) * std::sin(pi * x) * std::cos(pi * y);
    };
    return b;
}

namespace {

void require_time(double level, double at_time) {
    if (std::abs(level - at_time) > 1e-12 * std::max(1.0, std::abs(at_time))) {
        throw ConfigError("field time level " + std::to_string(level) + " differs from " + std::to_string(at_time));
    }
}

}  // namespace

double max_error(const Field1D& numeric, const Exact1D& exact, double at_time) {
    require_time(numeric.time_level, at_time);
    double e = 0.0;
    for (int i = 0; i <= numeric.n_cells(); ++i) {
        e = std::max(e, std::abs(numeric.values[i] - exact(numeric.grid.node(i), at_time)));
    }
    return e;
}

double max_error(const RefinedField1D& numeric, const Exact1D& exact, double at_time) {
    require_time(numeric.time_level(), at_time);
    double e = 0.0;
    for (int j = numeric.first(); j <= numeric.last(); ++j) {
        e = std::max(e, std::abs(numeric.at(j) - exact(numeric.coordinate(j), at_time)));
    }
    return e;
}

double max_error(const GradientField1D& numeric, const Exact1D& exact_dx, double at_time) {
    require_time(numeric.time_level(), at_time);
    double e = 0.0;
    for (int j = numeric.first(); j <= numeric.last(); ++j) {
        e = std::max(e, std::abs(numeric.at(j) - exact_dx(numeric.grid().node(j), at_time)));
    }
    return e;
}

double max_error(const Field2D& numeric, const Exact2D& exact, double at_time) {
    require_time(numeric.time_level, at_time);
    double e = 0.0;
    for (int i = 0; i <= numeric.nx(); ++i) {
        for (int j = 0; j <= numeric.ny(); ++j) {
            const double x = numeric.grid.x().node(i);
            const double y = numeric.grid.y().node(j);
            e = std::max(e, std::abs(numeric(i, j) - exact(x, y, at_time)));
        }
    }
    return e;
}

double max_error(const BoxedArray2D& values, const Grid2D& grid, double sx, double sy, const Exact2D& exact,
                 double at_time) {
    double e = 0.0;
    const double hx = grid.x().h();
    const double hy = grid.y().h();
    for (int i = values.i_first(); i <= values.i_last(); ++i) {
        for (int j = values.j_first(); j <= values.j_last(); ++j) {
            const double x = grid.x().a() + (i + sx) * hx;
            const double y = grid.y().a() + (j + sy) * hy;
            e = std::max(e, std::abs(values.get(i, j) - exact(x, y, at_time)));
        }
    }
    return e;
}

double max_abs(const Field1D& u) {
    double m = 0.0;
    for (double v : u.values) m = std::max(m, std::abs(v));
    return m;
}

double max_abs(const Field2D& u) {
    double m = 0.0;
    for (double v : u.values) m = std::max(m, std::abs(v));
    return m;
}

std::optional<double> observed_rate(double e_coarse, double e_fine) {
    if (!(e_coarse > 0.0) || !(e_fine > 0.0)) return std::nullopt;
    return std::log2(e_coarse / e_fine);
}

std::optional<double> error_ratio(double e_coarse, double e_fine) {
    if (!(e_coarse > 0.0) || !(e_fine > 0.0)) return std::nullopt;
    return e_coarse / e_fine;
}

std::string to_string(Regime regime) {
    switch (regime) {
        case Regime::FixedTau: return "fixed-tau";
        case Regime::FixedH: return "fixed-h";
        case Regime::TauEqH: return "tau=h";
        case Regime::TauEqH2: return "tau=h2";
        case Regime::TauEqHOver20: return "tau=h/20";
    }
    return "?";
}

Regime parse_regime(std::string_view name) {
    if (name == "fixed-tau") return Regime::FixedTau;
    if (name == "fixed-h") return Regime::FixedH;
    if (name == "tau=h") return Regime::TauEqH;
    if (name == "tau=h2" || name == "tau=h^2") return Regime::TauEqH2;
    if (name == "tau=h/20") return Regime::TauEqHOver20;
    throw ConfigError("unknown regime '" + std::string(name) + "'");
}

Measure measure_for(Regime regime) {
    return (regime == Regime::FixedTau || regime == Regime::FixedH) ? Measure::Rate : Measure::Ratio;
}

namespace {

int cells_for_unit_interval(double h) {
    if (!(h > 0.0) || !std::isfinite(h)) throw ConfigError("mesh size must be positive");
    const double cells = 1.0 / h;
    const long n = std::lround(cells);
    if (n < 2 || std::abs(cells - static_cast<double>(n)) > 1e-9 * cells) {
        throw ConfigError("h = " + std::to_string(h) + " is not 1/N for an integer N >= 2");
    }
    return static_cast<int>(n);
}

void require_halving(const std::vector<double>& v, const char* what) {
    for (std::size_t r = 0; r + 1 < v.size(); ++r) {
        if (std::abs(v[r] - 2.0 * v[r + 1]) > 1e-12 * v[r]) {
            throw ConfigError(std::string(what) + " must halve from one row to the next");
        }
    }
}

struct RowPlan {
    double h;
    double tau;
};

std::vector<RowPlan> plan_rows(const StudySpec& spec) {
    std::vector<RowPlan> rows;
    switch (spec.regime) {
        case Regime::FixedTau:
            if (spec.tau_list.size() != 1) throw ConfigError("fixed-tau needs exactly one tau");
            require_halving(spec.h_list, "h");
            for (double h : spec.h_list) rows.push_back({h, spec.tau_list[0]});
            break;
        case Regime::FixedH:
            if (spec.h_list.size() != 1) throw ConfigError("fixed-h needs exactly one h");
            require_halving(spec.tau_list, "tau");
            for (double tau : spec.tau_list) rows.push_back({spec.h_list[0], tau});
            break;
        case Regime::TauEqH:
        case Regime::TauEqH2:
        case Regime::TauEqHOver20:
            require_halving(spec.h_list, "h");
            for (double h : spec.h_list) {
                const double tau = spec.regime == Regime::TauEqH ? h : spec.regime == Regime::TauEqH2 ? h * h : h / 20.0;
                rows.push_back({h, tau});
            }
            break;
    }
    if (rows.empty()) throw ConfigError("a convergence study needs at least one row");
    return rows;
}

ConvergenceRow run_row_1d(const StudySpec& spec, const Benchmark1D& b, const RowPlan& plan) {
    ConvergenceRow row;
    row.h = plan.h;
    row.tau = plan.tau;
    row.n_cells = cells_for_unit_interval(plan.h);
    const Grid1D grid(0.0, 1.0, row.n_cells);
    const TimeGrid time = TimeGrid::from_step(spec.t_end, plan.tau);
    row.n_steps = time.n_steps();
    row.interior_unknowns = row.n_cells - 1;

    Field1D u = solve_1d(b.problem, grid, time);
    if (spec.flags.extrapolate) {
        const Field1D fine = solve_1d(b.problem, grid, TimeGrid(spec.t_end, 2 * time.n_steps()));
        u = extrapolate_time(u, fine);
    }
    const double t = spec.t_end;
    row.error_grid = max_error(u, b.exact, t);
    Field1D exact = sample_function(grid, [&](double x) { return b.exact(x, t); });
    const double scale = max_abs(exact);
    row.rel_error_grid = scale > 0.0 ? row.error_grid / scale : row.error_grid;

    if ((spec.flags.refine || spec.flags.gradient) && row.n_cells >= kMinCellsRefine1D) {
        const GradientField1D p = gradient_1d(u, b.problem.g1(t), b.problem.g2(t));
        if (spec.flags.gradient) row.error_grad = max_error(p, b.exact_dx, t);
        if (spec.flags.refine) row.error_mid = max_error(refine_1d(u, p), b.exact, t);
    }
    row.error_all = std::max(row.error_grid, row.error_mid.value_or(0.0));
    return row;
}

ConvergenceRow run_row_2d(const StudySpec& spec, const Benchmark2D& b, const RowPlan& plan) {
    ConvergenceRow row;
    row.h = plan.h;
    row.tau = plan.tau;
    row.n_cells = cells_for_unit_interval(plan.h);
    const Grid2D grid = Grid2D::unit_square(row.n_cells);
    const TimeGrid time = TimeGrid::from_step(spec.t_end, plan.tau);
    row.n_steps = time.n_steps();
    row.interior_unknowns = static_cast<long>(row.n_cells - 1) * (row.n_cells - 1);

    Field2D u = solve_2d(b.problem, grid, time);
    if (spec.flags.extrapolate) {
        const Field2D fine = solve_2d(b.problem, grid, TimeGrid(spec.t_end, 2 * time.n_steps()));
        u = extrapolate_time(u, fine);
    }
    const double t = spec.t_end;
    row.error_grid = max_error(u, b.exact, t);
    const Field2D exact = sample_function(grid, [&](double x, double y) { return b.exact(x, y, t); });
    const double scale = max_abs(exact);
    row.rel_error_grid = scale > 0.0 ? row.error_grid / scale : row.error_grid;

    if ((spec.flags.refine || spec.flags.gradient) && row.n_cells >= kMinCellsRefine2D) {
        const GradientField2D g = gradient_2d(u);
        if (spec.flags.gradient) {
            row.error_grad = std::max(max_error(g.k_values, grid, 0.0, 0.0, b.exact_dx, t),
                                      max_error(g.l_values, grid, 0.0, 0.0, b.exact_dy, t));
        }
        if (spec.flags.refine) {
            row.error_mid = max_error(refine_centers_2d(u, g), grid, 0.5, 0.5, b.exact, t);
        }
    }
    row.error_all = std::max(row.error_grid, row.error_mid.value_or(0.0));
    return row;
}

}  // namespace

void fill_rates(ConvergenceTable& table) {
    auto measure = [&](const std::optional<double>& a, const std::optional<double>& b) -> std::optional<double> {
        if (!a || !b) return std::nullopt;
        return table.measure == Measure::Rate ? observed_rate(*a, *b) : error_ratio(*a, *b);
    };
    auto& rows = table.rows;
    for (std::size_t r = 0; r < rows.size(); ++r) {
        auto& row = rows[r];
        row.rate_grid = row.rate_mid = row.rate_grad = row.rate_all = std::nullopt;
        if (r + 1 == rows.size()) break;
        const auto& next = rows[r + 1];
        row.rate_grid = measure(row.error_grid, next.error_grid);
        row.rate_mid = measure(row.error_mid, next.error_mid);
        row.rate_grad = measure(row.error_grad, next.error_grad);
        row.rate_all = measure(row.error_all, next.error_all);
    }
}

ConvergenceTable run_convergence(const StudySpec& spec) {
    if (!(spec.t_end > 0.0)) throw ConfigError("final time must be positive");
    if (spec.jobs < 1) throw ConfigError("jobs must be at least 1");
    const std::vector<RowPlan> plans = plan_rows(spec);

    ConvergenceTable table;
    table.benchmark = spec.benchmark;
    table.dim = benchmark_dim(spec.benchmark);
    table.regime = spec.regime;
    table.measure = measure_for(spec.regime);
    table.extrapolated = spec.flags.extrapolate;
    table.rows.resize(plans.size());

    std::optional<Benchmark1D> b1;
    std::optional<Benchmark2D> b2;
    if (table.dim == 1) {
        b1 = make_benchmark_1d(spec.benchmark, spec.c);
    } else {
        if (spec.c != 1.0) throw ConfigError("2D benchmarks have unit diffusivity");
        b2 = make_benchmark_2d(spec.benchmark);
    }
    // Plans are validated up front so configuration errors surface before any solve.
    for (const auto& p : plans) {
        cells_for_unit_interval(p.h);
        TimeGrid::from_step(spec.t_end, p.tau);
    }

    std::vector<std::exception_ptr> failures(plans.size());
    const long n_rows = static_cast<long>(plans.size());
    auto run = [&](long r) {
        try {
            table.rows[r] = b1 ? run_row_1d(spec, *b1, plans[r]) : run_row_2d(spec, *b2, plans[r]);
        } catch (...) {
            failures[r] = std::current_exception();
        }
    };
    if (spec.jobs > 1) {
#pragma omp parallel for schedule(dynamic) num_threads(spec.jobs)
        for (long r = 0; r < n_rows; ++r) run(r);
    } else {
        for (long r = 0; r < n_rows; ++r) run(r);
    }
    for (const auto& f : failures) {
        if (f) std::rethrow_exception(f);
    }
    fill_rates(table);
    return table;
}

namespace {

template <typename F>
double median_seconds(int repeats, F&& f) {
    std::vector<double> t;
    for (int r = 0; r < repeats; ++r) {
        const auto start = std::chrono::steady_clock::now();
        f();
        const auto stop = std::chrono::steady_clock::now();
        t.push_back(std::chrono::duration<double>(stop - start).count());
    }
    std::sort(t.begin(), t.end());
    return t[t.size() / 2];
}

}  // namespace

TimingReport run_timing(BenchmarkId id, int points, int repeats) {
    if (benchmark_dim(id) != 1) throw ConfigError("timing comparison is defined for the 1D benchmarks only");
    if (points < 7 || points % 2 == 0) throw ConfigError("matched output points must be odd and at least 7");
    if (repeats < 1) throw ConfigError("repeats must be at least 1");
    const Benchmark1D b = make_benchmark_1d(id);

    TimingReport rep;
    rep.benchmark = id;
    rep.points = points;
    rep.repeats = repeats;
    const int n_coarse = (points + 1) / 2;
    const int n_full = 2 * n_coarse;
    rep.h_coarse = 1.0 / n_coarse;
    rep.tau_coarse = rep.h_coarse * rep.h_coarse;
    rep.h_full = 1.0 / n_full;
    rep.tau_full = rep.h_full * rep.h_full;
    const double t_end = 1.0;

    const Grid1D grid_full(0.0, 1.0, n_full);
    const TimeGrid time_full(t_end, static_cast<long>(n_full) * n_full);
    std::optional<Field1D> full;
    rep.seconds_full = median_seconds(repeats, [&] { full = solve_1d(b.problem, grid_full, time_full); });
    rep.error_full = max_error(*full, b.exact, t_end);

    const Grid1D grid_coarse(0.0, 1.0, n_coarse);
    const TimeGrid time_coarse(t_end, static_cast<long>(n_coarse) * n_coarse);
    std::optional<Field1D> coarse;
    std::optional<RefinedField1D> mids;
    rep.seconds_refined = median_seconds(repeats, [&] {
        coarse = solve_1d(b.problem, grid_coarse, time_coarse);
        mids = refine_1d(*coarse, b.problem.g1(t_end), b.problem.g2(t_end));
    });
    rep.error_refined = std::max(max_error(*coarse, b.exact, t_end), max_error(*mids, b.exact, t_end));
    rep.speedup = rep.seconds_refined > 0.0 ? rep.seconds_full / rep.seconds_refined : 0.0;
    return rep;
}

namespace {

void describe_1d(SolveReport& rep, const Field1D& u, const Benchmark1D& b, const SolveSpec& spec) {
    const double t = u.time_level;
    const Grid1D& g = u.grid;
    rep.summary.emplace_back("error_grid", max_error(u, b.exact, t));
    std::optional<RefinedField1D> mids;
    std::optional<GradientField1D> grad;
    if (spec.refine || spec.gradient) {
        grad = gradient_1d(u, b.problem.g1(t), b.problem.g2(t));
        if (spec.refine) {
            mids = refine_1d(u, *grad);
            rep.summary.emplace_back("error_mid", max_error(*mids, b.exact, t));
        }
        if (spec.gradient) rep.summary.emplace_back("error_grad", max_error(*grad, b.exact_dx, t));
    }
    for (int i = 0; i <= g.n_cells(); ++i) {
        const double x = g.node(i);
        rep.points.push_back({x, 0.0, "node", u.values[i], b.exact(x, t)});
        if (mids && i >= mids->first() && i <= mids->last()) {
            const double xm = mids->coordinate(i);
            rep.points.push_back({xm, 0.0, "mid", mids->at(i), b.exact(xm, t)});
        }
    }
    if (spec.gradient) {
        for (int j = grad->first(); j <= grad->last(); ++j) {
            const double x = g.node(j);
            rep.points.push_back({x, 0.0, "grad", grad->at(j), b.exact_dx(x, t)});
        }
    }
}

void emit_boxed(SolveReport& rep, const BoxedArray2D& a, const Grid2D& g, double sx, double sy, const char* kind,
                const Exact2D& exact, double t) {
    for (int i = a.i_first(); i <= a.i_last(); ++i) {
        for (int j = a.j_first(); j <= a.j_last(); ++j) {
            const double x = g.x().a() + (i + sx) * g.x().h();
            const double y = g.y().a() + (j + sy) * g.y().h();
            rep.points.push_back({x, y, kind, a.get(i, j), exact(x, y, t)});
        }
    }
}

void describe_2d(SolveReport& rep, const Field2D& u, const Benchmark2D& b, const SolveSpec& spec) {
    const double t = u.time_level;
    const Grid2D& g = u.grid;
    rep.summary.emplace_back("error_grid", max_error(u, b.exact, t));
    for (int i = 0; i <= u.nx(); ++i) {
        for (int j = 0; j <= u.ny(); ++j) {
            const double x = g.x().node(i);
            const double y = g.y().node(j);
            rep.points.push_back({x, y, "node", u(i, j), b.exact(x, y, t)});
        }
    }
    if (!(spec.refine || spec.gradient)) return;
    const GradientField2D grads = gradient_2d(u);
    if (spec.refine) {
        const RefinedField2D r = refine_2d(u, grads);
        rep.summary.emplace_back("error_mid", max_error(r.centers, g, 0.5, 0.5, b.exact, t));
        rep.summary.emplace_back("error_xmid", max_error(r.x_mid, g, 0.5, 0.0, b.exact, t));
        rep.summary.emplace_back("error_ymid", max_error(r.y_mid, g, 0.0, 0.5, b.exact, t));
        emit_boxed(rep, r.x_mid, g, 0.5, 0.0, "xmid", b.exact, t);
        emit_boxed(rep, r.y_mid, g, 0.0, 0.5, "ymid", b.exact, t);
        emit_boxed(rep, r.centers, g, 0.5, 0.5, "center", b.exact, t);
    }
    if (spec.gradient) {
        const double ek = max_error(grads.k_values, g, 0.0, 0.0, b.exact_dx, t);
        const double el = max_error(grads.l_values, g, 0.0, 0.0, b.exact_dy, t);
        rep.summary.emplace_back("error_grad", std::max(ek, el));
        emit_boxed(rep, grads.k_values, g, 0.0, 0.0, "K", b.exact_dx, t);
        emit_boxed(rep, grads.l_values, g, 0.0, 0.0, "L", b.exact_dy, t);
    }
}

void check_sizes(const SolveSpec& spec) {
    const int dim = benchmark_dim(spec.benchmark);
    const int min_cells = dim == 1 ? kMinCellsRefine1D : kMinCellsRefine2D;
    if ((spec.refine || spec.gradient) && spec.n_cells < min_cells) {
        throw ConfigError("refinement/gradient output needs N >= " + std::to_string(min_cells));
    }
    if (dim == 2 && spec.c != 1.0) throw ConfigError("2D benchmarks have unit diffusivity");
}

SolveReport report_header(const char* command, const SolveSpec& spec, const TimeGrid& time) {
    SolveReport rep;
    rep.command = command;
    rep.benchmark = spec.benchmark;
    rep.dim = benchmark_dim(spec.benchmark);
    rep.n_cells = spec.n_cells;
    rep.h = 1.0 / spec.n_cells;
    rep.tau = time.tau();
    rep.t_end = time.t_end();
    return rep;
}

}  // namespace

SolveReport run_solve(const SolveSpec& spec) {
    check_sizes(spec);
    const TimeGrid time = TimeGrid::from_step(spec.t_end, spec.tau);
    SolveReport rep = report_header("solve", spec, time);
    if (rep.dim == 1) {
        const Benchmark1D b = make_benchmark_1d(spec.benchmark, spec.c);
        const Field1D u = solve_1d(b.problem, Grid1D(0.0, 1.0, spec.n_cells), time);
        describe_1d(rep, u, b, spec);
    } else {
        const Benchmark2D b = make_benchmark_2d(spec.benchmark);
        const Field2D u = solve_2d(b.problem, Grid2D::unit_square(spec.n_cells), time);
        describe_2d(rep, u, b, spec);
    }
    return rep;
}

SolveReport run_extrapolate(const SolveSpec& spec, ExtrapolationVariant variant) {
    check_sizes(spec);
    const TimeGrid time = TimeGrid::from_step(spec.t_end, spec.tau);
    const bool spacetime = variant == ExtrapolationVariant::SpaceTime;
    const TimeGrid fine_time(spec.t_end, time.n_steps() * (spacetime ? 4 : 2));
    const int fine_cells = spacetime ? 2 * spec.n_cells : spec.n_cells;
    SolveReport rep = report_header(spacetime ? "extrapolate-spacetime" : "extrapolate-time", spec, time);
    const double t = spec.t_end;

    if (rep.dim == 1) {
        const Benchmark1D b = make_benchmark_1d(spec.benchmark, spec.c);
        const Field1D coarse = solve_1d(b.problem, Grid1D(0.0, 1.0, spec.n_cells), time);
        const Field1D fine = solve_1d(b.problem, Grid1D(0.0, 1.0, fine_cells), fine_time);
        const Field1D ex = spacetime ? extrapolate_spacetime(coarse, fine) : extrapolate_time(coarse, fine);
        rep.summary.emplace_back("error_coarse", max_error(coarse, b.exact, t));
        rep.summary.emplace_back("error_fine", max_error(fine, b.exact, t));
        describe_1d(rep, ex, b, spec);
    } else {
        const Benchmark2D b = make_benchmark_2d(spec.benchmark);
        const Field2D coarse = solve_2d(b.problem, Grid2D::unit_square(spec.n_cells), time);
        const Field2D fine = solve_2d(b.problem, Grid2D::unit_square(fine_cells), fine_time);
        const Field2D ex = spacetime ? extrapolate_spacetime(coarse, fine) : extrapolate_time(coarse, fine);
        rep.summary.emplace_back("error_coarse", max_error(coarse, b.exact, t));
        rep.summary.emplace_back("error_fine", max_error(fine, b.exact, t));
        describe_2d(rep, ex, b, spec);
    }
    return rep;
}

}  // namespace hocd
