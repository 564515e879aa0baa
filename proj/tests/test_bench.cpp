#include <doctest.h>

#include <cmath>

#include "hocd/bench.hpp"
#include "hocd/error.hpp"
#include "support.hpp"

using namespace hocd;

TEST_CASE("names") {
    CHECK(parse_benchmark("ex41") == BenchmarkId::Ex41);
    CHECK(to_string(BenchmarkId::Ex43) == "ex43");
    CHECK(benchmark_dim(BenchmarkId::Ex42) == 1);
    CHECK(benchmark_dim(BenchmarkId::Ex43) == 2);
    CHECK_THROWS_AS(parse_benchmark("ex44"), ConfigError);

    CHECK(parse_regime("tau=h^2") == Regime::TauEqH2);
    CHECK(parse_regime("tau=h2") == Regime::TauEqH2);
    CHECK(parse_regime("tau=h/20") == Regime::TauEqHOver20);
    for (Regime r : {Regime::FixedTau, Regime::FixedH, Regime::TauEqH, Regime::TauEqH2, Regime::TauEqHOver20}) {
        CHECK(parse_regime(to_string(r)) == r);
    }
    CHECK_THROWS_AS(parse_regime("tau=h3"), ConfigError);
    CHECK(measure_for(Regime::FixedTau) == Measure::Rate);
    CHECK(measure_for(Regime::TauEqH) == Measure::Ratio);
}

TEST_CASE("benchmark construction") {
    CHECK_NOTHROW(make_benchmark_1d(BenchmarkId::Ex41, 0.3));
    CHECK_THROWS_AS(make_benchmark_1d(BenchmarkId::Ex42, 2.0), ConfigError);
    CHECK_THROWS_AS(make_benchmark_1d(BenchmarkId::Ex43), ConfigError);
    CHECK_THROWS_AS(make_benchmark_2d(BenchmarkId::Ex41), ConfigError);
    CHECK_THROWS_AS(make_benchmark_1d(BenchmarkId::Ex41, -1.0), ConfigError);

    // Exact solutions satisfy their initial data.
    const Benchmark1D b = make_benchmark_1d(BenchmarkId::Ex41, 0.3);
    CHECK(b.exact(0.3, 0.0) == doctest::Approx(b.problem.phi(0.3)));
    const Benchmark2D b2 = make_benchmark_2d(BenchmarkId::Ex43);
    CHECK(b2.exact(0.3, 0.6, 0.0) == doctest::Approx(b2.problem.phi(0.3, 0.6)));
}

TEST_CASE("max_error") {
    const Benchmark1D b = make_benchmark_1d(BenchmarkId::Ex42);
    const Grid1D g(0.0, 1.0, 16);
    Field1D u = sample_function(g, [&](double x) { return b.exact(x, 0.7); });
    u.time_level = 0.7;
    CHECK(max_error(u, b.exact, 0.7) <= 1e-14);
    CHECK_THROWS_AS(max_error(u, b.exact, 1.0), ConfigError);

    u.values[5] += 0.25;
    CHECK(max_error(u, b.exact, 0.7) == doctest::Approx(0.25));
    // Relabeling: reversing the grid and the solution gives the same norm.
    Field1D rev = u;
    std::reverse(rev.values.begin(), rev.values.end());
    const Exact1D mirrored = [&](double x, double t) { return b.exact(1.0 - x, t); };
    CHECK(max_error(rev, mirrored, 0.7) == doctest::Approx(max_error(u, b.exact, 0.7)).epsilon(1e-14));

    const TimeGrid t = TimeGrid::from_step(1.0, 1e-5);
    const Benchmark1D e41 = make_benchmark_1d(BenchmarkId::Ex41);
    CHECK(testing::rel_diff(max_error(solve_1d(e41.problem, g, t), e41.exact, 1.0), 3.1660e-9) < 1e-4);
    CHECK(testing::rel_diff(max_error(solve_1d(b.problem, Grid1D(0.0, 1.0, 8), t), b.exact, 1.0), 5.2636e-7) < 1e-4);
}

TEST_CASE("rates") {
    CHECK(*observed_rate(1.0, 1.0 / 16.0) == doctest::Approx(4.0));
    CHECK(*observed_rate(8.3491e-7, 5.0915e-8) == doctest::Approx(4.0355).epsilon(1e-4));
    CHECK(*observed_rate(4.3449e-4, 1.0871e-4) == doctest::Approx(1.9988).epsilon(1e-4));
    CHECK(*observed_rate(3.0, 3.0) == 0.0);
    CHECK(*observed_rate(2.0, 5.0) == doctest::Approx(-*observed_rate(5.0, 2.0)));
    CHECK_FALSE(observed_rate(0.0, 1.0));
    CHECK_FALSE(observed_rate(1.0, -1.0));
    CHECK(*error_ratio(6.0, 2.0) == 3.0);
    CHECK_FALSE(error_ratio(0.0, 2.0));
}

TEST_CASE("run_convergence") {
    SUBCASE("table shape and refined columns") {
        StudySpec spec;
        spec.regime = Regime::FixedTau;
        spec.h_list = {1.0 / 4, 1.0 / 8, 1.0 / 16};
        spec.tau_list = {1e-3};
        spec.flags = {true, true, false};
        const ConvergenceTable t = run_convergence(spec);
        REQUIRE(t.rows.size() == 3);
        CHECK(t.measure == Measure::Rate);
        CHECK(t.rows[0].n_cells == 4);
        CHECK(t.rows[0].n_steps == 1000);
        CHECK(t.rows[2].interior_unknowns == 15);
        CHECK(t.rows[0].error_mid);
        CHECK(t.rows[0].error_grad);
        CHECK(t.rows[0].rate_grid);
        CHECK_FALSE(t.rows[2].rate_grid);
        CHECK_FALSE(t.rows[2].rate_mid);
        CHECK(t.rows[1].error_all == std::max(t.rows[1].error_grid, *t.rows[1].error_mid));
        CHECK(t.rows[0].rel_error_grid > t.rows[0].error_grid);
    }
    SUBCASE("rows below the stencil minimum omit refined columns") {
        StudySpec spec;
        spec.benchmark = BenchmarkId::Ex43;
        spec.regime = Regime::TauEqH2;
        spec.h_list = {1.0 / 4, 1.0 / 8};
        spec.flags = {true, true, false};
        const ConvergenceTable t = run_convergence(spec);
        CHECK(t.dim == 2);
        CHECK_FALSE(t.rows[0].error_mid);
        CHECK_FALSE(t.rows[0].error_grad);
        CHECK_FALSE(t.rows[0].rate_mid);
        CHECK(t.rows[1].error_mid);
        CHECK(t.rows[0].rate_grid);
    }
    SUBCASE("2D ratios under tau = h^2") {
        StudySpec spec;
        spec.benchmark = BenchmarkId::Ex43;
        spec.regime = Regime::TauEqH2;
        spec.h_list = {1.0 / 5, 1.0 / 10, 1.0 / 20};
        spec.flags.refine = true;
        const ConvergenceTable t = run_convergence(spec);
        CHECK(t.measure == Measure::Ratio);
        CHECK(*t.rows[0].rate_grid == doctest::Approx(9.7908).epsilon(1e-3));
        CHECK(*t.rows[1].rate_grid == doctest::Approx(15.6079).epsilon(1e-3));
        CHECK(*t.rows[1].rate_mid == doctest::Approx(15.3196).epsilon(1e-3));
    }
    SUBCASE("fixed-h halves tau") {
        StudySpec spec;
        spec.benchmark = BenchmarkId::Ex42;
        spec.regime = Regime::FixedH;
        spec.h_list = {1.0 / 200};
        spec.tau_list = {0.1, 0.05, 0.025};
        const ConvergenceTable t = run_convergence(spec);
        CHECK(t.rows[1].n_steps == 20);
        CHECK(*t.rows[0].rate_grid == doctest::Approx(2.0).epsilon(0.02));
    }
    SUBCASE("invalid studies") {
        StudySpec spec;
        spec.regime = Regime::FixedTau;
        spec.h_list = {1.0 / 4, 1.0 / 6};
        spec.tau_list = {1e-3};
        CHECK_THROWS_AS(run_convergence(spec), ConfigError);
        spec.h_list = {1.0 / 4, 1.0 / 8};
        spec.tau_list = {1e-3, 1e-4};
        CHECK_THROWS_AS(run_convergence(spec), ConfigError);
        spec.tau_list = {0.3};
        CHECK_THROWS_AS(run_convergence(spec), ConfigError);
        spec.tau_list = {1e-3};
        spec.h_list = {0.3};
        CHECK_THROWS_AS(run_convergence(spec), ConfigError);
        spec.h_list = {};
        CHECK_THROWS_AS(run_convergence(spec), ConfigError);
        spec.h_list = {0.25};
        spec.jobs = 0;
        CHECK_THROWS_AS(run_convergence(spec), ConfigError);
    }
    SUBCASE("determinism and row fan-out") {
        StudySpec spec;
        spec.benchmark = BenchmarkId::Ex41;
        spec.regime = Regime::TauEqH;
        spec.h_list = {1.0 / 8, 1.0 / 16, 1.0 / 32, 1.0 / 64};
        spec.flags = {true, true, true};
        const ConvergenceTable a = run_convergence(spec);
        const ConvergenceTable b = run_convergence(spec);
        spec.jobs = 3;
        const ConvergenceTable c = run_convergence(spec);
        CHECK(a == b);
        CHECK(a == c);
    }
}

TEST_CASE("run_timing") {
    const TimingReport r = run_timing(BenchmarkId::Ex41, 15, 1);
    CHECK(r.h_coarse == 0.125);
    CHECK(r.h_full == 0.0625);
    CHECK(r.tau_full == doctest::Approx(1.0 / 256.0));
    CHECK(r.seconds_full > 0.0);
    CHECK(r.seconds_refined > 0.0);
    CHECK(testing::rel_diff(r.error_full, 6.0041e-8) < 1e-3);
    CHECK(testing::rel_diff(r.error_refined, 9.5518e-7) < 1e-3);
    CHECK_THROWS_AS(run_timing(BenchmarkId::Ex41, 16), ConfigError);
    CHECK_THROWS_AS(run_timing(BenchmarkId::Ex41, 5), ConfigError);
    CHECK_THROWS_AS(run_timing(BenchmarkId::Ex43, 15), ConfigError);
}

TEST_CASE("solve and extrapolate reports") {
    SolveSpec s;
    s.benchmark = BenchmarkId::Ex41;
    s.n_cells = 8;
    s.tau = 1.0 / 64;
    s.refine = true;
    s.gradient = true;
    const SolveReport r = run_solve(s);
    CHECK(r.dim == 1);
    int nodes = 0, mids = 0, grads = 0;
    for (const auto& p : r.points) {
        nodes += p.kind == "node";
        mids += p.kind == "mid";
        grads += p.kind == "grad";
    }
    CHECK(nodes == 9);
    CHECK(mids == 6);
    CHECK(grads == 7);
    CHECK(r.summary.front().first == "error_grid");

    const SolveReport e = run_extrapolate(s, ExtrapolationVariant::SpaceTime);
    CHECK(e.command == "extrapolate-spacetime");
    CHECK(e.summary[0].first == "error_coarse");

    SolveSpec s2;
    s2.benchmark = BenchmarkId::Ex43;
    s2.n_cells = 6;
    s2.tau = 0.01;
    s2.refine = true;
    const SolveReport r2 = run_solve(s2);
    int centers = 0;
    for (const auto& p : r2.points) centers += p.kind == "center";
    CHECK(centers == 4);  // i, j = 2..3

    s2.n_cells = 4;
    CHECK_THROWS_AS(run_solve(s2), ConfigError);
    s2.refine = false;
    CHECK_NOTHROW(run_solve(s2));
    s2.c = 2.0;
    CHECK_THROWS_AS(run_solve(s2), ConfigError);
}
