#pragma once

#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "hocd/grid.hpp"
#include "hocd/refine1d.hpp"
#include "hocd/refine2d.hpp"
#include "hocd/solver1d.hpp"
#include "hocd/solver2d.hpp"

namespace hocd {

/// Manufactured-solution problems with closed-form solutions.
///   ex41: u = exp(-c pi^2 t) sin(pi x)                    (1D, zero boundaries)
///   ex42: u = exp(x + t)                                  (1D, c = 1 only)
///   ex43: u = exp(-2 pi^2 t) sin(pi x) sin(pi y)          (2D, unit square)
enum class BenchmarkId { Ex41, Ex42, Ex43 };

std::string to_string(BenchmarkId id);
/// Accepts "ex41", "ex42", "ex43"; throws ConfigError otherwise.
BenchmarkId parse_benchmark(std::string_view name);
int benchmark_dim(BenchmarkId id);

using Exact1D = std::function<double(double, double)>;          // (x, t)
using Exact2D = std::function<double(double, double, double)>;  // (x, y, t)

struct Benchmark1D {
    BenchmarkId id;
    HeatProblem1D problem;
    Exact1D exact;
    Exact1D exact_dx;
};

struct Benchmark2D {
    BenchmarkId id;
    HeatProblem2D problem;
    Exact2D exact;
    Exact2D exact_dx;
    Exact2D exact_dy;
};

Benchmark1D make_benchmark_1d(BenchmarkId id, double c = 1.0);
Benchmark2D make_benchmark_2d(BenchmarkId id);

// Discrete maximum-norm errors. Each checks that the field's time level equals at_time.
double max_error(const Field1D& numeric, const Exact1D& exact, double at_time);
double max_error(const RefinedField1D& numeric, const Exact1D& exact, double at_time);
double max_error(const GradientField1D& numeric, const Exact1D& exact_dx, double at_time);
double max_error(const Field2D& numeric, const Exact2D& exact, double at_time);
/// Max error over the valid box of `values`, sampled at (x_i + sx*h_x, y_j + sy*h_y).
double max_error(const BoxedArray2D& values, const Grid2D& grid, double sx, double sy, const Exact2D& exact,
                 double at_time);
/// Max of |u| over all nodes; denominators for the supplementary relative error.
double max_abs(const Field1D& u);
double max_abs(const Field2D& u);

/// log2(e_coarse / e_fine); empty when either error is not positive.
std::optional<double> observed_rate(double e_coarse, double e_fine);
/// e_coarse / e_fine; empty when either error is not positive.
std::optional<double> error_ratio(double e_coarse, double e_fine);

/// How tau is chosen per row of a study.
enum class Regime { FixedTau, FixedH, TauEqH, TauEqH2, TauEqHOver20 };

std::string to_string(Regime regime);
/// Accepts fixed-tau, fixed-h, tau=h, tau=h2 (or tau=h^2), tau=h/20.
Regime parse_regime(std::string_view name);

/// Rates (log2 of successive ratios) for the single-parameter studies, plain ratios for the
/// coupled regimes where h and tau shrink together.
enum class Measure { Rate, Ratio };
Measure measure_for(Regime regime);

struct StudyFlags {
    bool refine = false;
    bool gradient = false;
    bool extrapolate = false;
};

struct StudySpec {
    BenchmarkId benchmark = BenchmarkId::Ex41;
    Regime regime = Regime::FixedTau;
    std::vector<double> h_list;    // one entry for FixedH
    std::vector<double> tau_list;  // one entry for FixedTau, halving list for FixedH, unused otherwise
    double t_end = 1.0;
    double c = 1.0;
    StudyFlags flags;
    int jobs = 1;
};

struct ConvergenceRow {
    double h = 0.0;
    double tau = 0.0;
    int n_cells = 0;
    long n_steps = 0;
    long interior_unknowns = 0;
    double error_grid = 0.0;
    std::optional<double> error_mid;   // 1D midpoints, 2D cell centers
    std::optional<double> error_grad;  // 1D P_j, 2D max over K and L
    std::optional<double> rate_grid;
    std::optional<double> rate_mid;
    std::optional<double> rate_grad;
    double rel_error_grid = 0.0;      // supplementary, relative to max nodal amplitude
    double error_all = 0.0;           // max(error_grid, error_mid)
    std::optional<double> rate_all;

    bool operator==(const ConvergenceRow&) const = default;
};

struct ConvergenceTable {
    BenchmarkId benchmark = BenchmarkId::Ex41;
    int dim = 1;
    Regime regime = Regime::FixedTau;
    Measure measure = Measure::Rate;
    bool extrapolated = false;
    std::vector<ConvergenceRow> rows;

    bool operator==(const ConvergenceTable&) const = default;
};

/// One solve per row (two when extrapolating: tau and tau/2, refined after extrapolation).
/// Rows may run concurrently when spec.jobs > 1; results do not depend on jobs.
ConvergenceTable run_convergence(const StudySpec& spec);

/// Fills rate columns from adjacent rows. The last row has none.
void fill_rates(ConvergenceTable& table);

struct TimingReport {
    BenchmarkId benchmark = BenchmarkId::Ex41;
    int points = 0;
    int repeats = 3;
    double h_full = 0.0, tau_full = 0.0;
    double h_coarse = 0.0, tau_coarse = 0.0;
    double seconds_full = 0.0;
    double seconds_refined = 0.0;
    double error_full = 0.0;
    double error_refined = 0.0;
    double speedup = 0.0;
};

/// Compares the full-resolution solve against a half-resolution solve plus midpoint refinement,
/// both with tau = h^2. `points` must be odd and at least 7; only 1D benchmarks are supported.
/// Wall times are the median of `repeats` runs of the solve path only.
TimingReport run_timing(BenchmarkId id, int points, int repeats = 3);

/// One output sample of a solve: a node, refined point or gradient value with its exact value.
struct SamplePoint {
    double x = 0.0;
    double y = 0.0;
    std::string kind;  // node | mid | grad (1D); node | xmid | ymid | center | K | L (2D)
    double value = 0.0;
    double exact = 0.0;

    bool operator==(const SamplePoint&) const = default;
};

struct SolveSpec {
    BenchmarkId benchmark = BenchmarkId::Ex41;
    int n_cells = 8;
    double tau = 1e-3;
    double t_end = 1.0;
    double c = 1.0;
    bool refine = false;
    bool gradient = false;
};

enum class ExtrapolationVariant { Time, SpaceTime };

struct SolveReport {
    std::string command;
    BenchmarkId benchmark = BenchmarkId::Ex41;
    int dim = 1;
    int n_cells = 0;
    double h = 0.0;
    double tau = 0.0;
    double t_end = 0.0;
    std::vector<std::pair<std::string, double>> summary;
    std::vector<SamplePoint> points;
};

SolveReport run_solve(const SolveSpec& spec);
/// Solves with (h, tau) and (h, tau/2), or (h/2, tau/4) for SpaceTime, extrapolates, then refines.
SolveReport run_extrapolate(const SolveSpec& spec, ExtrapolationVariant variant);

}  // namespace hocd
