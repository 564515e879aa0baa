#include "cli.hpp"

#include <CLI11.hpp>

#include <charconv>
#include <cmath>
#include <cstdlib>
#include <iostream>
#include <sstream>
#include <stdexcept>

#include "hocd/error.hpp"
#include "hocd/report.hpp"

namespace hocd::cli {

namespace {

long parse_integer(std::string_view text) {
    long v = 0;
    const auto [end, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
    if (ec != std::errc() || end != text.data() + text.size()) {
        throw std::invalid_argument("not an integer: '" + std::string(text) + "'");
    }
    return v;
}

}  // namespace

double parse_number(std::string_view text) {
    if (text.empty()) throw std::invalid_argument("empty number");
    const auto slash = text.find('/');
    if (slash != std::string_view::npos) {
        const long num = parse_integer(text.substr(0, slash));
        const long den = parse_integer(text.substr(slash + 1));
        if (den == 0) throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
        return static_cast<double>(num) / static_cast<double>(den);
    }
    const std::string s(text);
    char* end = nullptr;
    const double v = std::strtod(s.c_str(), &end);
    if (end != s.c_str() + s.size() || !std::isfinite(v)) {
        throw std::invalid_argument("not a number: '" + s + "'");
    }
    return v;
}

std::vector<double> parse_list(std::string_view text) {
    std::vector<double> out;
    std::size_t start = 0;
    while (true) {
        const auto comma = text.find(',', start);
        out.push_back(parse_number(text.substr(start, comma == std::string_view::npos ? text.npos : comma - start)));
        if (comma == std::string_view::npos) break;
        start = comma + 1;
    }
    return out;
}

namespace {

struct RawArgs {
    std::string benchmark;
    int dim = 0;
    int n_cells = 0;
    std::string tau;
    long n_steps = 0;
    std::string h;
    std::string regime;
    std::string t_end = "1";
    std::string c = "1";
    std::string variant = "time";
    std::string format = "csv";
};

void add_output_options(CLI::App* sub, RawArgs& raw, RunConfig& cfg) {
    sub->add_option("--format", raw.format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
    sub->add_option("--output", cfg.output, "output file (default stdout)");
}

void add_problem_options(CLI::App* sub, RawArgs& raw, RunConfig& cfg) {
    sub->add_option("--benchmark", raw.benchmark, "ex41, ex42 or ex43")->required();
    sub->add_option("--dim", raw.dim, "1 or 2 (must match the benchmark)")->check(CLI::IsMember({1, 2}));
    sub->add_option("--T", raw.t_end, "final time");
    sub->add_option("--c", raw.c, "diffusivity (ex41 only)");
    sub->add_flag("--refine", cfg.refine, "emit refined midpoint/center values");
    sub->add_flag("--gradient", cfg.gradient, "emit numerical gradients");
}

void add_single_run_options(CLI::App* sub, RawArgs& raw) {
    sub->add_option("--N", raw.n_cells, "cells per axis")->required();
    auto* tau = sub->add_option("--tau", raw.tau, "time step, e.g. 1/400 or 1e-5");
    auto* m = sub->add_option("--M", raw.n_steps, "number of time steps");
    tau->excludes(m);
    m->excludes(tau);
}

void finish(RunConfig& cfg, const RawArgs& raw) {
    if (!raw.benchmark.empty()) {
        cfg.benchmark = parse_benchmark(raw.benchmark);
        cfg.dim = benchmark_dim(cfg.benchmark);
        if (raw.dim != 0 && raw.dim != cfg.dim) {
            throw ConfigError("--dim " + std::to_string(raw.dim) + " does not match " + raw.benchmark);
        }
    }
    cfg.t_end = parse_number(raw.t_end);
    cfg.c = parse_number(raw.c);
    cfg.format = raw.format == "json" ? Format::Json : Format::Csv;

    switch (cfg.command) {
        case Command::Solve:
        case Command::Extrapolate:
            cfg.n_cells = raw.n_cells;
            if (!raw.tau.empty()) cfg.tau = parse_number(raw.tau);
            if (raw.n_steps != 0) cfg.n_steps = raw.n_steps;
            if (!cfg.tau && !cfg.n_steps) throw ConfigError("one of --tau or --M is required");
            if (cfg.n_steps && *cfg.n_steps < 1) throw ConfigError("--M must be positive");
            if (cfg.command == Command::Extrapolate) {
                if (raw.variant != "time" && raw.variant != "spacetime") {
                    throw ConfigError("--variant must be time or spacetime");
                }
                cfg.variant = raw.variant == "time" ? ExtrapolationVariant::Time : ExtrapolationVariant::SpaceTime;
            }
            break;
        case Command::Converge:
            cfg.regime = parse_regime(raw.regime);
            cfg.h_list = parse_list(raw.h);
            if (!raw.tau.empty()) cfg.tau_list = parse_list(raw.tau);
            break;
        case Command::Timing:
            break;
    }
}

}  // namespace

ParseOutcome parse_args(int argc, const char* const* argv) {
    RunConfig cfg;
    RawArgs raw;
    CLI::App app{"High-order compact difference solver for the heat equation"};
    app.name("hocd");
    // "--h" is a mesh-size option, so help is long-form only.
    app.set_help_flag("--help", "print this help message and exit");
    app.set_version_flag("--version", kVersion);
    app.require_subcommand(1);

    auto* solve = app.add_subcommand("solve", "single solve with optional refinement");
    add_problem_options(solve, raw, cfg);
    add_single_run_options(solve, raw);
    add_output_options(solve, raw, cfg);

    auto* extra = app.add_subcommand("extrapolate", "Richardson extrapolation of two solves");
    add_problem_options(extra, raw, cfg);
    add_single_run_options(extra, raw);
    extra->add_option("--variant", raw.variant, "time or spacetime");
    add_output_options(extra, raw, cfg);

    auto* conv = app.add_subcommand("converge", "convergence study over a list of step sizes");
    add_problem_options(conv, raw, cfg);
    conv->add_option("--regime", raw.regime, "fixed-tau, fixed-h, tau=h, tau=h2, tau=h/20")->required();
    conv->add_option("--h", raw.h, "comma separated mesh sizes, e.g. 1/4,1/8")->required();
    conv->add_option("--tau", raw.tau, "time step (fixed-tau) or comma separated list (fixed-h)");
    conv->add_flag("--extrapolate", cfg.extrapolate, "extrapolate in time before refining");
    conv->add_option("--jobs", cfg.jobs, "rows solved concurrently")->check(CLI::PositiveNumber);
    add_output_options(conv, raw, cfg);

    auto* timing = app.add_subcommand("timing", "full-resolution solve against coarse solve plus refinement");
    timing->add_option("--benchmark", raw.benchmark, "ex41 or ex42")->required();
    timing->add_option("--points", cfg.points, "matched output points (odd, >= 7)");
    timing->add_option("--repeats", cfg.repeats, "timed runs per path; the median is reported")
        ->check(CLI::PositiveNumber);
    add_output_options(timing, raw, cfg);

    ParseOutcome outcome;
    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        std::ostringstream out, err;
        const int code = app.exit(e, out, err);
        outcome.exit_code = code == 0 ? 0 : 2;
        outcome.message = code == 0 ? out.str() : err.str();
        return outcome;
    }

    if (solve->parsed()) cfg.command = Command::Solve;
    else if (extra->parsed()) cfg.command = Command::Extrapolate;
    else if (conv->parsed()) cfg.command = Command::Converge;
    else cfg.command = Command::Timing;

    try {
        finish(cfg, raw);
    } catch (const std::exception& e) {
        outcome.exit_code = 2;
        outcome.message = std::string("hocd: ") + e.what() + "\n";
        return outcome;
    }
    outcome.config = cfg;
    return outcome;
}

namespace {

SolveSpec solve_spec(const RunConfig& cfg) {
    SolveSpec spec;
    spec.benchmark = cfg.benchmark;
    spec.n_cells = cfg.n_cells;
    spec.t_end = cfg.t_end;
    spec.tau = cfg.tau ? *cfg.tau : cfg.t_end / static_cast<double>(*cfg.n_steps);
    spec.c = cfg.c;
    spec.refine = cfg.refine;
    spec.gradient = cfg.gradient;
    return spec;
}

template <typename T>
std::string render(const T& value, Format format) {
    return format == Format::Json ? to_json(value).dump(2) + "\n" : to_csv(value);
}

}  // namespace

std::string execute(const RunConfig& cfg) {
    switch (cfg.command) {
        case Command::Solve:
            return render(run_solve(solve_spec(cfg)), cfg.format);
        case Command::Extrapolate:
            return render(run_extrapolate(solve_spec(cfg), cfg.variant), cfg.format);
        case Command::Converge: {
            StudySpec spec;
            spec.benchmark = cfg.benchmark;
            spec.regime = *cfg.regime;
            spec.h_list = cfg.h_list;
            spec.tau_list = cfg.tau_list;
            spec.t_end = cfg.t_end;
            spec.c = cfg.c;
            spec.flags = {cfg.refine, cfg.gradient, cfg.extrapolate};
            spec.jobs = cfg.jobs;
            return render(run_convergence(spec), cfg.format);
        }
        case Command::Timing:
            return render(run_timing(cfg.benchmark, cfg.points, cfg.repeats), cfg.format);
    }
    return {};
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    const ParseOutcome parsed = parse_args(argc, argv);
    if (!parsed.config) {
        (parsed.exit_code == 0 ? out : err) << parsed.message;
        return parsed.exit_code;
    }
    const RunConfig& cfg = *parsed.config;

    std::string content;
    try {
        content = execute(cfg);
    } catch (const Error& e) {
        // Library errors here all trace back to the flags: sizes, steps, unsupported combinations.
        err << "hocd: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        err << "hocd: " << e.what() << "\n";
        return 1;
    }

    if (cfg.output.empty()) {
        out << content;
        out.flush();
        return out ? 0 : 1;
    }
    try {
        write_atomically(cfg.output, content);
    } catch (const std::exception& e) {
        err << "hocd: " << e.what() << "\n";
        return 1;
    }
    return 0;
}

}  // namespace hocd::cli
