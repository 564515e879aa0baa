#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "hocd/bench.hpp"

namespace hocd::cli {

inline constexpr const char* kVersion = "0.1.0";

enum class Command { Solve, Converge, Extrapolate, Timing };
enum class Format { Csv, Json };

struct RunConfig {
    Command command = Command::Solve;
    BenchmarkId benchmark = BenchmarkId::Ex41;
    int dim = 1;
    int n_cells = 0;
    std::optional<double> tau;
    std::optional<long> n_steps;
    std::optional<Regime> regime;
    std::vector<double> h_list;
    std::vector<double> tau_list;
    double t_end = 1.0;
    double c = 1.0;
    bool refine = false;
    bool gradient = false;
    bool extrapolate = false;
    ExtrapolationVariant variant = ExtrapolationVariant::Time;
    int points = 255;
    int repeats = 3;
    int jobs = 1;
    Format format = Format::Csv;
    std::string output;  // empty: stdout
};

/// "1/64", "1e-5" or "0.25". Fractions are divided once, so 1/64 gives the double nearest 1/64.
/// Throws std::invalid_argument.
double parse_number(std::string_view text);
/// Comma separated list of parse_number values.
std::vector<double> parse_list(std::string_view text);

struct ParseOutcome {
    std::optional<RunConfig> config;
    int exit_code = 0;    // meaningful when config is empty
    std::string message;  // help/version text or diagnostic
};

ParseOutcome parse_args(int argc, const char* const* argv);

/// Runs a validated config and returns the rendered output.
std::string execute(const RunConfig& config);

/// Full command-line behavior. Exit status: 0 success, 1 I/O failure, 2 invalid input.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace hocd::cli
