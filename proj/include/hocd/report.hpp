#pragma once

#include <filesystem>
#include <optional>
#include <string>

#include <json.hpp>

#include "hocd/bench.hpp"

namespace hocd {

/// Scientific notation with 5 significant digits, e.g. 8.3491e-07.
std::string format_sci(double value);
/// format_sci, or "*" when absent.
std::string format_cell(const std::optional<double>& value);

inline constexpr const char* kTableCsvHeader = "h,tau,error_grid,rate_grid,error_mid,rate_mid,error_grad,rate_grad";

std::string to_csv(const ConvergenceTable& table);
std::string to_csv(const TimingReport& report);
std::string to_csv(const SolveReport& report);

nlohmann::json to_json(const ConvergenceTable& table);
nlohmann::json to_json(const TimingReport& report);
nlohmann::json to_json(const SolveReport& report);

ConvergenceTable table_from_json(const nlohmann::json& j);

/// Writes to a sibling temporary file and renames it over `path`, so a failed write never
/// leaves a partial file. Throws std::runtime_error on I/O failure.
void write_atomically(const std::filesystem::path& path, const std::string& content);

}  // namespace hocd
