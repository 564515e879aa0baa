#include "hocd/report.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <system_error>

#include "hocd/error.hpp"

namespace hocd {

using nlohmann::json;

std::string format_sci(double value) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.4e", value);
    return buf;
}

std::string format_cell(const std::optional<double>& value) { return value ? format_sci(*value) : "*"; }

std::string to_csv(const ConvergenceTable& table) {
    std::ostringstream out;
    out << kTableCsvHeader << '\n';
    for (const auto& r : table.rows) {
        out << format_sci(r.h) << ',' << format_sci(r.tau) << ',' << format_sci(r.error_grid) << ','
            << format_cell(r.rate_grid) << ',' << format_cell(r.error_mid) << ',' << format_cell(r.rate_mid) << ','
            << format_cell(r.error_grad) << ',' << format_cell(r.rate_grad) << '\n';
    }
    return out.str();
}

std::string to_csv(const TimingReport& rep) {
    std::ostringstream out;
    out << "path,points,h,tau,error,seconds\n";
    out << "full," << rep.points << ',' << format_sci(rep.h_full) << ',' << format_sci(rep.tau_full) << ','
        << format_sci(rep.error_full) << ',' << format_sci(rep.seconds_full) << '\n';
    out << "refined," << rep.points << ',' << format_sci(rep.h_coarse) << ',' << format_sci(rep.tau_coarse) << ','
        << format_sci(rep.error_refined) << ',' << format_sci(rep.seconds_refined) << '\n';
    return out.str();
}

std::string to_csv(const SolveReport& rep) {
    std::ostringstream out;
    out << (rep.dim == 1 ? "x,kind,value,exact,abs_error\n" : "x,y,kind,value,exact,abs_error\n");
    for (const auto& p : rep.points) {
        out << format_sci(p.x) << ',';
        if (rep.dim == 2) out << format_sci(p.y) << ',';
        out << p.kind << ',' << format_sci(p.value) << ',' << format_sci(p.exact) << ','
            << format_sci(std::abs(p.value - p.exact)) << '\n';
    }
    return out.str();
}

namespace {

json opt(const std::optional<double>& v) { return v ? json(*v) : json(nullptr); }

std::optional<double> opt_from(const json& j, const char* key) {
    if (!j.contains(key) || j.at(key).is_null()) return std::nullopt;
    return j.at(key).get<double>();
}

}  // namespace

json to_json(const ConvergenceTable& table) {
    json rows = json::array();
    for (const auto& r : table.rows) {
        rows.push_back({{"h", r.h},
                        {"tau", r.tau},
                        {"n_cells", r.n_cells},
                        {"n_steps", r.n_steps},
                        {"interior_unknowns", r.interior_unknowns},
                        {"error_grid", r.error_grid},
                        {"rate_grid", opt(r.rate_grid)},
                        {"error_mid", opt(r.error_mid)},
                        {"rate_mid", opt(r.rate_mid)},
                        {"error_grad", opt(r.error_grad)},
                        {"rate_grad", opt(r.rate_grad)},
                        {"error_all", r.error_all},
                        {"rate_all", opt(r.rate_all)},
                        {"rel_error_grid", r.rel_error_grid}});
    }
    return {{"benchmark", to_string(table.benchmark)},
            {"dim", table.dim},
            {"regime", to_string(table.regime)},
            {"measure", table.measure == Measure::Rate ? "rate" : "ratio"},
            {"extrapolated", table.extrapolated},
            {"rows", rows}};
}

ConvergenceTable table_from_json(const json& j) {
    ConvergenceTable t;
    t.benchmark = parse_benchmark(j.at("benchmark").get<std::string>());
    t.dim = j.at("dim").get<int>();
    t.regime = parse_regime(j.at("regime").get<std::string>());
    const auto measure = j.at("measure").get<std::string>();
    if (measure != "rate" && measure != "ratio") throw ConfigError("unknown measure '" + measure + "'");
    t.measure = measure == "rate" ? Measure::Rate : Measure::Ratio;
    t.extrapolated = j.at("extrapolated").get<bool>();
    for (const auto& r : j.at("rows")) {
        ConvergenceRow row;
        row.h = r.at("h").get<double>();
        row.tau = r.at("tau").get<double>();
        row.n_cells = r.at("n_cells").get<int>();
        row.n_steps = r.at("n_steps").get<long>();
        row.interior_unknowns = r.at("interior_unknowns").get<long>();
        row.error_grid = r.at("error_grid").get<double>();
        row.rate_grid = opt_from(r, "rate_grid");
        row.error_mid = opt_from(r, "error_mid");
        row.rate_mid = opt_from(r, "rate_mid");
        row.error_grad = opt_from(r, "error_grad");
        row.rate_grad = opt_from(r, "rate_grad");
        row.error_all = r.at("error_all").get<double>();
        row.rate_all = opt_from(r, "rate_all");
        row.rel_error_grid = r.at("rel_error_grid").get<double>();
        t.rows.push_back(row);
    }
    return t;
}

json to_json(const TimingReport& rep) {
    return {{"benchmark", to_string(rep.benchmark)},
            {"points", rep.points},
            {"repeats", rep.repeats},
            {"full", {{"h", rep.h_full}, {"tau", rep.tau_full}, {"error", rep.error_full}, {"seconds", rep.seconds_full}}},
            {"refined",
             {{"h", rep.h_coarse}, {"tau", rep.tau_coarse}, {"error", rep.error_refined}, {"seconds", rep.seconds_refined}}},
            {"speedup", rep.speedup}};
}

json to_json(const SolveReport& rep) {
    json summary = json::object();
    for (const auto& [k, v] : rep.summary) summary[k] = v;
    json points = json::array();
    for (const auto& p : rep.points) {
        json e = {{"x", p.x}, {"kind", p.kind}, {"value", p.value}, {"exact", p.exact}};
        if (rep.dim == 2) e["y"] = p.y;
        points.push_back(std::move(e));
    }
    return {{"command", rep.command},
            {"benchmark", to_string(rep.benchmark)},
            {"dim", rep.dim},
            {"n_cells", rep.n_cells},
            {"h", rep.h},
            {"tau", rep.tau},
            {"t_end", rep.t_end},
            {"summary", summary},
            {"points", points}};
}

void write_atomically(const std::filesystem::path& path, const std::string& content) {
    std::filesystem::path tmp = path;
    tmp += ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw std::runtime_error("cannot open " + tmp.string() + " for writing");
        out << content;
        out.flush();
        if (!out) {
            out.close();
            std::error_code ec;
            std::filesystem::remove(tmp, ec);
            throw std::runtime_error("write to " + tmp.string() + " failed");
        }
    }
    std::error_code ec;
    std::filesystem::rename(tmp, path, ec);
    if (ec) {
        std::filesystem::remove(tmp, ec);
        throw std::runtime_error("cannot move output into place at " + path.string());
    }
}

}  // namespace hocd
