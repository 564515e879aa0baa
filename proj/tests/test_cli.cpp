#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "cli.hpp"
#include "hocd/report.hpp"

using namespace hocd;
using namespace hocd::cli;
namespace fs = std::filesystem;

namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result call(std::vector<const char*> args) {
    args.insert(args.begin(), "hocd");
    std::ostringstream out, err;
    const int code = run(static_cast<int>(args.size()), args.data(), out, err);
    return {code, out.str(), err.str()};
}

RunConfig parsed(std::vector<const char*> args) {
    args.insert(args.begin(), "hocd");
    const ParseOutcome o = parse_args(static_cast<int>(args.size()), args.data());
    REQUIRE_MESSAGE(o.config, o.message);
    return *o.config;
}

std::string read_file(const fs::path& p) {
    std::ifstream in(p);
    return std::string((std::istreambuf_iterator<char>(in)), {});
}

}  // namespace

TEST_CASE("number parsing") {
    CHECK(parse_number("1/64") == 1.0 / 64.0);
    CHECK(parse_number("1/3") == 1.0 / 3.0);
    CHECK(parse_number("1e-5") == 1e-5);
    CHECK(parse_number("0.25") == 0.25);
    CHECK(parse_list("1/4,1/8,0.0625") == std::vector<double>{0.25, 0.125, 0.0625});
    CHECK_THROWS_AS(parse_number(""), std::invalid_argument);
    CHECK_THROWS_AS(parse_number("1/0"), std::invalid_argument);
    CHECK_THROWS_AS(parse_number("1/x"), std::invalid_argument);
    CHECK_THROWS_AS(parse_number("0.5.1"), std::invalid_argument);
    CHECK_THROWS_AS(parse_list("1/4,"), std::invalid_argument);
}

TEST_CASE("documented invocations") {
    const RunConfig a = parsed({"converge", "--dim", "1", "--benchmark", "ex41", "--regime", "fixed-tau", "--tau", "1e-5",
                                "--h", "1/4,1/8,1/16,1/32,1/64", "--refine", "--gradient"});
    CHECK(a.command == Command::Converge);
    CHECK(a.benchmark == BenchmarkId::Ex41);
    CHECK(*a.regime == Regime::FixedTau);
    CHECK(a.tau_list == std::vector<double>{1e-5});
    CHECK(a.h_list.size() == 5);
    CHECK(a.h_list[4] == 1.0 / 64.0);
    CHECK(a.refine);
    CHECK(a.gradient);
    CHECK_FALSE(a.extrapolate);

    const RunConfig b = parsed({"solve", "--dim", "2", "--benchmark", "ex43", "--N", "20", "--tau", "1/400", "--T", "1",
                                "--refine"});
    CHECK(b.command == Command::Solve);
    CHECK(b.dim == 2);
    CHECK(b.n_cells == 20);
    CHECK(*b.tau == 1.0 / 400.0);
    CHECK(b.t_end == 1.0);

    const RunConfig c = parsed({"timing", "--benchmark", "ex41", "--points", "255"});
    CHECK(c.command == Command::Timing);
    CHECK(c.points == 255);
    CHECK(c.repeats == 3);
    CHECK(c.format == Format::Csv);
}

TEST_CASE("exit statuses") {
    CHECK(call({"--version"}).code == 0);
    CHECK(call({"--version"}).out.find(kVersion) != std::string::npos);
    const Result help = call({"--help"});
    CHECK(help.code == 0);
    CHECK(help.out.find("converge") != std::string::npos);

    CHECK(call({}).code == 2);
    CHECK(call({"solve", "--benchmark", "ex41", "--N", "8", "--tau", "0.1", "--bogus"}).code == 2);
    CHECK(call({"solve", "--benchmark", "ex41", "--N", "8"}).code == 2);
    CHECK(call({"solve", "--benchmark", "ex41", "--N", "8", "--tau", "0.1", "--M", "10"}).code == 2);
    CHECK(call({"solve", "--dim", "2", "--benchmark", "ex41", "--N", "8", "--tau", "0.1"}).code == 2);
    CHECK(call({"solve", "--benchmark", "ex44", "--N", "8", "--tau", "0.1"}).code == 2);
    CHECK(call({"solve", "--benchmark", "ex41", "--N", "3", "--tau", "0.1", "--refine"}).code == 2);
    CHECK(call({"solve", "--benchmark", "ex43", "--N", "4", "--tau", "0.1", "--refine"}).code == 2);
    CHECK(call({"converge", "--benchmark", "ex41", "--regime", "tau=h", "--h", "1/4,1/6"}).code == 2);
    CHECK(call({"converge", "--benchmark", "ex41", "--regime", "tau=h", "--h", "1/4", "--jobs", "0"}).code == 2);
    CHECK(call({"timing", "--benchmark", "ex41", "--points", "16"}).code == 2);
    CHECK(call({"solve", "--benchmark", "ex41", "--N", "8", "--tau", "0.1", "--format", "xml"}).code == 2);

    const Result ok = call({"solve", "--benchmark", "ex41", "--N", "8", "--M", "8", "--refine"});
    CHECK(ok.code == 0);
    CHECK(ok.err.empty());
}

TEST_CASE("output files") {
    const fs::path dir = fs::temp_directory_path() / "hocd_test_cli";
    fs::create_directories(dir);
    const std::string good = (dir / "t.json").string();
    CHECK(call({"solve", "--benchmark", "ex42", "--N", "6", "--tau", "0.1", "--format", "json", "--output",
                good.c_str()})
              .code == 0);
    const auto j = nlohmann::json::parse(read_file(good));
    CHECK(j["n_cells"] == 6);

    const std::string bad = (dir / "nope" / "t.csv").string();
    const Result r = call({"solve", "--benchmark", "ex42", "--N", "6", "--tau", "0.1", "--output", bad.c_str()});
    CHECK(r.code == 1);
    CHECK_FALSE(r.err.empty());
    CHECK_FALSE(fs::exists(bad));
    CHECK_FALSE(fs::exists(bad + ".tmp"));
    fs::remove_all(dir);
}

TEST_CASE("the command line is a thin shell over the library") {
    StudySpec spec;
    spec.benchmark = BenchmarkId::Ex41;
    spec.regime = Regime::FixedTau;
    spec.h_list = {0.25, 0.125, 0.0625};
    spec.tau_list = {1e-3};
    spec.flags = {true, true, false};
    const Result r = call({"converge", "--benchmark", "ex41", "--regime", "fixed-tau", "--tau", "1e-3", "--h",
                           "1/4,1/8,1/16", "--refine", "--gradient"});
    REQUIRE(r.code == 0);
    CHECK(r.out == to_csv(run_convergence(spec)));
    CHECK(r.out == read_file(HOCD_GOLDEN_DIR "/converge_ex41.csv"));

    const Result j = call({"converge", "--benchmark", "ex41", "--regime", "fixed-tau", "--tau", "1e-3", "--h",
                           "1/4,1/8,1/16", "--refine", "--gradient", "--format", "json"});
    CHECK(table_from_json(nlohmann::json::parse(j.out)) == run_convergence(spec));

    SolveSpec s;
    s.benchmark = BenchmarkId::Ex43;
    s.n_cells = 6;
    s.tau = 0.05;
    s.refine = true;
    const Result sr = call({"solve", "--benchmark", "ex43", "--N", "6", "--tau", "1/20", "--refine"});
    CHECK(sr.out == to_csv(run_solve(s)));
    CHECK(sr.out == read_file(HOCD_GOLDEN_DIR "/solve_ex43.csv"));

    const Result e = call({"extrapolate", "--benchmark", "ex41", "--N", "8", "--M", "8", "--variant", "spacetime"});
    SolveSpec es;
    es.n_cells = 8;
    es.tau = 0.125;
    CHECK(e.out == to_csv(run_extrapolate(es, ExtrapolationVariant::SpaceTime)));
}
