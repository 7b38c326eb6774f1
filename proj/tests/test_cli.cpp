#include <doctest.h>

#include <charconv>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "spectral_chroma/bounds.hpp"
#include "spectral_chroma/errors.hpp"
#include "spectral_chroma/cli.hpp"
#include "spectral_chroma/spectrum.hpp"
#include "spectral_chroma/spherical.hpp"
#include "support/golden.hpp"

using namespace spectral_chroma;
using golden::Json;
namespace fs = std::filesystem;

namespace {

const fs::path kData = SPECTRAL_CHROMA_TEST_DATA_DIR;
const fs::path kGolden = SPECTRAL_CHROMA_TEST_GOLDEN_DIR;

golden::CliOutcome run(const std::vector<std::string>& args) { return golden::run_cli(args); }

std::string data(const char* name) { return (kData / name).string(); }

struct NoConfig {
    NoConfig() { ::unsetenv(cli::kConfigEnvVar); }
};

double parse_double(std::string_view s) {
    double v = 0.0;
    std::from_chars(s.data(), s.data() + s.size(), v);
    return v;
}

}  // namespace

TEST_CASE_FIXTURE(NoConfig, "golden outputs") {
    const bool update = std::getenv("SPECTRAL_CHROMA_UPDATE_GOLDEN") != nullptr;
    for (const auto& c : golden::cases(kData)) {
        CAPTURE(c.name);
        const auto problems = golden::check(c, kGolden, update);
        for (const auto& p : problems) MESSAGE(p);
        CHECK(problems.empty());
    }
}

TEST_CASE_FIXTURE(NoConfig, "exit-code matrix") {
    struct Case {
        std::vector<std::string> args;
        int code;
    };
    const std::vector<Case> cases{
        {{"--help"}, cli::kOk},
        {{"eval", "--help"}, cli::kOk},
        {{"--version"}, cli::kOk},
        {{}, cli::kUsage},
        {{"frobnicate"}, cli::kUsage},
        {{"eval", "--r", "1"}, cli::kUsage},
        {{"eval", "--r", "1", "--s", "1", "--sigma", "0.2"}, cli::kUsage},
        {{"eval", "--r", "-1", "--s", "1"}, cli::kUsage},
        {{"eval", "--r", "abc", "--s", "1"}, cli::kUsage},
        {{"eval", "--r", "1", "--sigma", "0.7"}, cli::kUsage},
        {{"eval", "--r", "1", "--s", "1", "--tol", "0"}, cli::kUsage},
        {{"eval", "--r", "800", "--s", "1"}, cli::kUsage},
        {{"eval", "--r", "20", "--s", "1", "--tol", "1e-300"}, cli::kTolerance},
        {{"scan", "--r", "0"}, cli::kUsage},
        {{"scan", "--r", "1", "--format", "xml"}, cli::kUsage},
        {{"scan", "--r", "1", "--s-max", "0.5"}, cli::kUsage},
        {{"scan", "--r", "1", "--step", "-0.1"}, cli::kUsage},
        {{"bounds", "--r", "10", "--lambda", "0.1"}, cli::kUsage},
        {{"bounds", "--r", "10", "--lambda", "0.1", "--c", "1.5"}, cli::kUsage},
        {{"bounds", "--r", "10", "--c", "0.5"}, cli::kUsage},
        {{"bounds", "--r", "10", "--lambda", "2", "--c", "0.5"}, cli::kUsage},
        {{"bounds", "--r", "10", "--lambda", "2"}, cli::kOk},
        {{"graph", "--input", data("self_loop.txt")}, cli::kUsage},
        {{"graph", "--input", data("malformed.txt")}, cli::kUsage},
        {{"graph", "--input", data("missing.txt")}, cli::kUsage},
        {{"graph", "--input", data("edgeless.txt")}, cli::kDegenerate},
        {{"graph", "--input", data("path4.txt"), "--regular"}, cli::kUsage},
        {{"graph", "--input", data("path4.txt")}, cli::kOk},
        {{"verify", "--r", "1", "--s", "1", "--n", "4"}, cli::kUsage},
        {{"verify", "--r", "1", "--s", "1", "--base", "0,-1"}, cli::kUsage},
        {{"verify", "--r", "1", "--s", "1", "--base", "zero"}, cli::kUsage},
        {{"verify", "--r", "1.5", "--s", "2", "--n", "8", "--base", "0.7,2.0"}, cli::kVerificationFailed},
    };
    for (const auto& c : cases) {
        std::string joined;
        for (const auto& a : c.args) joined += a + " ";
        CAPTURE(joined);
        const auto res = run(c.args);
        CHECK(res.code == c.code);
        if (c.code == cli::kOk) CHECK(res.err.empty());
        if (c.code != cli::kOk && c.code != cli::kVerificationFailed) CHECK_FALSE(res.err.empty());
    }
}

TEST_CASE_FIXTURE(NoConfig, "error messages name what went wrong") {
    CHECK(run({"eval", "--r", "-1", "--s", "1"}).err.find("--r must be > 0") != std::string::npos);
    CHECK(run({"bounds", "--r", "10", "--lambda", "0.1"}).err.find("--c") != std::string::npos);
    CHECK(run({"graph", "--input", data("self_loop.txt")}).err.find("line 3") != std::string::npos);
    CHECK(run({"graph", "--input", data("path4.txt"), "--regular"}).err.find("regular graph") != std::string::npos);
    const auto coarse = run({"verify", "--r", "1.5", "--s", "2", "--n", "8", "--base", "0.7,2.0"});
    CHECK(Json::parse(coarse.out)["results"]["verdict"] == "fail");
    CHECK(Json::parse(coarse.out)["results"]["residual"].get<double>() > 1e-6);
}

TEST_CASE_FIXTURE(NoConfig, "printed numbers equal in-process values exactly") {
    const Json e = Json::parse(run({"eval", "--r", "2", "--s", "1"}).out);
    CHECK(e["results"]["value"].get<double>() == spherical::eval(spherical::SpectralParameter::principal(1.0), 2.0));
    CHECK(e["results"]["envelope"].get<double>() == spherical::envelope(2.0));

    const Json b = Json::parse(run({"bounds", "--r", "10"}).out);
    const auto rep = bounds::main_bounds(10.0);
    CHECK(b["results"]["ind_ratio_exact"].get<double>() == rep.ind_ratio_exact);
    CHECK(b["results"]["chi_lower"].get<double>() == rep.chi_lower);
    CHECK(b["results"]["pp_chi_upper"].get<double>() == 45.0);

    const Json s = Json::parse(run({"scan", "--r", "4"}).out);
    const auto sum = spectrum::scan_principal(4.0);
    CHECK(s["results"]["m_numeric"].get<double>() == sum.m_numeric);
    CHECK(s["results"]["M"].get<double>() == 1.0);
}

TEST_CASE_FIXTURE(NoConfig, "every numeric result carries a provenance label") {
    for (const std::vector<std::string>& args :
         {std::vector<std::string>{"eval", "--r", "2", "--s", "1"}, {"scan", "--r", "4"},
          {"bounds", "--r", "10", "--lambda", "0.25"}, {"graph", "--input", data("petersen.txt")},
          {"verify", "--r", "1", "--sigma", "0.5", "--n", "16"}}) {
        const Json j = Json::parse(run(args).out);
        for (const auto& [key, value] : j["results"].items()) {
            CAPTURE(key);
            if (!value.is_number()) continue;
            REQUIRE(j["provenance"].contains(key));
            const auto label = j["provenance"][key].get<std::string>();
            CHECK((label == "certified-analytic" || label == "numerical-scan" || label == "formula"));
        }
        CHECK(j["meta"]["tool_version"] == std::string(cli::kToolVersion));
    }
}

TEST_CASE_FIXTURE(NoConfig, "JSON output round-trips") {
    for (const std::vector<std::string>& args :
         {std::vector<std::string>{"eval", "--r", "2", "--s", "1"}, {"bounds", "--r", "7.25", "--lambda", "3"},
          {"scan", "--r", "4"}}) {
        const auto out = run(args).out;
        const Json once = Json::parse(out);
        CHECK(once.dump(2) + "\n" == out);
        CHECK(Json::parse(once.dump()) == once);
    }
}

TEST_CASE_FIXTURE(NoConfig, "scan CSV rows") {
    const auto res = run({"scan", "--r", "4", "--format", "csv", "--s-max", "5", "--step", "0.5"});
    REQUIRE(res.code == cli::kOk);
    std::istringstream in(res.out);
    std::string line;
    std::getline(in, line);
    CHECK(line == "s,value");
    std::vector<spectrum::GridSample> grid;
    spectrum::ScanOptions opt;
    opt.s_max = 5.0;
    opt.grid_step = 0.5;
    spectrum::scan_principal(4.0, opt, &grid);
    std::size_t rows = 0;
    while (std::getline(in, line) && !line.starts_with("#")) {
        const auto comma = line.find(',');
        REQUIRE(comma != std::string::npos);
        REQUIRE(rows < grid.size());
        CHECK(parse_double(std::string_view(line).substr(0, comma)) == grid[rows].s);
        CHECK(parse_double(std::string_view(line).substr(comma + 1)) == grid[rows].value);
        ++rows;
    }
    CHECK(rows == grid.size());
    CHECK(line.starts_with("# summary: "));
    const Json summary = Json::parse(line.substr(std::string("# summary: ").size()));
    CHECK(summary["results"]["M"] == 1.0);
}

TEST_CASE_FIXTURE(NoConfig, "bounds CSV table") {
    const auto res = run({"bounds", "--r", "3", "--format", "csv"});
    REQUIRE(res.code == cli::kOk);
    CHECK(res.out.starts_with("field,value,provenance\n"));
    CHECK(res.out.find("chi_lower,") != std::string::npos);
    CHECK(res.out.find("pp_chi_upper") == std::string::npos);
    CHECK(res.out.find("ind_ratio_exact," + cli::format_double(bounds::main_bounds(3.0).ind_ratio_exact) +
                       ",certified-analytic\n") != std::string::npos);
}

TEST_CASE("shortest round-trip formatting") {
    CHECK(cli::format_double(0.1) == "0.1");
    CHECK(cli::format_double(45.0) == "45");
    CHECK(cli::format_double(1e-300) == "1e-300");
    const double x = std::exp(-5.0) * 11.0;
    CHECK(parse_double(cli::format_double(x)) == x);
}

TEST_CASE("config files") {
    const fs::path file = fs::temp_directory_path() / "spectral_chroma_test.conf";
    {
        std::ofstream(file) << "# experiment defaults\nstep = 0.1\ns_max=20\nabs_tol=1e-9\n";
    }
    ::setenv(cli::kConfigEnvVar, file.string().c_str(), 1);

    Json j = Json::parse(run({"scan", "--r", "4"}).out);
    CHECK(j["meta"]["grid"]["grid_step"] == 0.1);
    CHECK(j["meta"]["grid"]["s_max"] == 20.0);
    CHECK(j["meta"]["tolerances"]["abs_tol"] == 1e-9);

    j = Json::parse(run({"scan", "--r", "4", "--step", "0.25"}).out);
    CHECK(j["meta"]["grid"]["grid_step"] == 0.25);
    CHECK(j["meta"]["grid"]["s_max"] == 20.0);

    j = Json::parse(run({"eval", "--r", "2", "--s", "1", "--tol", "1e-11"}).out);
    CHECK(j["meta"]["tolerances"]["abs_tol"] == 1e-11);

    {
        std::ofstream(file) << "stepp = 0.1\n";
    }
    const auto bad = run({"scan", "--r", "4"});
    CHECK(bad.code == cli::kUsage);
    CHECK(bad.err.find("line 1") != std::string::npos);

    ::setenv(cli::kConfigEnvVar, (file.string() + ".missing").c_str(), 1);
    CHECK(run({"eval", "--r", "2", "--s", "1"}).code == cli::kUsage);

    ::unsetenv(cli::kConfigEnvVar);
    fs::remove(file);
}

TEST_CASE("config parsing") {
    std::istringstream in("n = 4096\nthreads=2\noscillation_panel_factor = 0.25\nmax_subdivisions = 100\n");
    const auto cfg = cli::parse_config(in, {});
    CHECK(cfg.n == 4096);
    CHECK(cfg.threads == 2);
    CHECK(cfg.quad.oscillation_panel_factor == 0.25);
    CHECK(cfg.quad.max_subdivisions == 100);
    std::istringstream bad("abs_tol = fast\n");
    CHECK_THROWS_AS(cli::parse_config(bad, {}), InputFormatError);
}
