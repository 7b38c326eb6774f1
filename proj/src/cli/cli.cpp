#include "spectral_chroma/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <charconv>
#include <cmath>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "spectral_chroma/bounds.hpp"
#include "spectral_chroma/errors.hpp"
#include "spectral_chroma/geometry.hpp"
#include "spectral_chroma/graph.hpp"
#include "spectral_chroma/spectrum.hpp"
#include "spectral_chroma/spherical.hpp"

namespace spectral_chroma::cli {

using Json = nlohmann::ordered_json;
using bounds::Provenance;

std::string format_double(double v) {
    char buf[64];
    const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
    return ec == std::errc{} ? std::string(buf, ptr) : std::string("nan");
}

namespace {

/// A usage error detected after CLI11 parsing.
class UsageError : public Error {
public:
    using Error::Error;
};

/// Accumulates one command's output record.
class Record {
public:
    explicit Record(std::string command) { json_["command"] = std::move(command); }

    Json& inputs() { return json_["inputs"]; }

    void result(const std::string& key, double value, Provenance p) {
        json_["results"][key] = value;
        json_["provenance"][key] = bounds::to_string(p);
    }
    void result(const std::string& key, std::size_t value, Provenance p) {
        json_["results"][key] = value;
        json_["provenance"][key] = bounds::to_string(p);
    }
    void flag(const std::string& key, Json value) { json_["results"][key] = std::move(value); }

    void meta(const Config& cfg, bool with_tolerances, Json grid = nullptr) {
        Json& m = json_["meta"];
        m["tool_version"] = kToolVersion;
        if (with_tolerances)
            m["tolerances"] = {{"abs_tol", cfg.quad.abs_tol},
                               {"max_subdivisions", cfg.quad.max_subdivisions},
                               {"oscillation_panel_factor", cfg.quad.oscillation_panel_factor}};
        if (!grid.is_null()) m["grid"] = std::move(grid);
    }

    const Json& json() const { return json_; }

private:
    Json json_ = Json::object();
};

void require_positive(double v, const char* flag) {
    if (!(v > 0.0) || !std::isfinite(v))
        throw UsageError(std::string("precondition violated: ") + flag + " must be > 0, got " + format_double(v));
}

spherical::SpectralParameter parameter_from(const std::optional<double>& s, const std::optional<double>& sigma) {
    if (s.has_value() == sigma.has_value()) throw UsageError("exactly one of --s or --sigma is required");
    if (s) return spherical::SpectralParameter::principal(*s);
    if (std::abs(*sigma) > 0.5)
        throw UsageError("precondition violated: --sigma must satisfy |sigma| <= 0.5, got " + format_double(*sigma));
    return spherical::SpectralParameter::complementary(*sigma);
}

void describe_parameter(Json& inputs, const std::optional<double>& s, const std::optional<double>& sigma) {
    if (s) {
        inputs["series"] = "principal";
        inputs["s"] = *s;
    } else {
        inputs["series"] = "complementary";
        inputs["sigma"] = *sigma;
    }
}

geometry::Point parse_base(const std::string& text) {
    const auto comma = text.find(',');
    if (comma == std::string::npos) throw UsageError("--base expects \"x,y\", got '" + text + "'");
    auto parse = [&](std::string_view part) {
        while (!part.empty() && part.front() == ' ') part.remove_prefix(1);
        while (!part.empty() && part.back() == ' ') part.remove_suffix(1);
        double v = 0.0;
        const auto [ptr, ec] = std::from_chars(part.data(), part.data() + part.size(), v);
        if (ec != std::errc{} || ptr != part.data() + part.size())
            throw UsageError("--base expects \"x,y\", got '" + text + "'");
        return v;
    };
    const std::string_view view{text};
    const double x = parse(view.substr(0, comma));
    const double y = parse(view.substr(comma + 1));
    if (!(y > 0.0)) throw UsageError("precondition violated: --base must have y > 0");
    return {x, y};
}

struct Emitted {
    std::string text;
    int code = kOk;
};

Emitted emit_json(const Record& rec, int code = kOk) { return {rec.json().dump(2) + "\n", code}; }

// --- eval -------------------------------------------------------------------

struct EvalArgs {
    double r = 0.0;
    std::optional<double> s, sigma, tol;
};

Emitted cmd_eval(const EvalArgs& a, Config cfg) {
    require_positive(a.r, "--r");
    if (a.tol) {
        require_positive(*a.tol, "--tol");
        cfg.quad.abs_tol = *a.tol;
    }
    const auto param = parameter_from(a.s, a.sigma);
    const auto res = spherical::eval_detailed(param, a.r, cfg.quad);

    Record rec("eval");
    rec.inputs()["r"] = a.r;
    describe_parameter(rec.inputs(), a.s, a.sigma);
    rec.result("value", res.value, Provenance::numerical_scan);
    rec.result("error_estimate", res.error_estimate, Provenance::numerical_scan);
    rec.result("envelope", spherical::envelope(a.r), Provenance::certified_analytic);
    rec.meta(cfg, true);
    return emit_json(rec);
}

// --- scan -------------------------------------------------------------------

struct ScanArgs {
    double r = 0.0;
    std::optional<double> s_max, step;
    std::string format = "json";
};

Emitted cmd_scan(const ScanArgs& a, const Config& cfg) {
    require_positive(a.r, "--r");
    spectrum::ScanOptions opt;
    opt.quad = cfg.quad;
    opt.threads = cfg.threads;
    opt.s_max = a.s_max.value_or(cfg.s_max);
    opt.grid_step = a.step.value_or(cfg.step);
    if (a.s_max && *a.s_max < 1.0) throw UsageError("precondition violated: --s-max must be >= 1");
    require_positive(opt.grid_step, "--step");

    std::vector<spectrum::GridSample> grid;
    const auto sum = spectrum::scan_principal(a.r, opt, a.format == "csv" ? &grid : nullptr);

    Record rec("scan");
    rec.inputs()["r"] = a.r;
    rec.inputs()["format"] = a.format;
    rec.result("M", sum.M, Provenance::certified_analytic);
    rec.result("m_numeric", sum.m_numeric, Provenance::numerical_scan);
    rec.result("m_analytic", sum.m_analytic, Provenance::certified_analytic);
    rec.result("argmin_s", sum.argmin_s, Provenance::numerical_scan);
    rec.flag("degenerate", sum.degenerate);
    rec.meta(cfg, true,
             Json{{"s_max", sum.s_max_scanned}, {"grid_step", sum.grid_step}, {"grid_points", sum.grid_points}});

    if (a.format == "json") return emit_json(rec);

    std::string out = "s,value\n";
    for (const auto& g : grid) out += format_double(g.s) + "," + format_double(g.value) + "\n";
    out += "# summary: " + rec.json().dump() + "\n";
    return {out, kOk};
}

// --- bounds -----------------------------------------------------------------

struct BoundsArgs {
    double r = 0.0;
    std::optional<double> lambda, c;
    std::string format = "json";
};

Emitted cmd_bounds(const BoundsArgs& a, const Config& cfg) {
    require_positive(a.r, "--r");
    if (a.lambda) require_positive(*a.lambda, "--lambda");
    if (a.lambda && *a.lambda < 0.25 && !a.c)
        throw UsageError("missing --c: the exponent C in [0, 1) is required when --lambda < 0.25");
    if (a.c && !(a.lambda && *a.lambda < 0.25))
        throw UsageError("--c applies only when --lambda < 0.25 is given");
    if (a.c && !(*a.c >= 0.0 && *a.c < 1.0))
        throw UsageError("precondition violated: --c must lie in [0, 1), got " + format_double(*a.c));

    const auto rep = bounds::compare(a.r, a.lambda, a.c);

    Record rec("bounds");
    rec.inputs()["r"] = a.r;
    if (a.lambda) rec.inputs()["lambda"] = *a.lambda;
    if (a.c) rec.inputs()["c"] = *a.c;
    rec.inputs()["format"] = a.format;
    rec.result("ind_ratio_exact", rep.ind_ratio_exact, rep.m_provenance);
    rec.result("ind_ratio_relaxed", rep.ind_ratio_relaxed, Provenance::certified_analytic);
    rec.result("chi_lower", rep.chi_lower, Provenance::certified_analytic);
    rec.result("m_used", rep.m_used, rep.m_provenance);
    if (rep.pp_chi_upper) rec.result("pp_chi_upper", *rep.pp_chi_upper, Provenance::formula);
    rec.flag("ind_ratio_exact_vacuous", rep.ind_ratio_exact_vacuous);
    rec.flag("ind_ratio_relaxed_vacuous", rep.ind_ratio_relaxed_vacuous);
    rec.flag("chi_lower_vacuous", rep.chi_lower_vacuous);
    if (rep.nevo) {
        rec.result("nevo.beta", rep.nevo->beta, Provenance::formula);
        rec.result("nevo.alpha_bound", rep.nevo->alpha_bound, Provenance::formula);
        rec.flag("nevo.winner", bounds::to_string(rep.nevo->winner));
    }
    rec.meta(cfg, false);

    if (a.format == "json") return emit_json(rec);

    const Json& j = rec.json();
    std::string out = "field,value,provenance\n";
    for (const auto& [key, value] : j["results"].items()) {
        out += key + ",";
        if (value.is_number_float())
            out += format_double(value.get<double>());
        else if (value.is_string())
            out += value.get<std::string>();
        else
            out += value.dump();
        out += ",";
        if (j["provenance"].contains(key)) out += j["provenance"][key].get<std::string>();
        out += "\n";
    }
    return {out, kOk};
}

// --- graph ------------------------------------------------------------------

struct GraphArgs {
    std::string input;
    bool regular = false;
};

Emitted cmd_graph(const GraphArgs& a, const Config& cfg) {
    const Graph g = read_edge_list(a.input);
    const auto res = bounds::hoffman_finite(g, a.regular);

    Record rec("graph");
    rec.inputs()["input"] = a.input;
    rec.inputs()["regular"] = a.regular;
    rec.result("n", res.n, Provenance::formula);
    rec.result("edges", res.edges, Provenance::formula);
    rec.flag("is_regular", res.regular);
    rec.result("M", res.M, Provenance::numerical_scan);
    rec.result("m", res.m, Provenance::numerical_scan);
    rec.result("alpha_bound", res.alpha_bound, Provenance::numerical_scan);
    rec.result("chi_bound", res.chi_bound, Provenance::numerical_scan);
    rec.meta(cfg, false);
    return emit_json(rec);
}

// --- verify -----------------------------------------------------------------

struct VerifyArgs {
    double r = 0.0;
    std::optional<double> s, sigma;
    std::optional<std::size_t> n;
    std::string base = "0,1";
};

Emitted cmd_verify(const VerifyArgs& a, const Config& cfg) {
    require_positive(a.r, "--r");
    const auto param = parameter_from(a.s, a.sigma);
    const std::size_t n = a.n.value_or(cfg.n);
    if (n < 8) throw UsageError("precondition violated: --n must be >= 8");
    const geometry::Point base = parse_base(a.base);

    const double residual = spectrum::verify_eigenfunction(param, a.r, base, n, cfg.quad);
    const bool pass = residual < kVerifyThreshold;

    Record rec("verify");
    rec.inputs()["r"] = a.r;
    describe_parameter(rec.inputs(), a.s, a.sigma);
    rec.inputs()["n"] = n;
    rec.inputs()["base"] = {base.x(), base.y()};
    rec.result("residual", residual, Provenance::numerical_scan);
    rec.result("eigenvalue", spherical::eval(param, a.r, cfg.quad), Provenance::numerical_scan);
    rec.result("threshold", kVerifyThreshold, Provenance::formula);
    rec.flag("verdict", pass ? "pass" : "fail");
    rec.meta(cfg, true);
    return emit_json(rec, pass ? kOk : kVerificationFailed);
}

}  // namespace

int run(std::span<const std::string> args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Spectral bounds for distance graphs of hyperbolic surfaces", "spectral-chroma"};
    app.require_subcommand(1);
    app.set_version_flag("--version", std::string(kToolVersion));

    EvalArgs eval_args;
    auto* eval = app.add_subcommand("eval", "Evaluate P_{-1/2+is}(cosh r) next to the envelope");
    eval->add_option("--r", eval_args.r, "Circle radius")->required();
    auto* eval_s = eval->add_option("--s", eval_args.s, "Principal-series parameter");
    eval->add_option("--sigma", eval_args.sigma, "Complementary-series parameter, |sigma| <= 1/2")->excludes(eval_s);
    eval->add_option("--tol", eval_args.tol, "Absolute quadrature tolerance");

    ScanArgs scan_args;
    auto* scan = app.add_subcommand("scan", "Scan the principal series for m(A_r)");
    scan->add_option("--r", scan_args.r, "Circle radius")->required();
    scan->add_option("--s-max", scan_args.s_max, "Largest s scanned (default max(100, 40/r))");
    scan->add_option("--step", scan_args.step, "Grid spacing in s");
    scan->add_option("--format", scan_args.format, "json or csv")->check(CLI::IsMember({"json", "csv"}));

    BoundsArgs bounds_args;
    auto* bnd = app.add_subcommand("bounds", "Independence-ratio and chromatic number bounds");
    bnd->add_option("--r", bounds_args.r, "Forbidden distance")->required();
    bnd->add_option("--lambda", bounds_args.lambda, "Spectral gap of the Laplacian");
    bnd->add_option("--c", bounds_args.c, "Decay exponent C in [0,1), needed when lambda < 1/4");
    bnd->add_option("--format", bounds_args.format, "json or csv")->check(CLI::IsMember({"json", "csv"}));

    GraphArgs graph_args;
    auto* graph = app.add_subcommand("graph", "Hoffman bound of a finite graph from an edge list");
    graph->add_option("--input", graph_args.input, "Edge-list file")->required();
    graph->add_flag("--regular", graph_args.regular, "Require a regular graph");

    VerifyArgs verify_args;
    auto* verify = app.add_subcommand("verify", "Check the eigenfunction property by circle averaging");
    verify->add_option("--r", verify_args.r, "Circle radius")->required();
    auto* verify_s = verify->add_option("--s", verify_args.s, "Principal-series parameter");
    verify->add_option("--sigma", verify_args.sigma, "Complementary-series parameter")->excludes(verify_s);
    verify->add_option("--n", verify_args.n, "Number of circle samples (>= 8)");
    verify->add_option("--base", verify_args.base, "Base point \"x,y\" (default 0,1)");

    std::vector<const char*> argv{"spectral-chroma"};
    for (const auto& a : args) argv.push_back(a.c_str());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kOk;
    } catch (const CLI::CallForVersion&) {
        out << kToolVersion << "\n";
        return kOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return kUsage;
    }

    try {
        const Config cfg = load_config();
        Emitted result;
        if (*eval)
            result = cmd_eval(eval_args, cfg);
        else if (*scan)
            result = cmd_scan(scan_args, cfg);
        else if (*bnd)
            result = cmd_bounds(bounds_args, cfg);
        else if (*graph)
            result = cmd_graph(graph_args, cfg);
        else
            result = cmd_verify(verify_args, cfg);
        out << result.text;
        return result.code;
    } catch (const ToleranceNotReached& e) {
        err << "error: tolerance not reached: " << e.what() << "\n";
        return kTolerance;
    } catch (const StepSizeUnderflow& e) {
        err << "error: " << e.what() << "\n";
        return kTolerance;
    } catch (const DegenerateInput& e) {
        err << "error: degenerate input: " << e.what() << "\n";
        return kDegenerate;
    } catch (const PreconditionViolation& e) {
        err << "error: hypothesis '" << e.hypothesis() << "' violated: " << e.what() << "\n";
        return kUsage;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return kUsage;
    }
}

}  // namespace spectral_chroma::cli
