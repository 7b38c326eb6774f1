// Acceptance gate: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include <chrono>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "spectral_chroma/bounds.hpp"
#include "spectral_chroma/geometry.hpp"
#include "spectral_chroma/graph.hpp"
#include "spectral_chroma/simd/kernels.hpp"
#include "spectral_chroma/spectrum.hpp"
#include "spectral_chroma/spherical.hpp"
#include "support/golden.hpp"

using namespace spectral_chroma;
using spherical::SpectralParameter;

namespace {

struct Verdict {
    bool pass;
    std::string detail;
};

std::string fmt(const char* format, auto... args) {
    char buf[512];
    std::snprintf(buf, sizeof buf, format, args...);
    return buf;
}

Verdict envelope_inequality() {
    double worst = -1e300;
    double worst_r = 0.0, worst_s = 0.0;
    for (int ri = 1; ri <= 60; ++ri) {
        const double r = 0.5 * ri;
        const double env = spherical::envelope(r);
        for (int si = 0; si <= 800; ++si) {
            const double s = 0.25 * si;
            const double excess = std::abs(spherical::eval(SpectralParameter::principal(s), r)) - env;
            if (excess > worst) {
                worst = excess;
                worst_r = r;
                worst_s = s;
            }
        }
    }
    return {worst <= 1e-9, fmt("max(|P| - envelope) = %.3e at r=%g s=%g over 48060 points", worst, worst_r, worst_s)};
}

Verdict oracle_agreement() {
    std::mt19937_64 rng(20240601);
    std::uniform_real_distribution<double> s_dist(0.0, 50.0);
    std::uniform_real_distribution<double> r_dist(0.0, 10.0);
    double worst = 0.0;
    for (int i = 0; i < 200; ++i) {
        const auto p = SpectralParameter::principal(s_dist(rng));
        const double r = r_dist(rng);
        worst = std::max(worst, std::abs(spherical::eval(p, r) - spherical::eval_oracle(p, r)));
    }
    double worst_c = 0.0;
    for (int k = 0; k <= 5; ++k)
        for (int r = 1; r <= 10; ++r) {
            const auto p = SpectralParameter::complementary(0.1 * k);
            worst_c = std::max(worst_c, std::abs(spherical::eval(p, r) - spherical::eval_oracle(p, r)));
        }
    return {worst <= 1e-8 && worst_c <= 1e-8,
            fmt("principal max diff %.3e (200 samples), complementary max diff %.3e (60 points)", worst, worst_c)};
}

Verdict product_formula() {
    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> s_dist(0.0, 10.0);
    std::uniform_real_distribution<double> r_dist(0.0, 5.0);
    std::uniform_real_distribution<double> d_dist(0.0, 3.0);
    std::uniform_real_distribution<double> angle(0.0, 2.0 * 3.14159265358979323846);
    double worst = 0.0, worst_const = 0.0;
    for (int i = 0; i < 20; ++i) {
        const double s = s_dist(rng);
        double r = r_dist(rng);
        if (r == 0.0) r = 0.5;
        const auto base = geometry::circle_point(geometry::Point::origin(), d_dist(rng), angle(rng));
        worst = std::max(worst, spectrum::verify_eigenfunction(SpectralParameter::principal(s), r, base, 2048));
        worst_const = std::max(worst_const,
                               spectrum::verify_eigenfunction(SpectralParameter::complementary(0.5), r, base, 2048));
    }
    return {worst < 1e-6 && worst_const <= 1e-12,
            fmt("max residual %.3e over 20 draws at n=2048, sigma=1/2 residual %.3e", worst, worst_const)};
}

double brute_force_ratio(const Graph& g) {
    const std::size_t n = g.vertex_count();
    std::size_t best = 0;
    for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
        bool ok = true;
        for (std::size_t u = 0; u < n && ok; ++u)
            for (std::size_t v = u + 1; v < n && ok; ++v)
                if ((mask >> u & 1u) && (mask >> v & 1u) && g.has_edge(u, v)) ok = false;
        if (ok) best = std::max<std::size_t>(best, static_cast<std::size_t>(__builtin_popcount(mask)));
    }
    return static_cast<double>(best) / static_cast<double>(n);
}

Verdict finite_hoffman() {
    double worst_k = 0.0;
    for (std::size_t n = 2; n <= 50; ++n) {
        const auto res = bounds::hoffman_finite(Graph::complete(n));
        worst_k = std::max({worst_k, std::abs(res.alpha_bound - 1.0 / n), std::abs(res.chi_bound - double(n))});
    }
    const auto pet = bounds::hoffman_finite(Graph::petersen());
    const double brute = brute_force_ratio(Graph::petersen());
    const double phi = (1.0 + std::sqrt(5.0)) / 2.0;
    const double c5 = bounds::hoffman_finite(Graph::cycle(5)).alpha_bound;
    const double e_pet = std::abs(pet.alpha_bound - 0.4);
    const double e_brute = std::abs(pet.alpha_bound - brute);
    const double e_c5 = std::abs(c5 - phi / (2.0 + phi));
    return {worst_k <= 1e-10 && e_pet <= 1e-10 && e_brute <= 1e-10 && e_c5 <= 1e-10,
            fmt("K_n max err %.1e; Petersen %.1e vs 0.4, %.1e vs brute force %.2f; C5 err %.1e", worst_k, e_pet,
                e_brute, brute, e_c5)};
}

Verdict main_bound() {
    double worst = 0.0, worst_dual = 0.0;
    for (int r = 1; r <= 30; ++r) {
        const auto rep = bounds::main_bounds(r);
        const double env = (r + 1.0) * std::exp(-0.5 * r);
        worst = std::max(worst, std::abs(rep.ind_ratio_exact - env / (1.0 + env)));
        worst_dual = std::max(worst_dual, std::abs(rep.ind_ratio_relaxed * rep.chi_lower - 1.0));
    }
    return {worst <= 1e-12 && worst_dual <= 1e-12,
            fmt("closed-form max err %.1e, duality max err %.1e for r = 1..30", worst, worst_dual)};
}

Verdict explicit_upper() {
    const auto at10 = bounds::compare(10.0).pp_chi_upper;
    const auto at5 = bounds::compare(5.0).pp_chi_upper;
    return {at10 && *at10 == 45.0 && !at5,
            fmt("r=10: %s; r=5: %s", at10 ? fmt("%g", *at10).c_str() : "absent", at5 ? "present" : "absent")};
}

Verdict nevo_comparison() {
    const auto large = bounds::compare(10.0, 2.0);
    const bool a = large.nevo->alpha_bound < large.ind_ratio_exact;
    const auto weak = bounds::compare(10.0, 0.1, 0.5);
    const bool b = weak.nevo->winner == bounds::Winner::main_theorem;
    return {a && b, fmt("(a) lambda=2: nevo %.6f vs main %.6f -> %s; (b) lambda=0.1 C=0.5: nevo %.6f vs main %.6f, "
                        "winner %s -> %s",
                        large.nevo->alpha_bound, large.ind_ratio_exact, a ? "ok" : "wrong", weak.nevo->alpha_bound,
                        weak.ind_ratio_exact, std::string(bounds::to_string(weak.nevo->winner)).c_str(),
                        b ? "ok" : "wrong")};
}

Verdict spectrum_sanity() {
    const auto coarse = spectrum::scan_principal(4.0);
    spectrum::ScanOptions fine_opt;
    fine_opt.grid_step = 0.025;
    const auto fine = spectrum::scan_principal(4.0, fine_opt);
    const double env = spherical::envelope(4.0);
    const bool in_range = coarse.m_numeric >= -env && coarse.m_numeric < 0.0;
    const double drift = std::abs(coarse.m_numeric - fine.m_numeric);
    bool m_one = coarse.M == 1.0 && fine.M == 1.0;
    for (double r : {0.3, 1.0, 7.0, 25.0, 80.0}) m_one = m_one && spectrum::scan_principal(r).M == 1.0;
    return {in_range && drift <= 1e-6 && m_one,
            fmt("m_numeric(4) = %.12f in [%.6f, 0); halving drift %.1e; M = 1 %s", coarse.m_numeric, -env, drift,
                m_one ? "always" : "violated")};
}

Verdict cli_contract() {
    const std::filesystem::path data = SPECTRAL_CHROMA_TEST_DATA_DIR;
    const std::filesystem::path dir = SPECTRAL_CHROMA_TEST_GOLDEN_DIR;
    std::vector<std::string> problems;
    const auto cases = golden::cases(data);
    for (const auto& c : cases)
        for (auto& p : golden::check(c, dir, false)) problems.push_back(std::move(p));

    using namespace spectral_chroma::cli;
    const std::vector<std::pair<std::vector<std::string>, int>> matrix{
        {{"--help"}, kOk},
        {{"eval", "--r", "-1", "--s", "1"}, kUsage},
        {{"eval", "--r", "20", "--s", "1", "--tol", "1e-300"}, kTolerance},
        {{"graph", "--input", (data / "edgeless.txt").string()}, kDegenerate},
        {{"graph", "--input", (data / "self_loop.txt").string()}, kUsage},
        {{"bounds", "--r", "10", "--lambda", "0.1"}, kUsage},
        {{"verify", "--r", "1.5", "--s", "2", "--n", "8", "--base", "0.7,2.0"}, kVerificationFailed},
    };
    int codes_ok = 0;
    for (const auto& [args, code] : matrix) {
        if (golden::run_cli(args).code == code)
            ++codes_ok;
        else
            problems.push_back("exit code mismatch for " + args.front());
    }
    std::string detail = fmt("%zu golden files, %d/%zu exit codes", cases.size(), codes_ok, matrix.size());
    if (!problems.empty()) detail += "; first problem: " + problems.front();
    return {problems.empty(), detail};
}

}  // namespace

int main() {
    ::unsetenv(cli::kConfigEnvVar);
    struct Criterion {
        int id;
        const char* name;
        std::function<Verdict()> run;
    };
    const std::vector<Criterion> criteria{
        {1, "envelope inequality", envelope_inequality},
        {2, "oracle agreement", oracle_agreement},
        {3, "eigenfunction product formula", product_formula},
        {4, "finite Hoffman exactness", finite_hoffman},
        {5, "main bound reproduction", main_bound},
        {6, "explicit chromatic upper bound", explicit_upper},
        {7, "Nevo comparison behavior", nevo_comparison},
        {8, "spectrum sanity", spectrum_sanity},
        {9, "CLI contract", cli_contract},
    };
    std::printf("kernel table: %s\n", std::string(simd::isa_name(simd::active().isa)).c_str());
    int failures = 0;
    for (const auto& c : criteria) {
        const auto start = std::chrono::steady_clock::now();
        Verdict v;
        try {
            v = c.run();
        } catch (const std::exception& e) {
            v = {false, std::string("exception: ") + e.what()};
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        std::printf("[%s] %d %s: %s (%.2f s)\n", v.pass ? "PASS" : "FAIL", c.id, c.name, v.detail.c_str(), secs);
        std::fflush(stdout);
        if (!v.pass) ++failures;
    }
    std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
    return failures == 0 ? 0 : 1;
}
