#pragma once

#include <cstddef>
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>

#include "spectral_chroma/spherical.hpp"

// Command-line frontend: eval | scan | bounds | graph | verify.
// Output is a single JSON record (or CSV rows) on stdout; diagnostics go to
// stderr. Exit codes: 0 ok, 2 usage, 3 tolerance, 4 degenerate input,
// 5 verification failure.

namespace spectral_chroma::cli {

inline constexpr std::string_view kToolVersion = "0.1.0";
inline constexpr const char* kConfigEnvVar = "SPECTRAL_CHROMA_CONFIG";

enum ExitCode : int {
    kOk = 0,
    kUsage = 2,
    kTolerance = 3,
    kDegenerate = 4,
    kVerificationFailed = 5,
};

/// Residual threshold used by the verify command.
inline constexpr double kVerifyThreshold = 1e-6;

/// Defaults shared by all commands. Built-ins, then the config file named by
/// SPECTRAL_CHROMA_CONFIG, then command-line flags.
struct Config {
    spherical::QuadratureSpec quad{};
    double s_max = 0.0;  // 0: max(100, 40/r)
    double step = 0.05;
    std::size_t n = 2048;
    unsigned threads = 1;
};

/// key=value lines, '#' comments. Keys: abs_tol, max_subdivisions,
/// oscillation_panel_factor, s_max, step, n, threads. Throws
/// InputFormatError on unknown keys or unparsable values.
Config parse_config(std::istream& in, Config base = {});

/// Built-ins overridden by the file in SPECTRAL_CHROMA_CONFIG, if set.
Config load_config();

/// Shortest decimal string that round-trips to the same double.
std::string format_double(double v);

/// Runs one command. args excludes the program name.
int run(std::span<const std::string> args, std::ostream& out, std::ostream& err);

}  // namespace spectral_chroma::cli
