#include <charconv>
#include <cstdlib>
#include <fstream>
#include <istream>
#include <string>
#include <string_view>

#include "spectral_chroma/cli.hpp"
#include "spectral_chroma/errors.hpp"

namespace spectral_chroma::cli {
namespace {

std::string_view trim(std::string_view s) {
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string_view::npos) return {};
    return s.substr(b, s.find_last_not_of(" \t\r") - b + 1);
}

template <class T>
T parse_number(std::string_view text, std::string_view key, std::size_t line) {
    T value{};
    const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc{} || ptr != text.data() + text.size())
        throw InputFormatError("config key '" + std::string(key) + "' has invalid value '" +
                                   std::string(text) + "'",
                               line);
    return value;
}

}  // namespace

Config parse_config(std::istream& in, Config cfg) {
    std::string raw;
    std::size_t line_no = 0;
    while (std::getline(in, raw)) {
        ++line_no;
        std::string_view line{raw};
        if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
        line = trim(line);
        if (line.empty()) continue;
        const auto eq = line.find('=');
        if (eq == std::string_view::npos) throw InputFormatError("expected key=value", line_no);
        const auto key = trim(line.substr(0, eq));
        const auto value = trim(line.substr(eq + 1));

        if (key == "abs_tol")
            cfg.quad.abs_tol = parse_number<double>(value, key, line_no);
        else if (key == "max_subdivisions")
            cfg.quad.max_subdivisions = parse_number<std::size_t>(value, key, line_no);
        else if (key == "oscillation_panel_factor")
            cfg.quad.oscillation_panel_factor = parse_number<double>(value, key, line_no);
        else if (key == "s_max")
            cfg.s_max = parse_number<double>(value, key, line_no);
        else if (key == "step")
            cfg.step = parse_number<double>(value, key, line_no);
        else if (key == "n")
            cfg.n = parse_number<std::size_t>(value, key, line_no);
        else if (key == "threads")
            cfg.threads = parse_number<unsigned>(value, key, line_no);
        else
            throw InputFormatError("unknown config key '" + std::string(key) + "'", line_no);
    }
    return cfg;
}

Config load_config() {
    const char* path = std::getenv(std::string(kConfigEnvVar).c_str());
    if (!path || !*path) return {};
    std::ifstream in(path);
    if (!in) throw InputFormatError("cannot open config file '" + std::string(path) + "'");
    return parse_config(in);
}

}  // namespace spectral_chroma::cli
