#include "spectral_chroma/graph.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <istream>
#include <optional>
#include <string>
#include <string_view>
#include <utility>

#include "spectral_chroma/errors.hpp"

namespace spectral_chroma {

Graph::Graph(std::size_t n) : n_(n), adj_(n * n, 0) {}

Graph Graph::from_adjacency(std::span<const std::uint8_t> matrix, std::size_t n) {
    if (matrix.size() != n * n) throw DomainError("adjacency matrix is not n x n");
    Graph g(n);
    for (std::size_t i = 0; i < n; ++i) {
        if (matrix[i * n + i] != 0) throw DomainError("adjacency has a self-loop at vertex " + std::to_string(i));
        for (std::size_t j = 0; j < n; ++j) {
            const auto v = matrix[i * n + j];
            if (v > 1) throw DomainError("adjacency entries must be 0 or 1");
            if (v != matrix[j * n + i]) throw DomainError("adjacency matrix is not symmetric");
            if (v && i < j) g.add_edge(i, j);
        }
    }
    return g;
}

Graph Graph::complete(std::size_t n) {
    Graph g(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) g.add_edge(i, j);
    return g;
}

Graph Graph::cycle(std::size_t n) {
    if (n < 3) throw DomainError("cycle needs at least 3 vertices");
    Graph g(n);
    for (std::size_t i = 0; i < n; ++i) g.add_edge(i, (i + 1) % n);
    return g;
}

Graph Graph::petersen() {
    Graph g(10);
    for (std::size_t i = 0; i < 5; ++i) {
        g.add_edge(i, (i + 1) % 5);          // outer 5-cycle
        g.add_edge(i, i + 5);                // spokes
        g.add_edge(5 + i, 5 + (i + 2) % 5);  // inner pentagram
    }
    return g;
}

void Graph::add_edge(std::size_t u, std::size_t v) {
    if (u >= n_ || v >= n_) throw DomainError("edge endpoint out of range");
    if (u == v) throw DomainError("self-loop at vertex " + std::to_string(u));
    if (adj_[u * n_ + v]) return;
    adj_[u * n_ + v] = 1;
    adj_[v * n_ + u] = 1;
    ++edges_;
}

std::size_t Graph::degree(std::size_t v) const noexcept {
    const auto row = adj_.begin() + static_cast<std::ptrdiff_t>(v * n_);
    return static_cast<std::size_t>(std::count(row, row + static_cast<std::ptrdiff_t>(n_), 1));
}

bool Graph::is_regular() const noexcept {
    if (n_ == 0) return true;
    const std::size_t d = degree(0);
    for (std::size_t v = 1; v < n_; ++v)
        if (degree(v) != d) return false;
    return true;
}

std::vector<double> Graph::adjacency_matrix() const {
    return {adj_.begin(), adj_.end()};
}

namespace {

std::string_view trim(std::string_view s) {
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string_view::npos) return {};
    const auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

std::optional<std::size_t> parse_id(std::string_view tok) {
    std::size_t v = 0;
    const auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (ec != std::errc{} || ptr != tok.data() + tok.size()) return std::nullopt;
    return v;
}

std::vector<std::string_view> split(std::string_view s) {
    std::vector<std::string_view> out;
    std::size_t i = 0;
    while (i < s.size()) {
        while (i < s.size() && (s[i] == ' ' || s[i] == '\t')) ++i;
        const std::size_t start = i;
        while (i < s.size() && s[i] != ' ' && s[i] != '\t') ++i;
        if (i > start) out.push_back(s.substr(start, i - start));
    }
    return out;
}

}  // namespace

Graph parse_edge_list(std::istream& in) {
    std::optional<std::size_t> declared;
    std::vector<std::pair<std::size_t, std::size_t>> edges;
    std::size_t max_id = 0;
    bool any = false;

    std::string raw;
    std::size_t line_no = 0;
    while (std::getline(in, raw)) {
        ++line_no;
        std::string_view line{raw};
        if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
        line = trim(line);
        if (line.empty()) continue;

        const auto tokens = split(line);
        if (tokens.size() != 2) throw InputFormatError("expected two fields, got " + std::to_string(tokens.size()), line_no);
        if (tokens[0] == "n") {
            if (declared) throw InputFormatError("duplicate vertex-count header", line_no);
            if (!edges.empty()) throw InputFormatError("vertex-count header must precede edges", line_no);
            const auto count = parse_id(tokens[1]);
            if (!count) throw InputFormatError("invalid vertex count '" + std::string(tokens[1]) + "'", line_no);
            declared = *count;
            continue;
        }
        const auto u = parse_id(tokens[0]);
        const auto v = parse_id(tokens[1]);
        if (!u || !v) throw InputFormatError("vertex ids must be non-negative integers", line_no);
        if (*u == *v) throw InputFormatError("self-loop at vertex " + std::to_string(*u), line_no);
        if (declared && (*u >= *declared || *v >= *declared))
            throw InputFormatError("vertex id exceeds declared count " + std::to_string(*declared), line_no);
        max_id = std::max({max_id, *u, *v});
        any = true;
        edges.emplace_back(*u, *v);
    }

    const std::size_t n = declared ? *declared : (any ? max_id + 1 : 0);
    if (n > kMaxEdgeListVertices)
        throw InputFormatError("edge list has " + std::to_string(n) + " vertices; at most " +
                               std::to_string(kMaxEdgeListVertices) + " supported");
    Graph g(n);
    for (const auto& [u, v] : edges) g.add_edge(u, v);
    return g;
}

Graph read_edge_list(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw InputFormatError("cannot open '" + path.string() + "'");
    return parse_edge_list(in);
}

}  // namespace spectral_chroma
