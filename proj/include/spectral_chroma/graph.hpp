#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <span>
#include <vector>

namespace spectral_chroma {

/// Simple undirected graph on vertices 0..n-1 with a dense adjacency matrix.
/// Duplicate edges collapse; self-loops are rejected.
class Graph {
public:
    explicit Graph(std::size_t n);

    /// Builds from a row-major 0/1 matrix. Throws DomainError unless the
    /// matrix is n x n, symmetric, 0/1 valued and zero on the diagonal.
    static Graph from_adjacency(std::span<const std::uint8_t> matrix, std::size_t n);

    static Graph complete(std::size_t n);
    static Graph cycle(std::size_t n);
    static Graph petersen();

    /// Throws DomainError for a self-loop or an out-of-range endpoint.
    void add_edge(std::size_t u, std::size_t v);

    std::size_t vertex_count() const noexcept { return n_; }
    std::size_t edge_count() const noexcept { return edges_; }
    bool has_edge(std::size_t u, std::size_t v) const noexcept { return adj_[u * n_ + v] != 0; }
    std::size_t degree(std::size_t v) const noexcept;
    bool is_regular() const noexcept;

    /// Row-major adjacency as doubles, ready for an eigensolve.
    std::vector<double> adjacency_matrix() const;

private:
    std::size_t n_;
    std::size_t edges_ = 0;
    std::vector<std::uint8_t> adj_;
};

/// Dense storage limit for parsed edge lists (matches the eigensolver limit).
inline constexpr std::size_t kMaxEdgeListVertices = 2000;

/// Edge-list text format: one "u v" pair of 0-based ids per line, '#' starts
/// a comment, blank lines ignored. An optional header line "n <count>" fixes
/// the vertex count; otherwise it is 1 + the largest id. Throws
/// InputFormatError (with the 1-based line number) on malformed lines,
/// self-loops or ids beyond a declared count.
Graph parse_edge_list(std::istream& in);
Graph read_edge_list(const std::filesystem::path& path);

}  // namespace spectral_chroma
