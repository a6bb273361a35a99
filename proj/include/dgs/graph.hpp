#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace dgs {

/// Simple undirected graph stored as n bit-packed adjacency rows.
///
/// Every constructor path goes through `add_edge`/`set_rows` which keep the
/// matrix symmetric with a zero diagonal. Once built, a Graph is never
/// mutated by any library operation.
class Graph {
public:
    static constexpr std::size_t max_vertices = std::size_t{1} << 16;

    Graph() = default;
    explicit Graph(std::size_t n);

    static Graph from_edges(std::size_t n, std::span<const std::pair<std::size_t, std::size_t>> edges);
    /// Rows of a 0/1 matrix; rejects asymmetric input or a nonzero diagonal.
    static Graph from_adjacency(const std::vector<std::vector<int>>& rows);
    static Graph complete(std::size_t n);
    static Graph cycle(std::size_t n);
    static Graph path(std::size_t n);
    static Graph star(std::size_t leaves);
    static Graph disjoint_union(const Graph& a, const Graph& b);
    /// Labeled graph whose upper-triangle bits (i<j, column-major, as in
    /// graph6) are taken from `mask`; n ≤ 11.
    static Graph from_upper_mask(std::size_t n, std::uint64_t mask);

    std::size_t order() const noexcept { return n_; }
    std::size_t words_per_row() const noexcept { return stride_; }

    bool adjacent(std::size_t i, std::size_t j) const noexcept
    {
        return (rows_[i * stride_ + j / 64] >> (j % 64)) & 1u;
    }

    std::span<const std::uint64_t> row(std::size_t i) const noexcept
    {
        return {rows_.data() + i * stride_, stride_};
    }

    std::vector<std::size_t> neighbors(std::size_t i) const;
    std::size_t edge_count() const;
    std::vector<std::pair<std::size_t, std::size_t>> edges() const;

    void add_edge(std::size_t i, std::size_t j);
    void toggle_edge(std::size_t i, std::size_t j);

    Graph relabeled(std::span<const std::size_t> perm) const;

    friend bool operator==(const Graph&, const Graph&) = default;

private:
    void flip(std::size_t i, std::size_t j) noexcept
    {
        rows_[i * stride_ + j / 64] ^= std::uint64_t{1} << (j % 64);
    }

    std::size_t n_ = 0;
    std::size_t stride_ = 0;
    std::vector<std::uint64_t> rows_;
};

std::vector<std::size_t> degrees(const Graph& g);
bool is_connected(const Graph& g);
bool all_degrees_even(const Graph& g);
bool all_degrees_odd(const Graph& g);
/// Connected with every degree even.
bool is_eulerian(const Graph& g);

Graph complement(const Graph& g);

/// Even-degree graph with independent fair-coin edges followed by a parity
/// repair that toggles the edge inside each consecutive pair of odd-degree
/// vertices. With `require_connected` the whole draw is repeated until the
/// result is connected; throws HypothesisError after `max_retries`.
Graph random_even_graph(std::size_t n, std::uint64_t seed, bool require_connected,
                        unsigned max_retries = 1000);

/// G(n, 1/2) sample, deterministic in (n, seed).
Graph random_graph(std::size_t n, std::uint64_t seed);

inline constexpr std::size_t isomorphism_guard = 10;

/// Exhaustive search over vertex bijections that respect degrees. n ≤ 10.
bool is_isomorphic_bruteforce(const Graph& g, const Graph& h);

// graph I/O

enum class GraphFormat { graph6, edge_list };

Graph parse_graph(std::string_view text, GraphFormat format);
std::string write_graph(const Graph& g, GraphFormat format);

Graph parse_graph6(std::string_view text);
std::string write_graph6(const Graph& g);
Graph parse_edge_list(std::string_view text);
std::string write_edge_list(const Graph& g);

/// Decide between graph6 and edge-list from the content.
GraphFormat sniff_format(std::string_view text);

} // namespace dgs
