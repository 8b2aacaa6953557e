#pragma once

#include "qqwalk/quat_matrix.hpp"

#include <filesystem>
#include <span>
#include <string_view>
#include <utility>
#include <vector>

namespace qqwalk
{

/// Directed arc of D(G). Arcs 2r and 2r+1 (0-based) are mutual inverses.
struct Arc
{
    int origin = 0;
    int terminal = 0;
    int index = 0;

    constexpr int inverse_index() const noexcept { return index ^ 1; }
};

/**
 * Finite connected simple graph on vertices 0..n−1.
 *
 * Edge r = {u, v} as given produces arcs 2r = (u, v) and 2r+1 = (v, u); this
 * order fixes the row/column order of every arc-indexed matrix.
 */
class Graph
{
public:
    /// Throws ContractViolation for loops, duplicate edges, out-of-range
    /// vertices, no edges, or a disconnected result.
    Graph(int vertex_count, std::vector<std::pair<int, int>> edges);

    int vertex_count() const noexcept { return n_; }
    int edge_count() const noexcept { return static_cast<int>(edges_.size()); }
    int arc_count() const noexcept { return 2 * edge_count(); }

    std::span<const std::pair<int, int>> edges() const noexcept { return edges_; }
    std::span<const Arc> arcs() const noexcept { return arcs_; }
    const Arc& arc(int index) const;
    const Arc& inverse(const Arc& e) const { return arc(e.inverse_index()); }

    /// Indices of arcs leaving u.
    std::span<const int> out_arcs(int u) const;

    /// Number of edges incident to u. Throws ContractViolation for u out of range.
    int degree(int u) const;

    /// r = m − n + 1.
    int betti_number() const noexcept { return edge_count() - vertex_count() + 1; }
    bool is_tree() const noexcept { return betti_number() == 0; }

private:
    int n_;
    std::vector<std::pair<int, int>> edges_;
    std::vector<Arc> arcs_;
    std::vector<std::vector<int>> out_;
};

/**
 * Edge-list text: first non-comment line "n m", then m lines "u v" with
 * 0-based vertices. Lines starting with '#' are comments. Errors raise
 * ParseError naming the offending line.
 */
Graph parse_graph(std::string_view text);
Graph load_graph(const std::filesystem::path& path);

ComplexMatrix adjacency_matrix(const Graph& g);
ComplexMatrix degree_matrix(const Graph& g);

/// T_uv = 1/d_u for (u, v) ∈ D(G); row-stochastic.
ComplexMatrix transition_matrix_T(const Graph& g);

// Small named families used by tests and fixtures.
Graph complete_graph(int n);
/// K_{1,leaves}: edges (i, leaves) for i < leaves, so every odd arc leaves the centre.
Graph star_graph(int leaves);
Graph path_graph(int n);
Graph cycle_graph(int n);

} // namespace qqwalk
