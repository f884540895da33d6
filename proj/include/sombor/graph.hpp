#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <unordered_set>
#include <vector>

namespace sombor {

using Vertex = std::uint32_t;

/// Undirected edge, normalised so that u < v.
struct Edge {
    Vertex u = 0;
    Vertex v = 0;

    friend auto operator<=>(const Edge&, const Edge&) = default;
};

class GraphError : public std::invalid_argument {
  public:
    using std::invalid_argument::invalid_argument;
};

/// Immutable simple undirected graph on the vertices 0..n-1.
///
/// Edges are kept sorted lexicographically, which fixes the accumulation
/// order of every edge sum computed over the graph.
class Graph {
  public:
    Graph() = default;

    /// Builds a graph from a list of vertex pairs. Duplicate pairs (in either
    /// orientation) collapse to one edge. Throws GraphError naming the pair on
    /// a self-loop or an out-of-range endpoint.
    static Graph from_edges(std::size_t n, std::span<const Edge> edges);

    std::size_t order() const noexcept { return n_; }
    std::size_t size() const noexcept { return edges_.size(); }

    std::size_t degree(Vertex u) const;
    bool adjacent(Vertex u, Vertex v) const;

    std::span<const Edge> edges() const noexcept { return edges_; }
    std::span<const Vertex> neighbors(Vertex u) const;
    std::span<const std::size_t> degrees() const noexcept { return degrees_; }

    friend bool operator==(const Graph& a, const Graph& b) noexcept {
        return a.n_ == b.n_ && a.edges_ == b.edges_;
    }

  private:
    std::uint64_t key(Vertex u, Vertex v) const noexcept {
        return static_cast<std::uint64_t>(u) * n_ + v;
    }
    void check_vertex(Vertex u) const;

    std::size_t n_ = 0;
    std::vector<Edge> edges_;
    std::vector<std::size_t> degrees_;
    std::vector<std::size_t> offsets_;  // CSR offsets into adjacency_
    std::vector<Vertex> adjacency_;
    std::unordered_set<std::uint64_t> edge_keys_;
};

/// Free-function spelling of Graph::from_edges.
Graph build_graph(std::size_t n, std::span<const Edge> edges);

inline Graph build_graph(std::size_t n, std::initializer_list<Edge> edges) {
    return Graph::from_edges(n, std::span<const Edge>(edges.begin(), edges.size()));
}

/// Order, size and degree extremes of a graph: the inputs of every bound formula.
struct GraphParams {
    std::size_t n = 0;
    std::size_t m = 0;
    std::size_t max_deg = 0;
    std::size_t min_deg = 0;
    std::optional<std::size_t> regular_deg;

    /// Validated construction from raw values. regular_deg is derived.
    /// Throws GraphError when the tuple cannot describe a simple graph:
    /// n = 0, δ > Δ, Δ > n-1, m > n(n-1)/2, or n·δ ≤ 2m ≤ n·Δ violated.
    static GraphParams make(std::size_t n, std::size_t m, std::size_t max_deg, std::size_t min_deg);

    bool is_regular() const noexcept { return regular_deg.has_value(); }

    friend bool operator==(const GraphParams&, const GraphParams&) = default;
};

/// Throws GraphError for the empty graph.
GraphParams params_of(const Graph& g);

bool is_regular(const Graph& g) noexcept;

std::string to_string(const Edge& e);

}  // namespace sombor
