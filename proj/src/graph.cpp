#include "sombor/graph.hpp"

#include <algorithm>

namespace sombor {

std::string to_string(const Edge& e) {
    return "(" + std::to_string(e.u) + "," + std::to_string(e.v) + ")";
}

Graph Graph::from_edges(std::size_t n, std::span<const Edge> edges) {
    Graph g;
    g.n_ = n;
    g.edges_.reserve(edges.size());
    for (const Edge& e : edges) {
        if (e.u >= n || e.v >= n) {
            throw GraphError("edge " + to_string(e) + " has an endpoint outside 0.." +
                             std::to_string(n == 0 ? 0 : n - 1) +
                             (n == 0 ? " (graph has no vertices)" : ""));
        }
        if (e.u == e.v) {
            throw GraphError("edge " + to_string(e) + " is a self-loop");
        }
        g.edges_.push_back(e.u < e.v ? e : Edge{e.v, e.u});
    }
    std::sort(g.edges_.begin(), g.edges_.end());
    g.edges_.erase(std::unique(g.edges_.begin(), g.edges_.end()), g.edges_.end());

    g.degrees_.assign(n, 0);
    for (const Edge& e : g.edges_) {
        ++g.degrees_[e.u];
        ++g.degrees_[e.v];
    }
    g.offsets_.assign(n + 1, 0);
    for (std::size_t u = 0; u < n; ++u) g.offsets_[u + 1] = g.offsets_[u] + g.degrees_[u];

    g.adjacency_.resize(2 * g.edges_.size());
    std::vector<std::size_t> fill(g.offsets_.begin(), g.offsets_.end() - 1);
    // Sorted edges yield sorted neighbour lists: for a fixed vertex x, lower
    // neighbours arrive (as e.v == x) before higher ones (as e.u == x).
    for (const Edge& e : g.edges_) {
        g.adjacency_[fill[e.u]++] = e.v;
        g.adjacency_[fill[e.v]++] = e.u;
    }

    g.edge_keys_.reserve(g.edges_.size());
    for (const Edge& e : g.edges_) g.edge_keys_.insert(g.key(e.u, e.v));
    return g;
}

Graph build_graph(std::size_t n, std::span<const Edge> edges) { return Graph::from_edges(n, edges); }

void Graph::check_vertex(Vertex u) const {
    if (u >= n_) {
        throw std::out_of_range("vertex " + std::to_string(u) + " out of range for order " +
                                std::to_string(n_));
    }
}

std::size_t Graph::degree(Vertex u) const {
    check_vertex(u);
    return degrees_[u];
}

bool Graph::adjacent(Vertex u, Vertex v) const {
    check_vertex(u);
    check_vertex(v);
    if (u == v) return false;
    if (u > v) std::swap(u, v);
    return edge_keys_.contains(key(u, v));
}

std::span<const Vertex> Graph::neighbors(Vertex u) const {
    check_vertex(u);
    return std::span<const Vertex>(adjacency_).subspan(offsets_[u], degrees_[u]);
}

GraphParams GraphParams::make(std::size_t n, std::size_t m, std::size_t max_deg, std::size_t min_deg) {
    if (n == 0) throw GraphError("graph parameters need n >= 1");
    if (min_deg > max_deg) {
        throw GraphError("min degree " + std::to_string(min_deg) + " exceeds max degree " +
                         std::to_string(max_deg));
    }
    if (max_deg > n - 1) {
        throw GraphError("max degree " + std::to_string(max_deg) + " exceeds n-1 = " +
                         std::to_string(n - 1));
    }
    if (m > n * (n - 1) / 2) {
        throw GraphError("size " + std::to_string(m) + " exceeds n(n-1)/2 = " +
                         std::to_string(n * (n - 1) / 2));
    }
    if (n * min_deg > 2 * m || 2 * m > n * max_deg) {
        throw GraphError("degree sum 2m = " + std::to_string(2 * m) + " is outside [n*min, n*max] = [" +
                         std::to_string(n * min_deg) + ", " + std::to_string(n * max_deg) + "]");
    }
    GraphParams p;
    p.n = n;
    p.m = m;
    p.max_deg = max_deg;
    p.min_deg = min_deg;
    if (max_deg == min_deg) p.regular_deg = max_deg;
    return p;
}

GraphParams params_of(const Graph& g) {
    if (g.order() == 0) throw GraphError("graph parameters are undefined for the empty graph");
    const auto degs = g.degrees();
    const auto [lo, hi] = std::minmax_element(degs.begin(), degs.end());
    GraphParams p;
    p.n = g.order();
    p.m = g.size();
    p.max_deg = *hi;
    p.min_deg = *lo;
    if (*hi == *lo) p.regular_deg = *hi;
    return p;
}

bool is_regular(const Graph& g) noexcept {
    const auto degs = g.degrees();
    return std::adjacent_find(degs.begin(), degs.end(), std::not_equal_to<>{}) == degs.end();
}

}  // namespace sombor
