#pragma once

// Test-only reference implementations. Everything here works on a dense
// adjacency matrix built straight from the set definitions and never calls
// into the library's product or index code.

#include <cmath>
#include <cstddef>
#include <vector>

#include "sombor/graph.hpp"

namespace oracle {

struct Dense {
    std::size_t n = 0;
    std::vector<std::vector<bool>> adj;

    explicit Dense(std::size_t order) : n(order), adj(order, std::vector<bool>(order, false)) {}

    void link(std::size_t u, std::size_t v) {
        adj[u][v] = true;
        adj[v][u] = true;
    }

    std::size_t degree(std::size_t u) const {
        std::size_t d = 0;
        for (std::size_t v = 0; v < n; ++v) d += adj[u][v] ? 1 : 0;
        return d;
    }

    std::size_t edges() const {
        std::size_t m = 0;
        for (std::size_t u = 0; u < n; ++u)
            for (std::size_t v = u + 1; v < n; ++v) m += adj[u][v] ? 1 : 0;
        return m;
    }
};

inline Dense from_graph(const sombor::Graph& g) {
    Dense d(g.order());
    for (std::size_t u = 0; u < g.order(); ++u)
        for (std::size_t v = u + 1; v < g.order(); ++v)
            if (g.adjacent(static_cast<sombor::Vertex>(u), static_cast<sombor::Vertex>(v))) d.link(u, v);
    return d;
}

// (V1 ∪ V2, E1 ∪ E2 ∪ V1×V2)
inline Dense join(const Dense& a, const Dense& b) {
    Dense d(a.n + b.n);
    for (std::size_t u = 0; u < a.n; ++u)
        for (std::size_t v = 0; v < a.n; ++v)
            if (a.adj[u][v]) d.link(u, v);
    for (std::size_t u = 0; u < b.n; ++u)
        for (std::size_t v = 0; v < b.n; ++v)
            if (b.adj[u][v]) d.link(a.n + u, a.n + v);
    for (std::size_t u = 0; u < a.n; ++u)
        for (std::size_t v = 0; v < b.n; ++v) d.link(u, a.n + v);
    return d;
}

// G1 plus n1 copies of G2, vertex i of G1 linked to every vertex of copy i.
inline Dense corona(const Dense& a, const Dense& b) {
    Dense d(a.n + a.n * b.n);
    for (std::size_t u = 0; u < a.n; ++u)
        for (std::size_t v = 0; v < a.n; ++v)
            if (a.adj[u][v]) d.link(u, v);
    for (std::size_t i = 0; i < a.n; ++i) {
        const std::size_t base = a.n + i * b.n;
        for (std::size_t u = 0; u < b.n; ++u)
            for (std::size_t v = 0; v < b.n; ++v)
                if (b.adj[u][v]) d.link(base + u, base + v);
        for (std::size_t v = 0; v < b.n; ++v) d.link(i, base + v);
    }
    return d;
}

template <typename Term>
double edge_sum(const Dense& g, Term term) {
    std::vector<double> deg(g.n);
    for (std::size_t u = 0; u < g.n; ++u) deg[u] = static_cast<double>(g.degree(u));
    double s = 0.0;
    for (std::size_t u = 0; u < g.n; ++u)
        for (std::size_t v = u + 1; v < g.n; ++v)
            if (g.adj[u][v]) s += term(deg[u], deg[v]);
    return s;
}

inline double eso(const Dense& g) {
    return edge_sum(g, [](double a, double b) { return (a + b) * std::hypot(a, b); });
}
inline double eu(const Dense& g) {
    return edge_sum(g, [](double a, double b) { return std::sqrt(a * a + b * b + a * b); });
}
inline double so(const Dense& g) {
    return edge_sum(g, [](double a, double b) { return std::hypot(a, b); });
}

inline bool close(double a, double b, double rel = 1e-9) {
    return std::abs(a - b) <= std::max(1e-12, rel * std::max(std::abs(a), std::abs(b)));
}

}  // namespace oracle
