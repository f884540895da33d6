#include "sombor/products.hpp"

#include <vector>

namespace sombor {

std::string_view to_string(ProductKind kind) noexcept {
    return kind == ProductKind::join ? "join" : "corona";
}

std::size_t ProductLayout::order() const noexcept {
    return kind == ProductKind::join ? n1 + n2 : n1 * (1 + n2);
}

Vertex ProductLayout::second(Vertex v, std::size_t copy) const noexcept {
    return static_cast<Vertex>(n1 + copy * n2 + v);
}

namespace {

void require_nonempty(const Graph& g1, const Graph& g2, std::string_view what) {
    if (g1.order() == 0 || g2.order() == 0) {
        throw GraphError(std::string(what) + " requires both operands to have at least one vertex");
    }
}

}  // namespace

Graph join(const Graph& g1, const Graph& g2) {
    require_nonempty(g1, g2, "join");
    const ProductLayout layout{ProductKind::join, g1.order(), g2.order()};

    std::vector<Edge> edges;
    edges.reserve(g1.size() + g2.size() + layout.n1 * layout.n2);
    for (const Edge& e : g1.edges()) edges.push_back({layout.first(e.u), layout.first(e.v)});
    for (const Edge& e : g2.edges()) edges.push_back({layout.second(e.u), layout.second(e.v)});
    for (Vertex u = 0; u < layout.n1; ++u) {
        for (Vertex v = 0; v < layout.n2; ++v) edges.push_back({layout.first(u), layout.second(v)});
    }
    return Graph::from_edges(layout.order(), edges);
}

Graph corona(const Graph& g1, const Graph& g2) {
    require_nonempty(g1, g2, "corona");
    const ProductLayout layout{ProductKind::corona, g1.order(), g2.order()};

    std::vector<Edge> edges;
    edges.reserve(g1.size() + layout.n1 * (g2.size() + layout.n2));
    for (const Edge& e : g1.edges()) edges.push_back({layout.first(e.u), layout.first(e.v)});
    for (std::size_t copy = 0; copy < layout.n1; ++copy) {
        for (const Edge& e : g2.edges()) {
            edges.push_back({layout.second(e.u, copy), layout.second(e.v, copy)});
        }
        const auto apex = layout.first(static_cast<Vertex>(copy));
        for (Vertex v = 0; v < layout.n2; ++v) edges.push_back({apex, layout.second(v, copy)});
    }
    return Graph::from_edges(layout.order(), edges);
}

Graph product(ProductKind kind, const Graph& g1, const Graph& g2) {
    return kind == ProductKind::join ? join(g1, g2) : corona(g1, g2);
}

}  // namespace sombor
