#pragma once

#include <cstddef>
#include <string_view>

#include "sombor/graph.hpp"

namespace sombor {

enum class ProductKind { join, corona };

std::string_view to_string(ProductKind kind) noexcept;

/// Canonical vertex numbering of a product graph.
///
/// join:   V1 -> 0..n1-1, V2 -> n1..n1+n2-1
/// corona: V1 -> 0..n1-1, copy i of G2 -> n1+i*n2 .. n1+(i+1)*n2-1
struct ProductLayout {
    ProductKind kind = ProductKind::join;
    std::size_t n1 = 0;
    std::size_t n2 = 0;

    std::size_t order() const noexcept;
    Vertex first(Vertex u) const noexcept { return u; }
    /// Image of vertex v of G2; `copy` selects the corona copy and must be 0 for a join.
    Vertex second(Vertex v, std::size_t copy = 0) const noexcept;
};

/// G1 + G2. Throws GraphError when either operand is empty.
Graph join(const Graph& g1, const Graph& g2);

/// G1 ∘ G2: n1 copies of G2, vertex i of G1 adjacent to all of copy i.
/// Throws GraphError when either operand is empty.
Graph corona(const Graph& g1, const Graph& g2);

Graph product(ProductKind kind, const Graph& g1, const Graph& g2);

}  // namespace sombor
