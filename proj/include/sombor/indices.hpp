#pragma once

#include <cstddef>

#include "sombor/graph.hpp"

namespace sombor {

// Degree-based edge sums. All of them reject the empty vertex set with
// GraphError and accumulate in the graph's lexicographic edge order.

/// Σ (d(u)+d(v)) √(d(u)²+d(v)²)
double elliptic_sombor(const Graph& g);

/// Σ √(d(u)²+d(v)²+d(u)d(v))
double euler_sombor(const Graph& g);

/// Σ √(d(u)²+d(v)²)
double sombor_index(const Graph& g);

// Per-edge terms, exposed for the closed forms in bounds.
double elliptic_sombor_term(double du, double dv) noexcept;
double euler_sombor_term(double du, double dv) noexcept;
double sombor_term(double du, double dv) noexcept;

struct IndexReport {
    double eso = 0.0;
    double eu = 0.0;
    double so = 0.0;
    std::size_t m = 0;
    std::size_t max_deg = 0;
    std::size_t min_deg = 0;
};

IndexReport index_report(const Graph& g);

}  // namespace sombor
