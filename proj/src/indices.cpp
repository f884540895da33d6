#include "sombor/indices.hpp"

#include <algorithm>
#include <cmath>

namespace sombor {

double elliptic_sombor_term(double du, double dv) noexcept { return (du + dv) * std::sqrt(du * du + dv * dv); }

double euler_sombor_term(double du, double dv) noexcept { return std::sqrt(du * du + dv * dv + du * dv); }

double sombor_term(double du, double dv) noexcept { return std::sqrt(du * du + dv * dv); }

namespace {

template <typename Term>
double edge_sum(const Graph& g, Term term) {
    if (g.order() == 0) throw GraphError("degree-based indices are undefined for the empty graph");
    const auto degs = g.degrees();
    double total = 0.0;
    for (const Edge& e : g.edges()) {
        total += term(static_cast<double>(degs[e.u]), static_cast<double>(degs[e.v]));
    }
    return total;
}

}  // namespace

double elliptic_sombor(const Graph& g) { return edge_sum(g, elliptic_sombor_term); }

double euler_sombor(const Graph& g) { return edge_sum(g, euler_sombor_term); }

double sombor_index(const Graph& g) { return edge_sum(g, sombor_term); }

IndexReport index_report(const Graph& g) {
    IndexReport r;
    r.eso = elliptic_sombor(g);
    r.eu = euler_sombor(g);
    r.so = sombor_index(g);
    r.m = g.size();
    const auto degs = g.degrees();
    const auto [lo, hi] = std::minmax_element(degs.begin(), degs.end());
    r.min_deg = *lo;
    r.max_deg = *hi;
    return r;
}

}  // namespace sombor
