#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>

#include "families.hpp"
#include "oracle.hpp"
#include "sombor/indices.hpp"
#include "sombor/products.hpp"

using namespace sombor;
using doctest::Approx;

namespace {

const double s2 = std::sqrt(2.0);
const double s3 = std::sqrt(3.0);

}  // namespace

// Reference values come from tests/oracle/compute_oracles.py (networkx) and
// agree with the closed forms written next to them.
TEST_CASE("elliptic Sombor index") {
    CHECK(elliptic_sombor(families::complete(2)) == Approx(2 * s2).epsilon(1e-12));
    CHECK(elliptic_sombor(families::path(3)) == Approx(6 * std::sqrt(5.0)).epsilon(1e-12));
    CHECK(elliptic_sombor(families::path(3)) == Approx(13.416407864998739).epsilon(1e-12));
    CHECK(elliptic_sombor(families::cycle(3)) == Approx(33.941125496954285).epsilon(1e-12));
    CHECK(elliptic_sombor(families::complete(5)) == Approx(452.54833995939055).epsilon(1e-12));
    const Graph jc = join(families::cycle(4), families::cycle(4));
    CHECK(elliptic_sombor(jc) == Approx(1728 * s2).epsilon(1e-12));
    CHECK(elliptic_sombor(jc) == Approx(2443.7610357807075).epsilon(1e-12));
}

TEST_CASE("Euler Sombor index") {
    CHECK(euler_sombor(families::complete(2)) == Approx(s3).epsilon(1e-12));
    CHECK(euler_sombor(families::cycle(4)) == Approx(8 * s3).epsilon(1e-12));
    const Graph net = corona(families::cycle(3), families::empty(1));
    CHECK(euler_sombor(net) == Approx(9 * s3 + 3 * std::sqrt(13.0)).epsilon(1e-12));
    CHECK(euler_sombor(net) == Approx(26.405111094511859).epsilon(1e-12));
}

TEST_CASE("Sombor index") {
    CHECK(sombor_index(families::complete(2)) == Approx(s2).epsilon(1e-12));
    CHECK(sombor_index(families::cycle(4)) == Approx(8 * s2).epsilon(1e-12));
    CHECK(sombor_index(families::empty(4)) == 0.0);
}

TEST_CASE("empty vertex set is rejected") {
    CHECK_THROWS_AS(elliptic_sombor(Graph{}), GraphError);
    CHECK_THROWS_AS(euler_sombor(Graph{}), GraphError);
    CHECK_THROWS_AS(sombor_index(Graph{}), GraphError);
    CHECK_THROWS_AS(index_report(Graph{}), GraphError);
}

TEST_CASE("index_report") {
    const IndexReport r = index_report(families::path(3));
    CHECK(r.m == 2);
    CHECK(r.max_deg == 2);
    CHECK(r.min_deg == 1);
    CHECK(r.eu == Approx(2 * std::sqrt(7.0)).epsilon(1e-12));

    const IndexReport zero = index_report(families::empty(3));
    CHECK(zero.eso == 0.0);
    CHECK(zero.eu == 0.0);
    CHECK(zero.so == 0.0);
}

TEST_CASE("regular closed forms over the regular family (order <= 8)") {
    const auto family = families::regular_family();
    CHECK(family.size() > 40);
    for (const Graph& g : family) {
        const double r = static_cast<double>(g.degree(0));
        const double m = static_cast<double>(g.size());
        CHECK(elliptic_sombor(g) == Approx(2 * s2 * m * r * r).epsilon(1e-9));
        CHECK(euler_sombor(g) == Approx(s3 * m * r).epsilon(1e-9));
        CHECK(sombor_index(g) == Approx(s2 * m * r).epsilon(1e-9));
    }
}

TEST_CASE("agreement with the dense oracle on random graphs") {
    for (std::uint64_t seed = 0; seed < 100; ++seed) {
        const Graph g = random_graph(1 + seed % 12, static_cast<double>(seed % 10) / 9.0, seed);
        const auto d = oracle::from_graph(g);
        CHECK(oracle::close(elliptic_sombor(g), oracle::eso(d)));
        CHECK(oracle::close(euler_sombor(g), oracle::eu(d)));
        CHECK(oracle::close(sombor_index(g), oracle::so(d)));
    }
}

TEST_CASE("invariance under vertex relabeling") {
    std::mt19937_64 rng(2024);
    for (std::uint64_t seed = 0; seed < 50; ++seed) {
        const std::size_t n = 2 + seed % 9;
        const Graph g = random_graph(n, 0.45, seed);
        std::vector<Vertex> perm(n);
        std::iota(perm.begin(), perm.end(), Vertex{0});
        std::shuffle(perm.begin(), perm.end(), rng);
        std::vector<Edge> relabeled;
        for (const Edge& e : g.edges()) relabeled.push_back({perm[e.u], perm[e.v]});
        const Graph h = Graph::from_edges(n, relabeled);
        CHECK(elliptic_sombor(h) == Approx(elliptic_sombor(g)).epsilon(1e-12));
        CHECK(euler_sombor(h) == Approx(euler_sombor(g)).epsilon(1e-12));
        CHECK(sombor_index(h) == Approx(sombor_index(g)).epsilon(1e-12));
    }
}

TEST_CASE("adding an edge to an edgeless graph increases every index") {
    for (std::size_t n = 2; n <= 6; ++n) {
        const Graph before = families::empty(n);
        const Graph after = build_graph(n, {{0, static_cast<Vertex>(n - 1)}});
        CHECK(elliptic_sombor(after) > elliptic_sombor(before));
        CHECK(euler_sombor(after) > euler_sombor(before));
        CHECK(sombor_index(after) > sombor_index(before));
    }
}
