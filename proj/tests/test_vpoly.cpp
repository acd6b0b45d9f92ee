#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>

#include "oracles.hpp"
#include "pottslist/errors.hpp"
#include "pottslist/random_instances.hpp"
#include "pottslist/vpoly.hpp"
#include "test_support.hpp"

using namespace pottslist;
using pottslist::testing::make_graph;

namespace {

VertexWeight random_weight(Rng& rng, bool sets) {
    if (sets) return random_list(rng, 3, 0.6);
    return random_field(rng, 2, Rational(-1), Rational(0), 0.4);
}

WeightedMultigraph random_graph(Rng& rng, bool sets, int max_vertices, int max_edges) {
    RandomGraphOptions opts;
    opts.max_vertices = max_vertices;
    opts.max_edges = max_edges;
    return random_multigraph(rng, opts, [sets](Rng& r) { return random_weight(r, sets); });
}

}  // namespace

TEST_CASE("edgeless graphs give the product of their weights") {
    auto g = make_graph({ColorSet{1}, ColorSet{2}}, {});
    CHECK(v_poly_dc(g) == MVPoly::x(ColorSet{1}) * MVPoly::x(ColorSet{2}));
    auto one = make_graph({FieldVector{0, -1}}, {});
    CHECK(v_poly_expansion(one) == MVPoly::x(FieldVector{0, -1}));
    CHECK(v_poly_dc(WeightedMultigraph()) == MVPoly(1));
}

TEST_CASE("a loop contributes a factor g + 1") {
    auto g = make_graph({ColorSet{1, 2}}, {{0, 0}});
    auto expected = (MVPoly::g(0) + MVPoly(1)) * MVPoly::x(ColorSet{1, 2});
    CHECK(v_poly_dc(g) == expected);
    CHECK(v_poly_expansion(g) == expected);
}

TEST_CASE("single edge") {
    FieldVector a{0, -1};
    FieldVector b{-1, 0};
    auto g = make_graph({a, b}, {{0, 1}});
    auto expected = MVPoly::x(a) * MVPoly::x(b) + MVPoly::g(0) * MVPoly::x(FieldVector{-1, -1});
    CHECK(v_poly_dc(g) == expected);
    CHECK(v_poly_expansion(g) == expected);
}

TEST_CASE("two parallel edges") {
    ColorSet a{1, 2};
    ColorSet b{2, 3};
    auto g = make_graph({a, b}, {{0, 1}, {1, 0}});
    auto ab = MVPoly::x(ColorSet{2});
    auto expected = MVPoly::x(a) * MVPoly::x(b) + (MVPoly::g(0) + MVPoly::g(1)) * ab + MVPoly::g(0) * MVPoly::g(1) * ab;
    CHECK(oracle::v_polynomial_by_subsets(g) == expected);
    CHECK(v_poly_dc(g) == expected);
    CHECK(v_poly_expansion(g) == expected);

    FieldVector f{0, -1};
    auto h = make_graph({f, f}, {{0, 1}, {0, 1}});
    auto ff = MVPoly::x(FieldVector{0, -2});
    auto expected_h = MVPoly::x(f) * MVPoly::x(f) + (MVPoly::g(0) + MVPoly::g(1) + MVPoly::g(0) * MVPoly::g(1)) * ff;
    CHECK(v_poly_dc(h) == expected_h);
    CHECK(v_poly_expansion(h) == expected_h);
}

TEST_CASE("constant gamma") {
    auto g = make_graph({ColorSet{1, 2}, ColorSet{2, 3}}, {{0, 1}});
    auto expected = MVPoly::x(ColorSet{1, 2}) * MVPoly::x(ColorSet{2, 3}) - MVPoly::x(ColorSet{2});
    CHECK(v_poly_dc(g, {}, -1) == expected);
    CHECK(v_poly_expansion(g, default_subset_cap, -1) == expected);
    auto doubled = make_graph({ColorSet{1, 2}, ColorSet{2, 3}}, {{0, 1}, {0, 1}});
    CHECK(v_poly_dc(doubled, {}, -1) == expected);
    CHECK(v_poly_expansion(doubled, default_subset_cap, -1) == expected);
    CHECK(v_poly_dc(doubled, {}, 2) == v_poly_expansion(doubled, default_subset_cap, 2));
}

TEST_CASE("expansion refuses graphs above the cap") {
    auto g = pottslist::testing::uniform_graph(2, std::vector<std::pair<int, int>>(5, {0, 1}), ColorSet{1});
    CHECK_THROWS_AS(v_poly_expansion(g, 4), SizeError);
    CHECK_NOTHROW(v_poly_expansion(g, 5));
}

TEST_CASE("both engines match the subset oracle") {
    Rng rng(41);
    for (int trial = 0; trial < 200; ++trial) {
        auto g = random_graph(rng, trial % 2 == 0, 5, 7);
        auto reference = oracle::v_polynomial_by_subsets(g);
        REQUIRE(v_poly_dc(g) == reference);
        REQUIRE(v_poly_expansion(g) == reference);
    }
}

TEST_CASE("deletion-contraction is independent of the pivot order") {
    Rng rng(42);
    for (int trial = 0; trial < 60; ++trial) {
        auto g = random_graph(rng, trial % 2 == 1, 5, 6);
        auto base = v_poly_dc(g);
        auto order = g.edge_ids();
        for (int perm = 0; perm < 20; ++perm) {
            for (std::size_t i = order.size(); i > 1; --i) {
                std::swap(order[i - 1], order[static_cast<std::size_t>(rng.uniform_int(0, static_cast<long long>(i) - 1))]);
            }
            REQUIRE(v_poly_dc(g, order) == base);
        }
    }
}

TEST_CASE("disjoint unions multiply") {
    Rng rng(43);
    for (int trial = 0; trial < 100; ++trial) {
        bool sets = trial % 2 == 0;
        auto a = random_graph(rng, sets, 3, 4);
        auto b0 = random_graph(rng, sets, 3, 4);
        std::vector<Vertex> vs;
        for (auto v : b0.vertices()) {
            v.id += 100;
            vs.push_back(v);
        }
        std::vector<Edge> es;
        for (auto e : b0.edges()) {
            e.id += 100;
            e.u += 100;
            e.v += 100;
            es.push_back(e);
        }
        WeightedMultigraph b(vs, es);
        if (!sets && a.field_length() != b.field_length()) continue;
        auto u = disjoint_union(a, b);
        REQUIRE(v_poly_dc(u) == v_poly_dc(a) * v_poly_dc(b));
        REQUIRE(v_poly_expansion(u) == v_poly_expansion(a) * v_poly_expansion(b));
    }
}

TEST_CASE("the defining recursion holds") {
    Rng rng(44);
    for (int trial = 0; trial < 100; ++trial) {
        auto g = random_graph(rng, trial % 2 == 0, 5, 6);
        for (const auto& e : g.edges()) {
            auto rest = v_poly_dc(delete_edge(g, e.id));
            if (e.is_loop()) {
                REQUIRE(v_poly_dc(g) == (MVPoly::g(e.id) + MVPoly(1)) * rest);
            } else {
                REQUIRE(v_poly_dc(g) == rest + MVPoly::g(e.id) * v_poly_dc(contract_edge(g, e.id)));
            }
        }
    }
}
