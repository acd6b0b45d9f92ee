#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "oracles.hpp"
#include "pottslist/errors.hpp"
#include "pottslist/listchrom.hpp"
#include "pottslist/random_instances.hpp"
#include "test_support.hpp"

using namespace pottslist;
using namespace pottslist::testing;

namespace {

ListAssignment uniform_lists(const WeightedMultigraph& g, const ColorSet& l) {
    ListAssignment out;
    for (auto id : g.vertex_ids()) out.emplace(id, l);
    return out;
}

ListAssignment k24_lists() {
    return {{0, ColorSet{1, 2}}, {1, ColorSet{3, 4}}, {2, ColorSet{1, 3}},
            {3, ColorSet{1, 4}}, {4, ColorSet{2, 3}}, {5, ColorSet{2, 4}}};
}

Integer counted_by_poly(const WeightedMultigraph& g, const ListAssignment& lists) {
    auto p = list_chromatic_poly(g, lists);
    return poly_eval(p, list_size_valuation(p));
}

WeightedMultigraph random_graph(Rng& rng, int max_vertices, int max_edges, bool loops = true) {
    RandomGraphOptions opts;
    opts.max_vertices = max_vertices;
    opts.max_edges = max_edges;
    opts.loops = loops;
    return random_multigraph(rng, opts, [](Rng&) { return VertexWeight(ColorSet{}); });
}

ListAssignment random_lists(Rng& rng, const WeightedMultigraph& g) {
    ListAssignment out;
    for (auto id : g.vertex_ids()) out.emplace(id, random_list(rng, 4, 0.55));
    return out;
}

}  // namespace

TEST_CASE("list-chromatic polynomial examples") {
    auto single = uniform_graph(1, {}, ColorSet{});
    CHECK(list_chromatic_poly(single, {{0, ColorSet{1, 2}}}) == MVPoly::x(ColorSet{1, 2}));

    auto loop = uniform_graph(2, {{0, 1}, {1, 1}}, ColorSet{});
    CHECK(list_chromatic_poly(loop, uniform_lists(loop, ColorSet{1, 2, 3})).is_zero());

    auto edge = uniform_graph(2, {{0, 1}}, ColorSet{});
    auto p = list_chromatic_poly(edge, {{0, ColorSet{1, 2}}, {1, ColorSet{2, 3}}});
    CHECK(p == MVPoly::x(ColorSet{1, 2}) * MVPoly::x(ColorSet{2, 3}) - MVPoly::x(ColorSet{2}));
    CHECK(poly_eval(p, list_size_valuation(p)) == 3);

    auto disjoint = list_chromatic_poly(edge, {{0, ColorSet{1}}, {1, ColorSet{2}}});
    CHECK(disjoint == MVPoly::x(ColorSet{1}) * MVPoly::x(ColorSet{2}) - MVPoly::x(ColorSet{}));
}

TEST_CASE("lists_of and with_lists") {
    auto g = make_graph({FieldVector{0, -1, 0}, FieldVector{-1, -1, -1}}, {{0, 1}});
    auto lists = lists_of(g);
    CHECK(lists.at(0) == ColorSet{1, 3});
    CHECK(lists.at(1).empty());
    auto as_sets = with_lists(g, lists);
    CHECK(as_sets.weight_kind() == WeightKind::color_set);
    CHECK_THROWS_AS(with_lists(g, {{0, ColorSet{1}}}), PreconditionError);
}

TEST_CASE("count examples") {
    auto tri = uniform_graph(3, triangle(), ColorSet{});
    auto full = uniform_lists(tri, ColorSet{1, 2, 3});
    CHECK(oracle::list_colorings(tri, full) == 6);
    CHECK(count_list_colorings(tri, full) == 6);
    CHECK(brute_force_count(tri, full) == 6);
    CHECK(counted_by_poly(tri, full) == 6);

    auto edge = uniform_graph(2, {{0, 1}}, ColorSet{});
    CHECK(count_list_colorings(edge, uniform_lists(edge, ColorSet{1})) == 0);

    auto k24 = uniform_graph(6, complete_bipartite_edges(2, 4), ColorSet{});
    CHECK(oracle::list_colorings(k24, k24_lists()) == 0);
    CHECK(count_list_colorings(k24, k24_lists()) == 0);
    CHECK(counted_by_poly(k24, k24_lists()) == 0);
}

TEST_CASE("brute force examples and cap") {
    auto path = uniform_graph(2, {{0, 1}}, ColorSet{});
    CHECK(brute_force_count(path, uniform_lists(path, ColorSet{1, 2})) == 2);
    auto e3 = uniform_graph(3, {}, ColorSet{});
    CHECK(brute_force_count(e3, {{0, ColorSet{1, 2}}, {1, ColorSet{1, 2, 3}}, {2, ColorSet{1, 2, 3, 4}}}) == 24);
    auto tri = uniform_graph(3, triangle(), ColorSet{});
    CHECK(brute_force_count(tri, uniform_lists(tri, ColorSet{1, 2})) == 0);
    CHECK_THROWS_AS(brute_force_count(e3, uniform_lists(e3, ColorSet{1, 2, 3}), 26), SizeError);
    CHECK(brute_force_count(e3, uniform_lists(e3, ColorSet{1, 2, 3}), 27) == 27);
    CHECK_THROWS_AS(brute_force_count(tri, {{0, ColorSet{1}}}), PreconditionError);
}

TEST_CASE("chromatic polynomial") {
    auto k3 = uniform_graph(3, triangle(), ColorSet{});
    auto chi = chromatic_polynomial(k3);
    CHECK(chi == UniPoly{{0, 2, -3, 1}});
    CHECK(to_string(chi) == "L^3 - 3*L^2 + 2*L");
    CHECK(chi(Integer(5)) == 60);

    auto e4 = uniform_graph(4, {}, ColorSet{});
    CHECK(chromatic_polynomial(e4) == UniPoly{{0, 0, 0, 0, 1}});
    auto edge = uniform_graph(2, {{0, 1}}, ColorSet{});
    CHECK(chromatic_polynomial(edge) == UniPoly{{0, -1, 1}});
    CHECK(chromatic_polynomial(WeightedMultigraph()) == UniPoly{{1}});

    auto c5 = uniform_graph(5, cycle_edges(5), ColorSet{});
    auto chi5 = chromatic_polynomial(c5);
    for (int k = 0; k <= 6; ++k) CHECK(chi5(Integer(k)) == oracle::proper_colorings(c5, k));
}

TEST_CASE("boundary chromatic") {
    auto path = uniform_graph(2, {{0, 1}}, ColorSet{});
    CHECK(boundary_chromatic(path, {0}, 3, 1) == 2);
    CHECK(boundary_chromatic(path, {0, 1}, 3, 1) == 0);
    CHECK(boundary_chromatic(path, {}, 3, 1) == chromatic_polynomial(path)(Integer(3)));
    auto c5 = uniform_graph(5, cycle_edges(5), ColorSet{});
    CHECK(boundary_chromatic(c5, {}, 4, 2) == chromatic_polynomial(c5)(Integer(4)));
    CHECK_THROWS_AS(boundary_chromatic(path, {0}, 2, 3), PreconditionError);
    CHECK_THROWS_AS(boundary_chromatic(path, {7}, 3, 1), UnknownVertex);
}

TEST_CASE("greedy tree decompositions") {
    auto tree = uniform_graph(6, {{0, 1}, {1, 2}, {1, 3}, {3, 4}, {3, 5}}, ColorSet{});
    CHECK(greedy_tree_decomposition(tree).width() == 1);
    std::vector<std::pair<int, int>> k4;
    for (int i = 0; i < 4; ++i) {
        for (int j = i + 1; j < 4; ++j) k4.emplace_back(i, j);
    }
    CHECK(greedy_tree_decomposition(uniform_graph(4, k4, ColorSet{})).width() == 3);
    auto c5 = uniform_graph(5, cycle_edges(5), ColorSet{});
    auto td = greedy_tree_decomposition(c5);
    CHECK(td.width() == 2);
    CHECK_NOTHROW(validate_decomposition(c5, td));
    auto grid = uniform_graph(9, grid_edges(3, 3), ColorSet{});
    CHECK(greedy_tree_decomposition(grid).width() >= 2);
    auto scattered = uniform_graph(4, {{0, 1}}, ColorSet{});
    CHECK_NOTHROW(validate_decomposition(scattered, greedy_tree_decomposition(scattered)));
}

TEST_CASE("invalid decompositions are rejected") {
    auto path = uniform_graph(3, path_edges(3), ColorSet{});
    TreeDecomposition missing_vertex{{{0, {0, 1}}}, {}};
    CHECK_THROWS_AS(validate_decomposition(path, missing_vertex), DecompositionError);
    TreeDecomposition missing_edge{{{0, {0, 1}}, {1, {2}}}, {{0, 1}}};
    CHECK_THROWS_AS(validate_decomposition(path, missing_edge), DecompositionError);
    TreeDecomposition disconnected{{{0, {0, 1}}, {1, {1, 2}}}, {}};
    CHECK_THROWS_AS(validate_decomposition(path, disconnected), DecompositionError);
    TreeDecomposition split_vertex{{{0, {0, 1}}, {1, {2}}, {2, {1, 2}}}, {{0, 1}, {1, 2}}};
    CHECK_THROWS_AS(validate_decomposition(path, split_vertex), DecompositionError);
    TreeDecomposition cyclic{{{0, {0, 1}}, {1, {1, 2}}, {2, {1}}}, {{0, 1}, {1, 2}, {2, 0}}};
    CHECK_THROWS_AS(validate_decomposition(path, cyclic), DecompositionError);
    CHECK_THROWS_AS(treewidth_count(path, uniform_lists(path, ColorSet{1, 2}), missing_edge), DecompositionError);
}

TEST_CASE("nice decompositions") {
    auto grid = uniform_graph(6, grid_edges(2, 3), ColorSet{});
    auto nice = make_nice(greedy_tree_decomposition(grid));
    REQUIRE_FALSE(nice.empty());
    CHECK(nice.back().bag.empty());
    std::map<VertexId, int> forgotten;
    for (std::size_t i = 0; i < nice.size(); ++i) {
        const auto& node = nice[i];
        for (auto c : node.children) CHECK(c < i);
        switch (node.kind) {
            case NiceNode::Kind::leaf:
                CHECK(node.children.empty());
                CHECK(node.bag.empty());
                break;
            case NiceNode::Kind::introduce:
            case NiceNode::Kind::forget:
                REQUIRE(node.children.size() == 1);
                CHECK(node.bag.size() + (node.kind == NiceNode::Kind::forget ? 1 : 0) ==
                      nice[node.children[0]].bag.size() + (node.kind == NiceNode::Kind::introduce ? 1 : 0));
                if (node.kind == NiceNode::Kind::forget) ++forgotten[node.vertex];
                break;
            case NiceNode::Kind::join:
                REQUIRE(node.children.size() == 2);
                CHECK(nice[node.children[0]].bag == node.bag);
                CHECK(nice[node.children[1]].bag == node.bag);
                break;
        }
    }
    CHECK(forgotten.size() == 6);
    for (const auto& [v, times] : forgotten) CHECK(times == 1);
}

TEST_CASE("treewidth DP examples") {
    auto path = uniform_graph(10, path_edges(10), ColorSet{});
    auto lists = uniform_lists(path, ColorSet{1, 2});
    auto td = greedy_tree_decomposition(path);
    CHECK(td.width() == 1);
    CHECK(oracle::list_colorings(path, lists) == 2);
    CHECK(treewidth_count(path, lists, td) == 2);

    auto grid = uniform_graph(9, grid_edges(3, 3), ColorSet{});
    auto three = uniform_lists(grid, ColorSet{1, 2, 3});
    CHECK(oracle::list_colorings(grid, three) == 246);
    CHECK(treewidth_count(grid, three, greedy_tree_decomposition(grid)) == 246);
    CHECK(chromatic_polynomial(grid)(Integer(3)) == 246);

    auto some_empty = three;
    some_empty[4] = ColorSet{};
    CHECK(treewidth_count(grid, some_empty, greedy_tree_decomposition(grid)) == 0);
}

TEST_CASE("choosability refutation") {
    auto k24 = uniform_graph(6, complete_bipartite_edges(2, 4), ColorSet{});
    auto witness = refute_choosability(k24, 2, ColorSet{1, 2, 3, 4});
    REQUIRE(witness);
    CHECK(oracle::list_colorings(k24, *witness) == 0);
    for (const auto& [v, l] : *witness) CHECK(l.size() == 2);

    auto tri = uniform_graph(3, triangle(), ColorSet{});
    CHECK_FALSE(refute_choosability(tri, 3, ColorSet{1, 2, 3}));

    auto none = refute_choosability(tri, 0, ColorSet{1, 2});
    REQUIRE(none);
    for (const auto& [v, l] : *none) CHECK(l.empty());

    CHECK_THROWS_AS(refute_choosability(k24, 2, ColorSet{1, 2, 3, 4}, 1000), SizeError);
    CHECK_THROWS_AS(refute_choosability(tri, 3, ColorSet{1, 2}), PreconditionError);
}

TEST_CASE("the three counting routes agree") {
    Rng rng(51);
    for (int trial = 0; trial < 300; ++trial) {
        auto g = random_graph(rng, 5, 8);
        auto lists = random_lists(rng, g);
        auto expected = Integer(oracle::list_colorings(g, lists));
        REQUIRE(counted_by_poly(g, lists) == expected);
        REQUIRE(count_list_colorings(g, lists) == expected);
        REQUIRE(brute_force_count(g, lists) == expected);
        REQUIRE(treewidth_count(g, lists, greedy_tree_decomposition(g)) == expected);
    }
}

TEST_CASE("the list-chromatic recursion holds symbolically") {
    Rng rng(52);
    for (int trial = 0; trial < 100; ++trial) {
        auto g = random_graph(rng, 5, 6, false);
        auto lists = random_lists(rng, g);
        auto p = list_chromatic_poly(g, lists);
        auto weighted = with_lists(g, lists);
        for (const auto& e : g.edges()) {
            auto deleted = delete_edge(weighted, e.id);
            auto contracted = contract_edge(weighted, e.id);
            REQUIRE(p == list_chromatic_poly(deleted, lists_of(deleted)) -
                             list_chromatic_poly(contracted, lists_of(contracted)));
        }
    }
}

TEST_CASE("uniform lists give the chromatic polynomial") {
    Rng rng(53);
    for (int trial = 0; trial < 60; ++trial) {
        auto g = random_graph(rng, 5, 7, false);
        auto chi = chromatic_polynomial(g);
        for (int k = 0; k <= 4; ++k) {
            REQUIRE(count_list_colorings(g, uniform_lists(g, ColorSet::range(k))) == chi(Integer(k)));
            REQUIRE(chi(Integer(k)) == oracle::proper_colorings(g, k));
        }
    }
}

TEST_CASE("enlarging a list never decreases the count") {
    Rng rng(54);
    for (int trial = 0; trial < 200; ++trial) {
        auto g = random_graph(rng, 5, 7);
        auto lists = random_lists(rng, g);
        auto before = count_list_colorings(g, lists);
        auto v = rng.pick(g.vertex_ids());
        std::vector<Color> grown = lists[v].elements();
        grown.push_back(static_cast<Color>(rng.uniform_int(1, 5)));
        lists[v] = ColorSet(grown);
        REQUIRE(count_list_colorings(g, lists) >= before);
    }
}

TEST_CASE("a loop annihilates polynomial and count") {
    Rng rng(55);
    for (int trial = 0; trial < 50; ++trial) {
        auto g = random_graph(rng, 4, 5, false);
        auto v = rng.pick(g.vertex_ids());
        std::vector<Edge> edges = g.edges();
        edges.push_back(Edge{1000, v, v, std::nullopt});
        WeightedMultigraph looped(g.vertices(), edges);
        auto lists = uniform_lists(looped, ColorSet{1, 2, 3, 4});
        REQUIRE(list_chromatic_poly(looped, lists).is_zero());
        REQUIRE(count_list_colorings(looped, lists) == 0);
        REQUIRE(brute_force_count(looped, lists) == 0);
        REQUIRE(treewidth_count(looped, lists, greedy_tree_decomposition(looped)) == 0);
    }
}
