#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "pottslist/errors.hpp"
#include "pottslist/json_io.hpp"
#include "pottslist/lattices.hpp"
#include "pottslist/vpoly.hpp"

using namespace pottslist;

TEST_CASE("parse a list graph") {
    auto doc = parse_graph(R"({"vertices":[{"id":1,"list":[3,1]},{"id":2,"list":[]}],
                               "edges":[{"u":1,"v":2},{"id":7,"u":2,"v":2,"J":-0.5}]})");
    CHECK_FALSE(doc.q);
    CHECK(doc.graph.vertex(1).weight == VertexWeight(ColorSet{1, 3}));
    CHECK(std::get<ColorSet>(doc.graph.vertex(2).weight).empty());
    CHECK(doc.graph.edge_ids() == std::vector<EdgeId>{0, 7});
    CHECK_FALSE(doc.graph.edge(0).coupling);
    CHECK(doc.graph.edge(7).coupling == Rational(-1, 2));
}

TEST_CASE("field entries are exact") {
    auto doc = parse_graph(R"({"q":3,"vertices":[{"id":0,"field":[0,-0.1,"-1/3"]}],"edges":[]})");
    CHECK(doc.q == 3);
    const auto& f = std::get<FieldVector>(doc.graph.vertex(0).weight);
    CHECK(f[0] == 0);
    CHECK(f[1] == Rational(-1, 10));
    CHECK(f[2] == Rational(-1, 3));
    CHECK(parse_graph(R"({"vertices":[{"id":0,"field":[1e-2]}],"edges":[]})").graph.vertex(0).weight ==
          VertexWeight(FieldVector{Rational(1, 100)}));
}

TEST_CASE("malformed documents") {
    CHECK_THROWS_AS(parse_graph("{"), ParseError);
    CHECK_THROWS_AS(parse_graph("[]"), ParseError);
    CHECK_THROWS_AS(parse_graph(R"({"vertices":[{"id":0}],"edges":[]})"), ParseError);
    CHECK_THROWS_AS(parse_graph(R"({"vertices":[{"id":0,"list":[1],"field":[0]}],"edges":[]})"), ParseError);
    CHECK_THROWS_AS(parse_graph(R"({"vertices":[{"id":0,"field":[{"re":0,"im":1}]}],"edges":[]})"), ParseError);
    CHECK_THROWS_AS(parse_graph(R"({"vertices":[{"id":0,"field":[[0,1]]}],"edges":[]})"), ParseError);
    CHECK_THROWS_AS(parse_graph(R"({"vertices":[{"id":0,"field":["abc"]}],"edges":[]})"), ParseError);
    CHECK_THROWS_AS(parse_graph(R"({"vertices":[{"id":0,"list":[1.5]}],"edges":[]})"), ParseError);
    CHECK_THROWS_AS(parse_graph(R"({"vertices":[{"id":"a","list":[1]}],"edges":[]})"), ParseError);
    CHECK_THROWS_AS(parse_graph(R"({"vertices":[{"id":0,"list":[1]}],"edges":[{"u":0}]})"), ParseError);
}

TEST_CASE("structural errors are preconditions") {
    CHECK_THROWS_AS(parse_graph(R"({"vertices":[{"id":0,"list":[1]}],"edges":[{"u":0,"v":1}]})"), UnknownVertex);
    CHECK_THROWS_AS(parse_graph(R"({"vertices":[{"id":0,"list":[1]},{"id":1,"field":[0]}],"edges":[]})"), InvalidWeight);
    CHECK_THROWS_AS(parse_graph(R"({"q":2,"vertices":[{"id":0,"field":[0,0,0]}],"edges":[]})"), InvalidWeight);
}

TEST_CASE("graphs round-trip") {
    FamilySpec spec;
    spec.kind = FamilyKind::augmented_cubic3d;
    spec.dims = {2, 3, 2};
    spec.fields.kind = FieldPattern::Kind::paper_mod3;
    auto g = generate(spec);
    auto j = graph_to_json(g);
    CHECK(j["q"] == 3);
    auto back = graph_from_json(j).graph;
    CHECK(back.vertex_ids() == g.vertex_ids());
    CHECK(back.edge_ids() == g.edge_ids());
    for (const auto& v : g.vertices()) CHECK(canonical_key(back.vertex(v.id).weight) == canonical_key(v.weight));
    for (const auto& e : g.edges()) CHECK(back.edge(e.id).coupling == e.coupling);
    CHECK(graph_to_json(back).dump() == j.dump());
}

TEST_CASE("polynomial serialization") {
    auto doc = parse_graph(R"({"vertices":[{"id":0,"list":[1,2]},{"id":1,"list":[2,3]}],"edges":[{"u":0,"v":1}]})");
    auto j = poly_to_json(v_poly_dc(doc.graph));
    CHECK(j.dump() == R"([{"coeff":"1","vars":{"x[{1,2}]":1,"x[{2,3}]":1}},{"coeff":"1","vars":{"x[{2}]":1,"g[0]":1}}])");
    CHECK(poly_to_json(MVPoly()).dump() == "[]");
    CHECK(poly_to_json(MVPoly(-4)).dump() == R"([{"coeff":"-4","vars":{}}])");
}

TEST_CASE("rationals in JSON") {
    CHECK(rational_to_json(Rational(-3)).dump() == "-3");
    CHECK(rational_to_json(Rational(1, 4)).get<double>() == 0.25);
}
