#pragma once

#include <optional>
#include <string>

#include <json.hpp>

#include "pottslist/graph.hpp"
#include "pottslist/poly.hpp"

namespace pottslist {

using Json = nlohmann::ordered_json;

struct GraphDocument {
    WeightedMultigraph graph;
    std::optional<int> q;
};

/// Graph format:
///   {"q": <int, optional>,
///    "vertices": [{"id": <int>, "field": [..]} | {"id": <int>, "list": [..]}],
///    "edges": [{"id": <int, optional>, "u": <int>, "v": <int>, "J": <number, optional>}]}
/// Field entries and J may also be given as exact strings such as "-1/3".
/// Malformed documents throw ParseError.
GraphDocument parse_graph(const std::string& text);
GraphDocument graph_from_json(const Json& doc);
Json graph_to_json(const WeightedMultigraph& g, std::optional<int> q = std::nullopt);

/// [{"coeff": "<decimal>", "vars": {"x[{1,2}]": 1, "g[0]": 2}}, ...] in monomial order.
Json poly_to_json(const MVPoly& p);

/// Exact rationals that are integers become JSON integers, everything else a double.
Json rational_to_json(const Rational& r);

}  // namespace pottslist
