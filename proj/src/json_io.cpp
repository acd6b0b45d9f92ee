#include "pottslist/json_io.hpp"

#include "pottslist/errors.hpp"

namespace pottslist {

namespace {

Rational exact_number(const Json& value, const std::string& where) {
    if (value.is_number_integer()) return Rational(value.get<long long>());
    if (value.is_number_unsigned()) return Rational(value.get<unsigned long long>());
    if (value.is_number_float()) return rational_from_double(value.get<double>());
    if (value.is_string()) return parse_rational(value.get<std::string>());
    if (value.is_object() || value.is_array()) {
        throw ParseError(where + ": only real values are supported (complex entries are rejected)");
    }
    throw ParseError(where + ": expected a number");
}

int integer_field(const Json& obj, const char* key, const std::string& where) {
    auto it = obj.find(key);
    if (it == obj.end()) throw ParseError(where + ": missing \"" + key + "\"");
    if (!it->is_number_integer()) throw ParseError(where + ": \"" + key + "\" must be an integer");
    return it->get<int>();
}

}  // namespace

GraphDocument parse_graph(const std::string& text) {
    Json doc;
    try {
        doc = Json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(std::string("invalid JSON: ") + e.what());
    }
    return graph_from_json(doc);
}

GraphDocument graph_from_json(const Json& doc) {
    if (!doc.is_object()) throw ParseError("graph document must be a JSON object");
    GraphDocument out;
    if (auto it = doc.find("q"); it != doc.end()) {
        if (!it->is_number_integer() || it->get<int>() < 1) throw ParseError("\"q\" must be a positive integer");
        out.q = it->get<int>();
    }
    auto vs = doc.find("vertices");
    if (vs == doc.end() || !vs->is_array()) throw ParseError("\"vertices\" must be an array");

    std::vector<Vertex> vertices;
    for (const auto& item : *vs) {
        if (!item.is_object()) throw ParseError("vertex entries must be objects");
        Vertex v;
        v.id = integer_field(item, "id", "vertex");
        std::string where = "vertex " + std::to_string(v.id);
        auto field = item.find("field");
        auto list = item.find("list");
        if ((field == item.end()) == (list == item.end())) {
            throw ParseError(where + ": needs exactly one of \"field\" or \"list\"");
        }
        if (field != item.end()) {
            if (!field->is_array()) throw ParseError(where + ": \"field\" must be an array");
            std::vector<Rational> entries;
            for (const auto& m : *field) entries.push_back(exact_number(m, where));
            if (out.q && static_cast<int>(entries.size()) != *out.q) {
                throw InvalidWeight(where + ": field length differs from q");
            }
            v.weight = FieldVector(std::move(entries));
        } else {
            if (!list->is_array()) throw ParseError(where + ": \"list\" must be an array");
            std::vector<Color> colors;
            for (const auto& c : *list) {
                if (!c.is_number_integer() || c.get<long long>() < 1) {
                    throw ParseError(where + ": colors must be positive integers");
                }
                colors.push_back(c.get<int>());
            }
            v.weight = ColorSet(std::move(colors));
        }
        vertices.push_back(std::move(v));
    }

    std::vector<Edge> edges;
    if (auto es = doc.find("edges"); es != doc.end()) {
        if (!es->is_array()) throw ParseError("\"edges\" must be an array");
        int position = 0;
        for (const auto& item : *es) {
            if (!item.is_object()) throw ParseError("edge entries must be objects");
            Edge e;
            e.id = item.contains("id") ? integer_field(item, "id", "edge") : position;
            std::string where = "edge " + std::to_string(e.id);
            e.u = integer_field(item, "u", where);
            e.v = integer_field(item, "v", where);
            if (auto j = item.find("J"); j != item.end()) e.coupling = exact_number(*j, where);
            edges.push_back(std::move(e));
            ++position;
        }
    }
    out.graph = WeightedMultigraph(std::move(vertices), std::move(edges));
    return out;
}

Json rational_to_json(const Rational& r) {
    if (boost::multiprecision::denominator(r) == 1) {
        const Integer& n = boost::multiprecision::numerator(r);
        if (n >= std::numeric_limits<long long>::min() && n <= std::numeric_limits<long long>::max()) {
            return Json(n.convert_to<long long>());
        }
    }
    return Json(to_double(r));
}

Json graph_to_json(const WeightedMultigraph& g, std::optional<int> q) {
    Json doc = Json::object();
    if (!q) q = g.field_length();
    if (q) doc["q"] = *q;
    Json vertices = Json::array();
    for (const auto& v : g.vertices()) {
        Json item = Json::object();
        item["id"] = v.id;
        if (const auto* set = std::get_if<ColorSet>(&v.weight)) {
            item["list"] = set->elements();
        } else {
            Json entries = Json::array();
            for (const auto& m : std::get<FieldVector>(v.weight).entries()) entries.push_back(rational_to_json(m));
            item["field"] = std::move(entries);
        }
        vertices.push_back(std::move(item));
    }
    Json edges = Json::array();
    for (const auto& e : g.edges()) {
        Json item = Json::object();
        item["id"] = e.id;
        item["u"] = e.u;
        item["v"] = e.v;
        if (e.coupling) item["J"] = rational_to_json(*e.coupling);
        edges.push_back(std::move(item));
    }
    doc["vertices"] = std::move(vertices);
    doc["edges"] = std::move(edges);
    return doc;
}

Json poly_to_json(const MVPoly& p) {
    Json out = Json::array();
    for (const auto& [mono, coeff] : p.terms()) {
        Json vars = Json::object();
        for (const auto& [key, exponent] : mono.x) vars[x_variable_name(key)] = exponent;
        for (const auto& [edge, exponent] : mono.g) vars[g_variable_name(edge)] = exponent;
        Json term = Json::object();
        term["coeff"] = coeff.str();
        term["vars"] = std::move(vars);
        out.push_back(std::move(term));
    }
    return out;
}

}  // namespace pottslist
