#include "pottslist/graph.hpp"

#include <algorithm>
#include <string>

#include "pottslist/disjoint_sets.hpp"
#include "pottslist/errors.hpp"

namespace pottslist {

namespace {

bool by_vertex_id(const Vertex& a, const Vertex& b) { return a.id < b.id; }
bool by_edge_id(const Edge& a, const Edge& b) { return a.id < b.id; }

}  // namespace

WeightedMultigraph::WeightedMultigraph(std::vector<Vertex> vertices, std::vector<Edge> edges)
    : vertices_(std::move(vertices)), edges_(std::move(edges)) {
    std::sort(vertices_.begin(), vertices_.end(), by_vertex_id);
    std::sort(edges_.begin(), edges_.end(), by_edge_id);
    for (std::size_t i = 1; i < vertices_.size(); ++i) {
        if (vertices_[i].id == vertices_[i - 1].id) {
            throw PreconditionError("duplicate vertex id " + std::to_string(vertices_[i].id));
        }
    }
    for (std::size_t i = 1; i < edges_.size(); ++i) {
        if (edges_[i].id == edges_[i - 1].id) {
            throw PreconditionError("duplicate edge id " + std::to_string(edges_[i].id));
        }
    }
    for (const auto& e : edges_) {
        if (!has_vertex(e.u) || !has_vertex(e.v)) {
            throw UnknownVertex("edge " + std::to_string(e.id) + " references a missing vertex");
        }
    }
    if (!vertices_.empty()) {
        const auto& first = vertices_.front().weight;
        for (const auto& v : vertices_) {
            if (v.weight.index() != first.index()) throw InvalidWeight("vertices carry mixed weight kinds");
            if (const auto* f = std::get_if<FieldVector>(&v.weight)) {
                if (f->size() != std::get<FieldVector>(first).size()) {
                    throw InvalidWeight("field vectors of different lengths");
                }
            }
        }
    }
}

WeightedMultigraph::WeightedMultigraph(Unchecked, std::vector<Vertex> vertices, std::vector<Edge> edges)
    : vertices_(std::move(vertices)), edges_(std::move(edges)) {}

bool WeightedMultigraph::has_vertex(VertexId id) const {
    auto it = std::lower_bound(vertices_.begin(), vertices_.end(), id,
                               [](const Vertex& v, VertexId key) { return v.id < key; });
    return it != vertices_.end() && it->id == id;
}

bool WeightedMultigraph::has_edge(EdgeId id) const {
    auto it = std::lower_bound(edges_.begin(), edges_.end(), id,
                               [](const Edge& e, EdgeId key) { return e.id < key; });
    return it != edges_.end() && it->id == id;
}

std::size_t WeightedMultigraph::vertex_index(VertexId id) const {
    auto it = std::lower_bound(vertices_.begin(), vertices_.end(), id,
                               [](const Vertex& v, VertexId key) { return v.id < key; });
    if (it == vertices_.end() || it->id != id) throw UnknownVertex("unknown vertex id " + std::to_string(id));
    return static_cast<std::size_t>(it - vertices_.begin());
}

std::size_t WeightedMultigraph::edge_index(EdgeId id) const {
    auto it = std::lower_bound(edges_.begin(), edges_.end(), id,
                               [](const Edge& e, EdgeId key) { return e.id < key; });
    if (it == edges_.end() || it->id != id) throw UnknownEdge("unknown edge id " + std::to_string(id));
    return static_cast<std::size_t>(it - edges_.begin());
}

std::optional<WeightKind> WeightedMultigraph::weight_kind() const {
    if (vertices_.empty()) return std::nullopt;
    return kind_of(vertices_.front().weight);
}

std::optional<int> WeightedMultigraph::field_length() const {
    if (vertices_.empty()) return std::nullopt;
    if (const auto* f = std::get_if<FieldVector>(&vertices_.front().weight)) return static_cast<int>(f->size());
    return std::nullopt;
}

bool WeightedMultigraph::has_loop() const {
    return std::any_of(edges_.begin(), edges_.end(), [](const Edge& e) { return e.is_loop(); });
}

std::vector<EdgeId> WeightedMultigraph::edge_ids() const {
    std::vector<EdgeId> ids;
    ids.reserve(edges_.size());
    for (const auto& e : edges_) ids.push_back(e.id);
    return ids;
}

std::vector<VertexId> WeightedMultigraph::vertex_ids() const {
    std::vector<VertexId> ids;
    ids.reserve(vertices_.size());
    for (const auto& v : vertices_) ids.push_back(v.id);
    return ids;
}

std::vector<std::vector<std::size_t>> WeightedMultigraph::adjacency() const {
    std::vector<std::vector<std::size_t>> adj(vertices_.size());
    for (const auto& e : edges_) {
        if (e.is_loop()) continue;
        auto a = vertex_index(e.u);
        auto b = vertex_index(e.v);
        adj[a].push_back(b);
        adj[b].push_back(a);
    }
    for (auto& row : adj) {
        std::sort(row.begin(), row.end());
        row.erase(std::unique(row.begin(), row.end()), row.end());
    }
    return adj;
}

WeightedMultigraph delete_edge(const WeightedMultigraph& g, EdgeId e) {
    auto idx = g.edge_index(e);
    std::vector<Edge> edges = g.edges();
    edges.erase(edges.begin() + static_cast<std::ptrdiff_t>(idx));
    return WeightedMultigraph(WeightedMultigraph::Unchecked{}, g.vertices(), std::move(edges));
}

WeightedMultigraph contract_edge(const WeightedMultigraph& g, EdgeId e) {
    const Edge& target = g.edge(e);
    if (target.is_loop()) throw ContractLoop("edge " + std::to_string(e) + " is a loop");
    VertexId keep = std::min(target.u, target.v);
    VertexId gone = std::max(target.u, target.v);

    std::vector<Vertex> vertices;
    vertices.reserve(g.num_vertices() - 1);
    VertexWeight merged = combine(g.vertex(keep).weight, g.vertex(gone).weight);
    for (const auto& v : g.vertices()) {
        if (v.id == gone) continue;
        vertices.push_back(v);
        if (v.id == keep) vertices.back().weight = merged;
    }
    std::vector<Edge> edges;
    edges.reserve(g.num_edges() - 1);
    for (const auto& edge : g.edges()) {
        if (edge.id == e) continue;
        Edge moved = edge;
        if (moved.u == gone) moved.u = keep;
        if (moved.v == gone) moved.v = keep;
        edges.push_back(std::move(moved));
    }
    return WeightedMultigraph(WeightedMultigraph::Unchecked{}, std::move(vertices), std::move(edges));
}

std::vector<Component> components(const WeightedMultigraph& g, const EdgeSubset& subset) {
    DisjointSets sets(g.num_vertices());
    for (EdgeId id : subset) {
        const Edge& e = g.edge(id);
        sets.unite(g.vertex_index(e.u), g.vertex_index(e.v));
    }
    std::vector<Component> out;
    std::vector<std::size_t> slot(g.num_vertices(), SIZE_MAX);
    for (std::size_t i = 0; i < g.num_vertices(); ++i) {
        std::size_t root = sets.find(i);
        const Vertex& v = g.vertices()[i];
        if (slot[root] == SIZE_MAX) {
            slot[root] = out.size();
            out.push_back(Component{{v.id}, v.weight});
        } else {
            auto& comp = out[slot[root]];
            comp.vertices.push_back(v.id);
            comp.weight = combine(comp.weight, v.weight);
        }
    }
    return out;
}

std::vector<WeightedMultigraph> split_into_connected_parts(const WeightedMultigraph& g) {
    if (g.num_vertices() == 0) return {};
    DisjointSets sets(g.num_vertices());
    for (const auto& e : g.edges()) sets.unite(g.vertex_index(e.u), g.vertex_index(e.v));
    if (sets.set_count() == 1) return {g};

    std::vector<std::size_t> slot(g.num_vertices(), SIZE_MAX);
    std::vector<std::vector<Vertex>> part_vertices;
    std::vector<std::vector<Edge>> part_edges;
    std::vector<std::size_t> part_of(g.num_vertices());
    for (std::size_t i = 0; i < g.num_vertices(); ++i) {
        std::size_t root = sets.find(i);
        if (slot[root] == SIZE_MAX) {
            slot[root] = part_vertices.size();
            part_vertices.emplace_back();
            part_edges.emplace_back();
        }
        part_of[i] = slot[root];
        part_vertices[slot[root]].push_back(g.vertices()[i]);
    }
    for (const auto& e : g.edges()) part_edges[part_of[g.vertex_index(e.u)]].push_back(e);

    std::vector<WeightedMultigraph> parts;
    parts.reserve(part_vertices.size());
    for (std::size_t p = 0; p < part_vertices.size(); ++p) {
        parts.emplace_back(WeightedMultigraph::Unchecked{}, std::move(part_vertices[p]), std::move(part_edges[p]));
    }
    return parts;
}

bool is_connected(const WeightedMultigraph& g) { return split_into_connected_parts(g).size() <= 1; }

WeightedMultigraph with_weights(const WeightedMultigraph& g, const std::map<VertexId, VertexWeight>& weights) {
    std::vector<Vertex> vertices = g.vertices();
    for (auto& v : vertices) {
        if (auto it = weights.find(v.id); it != weights.end()) v.weight = it->second;
    }
    for (const auto& [id, w] : weights) {
        if (!g.has_vertex(id)) throw UnknownVertex("weight given for unknown vertex " + std::to_string(id));
    }
    return WeightedMultigraph(std::move(vertices), g.edges());
}

WeightedMultigraph disjoint_union(const WeightedMultigraph& a, const WeightedMultigraph& b) {
    std::vector<Vertex> vertices = a.vertices();
    vertices.insert(vertices.end(), b.vertices().begin(), b.vertices().end());
    std::vector<Edge> edges = a.edges();
    edges.insert(edges.end(), b.edges().begin(), b.edges().end());
    return WeightedMultigraph(std::move(vertices), std::move(edges));
}

}  // namespace pottslist
