#pragma once

#include <map>
#include <optional>
#include <span>
#include <vector>

#include "pottslist/numeric.hpp"
#include "pottslist/weights.hpp"

namespace pottslist {

using VertexId = int;
using EdgeId = int;

/// Lattice coordinates carried by generated graphs. Not part of the JSON format.
struct Coord {
    int x = 0;
    int y = 0;
    int z = 0;
    friend bool operator==(const Coord&, const Coord&) = default;
};

struct Vertex {
    VertexId id = 0;
    VertexWeight weight;
    std::optional<Coord> coord;
};

struct Edge {
    EdgeId id = 0;
    VertexId u = 0;
    VertexId v = 0;
    /// Coupling J_e; nullopt marks an indeterminate (symbolic) edge weight.
    std::optional<Rational> coupling;

    bool is_loop() const { return u == v; }
};

/// Sorted list of edge ids A ⊆ E(G).
using EdgeSubset = std::vector<EdgeId>;

/// Vertex- and edge-weighted multigraph. Loops and parallel edges are allowed.
/// Vertices and edges are kept sorted by id; values are immutable once built.
class WeightedMultigraph {
public:
    WeightedMultigraph() = default;

    /// Validates unique ids, existing endpoints, and a single weight kind
    /// (with a common length for field vectors).
    WeightedMultigraph(std::vector<Vertex> vertices, std::vector<Edge> edges);

    const std::vector<Vertex>& vertices() const { return vertices_; }
    const std::vector<Edge>& edges() const { return edges_; }
    std::size_t num_vertices() const { return vertices_.size(); }
    std::size_t num_edges() const { return edges_.size(); }

    bool has_vertex(VertexId id) const;
    bool has_edge(EdgeId id) const;
    /// Position of the vertex in vertices(). Throws UnknownVertex.
    std::size_t vertex_index(VertexId id) const;
    std::size_t edge_index(EdgeId id) const;
    const Vertex& vertex(VertexId id) const { return vertices_[vertex_index(id)]; }
    const Edge& edge(EdgeId id) const { return edges_[edge_index(id)]; }

    std::optional<WeightKind> weight_kind() const;
    /// Length of the field vectors, if this is a field-weighted graph with vertices.
    std::optional<int> field_length() const;

    bool has_loop() const;
    std::vector<EdgeId> edge_ids() const;
    std::vector<VertexId> vertex_ids() const;

    /// Neighbor indices (into vertices()) per vertex index, loops excluded,
    /// parallel edges reported once.
    std::vector<std::vector<std::size_t>> adjacency() const;

    struct Unchecked {};
    WeightedMultigraph(Unchecked, std::vector<Vertex> vertices, std::vector<Edge> edges);

private:
    std::vector<Vertex> vertices_;
    std::vector<Edge> edges_;
};

WeightedMultigraph delete_edge(const WeightedMultigraph& g, EdgeId e);

/// Merges the endpoints of a non-loop edge into the lower-numbered vertex with
/// the combined weight. Edges parallel to e become loops. Throws ContractLoop.
WeightedMultigraph contract_edge(const WeightedMultigraph& g, EdgeId e);

struct Component {
    std::vector<VertexId> vertices;
    VertexWeight weight;
};

/// Connected components of the spanning subgraph (V(G), A), ordered by their
/// smallest vertex id, each with the combination of its vertex weights.
std::vector<Component> components(const WeightedMultigraph& g, const EdgeSubset& subset);

std::vector<WeightedMultigraph> split_into_connected_parts(const WeightedMultigraph& g);

bool is_connected(const WeightedMultigraph& g);

/// Same structure with vertex weights replaced. Vertices missing from the map keep
/// their weight.
WeightedMultigraph with_weights(const WeightedMultigraph& g, const std::map<VertexId, VertexWeight>& weights);

/// Disjoint union; ids of the second graph must not clash with the first.
WeightedMultigraph disjoint_union(const WeightedMultigraph& a, const WeightedMultigraph& b);

}  // namespace pottslist
