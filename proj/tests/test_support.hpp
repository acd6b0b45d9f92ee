#pragma once

#include <functional>
#include <utility>
#include <vector>

#include "pottslist/graph.hpp"

namespace pottslist::testing {

/// Vertices 0..n-1 with the given weights; edges get ids 0.. in order and J = -1.
inline WeightedMultigraph make_graph(std::vector<VertexWeight> weights, const std::vector<std::pair<int, int>>& ends,
                                     std::optional<Rational> coupling = Rational(-1)) {
    std::vector<Vertex> vertices;
    for (std::size_t i = 0; i < weights.size(); ++i) {
        vertices.push_back(Vertex{static_cast<VertexId>(i), std::move(weights[i]), std::nullopt});
    }
    std::vector<Edge> edges;
    for (std::size_t i = 0; i < ends.size(); ++i) {
        edges.push_back(Edge{static_cast<EdgeId>(i), ends[i].first, ends[i].second, coupling});
    }
    return WeightedMultigraph(std::move(vertices), std::move(edges));
}

inline WeightedMultigraph uniform_graph(int n, const std::vector<std::pair<int, int>>& ends, const VertexWeight& w) {
    return make_graph(std::vector<VertexWeight>(static_cast<std::size_t>(n), w), ends);
}

inline std::vector<std::pair<int, int>> triangle() { return {{0, 1}, {1, 2}, {0, 2}}; }

inline std::vector<std::pair<int, int>> path_edges(int n) {
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
    return e;
}

inline std::vector<std::pair<int, int>> cycle_edges(int n) {
    auto e = path_edges(n);
    e.emplace_back(n - 1, 0);
    return e;
}

/// Rows x cols grid, vertex r * cols + c.
inline std::vector<std::pair<int, int>> grid_edges(int rows, int cols) {
    std::vector<std::pair<int, int>> e;
    for (int r = 0; r < rows; ++r) {
        for (int c = 0; c < cols; ++c) {
            if (c + 1 < cols) e.emplace_back(r * cols + c, r * cols + c + 1);
            if (r + 1 < rows) e.emplace_back(r * cols + c, (r + 1) * cols + c);
        }
    }
    return e;
}

/// K_{a,b}: vertices 0..a-1 on one side, a..a+b-1 on the other.
inline std::vector<std::pair<int, int>> complete_bipartite_edges(int a, int b) {
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i < a; ++i) {
        for (int j = 0; j < b; ++j) e.emplace_back(i, a + j);
    }
    return e;
}

}  // namespace pottslist::testing
