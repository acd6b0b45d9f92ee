#pragma once

#include <algorithm>
#include <map>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "pottslist/graph.hpp"

namespace pottslist {

struct DcOptions {
    /// Pivot priority: earlier edges are split first. Edges not listed follow in id order.
    std::vector<EdgeId> pivot_order;
    /// Drop all but the lowest-id edge of each parallel class. Only sound when every
    /// gamma is -1, where a parallel copy becomes an annihilating loop after contraction.
    bool collapse_parallel = false;
    /// Cache results of connected subproblems keyed on their exact labeled encoding.
    bool memoize = false;
};

/// Deletion-contraction evaluation of the V-polynomial recursion over an algebra:
///
///   V(G) = V(G-e) + gamma_e V(G/e)      (e not a loop)
///   V(G) = (gamma_e + 1) V(G-e)         (e a loop)
///   V(E_n) = prod x_{w_i}
///
/// Loops are stripped up front into a prefactor and the graph is factored into
/// connected parts at every level. An Algebra supplies
///   Value one(), vertex(const VertexWeight&), gamma(const Edge&), gamma_plus_one(const Edge&)
///   bool is_zero(const Value&)
/// with Value closed under + and *. An algebra may also provide
///   bool annihilates(const VertexWeight&)
/// to declare that a connected part holding such a vertex evaluates to zero.
template <class Algebra>
class DeletionContraction {
public:
    using Value = typename Algebra::Value;

    DeletionContraction(Algebra algebra, DcOptions options) : algebra_(std::move(algebra)), options_(std::move(options)) {
        for (std::size_t i = 0; i < options_.pivot_order.size(); ++i) rank_.emplace(options_.pivot_order[i], i);
    }

    Value operator()(const WeightedMultigraph& g) { return solve(g); }

private:
    Value solve(const WeightedMultigraph& g) {
        Value prefactor = algebra_.one();
        std::vector<Edge> kept;
        kept.reserve(g.num_edges());
        for (const auto& e : g.edges()) {
            if (e.is_loop()) {
                prefactor = prefactor * algebra_.gamma_plus_one(e);
            } else {
                kept.push_back(e);
            }
        }
        if (algebra_.is_zero(prefactor)) return prefactor;
        if (options_.collapse_parallel) kept = collapse(std::move(kept));

        WeightedMultigraph loopless(WeightedMultigraph::Unchecked{}, g.vertices(), std::move(kept));
        Value result = prefactor;
        for (const auto& part : split_into_connected_parts(loopless)) {
            result = result * solve_connected(part);
            if (algebra_.is_zero(result)) break;
        }
        return result;
    }

    // Connected, loop-free input.
    Value solve_connected(const WeightedMultigraph& g) {
        if (g.num_edges() == 0) return algebra_.vertex(g.vertices().front().weight);
        if constexpr (requires(const VertexWeight& w) { algebra_.annihilates(w); }) {
            for (const auto& v : g.vertices()) {
                if (algebra_.annihilates(v.weight)) return Value(0);
            }
        }

        std::string key;
        if (options_.memoize) {
            key = encode(g);
            if (auto it = memo_.find(key); it != memo_.end()) return it->second;
        }

        const Edge& pivot = *std::min_element(g.edges().begin(), g.edges().end(),
                                              [&](const Edge& a, const Edge& b) { return rank(a.id) < rank(b.id); });
        Value deleted = solve(delete_edge(g, pivot.id));
        Value contracted = solve(contract_edge(g, pivot.id));
        Value result = deleted + algebra_.gamma(pivot) * contracted;

        if (options_.memoize) memo_.emplace(std::move(key), result);
        return result;
    }

    std::pair<std::size_t, EdgeId> rank(EdgeId id) const {
        auto it = rank_.find(id);
        return {it == rank_.end() ? rank_.size() : it->second, id};
    }

    static std::vector<Edge> collapse(std::vector<Edge> edges) {
        std::map<std::pair<VertexId, VertexId>, std::size_t> seen;
        std::vector<Edge> out;
        out.reserve(edges.size());
        for (auto& e : edges) {
            auto ends = std::minmax(e.u, e.v);
            auto [it, inserted] = seen.try_emplace({ends.first, ends.second}, out.size());
            if (inserted) {
                out.push_back(std::move(e));
            } else if (e.id < out[it->second].id) {
                out[it->second] = std::move(e);
            }
        }
        return out;
    }

    static std::string encode(const WeightedMultigraph& g) {
        std::string key;
        for (const auto& v : g.vertices()) {
            key += std::to_string(v.id);
            key += '=';
            key += canonical_key(v.weight).repr;
            key += ';';
        }
        key += '|';
        for (const auto& e : g.edges()) {
            key += std::to_string(e.id);
            key += ':';
            key += std::to_string(e.u);
            key += '-';
            key += std::to_string(e.v);
            key += ';';
        }
        return key;
    }

    Algebra algebra_;
    DcOptions options_;
    std::map<EdgeId, std::size_t> rank_;
    std::unordered_map<std::string, Value> memo_;
};

}  // namespace pottslist
