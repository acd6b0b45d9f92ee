#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "pottslist/disjoint_sets.hpp"
#include "pottslist/errors.hpp"
#include "pottslist/graph.hpp"
#include "pottslist/parallel.hpp"

namespace pottslist {

inline constexpr std::size_t default_subset_cap = 24;

/// Enumerates every edge subset A of g and reports the vertex sets of the
/// components of (V(g), A) as bitmasks over vertex indices.
///
/// Subsets are split into blocks by their high edge bits. Inside a block the low
/// bits run in Gray-code order and each subset rebuilds its union-find from the
/// block's base structure. visit(acc, edge_mask, component_masks) accumulates into
/// a per-block Acc; the per-block results come back in block order.
template <class Acc, class Visit>
std::vector<Acc> visit_spanning_subgraphs(const WeightedMultigraph& g, std::size_t cap, Visit visit) {
    const std::size_t m = g.num_edges();
    const std::size_t n = g.num_vertices();
    if (m > cap) {
        throw SizeError("subset enumeration over " + std::to_string(m) + " edges exceeds the cap of " +
                        std::to_string(cap));
    }
    if (n > 64) throw SizeError("subset enumeration supports at most 64 vertices");

    std::vector<std::pair<std::size_t, std::size_t>> ends(m);
    for (std::size_t i = 0; i < m; ++i) {
        const Edge& e = g.edges()[i];
        ends[i] = {g.vertex_index(e.u), g.vertex_index(e.v)};
    }
    const std::size_t low_bits = std::min<std::size_t>(m, 10);
    const std::size_t high_bits = m - low_bits;
    const std::uint64_t low_count = std::uint64_t{1} << low_bits;
    const std::size_t blocks = std::size_t{1} << high_bits;

    return map_chunks<Acc>(blocks, [&](std::size_t block) {
        Acc acc{};
        const std::uint64_t high_gray = static_cast<std::uint64_t>(block ^ (block >> 1));
        DisjointSets base(n);
        for (std::size_t b = 0; b < high_bits; ++b) {
            if (high_gray >> b & 1) base.unite(ends[low_bits + b].first, ends[low_bits + b].second);
        }
        std::vector<std::uint64_t> masks;
        std::vector<std::uint64_t> by_root(n);
        for (std::uint64_t i = 0; i < low_count; ++i) {
            const std::uint64_t low_gray = i ^ (i >> 1);
            DisjointSets sets = base;
            for (std::size_t b = 0; b < low_bits; ++b) {
                if (low_gray >> b & 1) sets.unite(ends[b].first, ends[b].second);
            }
            std::fill(by_root.begin(), by_root.end(), 0);
            for (std::size_t v = 0; v < n; ++v) by_root[sets.find(v)] |= std::uint64_t{1} << v;
            masks.clear();
            for (std::size_t v = 0; v < n; ++v) {
                if (by_root[v]) masks.push_back(by_root[v]);
            }
            visit(acc, (high_gray << low_bits) | low_gray, std::span<const std::uint64_t>(masks));
        }
        return acc;
    });
}

}  // namespace pottslist
