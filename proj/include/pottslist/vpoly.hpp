#pragma once

#include <optional>
#include <span>

#include "pottslist/graph.hpp"
#include "pottslist/poly.hpp"
#include "pottslist/spanning_subgraphs.hpp"

namespace pottslist {

/// V-polynomial by deletion-contraction. With gamma unset every edge e contributes
/// the variable g[e]; otherwise all edges share the integer weight *gamma (and
/// parallel edges are collapsed when it is -1).
MVPoly v_poly_dc(const WeightedMultigraph& g, std::span<const EdgeId> pivot_order = {},
                 std::optional<long long> gamma = std::nullopt);

/// V-polynomial as a sum over spanning subgraphs. Refuses graphs with more than
/// cap edges (SizeError).
MVPoly v_poly_expansion(const WeightedMultigraph& g, std::size_t cap = default_subset_cap,
                        std::optional<long long> gamma = std::nullopt);

}  // namespace pottslist
