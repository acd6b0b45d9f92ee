#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "pottslist/graph.hpp"
#include "pottslist/poly.hpp"
#include "pottslist/weights.hpp"

namespace pottslist {

using ListAssignment = std::map<VertexId, ColorSet>;

inline constexpr std::uint64_t default_enumeration_cap = 100'000'000;

/// Lists carried by the graph itself: its color sets, or the zero positions of its
/// field vectors.
ListAssignment lists_of(const WeightedMultigraph& g);

/// g with every vertex weight replaced by its list. Every vertex needs a list.
WeightedMultigraph with_lists(const WeightedMultigraph& g, const ListAssignment& lists);

/// P(G, L): the V-polynomial with list weights and every gamma = -1.
MVPoly list_chromatic_poly(const WeightedMultigraph& g, const ListAssignment& lists);

/// x_l = |l| for every x-variable of p (keys must be color sets).
Valuation<Integer> list_size_valuation(const MVPoly& p);

/// Number of proper colorings with color(v) in L(v), via the gamma = -1 recursion
/// evaluated directly in the integers.
Integer count_list_colorings(const WeightedMultigraph& g, const ListAssignment& lists);

/// Reference count by direct enumeration of list assignments. Refuses instances
/// where prod |L(v)| exceeds cap (SizeError).
Integer brute_force_count(const WeightedMultigraph& g, const ListAssignment& lists,
                          std::uint64_t cap = default_enumeration_cap);

/// Univariate integer polynomial, coefficients by ascending degree.
struct UniPoly {
    std::vector<Integer> coefficients;

    int degree() const { return static_cast<int>(coefficients.size()) - 1; }
    Integer operator()(const Integer& lambda) const;
    friend bool operator==(const UniPoly&, const UniPoly&) = default;
};

std::string to_string(const UniPoly& p);

/// chi(G; lambda) interpolated from uniform-list counts at k = 0..|V|.
UniPoly chromatic_polynomial(const WeightedMultigraph& g);

/// Colorings with lists {1..q} off the boundary and {1..q_s} on it.
Integer boundary_chromatic(const WeightedMultigraph& g, const std::set<VertexId>& boundary, int q, int q_s);

struct TreeDecomposition {
    std::map<int, std::vector<VertexId>> bags;
    std::vector<std::pair<int, int>> tree_edges;

    int width() const;
};

/// Throws DecompositionError unless td covers every vertex and edge of g, its tree
/// edges form a tree, and the bags holding each vertex are connected.
void validate_decomposition(const WeightedMultigraph& g, const TreeDecomposition& td);

/// Min-degree elimination ordering turned into a (validated) decomposition.
TreeDecomposition greedy_tree_decomposition(const WeightedMultigraph& g);

/// One node of a nice tree decomposition.
struct NiceNode {
    enum class Kind { leaf, introduce, forget, join };
    Kind kind = Kind::leaf;
    VertexId vertex = 0;         // introduce / forget
    std::vector<VertexId> bag;   // sorted
    std::vector<std::size_t> children;
};

/// Nice form of td rooted at its smallest bag id; the root (last node) has an
/// empty bag. Nodes are in bottom-up order.
std::vector<NiceNode> make_nice(const TreeDecomposition& td);

/// List-coloring count by dynamic programming over a nice form of td.
Integer treewidth_count(const WeightedMultigraph& g, const ListAssignment& lists, const TreeDecomposition& td);

/// Searches size-k list assignments drawn from universe for one that admits no
/// list coloring. nullopt only means none was found among those lists.
/// Throws SizeError when C(|universe|, k)^|V| exceeds cap.
std::optional<ListAssignment> refute_choosability(const WeightedMultigraph& g, int k, const ColorSet& universe,
                                                  std::uint64_t cap = default_enumeration_cap);

}  // namespace pottslist
