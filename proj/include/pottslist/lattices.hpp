#pragma once

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "pottslist/graph.hpp"
#include "pottslist/weights.hpp"

namespace pottslist {

enum class FamilyKind { path, cycle, complete, complete_bipartite, grid2d, cubic3d, augmented_cubic3d, ladder };

FamilyKind parse_family_kind(std::string_view name);
std::string to_string(FamilyKind kind);

struct FieldPattern {
    enum class Kind { zero, paper_mod3, uniform };
    Kind kind = Kind::zero;
    FieldVector uniform;  // Kind::uniform only
};

struct FamilySpec {
    FamilyKind kind = FamilyKind::path;
    std::vector<int> dims;
    FieldPattern fields;
    /// Spin count for the zero and mod-3 patterns; a uniform vector sets its own.
    int q = 3;
};

/// Largest extent per axis; vertex ids are x + 1000 y + 1000000 z.
inline constexpr int max_extent = 1000;

VertexId lattice_vertex_id(const Coord& c);

/// Builds the family member. Every edge carries J = -1 and every vertex its
/// coordinates. augmented_cubic3d adds, to each unit cube with smallest corner
/// (x,y,z), the three space diagonals that avoid the corner (x+1,y,z).
WeightedMultigraph generate(const FamilySpec& spec);

/// Field (-1,0,0), (0,-1,0) or (0,0,-1) according to (x + y) mod 3.
FieldVector mod3_field(const Coord& c);

/// mod3_field at every vertex. Throws MissingCoordinates for vertices without them.
std::map<VertexId, FieldVector> paper_field_assignment(const WeightedMultigraph& g);

}  // namespace pottslist
