#include "pottslist/lattices.hpp"

#include <array>

#include "pottslist/errors.hpp"

namespace pottslist {

namespace {

constexpr std::array<std::pair<FamilyKind, std::string_view>, 8> kind_names{{
    {FamilyKind::path, "path"},
    {FamilyKind::cycle, "cycle"},
    {FamilyKind::complete, "complete"},
    {FamilyKind::complete_bipartite, "complete_bipartite"},
    {FamilyKind::grid2d, "grid2d"},
    {FamilyKind::cubic3d, "cubic3d"},
    {FamilyKind::augmented_cubic3d, "augmented_cubic3d"},
    {FamilyKind::ladder, "ladder"},
}};

std::size_t expected_dims(FamilyKind kind) {
    switch (kind) {
        case FamilyKind::complete_bipartite:
        case FamilyKind::grid2d:
            return 2;
        case FamilyKind::cubic3d:
        case FamilyKind::augmented_cubic3d:
            return 3;
        default:
            return 1;
    }
}

class Builder {
public:
    explicit Builder(const FamilySpec& spec) : spec_(spec) {}

    void vertex(Coord c) {
        VertexWeight w;
        switch (spec_.fields.kind) {
            case FieldPattern::Kind::zero:
                w = FieldVector::zeros(spec_.q);
                break;
            case FieldPattern::Kind::paper_mod3:
                w = mod3_field(c);
                break;
            case FieldPattern::Kind::uniform:
                w = spec_.fields.uniform;
                break;
        }
        vertices_.push_back(Vertex{lattice_vertex_id(c), std::move(w), c});
    }

    void edge(Coord a, Coord b) {
        edges_.push_back(Edge{static_cast<EdgeId>(edges_.size()), lattice_vertex_id(a), lattice_vertex_id(b), Rational(-1)});
    }

    WeightedMultigraph finish() { return WeightedMultigraph(std::move(vertices_), std::move(edges_)); }

private:
    const FamilySpec& spec_;
    std::vector<Vertex> vertices_;
    std::vector<Edge> edges_;
};

void box(Builder& b, int nx, int ny, int nz, bool diagonals) {
    for (int z = 0; z < nz; ++z) {
        for (int y = 0; y < ny; ++y) {
            for (int x = 0; x < nx; ++x) b.vertex({x, y, z});
        }
    }
    for (int z = 0; z < nz; ++z) {
        for (int y = 0; y < ny; ++y) {
            for (int x = 0; x < nx; ++x) {
                if (x + 1 < nx) b.edge({x, y, z}, {x + 1, y, z});
                if (y + 1 < ny) b.edge({x, y, z}, {x, y + 1, z});
                if (z + 1 < nz) b.edge({x, y, z}, {x, y, z + 1});
            }
        }
    }
    if (!diagonals) return;
    for (int z = 0; z + 1 < nz; ++z) {
        for (int y = 0; y + 1 < ny; ++y) {
            for (int x = 0; x + 1 < nx; ++x) {
                b.edge({x, y, z}, {x + 1, y + 1, z + 1});
                b.edge({x, y + 1, z}, {x + 1, y, z + 1});
                b.edge({x, y, z + 1}, {x + 1, y + 1, z});
            }
        }
    }
}

}  // namespace

FamilyKind parse_family_kind(std::string_view name) {
    for (const auto& [kind, text] : kind_names) {
        if (text == name) return kind;
    }
    throw ParseError("unknown family kind '" + std::string(name) + "'");
}

std::string to_string(FamilyKind kind) {
    for (const auto& [k, text] : kind_names) {
        if (k == kind) return std::string(text);
    }
    return "unknown";
}

VertexId lattice_vertex_id(const Coord& c) { return c.x + max_extent * (c.y + max_extent * c.z); }

WeightedMultigraph generate(const FamilySpec& spec) {
    const auto& d = spec.dims;
    if (d.size() != expected_dims(spec.kind)) {
        throw InvalidDimensions(to_string(spec.kind) + " takes " + std::to_string(expected_dims(spec.kind)) +
                                " dimension(s)");
    }
    for (int extent : d) {
        if (extent < 1 || extent > max_extent) throw InvalidDimensions("dimensions must lie in 1..1000");
    }
    if (spec.kind == FamilyKind::cycle && d[0] < 3) throw InvalidDimensions("a cycle needs at least 3 vertices");
    if (spec.fields.kind == FieldPattern::Kind::paper_mod3 && spec.q != 3) {
        throw PreconditionError("the mod-3 field pattern needs q = 3");
    }
    if (spec.fields.kind != FieldPattern::Kind::uniform && spec.q < 1) throw PreconditionError("q must be positive");
    if (spec.fields.kind == FieldPattern::Kind::uniform && spec.fields.uniform.size() == 0) {
        throw PreconditionError("uniform field vector is empty");
    }

    Builder b(spec);
    switch (spec.kind) {
        case FamilyKind::path:
        case FamilyKind::cycle:
            for (int i = 0; i < d[0]; ++i) b.vertex({i, 0, 0});
            for (int i = 0; i + 1 < d[0]; ++i) b.edge({i, 0, 0}, {i + 1, 0, 0});
            if (spec.kind == FamilyKind::cycle) b.edge({d[0] - 1, 0, 0}, {0, 0, 0});
            break;
        case FamilyKind::complete:
            for (int i = 0; i < d[0]; ++i) b.vertex({i, 0, 0});
            for (int i = 0; i < d[0]; ++i) {
                for (int j = i + 1; j < d[0]; ++j) b.edge({i, 0, 0}, {j, 0, 0});
            }
            break;
        case FamilyKind::complete_bipartite:
            for (int i = 0; i < d[0]; ++i) b.vertex({i, 0, 0});
            for (int j = 0; j < d[1]; ++j) b.vertex({j, 1, 0});
            for (int i = 0; i < d[0]; ++i) {
                for (int j = 0; j < d[1]; ++j) b.edge({i, 0, 0}, {j, 1, 0});
            }
            break;
        case FamilyKind::grid2d:
            box(b, d[0], d[1], 1, false);
            break;
        case FamilyKind::ladder:
            box(b, d[0], 2, 1, false);
            break;
        case FamilyKind::cubic3d:
            box(b, d[0], d[1], d[2], false);
            break;
        case FamilyKind::augmented_cubic3d:
            box(b, d[0], d[1], d[2], true);
            break;
    }
    return b.finish();
}

FieldVector mod3_field(const Coord& c) {
    int r = ((c.x + c.y) % 3 + 3) % 3;
    std::vector<Rational> entries(3, Rational(0));
    entries[static_cast<std::size_t>(r)] = -1;
    return FieldVector(std::move(entries));
}

std::map<VertexId, FieldVector> paper_field_assignment(const WeightedMultigraph& g) {
    std::map<VertexId, FieldVector> fields;
    for (const auto& v : g.vertices()) {
        if (!v.coord) throw MissingCoordinates("vertex " + std::to_string(v.id) + " has no coordinates");
        fields.emplace(v.id, mod3_field(*v.coord));
    }
    return fields;
}

}  // namespace pottslist
