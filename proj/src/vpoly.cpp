#include "pottslist/vpoly.hpp"

#include <unordered_map>

#include "pottslist/deletion_contraction.hpp"

namespace pottslist {

namespace {

struct SymbolicAlgebra {
    using Value = MVPoly;
    std::optional<long long> gamma_value;

    Value one() const { return MVPoly(1); }
    Value vertex(const VertexWeight& w) const { return MVPoly::x(w); }
    Value gamma(const Edge& e) const { return gamma_value ? MVPoly(*gamma_value) : MVPoly::g(e.id); }
    Value gamma_plus_one(const Edge& e) const { return gamma(e) + MVPoly(1); }
    bool is_zero(const Value& v) const { return v.is_zero(); }
};

}  // namespace

MVPoly v_poly_dc(const WeightedMultigraph& g, std::span<const EdgeId> pivot_order, std::optional<long long> gamma) {
    DcOptions options;
    options.pivot_order.assign(pivot_order.begin(), pivot_order.end());
    options.collapse_parallel = gamma == -1;
    options.memoize = options.collapse_parallel;
    DeletionContraction<SymbolicAlgebra> engine(SymbolicAlgebra{gamma}, std::move(options));
    return engine(g);
}

MVPoly v_poly_expansion(const WeightedMultigraph& g, std::size_t cap, std::optional<long long> gamma) {
    struct Block {
        MVPoly::Terms terms;
        std::unordered_map<std::uint64_t, WeightKey> keys;
    };
    auto blocks = visit_spanning_subgraphs<Block>(
        g, cap, [&](Block& block, std::uint64_t edge_mask, std::span<const std::uint64_t> comps) {
            Monomial m;
            std::vector<WeightKey> factor_keys;
            factor_keys.reserve(comps.size());
            for (std::uint64_t mask : comps) {
                auto it = block.keys.find(mask);
                if (it == block.keys.end()) {
                    std::optional<VertexWeight> w;
                    for (std::size_t v = 0; v < g.num_vertices(); ++v) {
                        if (!(mask >> v & 1)) continue;
                        const auto& vw = g.vertices()[v].weight;
                        w = w ? combine(*w, vw) : vw;
                    }
                    it = block.keys.emplace(mask, canonical_key(*w)).first;
                }
                factor_keys.push_back(it->second);
            }
            std::sort(factor_keys.begin(), factor_keys.end());
            for (auto& key : factor_keys) {
                if (!m.x.empty() && m.x.back().first == key) {
                    ++m.x.back().second;
                } else {
                    m.x.emplace_back(std::move(key), 1);
                }
            }
            Integer coeff = 1;
            for (std::size_t i = 0; i < g.num_edges(); ++i) {
                if (!(edge_mask >> i & 1)) continue;
                if (gamma) {
                    coeff *= *gamma;
                } else {
                    m.g.emplace_back(g.edges()[i].id, 1);
                }
            }
            if (coeff == 0) return;
            auto [it, inserted] = block.terms.try_emplace(std::move(m), coeff);
            if (!inserted) {
                it->second += coeff;
                if (it->second == 0) block.terms.erase(it);
            }
        });

    MVPoly total;
    for (auto& block : blocks) {
        for (auto& [m, c] : block.terms) total += MVPoly::term(m, c);
    }
    return total;
}

}  // namespace pottslist
