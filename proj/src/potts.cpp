#include "pottslist/potts.hpp"

#include <cmath>
#include <limits>
#include <unordered_map>

#include "pottslist/errors.hpp"
#include "pottslist/parallel.hpp"
#include "pottslist/spanning_subgraphs.hpp"
#include "pottslist/vpoly.hpp"

namespace pottslist {

namespace {

constexpr std::uint64_t states_per_chunk = std::uint64_t{1} << 16;

std::uint64_t state_count(int q, std::size_t n, std::uint64_t cap) {
    std::uint64_t total = 1;
    for (std::size_t i = 0; i < n; ++i) {
        if (total > cap / static_cast<std::uint64_t>(q)) {
            throw SizeError("state enumeration exceeds the cap of " + std::to_string(cap) + " states");
        }
        total *= static_cast<std::uint64_t>(q);
    }
    return total;
}

void require_positive_beta(const PottsParams& params) {
    if (!(params.beta > 0) || !std::isfinite(params.beta)) throw PreconditionError("beta must be a positive real");
}

// Index-based view of a validated instance.
struct Instance {
    int q;
    std::vector<std::pair<std::size_t, std::size_t>> ends;
    std::vector<Rational> coupling;
    std::vector<const FieldVector*> field;

    Instance(const WeightedMultigraph& g, const PottsParams& params) : q(params.q) {
        validate_params(g, params);
        for (const auto& e : g.edges()) {
            ends.emplace_back(g.vertex_index(e.u), g.vertex_index(e.v));
            coupling.push_back(params.couplings.at(e.id));
        }
        for (const auto& v : g.vertices()) field.push_back(&params.fields.at(v.id));
    }
};

}  // namespace

PottsParams PottsParams::from_graph(const WeightedMultigraph& g, double beta, std::optional<int> q) {
    PottsParams params;
    params.beta = beta;
    if (auto len = g.field_length()) {
        if (q && *q != *len) throw PreconditionError("q does not match the field length");
        params.q = *len;
    } else if (q) {
        params.q = *q;
    } else {
        int top = 1;
        for (const auto& v : g.vertices()) {
            const auto& set = std::get<ColorSet>(v.weight);
            if (!set.empty()) top = std::max(top, set.elements().back());
        }
        params.q = top;
    }
    if (params.q < 1) throw PreconditionError("q must be positive");
    for (const auto& e : g.edges()) {
        if (!e.coupling) throw CoverageError("edge " + std::to_string(e.id) + " has no coupling J");
        params.couplings.emplace(e.id, *e.coupling);
    }
    for (const auto& v : g.vertices()) {
        if (const auto* f = std::get_if<FieldVector>(&v.weight)) {
            params.fields.emplace(v.id, *f);
        } else {
            params.fields.emplace(v.id, indicator_field(std::get<ColorSet>(v.weight), params.q));
        }
    }
    return params;
}

void validate_params(const WeightedMultigraph& g, const PottsParams& params) {
    if (params.q < 1) throw PreconditionError("q must be positive");
    for (const auto& e : g.edges()) {
        if (!params.couplings.count(e.id)) throw CoverageError("no coupling for edge " + std::to_string(e.id));
    }
    for (const auto& v : g.vertices()) {
        auto it = params.fields.find(v.id);
        if (it == params.fields.end()) throw CoverageError("no field for vertex " + std::to_string(v.id));
        if (static_cast<int>(it->second.size()) != params.q) {
            throw InvalidWeight("field at vertex " + std::to_string(v.id) + " does not have length q");
        }
    }
}

bool is_antiferromagnetic(const PottsParams& params) {
    for (const auto& [id, j] : params.couplings) {
        if (j >= 0) return false;
    }
    for (const auto& [id, m] : params.fields) {
        if (!m.all_nonpositive()) return false;
    }
    return true;
}

Rational hamiltonian(const WeightedMultigraph& g, const PottsParams& params, const SpinState& sigma) {
    validate_params(g, params);
    auto spin = [&](VertexId v) {
        auto it = sigma.find(v);
        if (it == sigma.end()) throw CoverageError("state has no spin for vertex " + std::to_string(v));
        if (it->second < 1 || it->second > params.q) throw SpinOutOfRange("spin out of range at " + std::to_string(v));
        return it->second;
    };
    Rational h = 0;
    for (const auto& e : g.edges()) {
        if (spin(e.u) == spin(e.v)) h -= params.couplings.at(e.id);
    }
    for (const auto& v : g.vertices()) h -= params.fields.at(v.id)[static_cast<std::size_t>(spin(v.id) - 1)];
    return h;
}

double partition_brute(const WeightedMultigraph& g, const PottsParams& params, std::uint64_t cap) {
    require_positive_beta(params);
    Instance inst(g, params);
    const std::size_t n = g.num_vertices();
    const std::uint64_t total = state_count(params.q, n, cap);
    const double beta = params.beta;

    std::vector<double> coupling(inst.coupling.size());
    for (std::size_t i = 0; i < coupling.size(); ++i) coupling[i] = to_double(inst.coupling[i]);
    std::vector<std::vector<double>> field(n);
    for (std::size_t i = 0; i < n; ++i) {
        for (const auto& m : inst.field[i]->entries()) field[i].push_back(to_double(m));
    }

    const std::size_t chunks = static_cast<std::size_t>((total + states_per_chunk - 1) / states_per_chunk);
    auto partials = map_chunks<long double>(chunks, [&](std::size_t chunk) {
        std::uint64_t begin = chunk * states_per_chunk;
        std::uint64_t end = std::min(total, begin + states_per_chunk);
        std::vector<int> spins(n);
        std::uint64_t code = begin;
        for (std::size_t i = 0; i < n; ++i) {
            spins[i] = static_cast<int>(code % static_cast<std::uint64_t>(params.q));
            code /= static_cast<std::uint64_t>(params.q);
        }
        long double sum = 0;
        for (std::uint64_t s = begin; s < end; ++s) {
            double h = 0;
            for (std::size_t e = 0; e < inst.ends.size(); ++e) {
                if (spins[inst.ends[e].first] == spins[inst.ends[e].second]) h -= coupling[e];
            }
            for (std::size_t i = 0; i < n; ++i) h -= field[i][static_cast<std::size_t>(spins[i])];
            sum += std::exp(static_cast<long double>(-beta * h));
            for (std::size_t i = 0; i < n; ++i) {
                if (++spins[i] < params.q) break;
                spins[i] = 0;
            }
        }
        return sum;
    });
    long double z = 0;
    for (auto p : partials) z += p;
    return static_cast<double>(z);
}

double partition_via_v(const WeightedMultigraph& g, const PottsParams& params) {
    require_positive_beta(params);
    validate_params(g, params);
    std::map<VertexId, VertexWeight> weights;
    for (const auto& [id, m] : params.fields) {
        if (g.has_vertex(id)) weights.emplace(id, m);
    }
    MVPoly v = v_poly_dc(with_weights(g, weights));

    Valuation<double> valuation;
    for (const auto& [mono, coeff] : v.terms()) {
        for (const auto& [key, exponent] : mono.x) {
            if (valuation.x.count(key)) continue;
            const auto weight = weight_from_key(key);
            double x = 0;
            for (const auto& m : std::get<FieldVector>(weight).entries()) x += std::exp(params.beta * to_double(m));
            valuation.x.emplace(key, x);
        }
    }
    for (const auto& e : g.edges()) {
        valuation.g.emplace(e.id, std::expm1(params.beta * to_double(params.couplings.at(e.id))));
    }
    return poly_eval(v, valuation);
}

double partition_fk(const WeightedMultigraph& g, const PottsParams& params, std::size_t cap) {
    require_positive_beta(params);
    Instance inst(g, params);
    std::vector<double> gamma;
    for (const auto& j : inst.coupling) gamma.push_back(std::expm1(params.beta * to_double(j)));

    struct Block {
        long double sum = 0;
        std::unordered_map<std::uint64_t, double> component_term;
    };
    auto blocks = visit_spanning_subgraphs<Block>(
        g, cap, [&](Block& block, std::uint64_t edge_mask, std::span<const std::uint64_t> comps) {
            long double term = 1;
            for (std::size_t e = 0; e < gamma.size(); ++e) {
                if (edge_mask >> e & 1) term *= gamma[e];
            }
            for (std::uint64_t mask : comps) {
                auto it = block.component_term.find(mask);
                if (it == block.component_term.end()) {
                    std::optional<FieldVector> total;
                    for (std::size_t v = 0; v < inst.field.size(); ++v) {
                        if (mask >> v & 1) total = total ? combine(*total, *inst.field[v]) : *inst.field[v];
                    }
                    double x = 0;
                    for (const auto& m : total->entries()) x += std::exp(params.beta * to_double(m));
                    it = block.component_term.emplace(mask, x).first;
                }
                term *= it->second;
            }
            block.sum += term;
        });
    long double z = 0;
    for (const auto& b : blocks) z += b.sum;
    return static_cast<double>(z);
}

Integer ground_state_count(const WeightedMultigraph& g, const PottsParams& params) {
    Instance inst(g, params);
    if (!is_antiferromagnetic(params)) {
        throw AntiferroModeError("ground-state counting needs J_e < 0 and non-positive fields");
    }
    if (g.has_loop()) return 0;  // a loop contributes -J_e > 0 in every state
    const std::size_t n = g.num_vertices();

    // Edges to already-assigned vertices, with their coupling, per vertex.
    std::vector<std::vector<std::pair<std::size_t, const Rational*>>> back_edges(n);
    for (std::size_t e = 0; e < inst.ends.size(); ++e) {
        auto [a, b] = inst.ends[e];
        back_edges[std::max(a, b)].emplace_back(std::min(a, b), &inst.coupling[e]);
    }

    // Every energy term is non-negative here, so a partial state with positive
    // energy cannot be completed to a ground state.
    std::vector<int> spins(n, 0);
    std::uint64_t count = 0;
    auto descend = [&](auto&& self, std::size_t i) -> void {
        if (i == n) {
            ++count;
            return;
        }
        for (int s = 0; s < params.q; ++s) {
            Rational energy = -(*inst.field[i])[static_cast<std::size_t>(s)];
            for (const auto& [j, coupling] : back_edges[i]) {
                if (spins[j] == s) energy -= *coupling;
            }
            if (energy > 0) continue;
            spins[i] = s;
            self(self, i + 1);
        }
    };
    descend(descend, 0);
    return Integer(count);
}

std::vector<SpinState> enumerate_ground_states(const WeightedMultigraph& g, const PottsParams& params,
                                               std::uint64_t cap) {
    validate_params(g, params);
    const std::size_t n = g.num_vertices();
    const std::uint64_t total = state_count(params.q, n, cap);
    std::vector<SpinState> found;
    std::vector<int> spins(n, 1);
    for (std::uint64_t s = 0; s < total; ++s) {
        SpinState sigma;
        for (std::size_t i = 0; i < n; ++i) sigma.emplace(g.vertices()[i].id, spins[i]);
        if (hamiltonian(g, params, sigma) == 0) found.push_back(std::move(sigma));
        for (std::size_t i = 0; i < n; ++i) {
            if (++spins[i] <= params.q) break;
            spins[i] = 1;
        }
    }
    return found;
}

double zero_temperature_residual(const WeightedMultigraph& g, const PottsParams& params, std::uint64_t cap) {
    Integer ground = ground_state_count(g, params);
    double z = partition_brute(g, params, cap);
    return std::fabs(z - ground.convert_to<double>());
}

PottsParams encode_boundary(const WeightedMultigraph& g, const PottsParams& params,
                            const std::map<VertexId, int>& fixed) {
    PottsParams out = params;
    for (const auto& [v, b] : fixed) {
        if (!g.has_vertex(v)) throw UnknownVertex("cannot fix unknown vertex " + std::to_string(v));
        if (b < 1 || b > params.q) {
            throw SpinOutOfRange("spin " + std::to_string(b) + " outside 1.." + std::to_string(params.q));
        }
        out.fields[v] = indicator_field(ColorSet{b}, params.q);
    }
    return out;
}

std::optional<int> is_s_uniform(const PottsParams& params) {
    if (params.fields.empty()) return std::nullopt;
    const FieldVector& first = params.fields.begin()->second;
    for (const auto& [id, m] : params.fields) {
        if (!(m == first)) return std::nullopt;
    }
    return static_cast<int>(zero_positions(first).size());
}

std::vector<double> entropy_sequence(const std::vector<std::pair<WeightedMultigraph, PottsParams>>& family) {
    std::vector<double> out;
    out.reserve(family.size());
    for (const auto& [g, params] : family) {
        if (g.num_vertices() == 0) throw PreconditionError("entropy needs at least one vertex");
        Integer count = ground_state_count(g, params);
        if (count == 0) {
            out.push_back(-std::numeric_limits<double>::infinity());
        } else {
            out.push_back(std::log(count.convert_to<long double>()) / static_cast<double>(g.num_vertices()));
        }
    }
    return out;
}

}  // namespace pottslist
