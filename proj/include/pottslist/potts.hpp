#pragma once

#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "pottslist/graph.hpp"
#include "pottslist/listchrom.hpp"
#include "pottslist/spanning_subgraphs.hpp"
#include "pottslist/numeric.hpp"
#include "pottslist/weights.hpp"

namespace pottslist {

/// q-state Potts model parameters with per-edge couplings and per-vertex fields.
/// Boltzmann constant is 1, so beta = 1/T.
struct PottsParams {
    int q = 2;
    double beta = 1.0;
    std::map<EdgeId, Rational> couplings;
    std::map<VertexId, FieldVector> fields;

    double temperature() const { return 1.0 / beta; }

    /// Couplings from the edges' J values, fields from field-vector weights (or, for
    /// list weights, 0 on listed spins and -1 elsewhere). q defaults to the field
    /// length, or the largest listed color for list graphs.
    static PottsParams from_graph(const WeightedMultigraph& g, double beta, std::optional<int> q = std::nullopt);
};

/// vertex id -> spin in 1..q
using SpinState = std::map<VertexId, int>;

/// Throws CoverageError / InvalidWeight unless every edge has a coupling and every
/// vertex a field of length q.
void validate_params(const WeightedMultigraph& g, const PottsParams& params);

/// All J_e < 0 and all field entries <= 0.
bool is_antiferromagnetic(const PottsParams& params);

/// h(sigma) = -sum_{e={i,j}} J_e [s_i = s_j] - sum_i M_{i, s_i}, exactly.
Rational hamiltonian(const WeightedMultigraph& g, const PottsParams& params, const SpinState& sigma);

/// Z = sum over all q^|V| states of exp(-beta h). SizeError when q^|V| > cap.
double partition_brute(const WeightedMultigraph& g, const PottsParams& params,
                       std::uint64_t cap = default_enumeration_cap);

/// Z as the V-polynomial with field weights evaluated at x_M = sum_a exp(beta M_a)
/// and g[e] = exp(beta J_e) - 1.
double partition_via_v(const WeightedMultigraph& g, const PottsParams& params);

/// Z as a sum over edge subsets of prod_components X_{M_C} * prod_{e in A} (exp(beta J_e) - 1).
double partition_fk(const WeightedMultigraph& g, const PottsParams& params, std::size_t cap = default_subset_cap);

/// Number of zero-energy states, by exact search over spin states.
/// Throws AntiferroModeError outside the antiferromagnetic regime.
Integer ground_state_count(const WeightedMultigraph& g, const PottsParams& params);

/// Every state with h = 0, by full enumeration of q^|V| states (SizeError above cap).
std::vector<SpinState> enumerate_ground_states(const WeightedMultigraph& g, const PottsParams& params,
                                               std::uint64_t cap = default_enumeration_cap);

/// |Z(beta) - ground_state_count|.
double zero_temperature_residual(const WeightedMultigraph& g, const PottsParams& params,
                                 std::uint64_t cap = default_enumeration_cap);

/// Pins vertices to spins with fields 0 at the pinned spin and -1 elsewhere.
PottsParams encode_boundary(const WeightedMultigraph& g, const PottsParams& params, const std::map<VertexId, int>& fixed);

/// s when every vertex carries the same field with exactly s zero entries.
std::optional<int> is_s_uniform(const PottsParams& params);

/// (1/n) ln N0 per member, with N0 the ground-state count; -infinity when N0 = 0.
std::vector<double> entropy_sequence(const std::vector<std::pair<WeightedMultigraph, PottsParams>>& family);

}  // namespace pottslist
