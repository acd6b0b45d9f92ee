#pragma once

#include <string>
#include <vector>

#include "pottslist/random_instances.hpp"

namespace pottslist {

struct SuiteResult {
    int pass = 0;
    int fail = 0;
    /// Descriptions of the first few failing instances.
    std::vector<std::string> failures;

    void record(bool ok, const std::string& what);
    bool ok() const { return fail == 0; }
};

/// Brute-force, V-polynomial and subset-expansion partition functions agree within
/// relative 1e-9 (absolute floor 1e-12). Graphs have up to max_vertices vertices
/// and 7 edges, loops and parallel edges included; a third of the trials use
/// mixed-sign couplings and a third mixed-sign fields.
SuiteResult verify_partition_routes(Rng& rng, int trials, int max_vertices = 5);

/// Zero-energy state count equals the list-coloring count for lists read off the
/// zero positions of the fields.
SuiteResult verify_zero_temperature(Rng& rng, int trials, int max_vertices = 5);

/// P(G, L) at x_l = |l|, brute force, and the tree-decomposition DP agree exactly
/// for random lists over {1..4}.
SuiteResult verify_counting(Rng& rng, int trials, int max_vertices = 6);

/// Antiferromagnetic instance with q in {2,3}, J in [-2,-0.1] and fields in [-2,0]
/// with frequent exact zeros.
std::pair<WeightedMultigraph, PottsParams> random_antiferro_instance(Rng& rng, int max_vertices, int max_edges);

}  // namespace pottslist
