#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <random>

#include "pottslist/graph.hpp"
#include "pottslist/listchrom.hpp"
#include "pottslist/numeric.hpp"
#include "pottslist/potts.hpp"

namespace pottslist {

/// Seeded generator: std::mt19937_64 with integer and real draws derived from its
/// raw 64-bit output only, so streams are identical on every platform.
class Rng {
public:
    static constexpr const char* name = "mt19937_64";

    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next() { return engine_(); }
    /// Uniform integer in [lo, hi].
    long long uniform_int(long long lo, long long hi);
    /// Uniform double in [0, 1).
    double uniform01() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }
    bool chance(double p) { return uniform01() < p; }
    /// Uniform decimal with the given number of places in [lo, hi] (exact).
    Rational uniform_decimal(const Rational& lo, const Rational& hi, int places = 2);

    template <class T>
    const T& pick(const std::vector<T>& items) {
        return items[static_cast<std::size_t>(uniform_int(0, static_cast<long long>(items.size()) - 1))];
    }

private:
    std::mt19937_64 engine_;
};

struct RandomGraphOptions {
    int min_vertices = 1;
    int max_vertices = 5;
    int min_edges = 0;
    int max_edges = 7;
    bool loops = true;
    bool parallel = true;
    bool connected = false;
};

using WeightSampler = std::function<VertexWeight(Rng&)>;
using CouplingSampler = std::function<std::optional<Rational>(Rng&)>;

WeightedMultigraph random_multigraph(Rng& rng, const RandomGraphOptions& options, const WeightSampler& weight,
                                     const CouplingSampler& coupling = {});

/// Random subset of {1..universe}, each color kept with probability p.
ColorSet random_list(Rng& rng, int universe, double p = 0.5);

/// Each entry is 0 with probability zero_chance, otherwise a decimal in [lo, hi].
FieldVector random_field(Rng& rng, int q, const Rational& lo, const Rational& hi, double zero_chance);

}  // namespace pottslist
