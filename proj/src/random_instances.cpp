#include "pottslist/random_instances.hpp"

#include <limits>
#include <set>

#include "pottslist/errors.hpp"

namespace pottslist {

long long Rng::uniform_int(long long lo, long long hi) {
    if (hi < lo) throw PreconditionError("empty integer range");
    const std::uint64_t range = static_cast<std::uint64_t>(hi - lo) + 1;
    if (range == 0) return static_cast<long long>(next());
    const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % range;
    std::uint64_t draw;
    do {
        draw = next();
    } while (draw >= limit);
    return lo + static_cast<long long>(draw % range);
}

Rational Rng::uniform_decimal(const Rational& lo, const Rational& hi, int places) {
    Integer scale = 1;
    for (int i = 0; i < places; ++i) scale *= 10;
    Rational scaled_lo = lo * scale;
    Rational scaled_hi = hi * scale;
    Integer a = boost::multiprecision::numerator(scaled_lo) / boost::multiprecision::denominator(scaled_lo);
    if (a < scaled_lo) a += 1;
    Integer b = boost::multiprecision::numerator(scaled_hi) / boost::multiprecision::denominator(scaled_hi);
    if (b > scaled_hi) b -= 1;
    long long k = uniform_int(a.convert_to<long long>(), b.convert_to<long long>());
    return Rational(Integer(k), scale);
}

WeightedMultigraph random_multigraph(Rng& rng, const RandomGraphOptions& options, const WeightSampler& weight,
                                     const CouplingSampler& coupling) {
    const int n = static_cast<int>(rng.uniform_int(options.min_vertices, options.max_vertices));
    int m = static_cast<int>(rng.uniform_int(options.min_edges, options.max_edges));
    if (options.connected) m = std::max(m, n - 1);

    std::vector<Vertex> vertices;
    for (int i = 0; i < n; ++i) vertices.push_back(Vertex{i, weight(rng), std::nullopt});

    std::vector<std::pair<int, int>> ends;
    std::set<std::pair<int, int>> used;
    auto accept = [&](int u, int v) {
        if (u == v && !options.loops) return false;
        auto key = std::minmax(u, v);
        if (!options.parallel && used.count({key.first, key.second})) return false;
        used.insert({key.first, key.second});
        ends.emplace_back(u, v);
        return true;
    };
    if (options.connected) {
        for (int i = 1; i < n; ++i) accept(static_cast<int>(rng.uniform_int(0, i - 1)), i);
    }
    for (int attempts = 0; static_cast<int>(ends.size()) < m && attempts < 50 * (m + 1); ++attempts) {
        accept(static_cast<int>(rng.uniform_int(0, n - 1)), static_cast<int>(rng.uniform_int(0, n - 1)));
    }

    std::vector<Edge> edges;
    for (std::size_t i = 0; i < ends.size(); ++i) {
        Edge e{static_cast<EdgeId>(i), ends[i].first, ends[i].second, std::nullopt};
        if (coupling) e.coupling = coupling(rng);
        edges.push_back(std::move(e));
    }
    return WeightedMultigraph(std::move(vertices), std::move(edges));
}

ColorSet random_list(Rng& rng, int universe, double p) {
    std::vector<Color> colors;
    for (Color c = 1; c <= universe; ++c) {
        if (rng.chance(p)) colors.push_back(c);
    }
    return ColorSet(std::move(colors));
}

FieldVector random_field(Rng& rng, int q, const Rational& lo, const Rational& hi, double zero_chance) {
    std::vector<Rational> entries;
    for (int a = 0; a < q; ++a) entries.push_back(rng.chance(zero_chance) ? Rational(0) : rng.uniform_decimal(lo, hi));
    return FieldVector(std::move(entries));
}

}  // namespace pottslist
