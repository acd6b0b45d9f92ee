#include "pottslist/verification.hpp"

#include <sstream>

#include "pottslist/json_io.hpp"
#include "pottslist/poly.hpp"

namespace pottslist {

namespace {

constexpr std::size_t max_recorded_failures = 5;

std::string describe(const WeightedMultigraph& g) { return graph_to_json(g).dump(); }

}  // namespace

void SuiteResult::record(bool ok, const std::string& what) {
    if (ok) {
        ++pass;
        return;
    }
    ++fail;
    if (failures.size() < max_recorded_failures) failures.push_back(what);
}

std::pair<WeightedMultigraph, PottsParams> random_antiferro_instance(Rng& rng, int max_vertices, int max_edges) {
    const int q = static_cast<int>(rng.uniform_int(2, 3));
    RandomGraphOptions options;
    options.max_vertices = max_vertices;
    options.max_edges = max_edges;
    auto g = random_multigraph(
        rng, options, [&](Rng& r) -> VertexWeight { return random_field(r, q, Rational(-2), Rational(0), 0.5); },
        [](Rng& r) -> std::optional<Rational> { return r.uniform_decimal(Rational(-2), Rational(-1, 10)); });
    auto params = PottsParams::from_graph(g, 1.0, q);
    return {std::move(g), std::move(params)};
}

SuiteResult verify_partition_routes(Rng& rng, int trials, int max_vertices) {
    SuiteResult result;
    const std::vector<double> betas{0.5, 1.0, 2.0};
    for (int t = 0; t < trials; ++t) {
        const int batch = t % 3;  // 0: antiferromagnetic, 1: mixed couplings, 2: mixed fields
        const int q = static_cast<int>(rng.uniform_int(2, 3));
        const Rational field_hi = batch == 2 ? Rational(2) : Rational(0);
        const Rational j_lo(-2);
        const Rational j_hi = batch == 1 ? Rational(2) : Rational(-1, 10);
        RandomGraphOptions options;
        options.max_vertices = max_vertices;
        options.max_edges = 7;
        auto g = random_multigraph(
            rng, options,
            [&](Rng& r) -> VertexWeight { return random_field(r, q, Rational(-2), field_hi, 0.3); },
            [&](Rng& r) -> std::optional<Rational> { return r.uniform_decimal(j_lo, j_hi); });
        auto params = PottsParams::from_graph(g, rng.pick(betas), q);

        double brute = partition_brute(g, params);
        double via_v = partition_via_v(g, params);
        double fk = partition_fk(g, params);
        bool ok = approx_equal(brute, via_v) && approx_equal(brute, fk) && approx_equal(via_v, fk);
        std::ostringstream what;
        what.precision(17);
        what << "beta=" << params.beta << " brute=" << brute << " v=" << via_v << " fk=" << fk << " graph="
             << describe(g);
        result.record(ok, what.str());
    }
    return result;
}

SuiteResult verify_zero_temperature(Rng& rng, int trials, int max_vertices) {
    SuiteResult result;
    for (int t = 0; t < trials; ++t) {
        auto [g, params] = random_antiferro_instance(rng, max_vertices, 7);
        ListAssignment lists;
        for (const auto& [id, m] : params.fields) lists.emplace(id, zero_positions(m));
        Integer ground = ground_state_count(g, params);
        Integer colorings = count_list_colorings(g, lists);
        result.record(ground == colorings,
                      "ground=" + ground.str() + " colorings=" + colorings.str() + " graph=" + describe(g));
    }
    return result;
}

SuiteResult verify_counting(Rng& rng, int trials, int max_vertices) {
    SuiteResult result;
    for (int t = 0; t < trials; ++t) {
        RandomGraphOptions options;
        options.max_vertices = max_vertices;
        options.max_edges = 8;
        options.loops = t % 4 == 0;
        auto g = random_multigraph(rng, options, [](Rng& r) -> VertexWeight { return random_list(r, 4, 0.6); });
        auto lists = lists_of(g);
        MVPoly p = list_chromatic_poly(g, lists);
        Integer from_poly = poly_eval(p, list_size_valuation(p));
        Integer brute = brute_force_count(g, lists);
        Integer dp = treewidth_count(g, lists, greedy_tree_decomposition(g));
        result.record(from_poly == brute && brute == dp, "poly=" + from_poly.str() + " brute=" + brute.str() +
                                                             " treewidth=" + dp.str() + " graph=" + describe(g));
    }
    return result;
}

}  // namespace pottslist
