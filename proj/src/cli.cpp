#include "pottslist/cli.hpp"

#include <cmath>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

#include <CLI11.hpp>

#include "pottslist/errors.hpp"
#include "pottslist/json_io.hpp"
#include "pottslist/lattices.hpp"
#include "pottslist/listchrom.hpp"
#include "pottslist/potts.hpp"
#include "pottslist/verification.hpp"
#include "pottslist/vpoly.hpp"

namespace pottslist {

namespace {

std::vector<std::string> split_commas(const std::string& text) {
    std::vector<std::string> items;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (!item.empty()) items.push_back(item);
    }
    return items;
}

std::vector<int> parse_int_list(const std::string& text, const std::string& what) {
    std::vector<int> values;
    for (const auto& item : split_commas(text)) {
        try {
            std::size_t used = 0;
            int v = std::stoi(item, &used);
            if (used != item.size()) throw std::invalid_argument(item);
            values.push_back(v);
        } catch (const std::exception&) {
            throw ParseError(what + ": '" + item + "' is not an integer");
        }
    }
    return values;
}

FieldPattern parse_field_pattern(const std::string& text) {
    FieldPattern pattern;
    if (text.empty() || text == "zero") return pattern;
    if (text == "paper-mod3") {
        pattern.kind = FieldPattern::Kind::paper_mod3;
        return pattern;
    }
    const std::string prefix = "uniform:";
    if (text.rfind(prefix, 0) == 0) {
        std::vector<Rational> entries;
        for (const auto& item : split_commas(text.substr(prefix.size()))) entries.push_back(parse_rational(item));
        pattern.kind = FieldPattern::Kind::uniform;
        pattern.uniform = FieldVector(std::move(entries));
        return pattern;
    }
    throw ParseError("unknown field pattern '" + text + "' (expected zero, paper-mod3 or uniform:<vec>)");
}

struct Context {
    std::istream& in;
    std::ostream& out;
    std::ostream& err;

    GraphDocument read_graph(const std::string& path) const {
        std::string text;
        if (path.empty() || path == "-") {
            text.assign(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
        } else {
            std::ifstream file(path);
            if (!file) throw ParseError("cannot open '" + path + "'");
            text.assign(std::istreambuf_iterator<char>(file), std::istreambuf_iterator<char>());
        }
        return parse_graph(text);
    }

    void emit(const Json& doc) const { out << doc.dump() << '\n'; }
};

Json entropy_value(double h) {
    if (std::isinf(h)) return Json("-inf");
    return Json(h);
}

Json suite_json(const SuiteResult& r) {
    Json j = Json::object();
    j["pass"] = r.pass;
    j["fail"] = r.fail;
    j["failures"] = r.failures;
    return j;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
    Context ctx{in, out, err};
    CLI::App app{"Exact V-polynomial, list-coloring and Potts partition function engine", "pottslist"};
    app.require_subcommand(1);

    std::string input;
    std::string method;
    std::uint64_t cap = default_enumeration_cap;
    double beta = 1.0;
    int q = 0;
    int q_s = 0;
    int k = 0;
    std::string boundary_text;
    std::string universe_text;
    std::string kind_text;
    std::vector<std::string> dims_text;
    std::string fields_text;
    std::string format = "json";
    int trials = 100;
    std::uint64_t seed = 1;
    int max_vertices = 5;

    auto with_input = [&](CLI::App* cmd) { cmd->add_option("input", input, "graph JSON file (default: stdin)"); };
    auto with_cap = [&](CLI::App* cmd) {
        cmd->add_option("--cap", cap, "enumeration cap")->capture_default_str();
    };

    auto* vpoly_cmd = app.add_subcommand("vpoly", "V-polynomial with symbolic edge weights");
    with_input(vpoly_cmd);
    vpoly_cmd->add_option("--method", method, "dc | expansion")->check(CLI::IsMember({"dc", "expansion"}));

    auto* lcpoly_cmd = app.add_subcommand("lcpoly", "list-chromatic polynomial of the graph's lists");
    with_input(lcpoly_cmd);

    auto* count_cmd = app.add_subcommand("count", "number of list colorings");
    with_input(count_cmd);
    with_cap(count_cmd);
    count_cmd->add_option("--method", method, "dc | brute | treewidth | all")
        ->check(CLI::IsMember({"dc", "brute", "treewidth", "all"}));

    auto* chromatic_cmd = app.add_subcommand("chromatic", "chromatic polynomial");
    with_input(chromatic_cmd);

    auto* boundary_cmd = app.add_subcommand("boundary", "boundary chromatic count");
    with_input(boundary_cmd);
    boundary_cmd->add_option("--boundary", boundary_text, "comma-separated boundary vertex ids");
    boundary_cmd->add_option("--q", q, "colors off the boundary")->required();
    boundary_cmd->add_option("--qs", q_s, "colors on the boundary")->required();

    auto* refute_cmd = app.add_subcommand("refute-choosability", "search for an uncolorable size-k list assignment");
    with_input(refute_cmd);
    with_cap(refute_cmd);
    refute_cmd->add_option("--k", k, "list size")->required();
    refute_cmd->add_option("--universe", universe_text, "comma-separated colors")->required();

    auto* potts_cmd = app.add_subcommand("potts-z", "Potts partition function");
    with_input(potts_cmd);
    with_cap(potts_cmd);
    potts_cmd->add_option("--beta", beta, "inverse temperature")->required();
    potts_cmd->add_option("--method", method, "brute | v | fk | all")->check(CLI::IsMember({"brute", "v", "fk", "all"}));
    potts_cmd->add_option("--q", q, "spin count (list graphs)");

    auto* ground_cmd = app.add_subcommand("ground-states", "number of zero-energy states");
    with_input(ground_cmd);
    ground_cmd->add_option("--q", q, "spin count (list graphs)");

    auto* entropy_cmd = app.add_subcommand("entropy-scan", "ground-state entropy per vertex along a family");
    entropy_cmd->add_option("--kind", kind_text, "family kind")->required();
    entropy_cmd->add_option("--dims", dims_text, "dimensions of one member; repeat for each member")->required();
    entropy_cmd->add_option("--fields", fields_text, "zero | paper-mod3 | uniform:<vec>");
    entropy_cmd->add_option("--q", q, "spin count for zero and mod-3 fields");
    entropy_cmd->add_option("--format", format, "json | csv")->check(CLI::IsMember({"json", "csv"}));

    auto* generate_cmd = app.add_subcommand("generate", "emit a lattice or family graph");
    generate_cmd->add_option("--kind", kind_text, "family kind")->required();
    generate_cmd->add_option("--dims", dims_text, "comma-separated dimensions")->required()->expected(1);
    generate_cmd->add_option("--fields", fields_text, "zero | paper-mod3 | uniform:<vec>");
    generate_cmd->add_option("--q", q, "spin count for zero and mod-3 fields");

    auto* verify_cmd = app.add_subcommand("verify", "randomized cross-checks");
    verify_cmd->add_option("--trials", trials, "instances per suite")->capture_default_str();
    verify_cmd->add_option("--seed", seed, "PRNG seed")->capture_default_str();
    verify_cmd->add_option("--max-vertices", max_vertices, "largest instance")->capture_default_str();

    std::vector<std::string> argv_storage{"pottslist"};
    argv_storage.insert(argv_storage.end(), args.begin(), args.end());
    std::vector<const char*> argv;
    for (const auto& a : argv_storage) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? exit_ok : exit_parse_error;
    }

    auto family_spec = [&](const std::string& dims) {
        FamilySpec spec;
        spec.kind = parse_family_kind(kind_text);
        spec.dims = parse_int_list(dims, "--dims");
        spec.fields = parse_field_pattern(fields_text);
        if (q > 0) spec.q = q;
        return spec;
    };

    try {
        if (vpoly_cmd->parsed()) {
            auto doc = ctx.read_graph(input);
            ctx.emit(poly_to_json(method == "expansion" ? v_poly_expansion(doc.graph) : v_poly_dc(doc.graph)));
        } else if (lcpoly_cmd->parsed()) {
            auto doc = ctx.read_graph(input);
            ctx.emit(poly_to_json(list_chromatic_poly(doc.graph, lists_of(doc.graph))));
        } else if (count_cmd->parsed()) {
            auto doc = ctx.read_graph(input);
            auto lists = lists_of(doc.graph);
            Json result = Json::object();
            if (method.empty() || method == "dc") {
                result["count"] = count_list_colorings(doc.graph, lists).str();
            } else if (method == "brute") {
                result["count"] = brute_force_count(doc.graph, lists, cap).str();
            } else if (method == "treewidth") {
                result["count"] = treewidth_count(doc.graph, lists, greedy_tree_decomposition(doc.graph)).str();
            } else {
                Integer dc = count_list_colorings(doc.graph, lists);
                Integer brute = brute_force_count(doc.graph, lists, cap);
                Integer tw = treewidth_count(doc.graph, lists, greedy_tree_decomposition(doc.graph));
                result["count"] = dc.str();
                result["methods"] = Json{{"dc", dc.str()}, {"brute", brute.str()}, {"treewidth", tw.str()}};
                ctx.emit(result);
                return dc == brute && brute == tw ? exit_ok : exit_verification_failed;
            }
            ctx.emit(result);
        } else if (chromatic_cmd->parsed()) {
            auto doc = ctx.read_graph(input);
            UniPoly chi = chromatic_polynomial(doc.graph);
            Json coeffs = Json::array();
            for (const auto& c : chi.coefficients) coeffs.push_back(c.str());
            ctx.emit(Json{{"coefficients", coeffs}, {"polynomial", to_string(chi)}});
        } else if (boundary_cmd->parsed()) {
            auto doc = ctx.read_graph(input);
            auto ids = parse_int_list(boundary_text, "--boundary");
            std::set<VertexId> boundary(ids.begin(), ids.end());
            ctx.emit(Json{{"count", boundary_chromatic(doc.graph, boundary, q, q_s).str()}});
        } else if (refute_cmd->parsed()) {
            auto doc = ctx.read_graph(input);
            auto colors = parse_int_list(universe_text, "--universe");
            auto witness = refute_choosability(doc.graph, k, ColorSet(colors), cap);
            Json result = Json::object();
            if (witness) {
                Json lists = Json::array();
                for (const auto& [id, list] : *witness) lists.push_back(Json{{"id", id}, {"list", list.elements()}});
                result["witness"] = std::move(lists);
            } else {
                result["witness"] = nullptr;
            }
            ctx.emit(result);
        } else if (potts_cmd->parsed()) {
            auto doc = ctx.read_graph(input);
            auto params = PottsParams::from_graph(doc.graph, beta, q > 0 ? std::optional<int>(q) : doc.q);
            Json z = Json::object();
            if (method.empty() || method == "all" || method == "brute") z["brute"] = partition_brute(doc.graph, params, cap);
            if (method.empty() || method == "all" || method == "v") z["v"] = partition_via_v(doc.graph, params);
            if (method.empty() || method == "all" || method == "fk") z["fk"] = partition_fk(doc.graph, params);
            Json result = Json::object();
            result["Z"] = std::move(z);
            if (is_antiferromagnetic(params)) result["ground_states"] = ground_state_count(doc.graph, params).str();
            ctx.emit(result);
        } else if (ground_cmd->parsed()) {
            auto doc = ctx.read_graph(input);
            auto params = PottsParams::from_graph(doc.graph, 1.0, q > 0 ? std::optional<int>(q) : doc.q);
            ctx.emit(Json{{"ground_states", ground_state_count(doc.graph, params).str()}});
        } else if (entropy_cmd->parsed()) {
            std::vector<std::pair<WeightedMultigraph, PottsParams>> family;
            std::vector<FamilySpec> specs;
            for (const auto& dims : dims_text) {
                specs.push_back(family_spec(dims));
                auto g = generate(specs.back());
                auto params = PottsParams::from_graph(g, 1.0);
                family.emplace_back(std::move(g), std::move(params));
            }
            auto entropy = entropy_sequence(family);
            if (format == "csv") {
                out << "dims,vertices,ground_states,entropy\n";
                for (std::size_t i = 0; i < family.size(); ++i) {
                    std::string dims;
                    for (int d : specs[i].dims) dims += (dims.empty() ? "" : "x") + std::to_string(d);
                    std::ostringstream value;
                    value.precision(17);
                    if (std::isinf(entropy[i])) {
                        value << "-inf";
                    } else {
                        value << entropy[i];
                    }
                    out << dims << ',' << family[i].first.num_vertices() << ','
                        << ground_state_count(family[i].first, family[i].second).str() << ',' << value.str() << '\n';
                }
            } else {
                Json rows = Json::array();
                for (std::size_t i = 0; i < family.size(); ++i) {
                    rows.push_back(Json{{"dims", specs[i].dims},
                                        {"vertices", family[i].first.num_vertices()},
                                        {"ground_states", ground_state_count(family[i].first, family[i].second).str()},
                                        {"entropy", entropy_value(entropy[i])}});
                }
                ctx.emit(Json{{"kind", kind_text}, {"members", rows}});
            }
        } else if (generate_cmd->parsed()) {
            ctx.emit(graph_to_json(generate(family_spec(dims_text.front()))));
        } else if (verify_cmd->parsed()) {
            if (trials < 0 || max_vertices < 1) throw PreconditionError("--trials must be >= 0 and --max-vertices >= 1");
            Rng rng(seed);
            auto t2 = verify_partition_routes(rng, trials, max_vertices);
            auto t3 = verify_zero_temperature(rng, trials, max_vertices);
            auto counting = verify_counting(rng, trials, max_vertices);
            Json result = Json::object();
            result["prng"] = Rng::name;
            result["seed"] = seed;
            result["trials"] = trials;
            result["max_vertices"] = max_vertices;
            result["theorem2"] = suite_json(t2);
            result["theorem3"] = suite_json(t3);
            result["counting"] = suite_json(counting);
            ctx.emit(result);
            return t2.ok() && t3.ok() && counting.ok() ? exit_ok : exit_verification_failed;
        }
    } catch (const ParseError& e) {
        err << "parse error: " << e.what() << '\n';
        return exit_parse_error;
    } catch (const PreconditionError& e) {
        err << "error: " << e.what() << '\n';
        return exit_precondition;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << '\n';
        return exit_verification_failed;
    }
    return exit_ok;
}

}  // namespace pottslist
