#include "pottslist/listchrom.hpp"

#include <algorithm>
#include <functional>
#include <limits>

#include "pottslist/deletion_contraction.hpp"
#include "pottslist/errors.hpp"
#include "pottslist/vpoly.hpp"

namespace pottslist {

namespace {

struct CountAlgebra {
    using Value = Integer;
    Value one() const { return 1; }
    Value vertex(const VertexWeight& w) const { return static_cast<long long>(std::get<ColorSet>(w).size()); }
    Value gamma(const Edge&) const { return -1; }
    Value gamma_plus_one(const Edge&) const { return 0; }
    bool is_zero(const Value& v) const { return v == 0; }
    bool annihilates(const VertexWeight& w) const { return std::get<ColorSet>(w).empty(); }
};

// Saturating product of list sizes, for cap checks.
std::uint64_t capped_product(const std::vector<std::uint64_t>& factors, std::uint64_t cap) {
    std::uint64_t product = 1;
    for (auto f : factors) {
        if (f == 0) return 0;
        if (product > cap / f) return std::numeric_limits<std::uint64_t>::max();
        product *= f;
    }
    return product;
}

// Depth-first enumeration of colorings in vertex-index order, checking each new
// color against already-colored neighbors.
class ColoringSearch {
public:
    ColoringSearch(const WeightedMultigraph& g, const ListAssignment& lists) : n_(g.num_vertices()) {
        has_loop_ = g.has_loop();
        lists_.reserve(n_);
        for (const auto& v : g.vertices()) {
            auto it = lists.find(v.id);
            if (it == lists.end()) throw PreconditionError("no list for vertex " + std::to_string(v.id));
            lists_.push_back(it->second.elements());
        }
        earlier_.resize(n_);
        auto adj = g.adjacency();
        for (std::size_t i = 0; i < n_; ++i) {
            for (auto j : adj[i]) {
                if (j < i) earlier_[i].push_back(j);
            }
        }
        colors_.assign(n_, 0);
    }

    std::uint64_t count(bool stop_at_first) {
        if (has_loop_) return 0;
        stop_at_first_ = stop_at_first;
        found_ = 0;
        descend(0);
        return found_;
    }

    const std::vector<std::vector<Color>>& lists() const { return lists_; }

private:
    void descend(std::size_t i) {
        if (i == n_) {
            ++found_;
            return;
        }
        for (Color c : lists_[i]) {
            bool clash = false;
            for (auto j : earlier_[i]) {
                if (colors_[j] == c) {
                    clash = true;
                    break;
                }
            }
            if (clash) continue;
            colors_[i] = c;
            descend(i + 1);
            if (stop_at_first_ && found_ > 0) return;
        }
    }

    std::size_t n_;
    bool has_loop_ = false;
    bool stop_at_first_ = false;
    std::uint64_t found_ = 0;
    std::vector<std::vector<Color>> lists_;
    std::vector<std::vector<std::size_t>> earlier_;
    std::vector<Color> colors_;
};

}  // namespace

ListAssignment lists_of(const WeightedMultigraph& g) {
    ListAssignment lists;
    for (const auto& v : g.vertices()) {
        if (const auto* set = std::get_if<ColorSet>(&v.weight)) {
            lists.emplace(v.id, *set);
        } else {
            lists.emplace(v.id, zero_positions(std::get<FieldVector>(v.weight)));
        }
    }
    return lists;
}

WeightedMultigraph with_lists(const WeightedMultigraph& g, const ListAssignment& lists) {
    std::map<VertexId, VertexWeight> weights;
    for (const auto& v : g.vertices()) {
        auto it = lists.find(v.id);
        if (it == lists.end()) throw PreconditionError("no list for vertex " + std::to_string(v.id));
        weights.emplace(v.id, it->second);
    }
    return with_weights(g, weights);
}

MVPoly list_chromatic_poly(const WeightedMultigraph& g, const ListAssignment& lists) {
    return v_poly_dc(with_lists(g, lists), {}, -1);
}

Valuation<Integer> list_size_valuation(const MVPoly& p) {
    Valuation<Integer> valuation;
    for (const auto& [mono, coeff] : p.terms()) {
        for (const auto& [key, exponent] : mono.x) {
            if (valuation.x.count(key)) continue;
            auto weight = weight_from_key(key);
            const auto* set = std::get_if<ColorSet>(&weight);
            if (!set) throw InvalidWeight("x_l = |l| needs list-valued variables, got " + x_variable_name(key));
            valuation.x.emplace(key, static_cast<long long>(set->size()));
        }
    }
    return valuation;
}

Integer count_list_colorings(const WeightedMultigraph& g, const ListAssignment& lists) {
    DcOptions options;
    options.collapse_parallel = true;
    options.memoize = true;
    DeletionContraction<CountAlgebra> engine(CountAlgebra{}, std::move(options));
    return engine(with_lists(g, lists));
}

Integer brute_force_count(const WeightedMultigraph& g, const ListAssignment& lists, std::uint64_t cap) {
    ColoringSearch search(g, lists);
    std::vector<std::uint64_t> sizes;
    for (const auto& l : search.lists()) sizes.push_back(l.size());
    if (capped_product(sizes, cap) > cap) {
        throw SizeError("brute-force enumeration exceeds the cap of " + std::to_string(cap) + " assignments");
    }
    return Integer(search.count(false));
}

// ---------------------------------------------------------------------------
// Chromatic polynomial

Integer UniPoly::operator()(const Integer& lambda) const {
    Integer value = 0;
    for (auto it = coefficients.rbegin(); it != coefficients.rend(); ++it) value = value * lambda + *it;
    return value;
}

std::string to_string(const UniPoly& p) {
    std::string out;
    for (int d = p.degree(); d >= 0; --d) {
        const Integer& c = p.coefficients[static_cast<std::size_t>(d)];
        if (c == 0) continue;
        Integer magnitude = c < 0 ? Integer(-c) : c;
        out += out.empty() ? (c < 0 ? "-" : "") : (c < 0 ? " - " : " + ");
        if (magnitude != 1 || d == 0) out += magnitude.str();
        if (d > 0) out += (magnitude != 1 ? "*" : "") + std::string("L") + (d > 1 ? "^" + std::to_string(d) : "");
    }
    return out.empty() ? "0" : out;
}

UniPoly chromatic_polynomial(const WeightedMultigraph& g) {
    const std::size_t n = g.num_vertices();
    std::vector<Rational> diffs;
    for (std::size_t k = 0; k <= n; ++k) {
        ListAssignment uniform;
        for (const auto& v : g.vertices()) uniform.emplace(v.id, ColorSet::range(static_cast<int>(k)));
        diffs.emplace_back(count_list_colorings(g, uniform));
    }
    // Forward differences at 0 give the Newton form sum_j D^j f(0) * C(L, j).
    for (std::size_t level = 1; level <= n; ++level) {
        for (std::size_t i = n; i >= level; --i) diffs[i] = diffs[i] - diffs[i - 1];
    }
    std::vector<Rational> coeffs(n + 1);
    std::vector<Rational> basis{Rational(1)};  // C(L, j) in monomial form
    for (std::size_t j = 0; j <= n; ++j) {
        for (std::size_t d = 0; d < basis.size(); ++d) coeffs[d] += diffs[j] * basis[d];
        // C(L, j+1) = C(L, j) * (L - j) / (j + 1)
        std::vector<Rational> next(basis.size() + 1);
        for (std::size_t d = 0; d < basis.size(); ++d) {
            next[d + 1] += basis[d] / static_cast<long long>(j + 1);
            next[d] -= basis[d] * static_cast<long long>(j) / static_cast<long long>(j + 1);
        }
        basis = std::move(next);
    }
    UniPoly p;
    for (const auto& c : coeffs) {
        if (boost::multiprecision::denominator(c) != 1) throw Error("chromatic interpolation produced a non-integer");
        p.coefficients.push_back(boost::multiprecision::numerator(c));
    }
    while (p.coefficients.size() > 1 && p.coefficients.back() == 0) p.coefficients.pop_back();
    return p;
}

Integer boundary_chromatic(const WeightedMultigraph& g, const std::set<VertexId>& boundary, int q, int q_s) {
    if (q < 0 || q_s < 0 || q_s > q) throw PreconditionError("boundary colors need 0 <= q_s <= q");
    for (VertexId id : boundary) {
        if (!g.has_vertex(id)) throw UnknownVertex("unknown boundary vertex " + std::to_string(id));
    }
    ListAssignment lists;
    for (const auto& v : g.vertices()) lists.emplace(v.id, ColorSet::range(boundary.count(v.id) ? q_s : q));
    return count_list_colorings(g, lists);
}

// ---------------------------------------------------------------------------
// Tree decompositions

int TreeDecomposition::width() const {
    int w = -1;
    for (const auto& [id, bag] : bags) w = std::max(w, static_cast<int>(bag.size()) - 1);
    return w;
}

void validate_decomposition(const WeightedMultigraph& g, const TreeDecomposition& td) {
    auto fail = [](const std::string& why) { return DecompositionError("invalid tree decomposition: " + why); };
    std::map<int, std::vector<int>> tree;
    for (const auto& [id, bag] : td.bags) tree[id];
    for (auto [a, b] : td.tree_edges) {
        if (!td.bags.count(a) || !td.bags.count(b)) throw fail("tree edge references a missing bag");
        if (a == b) throw fail("tree edge is a loop");
        tree[a].push_back(b);
        tree[b].push_back(a);
    }
    if (!td.bags.empty()) {
        if (td.tree_edges.size() != td.bags.size() - 1) throw fail("bags do not form a tree");
        std::set<int> seen{td.bags.begin()->first};
        std::vector<int> stack{td.bags.begin()->first};
        while (!stack.empty()) {
            int t = stack.back();
            stack.pop_back();
            for (int u : tree[t]) {
                if (seen.insert(u).second) stack.push_back(u);
            }
        }
        if (seen.size() != td.bags.size()) throw fail("bags do not form a tree");
    }

    std::map<VertexId, std::set<int>> holders;
    for (const auto& [id, bag] : td.bags) {
        for (VertexId v : bag) {
            if (!g.has_vertex(v)) throw fail("bag " + std::to_string(id) + " holds unknown vertex " + std::to_string(v));
            holders[v].insert(id);
        }
    }
    for (const auto& v : g.vertices()) {
        if (!holders.count(v.id)) throw fail("vertex " + std::to_string(v.id) + " is in no bag");
    }
    for (const auto& e : g.edges()) {
        const auto& hu = holders[e.u];
        const auto& hv = holders[e.v];
        bool shared = std::any_of(hu.begin(), hu.end(), [&](int b) { return hv.count(b) > 0; });
        if (!shared) throw fail("edge " + std::to_string(e.id) + " is in no bag");
    }
    for (const auto& [v, bags] : holders) {
        std::set<int> seen{*bags.begin()};
        std::vector<int> stack{*bags.begin()};
        while (!stack.empty()) {
            int t = stack.back();
            stack.pop_back();
            for (int u : tree[t]) {
                if (bags.count(u) && seen.insert(u).second) stack.push_back(u);
            }
        }
        if (seen.size() != bags.size()) throw fail("bags holding vertex " + std::to_string(v) + " are disconnected");
    }
}

TreeDecomposition greedy_tree_decomposition(const WeightedMultigraph& g) {
    const std::size_t n = g.num_vertices();
    auto adj_list = g.adjacency();
    std::vector<std::set<std::size_t>> adj(n);
    for (std::size_t i = 0; i < n; ++i) adj[i].insert(adj_list[i].begin(), adj_list[i].end());

    std::vector<bool> eliminated(n, false);
    std::vector<std::size_t> position(n, 0);
    std::vector<std::size_t> order;
    std::vector<std::vector<std::size_t>> neighbourhoods(n);
    for (std::size_t step = 0; step < n; ++step) {
        std::size_t best = n;
        for (std::size_t i = 0; i < n; ++i) {
            if (!eliminated[i] && (best == n || adj[i].size() < adj[best].size())) best = i;
        }
        eliminated[best] = true;
        position[best] = step;
        order.push_back(best);
        std::vector<std::size_t> nbrs(adj[best].begin(), adj[best].end());
        neighbourhoods[best] = nbrs;
        for (auto a : nbrs) {
            adj[a].erase(best);
            for (auto b : nbrs) {
                if (a != b) adj[a].insert(b);
            }
        }
        adj[best].clear();
    }

    TreeDecomposition td;
    std::vector<std::size_t> roots;
    for (std::size_t i : order) {
        int bag_id = static_cast<int>(position[i]);
        std::vector<VertexId> bag{g.vertices()[i].id};
        for (auto j : neighbourhoods[i]) bag.push_back(g.vertices()[j].id);
        std::sort(bag.begin(), bag.end());
        td.bags.emplace(bag_id, std::move(bag));
        if (neighbourhoods[i].empty()) {
            roots.push_back(i);
        } else {
            auto next = *std::min_element(neighbourhoods[i].begin(), neighbourhoods[i].end(),
                                          [&](std::size_t a, std::size_t b) { return position[a] < position[b]; });
            td.tree_edges.emplace_back(bag_id, static_cast<int>(position[next]));
        }
    }
    // One root per connected component; chain them into a single tree.
    for (std::size_t r = 1; r < roots.size(); ++r) {
        td.tree_edges.emplace_back(static_cast<int>(position[roots[r - 1]]), static_cast<int>(position[roots[r]]));
    }
    validate_decomposition(g, td);
    return td;
}

std::vector<NiceNode> make_nice(const TreeDecomposition& td) {
    std::vector<NiceNode> nodes;
    if (td.bags.empty()) {
        nodes.push_back(NiceNode{});
        return nodes;
    }
    std::map<int, std::vector<int>> tree;
    for (auto [a, b] : td.tree_edges) {
        tree[a].push_back(b);
        tree[b].push_back(a);
    }
    auto sorted_bag = [&](int id) {
        auto bag = td.bags.at(id);
        std::sort(bag.begin(), bag.end());
        return bag;
    };
    auto add = [&](NiceNode node) {
        nodes.push_back(std::move(node));
        return nodes.size() - 1;
    };
    // Walks from node `from` (holding bag `have`) to a node holding `want`.
    auto transition = [&](std::size_t from, std::vector<VertexId> have, const std::vector<VertexId>& want) {
        for (VertexId v : std::vector<VertexId>(have)) {
            if (std::binary_search(want.begin(), want.end(), v)) continue;
            have.erase(std::find(have.begin(), have.end(), v));
            from = add(NiceNode{NiceNode::Kind::forget, v, have, {from}});
        }
        for (VertexId v : want) {
            if (std::binary_search(have.begin(), have.end(), v)) continue;
            have.insert(std::upper_bound(have.begin(), have.end(), v), v);
            from = add(NiceNode{NiceNode::Kind::introduce, v, have, {from}});
        }
        return from;
    };
    std::function<std::size_t(int, int)> build = [&](int t, int parent) -> std::size_t {
        auto bag = sorted_bag(t);
        std::vector<std::size_t> branches;
        for (int c : tree[t]) {
            if (c == parent) continue;
            branches.push_back(transition(build(c, t), sorted_bag(c), bag));
        }
        if (branches.empty()) branches.push_back(transition(add(NiceNode{}), {}, bag));
        std::size_t current = branches.front();
        for (std::size_t i = 1; i < branches.size(); ++i) {
            current = add(NiceNode{NiceNode::Kind::join, 0, bag, {current, branches[i]}});
        }
        return current;
    };
    int root = td.bags.begin()->first;
    transition(build(root, root), sorted_bag(root), {});
    return nodes;
}

Integer treewidth_count(const WeightedMultigraph& g, const ListAssignment& lists, const TreeDecomposition& td) {
    validate_decomposition(g, td);
    for (const auto& v : g.vertices()) {
        if (!lists.count(v.id)) throw PreconditionError("no list for vertex " + std::to_string(v.id));
    }
    if (g.has_loop()) return 0;

    std::map<VertexId, std::set<VertexId>> neighbours;
    for (const auto& e : g.edges()) {
        neighbours[e.u].insert(e.v);
        neighbours[e.v].insert(e.u);
    }

    using Table = std::map<std::vector<Color>, Integer>;
    auto nodes = make_nice(td);
    std::vector<Table> tables(nodes.size());
    for (std::size_t i = 0; i < nodes.size(); ++i) {
        const NiceNode& node = nodes[i];
        Table out;
        switch (node.kind) {
            case NiceNode::Kind::leaf:
                out.emplace(std::vector<Color>{}, 1);
                break;
            case NiceNode::Kind::introduce: {
                const auto& child_bag = nodes[node.children[0]].bag;
                auto slot = static_cast<std::size_t>(
                    std::lower_bound(child_bag.begin(), child_bag.end(), node.vertex) - child_bag.begin());
                const auto& adjacent = neighbours[node.vertex];
                for (const auto& [colors, count] : tables[node.children[0]]) {
                    for (Color c : lists.at(node.vertex).elements()) {
                        bool clash = false;
                        for (std::size_t j = 0; j < child_bag.size() && !clash; ++j) {
                            clash = colors[j] == c && adjacent.count(child_bag[j]);
                        }
                        if (clash) continue;
                        auto extended = colors;
                        extended.insert(extended.begin() + static_cast<std::ptrdiff_t>(slot), c);
                        out.emplace(std::move(extended), count);
                    }
                }
                break;
            }
            case NiceNode::Kind::forget: {
                const auto& child_bag = nodes[node.children[0]].bag;
                auto slot = static_cast<std::size_t>(
                    std::lower_bound(child_bag.begin(), child_bag.end(), node.vertex) - child_bag.begin());
                for (const auto& [colors, count] : tables[node.children[0]]) {
                    auto reduced = colors;
                    reduced.erase(reduced.begin() + static_cast<std::ptrdiff_t>(slot));
                    out[reduced] += count;
                }
                break;
            }
            case NiceNode::Kind::join: {
                const auto& left = tables[node.children[0]];
                const auto& right = tables[node.children[1]];
                for (const auto& [colors, count] : left) {
                    if (auto it = right.find(colors); it != right.end()) out.emplace(colors, count * it->second);
                }
                break;
            }
        }
        tables[i] = std::move(out);
        for (auto c : node.children) Table().swap(tables[c]);
    }
    const auto& root = tables.back();
    auto it = root.find({});
    return it == root.end() ? Integer(0) : it->second;
}

// ---------------------------------------------------------------------------
// Choosability refutation

std::optional<ListAssignment> refute_choosability(const WeightedMultigraph& g, int k, const ColorSet& universe,
                                                  std::uint64_t cap) {
    if (k < 0) throw PreconditionError("list size must be non-negative");
    if (static_cast<std::size_t>(k) > universe.size()) throw PreconditionError("universe smaller than the list size");

    std::vector<ColorSet> choices;
    std::vector<bool> pick(universe.size(), false);
    std::fill(pick.begin(), pick.begin() + k, true);
    do {
        std::vector<Color> subset;
        for (std::size_t i = 0; i < pick.size(); ++i) {
            if (pick[i]) subset.push_back(universe.elements()[i]);
        }
        choices.emplace_back(std::move(subset));
    } while (std::prev_permutation(pick.begin(), pick.end()));

    const std::size_t n = g.num_vertices();
    if (capped_product(std::vector<std::uint64_t>(n, choices.size()), cap) > cap) {
        throw SizeError("choosability search space exceeds the cap of " + std::to_string(cap));
    }

    std::vector<std::size_t> odometer(n, 0);
    while (true) {
        ListAssignment lists;
        for (std::size_t i = 0; i < n; ++i) lists.emplace(g.vertices()[i].id, choices[odometer[i]]);
        if (ColoringSearch(g, lists).count(true) == 0) return lists;
        std::size_t i = n;
        while (i > 0) {
            --i;
            if (++odometer[i] < choices.size()) break;
            odometer[i] = 0;
            if (i == 0) return std::nullopt;
        }
        if (n == 0) return std::nullopt;
    }
}

}  // namespace pottslist
