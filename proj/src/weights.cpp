#include "pottslist/weights.hpp"

#include <algorithm>

#include "pottslist/errors.hpp"

namespace pottslist {

ColorSet::ColorSet(std::initializer_list<Color> colors) : ColorSet(std::vector<Color>(colors)) {}

ColorSet::ColorSet(std::vector<Color> colors) : elements_(std::move(colors)) {
    std::sort(elements_.begin(), elements_.end());
    elements_.erase(std::unique(elements_.begin(), elements_.end()), elements_.end());
}

ColorSet ColorSet::range(int k) {
    std::vector<Color> colors;
    for (Color c = 1; c <= k; ++c) colors.push_back(c);
    return ColorSet(std::move(colors));
}

bool ColorSet::contains(Color c) const { return std::binary_search(elements_.begin(), elements_.end(), c); }

bool FieldVector::all_nonpositive() const {
    return std::all_of(entries_.begin(), entries_.end(), [](const Rational& m) { return m <= 0; });
}

ColorSet combine(const ColorSet& a, const ColorSet& b) {
    std::vector<Color> out;
    std::set_intersection(a.elements().begin(), a.elements().end(), b.elements().begin(), b.elements().end(),
                          std::back_inserter(out));
    return ColorSet(std::move(out));
}

FieldVector combine(const FieldVector& a, const FieldVector& b) {
    if (a.size() != b.size()) {
        throw InvalidWeight("field vectors of different lengths (" + std::to_string(a.size()) + " vs " +
                            std::to_string(b.size()) + ")");
    }
    std::vector<Rational> sum(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) sum[i] = a[i] + b[i];
    return FieldVector(std::move(sum));
}

VertexWeight combine(const VertexWeight& a, const VertexWeight& b) {
    if (a.index() != b.index()) throw InvalidWeight("cannot combine a color set with a field vector");
    if (const auto* sa = std::get_if<ColorSet>(&a)) return combine(*sa, std::get<ColorSet>(b));
    return combine(std::get<FieldVector>(a), std::get<FieldVector>(b));
}

ColorSet zero_positions(const FieldVector& m) {
    std::vector<Color> zeros;
    for (std::size_t alpha = 0; alpha < m.size(); ++alpha) {
        if (m[alpha] == 0) zeros.push_back(static_cast<Color>(alpha + 1));
    }
    return ColorSet(std::move(zeros));
}

FieldVector indicator_field(const ColorSet& allowed, int q) {
    std::vector<Rational> entries(static_cast<std::size_t>(q), Rational(-1));
    for (Color c : allowed.elements()) {
        if (c >= 1 && c <= q) entries[static_cast<std::size_t>(c - 1)] = 0;
    }
    return FieldVector(std::move(entries));
}

WeightKey canonical_key(const VertexWeight& w) {
    std::string repr;
    if (const auto* set = std::get_if<ColorSet>(&w)) {
        repr = "{";
        for (std::size_t i = 0; i < set->size(); ++i) {
            if (i) repr += ',';
            repr += std::to_string(set->elements()[i]);
        }
        repr += '}';
    } else {
        const auto& field = std::get<FieldVector>(w);
        repr = "(";
        for (std::size_t i = 0; i < field.size(); ++i) {
            if (i) repr += ',';
            repr += format_rational(field[i]);
        }
        repr += ')';
    }
    return WeightKey{std::move(repr)};
}

namespace {

std::vector<std::string> split_items(std::string_view body) {
    std::vector<std::string> items;
    if (body.empty()) return items;
    std::size_t start = 0;
    while (true) {
        auto comma = body.find(',', start);
        items.emplace_back(body.substr(start, comma - start));
        if (comma == std::string_view::npos) break;
        start = comma + 1;
    }
    return items;
}

}  // namespace

VertexWeight weight_from_key(const WeightKey& key) {
    const std::string& s = key.repr;
    if (s.size() < 2) throw ParseError("malformed weight key '" + s + "'");
    std::string_view body(s.data() + 1, s.size() - 2);
    if (s.front() == '{' && s.back() == '}') {
        std::vector<Color> colors;
        for (const auto& item : split_items(body)) {
            Rational r = parse_rational(item);
            if (boost::multiprecision::denominator(r) != 1) throw ParseError("non-integer color in key '" + s + "'");
            colors.push_back(boost::multiprecision::numerator(r).convert_to<int>());
        }
        return ColorSet(std::move(colors));
    }
    if (s.front() == '(' && s.back() == ')') {
        std::vector<Rational> entries;
        for (const auto& item : split_items(body)) entries.push_back(parse_rational(item));
        return FieldVector(std::move(entries));
    }
    throw ParseError("malformed weight key '" + s + "'");
}

std::string to_string(const VertexWeight& w) { return canonical_key(w).repr; }

}  // namespace pottslist
