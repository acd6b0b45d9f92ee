#pragma once

#include <compare>
#include <initializer_list>
#include <string>
#include <variant>
#include <vector>

#include "pottslist/numeric.hpp"

namespace pottslist {

using Color = int;

/// A finite set of colors kept in sorted, duplicate-free form.
/// Semigroup operation: intersection. The empty set is absorbing.
class ColorSet {
public:
    ColorSet() = default;
    ColorSet(std::initializer_list<Color> colors);
    explicit ColorSet(std::vector<Color> colors);

    /// {1, ..., k}
    static ColorSet range(int k);

    const std::vector<Color>& elements() const { return elements_; }
    std::size_t size() const { return elements_.size(); }
    bool empty() const { return elements_.empty(); }
    bool contains(Color c) const;

    friend bool operator==(const ColorSet&, const ColorSet&) = default;
    friend auto operator<=>(const ColorSet&, const ColorSet&) = default;

private:
    std::vector<Color> elements_;
};

/// Per-spin external field contributions M_{i,1..q}. Semigroup operation:
/// componentwise addition.
class FieldVector {
public:
    FieldVector() = default;
    FieldVector(std::initializer_list<Rational> entries) : entries_(entries) {}
    explicit FieldVector(std::vector<Rational> entries) : entries_(std::move(entries)) {}

    static FieldVector zeros(int q) { return FieldVector(std::vector<Rational>(static_cast<std::size_t>(q))); }

    const std::vector<Rational>& entries() const { return entries_; }
    std::size_t size() const { return entries_.size(); }
    const Rational& operator[](std::size_t alpha) const { return entries_[alpha]; }

    bool all_nonpositive() const;

    friend bool operator==(const FieldVector&, const FieldVector&) = default;

private:
    std::vector<Rational> entries_;
};

using VertexWeight = std::variant<ColorSet, FieldVector>;

enum class WeightKind { color_set, field_vector };

inline WeightKind kind_of(const VertexWeight& w) {
    return std::holds_alternative<ColorSet>(w) ? WeightKind::color_set : WeightKind::field_vector;
}

/// Canonical textual key of a vertex weight: "{1,3}" for color sets and
/// "(0,-1,0)" for field vectors. Equal keys iff equal weights.
struct WeightKey {
    std::string repr;

    friend bool operator==(const WeightKey&, const WeightKey&) = default;
    friend auto operator<=>(const WeightKey&, const WeightKey&) = default;
};

/// Semigroup combination. Throws InvalidWeight on kind or length mismatch.
VertexWeight combine(const VertexWeight& a, const VertexWeight& b);
ColorSet combine(const ColorSet& a, const ColorSet& b);
FieldVector combine(const FieldVector& a, const FieldVector& b);

/// 1-indexed positions of the exactly-zero entries.
ColorSet zero_positions(const FieldVector& m);

/// Field that is 0 on the listed spins and -1 elsewhere (spins 1..q).
FieldVector indicator_field(const ColorSet& allowed, int q);

WeightKey canonical_key(const VertexWeight& w);

/// Inverse of canonical_key. Throws ParseError on malformed keys.
VertexWeight weight_from_key(const WeightKey& key);

std::string to_string(const VertexWeight& w);

}  // namespace pottslist
