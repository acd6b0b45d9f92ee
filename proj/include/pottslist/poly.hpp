#pragma once

#include <compare>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "pottslist/errors.hpp"
#include "pottslist/graph.hpp"
#include "pottslist/numeric.hpp"
#include "pottslist/weights.hpp"

namespace pottslist {

/// Product of x-variables (indexed by weight keys) and gamma-variables (indexed by
/// edge ids). Exponents are positive; both factor lists are sorted by variable.
/// The defaulted ordering is lexicographic on (x factors, gamma factors).
struct Monomial {
    std::vector<std::pair<WeightKey, int>> x;
    std::vector<std::pair<EdgeId, int>> g;

    static Monomial x_var(WeightKey key, int exponent = 1);
    static Monomial g_var(EdgeId edge, int exponent = 1);

    int total_degree() const;

    friend Monomial operator*(const Monomial& a, const Monomial& b);
    friend bool operator==(const Monomial&, const Monomial&) = default;
    friend auto operator<=>(const Monomial&, const Monomial&) = default;
};

/// Sparse multivariate polynomial with arbitrary-precision integer coefficients.
/// Zero coefficients are never stored.
class MVPoly {
public:
    using Terms = std::map<Monomial, Integer>;

    MVPoly() = default;
    MVPoly(long long constant);  // NOLINT(google-explicit-constructor)
    explicit MVPoly(const Integer& constant);

    static MVPoly x(const WeightKey& key);
    static MVPoly x(const VertexWeight& weight) { return x(canonical_key(weight)); }
    static MVPoly g(EdgeId edge);
    static MVPoly term(Monomial m, Integer coeff);

    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }
    /// Coefficient of a monomial (zero when absent).
    Integer coefficient(const Monomial& m) const;

    MVPoly& operator+=(const MVPoly& other);
    MVPoly& operator-=(const MVPoly& other);
    MVPoly& operator*=(const MVPoly& other);

    friend MVPoly operator+(MVPoly a, const MVPoly& b) { return a += b; }
    friend MVPoly operator-(MVPoly a, const MVPoly& b) { return a -= b; }
    friend MVPoly operator*(const MVPoly& a, const MVPoly& b);
    friend MVPoly operator-(const MVPoly& a);
    friend bool operator==(const MVPoly&, const MVPoly&) = default;

private:
    void add_term(const Monomial& m, const Integer& c);
    Terms terms_;
};

MVPoly poly_add(const MVPoly& p, const MVPoly& q);
MVPoly poly_mul(const MVPoly& p, const MVPoly& q);
MVPoly poly_scale(const MVPoly& p, const Integer& c);

/// "x[{1,2}]", "x[(0,-1)]", "g[3]"
std::string x_variable_name(const WeightKey& key);
std::string g_variable_name(EdgeId edge);

/// Human-readable rendering, e.g. "x[{1,2}]*x[{2,3}] - x[{2}]".
std::string to_string(const MVPoly& p);

/// Values for every variable of a polynomial.
template <class T>
struct Valuation {
    std::map<WeightKey, T> x;
    std::map<EdgeId, T> g;
};

namespace detail {

template <class T>
T from_integer(const Integer& c) {
    if constexpr (std::is_same_v<T, double>) {
        return c.convert_to<double>();
    } else {
        return T(c);
    }
}

template <class T>
T power(T base, int exponent) {
    T result(1);
    while (exponent > 0) {
        if (exponent & 1) result *= base;
        base *= base;
        exponent >>= 1;
    }
    return result;
}

}  // namespace detail

/// Substitutes the valuation into p. Exact for Integer and Rational values.
/// Throws IncompleteValuation when a variable of p has no value.
template <class T>
T poly_eval(const MVPoly& p, const Valuation<T>& valuation) {
    T total(0);
    for (const auto& [mono, coeff] : p.terms()) {
        T term = detail::from_integer<T>(coeff);
        for (const auto& [key, exponent] : mono.x) {
            auto it = valuation.x.find(key);
            if (it == valuation.x.end()) throw IncompleteValuation("no value for " + x_variable_name(key));
            term *= detail::power(it->second, exponent);
        }
        for (const auto& [edge, exponent] : mono.g) {
            auto it = valuation.g.find(edge);
            if (it == valuation.g.end()) throw IncompleteValuation("no value for " + g_variable_name(edge));
            term *= detail::power(it->second, exponent);
        }
        total += term;
    }
    return total;
}

}  // namespace pottslist
