#include "pottslist/poly.hpp"

#include <algorithm>

namespace pottslist {

namespace {

template <class Key>
std::vector<std::pair<Key, int>> merge_factors(const std::vector<std::pair<Key, int>>& a,
                                               const std::vector<std::pair<Key, int>>& b) {
    std::vector<std::pair<Key, int>> out;
    out.reserve(a.size() + b.size());
    auto ia = a.begin();
    auto ib = b.begin();
    while (ia != a.end() && ib != b.end()) {
        if (ia->first < ib->first) {
            out.push_back(*ia++);
        } else if (ib->first < ia->first) {
            out.push_back(*ib++);
        } else {
            out.emplace_back(ia->first, ia->second + ib->second);
            ++ia;
            ++ib;
        }
    }
    out.insert(out.end(), ia, a.end());
    out.insert(out.end(), ib, b.end());
    return out;
}

}  // namespace

Monomial Monomial::x_var(WeightKey key, int exponent) {
    Monomial m;
    if (exponent > 0) m.x.emplace_back(std::move(key), exponent);
    return m;
}

Monomial Monomial::g_var(EdgeId edge, int exponent) {
    Monomial m;
    if (exponent > 0) m.g.emplace_back(edge, exponent);
    return m;
}

int Monomial::total_degree() const {
    int d = 0;
    for (const auto& f : x) d += f.second;
    for (const auto& f : g) d += f.second;
    return d;
}

Monomial operator*(const Monomial& a, const Monomial& b) {
    Monomial m;
    m.x = merge_factors(a.x, b.x);
    m.g = merge_factors(a.g, b.g);
    return m;
}

MVPoly::MVPoly(long long constant) : MVPoly(Integer(constant)) {}

MVPoly::MVPoly(const Integer& constant) {
    if (constant != 0) terms_.emplace(Monomial{}, constant);
}

MVPoly MVPoly::x(const WeightKey& key) { return term(Monomial::x_var(key), 1); }

MVPoly MVPoly::g(EdgeId edge) { return term(Monomial::g_var(edge), 1); }

MVPoly MVPoly::term(Monomial m, Integer coeff) {
    MVPoly p;
    if (coeff != 0) p.terms_.emplace(std::move(m), std::move(coeff));
    return p;
}

Integer MVPoly::coefficient(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Integer(0) : it->second;
}

void MVPoly::add_term(const Monomial& m, const Integer& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

MVPoly& MVPoly::operator+=(const MVPoly& other) {
    for (const auto& [m, c] : other.terms_) add_term(m, c);
    return *this;
}

MVPoly& MVPoly::operator-=(const MVPoly& other) {
    for (const auto& [m, c] : other.terms_) add_term(m, -c);
    return *this;
}

MVPoly& MVPoly::operator*=(const MVPoly& other) {
    *this = *this * other;
    return *this;
}

MVPoly operator*(const MVPoly& a, const MVPoly& b) {
    MVPoly out;
    for (const auto& [ma, ca] : a.terms_) {
        for (const auto& [mb, cb] : b.terms_) out.add_term(ma * mb, ca * cb);
    }
    return out;
}

MVPoly operator-(const MVPoly& a) {
    MVPoly out;
    for (const auto& [m, c] : a.terms_) out.terms_.emplace(m, -c);
    return out;
}

MVPoly poly_add(const MVPoly& p, const MVPoly& q) { return p + q; }
MVPoly poly_mul(const MVPoly& p, const MVPoly& q) { return p * q; }
MVPoly poly_scale(const MVPoly& p, const Integer& c) { return p * MVPoly(c); }

std::string x_variable_name(const WeightKey& key) { return "x[" + key.repr + "]"; }
std::string g_variable_name(EdgeId edge) { return "g[" + std::to_string(edge) + "]"; }

std::string to_string(const MVPoly& p) {
    if (p.is_zero()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [m, c] : p.terms()) {
        Integer magnitude = c < 0 ? Integer(-c) : c;
        if (first) {
            if (c < 0) out += "-";
        } else {
            out += c < 0 ? " - " : " + ";
        }
        first = false;
        std::vector<std::string> factors;
        if (magnitude != 1 || (m.x.empty() && m.g.empty())) factors.push_back(magnitude.str());
        for (const auto& [key, e] : m.x) {
            factors.push_back(x_variable_name(key) + (e > 1 ? "^" + std::to_string(e) : ""));
        }
        for (const auto& [edge, e] : m.g) {
            factors.push_back(g_variable_name(edge) + (e > 1 ? "^" + std::to_string(e) : ""));
        }
        for (std::size_t i = 0; i < factors.size(); ++i) {
            if (i) out += "*";
            out += factors[i];
        }
    }
    return out;
}

}  // namespace pottslist
