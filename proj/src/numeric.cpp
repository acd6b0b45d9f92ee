#include "pottslist/numeric.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <cmath>
#include <limits>

#include "pottslist/errors.hpp"

namespace pottslist {

namespace {

bool all_digits(std::string_view s) {
    return !s.empty() && std::all_of(s.begin(), s.end(), [](char c) { return c >= '0' && c <= '9'; });
}

// Boost reads a leading 0 as an octal prefix.
Integer decimal_integer(std::string_view digits) {
    while (digits.size() > 1 && digits.front() == '0') digits.remove_prefix(1);
    return Integer{std::string(digits.empty() ? "0" : digits)};
}

Integer pow10(unsigned exponent) {
    Integer result = 1;
    for (unsigned i = 0; i < exponent; ++i) result *= 10;
    return result;
}

}  // namespace

Rational parse_rational(std::string_view text) {
    auto fail = [&]() -> ParseError { return ParseError("not an exact real literal: '" + std::string(text) + "'"); };
    std::string_view s = text;
    if (s.empty()) throw fail();

    if (auto slash = s.find('/'); slash != std::string_view::npos) {
        std::string_view num = s.substr(0, slash);
        std::string_view den = s.substr(slash + 1);
        bool negative = false;
        if (!num.empty() && (num.front() == '-' || num.front() == '+')) {
            negative = num.front() == '-';
            num.remove_prefix(1);
        }
        if (!all_digits(num) || !all_digits(den)) throw fail();
        Integer d = decimal_integer(den);
        if (d == 0) throw fail();
        Integer n = decimal_integer(num);
        return Rational(negative ? Integer(-n) : n, d);
    }

    bool negative = false;
    if (s.front() == '-' || s.front() == '+') {
        negative = s.front() == '-';
        s.remove_prefix(1);
    }
    long exponent = 0;
    if (auto e = s.find_first_of("eE"); e != std::string_view::npos) {
        std::string_view exp_part = s.substr(e + 1);
        s = s.substr(0, e);
        bool exp_negative = false;
        if (!exp_part.empty() && (exp_part.front() == '-' || exp_part.front() == '+')) {
            exp_negative = exp_part.front() == '-';
            exp_part.remove_prefix(1);
        }
        if (!all_digits(exp_part) || exp_part.size() > 6) throw fail();
        exponent = std::stol(std::string(exp_part));
        if (exp_negative) exponent = -exponent;
    }
    std::string_view int_part = s;
    std::string_view frac_part;
    if (auto dot = s.find('.'); dot != std::string_view::npos) {
        int_part = s.substr(0, dot);
        frac_part = s.substr(dot + 1);
    }
    if (int_part.empty() && frac_part.empty()) throw fail();
    if (!int_part.empty() && !all_digits(int_part)) throw fail();
    if (!frac_part.empty() && !all_digits(frac_part)) throw fail();

    std::string digits = std::string(int_part) + std::string(frac_part);
    Integer mantissa = decimal_integer(digits);
    if (negative) mantissa = -mantissa;
    exponent -= static_cast<long>(frac_part.size());
    if (exponent >= 0) return Rational(mantissa * pow10(static_cast<unsigned>(exponent)));
    return Rational(mantissa, pow10(static_cast<unsigned>(-exponent)));
}

Rational rational_from_double(double value) {
    if (!std::isfinite(value)) throw ParseError("non-finite number");
    std::array<char, 64> buf{};
    auto [end, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), value);
    if (ec != std::errc{}) throw ParseError("cannot render number");
    return parse_rational(std::string_view(buf.data(), static_cast<std::size_t>(end - buf.data())));
}

std::string format_rational(const Rational& value) {
    if (value == 0) return "0";
    Integer num = boost::multiprecision::numerator(value);
    Integer den = boost::multiprecision::denominator(value);
    unsigned twos = 0, fives = 0;
    Integer rest = den;
    while (rest % 2 == 0) {
        rest /= 2;
        ++twos;
    }
    while (rest % 5 == 0) {
        rest /= 5;
        ++fives;
    }
    if (rest != 1) return num.str() + "/" + den.str();

    unsigned places = std::max(twos, fives);
    Integer scaled = num * pow10(places) / den;
    bool negative = scaled < 0;
    std::string digits = (negative ? Integer(-scaled) : scaled).str();
    if (places > 0) {
        if (digits.size() <= places) digits.insert(0, places - digits.size() + 1, '0');
        digits.insert(digits.size() - places, ".");
        while (digits.back() == '0') digits.pop_back();
        if (digits.back() == '.') digits.pop_back();
    }
    return negative ? "-" + digits : digits;
}

double to_double(const Rational& value) { return value.convert_to<double>(); }

bool approx_equal(double a, double b, double rel, double abs_floor) {
    double scale = std::max(std::fabs(a), std::fabs(b));
    return std::fabs(a - b) <= std::max(abs_floor, rel * scale);
}

}  // namespace pottslist
