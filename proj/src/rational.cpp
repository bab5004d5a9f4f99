#include "wci/rational.hpp"

#include <charconv>
#include <stdexcept>

namespace wci {

Rational rational_pow(const Rational& base, long exp) {
    if (exp == 0) return Rational(1);
    if (base == 0 && exp < 0) throw std::domain_error("rational_pow: 0^negative");
    Rational acc(1);
    Rational b = exp > 0 ? base : Rational(1) / base;
    long e = exp > 0 ? exp : -exp;
    while (e > 0) {
        if (e & 1) acc *= b;
        b *= b;
        e >>= 1;
    }
    return acc;
}

std::string rational_str(const Rational& value) {
    const BigInt num = boost::multiprecision::numerator(value);
    const BigInt den = boost::multiprecision::denominator(value);
    if (den == 1) return num.str();
    return num.str() + "/" + den.str();
}

std::optional<Rational> parse_rational(std::string_view text) {
    if (text.empty()) return std::nullopt;
    const auto slash = text.find('/');
    const auto digits_ok = [](std::string_view s) {
        if (s.empty()) return false;
        std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
        if (i == s.size()) return false;
        for (; i < s.size(); ++i)
            if (s[i] < '0' || s[i] > '9') return false;
        return true;
    };
    try {
        if (slash == std::string_view::npos) {
            if (!digits_ok(text)) return std::nullopt;
            return Rational(BigInt(std::string(text)));
        }
        const auto p = text.substr(0, slash);
        const auto q = text.substr(slash + 1);
        if (!digits_ok(p) || !digits_ok(q)) return std::nullopt;
        BigInt den{std::string(q)};
        if (den == 0) return std::nullopt;
        return Rational(BigInt(std::string(p)), den);
    } catch (const std::exception&) {
        return std::nullopt;
    }
}

} // namespace wci
