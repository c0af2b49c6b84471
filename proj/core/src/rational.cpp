#include "elect/rational.hpp"

#include <cctype>
#include <cstdlib>

namespace elect {

std::string fraction_string(const Rational& r) {
    return numerator(r).str() + "/" + denominator(r).str();
}

std::string decimal_string(const Rational& r, int places) {
    BigInt num = numerator(r);
    BigInt den = denominator(r);
    bool negative = num < 0;
    if (negative) num = -num;

    BigInt scale = 1;
    for (int i = 0; i < places; ++i) scale *= 10;

    // Round half away from zero at the last kept digit.
    BigInt scaled = num * scale;
    BigInt q = scaled / den;
    BigInt rem = scaled % den;
    if (rem * 2 >= den) ++q;

    BigInt whole = q / scale;
    BigInt frac = q % scale;

    std::string out = negative && (whole != 0 || frac != 0) ? "-" : "";
    out += whole.str();
    if (places > 0) {
        std::string digits = frac.str();
        out += "." + std::string(static_cast<size_t>(places) - digits.size(), '0') + digits;
    }
    return out;
}

std::optional<Rational> parse_fraction(const std::string& text) {
    if (text.empty()) return std::nullopt;
    auto slash = text.find('/');
    auto parse_int = [](const std::string& s) -> std::optional<BigInt> {
        if (s.empty()) return std::nullopt;
        size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
        if (i == s.size()) return std::nullopt;
        for (; i < s.size(); ++i)
            if (!std::isdigit(static_cast<unsigned char>(s[i]))) return std::nullopt;
        return BigInt(s);
    };
    if (slash == std::string::npos) {
        auto p = parse_int(text);
        if (!p) return std::nullopt;
        return Rational(*p);
    }
    auto p = parse_int(text.substr(0, slash));
    auto q = parse_int(text.substr(slash + 1));
    if (!p || !q || *q == 0) return std::nullopt;
    return Rational(*p, *q);
}

BigInt floor_rational(const Rational& r) {
    BigInt num = numerator(r);
    BigInt den = denominator(r);
    BigInt q = num / den;
    if (num < 0 && num % den != 0) --q;
    return q;
}

}  // namespace elect
