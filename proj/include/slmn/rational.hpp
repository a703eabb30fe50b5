#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cctype>
#include <string>
#include <string_view>
#include <vector>

#include "slmn/errors.hpp"

namespace slmn {

using Rational = boost::multiprecision::cpp_rational;
using Integer = boost::multiprecision::cpp_int;

/// Coordinates on the diagonal Cartan of gl(m|n): (eps_1..eps_m | delta_1..delta_n).
using Coords = std::vector<Rational>;

inline bool is_integer(const Rational& r) {
    return boost::multiprecision::denominator(r) == 1;
}

inline int sign(const Rational& r) {
    return r > 0 ? 1 : (r < 0 ? -1 : 0);
}

// Accepts "7", "-3", "5/2", "-1/4". Whitespace around the token is ignored.
inline Rational parse_rational(std::string_view text) {
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
    auto parse_int = [&](std::string_view s) -> Integer {
        if (s.empty()) throw Error(ErrorCode::Parse, "empty number in '" + std::string(text) + "'");
        std::size_t i = 0;
        bool neg = false;
        if (s[0] == '+' || s[0] == '-') {
            neg = s[0] == '-';
            i = 1;
        }
        if (i == s.size()) throw Error(ErrorCode::Parse, "bad number '" + std::string(text) + "'");
        Integer v = 0;
        for (; i < s.size(); ++i) {
            if (!std::isdigit(static_cast<unsigned char>(s[i])))
                throw Error(ErrorCode::Parse, "bad number '" + std::string(text) + "'");
            v = v * 10 + (s[i] - '0');
        }
        return neg ? Integer(-v) : v;
    };
    auto slash = text.find('/');
    if (slash == std::string_view::npos) return Rational(parse_int(text));
    Integer num = parse_int(text.substr(0, slash));
    Integer den = parse_int(text.substr(slash + 1));
    if (den == 0) throw Error(ErrorCode::Parse, "zero denominator in '" + std::string(text) + "'");
    return Rational(num, den);
}

inline std::string to_string(const Rational& r) {
    if (is_integer(r)) return boost::multiprecision::numerator(r).str();
    return boost::multiprecision::numerator(r).str() + "/" + boost::multiprecision::denominator(r).str();
}

}  // namespace slmn
