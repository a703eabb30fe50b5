#pragma once

#include <cstddef>
#include <ostream>
#include <string>
#include <string_view>

#include "slmn/errors.hpp"
#include "slmn/rational.hpp"

namespace slmn {

// A weight (l^1..l^m | u^1..u^n) on the diagonal Cartan. Two weights are equal when they
// differ by a rational multiple of (1,...,1|-1,...,-1).
struct Weight {
    std::size_t m = 0;
    Coords coords;

    Weight() = default;
    Weight(std::size_t m_, Coords c) : m(m_), coords(std::move(c)) {}

    std::size_t n() const { return coords.size() - m; }
    std::size_t size() const { return coords.size(); }
    const Rational& operator[](std::size_t i) const { return coords[i]; }
    Rational& operator[](std::size_t i) { return coords[i]; }

    // 1-based accessors matching the usual notation.
    const Rational& lambda(std::size_t i) const { return coords.at(i - 1); }
    const Rational& mu(std::size_t k) const { return coords.at(m + k - 1); }

    bool same_as(const Weight& o) const { return m == o.m && coords == o.coords; }
};

inline Weight zero_weight(std::size_t m, std::size_t n) { return Weight(m, Coords(m + n, Rational(0))); }

// t * (1,...,1|-1,...,-1)
inline Weight shift_vector(std::size_t m, std::size_t n, const Rational& t = 1) {
    Coords c(m + n);
    for (std::size_t i = 0; i < m + n; ++i) c[i] = i < m ? t : Rational(-t);
    return Weight(m, std::move(c));
}

inline void require_same_shape(const Weight& a, const Weight& b) {
    if (a.m != b.m || a.size() != b.size())
        throw Error(ErrorCode::LengthMismatch, "weights of different shape");
}

inline Weight operator+(const Weight& a, const Weight& b) {
    require_same_shape(a, b);
    Weight r = a;
    for (std::size_t i = 0; i < r.size(); ++i) r[i] += b[i];
    return r;
}

inline Weight operator-(const Weight& a, const Weight& b) {
    require_same_shape(a, b);
    Weight r = a;
    for (std::size_t i = 0; i < r.size(); ++i) r[i] -= b[i];
    return r;
}

inline Weight operator*(const Rational& s, const Weight& a) {
    Weight r = a;
    for (auto& c : r.coords) c *= s;
    return r;
}

inline bool operator==(const Weight& a, const Weight& b) {
    if (a.m != b.m || a.size() != b.size()) return false;
    if (a.size() == 0) return true;
    Rational t = a.m > 0 ? Rational(a[0] - b[0]) : Rational(b[0] - a[0]);
    for (std::size_t i = 0; i < a.size(); ++i) {
        Rational d = a[i] - b[i];
        if (d != (i < a.m ? t : Rational(-t))) return false;
    }
    return true;
}

inline bool operator!=(const Weight& a, const Weight& b) { return !(a == b); }

// Shift representative with u^n = target.
inline Weight with_last_delta(const Weight& w, const Rational& target) {
    Rational t = w.coords.back() - target;
    return w + shift_vector(w.m, w.n(), t);
}

inline std::string to_string(const Weight& w) {
    std::string out;
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (i > 0) out += (i == w.m) ? "|" : ",";
        out += to_string(w[i]);
    }
    if (w.m == w.size()) out += "|";
    return out;
}

inline std::ostream& operator<<(std::ostream& os, const Weight& w) { return os << to_string(w); }

namespace detail {
inline std::vector<std::string_view> split(std::string_view s, char sep) {
    std::vector<std::string_view> out;
    std::size_t start = 0;
    while (true) {
        auto pos = s.find(sep, start);
        out.push_back(s.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start));
        if (pos == std::string_view::npos) break;
        start = pos + 1;
    }
    return out;
}
}  // namespace detail

inline Coords parse_rational_list(std::string_view text) {
    Coords out;
    for (auto tok : detail::split(text, ',')) out.push_back(parse_rational(tok));
    return out;
}

// "l1,...,lm|u1,...,un"
inline Weight parse_weight(std::string_view text) {
    auto bar = text.find('|');
    if (bar == std::string_view::npos || text.find('|', bar + 1) != std::string_view::npos)
        throw Error(ErrorCode::Parse, "weight must contain exactly one '|': '" + std::string(text) + "'");
    Coords left = parse_rational_list(text.substr(0, bar));
    Coords right = parse_rational_list(text.substr(bar + 1));
    std::size_t m = left.size();
    left.insert(left.end(), right.begin(), right.end());
    return Weight(m, std::move(left));
}

}  // namespace slmn
