#pragma once

#include <algorithm>
#include <cctype>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "slmn/errors.hpp"
#include "slmn/rational.hpp"
#include "slmn/weight.hpp"

namespace slmn {

/// Algebra descriptor: sl(m|n) with the real form su(p,q|n), m = p + q.
struct Signature {
    std::size_t m = 0;
    std::size_t n = 0;
    std::size_t p = 0;
    std::size_t q = 0;

    std::size_t rank() const { return m + n; }
    bool compact() const { return p == 0 || q == 0; }
    bool operator==(const Signature&) const = default;
};

inline Signature make_signature(std::size_t p, std::size_t q, std::size_t n) {
    Signature s{p + q, n, p, q};
    if (s.m == 0 || s.n == 0) throw Error(ErrorCode::InvalidSignature, "m and n must be positive");
    if (s.m + s.n <= 2) throw Error(ErrorCode::InvalidSignature, "sl(1|1) is excluded (need m + n > 2)");
    return s;
}

enum class Parity { Even, Odd };

enum class PositiveSystemKind { Standard, AntiStandard, NonStandard };

inline const char* kind_name(PositiveSystemKind k) {
    switch (k) {
        case PositiveSystemKind::Standard: return "standard";
        case PositiveSystemKind::AntiStandard: return "antistandard";
        case PositiveSystemKind::NonStandard: return "nonstandard";
    }
    return "?";
}

/// The root e_a - e_b in gl(m|n) coordinates (0-based slots; slots >= m are the delta block).
struct Root {
    std::vector<int> coords;
    Parity parity = Parity::Even;
    std::size_t a = 0;
    std::size_t b = 0;
    std::size_t m = 0;

    bool odd() const { return parity == Parity::Odd; }
    Coords as_coords() const { return Coords(coords.begin(), coords.end()); }
    Weight as_weight() const { return Weight(m, as_coords()); }
    Root negated() const;
    bool operator==(const Root& o) const { return coords == o.coords; }
};

inline Root make_root(std::size_t m, std::size_t n, std::size_t a, std::size_t b) {
    if (a == b || a >= m + n || b >= m + n) throw Error(ErrorCode::LengthMismatch, "bad root indices");
    Root r;
    r.coords.assign(m + n, 0);
    r.coords[a] = 1;
    r.coords[b] = -1;
    r.parity = ((a < m) != (b < m)) ? Parity::Odd : Parity::Even;
    r.a = a;
    r.b = b;
    r.m = m;
    return r;
}

inline Root Root::negated() const { return make_root(m, coords.size() - m, b, a); }

// Named constructors in the usual 1-based notation.
inline Root eps_minus_eps(const Signature& s, std::size_t i, std::size_t j) { return make_root(s.m, s.n, i - 1, j - 1); }
inline Root delta_minus_delta(const Signature& s, std::size_t k, std::size_t l) {
    return make_root(s.m, s.n, s.m + k - 1, s.m + l - 1);
}
inline Root eps_minus_delta(const Signature& s, std::size_t i, std::size_t k) {
    return make_root(s.m, s.n, i - 1, s.m + k - 1);
}
inline Root delta_minus_eps(const Signature& s, std::size_t k, std::size_t i) {
    return make_root(s.m, s.n, s.m + k - 1, i - 1);
}

inline std::string to_string(const Root& r) {
    auto name = [&](std::size_t idx) {
        return idx < r.m ? "e" + std::to_string(idx + 1) : "d" + std::to_string(idx - r.m + 1);
    };
    return name(r.a) + "-" + name(r.b);
}

/// Parses "e1-d2", "d1-e2", "e1-e2", "d1-d2" (also "-e2+d1").
inline Root parse_root(const Signature& s, std::string text) {
    text.erase(std::remove_if(text.begin(), text.end(), [](unsigned char c) { return std::isspace(c); }),
               text.end());
    auto fail = [&]() -> Root { throw Error(ErrorCode::Parse, "bad root '" + text + "'"); };
    auto slot = [&](const std::string& tok) -> std::size_t {
        if (tok.size() < 2 || (tok[0] != 'e' && tok[0] != 'd')) fail();
        std::size_t idx = 0;
        for (std::size_t i = 1; i < tok.size(); ++i) {
            if (!std::isdigit(static_cast<unsigned char>(tok[i]))) fail();
            idx = idx * 10 + static_cast<std::size_t>(tok[i] - '0');
        }
        std::size_t limit = tok[0] == 'e' ? s.m : s.n;
        if (idx == 0 || idx > limit) fail();
        return tok[0] == 'e' ? idx - 1 : s.m + idx - 1;
    };
    if (!text.empty() && text[0] == '-') {
        auto plus = text.find('+');
        if (plus == std::string::npos) fail();
        return make_root(s.m, s.n, slot(text.substr(plus + 1)), slot(text.substr(1, plus - 1)));
    }
    auto minus = text.find('-');
    if (minus == std::string::npos) fail();
    return make_root(s.m, s.n, slot(text.substr(0, minus)), slot(text.substr(minus + 1)));
}

namespace detail {
template <class T>
Rational as_rational(const T& v) {
    return Rational(v);
}
}  // namespace detail

/// Supertrace form: sum_{i<=m} u_i v_i - sum_{k>m} u_k v_k.
template <class U, class V>
Rational form(const U& u, const V& v, std::size_t m) {
    if (u.size() != v.size()) throw Error(ErrorCode::LengthMismatch, "form: tuples of different length");
    if (m > u.size()) throw Error(ErrorCode::LengthMismatch, "form: m exceeds tuple length");
    Rational s = 0;
    for (std::size_t i = 0; i < u.size(); ++i) {
        Rational t = detail::as_rational(u[i]) * detail::as_rational(v[i]);
        if (i < m) s += t;
        else s -= t;
    }
    return s;
}

inline Rational form(const Weight& u, const Weight& v) { return form(u.coords, v.coords, u.m); }
inline Rational form(const Weight& u, const Root& r) { return form(u.coords, r.coords, u.m); }
inline Rational form(const Root& r, const Weight& u) { return form(u.coords, r.coords, u.m); }
inline Rational form(const Root& r, const Root& s) { return form(r.coords, s.coords, r.m); }

/// A positive system, stored as a total order on the m+n slots: e_a - e_b is positive iff a precedes b.
struct PositiveSystem {
    Signature signature;
    std::optional<PositiveSystemKind> kind;
    std::vector<std::size_t> order;
    std::vector<Root> even_positive;
    std::vector<Root> odd_positive;
    Weight rho0;
    Weight rho1;
    Weight rho;

    std::size_t position(std::size_t slot) const {
        return static_cast<std::size_t>(std::find(order.begin(), order.end(), slot) - order.begin());
    }
    bool is_positive(const Root& r) const { return position(r.a) < position(r.b); }
    bool contains(const Root& r) const {
        const auto& pool = r.odd() ? odd_positive : even_positive;
        return std::find(pool.begin(), pool.end(), r) != pool.end();
    }
    std::vector<Root> positive_roots() const {
        std::vector<Root> all = even_positive;
        all.insert(all.end(), odd_positive.begin(), odd_positive.end());
        return all;
    }
};

inline std::vector<std::size_t> named_order(const Signature& s, PositiveSystemKind kind) {
    std::vector<std::size_t> eps_p, eps_q, delta;
    for (std::size_t i = 0; i < s.p; ++i) eps_p.push_back(i);
    for (std::size_t i = s.p; i < s.m; ++i) eps_q.push_back(i);
    for (std::size_t k = 0; k < s.n; ++k) delta.push_back(s.m + k);
    std::vector<std::size_t> order;
    auto append = [&](const std::vector<std::size_t>& v) { order.insert(order.end(), v.begin(), v.end()); };
    switch (kind) {
        case PositiveSystemKind::Standard: append(eps_p); append(eps_q); append(delta); break;
        case PositiveSystemKind::AntiStandard: append(delta); append(eps_p); append(eps_q); break;
        case PositiveSystemKind::NonStandard: append(eps_p); append(delta); append(eps_q); break;
    }
    return order;
}

/// Builds the positive system determined by an arbitrary slot order that keeps each block increasing.
inline PositiveSystem positive_system_from_order(const Signature& s, std::vector<std::size_t> order) {
    PositiveSystem ps;
    ps.signature = s;
    ps.order = std::move(order);
    const std::size_t N = s.rank();
    ps.rho0 = zero_weight(s.m, s.n);
    ps.rho1 = zero_weight(s.m, s.n);
    for (std::size_t i = 0; i < N; ++i) {
        for (std::size_t j = i + 1; j < N; ++j) {
            Root r = make_root(s.m, s.n, ps.order[i], ps.order[j]);
            Weight& acc = r.odd() ? ps.rho1 : ps.rho0;
            acc[r.a] += Rational(1, 2);
            acc[r.b] -= Rational(1, 2);
            (r.odd() ? ps.odd_positive : ps.even_positive).push_back(std::move(r));
        }
    }
    ps.rho = ps.rho0 - ps.rho1;
    for (auto k : {PositiveSystemKind::Standard, PositiveSystemKind::AntiStandard, PositiveSystemKind::NonStandard}) {
        if (k == PositiveSystemKind::NonStandard && s.compact()) continue;
        if (named_order(s, k) == ps.order) {
            ps.kind = k;
            break;
        }
    }
    return ps;
}

inline PositiveSystem build_positive_system(const Signature& s, PositiveSystemKind kind) {
    if (kind == PositiveSystemKind::NonStandard && s.compact())
        throw Error(ErrorCode::InvalidKind, "the non-standard system needs p >= 1 and q >= 1");
    PositiveSystem ps = positive_system_from_order(s, named_order(s, kind));
    ps.kind = kind;
    return ps;
}

/// r_alpha(beta) = beta - 2 (alpha,beta)/(alpha,alpha) alpha
inline Coords even_reflection(const Root& alpha, const Coords& beta) {
    if (alpha.odd()) throw Error(ErrorCode::NotEven, "even_reflection needs an even root, got " + to_string(alpha));
    if (beta.size() != alpha.coords.size()) throw Error(ErrorCode::LengthMismatch, "even_reflection");
    Rational c = 2 * form(alpha.coords, beta, alpha.m) / form(alpha, alpha);
    Coords out = beta;
    for (std::size_t i = 0; i < out.size(); ++i) out[i] -= c * alpha.coords[i];
    return out;
}

inline Weight even_reflection(const Root& alpha, const Weight& beta) {
    return Weight(beta.m, even_reflection(alpha, beta.coords));
}

inline std::vector<Root> simple_roots(const PositiveSystem& ps) {
    std::vector<Root> out;
    for (std::size_t i = 0; i + 1 < ps.order.size(); ++i)
        out.push_back(make_root(ps.signature.m, ps.signature.n, ps.order[i], ps.order[i + 1]));
    return out;
}

inline bool is_simple(const PositiveSystem& ps, const Root& r) {
    return ps.position(r.a) + 1 == ps.position(r.b);
}

/// Height with respect to the simple roots of ps: e_a - e_b has height pos(b) - pos(a).
template <class V>
Integer height(const PositiveSystem& ps, const V& v) {
    Rational h = 0;
    for (std::size_t c = 0; c < v.size(); ++c) h -= Rational(v[c]) * Rational(static_cast<long>(ps.position(c)));
    if (!is_integer(h)) throw Error(ErrorCode::NotEven, "height of a non-lattice vector");
    return boost::multiprecision::numerator(h);
}

inline PositiveSystem odd_reflection_system(const PositiveSystem& ps, const Root& theta) {
    if (!theta.odd() || form(theta, theta) != 0)
        throw Error(ErrorCode::NotOddIsotropic, to_string(theta) + " is not an odd isotropic root");
    if (!is_simple(ps, theta)) throw Error(ErrorCode::NotSimple, to_string(theta) + " is not simple");
    std::vector<std::size_t> order = ps.order;
    std::swap(order[ps.position(theta.a)], order[ps.position(theta.b)]);
    return positive_system_from_order(ps.signature, std::move(order));
}

/// Highest weight after the odd reflection at theta: Lambda - theta unless (Lambda, theta) = 0.
inline Weight odd_reflect_weight(const Weight& lambda, const Root& theta) {
    if (!theta.odd() || form(theta, theta) != 0)
        throw Error(ErrorCode::NotOddIsotropic, to_string(theta) + " is not an odd isotropic root");
    if (form(lambda, theta) == 0) return lambda;
    return lambda - theta.as_weight();
}

}  // namespace slmn
