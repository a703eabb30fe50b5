#pragma once

#include <algorithm>
#include <cstddef>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "slmn/algebra_core.hpp"
#include "slmn/errors.hpp"
#include "slmn/rational.hpp"
#include "slmn/weight.hpp"

namespace slmn {

/// Lambda(x) = (0,-a_2,..,-a_m | b_1,..,b_{n-1},0) + x/2 (1,..,1|1,..,1)
struct FDFamily {
    std::size_t m = 0;
    std::size_t n = 0;
    std::vector<long> a;  // a_2..a_m
    std::vector<long> b;  // b_1..b_{n-1}
    Rational x = 0;

    long a_at(std::size_t i) const { return i <= 1 ? 0 : a.at(i - 2); }
    long b_at(std::size_t k) const { return k >= n ? 0 : b.at(k - 1); }
};

/// Lambda = (0,a_2,..,a_{m-1},0 | b_1,..,b_{n-1},0) + lambda/2 (1^p,-1^q | 0) + x/2 (1,..,1|1,..,1)
struct IFDFamily {
    std::size_t p = 0;
    std::size_t q = 0;
    std::size_t n = 0;
    std::vector<long> a;  // a_2..a_{m-1}
    std::vector<long> b;  // b_1..b_{n-1}
    Rational lambda = 0;
    Rational x = 0;

    std::size_t m() const { return p + q; }
    long a_at(std::size_t i) const { return (i <= 1 || i >= m()) ? 0 : a.at(i - 2); }
    long b_at(std::size_t k) const { return k >= n ? 0 : b.at(k - 1); }
    Signature signature() const { return Signature{m(), n, p, q}; }
};

struct Indices {
    std::size_t i0 = 0;
    std::optional<std::size_t> j0;
    std::size_t k0 = 0;
};

inline void validate(const FDFamily& f) {
    if (f.m == 0 || f.n == 0) throw Error(ErrorCode::InvalidFamily, "m and n must be positive");
    if (f.a.size() != f.m - 1) throw Error(ErrorCode::InvalidFamily, "expected a_2..a_m");
    if (f.b.size() != f.n - 1) throw Error(ErrorCode::InvalidFamily, "expected b_1..b_{n-1}");
    for (std::size_t i = 2; i <= f.m; ++i)
        if (f.a_at(i) < f.a_at(i - 1)) throw Error(ErrorCode::InvalidFamily, "need 0 <= a_2 <= ... <= a_m");
    for (std::size_t k = 1; k < f.n; ++k)
        if (f.b_at(k) < f.b_at(k + 1)) throw Error(ErrorCode::InvalidFamily, "need b_1 >= ... >= b_{n-1} >= 0");
}

inline void validate(const IFDFamily& f) {
    if (f.p == 0 || f.q == 0 || f.n == 0) throw Error(ErrorCode::InvalidFamily, "need p, q, n >= 1");
    if (f.a.size() != f.m() - 2) throw Error(ErrorCode::InvalidFamily, "expected a_2..a_{m-1}");
    if (f.b.size() != f.n - 1) throw Error(ErrorCode::InvalidFamily, "expected b_1..b_{n-1}");
    for (std::size_t i = 2; i <= f.p; ++i)
        if (f.a_at(i) > f.a_at(i - 1)) throw Error(ErrorCode::InvalidFamily, "need 0 >= a_2 >= ... >= a_p");
    for (std::size_t i = f.p + 1; i < f.m(); ++i)
        if (f.a_at(i) < f.a_at(i + 1)) throw Error(ErrorCode::InvalidFamily, "need a_{p+1} >= ... >= a_{m-1} >= 0");
    for (std::size_t k = 1; k < f.n; ++k)
        if (f.b_at(k) < f.b_at(k + 1)) throw Error(ErrorCode::InvalidFamily, "need b_1 >= ... >= b_{n-1} >= 0");
}

inline Weight family_weight(const FDFamily& f) {
    validate(f);
    Weight w = zero_weight(f.m, f.n);
    Rational half = f.x / 2;
    for (std::size_t i = 1; i <= f.m; ++i) w[i - 1] = Rational(-f.a_at(i)) + half;
    for (std::size_t k = 1; k <= f.n; ++k) w[f.m + k - 1] = Rational(f.b_at(k)) + half;
    return w;
}

inline Weight family_weight(const IFDFamily& f) {
    validate(f);
    const std::size_t m = f.m();
    Weight w = zero_weight(m, f.n);
    Rational hx = f.x / 2, hl = f.lambda / 2;
    for (std::size_t i = 1; i <= m; ++i) w[i - 1] = Rational(f.a_at(i)) + (i <= f.p ? hl : Rational(-hl)) + hx;
    for (std::size_t k = 1; k <= f.n; ++k) w[m + k - 1] = Rational(f.b_at(k)) + hx;
    return w;
}

// Plateau indices read off a raw weight. i0: length of the initial run l^1 = l^i (inside the first
// p slots in the non-compact case). k0: smallest k with u^k = u^n. j0: length of the final run
// l^{m-j} = l^m inside the q-block, so j0 = q when the whole q-block is constant.
inline std::size_t plateau_k0(const Weight& w) {
    std::size_t n = w.n();
    std::size_t k0 = n;
    while (k0 > 1 && w.mu(k0 - 1) == w.mu(n)) --k0;
    return k0;
}

inline Indices fd_indices(const Weight& w) {
    Indices ix;
    std::size_t i0 = 1;
    while (i0 < w.m && w.lambda(i0 + 1) == w.lambda(1)) ++i0;
    ix.i0 = i0;
    ix.k0 = plateau_k0(w);
    return ix;
}

inline Indices ifd_indices(const Weight& w, const Signature& sig) {
    Indices ix;
    std::size_t i0 = 1;
    while (i0 < sig.p && w.lambda(i0 + 1) == w.lambda(1)) ++i0;
    ix.i0 = i0;
    std::size_t m = sig.m;
    std::size_t run = 1;
    while (run < sig.q && w.lambda(m - run) == w.lambda(m)) ++run;
    ix.j0 = run;
    ix.k0 = plateau_k0(w);
    return ix;
}

inline Indices indices(const FDFamily& f) {
    validate(f);
    return fd_indices(family_weight(f));
}

inline Indices indices(const IFDFamily& f) {
    validate(f);
    return ifd_indices(family_weight(f), f.signature());
}

/// Largest j for the conditions on -e_{m-j}+d_n, i.e. the run l^{m-j} = l^m.
inline std::size_t capped_j0(const Indices& ix, const Signature& sig) {
    return std::min(ix.j0.value_or(1), sig.q) - 1;
}

inline void require_shape(const Weight& w, const Signature& sig) {
    if (w.m != sig.m || w.n() != sig.n)
        throw Error(ErrorCode::LengthMismatch, "weight " + to_string(w) + " does not match sl(" +
                                                   std::to_string(sig.m) + "|" + std::to_string(sig.n) + ")");
}

/// Integral dominance for the compact part k: l^i - l^j in Z>=0 within 1..p and within p+1..m,
/// and u^k - u^l in Z>=0.
inline bool is_dominant_integral_even(const Weight& w, const Signature& sig) {
    require_shape(w, sig);
    auto step_ok = [](const Rational& d) { return is_integer(d) && d >= 0; };
    for (std::size_t i = 1; i < sig.m; ++i) {
        if (i == sig.p) continue;
        if (!step_ok(w.lambda(i) - w.lambda(i + 1))) return false;
    }
    for (std::size_t k = 1; k < sig.n; ++k)
        if (!step_ok(w.mu(k) - w.mu(k + 1))) return false;
    return true;
}

/// Membership of lambda = l^1 - l^m in the set of unitarizable highest weights of the even part.
inline bool ehw_contains(const Rational& lambda, std::size_t m, std::size_t i0, std::size_t j0) {
    long lo = -static_cast<long>(m) + static_cast<long>(std::max(i0, j0)) + 1;
    long hi = -static_cast<long>(m) + static_cast<long>(i0 + j0);
    if (lambda < lo) return true;
    return is_integer(lambda) && lambda >= lo && lambda <= hi;
}

inline bool even_unitarizable(const IFDFamily& f) {
    Indices ix = indices(f);
    return ehw_contains(f.lambda, f.m(), ix.i0, *ix.j0);
}

struct Violation {
    std::string condition;
    std::optional<Root> root;
    std::optional<Rational> margin;
    std::string detail;
};

struct UnitarityReport {
    bool holds = true;
    std::vector<Violation> violations;
};

inline Rational margin(const Weight& w, const PositiveSystem& ps, const Root& r) { return form(w + ps.rho, r); }

namespace detail {

inline void add(UnitarityReport& rep, std::string label, std::optional<Root> root, std::optional<Rational> mg,
                std::string detail) {
    rep.holds = false;
    rep.violations.push_back({std::move(label), std::move(root), std::move(mg), std::move(detail)});
}

inline void compact_dominance(UnitarityReport& rep, const Weight& w, const Signature& sig, const char* label) {
    for (std::size_t i = 1; i < sig.m; ++i) {
        if (i == sig.p) continue;
        Rational d = w.lambda(i) - w.lambda(i + 1);
        if (!is_integer(d) || d < 0)
            add(rep, label, eps_minus_eps(sig, i, i + 1), d, "l^i - l^{i+1} must be a non-negative integer");
    }
    for (std::size_t k = 1; k < sig.n; ++k) {
        Rational d = w.mu(k) - w.mu(k + 1);
        if (!is_integer(d) || d < 0)
            add(rep, label, delta_minus_delta(sig, k, k + 1), d, "u^k - u^{k+1} must be a non-negative integer");
    }
}

inline UnitarityReport compact_conditions(const Weight& w, const Signature& sig, const PositiveSystem& ps) {
    UnitarityReport rep;
    const std::size_t m = sig.m, n = sig.n;
    compact_dominance(rep, w, sig, "UC-a-g0");

    // (i) l^1 >= ... >= l^m >= -u^n >= ... >= -u^1
    for (std::size_t i = 1; i < m; ++i)
        if (w.lambda(i) < w.lambda(i + 1))
            add(rep, "UC-a-i", eps_minus_eps(sig, i, i + 1), w.lambda(i) - w.lambda(i + 1), "l^i >= l^{i+1}");
    if (w.lambda(m) + w.mu(n) < 0)
        add(rep, "UC-a-i", eps_minus_delta(sig, m, n), w.lambda(m) + w.mu(n), "l^m >= -u^n");
    for (std::size_t k = 1; k < n; ++k)
        if (w.mu(k) < w.mu(k + 1))
            add(rep, "UC-a-i", delta_minus_delta(sig, k, k + 1), w.mu(k) - w.mu(k + 1), "-u^{k+1} >= -u^k");

    std::vector<Rational> mk(n + 1);
    for (std::size_t k = 1; k <= n; ++k) mk[k] = margin(w, ps, eps_minus_delta(sig, m, k));

    // (ii) a vanishing margin at e_m - d_k forces positivity before k and u^k = u^n
    for (std::size_t k = 1; k <= n; ++k) {
        if (mk[k] != 0) continue;
        for (std::size_t j = 1; j < k; ++j)
            if (mk[j] <= 0)
                add(rep, "UC-a-ii", eps_minus_delta(sig, m, j), mk[j], "margin must be > 0 before a zero");
        if (k == n) continue;
        Rational tail = form(w, delta_minus_delta(sig, k, n).as_weight());
        if (tail != 0) add(rep, "UC-a-ii", delta_minus_delta(sig, k, n), tail, "(Lambda, d_k - d_n) must vanish");
    }

    // (iii) no zero margin forces all margins positive
    bool any_zero = false;
    for (std::size_t k = 1; k <= n; ++k) any_zero = any_zero || mk[k] == 0;
    if (!any_zero)
        for (std::size_t k = 1; k <= n; ++k)
            if (mk[k] < 0) add(rep, "UC-a-iii", eps_minus_delta(sig, m, k), mk[k], "margin must be > 0");
    return rep;
}

inline UnitarityReport noncompact_conditions(const Weight& w, const Signature& sig, const PositiveSystem& ps) {
    UnitarityReport rep;
    const std::size_t m = sig.m, n = sig.n, p = sig.p;
    Indices ix = ifd_indices(w, sig);

    compact_dominance(rep, w, sig, "UC-b-g0");
    Rational lam = w.lambda(1) - w.lambda(m);
    if (!ehw_contains(lam, m, ix.i0, *ix.j0))
        add(rep, "UC-b-ehw", eps_minus_eps(sig, 1, m), lam, "l^1 - l^m outside the unitary range of the even part");

    // (i) l^{p+1} >= ... >= l^m >= -u^n >= ... >= -u^1 >= l^1 >= ... >= l^p
    for (std::size_t i = p + 1; i < m; ++i)
        if (w.lambda(i) < w.lambda(i + 1))
            add(rep, "UC-b-i", eps_minus_eps(sig, i, i + 1), w.lambda(i) - w.lambda(i + 1), "l^i >= l^{i+1}");
    if (w.lambda(m) + w.mu(n) < 0)
        add(rep, "UC-b-i", delta_minus_eps(sig, n, m), w.lambda(m) + w.mu(n), "l^m >= -u^n");
    for (std::size_t k = 1; k < n; ++k)
        if (w.mu(k) < w.mu(k + 1))
            add(rep, "UC-b-i", delta_minus_delta(sig, k, k + 1), w.mu(k) - w.mu(k + 1), "-u^{k+1} >= -u^k");
    if (w.mu(1) + w.lambda(1) > 0)
        add(rep, "UC-b-i", eps_minus_delta(sig, 1, 1), -(w.mu(1) + w.lambda(1)), "-u^1 >= l^1");
    for (std::size_t i = 1; i < p; ++i)
        if (w.lambda(i) < w.lambda(i + 1))
            add(rep, "UC-b-i", eps_minus_eps(sig, i, i + 1), w.lambda(i) - w.lambda(i + 1), "l^i >= l^{i+1}");

    // (ii)
    for (std::size_t i = p + 1; i <= m; ++i) {
        Root r = delta_minus_eps(sig, n, i);
        if (margin(w, ps, r) == 0 && w.lambda(i) != w.lambda(m))
            add(rep, "UC-b-ii", r, Rational(0), "zero margin requires (Lambda, e_i - e_m) = 0");
    }
    // (iii)
    for (std::size_t i = 1; i <= p; ++i) {
        Root r = eps_minus_delta(sig, i, 1);
        if (margin(w, ps, r) == 0 && w.lambda(i) != w.lambda(1))
            add(rep, "UC-b-iii", r, Rational(0), "zero margin requires (Lambda, e_1 - e_i) = 0");
    }
    // (iv)
    {
        bool any_zero = false;
        for (std::size_t i = 1; i <= ix.i0; ++i) any_zero = any_zero || margin(w, ps, eps_minus_delta(sig, i, 1)) == 0;
        if (!any_zero)
            for (std::size_t i = 1; i <= ix.i0; ++i) {
                Root r = eps_minus_delta(sig, i, 1);
                Rational mg = margin(w, ps, r);
                if (mg > 0) add(rep, "UC-b-iv", r, mg, "margin must be < 0");
            }
    }
    // (v)
    {
        std::size_t jmax = capped_j0(ix, sig);
        bool any_zero = false;
        for (std::size_t j = 0; j <= jmax; ++j) any_zero = any_zero || margin(w, ps, delta_minus_eps(sig, n, m - j)) == 0;
        if (!any_zero)
            for (std::size_t j = 0; j <= jmax; ++j) {
                Root r = delta_minus_eps(sig, n, m - j);
                Rational mg = margin(w, ps, r);
                if (mg > 0) add(rep, "UC-b-v", r, mg, "margin must be < 0");
            }
    }
    return rep;
}

}  // namespace detail

inline UnitarityReport unitarity_conditions(const Weight& w, const Signature& sig, const PositiveSystem& ps) {
    require_shape(w, sig);
    if (ps.signature != sig) throw Error(ErrorCode::WrongSystem, "positive system built for another signature");
    auto expected = sig.compact() ? PositiveSystemKind::Standard : PositiveSystemKind::NonStandard;
    if (ps.kind != expected)
        throw Error(ErrorCode::WrongSystem, std::string("expected the ") + kind_name(expected) + " system");
    return sig.compact() ? detail::compact_conditions(w, sig, ps) : detail::noncompact_conditions(w, sig, ps);
}

}  // namespace slmn
