#pragma once

#include <algorithm>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "slmn/algebra_core.hpp"
#include "slmn/errors.hpp"
#include "slmn/rational.hpp"
#include "slmn/weight.hpp"
#include "slmn/weights.hpp"

namespace slmn {

enum class Case { Compact, Noncompact };

inline const char* case_name(Case c) { return c == Case::Compact ? "compact" : "noncompact"; }

struct Reason {
    std::string condition;
    std::optional<Root> root;
    std::optional<Rational> margin;
};

struct Verdict {
    bool unitarizable = false;
    Case case_ = Case::Compact;
    std::vector<Reason> reasons;
};

/// (Lambda + 2 rho, Lambda)
inline Rational casimir_eigenvalue(const Weight& lambda, const PositiveSystem& ps) {
    return form(lambda + Rational(2) * ps.rho, lambda);
}

inline Rational dirac_margin(const Weight& lambda, const Root& alpha, const PositiveSystem& ps) {
    if (!alpha.odd() || !ps.contains(alpha))
        throw Error(ErrorCode::NotOddPositive, to_string(alpha) + " is not an odd positive root");
    return form(lambda + ps.rho, alpha);
}

/// Casimir(Lambda - alpha) >= Casimir(Lambda); equals dirac_margin <= 0 by isotropy.
inline bool dirac_inequality_equiv(const Weight& lambda, const Root& alpha, const PositiveSystem& ps) {
    if (!alpha.odd() || !ps.contains(alpha))
        throw Error(ErrorCode::NotOddPositive, to_string(alpha) + " is not an odd positive root");
    return casimir_eigenvalue(lambda - alpha.as_weight(), ps) >= casimir_eigenvalue(lambda, ps);
}

namespace detail {

inline Verdict from_violations(const UnitarityReport& rep, Case c) {
    Verdict v;
    v.unitarizable = false;
    v.case_ = c;
    for (const auto& viol : rep.violations) v.reasons.push_back({viol.condition, viol.root, viol.margin});
    return v;
}

}  // namespace detail

inline Verdict classify_fd(const Weight& lambda, const Signature& sig) {
    if (!sig.compact()) throw Error(ErrorCode::WrongCase, "classify_fd needs p = 0 or q = 0");
    require_shape(lambda, sig);
    PositiveSystem ps = build_positive_system(sig, PositiveSystemKind::Standard);
    UnitarityReport rep = unitarity_conditions(lambda, sig, ps);
    if (!rep.holds) return detail::from_violations(rep, Case::Compact);

    Verdict v;
    v.case_ = Case::Compact;
    const std::size_t m = sig.m, n = sig.n;
    std::size_t k0 = plateau_k0(lambda);
    for (std::size_t k = k0; k <= n; ++k) {
        Root r = eps_minus_delta(sig, m, k);
        Rational mg = margin(lambda, ps, r);
        if (mg == 0) {
            v.unitarizable = true;
            v.reasons.push_back({"FD-b-i", r, mg});
            return v;
        }
    }
    Root last = eps_minus_delta(sig, m, n);
    Rational mg = margin(lambda, ps, last);
    v.unitarizable = mg > 0;
    v.reasons.push_back({"FD-b-ii", last, mg});
    return v;
}

inline Verdict classify_ifd(const Weight& lambda, const Signature& sig) {
    if (sig.compact()) throw Error(ErrorCode::WrongCase, "classify_ifd needs p >= 1 and q >= 1");
    require_shape(lambda, sig);
    PositiveSystem ps = build_positive_system(sig, PositiveSystemKind::NonStandard);
    UnitarityReport rep = unitarity_conditions(lambda, sig, ps);
    if (!rep.holds) return detail::from_violations(rep, Case::Noncompact);

    const std::size_t m = sig.m, n = sig.n;
    Indices ix = ifd_indices(lambda, sig);
    const std::size_t jmax = capped_j0(ix, sig);

    Root bm = delta_minus_eps(sig, n, m);  // -e_m + d_n
    Root a1 = eps_minus_delta(sig, 1, 1);  // e_1 - d_1
    Rational mb = margin(lambda, ps, bm);
    Rational ma = margin(lambda, ps, a1);

    std::optional<Reason> zero_a, zero_b;
    for (std::size_t i = 1; i <= ix.i0 && !zero_a; ++i) {
        Root r = eps_minus_delta(sig, i, 1);
        if (margin(lambda, ps, r) == 0) zero_a = Reason{"", r, Rational(0)};
    }
    for (std::size_t j = 0; j <= jmax && !zero_b; ++j) {
        Root r = delta_minus_eps(sig, n, m - j);
        if (margin(lambda, ps, r) == 0) zero_b = Reason{"", r, Rational(0)};
    }

    Verdict v;
    v.case_ = Case::Noncompact;
    auto fire = [&](const char* label, const Reason& x, const Reason& y) {
        v.unitarizable = true;
        v.reasons.push_back({label, x.root, x.margin});
        v.reasons.push_back({label, y.root, y.margin});
        return v;
    };
    Reason rb{"", bm, mb}, ra{"", a1, ma};
    if (mb < 0 && zero_a) return fire("IFD-b-i", rb, *zero_a);
    if (zero_b && zero_a) return fire("IFD-b-ii", *zero_b, *zero_a);
    if (zero_b && ma < 0) return fire("IFD-b-iii", *zero_b, ra);
    if (mb < 0 && ma < 0) return fire("IFD-b-iv", rb, ra);

    v.unitarizable = false;
    v.reasons.push_back({"IFD-b-iv", bm, mb});
    v.reasons.push_back({"IFD-b-iv", a1, ma});
    return v;
}

inline Verdict classify(const Weight& lambda, const Signature& sig, bool psl = false) {
    require_shape(lambda, sig);
    if (psl) {
        if (sig.m != sig.n) throw Error(ErrorCode::PslConstraintViolated, "psl mode needs m = n");
        Rational s = 0;
        for (std::size_t i = 1; i <= sig.m; ++i) s += lambda.lambda(i);
        for (std::size_t k = 1; k <= sig.n; ++k) s -= lambda.mu(k);
        if (s != 0)
            throw Error(ErrorCode::PslConstraintViolated,
                        "sum of l^i minus sum of u^k is " + to_string(s) + ", expected 0");
    }
    return sig.compact() ? classify_fd(lambda, sig) : classify_ifd(lambda, sig);
}

struct FDThresholds {
    Rational x_min;
    Rational x_max;
};

struct IFDThresholds {
    Rational xL_min;
    Rational xL_max;
    Rational xR_min;
    Rational xR_max;
};

inline FDThresholds thresholds(const FDFamily& f) {
    Indices ix = indices(f);
    long am = f.a_at(f.m);
    return {Rational(am + static_cast<long>(ix.k0) - 1), Rational(am + static_cast<long>(f.n) - 1)};
}

inline IFDThresholds thresholds(const IFDFamily& f) {
    Indices ix = indices(f);
    Signature sig = f.signature();
    long j0 = static_cast<long>(capped_j0(ix, sig));
    long q = static_cast<long>(f.q), p = static_cast<long>(f.p);
    Rational half = f.lambda / 2;
    Rational b1 = f.b_at(1);
    return {half + q - j0 - 1, half + q - 1, -half - b1 - p + 1, -half - b1 - p + static_cast<long>(ix.i0)};
}

}  // namespace slmn
