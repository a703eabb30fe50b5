#pragma once

#include <algorithm>
#include <cstddef>
#include <map>
#include <optional>
#include <vector>

#include "slmn/algebra_core.hpp"
#include "slmn/rational.hpp"
#include "slmn/weight.hpp"
#include "slmn/weights.hpp"

namespace slmn {

struct OddSubset {
    std::vector<Root> members;
    std::vector<int> gamma;  // sum of the members

    bool contains(const Root& r) const { return std::find(members.begin(), members.end(), r) != members.end(); }
};

struct ConstituentCandidate {
    Weight mu;
    std::size_t multiplicity = 0;
    std::vector<OddSubset> witnesses;
};

namespace detail {

inline std::vector<int> to_int_vector(const Coords& c) {
    std::vector<int> out;
    for (const auto& v : c) {
        if (!is_integer(v)) return {};
        out.push_back(static_cast<int>(boost::multiprecision::numerator(v)));
    }
    return out;
}

template <class F>
void for_each_odd_subset(const PositiveSystem& ps, F&& visit) {
    const auto& odd = ps.odd_positive;
    const std::size_t N = ps.signature.rank();
    OddSubset cur;
    cur.gamma.assign(N, 0);
    // Enumerate by cardinality, then lexicographically, so the output order is stable.
    for (std::size_t size = 0; size <= odd.size(); ++size) {
        auto rec = [&](auto&& self, std::size_t start, std::size_t left) -> void {
            if (left == 0) {
                visit(cur);
                return;
            }
            for (std::size_t i = start; i + left <= odd.size(); ++i) {
                cur.members.push_back(odd[i]);
                for (std::size_t c = 0; c < N; ++c) cur.gamma[c] += odd[i].coords[c];
                self(self, i + 1, left - 1);
                for (std::size_t c = 0; c < N; ++c) cur.gamma[c] -= odd[i].coords[c];
                cur.members.pop_back();
            }
        };
        rec(rec, 0, size);
    }
}

// Counts multisets of positive roots summing to eta, odd roots at most once. The remaining
// vector must keep non-negative height, which bounds the search.
class PartitionCounter {
public:
    PartitionCounter(const PositiveSystem& ps, std::optional<Root> excluded) : ps_(ps) {
        for (const auto& r : ps.positive_roots())
            if (!excluded || !(r == *excluded)) roots_.push_back(r);
    }

    Integer count(const std::vector<int>& eta) { return go(eta, 0); }

private:
    Integer go(const std::vector<int>& eta, std::size_t from) {
        if (std::all_of(eta.begin(), eta.end(), [](int v) { return v == 0; })) return 1;
        if (height(ps_, eta) <= 0) return 0;
        auto key = std::make_pair(eta, from);
        if (auto it = memo_.find(key); it != memo_.end()) return it->second;
        Integer total = 0;
        for (std::size_t i = from; i < roots_.size(); ++i) {
            const Root& r = roots_[i];
            std::vector<int> rest = eta;
            for (std::size_t c = 0; c < rest.size(); ++c) rest[c] -= r.coords[c];
            // an odd root is used once, so the next letter starts after it
            total += go(rest, r.odd() ? i + 1 : i);
        }
        memo_.emplace(std::move(key), total);
        return total;
    }

    const PositiveSystem& ps_;
    std::vector<Root> roots_;
    std::map<std::pair<std::vector<int>, std::size_t>, Integer> memo_;
};

}  // namespace detail

/// Number of subsets S of the odd positive roots with sum(S) = gamma.
inline std::size_t gamma_multiplicity(const Coords& gamma, const PositiveSystem& ps) {
    if (gamma.size() != ps.signature.rank()) throw Error(ErrorCode::LengthMismatch, "gamma_multiplicity");
    std::vector<int> target = detail::to_int_vector(gamma);
    if (target.empty()) return 0;
    std::size_t count = 0;
    detail::for_each_odd_subset(ps, [&](const OddSubset& s) {
        if (s.gamma == target) ++count;
    });
    return count;
}

inline Integer kostant_P(const Coords& eta, const PositiveSystem& ps) {
    if (eta.size() != ps.signature.rank()) throw Error(ErrorCode::LengthMismatch, "kostant_P");
    std::vector<int> v = detail::to_int_vector(eta);
    if (v.empty()) return 0;
    return detail::PartitionCounter(ps, std::nullopt).count(v);
}

/// Same count with gamma forbidden.
inline Integer kostant_P_excluding(const Root& gamma, const Coords& eta, const PositiveSystem& ps) {
    if (eta.size() != ps.signature.rank()) throw Error(ErrorCode::LengthMismatch, "kostant_P_excluding");
    if (!gamma.odd() || !ps.contains(gamma))
        throw Error(ErrorCode::NotOddPositive, to_string(gamma) + " is not an odd positive root");
    std::vector<int> v = detail::to_int_vector(eta);
    if (v.empty()) return 0;
    return detail::PartitionCounter(ps, gamma).count(v);
}

/// All Lambda - Gamma_S over subsets S of odd positive roots, grouped by weight (exact coordinates).
inline std::vector<ConstituentCandidate> constituent_candidates(const Weight& lambda, const PositiveSystem& ps) {
    std::vector<ConstituentCandidate> out;
    std::map<std::vector<int>, std::size_t> slot;
    detail::for_each_odd_subset(ps, [&](const OddSubset& s) {
        auto [it, fresh] = slot.emplace(s.gamma, out.size());
        if (fresh) {
            Coords c = lambda.coords;
            for (std::size_t i = 0; i < c.size(); ++i) c[i] -= s.gamma[i];
            out.push_back({Weight(lambda.m, std::move(c)), 0, {}});
        }
        auto& cand = out[it->second];
        cand.witnesses.push_back(s);
        cand.multiplicity = cand.witnesses.size();
    });
    return out;
}

inline bool is_typical(const Weight& lambda, const PositiveSystem& ps) {
    for (const auto& a : ps.odd_positive)
        if (form(lambda + ps.rho, a) == 0) return false;
    return true;
}

/// Odd roots that no constituent decomposition may use, from the vanishing pattern of the margins.
inline std::vector<Root> exclusion_roots(const Weight& lambda, const Signature& sig, const PositiveSystem& ps) {
    std::vector<Root> out;
    auto push = [&](const Root& r) {
        if (std::find(out.begin(), out.end(), r) == out.end()) out.push_back(r);
    };
    const std::size_t m = sig.m, n = sig.n;
    if (sig.compact()) {
        std::size_t k0 = plateau_k0(lambda);
        for (std::size_t i = 1; i <= m; ++i)
            for (std::size_t k = k0; k <= n; ++k)
                if (margin(lambda, ps, eps_minus_delta(sig, i, k)) == 0)
                    for (std::size_t l = k; l <= n; ++l) push(eps_minus_delta(sig, i, l));
        return out;
    }
    Indices ix = ifd_indices(lambda, sig);
    for (std::size_t k = 1; k <= n; ++k) {
        for (std::size_t i = 1; i <= ix.i0; ++i)
            if (margin(lambda, ps, eps_minus_delta(sig, i, k)) == 0)
                for (std::size_t ii = 1; ii <= i; ++ii) push(eps_minus_delta(sig, ii, k));
        std::size_t jmax = capped_j0(ix, sig);
        for (std::size_t j = 0; j <= jmax; ++j)
            if (margin(lambda, ps, delta_minus_eps(sig, k, m - j)) == 0)
                for (std::size_t jj = 0; jj <= j; ++jj) push(delta_minus_eps(sig, k, m - jj));
    }
    return out;
}

/// True iff some witness avoids every excluded root. The empty witness is always admissible.
inline bool admissible_decomposition(const Weight& /*lambda*/, const std::vector<OddSubset>& witnesses,
                                     const std::vector<Root>& exclusions) {
    for (const auto& w : witnesses) {
        bool clean = std::none_of(exclusions.begin(), exclusions.end(), [&](const Root& r) { return w.contains(r); });
        if (clean) return true;
    }
    return false;
}

}  // namespace slmn
