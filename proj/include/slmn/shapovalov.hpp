#pragma once

#include <algorithm>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <tuple>
#include <vector>

#include "slmn/algebra_core.hpp"
#include "slmn/composition.hpp"
#include "slmn/errors.hpp"
#include "slmn/linalg.hpp"
#include "slmn/rational.hpp"
#include "slmn/weight.hpp"

namespace slmn {

/// Matrix unit E_{row,col} of gl(m|n), 0-based.
struct BasisElement {
    std::size_t row = 0;
    std::size_t col = 0;
    Parity parity = Parity::Even;

    bool odd() const { return parity == Parity::Odd; }
    auto operator<=>(const BasisElement& o) const { return std::tie(row, col) <=> std::tie(o.row, o.col); }
    bool operator==(const BasisElement& o) const { return row == o.row && col == o.col; }
};

inline BasisElement unit(std::size_t m, std::size_t row, std::size_t col) {
    return {row, col, ((row < m) != (col < m)) ? Parity::Odd : Parity::Even};
}

inline std::string to_string(const BasisElement& e) {
    return "E" + std::to_string(e.row + 1) + "," + std::to_string(e.col + 1);
}

/// Finite linear combination of words in the matrix units.
struct AlgebraElement {
    using Word = std::vector<BasisElement>;
    std::map<Word, Rational> terms;

    static AlgebraElement single(const BasisElement& e, Rational c = 1) {
        AlgebraElement a;
        if (c != 0) a.terms[{e}] = std::move(c);
        return a;
    }
    void add(const Word& w, const Rational& c) {
        if (c == 0) return;
        auto& slot = terms[w];
        slot += c;
        if (slot == 0) terms.erase(w);
    }
    bool is_zero() const { return terms.empty(); }
    bool operator==(const AlgebraElement& o) const { return terms == o.terms; }
};

inline AlgebraElement operator+(AlgebraElement a, const AlgebraElement& b) {
    for (const auto& [w, c] : b.terms) a.add(w, c);
    return a;
}

inline AlgebraElement operator*(const Rational& s, AlgebraElement a) {
    if (s == 0) return {};
    for (auto& [w, c] : a.terms) c *= s;
    return a;
}

/// Superbracket of matrix units: [E_ab, E_cd] = d_bc E_ad - (-1)^{|ab||cd|} d_da E_cb.
inline AlgebraElement bracket(const BasisElement& x, const BasisElement& y, std::size_t m) {
    AlgebraElement out;
    int sign = (x.odd() && y.odd()) ? -1 : 1;
    if (x.col == y.row) out.add({unit(m, x.row, y.col)}, Rational(1));
    if (y.col == x.row) out.add({unit(m, y.row, x.col)}, Rational(-sign));
    return out;
}

/// Bilinear extension to combinations of single matrix units.
inline AlgebraElement bracket(const AlgebraElement& x, const AlgebraElement& y, std::size_t m) {
    AlgebraElement out;
    for (const auto& [wx, cx] : x.terms)
        for (const auto& [wy, cy] : y.terms) {
            if (wx.size() != 1 || wy.size() != 1) throw Error(ErrorCode::NotSimple, "bracket of non-linear terms");
            out = out + (cx * cy) * bracket(wx[0], wy[0], m);
        }
    return out;
}

enum class OmegaVariant { Plus, Minus, MinusPlus, PlusMinus };

inline const char* variant_name(OmegaVariant v) {
    switch (v) {
        case OmegaVariant::Plus: return "plus";
        case OmegaVariant::Minus: return "minus";
        case OmegaVariant::MinusPlus: return "minus_plus";
        case OmegaVariant::PlusMinus: return "plus_minus";
    }
    return "?";
}

inline OmegaVariant default_variant(const Signature& sig) {
    return sig.compact() ? OmegaVariant::Plus : OmegaVariant::MinusPlus;
}

inline void check_variant(const Signature& sig, OmegaVariant v) {
    bool compact_variant = v == OmegaVariant::Plus || v == OmegaVariant::Minus;
    if (compact_variant != sig.compact())
        throw Error(ErrorCode::VariantMismatch,
                    std::string("omega variant ") + variant_name(v) + " does not fit this signature");
}

// omega(E_ab) = s_a s_b E_ba: the anti-involutions are signed transposes.
inline int omega_sign(const Signature& sig, OmegaVariant v, std::size_t slot) {
    bool eps = slot < sig.m;
    bool first = slot < sig.p;
    switch (v) {
        case OmegaVariant::Plus: return 1;
        case OmegaVariant::Minus: return eps ? 1 : -1;
        case OmegaVariant::MinusPlus: return first ? 1 : -1;
        case OmegaVariant::PlusMinus: return (first || !eps) ? 1 : -1;
    }
    return 1;
}

inline AlgebraElement omega(const BasisElement& x, const Signature& sig, OmegaVariant v) {
    check_variant(sig, v);
    int s = omega_sign(sig, v, x.row) * omega_sign(sig, v, x.col);
    return AlgebraElement::single(unit(sig.m, x.col, x.row), Rational(s));
}

/// Anti-homomorphic extension to words: omega(X1...Xk) = omega(Xk)...omega(X1).
inline AlgebraElement omega(const AlgebraElement& a, const Signature& sig, OmegaVariant v) {
    check_variant(sig, v);
    AlgebraElement out;
    for (const auto& [w, c] : a.terms) {
        AlgebraElement::Word img;
        Rational coef = c;
        for (auto it = w.rbegin(); it != w.rend(); ++it) {
            coef *= omega_sign(sig, v, it->row) * omega_sign(sig, v, it->col);
            img.push_back(unit(sig.m, it->col, it->row));
        }
        out.add(img, coef);
    }
    return out;
}

/// The Verma module M(Lambda) for a positive system, realized on PBW monomials in the lowering
/// operators. Module actions are memoized, so one instance serves many Gram entries.
class VermaModule {
public:
    using Monomial = std::vector<std::uint16_t>;  // non-decreasing letter indices
    using Vector = std::map<Monomial, Rational>;

    struct Letter {
        BasisElement element;  // lowering operator E_ba for the positive root e_a - e_b
        Root root;             // the positive root e_a - e_b
    };

    VermaModule(Weight lambda, PositiveSystem ps) : lambda_(std::move(lambda)), ps_(std::move(ps)) {
        const auto& sig = ps_.signature;
        if (lambda_.m != sig.m || lambda_.n() != sig.n) throw Error(ErrorCode::LengthMismatch, "Verma module weight");
        const std::size_t N = sig.rank();
        std::vector<Letter> letters;
        for (const auto& r : ps_.positive_roots()) letters.push_back({unit(sig.m, r.b, r.a), r});
        auto cls = [&](const BasisElement& e) {
            if (e.odd()) return 2;
            return e.row < sig.m ? 0 : 1;
        };
        std::sort(letters.begin(), letters.end(), [&](const Letter& x, const Letter& y) {
            return std::make_tuple(cls(x.element), x.element.row, x.element.col) <
                   std::make_tuple(cls(y.element), y.element.row, y.element.col);
        });
        letters_ = std::move(letters);
        letter_of_.assign(N * N, -1);
        for (std::size_t i = 0; i < letters_.size(); ++i)
            letter_of_[letters_[i].element.row * N + letters_[i].element.col] = static_cast<int>(i);
    }

    const Weight& highest_weight() const { return lambda_; }
    const PositiveSystem& positive_system() const { return ps_; }
    const std::vector<Letter>& letters() const { return letters_; }

    /// PBW monomials spanning the weight space Lambda - eta.
    std::vector<Monomial> basis(const std::vector<int>& eta) const {
        std::vector<Monomial> out;
        Monomial cur;
        auto rec = [&](auto&& self, std::vector<int>& rest, std::size_t from) -> void {
            if (std::all_of(rest.begin(), rest.end(), [](int v) { return v == 0; })) {
                out.push_back(cur);
                return;
            }
            if (height(ps_, rest) <= 0) return;
            for (std::size_t i = from; i < letters_.size(); ++i) {
                const auto& r = letters_[i].root;
                for (std::size_t c = 0; c < rest.size(); ++c) rest[c] -= r.coords[c];
                cur.push_back(static_cast<std::uint16_t>(i));
                self(self, rest, r.odd() ? i + 1 : i);
                cur.pop_back();
                for (std::size_t c = 0; c < rest.size(); ++c) rest[c] += r.coords[c];
            }
        };
        std::vector<int> rest = eta;
        if (rest.size() != ps_.signature.rank()) throw Error(ErrorCode::LengthMismatch, "basis: eta length");
        rec(rec, rest, 0);
        return out;
    }

    /// E_{row,col} applied to a monomial (times v_Lambda), in PBW normal form.
    const Vector& act(std::size_t row, std::size_t col, const Monomial& w) {
        auto key = std::make_tuple(row, col, w);
        if (auto it = memo_.find(key); it != memo_.end()) return it->second;
        Vector out = compute(row, col, w);
        return memo_.emplace(std::move(key), std::move(out)).first->second;
    }

    Vector act(std::size_t row, std::size_t col, const Vector& v) {
        Vector out;
        for (const auto& [mono, c] : v) {
            const Vector& img = act(row, col, mono);
            for (const auto& [m2, c2] : img) accumulate(out, m2, c * c2);
        }
        return out;
    }

    Vector act(const AlgebraElement& a, const Vector& v) {
        Vector out;
        for (const auto& [word, c] : a.terms) {
            Vector cur = v;
            for (auto it = word.rbegin(); it != word.rend(); ++it) cur = act(it->row, it->col, cur);
            for (const auto& [m2, c2] : cur) accumulate(out, m2, c * c2);
        }
        return out;
    }

    /// <Y_i v, Y_j v> for the anti-involution omega, with <v, v> = 1.
    Matrix gram(const std::vector<Monomial>& basis, OmegaVariant variant) {
        const auto& sig = ps_.signature;
        check_variant(sig, variant);
        const std::size_t d = basis.size();
        Matrix g(d, std::vector<Rational>(d, Rational(0)));
        for (std::size_t i = 0; i < d; ++i) {
            // omega(f_1 ... f_k) = omega(f_k) ... omega(f_1): omega(f_1) hits Y_j first.
            std::vector<std::pair<BasisElement, int>> ops;
            for (auto letter : basis[i]) {
                const auto& e = letters_[letter].element;
                int s = omega_sign(sig, variant, e.row) * omega_sign(sig, variant, e.col);
                ops.push_back({unit(sig.m, e.col, e.row), s});
            }
            for (std::size_t j = 0; j < d; ++j) {
                Vector cur{{basis[j], Rational(1)}};
                Rational scale = 1;
                for (const auto& [op, s] : ops) {
                    cur = act(op.row, op.col, cur);
                    scale *= s;
                    if (cur.empty()) break;
                }
                auto it = cur.find(Monomial{});
                if (it != cur.end()) g[i][j] = scale * it->second;
            }
        }
        return g;
    }

    /// Matrix of E_{row,col} from the span of `from` into the span of `to` (columns indexed by `from`).
    Matrix action_matrix(std::size_t row, std::size_t col, const std::vector<Monomial>& from,
                         const std::vector<Monomial>& to) {
        Matrix a(to.size(), std::vector<Rational>(from.size(), Rational(0)));
        std::map<Monomial, std::size_t> index;
        for (std::size_t i = 0; i < to.size(); ++i) index[to[i]] = i;
        for (std::size_t j = 0; j < from.size(); ++j) {
            for (const auto& [mono, c] : act(row, col, from[j])) {
                auto it = index.find(mono);
                if (it == index.end()) throw Error(ErrorCode::LengthMismatch, "action leaves the target weight space");
                a[it->second][j] = c;
            }
        }
        return a;
    }

    std::string describe(const Monomial& w) const {
        if (w.empty()) return "v";
        std::string s;
        for (auto l : w) s += "f(" + to_string(letters_[l].root) + ")";
        return s + "v";
    }

private:
    static void accumulate(Vector& v, const Monomial& k, const Rational& c) {
        if (c == 0) return;
        auto& slot = v[k];
        slot += c;
        if (slot == 0) v.erase(k);
    }

    int letter_index(std::size_t row, std::size_t col) const {
        return letter_of_[row * ps_.signature.rank() + col];
    }

    Rational weight_coord(const Monomial& w, std::size_t slot) const {
        Rational v = lambda_[slot];
        for (auto l : w) v -= letters_[l].root.coords[slot];
        return v;
    }

    // X f1 rest = [X, f1] rest + (-1)^{|X||f1|} f1 (X rest)
    Vector commute_past_first(std::size_t row, std::size_t col, const Monomial& w) {
        const std::size_t m = ps_.signature.m;
        BasisElement x = unit(m, row, col);
        const BasisElement& f1 = letters_[w[0]].element;
        Monomial rest(w.begin() + 1, w.end());
        Vector out;
        for (const auto& [word, c] : bracket(x, f1, m).terms) {
            const Vector& part = act(word[0].row, word[0].col, rest);
            for (const auto& [mono, c2] : part) accumulate(out, mono, c * c2);
        }
        Rational sign = (x.odd() && f1.odd()) ? -1 : 1;
        Vector inner = act(row, col, rest);
        Vector lifted = act(f1.row, f1.col, inner);
        for (const auto& [mono, c2] : lifted) accumulate(out, mono, sign * c2);
        return out;
    }

    Vector compute(std::size_t row, std::size_t col, const Monomial& w) {
        if (row == col) {
            Rational h = weight_coord(w, row);
            if (h == 0) return {};
            return Vector{{w, h}};
        }
        int L = letter_index(row, col);
        if (L >= 0) {
            if (w.empty() || L < static_cast<int>(w[0])) {
                Monomial out{static_cast<std::uint16_t>(L)};
                out.insert(out.end(), w.begin(), w.end());
                return Vector{{out, Rational(1)}};
            }
            if (L == static_cast<int>(w[0])) {
                if (letters_[L].element.odd()) return {};
                Monomial out{static_cast<std::uint16_t>(L)};
                out.insert(out.end(), w.begin(), w.end());
                return Vector{{out, Rational(1)}};
            }
            return commute_past_first(row, col, w);
        }
        if (w.empty()) return {};  // raising operators kill v_Lambda
        return commute_past_first(row, col, w);
    }

    Weight lambda_;
    PositiveSystem ps_;
    std::vector<Letter> letters_;
    std::vector<int> letter_of_;
    std::map<std::tuple<std::size_t, std::size_t, Monomial>, Vector> memo_;
};

struct GramMatrix {
    std::vector<int> eta;
    std::vector<VermaModule::Monomial> basis;
    std::vector<std::string> basis_labels;
    Matrix entries;

    std::size_t dim() const { return entries.size(); }
};

inline std::vector<int> lattice_vector(const Coords& eta) {
    std::vector<int> v = detail::to_int_vector(eta);
    if (v.size() != eta.size()) throw Error(ErrorCode::Parse, "eta must be an integral vector");
    return v;
}

inline GramMatrix gram(VermaModule& mod, const std::vector<int>& eta, OmegaVariant variant) {
    GramMatrix g;
    g.eta = eta;
    g.basis = mod.basis(eta);
    for (const auto& b : g.basis) g.basis_labels.push_back(mod.describe(b));
    g.entries = mod.gram(g.basis, variant);
    return g;
}

/// Gram matrix of the contravariant form on M(Lambda)_{Lambda - eta}. Rational weights are
/// automatically symmetric for the supported real forms.
inline GramMatrix gram(const Weight& lambda, const Coords& eta, const Signature& sig, const PositiveSystem& ps,
                       OmegaVariant variant) {
    check_variant(sig, variant);
    if (ps.signature != sig) throw Error(ErrorCode::WrongSystem, "positive system built for another signature");
    VermaModule mod(lambda, ps);
    return gram(mod, lattice_vector(eta), variant);
}

inline bool is_psd(const GramMatrix& g) { return is_psd(g.entries); }

enum class KSNormalization {
    Coroot,   // 2(Lambda+rho, gamma)/(gamma, gamma) - r
    Printed,  // (Lambda+rho, gamma) - r
};

struct KSFactor {
    Root root;
    int r = 1;  // 0 marks an odd factor
    Rational base;
    Integer exponent;
};

struct KSDeterminant {
    std::vector<KSFactor> factors;
    Rational value = 1;
};

inline KSDeterminant ks_determinant(const Weight& lambda, const Coords& eta_in, const PositiveSystem& ps,
                                    KSNormalization norm = KSNormalization::Coroot) {
    std::vector<int> eta = lattice_vector(eta_in);
    KSDeterminant out;
    Weight shifted = lambda + ps.rho;
    detail::PartitionCounter full(ps, std::nullopt);
    auto pow = [](Rational b, Integer e) {
        Rational acc = 1;
        for (Integer i = 0; i < e; ++i) acc *= b;
        return acc;
    };
    for (const auto& g : ps.even_positive) {
        Rational pairing = form(shifted, g);
        Rational norm2 = form(g, g);
        for (int r = 1;; ++r) {
            std::vector<int> rest = eta;
            for (std::size_t c = 0; c < rest.size(); ++c) rest[c] -= r * g.coords[c];
            if (height(ps, rest) < 0) break;
            Integer e = full.count(rest);
            if (e == 0) continue;
            Rational base = norm == KSNormalization::Coroot ? Rational(2 * pairing / norm2 - r) : Rational(pairing - r);
            out.factors.push_back({g, r, base, e});
            out.value *= pow(base, e);
        }
    }
    for (const auto& g : ps.odd_positive) {
        std::vector<int> rest = eta;
        for (std::size_t c = 0; c < rest.size(); ++c) rest[c] -= g.coords[c];
        if (height(ps, rest) < 0) continue;
        Integer e = detail::PartitionCounter(ps, g).count(rest);
        if (e == 0) continue;
        Rational base = form(shifted, g);
        out.factors.push_back({g, 0, base, e});
        out.value *= pow(base, e);
    }
    return out;
}

/// Vectors of M(Lambda)_{Lambda-eta} annihilated by the raising operators of the simple even roots,
/// i.e. the candidate highest weight vectors of an even constituent. Columns of the result are
/// coordinate vectors over `basis`.
inline std::vector<std::vector<Rational>> even_singular_vectors(VermaModule& mod, const std::vector<int>& eta,
                                                                const std::vector<VermaModule::Monomial>& basis) {
    const auto& ps = mod.positive_system();
    Matrix stacked;
    for (const auto& r : ps.even_positive) {
        bool simple_even = true;
        for (const auto& s : ps.even_positive) {
            // r is simple in the even system when it is not a sum of two even positive roots
            for (const auto& t : ps.even_positive) {
                std::vector<int> sum(r.coords.size());
                for (std::size_t c = 0; c < sum.size(); ++c) sum[c] = s.coords[c] + t.coords[c];
                if (sum == r.coords) simple_even = false;
            }
        }
        if (!simple_even) continue;
        std::vector<int> target = eta;
        for (std::size_t c = 0; c < target.size(); ++c) target[c] -= r.coords[c];
        auto to = mod.basis(target);
        if (to.empty()) continue;
        Matrix a = mod.action_matrix(r.a, r.b, basis, to);
        stacked.insert(stacked.end(), a.begin(), a.end());
    }
    return nullspace(stacked, basis.size());
}

/// B^T G B for the columns B.
inline Matrix restrict_form(const Matrix& g, const std::vector<std::vector<Rational>>& columns) {
    Matrix b = transpose(columns);  // basis.size() x columns.size()
    if (b.empty()) return {};
    return multiply(transpose(b), multiply(g, b));
}

/// Every eta in the positive cone of ps with 1 <= height(eta) <= depth, ordered by height.
inline std::vector<std::vector<int>> depths_up_to(const PositiveSystem& ps, int depth) {
    std::vector<Root> roots = ps.positive_roots();
    std::set<std::pair<int, std::vector<int>>> seen;
    std::vector<int> cur(ps.signature.rank(), 0);
    auto rec = [&](auto&& self, std::size_t from, int h) -> void {
        if (h > 0) seen.insert({h, cur});
        for (std::size_t i = from; i < roots.size(); ++i) {
            int rh = static_cast<int>(height(ps, roots[i].coords));
            if (h + rh > depth) continue;
            for (std::size_t c = 0; c < cur.size(); ++c) cur[c] += roots[i].coords[c];
            self(self, roots[i].odd() ? i + 1 : i, h + rh);
            for (std::size_t c = 0; c < cur.size(); ++c) cur[c] -= roots[i].coords[c];
        }
    };
    rec(rec, 0, 0);
    std::vector<std::vector<int>> out;
    for (auto& [h, v] : seen) out.push_back(v);
    return out;
}

struct OracleResult {
    bool all_psd = true;
    std::optional<std::vector<int>> witness;  // first eta with an indefinite block
    std::size_t blocks = 0;
};

/// Checks positivity of the contravariant form on every weight space down to `depth`.
inline OracleResult oracle(const Weight& lambda, const PositiveSystem& ps, OmegaVariant variant, int depth) {
    VermaModule mod(lambda, ps);
    OracleResult res;
    for (const auto& eta : depths_up_to(ps, depth)) {
        GramMatrix g = gram(mod, eta, variant);
        if (g.dim() == 0) continue;
        ++res.blocks;
        if (!is_psd(g.entries)) {
            res.all_psd = false;
            res.witness = eta;
            return res;
        }
    }
    return res;
}

}  // namespace slmn
