#include <gtest/gtest.h>

#include <random>

#include "slmn/slmn.hpp"

using namespace slmn;

namespace {

Weight W(const char* s) { return parse_weight(s); }

// rho0 from the even closed form plus the odd half sum of the named system.
Weight rho_closed(const Signature& s, PositiveSystemKind kind) {
    long m = long(s.m), n = long(s.n), p = long(s.p), q = long(s.q);
    Weight even = zero_weight(s.m, s.n), odd = zero_weight(s.m, s.n);
    for (long i = 1; i <= m; ++i) even[i - 1] = Rational(m - 2 * i + 1, 2);
    for (long k = 1; k <= n; ++k) even[m + k - 1] = Rational(n - 2 * k + 1, 2);
    for (long i = 1; i <= m; ++i) {
        switch (kind) {
            case PositiveSystemKind::Standard: odd[i - 1] = Rational(n, 2); break;
            case PositiveSystemKind::AntiStandard: odd[i - 1] = Rational(-n, 2); break;
            case PositiveSystemKind::NonStandard: odd[i - 1] = Rational(i <= p ? n : -n, 2); break;
        }
    }
    for (long k = 1; k <= n; ++k) {
        switch (kind) {
            case PositiveSystemKind::Standard: odd[m + k - 1] = Rational(-m, 2); break;
            case PositiveSystemKind::AntiStandard: odd[m + k - 1] = Rational(m, 2); break;
            case PositiveSystemKind::NonStandard: odd[m + k - 1] = Rational(q - p, 2); break;
        }
    }
    return even - odd;
}

std::vector<Signature> signatures_up_to(std::size_t total) {
    std::vector<Signature> out;
    for (std::size_t m = 1; m < total; ++m)
        for (std::size_t n = 1; m + n <= total; ++n) {
            if (m + n <= 2) continue;
            for (std::size_t p = 0; p <= m; ++p) out.push_back(make_signature(p, m - p, n));
        }
    return out;
}

}  // namespace

TEST(Signature, Validation) {
    EXPECT_THROW(make_signature(0, 0, 2), Error);
    EXPECT_THROW(make_signature(1, 0, 0), Error);
    EXPECT_THROW(make_signature(1, 0, 1), Error);
    Signature s = make_signature(1, 1, 2);
    EXPECT_EQ(s.m, 2u);
    EXPECT_FALSE(s.compact());
    EXPECT_TRUE(make_signature(0, 2, 1).compact());
}

TEST(PositiveSystem, NamedWeylVectors) {
    EXPECT_TRUE(build_positive_system(make_signature(2, 0, 1), PositiveSystemKind::Standard).rho.same_as(W("0,-1|1")));
    EXPECT_EQ(build_positive_system(make_signature(2, 0, 2), PositiveSystemKind::Standard).rho,
              W("-1/2,-3/2|3/2,1/2"));
    EXPECT_EQ(build_positive_system(make_signature(1, 1, 1), PositiveSystemKind::NonStandard).rho, W("0,0|0"));
    EXPECT_EQ(build_positive_system(make_signature(1, 1, 2), PositiveSystemKind::NonStandard).rho,
              W("-1/2,1/2|1/2,-1/2"));
}

TEST(PositiveSystem, RootCounts) {
    PositiveSystem ps = build_positive_system(make_signature(2, 1, 2), PositiveSystemKind::NonStandard);
    EXPECT_EQ(ps.even_positive.size(), 3u + 1u);
    EXPECT_EQ(ps.odd_positive.size(), 6u);
    for (const auto& r : ps.positive_roots()) EXPECT_TRUE(ps.is_positive(r));
}

TEST(PositiveSystem, NonStandardNeedsNoncompact) {
    try {
        build_positive_system(make_signature(2, 0, 1), PositiveSystemKind::NonStandard);
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::InvalidKind);
    }
}

TEST(PositiveSystem, RhoClosedFormsUpToRankEight) {
    for (const auto& s : signatures_up_to(8)) {
        std::vector<PositiveSystemKind> kinds{PositiveSystemKind::Standard, PositiveSystemKind::AntiStandard};
        if (!s.compact()) kinds.push_back(PositiveSystemKind::NonStandard);
        for (auto k : kinds) {
            PositiveSystem ps = build_positive_system(s, k);
            EXPECT_TRUE(ps.rho.same_as(rho_closed(s, k))) << s.p << "," << s.q << "," << s.n << " " << kind_name(k);
        }
    }
}

TEST(Form, SmallValues) {
    Signature s = make_signature(2, 0, 2);
    EXPECT_EQ(form(eps_minus_delta(s, 1, 1), eps_minus_delta(s, 1, 1)), 0);
    EXPECT_EQ(form(delta_minus_delta(s, 1, 2), delta_minus_delta(s, 1, 2)), -2);
    EXPECT_EQ(form(eps_minus_eps(s, 1, 2), eps_minus_eps(s, 1, 2)), 2);
    EXPECT_THROW(form(Coords{1, 2}, Coords{1}, 1), Error);
}

TEST(Form, OddRootsIsotropic) {
    for (const auto& s : signatures_up_to(6)) {
        PositiveSystem ps = build_positive_system(s, PositiveSystemKind::Standard);
        for (const auto& r : ps.odd_positive) EXPECT_EQ(form(r, r), 0);
        for (const auto& r : ps.even_positive) EXPECT_NE(form(r, r), 0);
    }
}

// rank of the form on the supertraceless subspace {sum l - sum u = 0}
TEST(Form, DegenerateOnSupertracelessIffMEqualsN) {
    for (std::size_t m = 1; m <= 4; ++m) {
        for (std::size_t n = 1; n <= 4; ++n) {
            if (m + n <= 2) continue;
            std::size_t N = m + n;
            // basis: e_a - e_{a+1} style vectors with supertrace zero, i.e. the simple roots
            std::vector<Coords> basis;
            for (std::size_t a = 0; a + 1 < N; ++a) {
                Coords c(N, Rational(0));
                c[a] = 1;
                c[a + 1] = -1;
                if (a + 1 == m) c[a + 1] = 1;  // e_m + d_1 has supertrace 1 - 1 = 0 in (l | u) coordinates
                basis.push_back(c);
            }
            Matrix g(basis.size(), std::vector<Rational>(basis.size()));
            for (std::size_t i = 0; i < basis.size(); ++i)
                for (std::size_t j = 0; j < basis.size(); ++j) g[i][j] = form(basis[i], basis[j], m);
            bool degenerate = rank(g) < basis.size();
            EXPECT_EQ(degenerate, m == n) << m << "|" << n;
        }
    }
}

TEST(Reflection, Examples) {
    Signature s = make_signature(2, 0, 2);
    Root a = eps_minus_eps(s, 1, 2), d = delta_minus_delta(s, 1, 2);
    EXPECT_EQ(even_reflection(a, eps_minus_delta(s, 1, 1).as_coords()), eps_minus_delta(s, 2, 1).as_coords());
    EXPECT_EQ(even_reflection(d, d.as_coords()), d.negated().as_coords());
    EXPECT_EQ(even_reflection(a, d.as_coords()), d.as_coords());
    EXPECT_THROW(even_reflection(eps_minus_delta(s, 1, 1), d.as_coords()), Error);
}

TEST(Reflection, PreservesForm) {
    std::mt19937 rng(7);
    std::uniform_int_distribution<int> num(-9, 9), den(1, 5);
    for (const auto& s : signatures_up_to(6)) {
        PositiveSystem ps = build_positive_system(s, PositiveSystemKind::Standard);
        for (const auto& alpha : ps.even_positive) {
            Coords u, v;
            for (std::size_t i = 0; i < s.rank(); ++i) {
                u.push_back(Rational(num(rng), den(rng)));
                v.push_back(Rational(num(rng), den(rng)));
            }
            EXPECT_EQ(form(even_reflection(alpha, u), even_reflection(alpha, v), s.m), form(u, v, s.m));
        }
    }
}

TEST(Roots, ParseAndPrint) {
    Signature s = make_signature(2, 0, 2);
    EXPECT_EQ(to_string(parse_root(s, "e1-d2")), "e1-d2");
    EXPECT_EQ(parse_root(s, "-e2+d1"), delta_minus_eps(s, 1, 2));
    EXPECT_TRUE(parse_root(s, "d1-d2").odd() == false);
    EXPECT_THROW(parse_root(s, "e3-d1"), Error);
    EXPECT_THROW(parse_root(s, "e1+d1"), Error);
}

TEST(OddReflection, SwapsTheSimpleRoot) {
    Signature s = make_signature(2, 0, 1);
    PositiveSystem ps = build_positive_system(s, PositiveSystemKind::Standard);
    Root theta = eps_minus_delta(s, 2, 1);
    PositiveSystem r = odd_reflection_system(ps, theta);
    ASSERT_EQ(r.odd_positive.size(), 2u);
    EXPECT_TRUE(r.contains(eps_minus_delta(s, 1, 1)));
    EXPECT_TRUE(r.contains(theta.negated()));
    EXPECT_FALSE(r.contains(theta));
    EXPECT_EQ(r.even_positive, ps.even_positive);
    EXPECT_FALSE(r.kind.has_value());
}

TEST(OddReflection, RhoShiftsByTheta) {
    for (const auto& s : signatures_up_to(6)) {
        PositiveSystem ps = build_positive_system(s, PositiveSystemKind::Standard);
        for (const auto& theta : simple_roots(ps)) {
            if (!theta.odd()) continue;
            PositiveSystem r = odd_reflection_system(ps, theta);
            // recompute the half sums from the reflected root lists
            Weight direct = zero_weight(s.m, s.n);
            for (const auto& e : r.even_positive) direct = direct + Rational(1, 2) * e.as_weight();
            for (const auto& o : r.odd_positive) direct = direct - Rational(1, 2) * o.as_weight();
            EXPECT_TRUE(direct.same_as(r.rho));
            EXPECT_TRUE(r.rho.same_as(ps.rho + theta.as_weight()));
            EXPECT_EQ(r.even_positive, ps.even_positive);

            PositiveSystem back = odd_reflection_system(r, theta.negated());
            EXPECT_EQ(back.odd_positive, ps.odd_positive);
            EXPECT_EQ(back.kind, ps.kind);
        }
    }
}

TEST(OddReflection, ChainReachesNonStandard) {
    // moving the delta block past the q-block of eps one simple root at a time
    Signature s = make_signature(1, 2, 2);
    PositiveSystem ps = build_positive_system(s, PositiveSystemKind::Standard);
    PositiveSystem target = build_positive_system(s, PositiveSystemKind::NonStandard);
    for (int step = 0; step < 4; ++step) {
        for (const auto& r : simple_roots(ps)) {
            if (r.odd() && r.a < s.m && r.a >= s.p) {
                ps = odd_reflection_system(ps, r);
                break;
            }
        }
    }
    EXPECT_EQ(ps.order, target.order);
    EXPECT_EQ(ps.kind, PositiveSystemKind::NonStandard);
}

TEST(OddReflection, Errors) {
    Signature s = make_signature(2, 0, 2);
    PositiveSystem ps = build_positive_system(s, PositiveSystemKind::Standard);
    try {
        odd_reflection_system(ps, eps_minus_delta(s, 1, 1));
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::NotSimple);
    }
    try {
        odd_reflection_system(ps, eps_minus_eps(s, 1, 2));
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::NotOddIsotropic);
    }
}

TEST(OddReflection, WeightRule) {
    Signature s = make_signature(2, 0, 1);
    Root theta = eps_minus_delta(s, 2, 1);
    EXPECT_TRUE(odd_reflect_weight(W("1,0|0"), theta).same_as(W("1,0|0")));
    EXPECT_TRUE(odd_reflect_weight(W("1,1|0"), theta).same_as(W("1,0|1")));
    EXPECT_THROW(odd_reflect_weight(W("1,1|0"), eps_minus_eps(s, 1, 2)), Error);
}

TEST(Height, SimpleRootsHaveHeightOne) {
    PositiveSystem ps = build_positive_system(make_signature(1, 2, 2), PositiveSystemKind::NonStandard);
    for (const auto& r : simple_roots(ps)) {
        EXPECT_EQ(height(ps, r.coords), 1);
        EXPECT_TRUE(is_simple(ps, r));
    }
    for (const auto& r : ps.positive_roots()) EXPECT_GE(height(ps, r.coords), 1);
}
