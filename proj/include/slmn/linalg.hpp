#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "slmn/errors.hpp"
#include "slmn/rational.hpp"

namespace slmn {

using Matrix = std::vector<std::vector<Rational>>;

inline bool is_symmetric(const Matrix& a) {
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i].size() != a.size()) return false;
        for (std::size_t j = 0; j < i; ++j)
            if (a[i][j] != a[j][i]) return false;
    }
    return true;
}

namespace detail {

// Row echelon form in place; returns pivot columns and the sign/scale bookkeeping for det.
inline std::vector<std::size_t> echelon(Matrix& a, Rational* det_scale = nullptr) {
    std::vector<std::size_t> pivots;
    const std::size_t rows = a.size();
    const std::size_t cols = rows ? a[0].size() : 0;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t piv = r;
        while (piv < rows && a[piv][c] == 0) ++piv;
        if (piv == rows) continue;
        if (piv != r) {
            std::swap(a[piv], a[r]);
            if (det_scale) *det_scale = -*det_scale;
        }
        for (std::size_t i = r + 1; i < rows; ++i) {
            if (a[i][c] == 0) continue;
            Rational f = a[i][c] / a[r][c];
            for (std::size_t j = c; j < cols; ++j) a[i][j] -= f * a[r][j];
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

}  // namespace detail

inline std::size_t rank(Matrix a) { return detail::echelon(a).size(); }

inline Rational determinant(Matrix a) {
    const std::size_t n = a.size();
    if (n == 0) return 1;
    Rational sign = 1;
    auto piv = detail::echelon(a, &sign);
    if (piv.size() < n) return 0;
    Rational d = sign;
    for (std::size_t i = 0; i < n; ++i) d *= a[i][i];
    return d;
}

/// Exact positive semidefiniteness by symmetric elimination. A negative diagonal entry, or a zero
/// diagonal entry with a nonzero row, certifies an indefinite direction.
inline bool is_psd(Matrix a) {
    if (!is_symmetric(a)) throw Error(ErrorCode::NotSymmetric, "is_psd needs a symmetric matrix");
    while (!a.empty()) {
        const std::size_t n = a.size();
        std::size_t k = n;
        for (std::size_t i = 0; i < n; ++i) {
            if (a[i][i] < 0) return false;
            if (k == n && a[i][i] > 0) k = i;
        }
        if (k == n) {
            for (const auto& row : a)
                for (const auto& v : row)
                    if (v != 0) return false;
            return true;
        }
        Matrix s;
        s.reserve(n - 1);
        for (std::size_t i = 0; i < n; ++i) {
            if (i == k) continue;
            std::vector<Rational> row;
            row.reserve(n - 1);
            Rational f = a[i][k] / a[k][k];
            for (std::size_t j = 0; j < n; ++j)
                if (j != k) row.push_back(a[i][j] - f * a[k][j]);
            s.push_back(std::move(row));
        }
        a = std::move(s);
    }
    return true;
}

/// Basis of {v : A v = 0}.
inline std::vector<std::vector<Rational>> nullspace(Matrix a, std::size_t cols) {
    auto piv = detail::echelon(a);
    // back-substitute to reduced form
    for (std::size_t r = piv.size(); r-- > 0;) {
        std::size_t c = piv[r];
        Rational lead = a[r][c];
        for (std::size_t j = c; j < cols; ++j) a[r][j] /= lead;
        for (std::size_t i = 0; i < r; ++i) {
            if (a[i][c] == 0) continue;
            Rational f = a[i][c];
            for (std::size_t j = c; j < cols; ++j) a[i][j] -= f * a[r][j];
        }
    }
    std::vector<bool> is_pivot(cols, false);
    for (auto c : piv) is_pivot[c] = true;
    std::vector<std::vector<Rational>> basis;
    for (std::size_t free = 0; free < cols; ++free) {
        if (is_pivot[free]) continue;
        std::vector<Rational> v(cols, Rational(0));
        v[free] = 1;
        for (std::size_t r = 0; r < piv.size(); ++r) v[piv[r]] = -a[r][free];
        basis.push_back(std::move(v));
    }
    return basis;
}

inline Matrix multiply(const Matrix& a, const Matrix& b) {
    const std::size_t n = a.size(), k = b.size(), m = k ? b[0].size() : 0;
    Matrix c(n, std::vector<Rational>(m, Rational(0)));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t t = 0; t < k; ++t) {
            if (a[i][t] == 0) continue;
            for (std::size_t j = 0; j < m; ++j) c[i][j] += a[i][t] * b[t][j];
        }
    return c;
}

inline Matrix transpose(const Matrix& a) {
    if (a.empty()) return {};
    Matrix t(a[0].size(), std::vector<Rational>(a.size()));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < a[i].size(); ++j) t[j][i] = a[i][j];
    return t;
}

}  // namespace slmn
