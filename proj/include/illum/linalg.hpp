#pragma once

#include <optional>
#include <span>
#include <vector>

#include "illum/rational.hpp"

namespace illum {

namespace detail {

// In-place row reduction to reduced row echelon form. Returns pivot columns.
inline std::vector<std::size_t> rref(std::vector<std::vector<Rational>>& m, std::size_t cols) {
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t col = 0; col < cols && row < m.size(); ++col) {
        std::size_t p = row;
        while (p < m.size() && m[p][col] == 0) ++p;
        if (p == m.size()) continue;
        std::swap(m[p], m[row]);
        const Rational inv = 1 / m[row][col];
        for (auto& e : m[row]) e *= inv;
        for (std::size_t r = 0; r < m.size(); ++r) {
            if (r == row || m[r][col] == 0) continue;
            const Rational f = m[r][col];
            for (std::size_t c = col; c < m[r].size(); ++c) m[r][c] -= f * m[row][c];
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

inline void require_dim(std::span<const QVector> vs, std::size_t dim) {
    for (const auto& v : vs) {
        if (v.dim() != dim) throw InputError("dimension mismatch: expected " + std::to_string(dim));
    }
}

}  // namespace detail

/// Rank of the span of `vectors`.
inline std::size_t rank(std::span<const QVector> vectors) {
    if (vectors.empty()) return 0;
    const std::size_t dim = vectors.front().dim();
    detail::require_dim(vectors, dim);
    std::vector<std::vector<Rational>> m;
    m.reserve(vectors.size());
    for (const auto& v : vectors) m.push_back(v.entries());
    return detail::rref(m, dim).size();
}

inline bool linearly_independent(std::span<const QVector> vectors) { return rank(vectors) == vectors.size(); }

/// Coefficients lambda with sum_i lambda_i * basis_i == target, or nullopt when
/// the n basis vectors are linearly dependent.
inline std::optional<QVector> solve_linear(std::span<const QVector> basis, const QVector& target) {
    const std::size_t n = target.dim();
    if (basis.size() != n) throw InputError("solve_linear needs exactly dim(target) basis vectors");
    detail::require_dim(basis, n);

    // Augmented system: columns are the basis vectors, last column the target.
    std::vector<std::vector<Rational>> m(n, std::vector<Rational>(n + 1));
    for (std::size_t r = 0; r < n; ++r) {
        for (std::size_t c = 0; c < n; ++c) m[r][c] = basis[c][r];
        m[r][n] = target[r];
    }
    if (detail::rref(m, n).size() < n) return std::nullopt;
    QVector lambda(n);
    for (std::size_t i = 0; i < n; ++i) lambda[i] = m[i][n];
    return lambda;
}

}  // namespace illum
