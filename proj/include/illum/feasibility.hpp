#pragma once

#include <optional>
#include <span>
#include <vector>

#include "illum/rational.hpp"

namespace illum {

enum class Relation { GreaterEq, Equal };

/// One linear constraint <a, v> (>= | =) c on a free vector v.
struct Constraint {
    QVector a;
    Rational c;
    Relation rel = Relation::GreaterEq;
};

inline bool satisfies(const Constraint& k, const QVector& v) {
    const Rational lhs = dot(k.a, v);
    return k.rel == Relation::Equal ? lhs == k.c : lhs >= k.c;
}

namespace detail {

// Phase-one simplex over the standard form A x = b, x >= 0, b >= 0, with one
// artificial per row. Bland's rule guarantees termination; all arithmetic is
// exact so the feasibility decision is exact.
class PhaseOne {
public:
    PhaseOne(std::vector<std::vector<Rational>> rows, std::vector<Rational> rhs)
        : m_(rows.size()), n_(m_ ? rows.front().size() : 0) {
        const std::size_t cols = n_ + m_;
        tableau_.assign(m_ + 1, std::vector<Rational>(cols + 1));
        basis_.resize(m_);
        for (std::size_t i = 0; i < m_; ++i) {
            const bool flip = rhs[i] < 0;
            for (std::size_t j = 0; j < n_; ++j) tableau_[i][j] = flip ? -rows[i][j] : rows[i][j];
            tableau_[i][n_ + i] = 1;
            tableau_[i][cols] = flip ? -rhs[i] : rhs[i];
            basis_[i] = n_ + i;
        }
        auto& obj = tableau_[m_];
        for (std::size_t j = 0; j < n_; ++j) {
            for (std::size_t i = 0; i < m_; ++i) obj[j] -= tableau_[i][j];
        }
        for (std::size_t i = 0; i < m_; ++i) obj[cols] -= tableau_[i][cols];
    }

    /// Runs to optimality; returns x (structural part) when the artificial sum reaches 0.
    std::optional<std::vector<Rational>> solve() {
        const std::size_t rhs_col = n_ + m_;
        for (;;) {
            std::size_t enter = n_;
            for (std::size_t j = 0; j < n_; ++j) {
                if (tableau_[m_][j] < 0) {
                    enter = j;
                    break;
                }
            }
            if (enter == n_) break;

            std::size_t leave = m_;
            Rational best;
            for (std::size_t i = 0; i < m_; ++i) {
                if (tableau_[i][enter] <= 0) continue;
                Rational ratio = tableau_[i][rhs_col] / tableau_[i][enter];
                if (leave == m_ || ratio < best || (ratio == best && basis_[i] < basis_[leave])) {
                    leave = i;
                    best = std::move(ratio);
                }
            }
            // Phase one is bounded below by 0, so some row always limits the step.
            if (leave == m_) throw InvariantViolation("phase-one simplex reported an unbounded ray");
            pivot(leave, enter);
        }
        if (tableau_[m_][rhs_col] != 0) return std::nullopt;

        std::vector<Rational> x(n_);
        for (std::size_t i = 0; i < m_; ++i) {
            if (basis_[i] < n_) x[basis_[i]] = tableau_[i][rhs_col];
        }
        return x;
    }

private:
    void pivot(std::size_t row, std::size_t col) {
        auto& pr = tableau_[row];
        const Rational inv = 1 / pr[col];
        for (auto& e : pr) e *= inv;
        for (std::size_t i = 0; i <= m_; ++i) {
            if (i == row || tableau_[i][col] == 0) continue;
            const Rational f = tableau_[i][col];
            auto& r = tableau_[i];
            for (std::size_t j = 0; j < r.size(); ++j) {
                if (pr[j] != 0) r[j] -= f * pr[j];
            }
        }
        basis_[row] = col;
    }

    std::size_t m_;
    std::size_t n_;
    std::vector<std::vector<Rational>> tableau_;  // last row: reduced costs
    std::vector<std::size_t> basis_;
};

}  // namespace detail

/// Exact feasibility of a system of linear constraints over v in Q^dim.
/// Returns a witness that satisfies every constraint exactly, or nullopt when
/// the system is infeasible. An empty system yields the zero vector.
inline std::optional<QVector> feasible(std::span<const Constraint> constraints, std::size_t dim) {
    for (const auto& k : constraints) {
        if (k.a.dim() != dim) throw InputError("constraint dimension mismatch in feasibility system");
    }
    if (constraints.empty()) return QVector(dim);

    // v = p - q with p, q >= 0; each >= row gets a surplus column.
    std::size_t surplus = 0;
    for (const auto& k : constraints) surplus += k.rel == Relation::GreaterEq;
    const std::size_t cols = 2 * dim + surplus;

    std::vector<std::vector<Rational>> rows;
    std::vector<Rational> rhs;
    rows.reserve(constraints.size());
    std::size_t s = 0;
    for (const auto& k : constraints) {
        std::vector<Rational> row(cols);
        for (std::size_t j = 0; j < dim; ++j) {
            row[j] = k.a[j];
            row[dim + j] = -k.a[j];
        }
        if (k.rel == Relation::GreaterEq) row[2 * dim + s++] = -1;
        rows.push_back(std::move(row));
        rhs.push_back(k.c);
    }

    auto x = detail::PhaseOne(std::move(rows), std::move(rhs)).solve();
    if (!x) return std::nullopt;
    QVector v(dim);
    for (std::size_t j = 0; j < dim; ++j) v[j] = (*x)[j] - (*x)[dim + j];
    for (const auto& k : constraints) {
        if (!satisfies(k, v)) throw InvariantViolation("feasibility witness fails substitution");
    }
    return v;
}

inline std::optional<QVector> feasible(std::initializer_list<Constraint> constraints, std::size_t dim) {
    return feasible(std::span<const Constraint>(constraints.begin(), constraints.size()), dim);
}

}  // namespace illum
