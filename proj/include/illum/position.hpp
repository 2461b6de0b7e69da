#pragma once

#include <optional>
#include <span>
#include <vector>

#include "illum/feasibility.hpp"
#include "illum/linalg.hpp"
#include "illum/polytope.hpp"

namespace illum {

// Sign pattern of x = sum lambda_i a_i over an independent basis. The four
// cases correspond to: {x} u basis not separated from 0 (AllNonpositive);
// some point in the positive hull of the others (AllNonnegative,
// SinglePositive); conical position (Mixed).
struct SignClass {
    enum class Tag { AllNonpositive, AllNonnegative, SinglePositive, Mixed };

    Tag tag;
    QVector coefficients;
    std::optional<std::size_t> positive_index;  // set for SinglePositive
};

inline const char* to_string(SignClass::Tag t) {
    switch (t) {
        case SignClass::Tag::AllNonpositive: return "AllNonpositive";
        case SignClass::Tag::AllNonnegative: return "AllNonnegative";
        case SignClass::Tag::SinglePositive: return "SinglePositive";
        case SignClass::Tag::Mixed: return "Mixed";
    }
    return "?";
}

inline SignClass classify_signs(std::span<const QVector> basis, const QVector& x) {
    auto lambda = solve_linear(basis, x);
    if (!lambda) throw InputError("classify_signs: basis is linearly dependent");
    std::size_t pos = 0, neg = 0, last_pos = 0;
    for (std::size_t i = 0; i < lambda->dim(); ++i) {
        if ((*lambda)[i] > 0) {
            ++pos;
            last_pos = i;
        } else if ((*lambda)[i] < 0) {
            ++neg;
        }
    }
    using Tag = SignClass::Tag;
    if (pos == 0) return {Tag::AllNonpositive, std::move(*lambda), std::nullopt};
    if (neg == 0) return {Tag::AllNonnegative, std::move(*lambda), std::nullopt};
    if (pos == 1) return {Tag::SinglePositive, std::move(*lambda), last_pos};
    return {Tag::Mixed, std::move(*lambda), std::nullopt};
}

/// Nonnegative mu with x = sum mu_i g_i, or nullopt when x is outside pos(generators).
inline std::optional<QVector> cone_membership(const QVector& x, std::span<const QVector> generators) {
    const std::size_t m = generators.size();
    for (const auto& g : generators) {
        if (g.dim() != x.dim()) throw InputError("dimension mismatch in cone_membership");
    }
    std::vector<Constraint> sys;
    for (std::size_t k = 0; k < x.dim(); ++k) {
        QVector row(m);
        for (std::size_t i = 0; i < m; ++i) row[i] = generators[i][k];
        sys.push_back({std::move(row), x[k], Relation::Equal});
    }
    for (std::size_t i = 0; i < m; ++i) sys.push_back({QVector::unit(m, i), 0, Relation::GreaterEq});
    return feasible(sys, m);
}

/// v with <s, v> >= 1 for every s, i.e. a hyperplane strictly separating S from 0.
inline std::optional<QVector> separating_functional(std::span<const QVector> points) {
    if (points.empty()) return std::nullopt;
    std::vector<Constraint> sys;
    for (const auto& s : points) sys.push_back({s, 1, Relation::GreaterEq});
    return feasible(sys, points.front().dim());
}

struct ConicalVerdict {
    enum class Reason { None, NotSeparated, InPositiveHull };

    bool conical = false;
    Reason reason = Reason::None;
    std::optional<QVector> separator;          // when separated
    std::optional<std::size_t> covered_index;  // point lying in pos of the others
    std::optional<QVector> hull_coefficients;  // its coefficients over the others, in order
};

/// Conical position: strictly separated from 0 and no point in the positive
/// hull of the others.
inline ConicalVerdict is_conical_position(std::span<const QVector> points) {
    if (points.empty()) throw InputError("is_conical_position on an empty set");
    ConicalVerdict verdict;
    verdict.separator = separating_functional(points);
    if (!verdict.separator) {
        verdict.reason = ConicalVerdict::Reason::NotSeparated;
        return verdict;
    }
    std::vector<QVector> others;
    for (std::size_t i = 0; i < points.size(); ++i) {
        others.clear();
        for (std::size_t j = 0; j < points.size(); ++j) {
            if (j != i) others.push_back(points[j]);
        }
        if (auto mu = cone_membership(points[i], others)) {
            verdict.reason = ConicalVerdict::Reason::InPositiveHull;
            verdict.covered_index = i;
            verdict.hull_coefficients = std::move(mu);
            return verdict;
        }
    }
    verdict.conical = true;
    return verdict;
}

/// Independent and pos(V) contains no normal of N outside V.
inline bool is_primitive(std::span<const QVector> subset, const NormalSet& normals) {
    if (!linearly_independent(subset)) return false;
    for (const auto& n : normals) {
        if (std::find(subset.begin(), subset.end(), n) != subset.end()) continue;
        if (cone_membership(n, subset)) return false;
    }
    return true;
}

inline bool is_primitive(std::span<const std::size_t> subset, const NormalSet& normals) {
    const auto vs = normals.pick(subset);
    return is_primitive(std::span<const QVector>(vs), normals);
}

}  // namespace illum
