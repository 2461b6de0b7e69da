#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "illum/combinations.hpp"
#include "illum/position.hpp"

namespace illum {

/// Largest subset family the exhaustive characterizations will walk.
inline constexpr std::uint64_t kMaxSubsetCount = 10'000'000;

/// Witness for a negative verdict. Conical-position failures fill `subset`
/// (and `separator`); the primitive-subset test fills `subset`, `second` and
/// `common_point`.
struct Certificate {
    std::vector<QVector> subset;
    std::vector<QVector> second;
    std::optional<QVector> separator;
    std::optional<QVector> common_point;
};

struct CheckResult {
    bool holds = true;
    std::optional<Certificate> certificate;
};

/// Ensures N is the facet-normal set of some bounded polytope: N spans and 0
/// is a strictly positive combination of all normals (0 in int conv N).
inline void validate_normal_set(const NormalSet& normals) {
    const std::size_t n = normals.dim();
    if (rank(normals.normals()) != n) throw InputError("normals do not span the ambient space");
    const std::size_t m = normals.size();
    std::vector<Constraint> sys;
    for (std::size_t k = 0; k < n; ++k) {
        QVector row(m);
        for (std::size_t i = 0; i < m; ++i) row[i] = normals[i][k];
        sys.push_back({std::move(row), 0, Relation::Equal});
    }
    for (std::size_t i = 0; i < m; ++i) sys.push_back({QVector::unit(m, i), 1, Relation::GreaterEq});
    if (!feasible(sys, m)) throw InputError("0 is not in the interior of the convex hull of the normals");
}

namespace detail {

inline void guard_subset_count(std::size_t pool, std::size_t k) {
    if (binomial(pool, k) > kMaxSubsetCount) {
        throw InputError("instance too large: C(" + std::to_string(pool) + ", " + std::to_string(k) + ") exceeds " +
                         std::to_string(kMaxSubsetCount) + " subsets");
    }
}

inline bool hull_contains_other(std::span<const std::size_t> subset, const NormalSet& normals) {
    const auto gens = normals.pick(subset);
    for (std::size_t i = 0; i < normals.size(); ++i) {
        if (std::find(subset.begin(), subset.end(), i) != subset.end()) continue;
        if (cone_membership(normals[i], gens)) return true;
    }
    return false;
}

inline Certificate conical_certificate(const NormalSet& normals, std::span<const std::size_t> subset) {
    Certificate c;
    c.subset = normals.pick(subset);
    c.separator = separating_functional(c.subset);
    return c;
}

}  // namespace detail

/// Strongly monotypic iff no n+1 normals are in conical position. The
/// certificate is the lexicographically first conical (n+1)-subset.
inline CheckResult check_strong_monotypy(const NormalSet& normals, unsigned threads = 1) {
    const std::size_t k = normals.dim() + 1;
    detail::guard_subset_count(normals.size(), k);
    validate_normal_set(normals);
    auto hit = find_first_combination(
        normals.size(), k,
        [&](std::span<const std::size_t> s) {
            const auto pts = normals.pick(s);
            return is_conical_position(pts).conical;
        },
        threads);
    if (!hit) return {};
    return {false, detail::conical_certificate(normals, *hit)};
}

/// Monotypic iff every conical (n+1)-subset has another normal in its positive hull.
inline CheckResult check_monotypy(const NormalSet& normals, unsigned threads = 1) {
    const std::size_t k = normals.dim() + 1;
    detail::guard_subset_count(normals.size(), k);
    validate_normal_set(normals);
    auto hit = find_first_combination(
        normals.size(), k,
        [&](std::span<const std::size_t> s) {
            const auto pts = normals.pick(s);
            return is_conical_position(pts).conical && !detail::hull_contains_other(s, normals);
        },
        threads);
    if (!hit) return {};
    return {false, detail::conical_certificate(normals, *hit)};
}

/// All primitive subsets of N (sizes 1..n), ordered by size then lexicographically.
inline std::vector<IndexSet> primitive_subsets(const NormalSet& normals) {
    std::uint64_t total = 0;
    for (std::size_t k = 1; k <= normals.dim(); ++k) total += binomial(normals.size(), k);
    if (total > kMaxSubsetCount) throw InputError("instance too large for primitive-subset enumeration");
    std::vector<IndexSet> out;
    for (std::size_t k = 1; k <= normals.dim(); ++k) {
        for_each_combination(normals.size(), k, [&](std::span<const std::size_t> s) {
            if (is_primitive(s, normals)) out.emplace_back(s.begin(), s.end());
            return true;
        });
    }
    return out;
}

/// Common nonzero point of pos(first) and pos(second), normalized so the
/// coefficients over `first` sum to 1. `first` must be linearly independent.
inline std::optional<QVector> common_cone_point(std::span<const QVector> first, std::span<const QVector> second) {
    const std::size_t a = first.size(), b = second.size(), dim = first.front().dim();
    const std::size_t vars = a + b;
    std::vector<Constraint> sys;
    for (std::size_t k = 0; k < dim; ++k) {
        QVector row(vars);
        for (std::size_t i = 0; i < a; ++i) row[i] = first[i][k];
        for (std::size_t j = 0; j < b; ++j) row[a + j] = -second[j][k];
        sys.push_back({std::move(row), 0, Relation::Equal});
    }
    QVector sum(vars);
    for (std::size_t i = 0; i < a; ++i) sum[i] = 1;
    sys.push_back({std::move(sum), 1, Relation::Equal});
    for (std::size_t i = 0; i < vars; ++i) sys.push_back({QVector::unit(vars, i), 0, Relation::GreaterEq});
    auto w = feasible(sys, vars);
    if (!w) return std::nullopt;
    QVector p(dim);
    for (std::size_t i = 0; i < a; ++i) p += (*w)[i] * first[i];
    return p;
}

/// Monotypic iff any two disjoint primitive subsets have positive hulls
/// meeting only at 0.
inline CheckResult check_monotypy_mss(const NormalSet& normals) {
    validate_normal_set(normals);
    const auto prims = primitive_subsets(normals);
    auto disjoint = [](const IndexSet& x, const IndexSet& y) {
        for (std::size_t i : x) {
            if (std::find(y.begin(), y.end(), i) != y.end()) return false;
        }
        return true;
    };
    for (std::size_t i = 0; i < prims.size(); ++i) {
        const auto first = normals.pick(prims[i]);
        for (std::size_t j = i + 1; j < prims.size(); ++j) {
            // Two distinct directions never share a ray.
            if (prims[i].size() == 1 && prims[j].size() == 1) continue;
            if (!disjoint(prims[i], prims[j])) continue;
            const auto second = normals.pick(prims[j]);
            if (auto p = common_cone_point(first, second)) {
                Certificate c;
                c.subset = first;
                c.second = second;
                c.common_point = std::move(p);
                return {false, std::move(c)};
            }
        }
    }
    return {};
}

enum class Method { Conical, Mss, Both };

struct ClassificationVerdict {
    bool strongly_monotypic = false;
    bool monotypic = false;
    std::optional<Certificate> certificate;
    // Filled for Method::Both: the two monotypy characterizations disagreed.
    bool characterizations_disagree = false;
};

/// Strong monotypy always via conical (n+1)-subsets; monotypy via the
/// conical criterion, the primitive-subset criterion, or both.
inline ClassificationVerdict classify(const NormalSet& normals, Method method = Method::Conical, unsigned threads = 1) {
    ClassificationVerdict v;
    const CheckResult strong = check_strong_monotypy(normals, threads);
    CheckResult mono;
    if (method == Method::Mss) {
        mono = check_monotypy_mss(normals);
    } else {
        mono = check_monotypy(normals, threads);
        if (method == Method::Both) {
            const CheckResult mss = check_monotypy_mss(normals);
            v.characterizations_disagree = mss.holds != mono.holds;
        }
    }
    v.strongly_monotypic = strong.holds;
    v.monotypic = mono.holds;
    if (!mono.holds) {
        v.certificate = mono.certificate;
    } else if (!strong.holds) {
        v.certificate = strong.certificate;
    }
    return v;
}

}  // namespace illum
