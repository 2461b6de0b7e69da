#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "illum/classify.hpp"
#include "illum/position.hpp"

namespace illum {

/// The normal set has n+1 normals in conical position. Carries them.
class NotStronglyMonotypic : public std::runtime_error {
public:
    NotStronglyMonotypic(const std::string& what, Certificate certificate)
        : std::runtime_error(what), certificate_(std::move(certificate)) {}

    const Certificate& certificate() const { return certificate_; }

private:
    Certificate certificate_;
};

/// Basis b_1..b_n of normals plus disjoint parts X_1..X_k. Each part is the
/// basis elements of its support followed by one extra normal x_l whose
/// coefficients on that support are all negative.
struct Skeleton {
    std::vector<QVector> basis;
    std::vector<std::vector<QVector>> parts;
    std::vector<IndexSet> part_supports;  // basis positions, ascending

    std::size_t product() const {
        std::size_t q = 1;
        for (const auto& p : parts) q *= p.size();
        return q;
    }
};

/// Basis positions where x has a nonzero coefficient.
inline IndexSet cartesian_support(std::span<const QVector> basis, const QVector& x) {
    auto lambda = solve_linear(basis, x);
    if (!lambda) throw InputError("cartesian_support: basis is linearly dependent");
    IndexSet s;
    for (std::size_t i = 0; i < lambda->dim(); ++i) {
        if ((*lambda)[i] != 0) s.push_back(i);
    }
    return s;
}

namespace detail {

inline std::size_t normals_in_cone(const NormalSet& normals, std::span<const QVector> basis) {
    std::size_t count = 0;
    for (const auto& x : normals) {
        const auto lambda = solve_linear(basis, x);
        count += std::all_of(lambda->begin(), lambda->end(), [](const Rational& r) { return r >= 0; });
    }
    return count;
}

inline NotStronglyMonotypic conical_failure(const std::string& why, std::vector<QVector> points) {
    Certificate c;
    c.separator = separating_functional(points);
    c.subset = std::move(points);
    return NotStronglyMonotypic(why, std::move(c));
}

}  // namespace detail

struct RefinedBasis {
    IndexSet basis;  // normal indices, by basis position
    std::size_t swaps = 0;
};

/// Local search for a swap-stable basis: every other normal has all
/// coefficients nonpositive or all nonnegative. Starts from `start` or the
/// first independent n-subset; swaps b_i <- x on SinglePositive(i), which
/// strictly grows pos B. A Mixed normal ends the search with a conical
/// (n+1)-subset.
inline RefinedBasis refine_basis(const NormalSet& normals, std::optional<IndexSet> start = std::nullopt) {
    validate_normal_set(normals);
    const std::size_t n = normals.dim();

    RefinedBasis r;
    if (start) {
        if (start->size() != n || !linearly_independent(normals.pick(*start))) {
            throw InputError("starting basis must be n linearly independent normals");
        }
        r.basis = *start;
    } else {
        auto first = find_first_combination(normals.size(), n, [&](std::span<const std::size_t> s) {
            return linearly_independent(normals.pick(s));
        });
        r.basis = *first;  // exists: N spans
    }

    std::vector<QVector> b = normals.pick(r.basis);
    std::size_t covered = detail::normals_in_cone(normals, b);
    for (bool changed = true; changed;) {
        changed = false;
        for (std::size_t x = 0; x < normals.size(); ++x) {
            if (std::find(r.basis.begin(), r.basis.end(), x) != r.basis.end()) continue;
            const SignClass sc = classify_signs(b, normals[x]);
            if (sc.tag == SignClass::Tag::Mixed) {
                std::vector<QVector> pts{normals[x]};
                pts.insert(pts.end(), b.begin(), b.end());
                throw detail::conical_failure("normal " + to_string(normals[x]) + " has mixed signs over the basis",
                                              std::move(pts));
            }
            if (sc.tag != SignClass::Tag::SinglePositive) continue;
            r.basis[*sc.positive_index] = x;
            b[*sc.positive_index] = normals[x];
            ++r.swaps;
            const std::size_t now = detail::normals_in_cone(normals, b);
            if (now <= covered || r.swaps > normals.size()) {
                throw InvariantViolation("basis swap did not enlarge the positive hull");
            }
            covered = now;
            changed = true;
            break;
        }
    }
    return r;
}

/// Independent re-check of the skeleton properties; returns a description of
/// the first failure, or nullopt.
inline std::optional<std::string> skeleton_defect(const Skeleton& s, std::size_t dim) {
    if (s.parts.size() != s.part_supports.size()) return "parts and supports differ in count";
    std::vector<QVector> all;
    std::size_t rank_sum = 0;
    for (std::size_t l = 0; l < s.parts.size(); ++l) {
        const auto& part = s.parts[l];
        const std::size_t r = rank(part);
        if (part.size() != r + 1) return "part " + std::to_string(l) + " is not a simplex through its span";
        rank_sum += r;
        all.insert(all.end(), part.begin(), part.end());

        // 0 in the relative interior: strictly positive weights summing to 0.
        std::vector<Constraint> sys;
        const std::size_t m = part.size();
        for (std::size_t k = 0; k < dim; ++k) {
            QVector row(m);
            for (std::size_t i = 0; i < m; ++i) row[i] = part[i][k];
            sys.push_back({std::move(row), 0, Relation::Equal});
        }
        for (std::size_t i = 0; i < m; ++i) sys.push_back({QVector::unit(m, i), 1, Relation::GreaterEq});
        if (!feasible(sys, m)) return "part " + std::to_string(l) + " does not contain 0 in its relative interior";
    }
    for (std::size_t a = 0; a < s.parts.size(); ++a) {
        for (std::size_t b = a + 1; b < s.parts.size(); ++b) {
            for (const auto& x : s.parts[a]) {
                if (std::find(s.parts[b].begin(), s.parts[b].end(), x) != s.parts[b].end()) return "parts overlap";
            }
        }
    }
    if (rank_sum != dim || rank(all) != dim) return "part spans do not form a direct sum of the whole space";
    if (dim < 64 && s.product() > (std::size_t{1} << dim)) return "product of part sizes exceeds 2^n";
    return std::nullopt;
}

/// Builds X_1..X_k from a swap-stable basis: the negative-side normals'
/// supports form a laminar family whose maximal members partition the basis.
inline Skeleton extract_skeleton(const NormalSet& normals, std::optional<IndexSet> start = std::nullopt) {
    const RefinedBasis rb = refine_basis(normals, std::move(start));
    const std::vector<QVector> b = normals.pick(rb.basis);
    const std::size_t n = normals.dim();

    struct Negative {
        std::size_t index;
        IndexSet support;
    };
    std::vector<Negative> negatives;
    for (std::size_t x = 0; x < normals.size(); ++x) {
        if (std::find(rb.basis.begin(), rb.basis.end(), x) != rb.basis.end()) continue;
        const SignClass sc = classify_signs(b, normals[x]);
        if (sc.tag == SignClass::Tag::AllNonpositive) negatives.push_back({x, cartesian_support(b, normals[x])});
    }

    auto subset_of = [](const IndexSet& a, const IndexSet& c) {
        return std::includes(c.begin(), c.end(), a.begin(), a.end());
    };
    for (std::size_t i = 0; i < negatives.size(); ++i) {
        for (std::size_t j = i + 1; j < negatives.size(); ++j) {
            const auto& sx = negatives[i].support;
            const auto& sy = negatives[j].support;
            IndexSet common;
            std::set_intersection(sx.begin(), sx.end(), sy.begin(), sy.end(), std::back_inserter(common));
            if (common.empty() || subset_of(sx, sy) || subset_of(sy, sx)) continue;
            // Overlapping, non-nested supports: dropping a shared basis element
            // leaves x, y and the rest of the basis in conical position.
            std::vector<QVector> pts{normals[negatives[i].index], normals[negatives[j].index]};
            for (std::size_t k = 0; k < n; ++k) {
                if (k != common.front()) pts.push_back(b[k]);
            }
            if (!is_conical_position(pts).conical) {
                throw InvariantViolation("laminar violation without a conical witness");
            }
            throw detail::conical_failure("negative-side supports overlap without nesting", std::move(pts));
        }
    }

    std::vector<const Negative*> maximal;
    for (const auto& neg : negatives) {
        const bool dominated = std::any_of(negatives.begin(), negatives.end(), [&](const Negative& o) {
            return o.support.size() > neg.support.size() && subset_of(neg.support, o.support);
        });
        const bool repeat = std::any_of(maximal.begin(), maximal.end(),
                                        [&](const Negative* m) { return m->support == neg.support; });
        // Negatives are scanned in canonical order, so the first normal with a
        // given maximal support is the one kept.
        if (!dominated && !repeat) maximal.push_back(&neg);
    }
    std::vector<int> covered(n, 0);
    for (const auto* m : maximal) {
        for (std::size_t k : m->support) ++covered[k];
    }
    for (std::size_t k = 0; k < n; ++k) {
        if (covered[k] == 0) {
            throw InputError("maximal negative supports miss basis element " + to_string(b[k]) +
                             "; 0 is not interior to the convex hull of the normals");
        }
        if (covered[k] > 1) throw InvariantViolation("maximal negative supports are not disjoint");
    }
    std::sort(maximal.begin(), maximal.end(),
              [](const Negative* a, const Negative* c) { return a->support.front() < c->support.front(); });

    Skeleton s;
    s.basis = b;
    for (const auto* m : maximal) {
        std::vector<QVector> part;
        for (std::size_t k : m->support) part.push_back(b[k]);
        part.push_back(normals[m->index]);
        s.parts.push_back(std::move(part));
        s.part_supports.push_back(m->support);
    }
    if (auto defect = skeleton_defect(s, n)) throw InvariantViolation("skeleton check failed: " + *defect);
    return s;
}

}  // namespace illum
