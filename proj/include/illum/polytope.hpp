#pragma once

#include <map>
#include <numeric>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "illum/combinations.hpp"
#include "illum/feasibility.hpp"
#include "illum/linalg.hpp"
#include "illum/rational.hpp"

namespace illum {

/// True when b is a positive multiple of a.
inline bool same_direction(const QVector& a, const QVector& b) {
    if (a.dim() != b.dim()) return false;
    std::size_t i = 0;
    while (i < a.dim() && a[i] == 0) ++i;
    if (i == a.dim() || b[i] == 0 || sign(a[i]) != sign(b[i])) return false;
    const Rational t = b[i] / a[i];
    for (std::size_t j = 0; j < a.dim(); ++j) {
        if (b[j] != t * a[j]) return false;
    }
    return true;
}

/// Solves A x = b for square A given by its rows; nullopt when singular.
inline std::optional<QVector> solve_rows(std::span<const QVector> rows, const QVector& rhs) {
    const std::size_t n = rhs.dim();
    if (rows.size() != n) throw InputError("solve_rows needs a square system");
    std::vector<QVector> cols(n, QVector(n));
    for (std::size_t r = 0; r < n; ++r) {
        if (rows[r].dim() != n) throw InputError("dimension mismatch in solve_rows");
        for (std::size_t c = 0; c < n; ++c) cols[c][r] = rows[r][c];
    }
    return solve_linear(cols, rhs);
}

/// Facet normals of a polytope: nonzero, pairwise non-parallel-in-direction,
/// stored in canonical order (see canonical_before).
class NormalSet {
public:
    NormalSet() = default;

    /// Validates and canonically sorts. Errors name the offending input index.
    static NormalSet make(std::vector<QVector> normals) {
        NormalSet ns;
        ns.input_order_.resize(normals.size());
        std::iota(ns.input_order_.begin(), ns.input_order_.end(), std::size_t{0});
        if (normals.empty()) throw InputError("normal set is empty");
        const std::size_t dim = normals.front().dim();
        if (dim == 0) throw InputError("dimension must be positive", 0);
        for (std::size_t i = 0; i < normals.size(); ++i) {
            if (normals[i].dim() != dim) {
                throw InputError("facet " + std::to_string(i) + ": dimension mismatch (expected " +
                                     std::to_string(dim) + ")",
                                 i);
            }
            if (normals[i].is_zero()) throw InputError("facet " + std::to_string(i) + ": zero normal", i);
            for (std::size_t j = 0; j < i; ++j) {
                if (same_direction(normals[j], normals[i])) {
                    throw InputError("facet " + std::to_string(i) + ": duplicate direction (positive multiple of facet " +
                                         std::to_string(j) + ")",
                                     i);
                }
            }
        }
        std::sort(ns.input_order_.begin(), ns.input_order_.end(),
                  [&](std::size_t a, std::size_t b) { return canonical_before(normals[a], normals[b]); });
        ns.normals_.reserve(normals.size());
        for (std::size_t i : ns.input_order_) ns.normals_.push_back(normals[i]);
        ns.dim_ = dim;
        return ns;
    }

    std::size_t dim() const { return dim_; }
    std::size_t size() const { return normals_.size(); }
    const QVector& operator[](std::size_t i) const { return normals_[i]; }
    const std::vector<QVector>& normals() const { return normals_; }
    auto begin() const { return normals_.begin(); }
    auto end() const { return normals_.end(); }

    /// Position of the i-th canonical normal in the caller's original list.
    std::size_t input_index(std::size_t i) const { return input_order_[i]; }

    std::optional<std::size_t> index_of(const QVector& v) const {
        for (std::size_t i = 0; i < normals_.size(); ++i) {
            if (normals_[i] == v) return i;
        }
        return std::nullopt;
    }

    std::vector<QVector> pick(std::span<const std::size_t> idx) const {
        std::vector<QVector> out;
        out.reserve(idx.size());
        for (std::size_t i : idx) out.push_back(normals_[i]);
        return out;
    }

    friend bool operator==(const NormalSet& a, const NormalSet& b) { return a.normals_ == b.normals_; }

private:
    std::size_t dim_ = 0;
    std::vector<QVector> normals_;
    std::vector<std::size_t> input_order_;
};

struct Vertex {
    QVector point;
    IndexSet tight;  // indices into the normal set, ascending
};

enum class Location { Interior, Boundary, Outside };

inline const char* to_string(Location l) {
    switch (l) {
        case Location::Interior: return "interior";
        case Location::Boundary: return "boundary";
        case Location::Outside: return "outside";
    }
    return "?";
}

/// A nonzero v with <n, v> <= 0 for every normal, i.e. a recession direction
/// of any polyhedron with these normals. nullopt iff such polyhedra are bounded.
inline std::optional<QVector> recession_direction(std::span<const QVector> normals, std::size_t dim) {
    std::vector<Constraint> sys;
    for (const auto& n : normals) sys.push_back({-n, 0, Relation::GreaterEq});
    for (std::size_t k = 0; k < dim; ++k) {
        for (int s : {1, -1}) {
            QVector e = QVector::unit(dim, k);
            e *= Rational(s);
            sys.push_back({e, 1, Relation::GreaterEq});
            if (auto v = feasible(sys, dim)) return v;
            sys.pop_back();
        }
    }
    return std::nullopt;
}

/// Farkas multipliers y >= 0 with sum y_i n_i = 0 and sum y_i h_i < 0 when
/// {x : <n_i, x> <= h_i} is empty; nullopt when it is nonempty.
inline std::optional<QVector> infeasibility_certificate(std::span<const QVector> normals,
                                                        std::span<const Rational> offsets, std::size_t dim) {
    const std::size_t m = normals.size();
    std::vector<Constraint> sys;
    for (std::size_t k = 0; k < dim; ++k) {
        QVector row(m);
        for (std::size_t i = 0; i < m; ++i) row[i] = normals[i][k];
        sys.push_back({row, 0, Relation::Equal});
    }
    QVector h(m);
    for (std::size_t i = 0; i < m; ++i) h[i] = -offsets[i];
    sys.push_back({h, 1, Relation::GreaterEq});
    for (std::size_t i = 0; i < m; ++i) sys.push_back({QVector::unit(m, i), 0, Relation::GreaterEq});
    return feasible(sys, m);
}

/// A point strictly inside every halfspace, if one exists.
inline std::optional<QVector> strict_interior_point(std::span<const QVector> normals, std::span<const Rational> offsets,
                                                    std::size_t dim) {
    // Homogenized: (y, t) with <n, y> - h t <= -1 and t >= 1; x = y / t.
    std::vector<Constraint> sys;
    for (std::size_t i = 0; i < normals.size(); ++i) {
        QVector a(dim + 1);
        for (std::size_t k = 0; k < dim; ++k) a[k] = -normals[i][k];
        a[dim] = offsets[i];
        sys.push_back({a, 1, Relation::GreaterEq});
    }
    sys.push_back({QVector::unit(dim + 1, dim), 1, Relation::GreaterEq});
    auto w = feasible(sys, dim + 1);
    if (!w) return std::nullopt;
    QVector x(dim);
    for (std::size_t k = 0; k < dim; ++k) x[k] = (*w)[k] / (*w)[dim];
    return x;
}

/// All vertices of {x : <n_i, x> <= h_i}, found by solving every n-subset of
/// constraints and keeping feasible solutions. Sorted canonically by point.
inline std::vector<Vertex> enumerate_vertices(std::span<const QVector> normals, std::span<const Rational> offsets) {
    if (normals.empty()) throw InputError("empty constraint system");
    if (normals.size() != offsets.size()) throw InputError("normals and offsets differ in length");
    const std::size_t dim = normals.front().dim();
    if (auto ray = recession_direction(normals, dim)) {
        throw InputError("unbounded: recession direction " + to_string(*ray));
    }
    if (auto y = infeasibility_certificate(normals, offsets, dim)) {
        throw InputError("empty: infeasibility multipliers " + to_string(*y));
    }

    std::map<QVector, IndexSet, decltype(&canonical_before)> found(&canonical_before);
    QVector rhs(dim);
    std::vector<QVector> rows(dim);
    for_each_combination(normals.size(), dim, [&](std::span<const std::size_t> s) {
        for (std::size_t i = 0; i < dim; ++i) {
            rows[i] = normals[s[i]];
            rhs[i] = offsets[s[i]];
        }
        auto x = solve_rows(rows, rhs);
        if (!x || found.count(*x)) return true;
        IndexSet tight;
        for (std::size_t i = 0; i < normals.size(); ++i) {
            const Rational v = dot(normals[i], *x);
            if (v > offsets[i]) return true;
            if (v == offsets[i]) tight.push_back(i);
        }
        found.emplace(std::move(*x), std::move(tight));
        return true;
    });

    std::vector<Vertex> out;
    out.reserve(found.size());
    for (auto& [p, t] : found) out.push_back({p, t});
    return out;
}

/// A bounded, full-dimensional polytope {x : <n, x> <= h(n)} whose every
/// constraint defines a facet. Vertices are computed once at construction.
class HPolytope {
public:
    HPolytope() = default;

    static HPolytope make(std::vector<QVector> normals, std::vector<Rational> offsets) {
        if (normals.size() != offsets.size()) throw InputError("normals and offsets differ in length");
        HPolytope p;
        p.normals_ = NormalSet::make(normals);
        const std::size_t dim = p.normals_.dim();
        for (std::size_t i = 0; i < p.normals_.size(); ++i) p.offsets_.push_back(offsets[p.normals_.input_index(i)]);

        if (auto ray = recession_direction(p.normals_.normals(), dim)) {
            throw InputError("unbounded: recession direction " + to_string(*ray));
        }
        if (auto y = infeasibility_certificate(p.normals_.normals(), p.offsets_, dim)) {
            throw InputError("empty: infeasibility multipliers " + to_string(*y));
        }
        if (!strict_interior_point(p.normals_.normals(), p.offsets_, dim)) {
            throw InputError("not full-dimensional: no point satisfies every constraint strictly");
        }
        p.vertices_ = enumerate_vertices(p.normals_.normals(), p.offsets_);

        // Facet-defining iff the vertices on the hyperplane affinely span dim - 1.
        for (std::size_t f = 0; f < p.normals_.size(); ++f) {
            std::vector<QVector> diffs;
            const QVector* base = nullptr;
            for (const auto& v : p.vertices_) {
                if (!std::binary_search(v.tight.begin(), v.tight.end(), f)) continue;
                if (!base) {
                    base = &v.point;
                } else {
                    diffs.push_back(v.point - *base);
                }
            }
            if (!base || rank(diffs) + 1 < dim) {
                const std::size_t in = p.normals_.input_index(f);
                throw InputError("facet " + std::to_string(in) + ": redundant constraint (does not define a facet)", in);
            }
        }
        return p;
    }

    std::size_t dim() const { return normals_.dim(); }
    const NormalSet& normal_set() const { return normals_; }
    const std::vector<Rational>& offsets() const { return offsets_; }
    const Rational& offset(std::size_t i) const { return offsets_[i]; }
    const std::vector<Vertex>& vertices() const { return vertices_; }

    bool is_simple() const {
        return std::all_of(vertices_.begin(), vertices_.end(), [&](const Vertex& v) { return v.tight.size() == dim(); });
    }

    friend bool operator==(const HPolytope& a, const HPolytope& b) {
        return a.normals_ == b.normals_ && a.offsets_ == b.offsets_;
    }

private:
    NormalSet normals_;
    std::vector<Rational> offsets_;
    std::vector<Vertex> vertices_;
};

inline const std::vector<Vertex>& enumerate_vertices(const HPolytope& p) { return p.vertices(); }

/// h_P(n) = max over vertices of <n, x>.
inline Rational support_value(const HPolytope& p, const QVector& n) {
    if (n.is_zero()) throw InputError("support_value of the zero vector");
    if (n.dim() != p.dim()) throw InputError("dimension mismatch in support_value");
    const auto& vs = p.vertices();
    Rational best = dot(n, vs.front().point);
    for (const auto& v : vs) best = std::max(best, dot(n, v.point));
    return best;
}

inline Location point_location(const HPolytope& p, const QVector& x) {
    if (x.dim() != p.dim()) throw InputError("dimension mismatch in point_location");
    bool tight = false;
    for (std::size_t i = 0; i < p.normal_set().size(); ++i) {
        const Rational v = dot(p.normal_set()[i], x);
        if (v > p.offset(i)) return Location::Outside;
        tight = tight || v == p.offset(i);
    }
    return tight ? Location::Boundary : Location::Interior;
}

/// {n : h(n) - <n, x> <= slack}; slack = 0 gives the exact tight set.
inline IndexSet tight_normals(const HPolytope& p, const QVector& x, const Rational& slack) {
    if (slack < 0) throw InputError("negative slack");
    if (point_location(p, x) == Location::Outside) throw InputError("point " + to_string(x) + " lies outside P");
    IndexSet out;
    for (std::size_t i = 0; i < p.normal_set().size(); ++i) {
        if (p.offset(i) - dot(p.normal_set()[i], x) <= slack) out.push_back(i);
    }
    return out;
}

}  // namespace illum
