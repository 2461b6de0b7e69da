#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "illum/classify.hpp"
#include "illum/polytope.hpp"
#include "illum/position.hpp"

namespace illum {

/// Full-dimensional simplicial cone spanned by n normals.
struct FanCone {
    IndexSet indices;  // into the normal set, ascending
    std::vector<QVector> generators;
    std::optional<Vertex> associated_vertex;
};

/// Every primitive n-subset of N that is separated from 0, in lexicographic order.
inline std::vector<FanCone> enumerate_primitive_bases(const NormalSet& normals) {
    validate_normal_set(normals);
    detail::guard_subset_count(normals.size(), normals.dim());
    std::vector<FanCone> out;
    for_each_combination(normals.size(), normals.dim(), [&](std::span<const std::size_t> s) {
        auto gens = normals.pick(s);
        if (is_primitive(std::span<const QVector>(gens), normals) && separating_functional(gens)) {
            out.push_back({IndexSet(s.begin(), s.end()), std::move(gens), std::nullopt});
        }
        return true;
    });
    return out;
}

/// One cone per vertex, spanned by its tight normals. Requires a simple polytope.
inline std::vector<FanCone> normal_fan(const HPolytope& p) {
    std::vector<FanCone> out;
    for (const auto& v : p.vertices()) {
        if (v.tight.size() != p.dim()) {
            throw InputError("non-simple vertex " + to_string(v.point) + " has " + std::to_string(v.tight.size()) +
                             " tight normals in dimension " + std::to_string(p.dim()));
        }
        out.push_back({v.tight, p.normal_set().pick(v.tight), v});
    }
    std::sort(out.begin(), out.end(), [](const FanCone& a, const FanCone& b) { return a.indices < b.indices; });
    return out;
}

/// True when the interiors of pos(a) and pos(b) share a point.
inline bool interiors_meet(std::span<const QVector> a, std::span<const QVector> b) {
    const std::size_t vars = a.size() + b.size(), dim = a.front().dim();
    std::vector<Constraint> sys;
    for (std::size_t k = 0; k < dim; ++k) {
        QVector row(vars);
        for (std::size_t i = 0; i < a.size(); ++i) row[i] = a[i][k];
        for (std::size_t j = 0; j < b.size(); ++j) row[a.size() + j] = -b[j][k];
        sys.push_back({std::move(row), 0, Relation::Equal});
    }
    for (std::size_t i = 0; i < vars; ++i) sys.push_back({QVector::unit(vars, i), 1, Relation::GreaterEq});
    return feasible(sys, vars).has_value();
}

struct FanUniquenessReport {
    bool unique = false;
    bool cones_match = false;
    std::size_t primitive_bases = 0;
    std::size_t normal_fan_cones = 0;
    std::optional<std::pair<IndexSet, IndexSet>> overlapping;  // two bases whose interiors meet
};

/// Cross-checks the combinatorial fan of primitive bases against the normal
/// fan of a concrete polytope, and that the primitive cones tile without overlap.
inline FanUniquenessReport verify_fan_uniqueness(const NormalSet& normals, const HPolytope& p) {
    if (!(normals == p.normal_set())) throw InputError("normal set does not match the polytope's facet normals");
    if (!check_monotypy(normals).holds) throw InputError("fan uniqueness requires a monotypic normal set");

    FanUniquenessReport r;
    const auto bases = enumerate_primitive_bases(normals);
    const auto fan = normal_fan(p);
    r.primitive_bases = bases.size();
    r.normal_fan_cones = fan.size();
    r.cones_match = bases.size() == fan.size() &&
                    std::equal(bases.begin(), bases.end(), fan.begin(),
                               [](const FanCone& a, const FanCone& b) { return a.indices == b.indices; });
    for (std::size_t i = 0; i < bases.size() && !r.overlapping; ++i) {
        for (std::size_t j = i + 1; j < bases.size(); ++j) {
            if (interiors_meet(bases[i].generators, bases[j].generators)) {
                r.overlapping.emplace(bases[i].indices, bases[j].indices);
                break;
            }
        }
    }
    r.unique = r.cones_match && !r.overlapping;
    return r;
}

}  // namespace illum
