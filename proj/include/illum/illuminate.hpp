#pragma once

#include <optional>
#include <string>
#include <vector>

#include "illum/classify.hpp"
#include "illum/polytope.hpp"
#include "illum/position.hpp"
#include "illum/skeleton.hpp"

namespace illum {

/// Some vertex's tight cone lies in none of the product cones. The covering
/// argument says this cannot happen; it is reported, never worked around.
class AssignmentFailure : public InvariantViolation {
public:
    using InvariantViolation::InvariantViolation;
};

struct Assignment {
    QVector vertex;
    std::optional<std::size_t> direction;
};

struct IlluminationSet {
    std::vector<std::vector<QVector>> cones;  // generators of C_j; empty when loaded from a file
    std::vector<QVector> directions;          // v_j, unscaled
    Rational epsilon;
    std::vector<QVector> scaled;  // epsilon * v_j
    std::vector<Assignment> assignment;
    std::optional<Rational> delta;
};

/// For each (x_1..x_k) in X_1 x .. x X_k, the generators of pos(U_l X_l \ {x_l}).
/// Odometer order: the last part's dropped element varies fastest.
inline std::vector<std::vector<QVector>> cone_selections(const Skeleton& s) {
    const std::size_t n = s.basis.size();
    std::vector<std::vector<QVector>> out;
    std::vector<std::size_t> drop(s.parts.size(), 0);
    for (;;) {
        std::vector<QVector> gens;
        for (std::size_t l = 0; l < s.parts.size(); ++l) {
            for (std::size_t i = 0; i < s.parts[l].size(); ++i) {
                if (i != drop[l]) gens.push_back(s.parts[l][i]);
            }
        }
        if (gens.size() != n || !linearly_independent(gens)) {
            throw InvariantViolation("cone generators are not a basis; skeleton is invalid");
        }
        out.push_back(std::move(gens));

        std::size_t l = s.parts.size();
        while (l > 0 && ++drop[l - 1] == s.parts[l - 1].size()) drop[--l] = 0;
        if (l == 0) break;
    }
    return out;
}

/// The v with <g, v> = 1 for every generator; positive on the cone minus 0.
inline QVector cone_direction(std::span<const QVector> generators) {
    if (generators.empty()) throw InputError("cone_direction needs generators");
    const std::size_t n = generators.front().dim();
    QVector ones(n);
    for (std::size_t i = 0; i < n; ++i) ones[i] = 1;
    auto v = solve_rows(generators, ones);
    if (!v) throw InputError("cone_direction: generators are linearly dependent");
    return *v;
}

/// Half the smallest positive vertex-to-facet slack. At that radius every
/// vertex sees exactly its tight facets; checked before returning.
inline Rational compute_delta(const HPolytope& p) {
    std::optional<Rational> least;
    for (const auto& v : p.vertices()) {
        for (std::size_t i = 0; i < p.normal_set().size(); ++i) {
            const Rational slack = p.offset(i) - dot(p.normal_set()[i], v.point);
            if (slack > 0 && (!least || slack < *least)) least = slack;
        }
    }
    if (!least) throw InvariantViolation("no vertex has positive slack to any facet");
    const Rational delta = *least / 2;
    for (const auto& v : p.vertices()) {
        if (tight_normals(p, v.point, delta) != tight_normals(p, v.point, 0)) {
            throw InvariantViolation("delta neighbourhood of " + to_string(v.point) + " picks up a non-tight facet");
        }
    }
    return delta;
}

/// delta divided by the largest |<n, v_j>| among negative products, so that
/// epsilon * |<m, v_j>| <= delta for every such pair. Falls back to delta
/// when no product is negative.
inline Rational compute_epsilon(const HPolytope& p, std::span<const QVector> directions, const Rational& delta) {
    if (delta <= 0) throw InputError("delta must be positive");
    Rational worst = 0;
    for (const auto& n : p.normal_set()) {
        for (const auto& v : directions) {
            const Rational d = dot(n, v);
            if (d < 0 && -d > worst) worst = -d;
        }
    }
    if (worst == 0) return delta;
    const Rational eps = delta / worst;
    if (eps <= 0 || eps * worst > delta) throw InvariantViolation("epsilon bound fails");
    return eps;
}

namespace detail {

inline bool illuminates(const HPolytope& p, const Vertex& x, const QVector& v) {
    return std::all_of(x.tight.begin(), x.tight.end(), [&](std::size_t i) { return dot(p.normal_set()[i], v) > 0; });
}

}  // namespace detail

/// Assigns each vertex the first direction positive on all its tight normals.
inline std::vector<Assignment> assign_directions(const HPolytope& p, std::span<const QVector> directions) {
    std::vector<Assignment> out;
    for (const auto& x : p.vertices()) {
        Assignment a{x.point, std::nullopt};
        for (std::size_t j = 0; j < directions.size(); ++j) {
            if (detail::illuminates(p, x, directions[j])) {
                a.direction = j;
                break;
            }
        }
        out.push_back(std::move(a));
    }
    return out;
}

/// Builds the q = |X_1|...|X_k| illuminating directions for a strongly
/// monotypic polytope: skeleton, product cones, one direction per cone,
/// then delta and epsilon. Vertices are assigned to the first cone that
/// contains all of their tight normals.
inline IlluminationSet build_illumination_set(const HPolytope& p, unsigned threads = 1) {
    const NormalSet& normals = p.normal_set();
    const CheckResult strong = check_strong_monotypy(normals, threads);
    if (!strong.holds) {
        throw NotStronglyMonotypic("normal set has n+1 normals in conical position", *strong.certificate);
    }
    const Skeleton s = extract_skeleton(normals);

    IlluminationSet set;
    set.cones = cone_selections(s);
    for (const auto& gens : set.cones) {
        QVector v = cone_direction(gens);
        for (const auto& g : gens) {
            if (dot(g, v) != 1) throw InvariantViolation("cone direction is not normalized on a generator");
        }
        set.directions.push_back(std::move(v));
    }
    set.delta = compute_delta(p);
    set.epsilon = compute_epsilon(p, set.directions, *set.delta);
    for (const auto& v : set.directions) set.scaled.push_back(set.epsilon * v);

    for (const auto& x : p.vertices()) {
        const auto tight = normals.pick(x.tight);
        std::optional<std::size_t> hit;
        for (std::size_t j = 0; j < set.cones.size() && !hit; ++j) {
            const bool inside = std::all_of(tight.begin(), tight.end(),
                                            [&](const QVector& t) { return cone_membership(t, set.cones[j]).has_value(); });
            if (inside) hit = j;
        }
        if (!hit) throw AssignmentFailure("tight cone of vertex " + to_string(x.point) + " lies in no product cone");
        set.assignment.push_back({x.point, hit});
    }
    return set;
}

struct VertexReport {
    QVector vertex;
    std::optional<std::size_t> direction;
    bool directional = false;  // <n, v> > 0 for every tight n
    bool interior = false;     // x - epsilon v strictly inside
    std::optional<QVector> blocking_normal;
};

struct IlluminationReport {
    bool passed = false;
    std::vector<VertexReport> vertices;
};

/// Two independent checks per vertex: the assigned direction is positive on
/// every tight normal, and x - epsilon * v is strictly interior.
inline IlluminationReport verify_illumination(const HPolytope& p, const IlluminationSet& set) {
    IlluminationReport report;
    report.passed = true;
    for (const auto& x : p.vertices()) {
        VertexReport vr;
        vr.vertex = x.point;
        auto it = std::find_if(set.assignment.begin(), set.assignment.end(),
                               [&](const Assignment& a) { return a.vertex == x.point; });
        if (it != set.assignment.end() && it->direction && *it->direction < set.directions.size()) {
            vr.direction = it->direction;
            const QVector& v = set.directions[*vr.direction];
            vr.directional = true;
            for (std::size_t i : x.tight) {
                if (dot(p.normal_set()[i], v) <= 0) {
                    vr.directional = false;
                    vr.blocking_normal = p.normal_set()[i];
                    break;
                }
            }
            vr.interior = point_location(p, x.point - set.epsilon * v) == Location::Interior;
            if (!vr.interior && !vr.blocking_normal) {
                const QVector moved = x.point - set.epsilon * v;
                for (std::size_t i = 0; i < p.normal_set().size(); ++i) {
                    if (dot(p.normal_set()[i], moved) >= p.offset(i)) {
                        vr.blocking_normal = p.normal_set()[i];
                        break;
                    }
                }
            }
        }
        report.passed = report.passed && vr.directional && vr.interior;
        report.vertices.push_back(std::move(vr));
    }
    return report;
}

}  // namespace illum
