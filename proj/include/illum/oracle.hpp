#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include <boost/dynamic_bitset.hpp>

#include "illum/feasibility.hpp"
#include "illum/polytope.hpp"

namespace illum {

inline constexpr std::size_t kMaxDirectionClasses = 1'000'000;

/// A full-dimensional cell of the central arrangement {<n, .> = 0 : n in N}.
/// Every direction in the cell illuminates the same vertices.
struct DirectionClass {
    QVector representative;
    std::vector<int> signs;  // sign of <n_i, representative>, never 0
    IndexSet illuminated;    // vertex indices
};

/// Enumerates arrangement cells by extending sign prefixes one normal at a
/// time and keeping only exactly feasible ones (<s_i n_i, v> >= 1).
inline std::vector<DirectionClass> enumerate_direction_classes(const HPolytope& p) {
    const auto& normals = p.normal_set();
    const std::size_t dim = p.dim();
    std::vector<DirectionClass> out;
    std::vector<Constraint> sys;
    std::vector<int> signs;

    std::function<void(std::size_t, const QVector&)> descend = [&](std::size_t i, const QVector& witness) {
        if (i == normals.size()) {
            if (out.size() >= kMaxDirectionClasses) {
                throw InputError("arrangement has more than " + std::to_string(kMaxDirectionClasses) + " cells");
            }
            DirectionClass c{witness, signs, {}};
            for (std::size_t v = 0; v < p.vertices().size(); ++v) {
                const auto& tight = p.vertices()[v].tight;
                if (std::all_of(tight.begin(), tight.end(), [&](std::size_t t) { return signs[t] > 0; })) {
                    c.illuminated.push_back(v);
                }
            }
            out.push_back(std::move(c));
            return;
        }
        for (int s : {1, -1}) {
            QVector a = normals[i];
            a *= Rational(s);
            // The parent's witness settles one side without an LP.
            const Rational at = dot(a, witness);
            std::optional<QVector> w;
            sys.push_back({std::move(a), 1, Relation::GreaterEq});
            if (at > 0) {
                // Scaling by t >= 1 keeps every earlier product >= 1.
                w = (at < 1 ? 1 / at : Rational(1)) * witness;
            } else {
                w = feasible(sys, dim);
            }
            if (w) {
                signs.push_back(s);
                descend(i + 1, *w);
                signs.pop_back();
            }
            sys.pop_back();
        }
    };
    QVector start(dim);
    descend(0, start);
    return out;
}

struct IlluminationOptimum {
    std::size_t count = 0;
    std::vector<QVector> directions;
    std::vector<std::size_t> classes;  // indices into the class list
};

/// Exact minimum number of directions illuminating every vertex: set cover
/// over direction classes, after dropping duplicates and dominated classes,
/// by iterative deepening that always branches on the first uncovered vertex.
inline IlluminationOptimum min_illumination_number(const HPolytope& p, const std::vector<DirectionClass>& classes) {
    using Bits = boost::dynamic_bitset<>;
    const std::size_t nv = p.vertices().size();
    std::vector<Bits> sets;
    for (const auto& c : classes) {
        Bits b(nv);
        for (std::size_t v : c.illuminated) b.set(v);
        sets.push_back(std::move(b));
    }

    std::vector<std::size_t> useful;
    for (std::size_t i = 0; i < sets.size(); ++i) {
        if (sets[i].none()) continue;
        bool keep = true;
        for (std::size_t j = 0; j < sets.size() && keep; ++j) {
            if (j == i) continue;
            const bool strict = sets[i].is_proper_subset_of(sets[j]);
            const bool earlier_equal = j < i && sets[i] == sets[j];
            keep = !strict && !earlier_equal;
        }
        if (keep) useful.push_back(i);
    }

    std::vector<std::vector<std::size_t>> covering(nv);
    for (std::size_t i : useful) {
        for (std::size_t v = 0; v < nv; ++v) {
            if (sets[i].test(v)) covering[v].push_back(i);
        }
    }
    for (std::size_t v = 0; v < nv; ++v) {
        if (covering[v].empty()) throw InvariantViolation("vertex " + std::to_string(v) + " is illuminated by no class");
    }

    std::vector<std::size_t> chosen;
    std::function<bool(const Bits&, std::size_t)> search = [&](const Bits& covered, std::size_t budget) {
        const std::size_t u = (~covered).find_first();
        if (u == Bits::npos) return true;
        if (budget == 0) return false;
        for (std::size_t i : covering[u]) {
            chosen.push_back(i);
            if (search(covered | sets[i], budget - 1)) return true;
            chosen.pop_back();
        }
        return false;
    };

    IlluminationOptimum best;
    for (std::size_t k = 0; k <= nv; ++k) {
        chosen.clear();
        if (search(Bits(nv), k)) {
            best.count = chosen.size();
            best.classes = chosen;
            for (std::size_t i : chosen) best.directions.push_back(classes[i].representative);
            return best;
        }
    }
    throw InvariantViolation("set cover search exhausted without covering every vertex");
}

inline IlluminationOptimum min_illumination_number(const HPolytope& p) {
    return min_illumination_number(p, enumerate_direction_classes(p));
}

}  // namespace illum
