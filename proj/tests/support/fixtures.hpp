#pragma once

#include <vector>

#include "illum/generators.hpp"

namespace illum::testing {

inline const std::vector<QVector>& pyramid_slanted() {
    static const std::vector<QVector> v{{1, 0, 1}, {-1, 0, 1}, {0, 1, 1}, {0, -1, 1}};
    return v;
}

inline HPolytope triangle() { return simplex(2); }
inline HPolytope prism() { return simplex_product({2, 1}); }

/// Monotypic but not strongly monotypic; found by random search and checked
/// by both monotypy characterizations in test_classify.
inline NormalSet monotypic_not_strong() {
    return NormalSet::make({{2, -1, 0}, {2, -1, -1}, {2, -1, -2}, {1, 1, 1}, {0, -1, -1}, {-2, 0, 0}});
}

/// A polytope on that normal set. Offsets follow canonical normal order;
/// with all offsets 1 the first facet would be redundant.
inline HPolytope monotypic_not_strong_polytope() {
    return HPolytope::make(monotypic_not_strong().normals(), {2, 1, 1, 1, 1, 1});
}

}  // namespace illum::testing
