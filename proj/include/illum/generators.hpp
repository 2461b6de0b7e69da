#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "illum/polytope.hpp"

namespace illum {

enum class Family { Box, Simplex, SimplexProduct, SquarePyramid, Hexagon };

struct FamilySpec {
    Family family = Family::Box;
    std::vector<std::size_t> dims;             // box/simplex: {n}; simplex_product: {d_1..d_k}
    std::optional<std::vector<Rational>> offsets;  // in the family's listed normal order; default all 1
    std::optional<std::uint64_t> seed;         // randomize offsets when set
};

/// SplitMix64. Fixed so seeded offsets reproduce bit-identically.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

private:
    std::uint64_t state_;
};

namespace detail {

inline std::vector<QVector> simplex_product_normals(const std::vector<std::size_t>& dims) {
    std::size_t total = 0;
    for (std::size_t d : dims) {
        if (d == 0) throw InputError("simplex dimensions must be positive");
        total += d;
    }
    std::vector<QVector> normals;
    std::size_t offset = 0;
    for (std::size_t d : dims) {
        QVector last(total);
        for (std::size_t i = 0; i < d; ++i) {
            normals.push_back(QVector::unit(total, offset + i));
            last[offset + i] = -1;
        }
        normals.push_back(std::move(last));
        offset += d;
    }
    return normals;
}

}  // namespace detail

/// Normals of the family in listed order (before canonical sorting).
inline std::vector<QVector> family_normals(const FamilySpec& spec) {
    auto need_one = [&](const char* name) {
        if (spec.dims.size() != 1 || spec.dims[0] == 0) {
            throw InputError(std::string(name) + " needs exactly one positive dimension");
        }
        return spec.dims[0];
    };
    switch (spec.family) {
        case Family::Box: return detail::simplex_product_normals(std::vector<std::size_t>(need_one("box"), 1));
        case Family::Simplex: return detail::simplex_product_normals({need_one("simplex")});
        case Family::SimplexProduct:
            if (spec.dims.empty()) throw InputError("simplex_product needs at least one dimension");
            return detail::simplex_product_normals(spec.dims);
        case Family::SquarePyramid: return {{0, 0, -1}, {1, 0, 1}, {-1, 0, 1}, {0, 1, 1}, {0, -1, 1}};
        case Family::Hexagon: return {{1, 0}, {-1, 0}, {0, 1}, {0, -1}, {1, 1}, {-1, -1}};
    }
    throw InputError("unknown family");
}

inline HPolytope randomize_offsets(const HPolytope& p, std::uint64_t seed);

inline HPolytope generate(const FamilySpec& spec) {
    auto normals = family_normals(spec);
    std::vector<Rational> offsets(normals.size(), Rational(1));
    if (spec.offsets) {
        if (spec.offsets->size() != normals.size()) throw InputError("offset count does not match the family");
        offsets = *spec.offsets;
    }
    HPolytope p = HPolytope::make(std::move(normals), std::move(offsets));
    return spec.seed ? randomize_offsets(p, *spec.seed) : p;
}

inline HPolytope box(std::size_t n) { return generate({Family::Box, {n}, std::nullopt, std::nullopt}); }
inline HPolytope simplex(std::size_t n) { return generate({Family::Simplex, {n}, std::nullopt, std::nullopt}); }
inline HPolytope simplex_product(std::vector<std::size_t> dims) { return generate({Family::SimplexProduct, std::move(dims), std::nullopt, std::nullopt}); }
inline HPolytope square_pyramid() { return generate({Family::SquarePyramid, {}, std::nullopt, std::nullopt}); }
inline HPolytope hexagon() { return generate({Family::Hexagon, {}, std::nullopt, std::nullopt}); }

/// Same normals, offsets 1 + k/16 with k uniform in 0..16 drawn from
/// SplitMix64(seed) in canonical normal order. Redraws all offsets (up to
/// 100 attempts) while some facet becomes redundant.
inline HPolytope randomize_offsets(const HPolytope& p, std::uint64_t seed) {
    SplitMix64 rng(seed);
    const auto& normals = p.normal_set().normals();
    for (int attempt = 0; attempt < 100; ++attempt) {
        std::vector<Rational> offsets;
        for (std::size_t i = 0; i < normals.size(); ++i) offsets.emplace_back(Rational(16 + rng.next() % 17, 16));
        try {
            return HPolytope::make(normals, std::move(offsets));
        } catch (const InputError&) {
        }
    }
    std::string names;
    for (const auto& n : normals) names += to_string(n);
    throw InputError("could not draw valid random offsets in 100 attempts for normals " + names);
}

}  // namespace illum
