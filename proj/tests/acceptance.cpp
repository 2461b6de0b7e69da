// Acceptance run: one PASS/FAIL line per criterion; exit status 1 if any fail.

#include <chrono>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "illum/illum.hpp"
#include "support/fixtures.hpp"
#include "support/oracles.hpp"

using namespace illum;

namespace {

class Criterion {
public:
    void expect(bool ok, const std::string& what) {
        ++checks_;
        if (!ok) failures_.push_back(what);
    }
    const std::vector<std::string>& failures() const { return failures_; }
    int checks() const { return checks_; }

private:
    std::vector<std::string> failures_;
    int checks_ = 0;
};

std::string name_of(const HPolytope& p) {
    std::ostringstream os;
    os << "dim " << p.dim() << " with normals";
    for (const auto& n : p.normal_set()) os << ' ' << n;
    return os.str();
}

struct Instance {
    std::string name;
    HPolytope polytope;
};

std::vector<Instance> generated_instances() {
    return {{"box(2)", box(2)},
            {"box(3)", box(3)},
            {"box(4)", box(4)},
            {"simplex(2)", simplex(2)},
            {"simplex(3)", simplex(3)},
            {"simplex(4)", simplex(4)},
            {"simplex_product([2,1])", simplex_product({2, 1})},
            {"simplex_product([1,1])", simplex_product({1, 1})},
            {"hexagon", hexagon()},
            {"square_pyramid", square_pyramid()},
            {"monotypic, not strongly monotypic", testing::monotypic_not_strong_polytope()}};
}

/// The instance followed by its 20 seeded offset randomizations.
std::vector<HPolytope> with_randomizations(const HPolytope& p) {
    std::vector<HPolytope> out{p};
    for (std::uint64_t seed = 1; seed <= 20; ++seed) out.push_back(randomize_offsets(p, seed));
    return out;
}

template <typename F>
void expect_throws(Criterion& c, F&& f, const std::string& what) {
    bool thrown = false;
    try {
        f();
    } catch (const NotStronglyMonotypic& e) {
        thrown = is_conical_position(e.certificate().subset).conical;
    }
    c.expect(thrown, what);
}

/// Shared checks for a strongly monotypic family member with known k, |X_i|
/// and optimum. A part size or optimum of 0 skips that check.
void check_family(Criterion& c, const std::string& name, const HPolytope& p, std::size_t k, std::size_t part_size,
                  std::size_t q, std::size_t optimum) {
    const auto v = classify(p.normal_set());
    c.expect(v.strongly_monotypic && v.monotypic, name + ": strongly monotypic");
    const Skeleton s = extract_skeleton(p.normal_set());
    c.expect(s.parts.size() == k, name + ": k = " + std::to_string(k));
    if (part_size) {
        for (const auto& part : s.parts) c.expect(part.size() == part_size, name + ": part size");
    }
    const IlluminationSet set = build_illumination_set(p);
    c.expect(set.directions.size() == q, name + ": q = " + std::to_string(q));
    c.expect(q <= (std::size_t{1} << p.dim()), name + ": q <= 2^n");
    const IlluminationReport r = verify_illumination(p, set);
    c.expect(r.passed, name + ": verification");
    for (const auto& vr : r.vertices) c.expect(vr.directional && vr.interior, name + ": both checks at every vertex");
    if (optimum) {
        const std::size_t best = min_illumination_number(p).count;
        c.expect(best == optimum, name + ": oracle minimum " + std::to_string(best) + " != " + std::to_string(optimum));
        c.expect(best <= q, name + ": oracle <= q");
    }
}

void criterion_1(Criterion& c) {
    for (std::size_t n = 2; n <= 4; ++n) {
        const std::size_t two_n = std::size_t{1} << n;
        check_family(c, "box(" + std::to_string(n) + ")", box(n), n, 2, two_n, two_n);
    }
}

void criterion_2(Criterion& c) {
    for (std::size_t n = 2; n <= 4; ++n) {
        check_family(c, "simplex(" + std::to_string(n) + ")", simplex(n), 1, n + 1, n + 1, n <= 3 ? n + 1 : 0);
        c.expect(n + 1 < (std::size_t{1} << n), "simplex: q strictly below 2^n");
    }
}

void criterion_3(Criterion& c) {
    check_family(c, "simplex_product([2,1])", simplex_product({2, 1}), 2, 0, 6, 6);
    check_family(c, "simplex_product([1,1])", simplex_product({1, 1}), 2, 2, 4, 4);
    check_family(c, "hexagon", hexagon(), 1, 3, 3, 3);
}

void criterion_4(Criterion& c) {
    const HPolytope pyr = square_pyramid();
    const NormalSet& ns = pyr.normal_set();
    const auto strong = check_strong_monotypy(ns);
    const auto mono = check_monotypy(ns);
    const auto mss = check_monotypy_mss(ns);
    c.expect(!strong.holds, "strong monotypy rejected");
    c.expect(!mono.holds, "monotypy rejected");
    c.expect(!mss.holds, "primitive-subset monotypy rejected");
    const std::vector<QVector> expected = testing::pyramid_slanted();
    for (const auto* r : {&strong, &mono}) {
        c.expect(r->certificate && testing::same_set(r->certificate->subset, expected), "certificate is the four slanted normals");
        c.expect(r->certificate && is_conical_position(r->certificate->subset).conical, "certificate re-verified");
    }
    c.expect(is_conical_position(expected).conical, "expected certificate is conical");
    expect_throws(c, [&] { extract_skeleton(ns); }, "extract_skeleton refuses");
    expect_throws(c, [&] { build_illumination_set(pyr); }, "build_illumination_set refuses");
}

void criterion_5(Criterion& c) {
    for (const auto& inst : generated_instances()) {
        for (const HPolytope& p : with_randomizations(inst.polytope)) {
            const NormalSet& ns = p.normal_set();
            const bool strong = check_strong_monotypy(ns).holds;
            const bool conical = check_monotypy(ns).holds;
            const bool mss = check_monotypy_mss(ns).holds;
            c.expect(conical == mss, inst.name + ": monotypy characterizations disagree on " + name_of(p));
            c.expect(!strong || conical, inst.name + ": strong monotypy without monotypy on " + name_of(p));
        }
    }
}

void criterion_6(Criterion& c) {
    for (const auto& inst : generated_instances()) {
        if (!check_monotypy(inst.polytope.normal_set()).holds) continue;
        for (const HPolytope& p : with_randomizations(inst.polytope)) {
            const FanUniquenessReport r = verify_fan_uniqueness(p.normal_set(), p);
            c.expect(r.unique, inst.name + ": fan not unique");
            c.expect(r.cones_match, inst.name + ": primitive-basis fan differs from the normal fan for offsets of " +
                                        name_of(p));
        }
    }
}

void criterion_7(Criterion& c) {
    for (const auto& inst : generated_instances()) {
        if (!check_strong_monotypy(inst.polytope.normal_set()).holds) continue;
        for (const HPolytope& p : with_randomizations(inst.polytope)) {
            const IlluminationSet set = build_illumination_set(p);
            for (std::size_t j = 0; j < set.cones.size(); ++j) {
                for (const auto& g : set.cones[j]) c.expect(dot(g, set.directions[j]) == 1, inst.name + ": <g, v> != 1");
            }
            const Rational delta = *set.delta;
            for (const auto& x : p.vertices()) {
                c.expect(tight_normals(p, x.point, delta) == x.tight, inst.name + ": delta neighbourhood");
            }
            for (const auto& a : set.assignment) {
                const bool interior = a.direction && point_location(p, a.vertex - set.epsilon * set.directions[*a.direction]) ==
                                                         Location::Interior;
                c.expect(interior, inst.name + ": x - eps v not interior at " + to_string(a.vertex));
            }
        }
    }
}

void criterion_8(Criterion& c) {
    testing::RandomRationals rng(20261016);
    for (int trial = 0; trial < 100; ++trial) {
        const std::size_t n = 2 + trial % 3;
        std::vector<QVector> basis;
        do {
            basis.clear();
            for (std::size_t i = 0; i < n; ++i) basis.push_back(rng.vector(n, 3, 2));
        } while (rank(basis) != n);
        const QVector x = rng.nonzero_vector(n);
        c.expect(testing::sign_class_consistent(basis, x), "trial " + std::to_string(trial) + ": x = " + to_string(x));
    }
}

void criterion_9(Criterion& c) {
    const IlluminationSet hex = build_illumination_set(hexagon());
    c.expect(*hex.delta == Rational(1, 2), "hexagon delta = 1/2");
    c.expect(hex.epsilon == Rational(1, 4), "hexagon epsilon = 1/4");
    c.expect(testing::same_set(hex.directions, {{1, 1}, {-2, 1}, {1, -2}}), "hexagon directions");
    const IlluminationSet cube = build_illumination_set(box(3));
    c.expect(*cube.delta == 1, "cube delta = 1");
    c.expect(cube.epsilon == 1, "cube epsilon = 1");
    c.expect(compute_delta(simplex(2)) == Rational(3, 2), "triangle delta = 3/2");
}

}  // namespace

int main() {
    const std::vector<std::pair<std::string, std::function<void(Criterion&)>>> criteria{
        {"cube family: q = 2^n = oracle minimum, verification passes", criterion_1},
        {"simplex family: k = 1, q = n+1, oracle minimum n+1", criterion_2},
        {"simplex products and hexagon: q equals the oracle minimum", criterion_3},
        {"square pyramid is rejected with a conical certificate", criterion_4},
        {"monotypy characterizations agree on all instances and randomizations", criterion_5},
        {"fan uniqueness and offset-independence", criterion_6},
        {"construction exactness", criterion_7},
        {"sign classes agree with separation and hull tests", criterion_8},
        {"worked numbers reproduce exactly", criterion_9},
    };
    bool all = true;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        Criterion c;
        const auto start = std::chrono::steady_clock::now();
        std::string crash;
        try {
            criteria[i].second(c);
        } catch (const std::exception& e) {
            crash = e.what();
        }
        const auto ms =
            std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start).count();
        const bool ok = c.failures().empty() && crash.empty();
        all = all && ok;
        std::cout << (ok ? "PASS" : "FAIL") << " criterion " << i + 1 << ": " << criteria[i].first << " (" << c.checks()
                  << " checks, " << ms << " ms)";
        if (!crash.empty()) std::cout << " -- exception: " << crash;
        if (!c.failures().empty()) std::cout << " -- " << c.failures().size() << " failed, first: " << c.failures().front();
        std::cout << "\n";
    }
    return all ? 0 : 1;
}
