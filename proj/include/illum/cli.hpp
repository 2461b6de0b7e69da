#pragma once

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "illum/generators.hpp"
#include "illum/io.hpp"

namespace illum {

/// Exit codes of the command-line tool.
enum ExitCode : int {
    kSuccess = 0,           // the checked property holds
    kPropertyFails = 1,     // verdict negative; a certificate is printed
    kInputError = 2,        // bad input or usage
    kInvariantViolated = 3  // internal invariant failed (falsification alarm)
};

namespace detail {

inline std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InputError("cannot read file '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

inline Family parse_family(const std::string& name) {
    if (name == "box") return Family::Box;
    if (name == "simplex") return Family::Simplex;
    if (name == "simplex_product") return Family::SimplexProduct;
    if (name == "square_pyramid") return Family::SquarePyramid;
    if (name == "hexagon") return Family::Hexagon;
    throw InputError("unknown family '" + name + "' (box, simplex, simplex_product, square_pyramid, hexagon)");
}

}  // namespace detail

/// Runs one subcommand. `args` excludes the program name. JSON goes to `out`;
/// `--pretty` indents it and adds a one-line summary on `err`.
inline int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact illumination toolkit for strongly monotypic polytopes", "illum"};
    app.require_subcommand(1);
    bool pretty = false;
    unsigned threads = 1;
    app.add_flag("--pretty", pretty, "Indent JSON and print a summary to stderr");
    app.add_option("--threads", threads, "Worker threads for subset enumeration")->check(CLI::PositiveNumber);

    std::string file, directions_file, method = "conical", family, output;
    bool verify = false, verify_unique = false, randomize = false;
    std::vector<std::size_t> dims;
    std::uint64_t seed = 0;

    auto* classify_cmd = app.add_subcommand("classify", "Strong monotypy and monotypy verdicts with certificates");
    classify_cmd->add_option("file", file, "Polytope JSON")->required();
    classify_cmd->add_option("--method", method, "Monotypy characterization")
        ->check(CLI::IsMember({"conical", "mss", "both"}));

    auto* skeleton_cmd = app.add_subcommand("skeleton", "Extract the skeleton X_1..X_k");
    skeleton_cmd->add_option("file", file, "Polytope JSON")->required();

    auto* illuminate_cmd = app.add_subcommand("illuminate", "Build the illuminating direction set");
    illuminate_cmd->add_option("file", file, "Polytope JSON")->required();
    illuminate_cmd->add_flag("--verify", verify, "Run both verification checks");

    auto* verify_cmd = app.add_subcommand("verify", "Verify a directions file against a polytope");
    verify_cmd->add_option("file", file, "Polytope JSON")->required();
    verify_cmd->add_option("--directions", directions_file, "Directions JSON")->required();

    auto* fan_cmd = app.add_subcommand("fan", "Primitive-basis fan and normal fan");
    fan_cmd->add_option("file", file, "Polytope JSON")->required();
    fan_cmd->add_flag("--verify-unique", verify_unique, "Cross-check fan uniqueness");

    auto* oracle_cmd = app.add_subcommand("oracle", "Exact minimum illumination number by brute force");
    oracle_cmd->add_option("file", file, "Polytope JSON")->required();

    auto* gen_cmd = app.add_subcommand("gen", "Generate a polytope from a built-in family");
    gen_cmd->add_option("family", family, "box | simplex | simplex_product | square_pyramid | hexagon")->required();
    gen_cmd->add_option("--dims", dims, "Dimension(s)");
    gen_cmd->add_option("--seed", seed, "Seed for offset randomization");
    gen_cmd->add_flag("--randomize-offsets", randomize, "Draw offsets in [1, 2]");
    gen_cmd->add_option("-o,--output", output, "Write to file instead of stdout");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kSuccess;
    } catch (const CLI::ParseError& e) {
        err << e.what() << "\n";
        return kInputError;
    }

    Json result;
    int code = kSuccess;
    std::string summary;
    auto emit = [&](const Json& j) {
        out << (pretty ? j.dump(2) : j.dump()) << "\n";
        if (pretty && !summary.empty()) err << summary << "\n";
    };

    try {
        if (*classify_cmd) {
            const HPolytope p = parse_polytope(detail::read_file(file));
            const Method m = method == "mss" ? Method::Mss : method == "both" ? Method::Both : Method::Conical;
            const ClassificationVerdict v = classify(p.normal_set(), m, threads);
            result = {{"strongly_monotypic", v.strongly_monotypic}, {"monotypic", v.monotypic}, {"method", method}};
            if (v.certificate) result["certificate"] = to_json(*v.certificate);
            if (v.characterizations_disagree || (v.strongly_monotypic && !v.monotypic)) {
                result["alarm"] = "monotypy characterizations are inconsistent";
                code = kInvariantViolated;
            } else {
                code = v.strongly_monotypic ? kSuccess : kPropertyFails;
            }
            summary = std::string(v.strongly_monotypic ? "strongly monotypic" : "not strongly monotypic") + ", " +
                      (v.monotypic ? "monotypic" : "not monotypic");
        } else if (*skeleton_cmd) {
            const HPolytope p = parse_polytope(detail::read_file(file));
            const Skeleton s = extract_skeleton(p.normal_set());
            result = to_json(s);
            summary = "k = " + std::to_string(s.parts.size()) + ", product = " + std::to_string(s.product());
        } else if (*illuminate_cmd) {
            const HPolytope p = parse_polytope(detail::read_file(file));
            const IlluminationSet set = build_illumination_set(p, threads);
            result = to_json(set);
            summary = std::to_string(set.directions.size()) + " directions, epsilon = " + to_string(set.epsilon);
            if (verify) {
                const IlluminationReport r = verify_illumination(p, set);
                result["verification"] = to_json(r);
                if (!r.passed) code = kPropertyFails;
                summary += r.passed ? ", verified" : ", VERIFICATION FAILED";
            }
        } else if (*verify_cmd) {
            const HPolytope p = parse_polytope(detail::read_file(file));
            IlluminationSet set = parse_directions(detail::read_file(directions_file), p.dim());
            set.assignment = assign_directions(p, set.directions);
            const IlluminationReport r = verify_illumination(p, set);
            result = to_json(r);
            code = r.passed ? kSuccess : kPropertyFails;
            summary = r.passed ? "every vertex illuminated" : "some vertex is not illuminated";
        } else if (*fan_cmd) {
            const HPolytope p = parse_polytope(detail::read_file(file));
            Json bases = Json::array();
            for (const auto& c : enumerate_primitive_bases(p.normal_set())) bases.push_back(to_json(c));
            result["primitive_bases"] = bases;
            if (p.is_simple()) {
                Json cones = Json::array();
                for (const auto& c : normal_fan(p)) cones.push_back(to_json(c));
                result["normal_fan"] = cones;
            } else {
                try {
                    normal_fan(p);
                } catch (const InputError& e) {
                    result["normal_fan_error"] = e.what();
                }
            }
            summary = std::to_string(bases.size()) + " primitive bases";
            if (verify_unique) {
                const FanUniquenessReport r = verify_fan_uniqueness(p.normal_set(), p);
                result["unique"] = r.unique;
                result["cones_match"] = r.cones_match;
                if (r.overlapping) result["overlapping"] = {r.overlapping->first, r.overlapping->second};
                if (!r.unique) code = kPropertyFails;
                summary += r.unique ? ", fan is unique" : ", fan is NOT unique";
            }
        } else if (*oracle_cmd) {
            const HPolytope p = parse_polytope(detail::read_file(file));
            const auto classes = enumerate_direction_classes(p);
            const IlluminationOptimum best = min_illumination_number(p, classes);
            result = {{"min_illumination_number", best.count},
                      {"directions", to_json(std::span<const QVector>(best.directions))},
                      {"direction_classes", classes.size()},
                      {"vertices", p.vertices().size()}};
            summary = "minimum illumination number " + std::to_string(best.count);
        } else if (*gen_cmd) {
            FamilySpec spec{detail::parse_family(family), dims, std::nullopt, std::nullopt};
            if (randomize) spec.seed = seed;
            const HPolytope p = generate(spec);
            result = polytope_to_json(p);
            if (!output.empty()) {
                std::ofstream f(output, std::ios::binary);
                if (!f) throw InputError("cannot write '" + output + "'");
                f << (pretty ? result.dump(2) : result.dump()) << "\n";
                return kSuccess;
            }
        }
    } catch (const NotStronglyMonotypic& e) {
        result = {{"error", "not strongly monotypic"}, {"detail", e.what()}, {"certificate", to_json(e.certificate())}};
        summary = e.what();
        emit(result);
        return kPropertyFails;
    } catch (const InputError& e) {
        Json j = {{"error", "input"}, {"detail", e.what()}};
        if (e.facet()) j["facet"] = *e.facet();
        err << e.what() << "\n";
        out << j.dump() << "\n";
        return kInputError;
    } catch (const InvariantViolation& e) {
        err << "invariant violation: " << e.what() << "\n";
        out << Json{{"error", "invariant"}, {"detail", e.what()}}.dump() << "\n";
        return kInvariantViolated;
    }
    emit(result);
    return code;
}

}  // namespace illum
