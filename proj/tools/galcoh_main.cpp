#include <iostream>
#include <random>
#include <string>

#include "CLI11.hpp"

#include "galcoh/json_io.hpp"
#include "galcoh/randomgen.hpp"

using namespace galcoh;

namespace {

constexpr const char* kSchema = "galcoh/1";

struct Options {
    std::string input;
    std::string format = "text";
    int degree = 1;
    unsigned long seed = 0;
    int cases = 100;
    std::string random_group;
    bool random_mode = false;
    Limits limits;
};

void add_common(CLI::App* cmd, Options& o, bool with_degree) {
    cmd->add_option("--format", o.format, "Output format")
        ->check(CLI::IsMember({"text", "json"}));
    if (with_degree) cmd->add_option("--degree", o.degree, "Cohomological degree");
    cmd->add_option("--cap-group", o.limits.group_size, "Group order cap");
    cmd->add_option("--cap-dim", o.limits.dimension, "Cochain dimension cap");
}

void emit(const json& payload, const Options& o, const std::string& text) {
    if (o.format == "json") {
        json out{{"schema", kSchema}};
        out.update(payload);
        std::cout << out.dump() << "\n";
    } else {
        std::cout << text << "\n";
    }
}

json checks_json(std::initializer_list<std::pair<const char*, bool>> checks) {
    json arr = json::array();
    for (const auto& [name, pass] : checks) arr.push_back({{"name", name}, {"pass", pass}});
    return arr;
}

int run_pic(const Options& o) {
    auto spec = parse_spec(load_json_file(o.input), o.limits);
    PicardResult r = picard_group(spec, o.limits);
    Pi1Result pi1 = fundamental_group(spec);
    json payload{{"pic", group_to_json(r.pic)},
                 {"dual", group_to_json(r.dual)},
                 {"pi1", group_to_json(pi1.group)},
                 {"checks", checks_json({{"finite", r.pic.is_finite()},
                                         {"dual_matches", r.dual == r.pic}})}};
    emit(payload, o,
         "Pic(G) = " + r.pic.str() + "\ndual = " + r.dual.str() + "\npi1 = " + pi1.group.str());
    return 0;
}

int run_dual(const Options& o) {
    auto spec = parse_spec(load_json_file(o.input), o.limits);
    FinAbGroup d = abelianized_h1_dual(spec, o.limits);
    json payload{{"dual", group_to_json(d)}, {"pairing", matrix_to_json(pairing_matrix(d))}};
    emit(payload, o, "dual = " + d.str());
    return 0;
}

int run_pi1(const Options& o) {
    auto spec = parse_spec(load_json_file(o.input), o.limits);
    Pi1Result pi1 = fundamental_group(spec);
    emit(json{{"pi1", group_to_json(pi1.group)}}, o, "pi1(G) = " + pi1.group.str());
    return 0;
}

int run_cohomology(const Options& o) {
    json j = load_json_file(o.input);
    if (!j.contains("group") || !j.contains("lattice"))
        throw SpecError("spec: cohomology input needs \"group\" and \"lattice\"");
    FiniteGroup g = parse_group(j.at("group"), o.limits);
    GammaLattice l = parse_lattice(j.at("lattice"), g);
    FinAbGroup h = cohomology_group(g, l, o.degree, o.limits);
    emit(json{{"degree", o.degree}, {"cohomology", group_to_json(h)}}, o,
         "H^" + std::to_string(o.degree) + " = " + h.str());
    return 0;
}

int run_hyper(const Options& o) {
    auto cx = parse_complex(load_json_file(o.input), o.limits);
    FinAbGroup h = hypercohomology_group(cx, o.degree, o.limits);
    emit(json{{"degree", o.degree}, {"hyper", group_to_json(h)}}, o,
         "HH^" + std::to_string(o.degree) + " = " + h.str());
    return 0;
}

json report_to_json(const ExactnessReport& rep) {
    json entries = json::array();
    for (const auto& e : rep.entries)
        entries.push_back({{"degree", e.degree},
                           {"node", e.node},
                           {"pass", e.pass},
                           {"witness", e.witness}});
    return entries;
}

FiniteGroup named_group(const std::string& name) {
    if (name == "trivial") return FiniteGroup::trivial();
    if (name == "s3") return FiniteGroup::symmetric(3);
    if (name.rfind("cyclic", 0) == 0) {
        std::size_t n = std::stoul(name.substr(6));
        if (n >= 1) return FiniteGroup::cyclic(n);
    }
    throw SpecError("spec: unknown group name \"" + name + "\"");
}

int run_verify_les(const Options& o) {
    if (o.random_mode) {
        std::mt19937_64 rng(o.seed);
        FiniteGroup g = named_group(o.random_group);
        int passed = 0;
        json failures = json::array();
        for (int c = 0; c < o.cases; ++c) {
            auto cx = random_complex(rng, g, 3);
            auto rep = verify_les_exactness(cx, o.degree, o.limits);
            if (rep.all_pass())
                ++passed;
            else
                failures.push_back({{"case", c}, {"entries", report_to_json(rep)}});
        }
        emit(json{{"cases", o.cases}, {"passed", passed}, {"failures", failures}}, o,
             std::to_string(passed) + "/" + std::to_string(o.cases) + " exact");
        return passed == o.cases ? 0 : 1;
    }
    auto cx = parse_complex(load_json_file(o.input), o.limits);
    auto rep = verify_les_exactness(cx, o.degree, o.limits);
    emit(json{{"pass", rep.all_pass()}, {"entries", report_to_json(rep)}}, o,
         rep.all_pass() ? "exact" : "NOT exact");
    return rep.all_pass() ? 0 : 1;
}

int run_cross_check(const Options& o) {
    json j = load_json_file(o.input);
    if (!j.contains("spec") || !j.contains("resolution"))
        throw SpecError("spec: cross-check input needs \"spec\" and \"resolution\"");
    auto spec = parse_spec(j.at("spec"), o.limits);
    auto res = parse_resolution(j.at("resolution"), o.limits);
    CrossCheckReport rep = cross_check(spec, res, o.limits);
    json payload{{"pic", group_to_json(rep.pic)},
                 {"resolution_h1", group_to_json(rep.resolution.h1)},
                 {"checks", checks_json({{"h1_pstar_vanishes", rep.resolution.h1_pstar_vanishes},
                                         {"fixed_point_coker_matches", rep.resolution.coker_matches},
                                         {"pipelines_agree", rep.agree}})}};
    emit(payload, o,
         rep.agree ? "agree: " + rep.pic.str() : "DISAGREE: pic = " + rep.pic.str() +
                         ", resolution H^1 = " + rep.resolution.h1.str());
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact Picard-group and Galois-lattice cohomology calculator"};
    app.require_subcommand(1);
    Options o;

    auto* pic = app.add_subcommand("pic", "Picard group of a reductive group spec");
    pic->add_option("input", o.input, "Spec file")->required();
    add_common(pic, o, false);

    auto* coh = app.add_subcommand("cohomology", "Group cohomology of a lattice");
    coh->add_option("input", o.input, "{group, lattice} file")->required();
    add_common(coh, o, true);

    auto* hyp = app.add_subcommand("hyper", "Hypercohomology of a two-term complex");
    hyp->add_option("input", o.input, "Complex file")->required();
    add_common(hyp, o, true);

    auto* les = app.add_subcommand("verify-les", "Verify long-exact-sequence exactness");
    les->add_option("input", o.input, "Complex file");
    les->add_flag("--random", o.random_mode, "Verify randomized complexes instead of a file");
    les->add_option("--group", o.random_group, "Group for --random (cyclicN, s3, trivial)");
    les->add_option("--seed", o.seed, "Random seed");
    les->add_option("--cases", o.cases, "Number of random cases");
    add_common(les, o, true);

    auto* dual = app.add_subcommand("dual", "Pontryagin dual of the Picard group");
    dual->add_option("input", o.input, "Spec file")->required();
    add_common(dual, o, false);

    auto* pi1 = app.add_subcommand("pi1", "Algebraic fundamental group");
    pi1->add_option("input", o.input, "Spec file")->required();
    add_common(pi1, o, false);

    auto* cc = app.add_subcommand("cross-check", "Compare spec and resolution pipelines");
    cc->add_option("input", o.input, "{spec, resolution} file")->required();
    add_common(cc, o, false);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (pic->parsed()) return run_pic(o);
        if (coh->parsed()) return run_cohomology(o);
        if (hyp->parsed()) return run_hyper(o);
        if (les->parsed()) {
            if (!o.random_mode && o.input.empty())
                throw SpecError("spec: verify-les needs an input file or --random");
            if (o.random_mode && o.random_group.empty())
                throw SpecError("spec: --random needs --group");
            return run_verify_les(o);
        }
        if (dual->parsed()) return run_dual(o);
        if (pi1->parsed()) return run_pi1(o);
        if (cc->parsed()) return run_cross_check(o);
    } catch (const SpecError& e) {
        std::cerr << e.what() << "\n";
        return 2;
    } catch (const BudgetError& e) {
        std::cerr << "budget: " << e.what() << "\n";
        return 1;
    } catch (const ConsistencyError& e) {
        std::cerr << "inconsistency: " << e.what() << "\n";
        return 1;
    } catch (const InputError& e) {
        std::cerr << "invariant: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
