// Python bindings: a thin JSON-string API over the core pipelines, so
// arbitrary-precision integers cross the boundary losslessly as decimal
// strings.

#include <pybind11/pybind11.h>

#include <string>

#include "galcoh/json_io.hpp"

namespace py = pybind11;
using namespace galcoh;

namespace {

json parse_document(const std::string& text) {
    try {
        return json::parse(text);
    } catch (const json::exception& e) {
        throw SpecError(std::string("spec: invalid JSON: ") + e.what());
    }
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

std::string picard(const std::string& spec_text, const Limits& limits) {
    auto spec = parse_spec(parse_document(spec_text), limits);
    PicardResult r = picard_group(spec, limits);
    Pi1Result pi1 = fundamental_group(spec);
    json witness = json::array();
    for (const auto& w : r.witness) {
        json row = json::array();
        for (const Int& x : w) row.push_back(x.get_str());
        witness.push_back(std::move(row));
    }
    return json{{"pic", group_to_json(r.pic)},
                {"dual", group_to_json(r.dual)},
                {"pi1", group_to_json(pi1.group)},
                {"witness", std::move(witness)}}
        .dump();
}

std::string dual(const std::string& spec_text, const Limits& limits) {
    auto spec = parse_spec(parse_document(spec_text), limits);
    FinAbGroup d = abelianized_h1_dual(spec, limits);
    return json{{"dual", group_to_json(d)}, {"pairing", matrix_to_json(pairing_matrix(d))}}.dump();
}

std::string pi1(const std::string& spec_text, const Limits& limits) {
    auto spec = parse_spec(parse_document(spec_text), limits);
    return json{{"pi1", group_to_json(fundamental_group(spec).group)}}.dump();
}

std::string cohomology_op(const std::string& job_text, int degree, const Limits& limits) {
    json j = parse_document(job_text);
    if (!j.contains("group") || !j.contains("lattice"))
        throw SpecError("spec: cohomology input needs \"group\" and \"lattice\"");
    FiniteGroup g = parse_group(j.at("group"), limits);
    GammaLattice l = parse_lattice(j.at("lattice"), g);
    return json{{"degree", degree}, {"cohomology", group_to_json(cohomology_group(g, l, degree, limits))}}
        .dump();
}

std::string hyper(const std::string& complex_text, int degree, const Limits& limits) {
    auto cx = parse_complex(parse_document(complex_text), limits);
    return json{{"degree", degree}, {"hyper", group_to_json(hypercohomology_group(cx, degree, limits))}}
        .dump();
}

std::string verify_les(const std::string& complex_text, int max_degree, const Limits& limits) {
    auto cx = parse_complex(parse_document(complex_text), limits);
    auto rep = verify_les_exactness(cx, max_degree, limits);
    return json{{"pass", rep.all_pass()}, {"entries", report_to_json(rep)}}.dump();
}

std::string cross_check_op(const std::string& doc_text, const Limits& limits) {
    json j = parse_document(doc_text);
    if (!j.contains("spec") || !j.contains("resolution"))
        throw SpecError("spec: cross-check input needs \"spec\" and \"resolution\"");
    auto spec = parse_spec(j.at("spec"), limits);
    auto res = parse_resolution(j.at("resolution"), limits);
    CrossCheckReport rep = cross_check(spec, res, limits);
    return json{{"pic", group_to_json(rep.pic)},
                {"resolution_h1", group_to_json(rep.resolution.h1)},
                {"h1_pstar_vanishes", rep.resolution.h1_pstar_vanishes},
                {"fixed_point_coker_matches", rep.resolution.coker_matches},
                {"pipelines_agree", rep.agree}}
        .dump();
}

Limits make_limits(std::size_t cap_group, int cap_degree, std::size_t cap_dim) {
    Limits l;
    l.group_size = cap_group;
    l.degree = cap_degree;
    l.dimension = cap_dim;
    return l;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Exact Picard-group and Galois-lattice cohomology calculator";

    Limits defaults;
    py::register_exception<SpecError>(m, "SpecError", PyExc_ValueError);
    py::register_exception<BudgetError>(m, "BudgetError", PyExc_RuntimeError);
    py::register_exception<ConsistencyError>(m, "ConsistencyError", PyExc_RuntimeError);
    py::register_exception<InputError>(m, "InputError", PyExc_RuntimeError);

    m.def(
        "picard",
        [](const std::string& s, std::size_t cg, int cd, std::size_t cdim) {
            return picard(s, make_limits(cg, cd, cdim));
        },
        py::arg("spec_json"), py::arg("cap_group") = defaults.group_size,
        py::arg("cap_degree") = defaults.degree, py::arg("cap_dimension") = defaults.dimension,
        "Pic(G), its Pontryagin dual, pi1, and hypercocycle witnesses.");
    m.def(
        "dual",
        [](const std::string& s, std::size_t cg, int cd, std::size_t cdim) {
            return dual(s, make_limits(cg, cd, cdim));
        },
        py::arg("spec_json"), py::arg("cap_group") = defaults.group_size,
        py::arg("cap_degree") = defaults.degree, py::arg("cap_dimension") = defaults.dimension,
        "Dual of Pic(G) with the audit pairing.");
    m.def(
        "pi1",
        [](const std::string& s, std::size_t cg, int cd, std::size_t cdim) {
            return pi1(s, make_limits(cg, cd, cdim));
        },
        py::arg("spec_json"), py::arg("cap_group") = defaults.group_size,
        py::arg("cap_degree") = defaults.degree, py::arg("cap_dimension") = defaults.dimension,
        "Algebraic fundamental group.");
    m.def(
        "cohomology",
        [](const std::string& s, int degree, std::size_t cg, int cd, std::size_t cdim) {
            return cohomology_op(s, degree, make_limits(cg, cd, cdim));
        },
        py::arg("job_json"), py::arg("degree") = 1, py::arg("cap_group") = defaults.group_size,
        py::arg("cap_degree") = defaults.degree, py::arg("cap_dimension") = defaults.dimension,
        "H^n(Gamma, M) for a {group, lattice} document.");
    m.def(
        "hypercohomology",
        [](const std::string& s, int degree, std::size_t cg, int cd, std::size_t cdim) {
            return hyper(s, degree, make_limits(cg, cd, cdim));
        },
        py::arg("complex_json"), py::arg("degree") = 1, py::arg("cap_group") = defaults.group_size,
        py::arg("cap_degree") = defaults.degree, py::arg("cap_dimension") = defaults.dimension,
        "HH^n of a two-term complex document.");
    m.def(
        "verify_les",
        [](const std::string& s, int max_degree, std::size_t cg, int cd, std::size_t cdim) {
            return verify_les(s, max_degree, make_limits(cg, cd, cdim));
        },
        py::arg("complex_json"), py::arg("max_degree") = 1,
        py::arg("cap_group") = defaults.group_size, py::arg("cap_degree") = defaults.degree,
        py::arg("cap_dimension") = defaults.dimension,
        "Exactness report for the long exact sequence of a complex.");
    m.def(
        "cross_check",
        [](const std::string& s, std::size_t cg, int cd, std::size_t cdim) {
            return cross_check_op(s, make_limits(cg, cd, cdim));
        },
        py::arg("document_json"), py::arg("cap_group") = defaults.group_size,
        py::arg("cap_degree") = defaults.degree, py::arg("cap_dimension") = defaults.dimension,
        "Compare the spec pipeline against a flasque-resolution pipeline.");
}
