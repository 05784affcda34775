#include "galcoh/json_io.hpp"

#include <cctype>
#include <fstream>

namespace galcoh {

namespace {

[[noreturn]] void fail(const std::string& what) { throw SpecError("spec: " + what); }

const json& field(const json& j, const char* name) {
    if (!j.is_object() || !j.contains(name)) fail(std::string("missing field \"") + name + "\"");
    return j.at(name);
}

Int parse_int(const json& j) {
    if (j.is_number_integer()) return Int(static_cast<long>(j.get<long long>()));
    if (j.is_string()) {
        try {
            return Int(j.get<std::string>());
        } catch (const std::invalid_argument&) {
            fail("\"" + j.get<std::string>() + "\" is not a decimal integer");
        }
    }
    fail("expected an integer or a decimal integer string");
}

std::size_t parse_count(const json& j, const char* name) {
    const json& v = field(j, name);
    if (!v.is_number_unsigned()) fail(std::string("field \"") + name + "\" must be a nonnegative integer");
    return v.get<std::size_t>();
}

std::vector<std::vector<int>> parse_int_table(const json& j, const char* name) {
    const json& v = field(j, name);
    if (!v.is_array()) fail(std::string("field \"") + name + "\" must be an array");
    std::vector<std::vector<int>> rows;
    for (const auto& r : v) {
        if (!r.is_array()) fail(std::string("field \"") + name + "\" must be an array of arrays");
        std::vector<int> row;
        for (const auto& e : r) {
            if (!e.is_number_integer()) fail(std::string("entries of \"") + name + "\" must be integers");
            row.push_back(e.get<int>());
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

std::string parse_string(const json& j, const char* name) {
    const json& v = field(j, name);
    if (!v.is_string()) fail(std::string("field \"") + name + "\" must be a string");
    return v.get<std::string>();
}

/// An empty JSON matrix ([] or [[], ..]) loses its intended shape; restore
/// it when one of the target dimensions is zero.
IntMatrix coerce_shape(IntMatrix m, std::size_t rows, std::size_t cols) {
    if (m.rows() == rows && m.cols() == cols) return m;
    if (rows * cols == 0 && m.rows() * m.cols() == 0) return IntMatrix(rows, cols);
    fail("matrix has the wrong shape");
}

}  // namespace

IntMatrix parse_matrix(const json& j) {
    if (!j.is_array()) fail("matrix must be an array of rows");
    std::size_t rows = j.size(), cols = rows ? j.at(0).size() : 0;
    for (const auto& r : j) {
        if (!r.is_array() || r.size() != cols) fail("matrix rows must be equal-length arrays");
    }
    IntMatrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t k = 0; k < cols; ++k) m.at(i, k) = parse_int(j.at(i).at(k));
    return m;
}

json matrix_to_json(const IntMatrix& m) {
    json rows = json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (std::size_t k = 0; k < m.cols(); ++k) row.push_back(m.at(i, k).get_str());
        rows.push_back(std::move(row));
    }
    return rows;
}

FiniteGroup parse_group(const json& j, const Limits& limits) {
    std::string kind = parse_string(j, "kind");
    try {
        if (kind == "cyclic") {
            std::size_t n = parse_count(j, "order");
            if (n == 0) fail("cyclic group order must be positive");
            if (n > limits.group_size) throw BudgetError("group order exceeds cap");
            return FiniteGroup::cyclic(n);
        }
        if (kind == "table") {
            // Canonical key is "mul" (with an optional redundant "size");
            // "table" is accepted as an alias.
            const char* key = j.contains("mul") ? "mul" : "table";
            auto mul = parse_int_table(j, key);
            if (j.contains("size") && parse_count(j, "size") != mul.size())
                fail("\"size\" does not match the multiplication table");
            return FiniteGroup::from_table(mul, limits);
        }
        if (kind == "perm")
            return FiniteGroup::from_permutations(parse_count(j, "degree"),
                                                  parse_int_table(j, "generators"), limits);
    } catch (const InputError& e) {
        fail(e.what());
    }
    fail("unknown group kind \"" + kind + "\"");
}

GammaLattice parse_lattice(const json& j, const FiniteGroup& group) {
    std::size_t rank = parse_count(j, "rank");
    const json& act = field(j, "generator_action");
    if (!act.is_array()) fail("\"generator_action\" must be an array of matrices");
    std::vector<IntMatrix> mats;
    for (const auto& m : act) {
        IntMatrix a = parse_matrix(m);
        if (a.rows() != rank || a.cols() != rank) fail("action matrix does not match the rank");
        // parse_matrix of [] loses the rank; restore square shape.
        if (rank == 0) a = IntMatrix(0, 0);
        mats.push_back(std::move(a));
    }
    if (mats.empty()) {
        if (group.size() > 1 && rank > 0) fail("\"generator_action\" must cover the generators");
        return trivial_lattice(group, rank);
    }
    try {
        return validate_lattice(group, mats);
    } catch (const InputError& e) {
        fail(e.what());
    }
}

json lattice_to_json(const GammaLattice& l, const FiniteGroup& group) {
    json act = json::array();
    for (int g : group.generators()) act.push_back(matrix_to_json(l.act(g)));
    return json{{"rank", l.rank}, {"generator_action", std::move(act)}};
}

TwoTermComplex parse_complex(const json& j, const Limits& limits) {
    FiniteGroup g = parse_group(field(j, "group"), limits);
    GammaLattice a = parse_lattice(field(j, "A"), g);
    GammaLattice b = parse_lattice(field(j, "B"), g);
    IntMatrix f = coerce_shape(parse_matrix(field(j, "map")), b.rank, a.rank);
    try {
        return make_complex(std::move(g), std::move(a), std::move(b), std::move(f));
    } catch (const InputError& e) {
        fail(e.what());
    }
}

namespace {

std::pair<char, std::size_t> parse_lie_type(const json& j) {
    std::string t = parse_string(j, "type");
    char type = t.empty() ? '?' : t[0];
    std::size_t rank = 0;
    if (t.size() > 1) {
        // Combined names like "E6", "F4", "G2".
        for (std::size_t i = 1; i < t.size(); ++i) {
            if (!isdigit(static_cast<unsigned char>(t[i]))) fail("bad type \"" + t + "\"");
            rank = rank * 10 + static_cast<std::size_t>(t[i] - '0');
        }
        if (j.contains("rank") && parse_count(j, "rank") != rank)
            fail("\"rank\" contradicts type \"" + t + "\"");
    } else {
        rank = parse_count(j, "rank");
    }
    return {type, rank};
}

ReductiveGroupSpec parse_root_datum(const json& j, const Limits& limits) {
    auto [type, rank] = parse_lie_type(j);
    std::string iso = parse_string(j, "isogeny");
    Isogeny isogeny;
    std::vector<std::vector<Int>> gens;
    if (iso == "sc")
        isogeny = Isogeny::sc;
    else if (iso == "adjoint")
        isogeny = Isogeny::adjoint;
    else if (iso == "kernel-generators") {
        isogeny = Isogeny::kernel_generators;
        IntMatrix g = parse_matrix(field(j, "kernel_generators"));
        for (std::size_t i = 0; i < g.rows(); ++i) {
            std::vector<Int> row;
            for (std::size_t k = 0; k < g.cols(); ++k) row.push_back(g.at(i, k));
            gens.push_back(std::move(row));
        }
    } else
        fail("unknown isogeny \"" + iso + "\"");
    std::size_t central = j.contains("central_torus_rank") ? parse_count(j, "central_torus_rank") : 0;
    ReductiveGroupSpec spec = build_split(type, rank, isogeny, gens, central);
    if (j.contains("twist")) {
        const json& tw = j.at("twist");
        FiniteGroup galois = parse_group(field(tw, "galois"), limits);
        spec = apply_twist(spec, galois, parse_int_table(tw, "diagram_action"));
    }
    return spec;
}

}  // namespace

ReductiveGroupSpec parse_spec(const json& j, const Limits& limits) {
    std::string kind = parse_string(j, "kind");
    try {
        if (kind == "root_datum") return parse_root_datum(j, limits);
        if (kind == "torus") {
            FiniteGroup g = parse_group(field(j, "galois"), limits);
            GammaLattice l = parse_lattice(field(j, "lattice"), g);
            return build_torus(std::move(g), std::move(l));
        }
        if (kind == "raw") {
            FiniteGroup g = parse_group(field(j, "galois"), limits);
            GammaLattice c = parse_lattice(field(j, "charlattice"), g);
            GammaLattice sc = parse_lattice(field(j, "sc_charlattice"), g);
            return make_raw(std::move(g), std::move(c), std::move(sc),
                            coerce_shape(parse_matrix(field(j, "restriction")), sc.rank, c.rank));
        }
        if (kind == "product") {
            const json& factors = field(j, "factors");
            if (!factors.is_array() || factors.empty()) fail("\"factors\" must be a nonempty array");
            std::vector<ReductiveGroupSpec> specs;
            for (const auto& f : factors) specs.push_back(parse_spec(f, limits));
            return product(specs);
        }
    } catch (const InputError& e) {
        fail(e.what());
    }
    fail("unknown spec kind \"" + kind + "\"");
}

ResolutionData parse_resolution(const json& j, const Limits& limits) {
    FiniteGroup g = parse_group(field(j, "galois"), limits);
    GammaLattice p = parse_lattice(field(j, "P_star"), g);
    GammaLattice s = parse_lattice(field(j, "S_star"), g);
    try {
        return make_resolution(std::move(g), std::move(p), std::move(s),
                               coerce_shape(parse_matrix(field(j, "map")), s.rank, p.rank));
    } catch (const InputError& e) {
        fail(e.what());
    }
}

json group_to_json(const FinAbGroup& g) {
    json factors = json::array();
    for (const Int& d : g.invariant_factors) factors.push_back(d.get_str());
    return json{{"invariant_factors", std::move(factors)}, {"free_rank", g.free_rank}};
}

json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) fail("cannot read file " + path);
    try {
        return json::parse(in);
    } catch (const json::parse_error& e) {
        fail(std::string("JSON parse error: ") + e.what());
    }
}

}  // namespace galcoh
