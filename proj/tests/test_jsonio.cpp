#include "doctest.h"

#include "galcoh/json_io.hpp"
#include "galcoh/picard.hpp"

using namespace galcoh;

TEST_CASE("matrix parsing and serialization") {
    auto j = json::parse(R"([["2","-1"],["-1","2"]])");
    IntMatrix m = parse_matrix(j);
    CHECK(m.at(0, 1) == -1);
    CHECK(matrix_to_json(m) == j);

    // Plain integers are accepted on input, strings are emitted.
    IntMatrix m2 = parse_matrix(json::parse("[[2,-1],[-1,2]]"));
    CHECK(m2 == m);

    // Arbitrary precision survives the string form.
    auto big = json::parse(R"([["123456789012345678901234567890"]])");
    CHECK(matrix_to_json(parse_matrix(big)) == big);

    CHECK_THROWS_AS(parse_matrix(json::parse(R"([["2","x"]])")), SpecError);
    CHECK_THROWS_AS(parse_matrix(json::parse(R"([[1,2],[3]])")), SpecError);
    CHECK_THROWS_AS(parse_matrix(json::parse("3")), SpecError);
}

TEST_CASE("group parsing") {
    CHECK(parse_group(json::parse(R"({"kind":"cyclic","order":4})")).size() == 4);
    auto s3 = parse_group(
        json::parse(R"({"kind":"perm","degree":3,"generators":[[1,0,2],[1,2,0]]})"));
    CHECK(s3.size() == 6);
    auto c2 = parse_group(json::parse(R"({"kind":"table","table":[[0,1],[1,0]]})"));
    CHECK(c2.size() == 2);
    CHECK(parse_group(json::parse(R"({"kind":"table","size":2,"mul":[[0,1],[1,0]]})")).size() == 2);

    CHECK_THROWS_AS(parse_group(json::parse(R"({"kind":"cyclic","order":0})")), SpecError);
    CHECK_THROWS_AS(parse_group(json::parse(R"({"kind":"frieze"})")), SpecError);
    CHECK_THROWS_AS(parse_group(json::parse(R"({"kind":"table","table":[[0,0],[1,1]]})")),
                    SpecError);
    CHECK_THROWS_AS(parse_group(json::parse(R"({"kind":"table","size":3,"mul":[[0,1],[1,0]]})")),
                    SpecError);
    CHECK_THROWS_AS(parse_group(json::parse(R"({"kind":"cyclic","order":100})")), BudgetError);
}

TEST_CASE("lattice parsing") {
    auto c2 = FiniteGroup::cyclic(2);
    auto l = parse_lattice(
        json::parse(R"({"rank":2,"generator_action":[[["0","1"],["1","0"]]]})"), c2);
    CHECK(l.rank == 2);
    CHECK(is_permutation_module(l));
    CHECK(parse_lattice(lattice_to_json(l, c2), c2).act(1) == l.act(1));

    CHECK_THROWS_AS(
        parse_lattice(json::parse(R"({"rank":1,"generator_action":[[["2"]]]})"), c2),
        SpecError);  // not unimodular
    CHECK_THROWS_AS(
        parse_lattice(json::parse(R"({"rank":2,"generator_action":[[["1"]]]})"), c2),
        SpecError);  // shape mismatch
}

TEST_CASE("complex parsing") {
    auto cx = parse_complex(json::parse(R"({
        "group": {"kind":"cyclic","order":1},
        "A": {"rank":1,"generator_action":[]},
        "B": {"rank":1,"generator_action":[]},
        "map": [["2"]]
    })"));
    CHECK(hypercohomology_group(cx, 1) == FinAbGroup{{2}, 0});

    CHECK_THROWS_AS(parse_complex(json::parse(R"({
        "group": {"kind":"cyclic","order":2},
        "A": {"rank":1,"generator_action":[[["-1"]]]},
        "B": {"rank":1,"generator_action":[[["1"]]]},
        "map": [["1"]]
    })")),
                    SpecError);  // not equivariant
}

TEST_CASE("reductive group spec parsing") {
    auto pgl3 = parse_spec(json::parse(R"({"kind":"root_datum","type":"A","rank":2,"isogeny":"adjoint"})"));
    CHECK(picard_group(pgl3).pic == FinAbGroup{{3}, 0});

    auto e6 = parse_spec(json::parse(R"({"kind":"root_datum","type":"E6","isogeny":"adjoint"})"));
    CHECK(picard_group(e6).pic == FinAbGroup{{3}, 0});

    auto twisted = parse_spec(json::parse(R"({
        "kind":"root_datum","type":"A","rank":2,"isogeny":"adjoint",
        "twist":{"galois":{"kind":"cyclic","order":2},"diagram_action":[[1,0]]}
    })"));
    CHECK(twisted.galois.size() == 2);

    auto torus = parse_spec(json::parse(R"({
        "kind":"torus","galois":{"kind":"cyclic","order":2},
        "lattice":{"rank":1,"generator_action":[[["-1"]]]}
    })"));
    CHECK(picard_group(torus).pic == FinAbGroup{{2}, 0});

    auto raw = parse_spec(json::parse(R"({
        "kind":"raw","galois":{"kind":"cyclic","order":1},
        "charlattice":{"rank":2,"generator_action":[]},
        "sc_charlattice":{"rank":1,"generator_action":[]},
        "restriction":[["1","-1"]]
    })"));
    CHECK(fundamental_group(raw).group == FinAbGroup{{}, 1});

    auto prod = parse_spec(json::parse(R"({
        "kind":"product","factors":[
            {"kind":"root_datum","type":"A","rank":1,"isogeny":"adjoint"},
            {"kind":"root_datum","type":"A","rank":1,"isogeny":"sc"}
        ]
    })"));
    CHECK(picard_group(prod).pic == FinAbGroup{{2}, 0});

    CHECK_THROWS_AS(parse_spec(json::parse(R"({"kind":"root_datum","type":"E6","rank":7,"isogeny":"sc"})")),
                    SpecError);
    CHECK_THROWS_AS(parse_spec(json::parse(R"({"kind":"root_datum","type":"A","rank":2,"isogeny":"iso"})")),
                    SpecError);
    CHECK_THROWS_AS(parse_spec(json::parse(R"({"kind":"banana"})")), SpecError);
    CHECK_THROWS_AS(parse_spec(json::parse(R"({"kind":"product","factors":[]})")), SpecError);
}

TEST_CASE("resolution parsing") {
    auto res = parse_resolution(json::parse(R"({
        "galois":{"kind":"cyclic","order":2},
        "P_star":{"rank":2,"generator_action":[[["0","1"],["1","0"]]]},
        "S_star":{"rank":1,"generator_action":[[["1"]]]},
        "map":[["1","1"]]
    })"));
    CHECK(pic_via_resolution(res).h1 == FinAbGroup{{2}, 0});

    CHECK_THROWS_AS(parse_resolution(json::parse(R"({
        "galois":{"kind":"cyclic","order":2},
        "P_star":{"rank":1,"generator_action":[[["-1"]]]},
        "S_star":{"rank":1,"generator_action":[[["1"]]]},
        "map":[["0"]]
    })")),
                    SpecError);  // P* is not a permutation module
}

TEST_CASE("result serialization") {
    CHECK(group_to_json(FinAbGroup{{2, 4}, 1}).dump() ==
          R"({"invariant_factors":["2","4"],"free_rank":1})");
    CHECK(group_to_json(FinAbGroup{}).dump() == R"({"invariant_factors":[],"free_rank":0})");
    CHECK_THROWS_AS(load_json_file("/nonexistent/x.json"), SpecError);
}
