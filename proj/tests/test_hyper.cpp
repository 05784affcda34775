#include "doctest.h"

#include <random>

#include "galcoh/hyper.hpp"
#include "galcoh/randomgen.hpp"

using namespace galcoh;

namespace {

TwoTermComplex doubling_complex() {
    auto g = FiniteGroup::trivial();
    return make_complex(g, trivial_lattice(g, 1), trivial_lattice(g, 1),
                        IntMatrix::from_rows({{2}}));
}

TwoTermComplex identity_complex(const FiniteGroup& g, const GammaLattice& m) {
    return make_complex(g, m, m, IntMatrix::identity(m.rank));
}

GammaLattice sign_lattice(const FiniteGroup& c2) {
    return validate_lattice(c2, {IntMatrix::from_rows({{-1}})});
}

}  // namespace

TEST_CASE("cone differential composes to zero") {
    std::mt19937_64 rng(11);
    for (const auto& g :
         {FiniteGroup::cyclic(2), FiniteGroup::cyclic(3), FiniteGroup::symmetric(3)}) {
        auto cx = random_complex(rng, g, 2);
        for (int r = 0; r <= 2; ++r)
            CHECK((cone_differential(cx, r + 1) * cone_differential(cx, r)).is_zero());
    }
}

TEST_CASE("degree-0 cone of [Z -2-> Z] is multiplication by 2") {
    auto cx = doubling_complex();
    auto d0 = cone_differential(cx, 0);
    REQUIRE(d0.rows() == 2);  // C^1(A) + C^0(B), trivial group
    REQUIRE(d0.cols() == 1);
    CHECK(d0.at(0, 0) == 0);
    CHECK(d0.at(1, 0) == 2);
    CHECK(hypercohomology_group(cx, 0) == FinAbGroup{});
    CHECK(hypercohomology_group(cx, 1) == FinAbGroup{{2}, 0});
    CHECK(hypercohomology_group(cx, 2) == FinAbGroup{});
}

TEST_CASE("cone of an identity map is acyclic") {
    std::mt19937_64 rng(21);
    for (const auto& g : {FiniteGroup::cyclic(2), FiniteGroup::symmetric(3)}) {
        auto m = random_lattice(rng, g, 2);
        auto cx = identity_complex(g, m);
        for (int r = 0; r <= 3; ++r)
            CHECK(hypercohomology_group(cx, r) == FinAbGroup{});
    }
}

TEST_CASE("degenerate complexes reduce to ordinary cohomology") {
    auto c2 = FiniteGroup::cyclic(2);
    auto sgn = sign_lattice(c2);

    auto to_zero = make_complex(c2, sgn, trivial_lattice(c2, 0), IntMatrix(0, 1));
    CHECK(hypercohomology_group(to_zero, 1) == FinAbGroup{{2}, 0});

    auto from_zero = make_complex(c2, trivial_lattice(c2, 0), sgn, IntMatrix(1, 0));
    CHECK(hypercohomology_group(from_zero, 2) == FinAbGroup{{2}, 0});

    std::mt19937_64 rng(31);
    for (const auto& g : {FiniteGroup::cyclic(3), FiniteGroup::cyclic(4)}) {
        auto m = random_lattice(rng, g, 2);
        auto left = make_complex(g, m, trivial_lattice(g, 0), IntMatrix(0, m.rank));
        auto right = make_complex(g, trivial_lattice(g, 0), m, IntMatrix(m.rank, 0));
        for (int r = 0; r <= 2; ++r) {
            CHECK(hypercohomology_group(left, r) == cohomology_group(g, m, r));
            if (r >= 1)
                CHECK(hypercohomology_group(right, r) == cohomology_group(g, m, r - 1));
        }
    }
}

TEST_CASE("trivial-Gamma hypercohomology is ker/coker") {
    std::mt19937_64 rng(41);
    auto g = FiniteGroup::trivial();
    for (int t = 0; t < 10; ++t) {
        std::uniform_int_distribution<std::size_t> dim(0, 3);
        std::size_t ra = dim(rng), rb = dim(rng);
        IntMatrix f(rb, ra);
        std::uniform_int_distribution<long> e(-3, 3);
        for (std::size_t i = 0; i < rb; ++i)
            for (std::size_t j = 0; j < ra; ++j) f.at(i, j) = e(rng);
        auto cx = make_complex(g, trivial_lattice(g, ra), trivial_lattice(g, rb), f);
        CHECK(hypercohomology_group(cx, 0) == FinAbGroup{{}, kernel_basis(f).cols()});
        CHECK(hypercohomology_group(cx, 1) == cokernel(f));
        CHECK(hypercohomology_group(cx, 2) == FinAbGroup{});
        CHECK(hypercohomology_group(cx, 3) == FinAbGroup{});
    }
}

TEST_CASE("les maps on [Z -2-> Z] at degree 0") {
    auto cx = doubling_complex();
    auto w = les_maps(cx, 0);
    CHECK(w.h_a.group() == FinAbGroup{{}, 1});
    CHECK(w.h_b.group() == FinAbGroup{{}, 1});
    CHECK(w.hyper_r.group() == FinAbGroup{});
    CHECK(w.hyper_r1.group() == FinAbGroup{{2}, 0});
    // f* is multiplication by 2 up to the generator sign.
    CHECK(abs(w.maps.fstar.matrix.at(0, 0)) == 2);
    // j is the surjective reduction onto Z/2.
    CHECK(w.maps.j.matrix.at(0, 0) == 1);
}

TEST_CASE("les j is an isomorphism for [0 -> sign] at degree 1") {
    auto c2 = FiniteGroup::cyclic(2);
    auto cx = make_complex(c2, trivial_lattice(c2, 0), sign_lattice(c2), IntMatrix(1, 0));
    auto w = les_maps(cx, 1);
    CHECK(w.h_b.group() == FinAbGroup{{2}, 0});
    CHECK(w.hyper_r1.group() == FinAbGroup{{2}, 0});
    CHECK(w.maps.j.matrix.at(0, 0) == 1);
    // i maps into H^1(A) = 0.
    CHECK(w.maps.i.matrix.rows() == 0);
}

TEST_CASE("exactness report on the identity complex") {
    auto c2 = FiniteGroup::cyclic(2);
    auto cx = identity_complex(c2, sign_lattice(c2));
    auto rep = verify_les_exactness(cx, 2);
    CHECK(rep.all_pass());
    CHECK(rep.entries.size() == 1 + 2 * 3 + 2);
}

TEST_CASE("exactness for [Z -2-> Z] through degree 1") {
    auto rep = verify_les_exactness(doubling_complex(), 1);
    CHECK(rep.all_pass());
}

TEST_CASE("exactness for randomized complexes") {
    std::mt19937_64 rng(51);
    for (const auto& g : {FiniteGroup::cyclic(2), FiniteGroup::cyclic(3), FiniteGroup::cyclic(4),
                          FiniteGroup::symmetric(3)}) {
        for (int t = 0; t < 5; ++t) {
            auto cx = random_complex(rng, g, 2);
            CHECK(verify_les_exactness(cx, 1).all_pass());
        }
    }
}

TEST_CASE("budget enforcement") {
    auto s3 = FiniteGroup::symmetric(3);
    auto cx = identity_complex(s3, trivial_lattice(s3, 2));
    Limits tight;
    tight.dimension = 20;
    CHECK_THROWS_AS(hypercohomology(cx, 2, tight), BudgetError);
}
