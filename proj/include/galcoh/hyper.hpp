#pragma once

#include <string>
#include <vector>

#include "galcoh/cohomology.hpp"

namespace galcoh {

/// Two-term complex [A -> B] of Gamma-lattices, A in degree 0 and B in
/// degree 1 (so for trivial Gamma, H^0 = ker f and H^1 = coker f).
struct TwoTermComplex {
    FiniteGroup group;
    LatticeMap f;  // f.source = A, f.target = B

    const GammaLattice& A() const { return f.source; }
    const GammaLattice& B() const { return f.target; }
};

TwoTermComplex make_complex(FiniteGroup group, GammaLattice a, GammaLattice b, IntMatrix f);

/// Dimension of the degree-r hypercochain space C^r(A) + C^{r-1}(B).
std::size_t cone_dimension(const TwoTermComplex& cx, int r);

/// Total-complex differential D^r(a, b) = (d_A a, f(a) - d_B b) on
/// C^r(A) + C^{r-1}(B).
IntMatrix cone_differential(const TwoTermComplex& cx, int r);

/// Hypercohomology at degree r, with hypercocycle representatives (a, b).
Subquotient hypercohomology(const TwoTermComplex& cx, int r, const Limits& limits = {});

FinAbGroup hypercohomology_group(const TwoTermComplex& cx, int r, const Limits& limits = {});

/// The three long-exact-sequence maps around degree r:
/// i : H^r(cx) -> H^r(A), (a, b) -> a
/// f*: H^r(A) -> H^r(B)
/// j : H^r(B) -> H^{r+1}(cx), b -> (0, b).
struct LesMaps {
    GroupHom i, fstar, j;
};

/// Presentations for one window of the sequence; the maps reference them.
struct LesWindow {
    Subquotient hyper_r;
    Subquotient h_a;
    Subquotient h_b;
    Subquotient hyper_r1;
    LesMaps maps;
};

LesWindow les_maps(const TwoTermComplex& cx, int r, const Limits& limits = {});

struct ExactnessEntry {
    int degree;
    std::string node;  // "H^r(cx)", "H^r(A)", "H^r(B)"
    bool pass;
    std::string witness;  // offending generator, empty on pass
};

struct ExactnessReport {
    std::vector<ExactnessEntry> entries;
    bool all_pass() const;
};

/// Verifies im = ker at every node of the sequence through degree
/// max_degree (inclusive), by double inclusion on generators.
ExactnessReport verify_les_exactness(const TwoTermComplex& cx, int max_degree,
                                     const Limits& limits = {});

/// Membership-style subgroup comparison utilities on a presentation.
/// Generators are coordinate vectors with respect to `amb` generators.
bool subgroup_contains(const Subquotient& amb, const std::vector<std::vector<Int>>& gens,
                       const std::vector<Int>& v);

/// Coordinate-vector generators of ker(h) as a subgroup of the source.
std::vector<std::vector<Int>> hom_kernel_generators(const GroupHom& h);
/// Coordinate-vector generators of im(h) as a subgroup of the target.
std::vector<std::vector<Int>> hom_image_generators(const GroupHom& h);

}  // namespace galcoh
