#pragma once

#include <vector>

#include "galcoh/exactlin.hpp"
#include "galcoh/lattice.hpp"

namespace galcoh {

/// Coordinates for inhomogeneous n-cochains f : Gamma^n -> Z^rank, laid
/// out as size^n blocks of length rank; the tuple (g_1, .., g_n) is
/// encoded base-size with g_1 most significant.
struct CochainSpace {
    std::size_t group_size = 1;
    std::size_t rank = 0;
    int degree = 0;

    CochainSpace(const FiniteGroup& g, const GammaLattice& m, int n)
        : group_size(g.size()), rank(m.rank), degree(n) {}

    std::size_t tuple_count() const {
        std::size_t t = 1;
        for (int i = 0; i < degree; ++i) t *= group_size;
        return t;
    }
    std::size_t dimension() const { return rank * tuple_count(); }
    std::size_t offset(std::size_t tuple_index) const { return tuple_index * rank; }
};

/// Matrix of d^n : C^n(Gamma, M) -> C^{n+1}(Gamma, M),
/// (d f)(g_1..g_{n+1}) = g_1 f(g_2..g_{n+1})
///                       + sum_i (-1)^i f(.., g_i g_{i+1}, ..)
///                       + (-1)^{n+1} f(g_1..g_n).
IntMatrix bar_differential(const FiniteGroup& group, const GammaLattice& m, int n);

/// Cohomology of a single lattice with cocycle representatives. Degree 0
/// yields the fixed-point lattice M^Gamma (free, with representatives).
Subquotient cohomology(const FiniteGroup& group, const GammaLattice& m, int n,
                       const Limits& limits = {});

FinAbGroup cohomology_group(const FiniteGroup& group, const GammaLattice& m, int n,
                            const Limits& limits = {});

/// Closed-form oracle for cyclic groups, n >= 1: with generator sigma and
/// norm N = sum sigma^i, odd n gives ker(N)/(sigma - 1)M and even n gives
/// M^sigma / N M.
FinAbGroup cyclic_cohomology(const FiniteGroup& group, const GammaLattice& m, int n);

/// A map of finitely generated abelian groups recorded on generators of
/// precomputed presentations.
struct GroupHom {
    const Subquotient* source = nullptr;
    const Subquotient* target = nullptr;
    IntMatrix matrix;  // target generators x source generators
};

/// Applies phi coordinate-wise to a degree-n cochain vector of the source.
std::vector<Int> map_cochain(const LatticeMap& phi, const FiniteGroup& group, int n,
                             const std::vector<Int>& v);

/// The map H^n(Gamma, source) -> H^n(Gamma, target) induced by an
/// equivariant lattice map, on the supplied presentations.
GroupHom induced_map(const LatticeMap& phi, const FiniteGroup& group, const Subquotient& source_h,
                     const Subquotient& target_h, int n);

}  // namespace galcoh
