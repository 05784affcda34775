#pragma once

#include <utility>
#include <vector>

#include "galcoh/group.hpp"
#include "galcoh/intmatrix.hpp"

namespace galcoh {

/// A finite group acting on Z^rank by unimodular matrices, one matrix per
/// group element; action(g h) = action(g) action(h).
struct GammaLattice {
    std::size_t rank = 0;
    std::vector<IntMatrix> action;  // indexed by group element

    const IntMatrix& act(int g) const { return action[g]; }
};

/// Builds the action from matrices for group.generators(), extending to
/// all elements and validating relations and unimodularity. When
/// `matrices` has one entry per group element it is taken element-indexed.
GammaLattice validate_lattice(const FiniteGroup& group, const std::vector<IntMatrix>& matrices);

/// Trivial action of any group on Z^rank.
GammaLattice trivial_lattice(const FiniteGroup& group, std::size_t rank);

/// Z[Gamma]: basis indexed by group elements, g . e_h = e_{gh}.
GammaLattice regular_lattice(const FiniteGroup& group);

/// Z[Gamma/H]: basis indexed by left cosets of the subgroup with the given
/// elements; g . e_{xH} = e_{gxH}.
GammaLattice coset_lattice(const FiniteGroup& group, const std::vector<int>& subgroup_elements);

GammaLattice dual_lattice(const GammaLattice& l, const FiniteGroup& group);
GammaLattice direct_sum(const GammaLattice& a, const GammaLattice& b);
/// Conjugated copy: action(g) -> T^-1 action(g) T (T unimodular).
GammaLattice conjugate(const GammaLattice& l, const IntMatrix& t);

bool is_permutation_module(const GammaLattice& l);

/// The restriction of the action to a subgroup, re-indexed as its own
/// FiniteGroup (element i of the result is subgroup_elements[i]).
std::pair<FiniteGroup, GammaLattice> restrict_to_subgroup(
    const FiniteGroup& group, const GammaLattice& l, const std::vector<int>& subgroup_elements);

/// A Gamma-equivariant map of lattices: matrix * act_source(g) =
/// act_target(g) * matrix for all g.
struct LatticeMap {
    GammaLattice source;
    GammaLattice target;
    IntMatrix matrix;  // target.rank x source.rank
};

/// Throws InputError unless the map is equivariant.
LatticeMap make_lattice_map(const FiniteGroup& group, GammaLattice source, GammaLattice target,
                            IntMatrix matrix);

/// H^1(Gamma', dual) = 0 for every subgroup Gamma' (flasque) resp.
/// H^1(Gamma', L) = 0 for every subgroup (coflasque). Implemented with the
/// bar-resolution cohomology from the cohom module.
bool is_flasque(const FiniteGroup& group, const GammaLattice& l);
bool is_coflasque(const FiniteGroup& group, const GammaLattice& l);

}  // namespace galcoh
