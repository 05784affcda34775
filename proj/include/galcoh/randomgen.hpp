#pragma once

#include <random>

#include "galcoh/hyper.hpp"

namespace galcoh {

IntMatrix random_unimodular(std::mt19937_64& rng, std::size_t n, int steps = 8);

/// Random Gamma-lattice: a direct sum of coset permutation modules and
/// trivial summands, conjugated by a random unimodular change of basis.
GammaLattice random_lattice(std::mt19937_64& rng, const FiniteGroup& group, std::size_t max_rank);

/// Integer basis of the space of equivariant matrices source -> target,
/// one matrix per basis element.
std::vector<IntMatrix> equivariant_map_basis(const FiniteGroup& group, const GammaLattice& source,
                                             const GammaLattice& target);

/// Random two-term complex over the group: random lattices of rank <=
/// max_rank and a random equivariant map with coefficients in
/// [-coeff_bound, coeff_bound] on the equivariant basis.
TwoTermComplex random_complex(std::mt19937_64& rng, const FiniteGroup& group,
                              std::size_t max_rank, long coeff_bound = 2);

}  // namespace galcoh
