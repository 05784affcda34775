#pragma once

#include <optional>
#include <string>
#include <vector>

#include "galcoh/hyper.hpp"

namespace galcoh {

/// Standard Cartan matrix, convention cartan[i][j] = <alpha_j, alpha_i^v>.
/// Types: 'A' (rank >= 1), 'B'/'C' (>= 2), 'D' (>= 3), 'E' (6..8),
/// 'F' (4), 'G' (2). Node numbering: A/B/C/F/G are chains 0..rank-1; D is
/// the chain 0..rank-3 with both of rank-2, rank-1 attached to rank-3;
/// E is the chain 0,2,3,...,rank-1 with node 1 attached to node 3.
IntMatrix cartan_matrix(char type, std::size_t rank);

/// Split data retained on a built spec so diagram twists can act on it.
struct SplitInfo {
    char type = 0;
    std::size_t rank = 0;
    IntMatrix cartan;
    /// Columns: basis of the intermediate lattice Q <= X <= P written in
    /// fundamental-weight coordinates.
    IntMatrix x_basis;
    std::size_t central_torus_rank = 0;
};

/// The pair (X*(T), X*(T^sc)) with the character-restriction map between
/// them, over a finite Galois group.
struct ReductiveGroupSpec {
    FiniteGroup galois;
    LatticeMap restriction;  // charlattice -> sc_charlattice, equivariant
    std::optional<SplitInfo> split;

    const GammaLattice& charlattice() const { return restriction.source; }
    const GammaLattice& sc_charlattice() const { return restriction.target; }
    std::size_t torus_part_rank() const {
        return charlattice().rank - sc_charlattice().rank;
    }
    TwoTermComplex complex() const { return {galois, restriction}; }
};

enum class Isogeny { sc, adjoint, kernel_generators };

/// Split group of the given type over the trivial Galois group.
/// charlattice = X + Z^central_torus_rank, sc_charlattice = P in
/// fundamental-weight basis; the restriction expresses the X basis in
/// fundamental weights and kills the central block. Kernel generators (for
/// Isogeny::kernel_generators) are vectors in P coordinates; X is then
/// Q + <generators>.
ReductiveGroupSpec build_split(char type, std::size_t rank, Isogeny isogeny,
                               const std::vector<std::vector<Int>>& kernel_generators = {},
                               std::size_t central_torus_rank = 0);

/// Pure torus: sc_charlattice has rank 0, restriction is the empty map.
ReductiveGroupSpec build_torus(FiniteGroup galois, GammaLattice lattice);

/// Arbitrary lattice pair; validates equivariance and that the restriction
/// has full rank onto sc_charlattice (finite-index character image).
ReductiveGroupSpec make_raw(FiniteGroup galois, GammaLattice charlattice,
                            GammaLattice sc_charlattice, IntMatrix restriction);

/// Galois action through Dynkin-diagram automorphisms: one permutation of
/// the simple roots per generator of `galois` (or one per element). Each
/// permutation must preserve the Cartan matrix and stabilize X; the
/// restriction matrix is unchanged and re-verified equivariant.
ReductiveGroupSpec apply_twist(const ReductiveGroupSpec& spec, const FiniteGroup& galois,
                               const std::vector<std::vector<int>>& diagram_action);

/// Order-2 diagram flip of A_rank (i -> rank-1-i).
std::vector<int> a_flip(std::size_t rank);
/// Order-3 rotation of the three outer nodes of D4.
std::vector<int> d4_triality();
/// Order-2 diagram flip of E6.
std::vector<int> e6_flip();

/// Block-diagonal product over a common Galois group; trivial-Galois
/// factors are inflated to the common group with trivial action.
ReductiveGroupSpec product(const std::vector<ReductiveGroupSpec>& specs);

}  // namespace galcoh
