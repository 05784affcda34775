#pragma once

#include <string>
#include <vector>

#include "galcoh/rootdata.hpp"

namespace galcoh {

/// A computed result that violates a structural guarantee (e.g. an
/// infinite Picard group), pointing at bad input or a bug.
struct ConsistencyError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct PicardResult {
    FinAbGroup pic;
    FinAbGroup dual;
    /// Hypercocycle representatives (a, b) of the Pic generators, in cone
    /// coordinates of degree 1.
    std::vector<std::vector<Int>> witness;
};

/// Pic(G) as degree-1 hypercohomology of [charlattice -> sc_charlattice].
/// Throws ConsistencyError when the result is not finite.
PicardResult picard_group(const ReductiveGroupSpec& spec, const Limits& limits = {});

/// Hom(-, Q/Z): same invariant factors; requires free_rank = 0.
FinAbGroup pontryagin_dual(const FinAbGroup& g);

/// Audit pairing on generators: entry (i, j) = delta_ij, read as
/// <g_i, g_j^> = 1/d_i in Q/Z. No canonical normalization is implied.
IntMatrix pairing_matrix(const FinAbGroup& g);

/// Dual of Pic(G) (the adelic abelianized H^1 rendered through finite
/// duality).
FinAbGroup abelianized_h1_dual(const ReductiveGroupSpec& spec, const Limits& limits = {});

struct Pi1Result {
    /// Torsion + free rank of the cokernel of the cocharacter map.
    FinAbGroup group;
    /// Galois action on the ambient cocharacter lattice of T (recorded;
    /// nothing downstream consumes it).
    GammaLattice cochar_action;
};

/// pi_1(G) = coker(X_*(T^sc) -> X_*(T)), the transpose of the character
/// restriction.
Pi1Result fundamental_group(const ReductiveGroupSpec& spec);

/// Character data of a flasque resolution 1 -> S -> H -> G -> 1: P* is the
/// character lattice of the quasi-trivial torus H/[H,H], S* of the flasque
/// torus S, with the induced map between them.
struct ResolutionData {
    FiniteGroup galois;
    LatticeMap map;  // P_star -> S_star

    const GammaLattice& P_star() const { return map.source; }
    const GammaLattice& S_star() const { return map.target; }
    TwoTermComplex complex() const { return {galois, map}; }
};

/// Validates that P* is a permutation module and S* is flasque.
ResolutionData make_resolution(FiniteGroup galois, GammaLattice p_star, GammaLattice s_star,
                               IntMatrix matrix);

struct ResolutionReport {
    FinAbGroup h1;                 // H^1(Gamma, [P* -> S*])
    bool h1_pstar_vanishes;        // H^1(Gamma, P*) = 0
    FinAbGroup fixed_point_coker;  // coker((P*)^Gamma -> (S*)^Gamma)
    bool coker_matches;            // fixed_point_coker == h1
    bool ok() const { return h1_pstar_vanishes && coker_matches; }
};

ResolutionReport pic_via_resolution(const ResolutionData& res, const Limits& limits = {});

struct CrossCheckReport {
    FinAbGroup pic;  // from the (T*, T_sc*) pipeline
    ResolutionReport resolution;
    bool agree;  // identical invariant factors on both pipelines
};

CrossCheckReport cross_check(const ReductiveGroupSpec& spec, const ResolutionData& res,
                             const Limits& limits = {});

}  // namespace galcoh
