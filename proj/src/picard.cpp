#include "galcoh/picard.hpp"

namespace galcoh {

PicardResult picard_group(const ReductiveGroupSpec& spec, const Limits& limits) {
    Subquotient h1 = hypercohomology(spec.complex(), 1, limits);
    if (!h1.group().is_finite())
        throw ConsistencyError("Picard group came out infinite: " + h1.group().str());
    return PicardResult{h1.group(), pontryagin_dual(h1.group()), h1.representatives()};
}

FinAbGroup pontryagin_dual(const FinAbGroup& g) {
    if (!g.is_finite()) throw InputError("pontryagin_dual: group has nonzero free rank");
    return g;
}

IntMatrix pairing_matrix(const FinAbGroup& g) {
    return IntMatrix::identity(g.invariant_factors.size());
}

FinAbGroup abelianized_h1_dual(const ReductiveGroupSpec& spec, const Limits& limits) {
    return picard_group(spec, limits).dual;
}

Pi1Result fundamental_group(const ReductiveGroupSpec& spec) {
    return Pi1Result{cokernel(spec.restriction.matrix.transpose()),
                     dual_lattice(spec.charlattice(), spec.galois)};
}

ResolutionData make_resolution(FiniteGroup galois, GammaLattice p_star, GammaLattice s_star,
                               IntMatrix matrix) {
    if (!is_permutation_module(p_star))
        throw InputError("resolution: P* is not a permutation module");
    if (!is_flasque(galois, s_star)) throw InputError("resolution: S* is not flasque");
    LatticeMap map =
        make_lattice_map(galois, std::move(p_star), std::move(s_star), std::move(matrix));
    return ResolutionData{std::move(galois), std::move(map)};
}

ResolutionReport pic_via_resolution(const ResolutionData& res, const Limits& limits) {
    ResolutionReport rep;
    rep.h1 = hypercohomology_group(res.complex(), 1, limits);
    rep.h1_pstar_vanishes =
        cohomology_group(res.galois, res.P_star(), 1, limits).is_trivial();
    Subquotient p_fixed = cohomology(res.galois, res.P_star(), 0, limits);
    Subquotient s_fixed = cohomology(res.galois, res.S_star(), 0, limits);
    GroupHom f0 = induced_map(res.map, res.galois, p_fixed, s_fixed, 0);
    rep.fixed_point_coker = cokernel(f0.matrix);
    rep.coker_matches = rep.fixed_point_coker == rep.h1;
    return rep;
}

CrossCheckReport cross_check(const ReductiveGroupSpec& spec, const ResolutionData& res,
                             const Limits& limits) {
    CrossCheckReport rep{picard_group(spec, limits).pic, pic_via_resolution(res, limits),
                         false};
    rep.agree = rep.resolution.ok() && rep.pic == rep.resolution.h1;
    return rep;
}

}  // namespace galcoh
