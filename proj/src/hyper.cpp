#include "galcoh/hyper.hpp"

#include <sstream>

namespace galcoh {

TwoTermComplex make_complex(FiniteGroup group, GammaLattice a, GammaLattice b, IntMatrix f) {
    LatticeMap map = make_lattice_map(group, std::move(a), std::move(b), std::move(f));
    return TwoTermComplex{std::move(group), std::move(map)};
}

std::size_t cone_dimension(const TwoTermComplex& cx, int r) {
    if (r < 0) return 0;
    std::size_t d = CochainSpace(cx.group, cx.A(), r).dimension();
    if (r >= 1) d += CochainSpace(cx.group, cx.B(), r - 1).dimension();
    return d;
}

namespace {

// I_{tuples} (x) f.matrix : C^r(source) -> C^r(target).
IntMatrix blockwise_matrix(const LatticeMap& f, const FiniteGroup& g, int r) {
    CochainSpace in(g, f.source, r), out(g, f.target, r);
    IntMatrix m(out.dimension(), in.dimension());
    for (std::size_t t = 0; t < in.tuple_count(); ++t)
        m.paste(out.offset(t), in.offset(t), f.matrix);
    return m;
}

}  // namespace

IntMatrix cone_differential(const TwoTermComplex& cx, int r) {
    if (r < 0) throw InputError("cone differential: negative degree");
    IntMatrix da = bar_differential(cx.group, cx.A(), r);
    IntMatrix fr = blockwise_matrix(cx.f, cx.group, r);
    IntMatrix out(cone_dimension(cx, r + 1), cone_dimension(cx, r));
    out.paste(0, 0, da);
    out.paste(da.rows(), 0, fr);
    if (r >= 1) {
        IntMatrix db = bar_differential(cx.group, cx.B(), r - 1);
        out.paste(da.rows(), da.cols(), db.negate());
    }
    return out;
}

Subquotient hypercohomology(const TwoTermComplex& cx, int r, const Limits& limits) {
    if (r < 0) throw InputError("hypercohomology: negative degree");
    if (r > limits.degree) throw BudgetError("hypercohomology: degree exceeds cap");
    if (cone_dimension(cx, r + 1) > limits.dimension)
        throw BudgetError("hypercohomology: cochain dimension exceeds cap");
    IntMatrix d_out = cone_differential(cx, r);
    IntMatrix d_in =
        r == 0 ? IntMatrix(cone_dimension(cx, 0), 0) : cone_differential(cx, r - 1);
    return homology_at(d_in, d_out);
}

FinAbGroup hypercohomology_group(const TwoTermComplex& cx, int r, const Limits& limits) {
    return hypercohomology(cx, r, limits).group();
}

namespace {

GroupHom projection_to_a(const TwoTermComplex& cx, int r, const Subquotient& hyper_r,
                         const Subquotient& h_a) {
    std::size_t adim = CochainSpace(cx.group, cx.A(), r).dimension();
    IntMatrix m(h_a.group().generator_count(), hyper_r.group().generator_count());
    const auto& reps = hyper_r.representatives();
    for (std::size_t jcol = 0; jcol < reps.size(); ++jcol) {
        std::vector<Int> a(reps[jcol].begin(), reps[jcol].begin() + adim);
        auto coords = h_a.coordinates_of(a);
        if (!coords) throw std::logic_error("les i: hypercocycle a-part is not an A-cocycle");
        m.set_column(jcol, *coords);
    }
    return GroupHom{&hyper_r, &h_a, std::move(m)};
}

GroupHom shift_to_cone(const TwoTermComplex& cx, int r, const Subquotient& h_b,
                       const Subquotient& hyper_r1) {
    std::size_t adim = CochainSpace(cx.group, cx.A(), r + 1).dimension();
    IntMatrix m(hyper_r1.group().generator_count(), h_b.group().generator_count());
    const auto& reps = h_b.representatives();
    for (std::size_t jcol = 0; jcol < reps.size(); ++jcol) {
        std::vector<Int> v(adim, Int(0));
        v.insert(v.end(), reps[jcol].begin(), reps[jcol].end());
        auto coords = hyper_r1.coordinates_of(v);
        if (!coords) throw std::logic_error("les j: (0, b) is not a hypercocycle");
        m.set_column(jcol, *coords);
    }
    return GroupHom{&h_b, &hyper_r1, std::move(m)};
}

}  // namespace

LesWindow les_maps(const TwoTermComplex& cx, int r, const Limits& limits) {
    LesWindow w{hypercohomology(cx, r, limits), cohomology(cx.group, cx.A(), r, limits),
                cohomology(cx.group, cx.B(), r, limits), hypercohomology(cx, r + 1, limits),
                LesMaps{}};
    w.maps.i = projection_to_a(cx, r, w.hyper_r, w.h_a);
    w.maps.fstar = induced_map(cx.f, cx.group, w.h_a, w.h_b, r);
    w.maps.j = shift_to_cone(cx, r, w.h_b, w.hyper_r1);
    return w;
}

bool ExactnessReport::all_pass() const {
    for (const auto& e : entries)
        if (!e.pass) return false;
    return true;
}

namespace {

IntMatrix relation_matrix(const Subquotient& amb) {
    const auto& g = amb.group();
    std::size_t n = g.generator_count();
    IntMatrix r(n, g.invariant_factors.size());
    for (std::size_t i = 0; i < g.invariant_factors.size(); ++i)
        r.at(i, i) = g.invariant_factors[i];
    return r;
}

}  // namespace

bool subgroup_contains(const Subquotient& amb, const std::vector<std::vector<Int>>& gens,
                       const std::vector<Int>& v) {
    std::size_t n = amb.group().generator_count();
    IntMatrix g(n, gens.size());
    for (std::size_t j = 0; j < gens.size(); ++j) g.set_column(j, gens[j]);
    IntMatrix ext = g.hstack(relation_matrix(amb));
    return solve_in_lattice(ext, v).has_value();
}

std::vector<std::vector<Int>> hom_image_generators(const GroupHom& h) {
    std::vector<std::vector<Int>> out;
    for (std::size_t j = 0; j < h.matrix.cols(); ++j) out.push_back(h.matrix.column(j));
    return out;
}

std::vector<std::vector<Int>> hom_kernel_generators(const GroupHom& h) {
    IntMatrix ext = h.matrix.hstack(relation_matrix(*h.target));
    IntMatrix k = kernel_basis(ext);
    std::vector<std::vector<Int>> out;
    std::size_t src = h.matrix.cols();
    for (std::size_t j = 0; j < k.cols(); ++j) {
        auto col = k.column(j);
        out.emplace_back(col.begin(), col.begin() + src);
    }
    return out;
}

namespace {

// im(g) = ker(h) at the node shared by consecutive maps; both live in
// *g.target == *h.source.
void check_node(ExactnessReport& rep, int degree, const std::string& node, const GroupHom& g,
                const GroupHom& h) {
    const Subquotient& amb = *h.source;
    auto im = hom_image_generators(g);
    auto ker = hom_kernel_generators(h);
    for (std::size_t idx = 0; idx < im.size(); ++idx)
        if (!subgroup_contains(amb, ker, im[idx])) {
            std::ostringstream os;
            os << "image generator " << idx << " is not in the kernel";
            rep.entries.push_back({degree, node, false, os.str()});
            return;
        }
    for (std::size_t idx = 0; idx < ker.size(); ++idx)
        if (!subgroup_contains(amb, im, ker[idx])) {
            std::ostringstream os;
            os << "kernel generator " << idx << " is not in the image";
            rep.entries.push_back({degree, node, false, os.str()});
            return;
        }
    rep.entries.push_back({degree, node, true, ""});
}

}  // namespace

ExactnessReport verify_les_exactness(const TwoTermComplex& cx, int max_degree,
                                     const Limits& limits) {
    if (max_degree < 0) throw InputError("verify_les_exactness: negative degree");
    if (max_degree > limits.degree) throw BudgetError("verify_les_exactness: degree exceeds cap");
    std::vector<Subquotient> hyper, ha, hb;
    for (int r = 0; r <= max_degree + 1; ++r) hyper.push_back(hypercohomology(cx, r, limits));
    for (int r = 0; r <= max_degree; ++r) {
        ha.push_back(cohomology(cx.group, cx.A(), r, limits));
        hb.push_back(cohomology(cx.group, cx.B(), r, limits));
    }
    std::vector<GroupHom> imap, fmap, jmap;
    for (int r = 0; r <= max_degree; ++r) {
        imap.push_back(projection_to_a(cx, r, hyper[r], ha[r]));
        fmap.push_back(induced_map(cx.f, cx.group, ha[r], hb[r], r));
        jmap.push_back(shift_to_cone(cx, r, hb[r], hyper[r + 1]));
    }
    ExactnessReport rep;
    // Left end: 0 -> H^0(cx) -> H^0(A), i.e. ker(i_0) = 0.
    {
        bool pass = true;
        std::string witness;
        auto ker = hom_kernel_generators(imap[0]);
        for (std::size_t idx = 0; idx < ker.size(); ++idx)
            if (!subgroup_contains(hyper[0], {}, ker[idx])) {
                pass = false;
                witness = "i has a nonzero kernel class";
                break;
            }
        rep.entries.push_back({0, "H^0(cx)", pass, witness});
    }
    for (int r = 0; r <= max_degree; ++r) {
        std::ostringstream na, nb, nc;
        na << "H^" << r << "(A)";
        nb << "H^" << r << "(B)";
        check_node(rep, r, na.str(), imap[r], fmap[r]);
        check_node(rep, r, nb.str(), fmap[r], jmap[r]);
        if (r + 1 <= max_degree) {
            nc << "H^" << (r + 1) << "(cx)";
            check_node(rep, r + 1, nc.str(), jmap[r], imap[r + 1]);
        }
    }
    return rep;
}

}  // namespace galcoh
