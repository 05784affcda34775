#include "galcoh/cohomology.hpp"

namespace galcoh {

namespace {

// Adds sign * block at block position (row_tuple, col_tuple).
void add_block(IntMatrix& m, const CochainSpace& rows, const CochainSpace& cols,
               std::size_t row_tuple, std::size_t col_tuple, const IntMatrix& block, int sign) {
    std::size_t r0 = rows.offset(row_tuple), c0 = cols.offset(col_tuple);
    for (std::size_t i = 0; i < block.rows(); ++i)
        for (std::size_t j = 0; j < block.cols(); ++j) {
            if (sgn(block.at(i, j)) == 0) continue;
            if (sign > 0)
                m.at(r0 + i, c0 + j) += block.at(i, j);
            else
                m.at(r0 + i, c0 + j) -= block.at(i, j);
        }
}

void add_identity_block(IntMatrix& m, const CochainSpace& rows, const CochainSpace& cols,
                        std::size_t row_tuple, std::size_t col_tuple, int sign) {
    std::size_t r0 = rows.offset(row_tuple), c0 = cols.offset(col_tuple);
    for (std::size_t i = 0; i < rows.rank; ++i) {
        if (sign > 0)
            m.at(r0 + i, c0 + i) += 1;
        else
            m.at(r0 + i, c0 + i) -= 1;
    }
}

}  // namespace

IntMatrix bar_differential(const FiniteGroup& group, const GammaLattice& m, int n) {
    if (n < 0) throw InputError("bar differential: negative degree");
    CochainSpace in(group, m, n), out(group, m, n + 1);
    std::size_t s = group.size();
    IntMatrix d(out.dimension(), in.dimension());
    std::vector<int> tuple(n + 1);
    for (std::size_t t = 0; t < out.tuple_count(); ++t) {
        // Decode (g_1 .. g_{n+1}), g_1 most significant.
        std::size_t rem = t;
        for (int i = n; i >= 0; --i) {
            tuple[i] = static_cast<int>(rem % s);
            rem /= s;
        }
        auto encode = [&](const std::vector<int>& tt) {
            std::size_t idx = 0;
            for (int v : tt) idx = idx * s + static_cast<std::size_t>(v);
            return idx;
        };
        // g_1 . f(g_2 .. g_{n+1})
        std::vector<int> tail(tuple.begin() + 1, tuple.end());
        add_block(d, out, in, t, encode(tail), m.act(tuple[0]), +1);
        // (-1)^i f(.., g_i g_{i+1}, ..)
        for (int i = 1; i <= n; ++i) {
            std::vector<int> merged;
            merged.reserve(n);
            for (int p = 0; p <= n; ++p) {
                if (p == i - 1)
                    merged.push_back(group.mul(tuple[p], tuple[p + 1]));
                else if (p != i)
                    merged.push_back(tuple[p]);
            }
            add_identity_block(d, out, in, t, encode(merged), i % 2 == 0 ? +1 : -1);
        }
        // (-1)^{n+1} f(g_1 .. g_n)
        std::vector<int> head(tuple.begin(), tuple.end() - 1);
        add_identity_block(d, out, in, t, encode(head), (n + 1) % 2 == 0 ? +1 : -1);
    }
    return d;
}

Subquotient cohomology(const FiniteGroup& group, const GammaLattice& m, int n,
                       const Limits& limits) {
    if (n < 0) throw InputError("cohomology: negative degree");
    if (n > limits.degree) throw BudgetError("cohomology: degree exceeds cap");
    if (CochainSpace(group, m, n + 1).dimension() > limits.dimension)
        throw BudgetError("cohomology: cochain dimension exceeds cap");
    IntMatrix d_out = bar_differential(group, m, n);
    IntMatrix d_in = n == 0 ? IntMatrix(m.rank, 0) : bar_differential(group, m, n - 1);
    return homology_at(d_in, d_out);
}

FinAbGroup cohomology_group(const FiniteGroup& group, const GammaLattice& m, int n,
                            const Limits& limits) {
    return cohomology(group, m, n, limits).group();
}

FinAbGroup cyclic_cohomology(const FiniteGroup& group, const GammaLattice& m, int n) {
    int gen = group.cyclic_generator();
    if (gen < 0) throw InputError("cyclic cohomology: group is not cyclic");
    if (n < 1) throw InputError("cyclic cohomology: degree must be >= 1");
    const IntMatrix& sigma = m.act(gen);
    IntMatrix norm(m.rank, m.rank);
    int x = group.identity();
    for (std::size_t i = 0; i < group.size(); ++i) {
        norm = norm + m.act(x);
        x = group.mul(x, gen);
    }
    IntMatrix shifted = sigma - IntMatrix::identity(m.rank);
    if (n % 2 == 1) return homology_at(shifted, norm).group();
    return homology_at(norm, shifted).group();
}

std::vector<Int> map_cochain(const LatticeMap& phi, const FiniteGroup& group, int n,
                             const std::vector<Int>& v) {
    CochainSpace in(group, phi.source, n), out(group, phi.target, n);
    if (v.size() != in.dimension()) throw InputError("map_cochain: dimension mismatch");
    std::vector<Int> w(out.dimension());
    for (std::size_t t = 0; t < in.tuple_count(); ++t)
        for (std::size_t i = 0; i < phi.target.rank; ++i) {
            Int acc = 0;
            for (std::size_t j = 0; j < phi.source.rank; ++j)
                if (sgn(phi.matrix.at(i, j)) != 0)
                    acc += phi.matrix.at(i, j) * v[in.offset(t) + j];
            w[out.offset(t) + i] = std::move(acc);
        }
    return w;
}

GroupHom induced_map(const LatticeMap& phi, const FiniteGroup& group, const Subquotient& source_h,
                     const Subquotient& target_h, int n) {
    const auto& reps = source_h.representatives();
    IntMatrix mat(target_h.group().generator_count(), reps.size());
    for (std::size_t j = 0; j < reps.size(); ++j) {
        auto image = map_cochain(phi, group, n, reps[j]);
        auto coords = target_h.coordinates_of(image);
        if (!coords)
            throw std::logic_error("induced_map: image of a cocycle is not a target cocycle");
        mat.set_column(j, *coords);
    }
    return GroupHom{&source_h, &target_h, std::move(mat)};
}

bool is_flasque(const FiniteGroup& group, const GammaLattice& l) {
    GammaLattice d = dual_lattice(l, group);
    for (const auto& sub : group.subgroups()) {
        auto [sg, sl] = restrict_to_subgroup(group, d, sub);
        if (!cohomology_group(sg, sl, 1).is_trivial()) return false;
    }
    return true;
}

bool is_coflasque(const FiniteGroup& group, const GammaLattice& l) {
    for (const auto& sub : group.subgroups()) {
        auto [sg, sl] = restrict_to_subgroup(group, l, sub);
        if (!cohomology_group(sg, sl, 1).is_trivial()) return false;
    }
    return true;
}

}  // namespace galcoh
