#include "galcoh/randomgen.hpp"

namespace galcoh {

IntMatrix random_unimodular(std::mt19937_64& rng, std::size_t n, int steps) {
    IntMatrix m = IntMatrix::identity(n);
    if (n < 2) return m;
    std::uniform_int_distribution<std::size_t> idx(0, n - 1);
    std::uniform_int_distribution<long> coef(-2, 2);
    for (int s = 0; s < steps; ++s) {
        std::size_t i = idx(rng), j = idx(rng);
        if (i == j) continue;
        long q = coef(rng);
        for (std::size_t k = 0; k < n; ++k) m.at(i, k) += q * m.at(j, k);
    }
    return m;
}

GammaLattice random_lattice(std::mt19937_64& rng, const FiniteGroup& group, std::size_t max_rank) {
    auto subs = group.subgroups();
    std::uniform_int_distribution<std::size_t> pick(0, subs.size() - 1);
    std::uniform_int_distribution<std::size_t> target(1, std::max<std::size_t>(max_rank, 1));
    std::size_t goal = target(rng);
    GammaLattice l = trivial_lattice(group, 0);
    while (l.rank < goal) {
        const auto& h = subs[pick(rng)];
        std::size_t index = group.size() / h.size();
        if (l.rank + index > goal)
            l = direct_sum(l, trivial_lattice(group, 1));
        else
            l = direct_sum(l, coset_lattice(group, h));
    }
    return conjugate(l, random_unimodular(rng, l.rank, 6));
}

std::vector<IntMatrix> equivariant_map_basis(const FiniteGroup& group, const GammaLattice& source,
                                             const GammaLattice& target) {
    std::size_t ra = source.rank, rb = target.rank;
    std::size_t dim = ra * rb;
    if (dim == 0) return {};
    // Equivariance act_B(g) X = X act_A(g) as a linear system on vec(X),
    // column-major: (I (x) act_B(g)) - (act_A(g)^T (x) I).
    IntMatrix sys(group.size() * dim, dim);
    for (std::size_t g = 0; g < group.size(); ++g) {
        const IntMatrix& na = source.action[g];
        const IntMatrix& nb = target.action[g];
        std::size_t row0 = g * dim;
        for (std::size_t i = 0; i < rb; ++i)
            for (std::size_t j = 0; j < ra; ++j) {
                std::size_t row = row0 + i + rb * j;
                for (std::size_t k = 0; k < rb; ++k) sys.at(row, k + rb * j) += nb.at(i, k);
                for (std::size_t k = 0; k < ra; ++k) sys.at(row, i + rb * k) -= na.at(k, j);
            }
    }
    IntMatrix ker = kernel_basis(sys);
    std::vector<IntMatrix> out;
    for (std::size_t c = 0; c < ker.cols(); ++c) {
        IntMatrix x(rb, ra);
        for (std::size_t j = 0; j < ra; ++j)
            for (std::size_t i = 0; i < rb; ++i) x.at(i, j) = ker.at(i + rb * j, c);
        out.push_back(std::move(x));
    }
    return out;
}

TwoTermComplex random_complex(std::mt19937_64& rng, const FiniteGroup& group,
                              std::size_t max_rank, long coeff_bound) {
    GammaLattice a = random_lattice(rng, group, max_rank);
    GammaLattice b = random_lattice(rng, group, max_rank);
    auto basis = equivariant_map_basis(group, a, b);
    IntMatrix f(b.rank, a.rank);
    std::uniform_int_distribution<long> coef(-coeff_bound, coeff_bound);
    for (const auto& x : basis) {
        long q = coef(rng);
        if (q == 0) continue;
        IntMatrix scaled(x.rows(), x.cols());
        for (std::size_t i = 0; i < x.rows(); ++i)
            for (std::size_t j = 0; j < x.cols(); ++j) scaled.at(i, j) = q * x.at(i, j);
        f = f + scaled;
    }
    return make_complex(group, std::move(a), std::move(b), std::move(f));
}

}  // namespace galcoh
