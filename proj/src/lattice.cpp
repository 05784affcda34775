#include "galcoh/lattice.hpp"

#include <algorithm>

#include "galcoh/exactlin.hpp"

namespace galcoh {

GammaLattice validate_lattice(const FiniteGroup& group, const std::vector<IntMatrix>& matrices) {
    std::size_t n = group.size();
    const std::vector<int>& gens = group.generators();
    bool element_indexed = matrices.size() == n && matrices.size() != gens.size();
    const std::vector<int>* index = nullptr;
    std::vector<int> all;
    if (element_indexed) {
        all.resize(n);
        for (std::size_t i = 0; i < n; ++i) all[i] = static_cast<int>(i);
        index = &all;
    } else {
        if (matrices.size() != gens.size())
            throw InputError("lattice action: expected one matrix per generator");
        index = &gens;
    }
    std::size_t rank = n > 0 && !matrices.empty() ? matrices[0].rows() : 0;
    if (matrices.empty() && n > 1)
        throw InputError("lattice action: no generators for a nontrivial group");
    for (const auto& m : matrices) {
        if (m.rows() != m.cols()) throw InputError("lattice action: matrix not square");
        if (m.rows() != rank) throw InputError("lattice action: ranks differ");
        if (abs(determinant(m)) != 1) throw InputError("lattice action: matrix not unimodular");
    }
    if (matrices.empty()) rank = 0;

    GammaLattice l;
    l.rank = rank;
    l.action.assign(n, IntMatrix());
    std::vector<bool> known(n, false);
    l.action[group.identity()] = IntMatrix::identity(rank);
    known[group.identity()] = true;
    // Breadth-first extension act(g_j x) = M_j act(x); a revisit with a
    // different value is a relation violation.
    std::vector<int> frontier{group.identity()};
    for (std::size_t head = 0; head < frontier.size(); ++head) {
        int x = frontier[head];
        for (std::size_t j = 0; j < index->size(); ++j) {
            int y = group.mul((*index)[j], x);
            IntMatrix m = matrices[j] * l.action[x];
            if (!known[y]) {
                l.action[y] = std::move(m);
                known[y] = true;
                frontier.push_back(y);
            } else if (!(l.action[y] == m)) {
                throw InputError("lattice action: generator relations violated");
            }
        }
    }
    for (bool k : known)
        if (!k) throw InputError("lattice action: generators do not generate the group");
    // Homomorphism check across all generator translates is complete once
    // every element carries a consistent value; re-verify on generators.
    for (std::size_t j = 0; j < index->size(); ++j)
        for (std::size_t x = 0; x < n; ++x) {
            int y = group.mul((*index)[j], static_cast<int>(x));
            if (!(l.action[y] == matrices[j] * l.action[x]))
                throw InputError("lattice action: generator relations violated");
        }
    return l;
}

GammaLattice trivial_lattice(const FiniteGroup& group, std::size_t rank) {
    GammaLattice l;
    l.rank = rank;
    l.action.assign(group.size(), IntMatrix::identity(rank));
    return l;
}

GammaLattice regular_lattice(const FiniteGroup& group) {
    return coset_lattice(group, {group.identity()});
}

GammaLattice coset_lattice(const FiniteGroup& group, const std::vector<int>& subgroup_elements) {
    std::size_t n = group.size();
    // Enumerate left cosets.
    std::vector<int> coset_of(n, -1);
    std::vector<int> rep;
    for (std::size_t x = 0; x < n; ++x) {
        if (coset_of[x] >= 0) continue;
        int c = static_cast<int>(rep.size());
        rep.push_back(static_cast<int>(x));
        for (int h : subgroup_elements) coset_of[group.mul(static_cast<int>(x), h)] = c;
        if (coset_of[x] != c) throw InputError("coset lattice: subgroup set is not a subgroup");
    }
    std::size_t k = rep.size();
    GammaLattice l;
    l.rank = k;
    l.action.reserve(n);
    for (std::size_t g = 0; g < n; ++g) {
        IntMatrix m(k, k);
        for (std::size_t c = 0; c < k; ++c)
            m.at(coset_of[group.mul(static_cast<int>(g), rep[c])], c) = 1;
        l.action.push_back(std::move(m));
    }
    return l;
}

GammaLattice dual_lattice(const GammaLattice& l, const FiniteGroup& group) {
    GammaLattice d;
    d.rank = l.rank;
    d.action.resize(group.size());
    for (std::size_t g = 0; g < group.size(); ++g)
        d.action[g] = l.action[group.inverse(static_cast<int>(g))].transpose();
    return d;
}

GammaLattice direct_sum(const GammaLattice& a, const GammaLattice& b) {
    if (a.action.size() != b.action.size())
        throw InputError("lattice direct sum: group size mismatch");
    GammaLattice s;
    s.rank = a.rank + b.rank;
    s.action.reserve(a.action.size());
    for (std::size_t g = 0; g < a.action.size(); ++g)
        s.action.push_back(block_diag(a.action[g], b.action[g]));
    return s;
}

GammaLattice conjugate(const GammaLattice& l, const IntMatrix& t) {
    IntMatrix tinv = inverse_unimodular(t);
    GammaLattice c;
    c.rank = l.rank;
    c.action.reserve(l.action.size());
    for (const auto& m : l.action) c.action.push_back(tinv * m * t);
    return c;
}

bool is_permutation_module(const GammaLattice& l) {
    return std::all_of(l.action.begin(), l.action.end(),
                       [](const IntMatrix& m) { return m.is_permutation(); });
}

std::pair<FiniteGroup, GammaLattice> restrict_to_subgroup(
    const FiniteGroup& group, const GammaLattice& l, const std::vector<int>& subgroup_elements) {
    std::size_t k = subgroup_elements.size();
    std::vector<int> pos(group.size(), -1);
    for (std::size_t i = 0; i < k; ++i) pos[subgroup_elements[i]] = static_cast<int>(i);
    std::vector<std::vector<int>> table(k, std::vector<int>(k));
    for (std::size_t a = 0; a < k; ++a)
        for (std::size_t b = 0; b < k; ++b) {
            int p = pos[group.mul(subgroup_elements[a], subgroup_elements[b])];
            if (p < 0) throw InputError("subgroup restriction: set not closed");
            table[a][b] = p;
        }
    FiniteGroup sub = FiniteGroup::from_table(table);
    GammaLattice sl;
    sl.rank = l.rank;
    sl.action.reserve(k);
    for (std::size_t i = 0; i < k; ++i) sl.action.push_back(l.action[subgroup_elements[i]]);
    return {std::move(sub), std::move(sl)};
}

LatticeMap make_lattice_map(const FiniteGroup& group, GammaLattice source, GammaLattice target,
                            IntMatrix matrix) {
    if (matrix.rows() != target.rank || matrix.cols() != source.rank)
        throw InputError("lattice map: matrix shape mismatch");
    for (std::size_t g = 0; g < group.size(); ++g)
        if (!(matrix * source.action[g] == target.action[g] * matrix))
            throw InputError("lattice map: not Gamma-equivariant");
    return LatticeMap{std::move(source), std::move(target), std::move(matrix)};
}

}  // namespace galcoh
