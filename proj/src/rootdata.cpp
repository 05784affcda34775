#include "galcoh/rootdata.hpp"

#include <sstream>

namespace galcoh {

namespace {

void edge(IntMatrix& c, std::size_t i, std::size_t j) {
    c.at(i, j) = -1;
    c.at(j, i) = -1;
}

[[noreturn]] void bad_type(char type, std::size_t rank) {
    std::ostringstream os;
    os << "cartan_matrix: illegal type/rank " << type << rank;
    throw InputError(os.str());
}

}  // namespace

IntMatrix cartan_matrix(char type, std::size_t rank) {
    IntMatrix c = IntMatrix::identity(rank);
    for (std::size_t i = 0; i < rank; ++i) c.at(i, i) = 2;
    switch (type) {
        case 'A':
            if (rank < 1) bad_type(type, rank);
            for (std::size_t i = 0; i + 1 < rank; ++i) edge(c, i, i + 1);
            break;
        case 'B':
        case 'C':
            if (rank < 2) bad_type(type, rank);
            for (std::size_t i = 0; i + 1 < rank; ++i) edge(c, i, i + 1);
            if (type == 'B')
                c.at(rank - 2, rank - 1) = -2;
            else
                c.at(rank - 1, rank - 2) = -2;
            break;
        case 'D':
            if (rank < 3) bad_type(type, rank);
            for (std::size_t i = 0; i + 3 < rank; ++i) edge(c, i, i + 1);
            edge(c, rank - 3, rank - 2);
            edge(c, rank - 3, rank - 1);
            break;
        case 'E':
            if (rank < 6 || rank > 8) bad_type(type, rank);
            edge(c, 0, 2);
            for (std::size_t i = 2; i + 1 < rank; ++i) edge(c, i, i + 1);
            edge(c, 1, 3);
            break;
        case 'F':
            if (rank != 4) bad_type(type, rank);
            edge(c, 0, 1);
            edge(c, 2, 3);
            c.at(1, 2) = -2;
            c.at(2, 1) = -1;
            break;
        case 'G':
            if (rank != 2) bad_type(type, rank);
            c.at(0, 1) = -1;
            c.at(1, 0) = -3;
            break;
        default:
            bad_type(type, rank);
    }
    return c;
}

namespace {

/// Full-rank basis of the column span of m (rows x n, n >= rows), as a
/// square matrix: column i is d_i * (U^-1 e_i) from the Smith form.
IntMatrix column_span_basis(const IntMatrix& m) {
    SmithForm sf = snf(m);
    if (sf.rank() < m.rows()) throw InputError("column span is not of full rank");
    IntMatrix uinv = inverse_unimodular(sf.U);
    IntMatrix basis(m.rows(), m.rows());
    for (std::size_t j = 0; j < m.rows(); ++j)
        for (std::size_t i = 0; i < m.rows(); ++i)
            basis.at(i, j) = sf.S.at(j, j) * uinv.at(i, j);
    return basis;
}

ReductiveGroupSpec finish_spec(FiniteGroup galois, GammaLattice charlat, GammaLattice sclat,
                               IntMatrix matrix, std::optional<SplitInfo> split) {
    if (rank(matrix) != sclat.rank)
        throw InputError("restriction does not have finite-index image");
    LatticeMap map =
        make_lattice_map(galois, std::move(charlat), std::move(sclat), std::move(matrix));
    return ReductiveGroupSpec{std::move(galois), std::move(map), std::move(split)};
}

}  // namespace

ReductiveGroupSpec build_split(char type, std::size_t rank, Isogeny isogeny,
                               const std::vector<std::vector<Int>>& kernel_generators,
                               std::size_t central_torus_rank) {
    IntMatrix cartan = cartan_matrix(type, rank);
    IntMatrix x_basis(rank, rank);
    switch (isogeny) {
        case Isogeny::sc:
            x_basis = IntMatrix::identity(rank);
            break;
        case Isogeny::adjoint:
            x_basis = cartan;
            break;
        case Isogeny::kernel_generators: {
            IntMatrix gens(rank, kernel_generators.size());
            for (std::size_t j = 0; j < kernel_generators.size(); ++j) {
                if (kernel_generators[j].size() != rank)
                    throw InputError("kernel generator has wrong length");
                for (std::size_t i = 0; i < rank; ++i) gens.at(i, j) = kernel_generators[j][i];
            }
            x_basis = column_span_basis(cartan.hstack(gens));
            break;
        }
    }
    auto galois = FiniteGroup::trivial();
    GammaLattice charlat = trivial_lattice(galois, rank + central_torus_rank);
    GammaLattice sclat = trivial_lattice(galois, rank);
    IntMatrix matrix = x_basis.hstack(IntMatrix(rank, central_torus_rank));
    SplitInfo split{type, rank, std::move(cartan), x_basis, central_torus_rank};
    return finish_spec(std::move(galois), std::move(charlat), std::move(sclat),
                       std::move(matrix), std::move(split));
}

ReductiveGroupSpec build_torus(FiniteGroup galois, GammaLattice lattice) {
    GammaLattice sclat = trivial_lattice(galois, 0);
    IntMatrix matrix(0, lattice.rank);
    return finish_spec(std::move(galois), std::move(lattice), std::move(sclat),
                       std::move(matrix), std::nullopt);
}

ReductiveGroupSpec make_raw(FiniteGroup galois, GammaLattice charlattice,
                            GammaLattice sc_charlattice, IntMatrix restriction) {
    return finish_spec(std::move(galois), std::move(charlattice), std::move(sc_charlattice),
                       std::move(restriction), std::nullopt);
}

ReductiveGroupSpec apply_twist(const ReductiveGroupSpec& spec, const FiniteGroup& galois,
                               const std::vector<std::vector<int>>& diagram_action) {
    if (!spec.split) throw InputError("apply_twist: spec has no split root-datum data");
    const SplitInfo& sp = *spec.split;
    std::size_t n = sp.rank;
    LatticeSolver x_solver(sp.x_basis);
    std::vector<IntMatrix> sc_mats, char_mats;
    for (const auto& perm : diagram_action) {
        if (perm.size() != n) throw InputError("diagram permutation has wrong length");
        std::vector<bool> seen(n, false);
        for (int v : perm) {
            if (v < 0 || static_cast<std::size_t>(v) >= n || seen[v])
                throw InputError("diagram action is not a permutation");
            seen[v] = true;
        }
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                if (sp.cartan.at(perm[i], perm[j]) != sp.cartan.at(i, j))
                    throw InputError("permutation is not a Dynkin-diagram automorphism");
        // omega_i -> omega_{perm(i)} on the fundamental-weight basis of P.
        IntMatrix p_perm(n, n);
        for (std::size_t i = 0; i < n; ++i) p_perm.at(perm[i], i) = 1;
        // Induced action on X: solve x_basis * m = p_perm * x_basis over Z.
        IntMatrix px = p_perm * sp.x_basis;
        IntMatrix m(n, n);
        for (std::size_t j = 0; j < n; ++j) {
            auto col = x_solver.solve(px.column(j));
            if (!col) throw InputError("intermediate lattice is not stable under the twist");
            m.set_column(j, *col);
        }
        sc_mats.push_back(std::move(p_perm));
        char_mats.push_back(block_diag(m, IntMatrix::identity(sp.central_torus_rank)));
    }
    GammaLattice sclat = validate_lattice(galois, sc_mats);
    GammaLattice charlat = validate_lattice(galois, char_mats);
    return finish_spec(galois, std::move(charlat), std::move(sclat), spec.restriction.matrix,
                       sp);
}

std::vector<int> a_flip(std::size_t rank) {
    std::vector<int> p(rank);
    for (std::size_t i = 0; i < rank; ++i) p[i] = static_cast<int>(rank - 1 - i);
    return p;
}

std::vector<int> d4_triality() { return {2, 1, 3, 0}; }

std::vector<int> e6_flip() { return {5, 1, 4, 3, 2, 0}; }

ReductiveGroupSpec product(const std::vector<ReductiveGroupSpec>& specs) {
    if (specs.empty()) throw InputError("product: empty factor list");
    const FiniteGroup* common = nullptr;
    for (const auto& s : specs)
        if (s.galois.size() > 1) {
            if (common && !common->same_table(s.galois))
                throw InputError("product: factors have mismatched Galois groups");
            common = &s.galois;
        }
    FiniteGroup galois = common ? *common : FiniteGroup::trivial();
    GammaLattice charlat = trivial_lattice(galois, 0);
    GammaLattice sclat = trivial_lattice(galois, 0);
    IntMatrix matrix(0, 0);
    for (const auto& s : specs) {
        GammaLattice c = s.charlattice(), sc = s.sc_charlattice();
        if (s.galois.size() == 1 && galois.size() > 1) {
            // Inflate a trivial-Galois factor along the augmentation.
            c = trivial_lattice(galois, c.rank);
            sc = trivial_lattice(galois, sc.rank);
        }
        charlat = direct_sum(charlat, c);
        sclat = direct_sum(sclat, sc);
        matrix = block_diag(matrix, s.restriction.matrix);
    }
    return finish_spec(std::move(galois), std::move(charlat), std::move(sclat),
                       std::move(matrix), std::nullopt);
}

}  // namespace galcoh
