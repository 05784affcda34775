#pragma once

#include <optional>
#include <vector>

#include "galcoh/finab.hpp"
#include "galcoh/intmatrix.hpp"

namespace galcoh {

/// Smith normal form U*A*V = S with unimodular U, V and nonnegative
/// diagonal S whose entries form a divisibility chain.
struct SmithForm {
    IntMatrix U, S, V;

    std::size_t rank() const;
    std::vector<Int> diagonal() const;
};

SmithForm snf(const IntMatrix& a);

std::size_t rank(const IntMatrix& a);

/// Basis of the integer kernel lattice {x : A x = 0}, one column per basis
/// vector (cols(A) - rank(A) of them). Computed by column echelon
/// reduction, independently of snf().
IntMatrix kernel_basis(const IntMatrix& a);

/// coker(A) = Z^rows / column-span(A) in invariant-factor form.
FinAbGroup cokernel(const IntMatrix& a);

/// Inverse of a matrix with det = +-1.
IntMatrix inverse_unimodular(const IntMatrix& u);

/// Repeated exact solving A x = b against a fixed A.
class LatticeSolver {
public:
    explicit LatticeSolver(IntMatrix a);

    const IntMatrix& matrix() const { return a_; }
    std::size_t rank() const { return rank_; }
    /// x with A x = b over Z, or nullopt when no integral solution exists.
    std::optional<std::vector<Int>> solve(const std::vector<Int>& b) const;

private:
    IntMatrix a_;
    SmithForm sf_;
    std::size_t rank_;
};

std::optional<std::vector<Int>> solve_in_lattice(const IntMatrix& a, const std::vector<Int>& b);

/// ker(d_out)/im(d_in) presented with generator representatives in the
/// ambient cochain coordinates, plus the data needed to express any
/// further cocycle in generator coordinates.
class Subquotient {
public:
    /// Requires d_out * d_in = 0; throws InputError otherwise.
    Subquotient(const IntMatrix& d_in, const IntMatrix& d_out);

    const FinAbGroup& group() const { return group_; }
    /// One ambient vector per generator: torsion generators first (in
    /// invariant-factor order), then free generators.
    const std::vector<std::vector<Int>>& representatives() const { return reps_; }
    std::size_t ambient_dim() const { return ambient_dim_; }

    /// Orders of the generators, aligned with representatives(): the
    /// invariant factors followed by 0 for each free generator.
    std::vector<Int> generator_orders() const;

    /// Coordinates of the class of an ambient vector with respect to the
    /// generators (torsion coordinates reduced into [0, d_i)). Returns
    /// nullopt when v is not a cocycle (not in ker d_out).
    std::optional<std::vector<Int>> coordinates_of(const std::vector<Int>& v) const;

    bool class_is_zero(const std::vector<Int>& v) const;

private:
    std::size_t ambient_dim_;
    IntMatrix kernel_;           // ambient_dim x k
    LatticeSolver kernel_solver_;
    IntMatrix uc_;               // k x k, from SNF of the image in kernel coords
    std::vector<Int> dvec_;      // length k: invariant factor per kernel coord (0 = free)
    FinAbGroup group_;
    std::vector<std::vector<Int>> reps_;
};

/// Per spec: homology ker(d_out)/im(d_in) at the middle of a three-term
/// complex (same as constructing a Subquotient).
Subquotient homology_at(const IntMatrix& d_in, const IntMatrix& d_out);

}  // namespace galcoh
