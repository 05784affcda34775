#include "galcoh/exactlin.hpp"

#include <utility>

namespace galcoh {

std::size_t SmithForm::rank() const {
    std::size_t n = std::min(S.rows(), S.cols());
    std::size_t r = 0;
    for (std::size_t i = 0; i < n; ++i)
        if (sgn(S.at(i, i)) != 0) ++r;
    return r;
}

std::vector<Int> SmithForm::diagonal() const {
    std::size_t n = std::min(S.rows(), S.cols());
    std::vector<Int> d(n);
    for (std::size_t i = 0; i < n; ++i) d[i] = S.at(i, i);
    return d;
}

namespace {

// In-place elementary operations on S with mirrors on U (rows) and V (cols),
// preserving U*A*V = S.
struct SnfWork {
    IntMatrix S, U, V;

    void swap_rows(std::size_t a, std::size_t b) {
        if (a == b) return;
        for (std::size_t j = 0; j < S.cols(); ++j) swap(S.at(a, j), S.at(b, j));
        for (std::size_t j = 0; j < U.cols(); ++j) swap(U.at(a, j), U.at(b, j));
    }
    void swap_cols(std::size_t a, std::size_t b) {
        if (a == b) return;
        for (std::size_t i = 0; i < S.rows(); ++i) swap(S.at(i, a), S.at(i, b));
        for (std::size_t i = 0; i < V.rows(); ++i) swap(V.at(i, a), V.at(i, b));
    }
    // row a -= q * row b
    void row_sub(std::size_t a, std::size_t b, const Int& q) {
        if (sgn(q) == 0) return;
        for (std::size_t j = 0; j < S.cols(); ++j)
            if (sgn(S.at(b, j)) != 0) S.at(a, j) -= q * S.at(b, j);
        for (std::size_t j = 0; j < U.cols(); ++j)
            if (sgn(U.at(b, j)) != 0) U.at(a, j) -= q * U.at(b, j);
    }
    // col a -= q * col b
    void col_sub(std::size_t a, std::size_t b, const Int& q) {
        if (sgn(q) == 0) return;
        for (std::size_t i = 0; i < S.rows(); ++i)
            if (sgn(S.at(i, b)) != 0) S.at(i, a) -= q * S.at(i, b);
        for (std::size_t i = 0; i < V.rows(); ++i)
            if (sgn(V.at(i, b)) != 0) V.at(i, a) -= q * V.at(i, b);
    }
    void negate_row(std::size_t a) {
        for (std::size_t j = 0; j < S.cols(); ++j) S.at(a, j) = -S.at(a, j);
        for (std::size_t j = 0; j < U.cols(); ++j) U.at(a, j) = -U.at(a, j);
    }

    // Clears row t and column t (beyond the pivot) by Euclidean steps,
    // pivoting on minimal-absolute-value entries. Assumes the block
    // S[t.., t..] holds all remaining nonzero entries of row/col t.
    // Returns false when the block is entirely zero.
    bool clear_pivot(std::size_t t) {
        std::size_t r = S.rows(), c = S.cols();
        // Locate some nonzero entry in the block, minimal |.| with early
        // exit on a unit.
        std::size_t bi = t, bj = t;
        bool found = false;
        for (std::size_t i = t; i < r && !(found && cmp_abs(S.at(bi, bj), Int(1)) == 0); ++i)
            for (std::size_t j = t; j < c; ++j) {
                const Int& x = S.at(i, j);
                if (sgn(x) == 0) continue;
                if (!found || cmp_abs(x, S.at(bi, bj)) < 0) {
                    bi = i;
                    bj = j;
                    found = true;
                }
                if (cmp_abs(x, Int(1)) == 0) break;
            }
        if (!found) return false;
        swap_rows(t, bi);
        swap_cols(t, bj);
        while (true) {
            // Reduce column t.
            while (true) {
                std::size_t best = t;
                for (std::size_t i = t + 1; i < r; ++i)
                    if (sgn(S.at(i, t)) != 0 && cmp_abs(S.at(i, t), S.at(best, t)) < 0) best = i;
                swap_rows(t, best);
                bool clear = true;
                for (std::size_t i = t + 1; i < r; ++i)
                    if (sgn(S.at(i, t)) != 0) {
                        Int q = S.at(i, t) / S.at(t, t);
                        row_sub(i, t, q);
                        if (sgn(S.at(i, t)) != 0) clear = false;
                    }
                if (clear) break;
            }
            // Reduce row t.
            bool col_dirty = false;
            while (true) {
                std::size_t best = t;
                for (std::size_t j = t + 1; j < c; ++j)
                    if (sgn(S.at(t, j)) != 0 && cmp_abs(S.at(t, j), S.at(t, best)) < 0) best = j;
                if (best != t) {
                    swap_cols(t, best);
                    col_dirty = true;
                }
                bool clear = true;
                for (std::size_t j = t + 1; j < c; ++j)
                    if (sgn(S.at(t, j)) != 0) {
                        Int q = S.at(t, j) / S.at(t, t);
                        col_sub(j, t, q);
                        if (sgn(S.at(t, j)) != 0) clear = false;
                    }
                if (clear) break;
                col_dirty = true;
            }
            if (!col_dirty) break;
            bool ok = true;
            for (std::size_t i = t + 1; i < r; ++i)
                if (sgn(S.at(i, t)) != 0) {
                    ok = false;
                    break;
                }
            if (ok) break;
        }
        return true;
    }
};

}  // namespace

SmithForm snf(const IntMatrix& a) {
    SnfWork w{a, IntMatrix::identity(a.rows()), IntMatrix::identity(a.cols())};
    std::size_t lim = std::min(a.rows(), a.cols());
    std::size_t rk = 0;
    while (rk < lim && w.clear_pivot(rk)) ++rk;
    for (std::size_t i = 0; i < rk; ++i)
        if (sgn(w.S.at(i, i)) < 0) w.negate_row(i);
    // Enforce the divisibility chain d_i | d_{i+1}. Folding column i+1
    // into column i and clearing with row-only Euclid leaves (i, i+1) a
    // multiple of b = old d_{i+1}, so the final column op is exact and the
    // pair becomes (gcd, lcm).
    auto fix_pair = [&](std::size_t i) {
        w.col_sub(i, i + 1, Int(-1));
        while (sgn(w.S.at(i + 1, i)) != 0) {
            if (sgn(w.S.at(i, i)) == 0 || cmp_abs(w.S.at(i + 1, i), w.S.at(i, i)) < 0) {
                w.swap_rows(i, i + 1);
                continue;
            }
            Int q = w.S.at(i + 1, i) / w.S.at(i, i);
            w.row_sub(i + 1, i, q);
        }
        if (sgn(w.S.at(i, i + 1)) != 0) {
            Int q = w.S.at(i, i + 1) / w.S.at(i, i);
            w.col_sub(i + 1, i, q);
        }
        for (std::size_t t = i; t < i + 2; ++t)
            if (sgn(w.S.at(t, t)) < 0) w.negate_row(t);
    };
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t i = 0; i + 1 < rk; ++i) {
            if (sgn(w.S.at(i + 1, i + 1) % w.S.at(i, i)) != 0) {
                fix_pair(i);
                changed = true;
            }
        }
    }
    return SmithForm{std::move(w.U), std::move(w.S), std::move(w.V)};
}

namespace {

// Column echelon reduction; returns the rank and leaves the recording
// matrix V such that the trailing cols(A) - rank columns of V span the
// kernel lattice.
std::size_t column_echelon(IntMatrix& m, IntMatrix* v, bool sequential_rows = false) {
    std::size_t r = m.rows(), c = m.cols();
    std::size_t pc = 0;
    auto swap_cols = [&](std::size_t a, std::size_t b) {
        if (a == b) return;
        for (std::size_t i = 0; i < r; ++i) swap(m.at(i, a), m.at(i, b));
        if (v)
            for (std::size_t i = 0; i < c; ++i) swap(v->at(i, a), v->at(i, b));
    };
    // Per-row count of nonzeros among the active columns [pc, c), kept
    // incrementally so sparsest-first pivot selection is O(rows) per pivot.
    std::vector<std::size_t> nnz;
    if (!sequential_rows) {
        nnz.assign(r, 0);
        for (std::size_t i = 0; i < r; ++i)
            for (std::size_t j = 0; j < c; ++j)
                if (sgn(m.at(i, j)) != 0) ++nnz[i];
    }
    auto col_sub = [&](std::size_t a, std::size_t b, const Int& q) {
        for (std::size_t i = 0; i < r; ++i)
            if (sgn(m.at(i, b)) != 0) {
                bool was = sgn(m.at(i, a)) != 0;
                m.at(i, a) -= q * m.at(i, b);
                if (!nnz.empty() && was != (sgn(m.at(i, a)) != 0)) was ? --nnz[i] : ++nnz[i];
            }
        if (v)
            for (std::size_t i = 0; i < c; ++i)
                if (sgn(v->at(i, b)) != 0) v->at(i, a) -= q * v->at(i, b);
    };
    std::vector<bool> used(r, false);
    std::size_t next_row = 0;
    while (pc < c) {
        std::size_t row = r;
        if (sequential_rows) {
            // Monotonic pivot rows: yields a true staircase.
            for (std::size_t i = next_row; i < r; ++i) {
                bool nonzero = false;
                for (std::size_t j = pc; j < c && !nonzero; ++j)
                    if (sgn(m.at(i, j)) != 0) nonzero = true;
                if (nonzero) {
                    row = i;
                    break;
                }
            }
            next_row = row + 1;
        } else {
            // Sparsest row first, to limit fill-in on large differentials.
            std::size_t best_nnz = c + 1;
            for (std::size_t i = 0; i < r; ++i) {
                if (used[i] || nnz[i] == 0 || nnz[i] >= best_nnz) continue;
                row = i;
                best_nnz = nnz[i];
                if (best_nnz == 1) break;
            }
        }
        if (row == r) break;
        used[row] = true;
        while (true) {
            std::size_t best = c;
            for (std::size_t j = pc; j < c; ++j) {
                if (sgn(m.at(row, j)) == 0) continue;
                if (best == c || cmp_abs(m.at(row, j), m.at(row, best)) < 0) best = j;
                if (cmp_abs(m.at(row, best), Int(1)) == 0) break;
            }
            if (best == c) break;  // row has no pivot among active columns
            swap_cols(pc, best);
            bool clear = true;
            for (std::size_t j = pc + 1; j < c; ++j)
                if (sgn(m.at(row, j)) != 0) {
                    Int q = m.at(row, j) / m.at(row, pc);
                    col_sub(j, pc, q);
                    if (sgn(m.at(row, j)) != 0) clear = false;
                }
            if (clear) {
                if (!nnz.empty())
                    for (std::size_t i = 0; i < r; ++i)
                        if (sgn(m.at(i, pc)) != 0) --nnz[i];
                ++pc;
                break;
            }
        }
    }
    return pc;
}

// Column Hermite reduction of a full-column-rank matrix: echelon staircase
// with positive pivots and the entries left of each pivot reduced into
// [0, pivot). Keeps the column span; keeps downstream eliminations cheap.
void hermite_reduce(IntMatrix& m) {
    std::size_t r = m.rows(), c = m.cols();
    column_echelon(m, nullptr, /*sequential_rows=*/true);
    std::size_t row = 0;
    for (std::size_t j = 0; j < c; ++j) {
        while (row < r && sgn(m.at(row, j)) == 0) ++row;
        if (row == r) break;
        if (sgn(m.at(row, j)) < 0)
            for (std::size_t i = row; i < r; ++i) m.at(i, j) = -m.at(i, j);
        for (std::size_t jp = 0; jp < j; ++jp) {
            if (sgn(m.at(row, jp)) == 0) continue;
            Int q;
            mpz_fdiv_q(q.get_mpz_t(), m.at(row, jp).get_mpz_t(), m.at(row, j).get_mpz_t());
            if (sgn(q) == 0) continue;
            for (std::size_t i = row; i < r; ++i) m.at(i, jp) -= q * m.at(i, j);
        }
    }
}

}  // namespace

std::size_t rank(const IntMatrix& a) {
    IntMatrix m = a;
    return column_echelon(m, nullptr);
}

IntMatrix kernel_basis(const IntMatrix& a) {
    IntMatrix m = a;
    IntMatrix v = IntMatrix::identity(a.cols());
    std::size_t rk = column_echelon(m, &v);
    IntMatrix k = v.submatrix(0, rk == a.cols() ? 0 : rk, a.cols(), a.cols() - rk);
    hermite_reduce(k);
    return k;
}

FinAbGroup cokernel(const IntMatrix& a) {
    SmithForm sf = snf(a);
    // Zero diagonal entries already contribute to the free rank; only rows
    // beyond the diagonal need adding.
    return FinAbGroup::from_diagonal(sf.diagonal(), a.rows() - std::min(a.rows(), a.cols()));
}

IntMatrix inverse_unimodular(const IntMatrix& u) {
    if (u.rows() != u.cols()) throw InputError("inverse: matrix not square");
    SmithForm sf = snf(u);
    if (!sf.S.is_identity()) throw InputError("inverse: matrix not unimodular");
    return sf.V * sf.U;
}

LatticeSolver::LatticeSolver(IntMatrix a) : a_(std::move(a)), sf_(snf(a_)), rank_(sf_.rank()) {}

std::optional<std::vector<Int>> LatticeSolver::solve(const std::vector<Int>& b) const {
    if (b.size() != a_.rows()) throw InputError("solve: vector length mismatch");
    std::vector<Int> y = sf_.U.apply(b);
    std::size_t lim = std::min(a_.rows(), a_.cols());
    std::vector<Int> xp(a_.cols());
    for (std::size_t i = 0; i < a_.rows(); ++i) {
        if (i < lim && sgn(sf_.S.at(i, i)) != 0) {
            if (sgn(y[i] % sf_.S.at(i, i)) != 0) return std::nullopt;
            xp[i] = y[i] / sf_.S.at(i, i);
        } else if (sgn(y[i]) != 0) {
            return std::nullopt;
        }
    }
    return sf_.V.apply(xp);
}

std::optional<std::vector<Int>> solve_in_lattice(const IntMatrix& a, const std::vector<Int>& b) {
    return LatticeSolver(a).solve(b);
}

Subquotient::Subquotient(const IntMatrix& d_in, const IntMatrix& d_out)
    : ambient_dim_(d_in.rows()),
      kernel_(kernel_basis(d_out)),
      kernel_solver_(kernel_) {
    if (d_in.rows() != d_out.cols())
        throw InputError("homology: d_in rows must match d_out cols");
    if (!(d_out * d_in).is_zero())
        throw InputError("homology: d_out * d_in != 0");
    std::size_t k = kernel_.cols();
    // Image of d_in expressed in kernel coordinates.
    IntMatrix coords(k, d_in.cols());
    for (std::size_t j = 0; j < d_in.cols(); ++j) {
        auto x = kernel_solver_.solve(d_in.column(j));
        if (!x) throw std::logic_error("homology: image escapes kernel lattice");
        coords.set_column(j, *x);
    }
    SmithForm sf = snf(coords);
    std::size_t rc = sf.rank();
    dvec_.assign(k, Int(0));
    std::size_t lim = std::min(k, d_in.cols());
    for (std::size_t i = 0; i < lim; ++i) dvec_[i] = sf.S.at(i, i);
    group_ = FinAbGroup::from_diagonal(dvec_);
    uc_ = sf.U;
    IntMatrix ucinv = inverse_unimodular(sf.U);
    auto push_rep = [&](std::size_t i) {
        reps_.push_back(kernel_.apply(ucinv.column(i)));
    };
    for (std::size_t i = 0; i < rc; ++i)
        if (dvec_[i] > 1) push_rep(i);
    for (std::size_t i = rc; i < k; ++i) push_rep(i);
}

std::vector<Int> Subquotient::generator_orders() const {
    std::vector<Int> o = group_.invariant_factors;
    o.resize(o.size() + group_.free_rank, Int(0));
    return o;
}

std::optional<std::vector<Int>> Subquotient::coordinates_of(const std::vector<Int>& v) const {
    auto x = kernel_solver_.solve(v);
    if (!x) return std::nullopt;
    std::vector<Int> y = uc_.apply(*x);
    std::vector<Int> out;
    out.reserve(group_.generator_count());
    for (std::size_t i = 0; i < dvec_.size(); ++i) {
        if (dvec_[i] > 1) {
            Int r = y[i] % dvec_[i];
            if (sgn(r) < 0) r += dvec_[i];
            out.push_back(r);
        } else if (sgn(dvec_[i]) == 0) {
            out.push_back(y[i]);
        }
    }
    return out;
}

bool Subquotient::class_is_zero(const std::vector<Int>& v) const {
    auto c = coordinates_of(v);
    if (!c) throw InputError("class_is_zero: vector is not a cocycle");
    for (const auto& x : *c)
        if (sgn(x) != 0) return false;
    return true;
}

Subquotient homology_at(const IntMatrix& d_in, const IntMatrix& d_out) {
    return Subquotient(d_in, d_out);
}

}  // namespace galcoh
