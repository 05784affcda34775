#pragma once

#include <cstddef>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace galcoh {

using Int = mpz_class;

inline int cmp_abs(const Int& a, const Int& b) {
    return mpz_cmpabs(a.get_mpz_t(), b.get_mpz_t());
}

/// Error in user-supplied data (bad schema, failed validation).
struct InputError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// A configured resource cap was exceeded.
struct BudgetError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Dense matrix over Z with arbitrary-precision entries, row-major.
/// Zero rows or columns are legal and denote maps to/from the zero module.
class IntMatrix {
public:
    IntMatrix() = default;
    IntMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), e_(rows * cols) {}

    static IntMatrix identity(std::size_t n);
    static IntMatrix from_rows(std::initializer_list<std::initializer_list<long>> rows);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Int& at(std::size_t i, std::size_t j) { return e_[i * cols_ + j]; }
    const Int& at(std::size_t i, std::size_t j) const { return e_[i * cols_ + j]; }

    bool operator==(const IntMatrix& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && e_ == o.e_;
    }

    IntMatrix operator*(const IntMatrix& o) const;
    IntMatrix operator+(const IntMatrix& o) const;
    IntMatrix operator-(const IntMatrix& o) const;

    std::vector<Int> apply(const std::vector<Int>& v) const;
    IntMatrix transpose() const;
    IntMatrix negate() const;
    bool is_zero() const;
    bool is_identity() const;
    bool is_permutation() const;

    std::vector<Int> column(std::size_t j) const;
    void set_column(std::size_t j, const std::vector<Int>& v);

    /// [this | o] side by side.
    IntMatrix hstack(const IntMatrix& o) const;
    /// [this; o] stacked.
    IntMatrix vstack(const IntMatrix& o) const;
    /// Copies `block` into position with upper-left corner (i0, j0).
    void paste(std::size_t i0, std::size_t j0, const IntMatrix& block);
    IntMatrix submatrix(std::size_t i0, std::size_t j0, std::size_t nr, std::size_t nc) const;

    std::string str() const;

private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<Int> e_;
};

IntMatrix block_diag(const IntMatrix& a, const IntMatrix& b);

/// Exact determinant (Bareiss fraction-free elimination); square input.
Int determinant(const IntMatrix& a);

}  // namespace galcoh
