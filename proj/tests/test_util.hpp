#pragma once

#include <random>
#include <vector>

#include "galcoh/intmatrix.hpp"

namespace galcoh::testutil {

inline IntMatrix random_matrix(std::mt19937_64& rng, std::size_t r, std::size_t c, long lo, long hi) {
    std::uniform_int_distribution<long> d(lo, hi);
    IntMatrix m(r, c);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < c; ++j) m.at(i, j) = d(rng);
    return m;
}

/// Random unimodular matrix as a short product of elementary operations.
inline IntMatrix random_unimodular(std::mt19937_64& rng, std::size_t n, int steps = 8) {
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

/// gcd of all k x k minors (0 when all vanish); brute-force oracle.
inline Int determinantal_divisor(const IntMatrix& a, std::size_t k) {
    std::vector<std::size_t> ri(k), ci(k);
    Int g = 0;
    auto pick = [&](std::size_t n, std::vector<std::size_t>& out, auto&& body) {
        std::vector<std::size_t> sel(k);
        auto rec = [&](auto&& self, std::size_t pos, std::size_t start) -> void {
            if (pos == k) {
                out = sel;
                body();
                return;
            }
            for (std::size_t v = start; v + (k - pos) <= n; ++v) {
                sel[pos] = v;
                self(self, pos + 1, v + 1);
            }
        };
        rec(rec, 0, 0);
    };
    pick(a.rows(), ri, [&] {
        pick(a.cols(), ci, [&] {
            IntMatrix sub(k, k);
            for (std::size_t i = 0; i < k; ++i)
                for (std::size_t j = 0; j < k; ++j) sub.at(i, j) = a.at(ri[i], ci[j]);
            g = gcd(g, determinant(sub));
        });
    });
    return abs(g);
}

}  // namespace galcoh::testutil
