#pragma once

#include <string>
#include <vector>

#include "galcoh/intmatrix.hpp"

namespace galcoh {

/// Finitely generated abelian group in invariant-factor normal form.
/// Torsion factors d_i satisfy d_i >= 2 and d_i | d_{i+1}; the free part
/// is carried separately in free_rank.
struct FinAbGroup {
    std::vector<Int> invariant_factors;
    std::size_t free_rank = 0;

    /// Builds from a diagonal (SNF order): drops 1's, counts 0's and
    /// `extra_free` into free_rank.
    static FinAbGroup from_diagonal(const std::vector<Int>& diag, std::size_t extra_free = 0);

    bool is_trivial() const { return invariant_factors.empty() && free_rank == 0; }
    bool is_finite() const { return free_rank == 0; }
    /// Order of the torsion part (the full order when finite).
    Int order() const;
    std::size_t generator_count() const { return invariant_factors.size() + free_rank; }

    bool operator==(const FinAbGroup& o) const = default;

    /// "0", "Z/2 x Z/4", "Z^2 x Z/3".
    std::string str() const;
};

/// Direct sum; invariant factors are renormalized to a divisibility chain.
FinAbGroup direct_sum(const FinAbGroup& a, const FinAbGroup& b);

}  // namespace galcoh
