#pragma once

#include <cstddef>
#include <vector>

#include "galcoh/intmatrix.hpp"

namespace galcoh {

/// Default resource caps. Bar-resolution cost grows as |group|^degree, so
/// both the group size and the cochain dimension are bounded.
struct Limits {
    std::size_t group_size = 64;
    int degree = 3;
    std::size_t dimension = 50000;
};

/// A finite group given by its multiplication table, validated on
/// construction. Element 0..size-1; `generators` records a distinguished
/// generating set used when actions are supplied generator-wise.
class FiniteGroup {
public:
    static FiniteGroup trivial();
    static FiniteGroup cyclic(std::size_t n);
    static FiniteGroup from_table(const std::vector<std::vector<int>>& mul,
                                  const Limits& limits = {});
    /// Closure of permutation generators on `degree` points; permutations
    /// are given as image vectors (0-based).
    static FiniteGroup from_permutations(std::size_t degree,
                                         const std::vector<std::vector<int>>& gens,
                                         const Limits& limits = {});
    /// Symmetric group on n points (n! must stay within the size cap).
    static FiniteGroup symmetric(std::size_t n, const Limits& limits = {});

    std::size_t size() const { return size_; }
    int mul(int a, int b) const { return mul_[static_cast<std::size_t>(a) * size_ + b]; }
    int identity() const { return identity_; }
    int inverse(int a) const { return inv_[a]; }
    const std::vector<int>& generators() const { return generators_; }

    int order_of(int a) const;
    /// Some element of order size(), or -1 when the group is not cyclic.
    int cyclic_generator() const;
    bool same_table(const FiniteGroup& o) const;

    /// All subgroups, each as a sorted list of element indices.
    std::vector<std::vector<int>> subgroups() const;

private:
    FiniteGroup() = default;
    void finish_validation();

    std::size_t size_ = 0;
    std::vector<int> mul_;
    int identity_ = 0;
    std::vector<int> inv_;
    std::vector<int> generators_;
};

}  // namespace galcoh
