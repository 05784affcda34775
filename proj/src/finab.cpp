#include "galcoh/finab.hpp"

#include <algorithm>
#include <sstream>

namespace galcoh {

namespace {

// Renormalizes a multiset of orders to a divisibility chain with pairwise
// gcd/lcm passes; drops trivial factors.
std::vector<Int> normalize_chain(std::vector<Int> f) {
    bool changed = true;
    while (changed) {
        changed = false;
        std::sort(f.begin(), f.end());
        for (std::size_t i = 0; i + 1 < f.size(); ++i) {
            if (sgn(f[i + 1] % f[i]) != 0) {
                Int g = gcd(f[i], f[i + 1]);
                Int l = f[i] / g * f[i + 1];
                f[i] = g;
                f[i + 1] = l;
                changed = true;
            }
        }
    }
    std::vector<Int> out;
    for (auto& d : f)
        if (d > 1) out.push_back(d);
    return out;
}

}  // namespace

FinAbGroup FinAbGroup::from_diagonal(const std::vector<Int>& diag, std::size_t extra_free) {
    FinAbGroup g;
    g.free_rank = extra_free;
    std::vector<Int> f;
    for (const auto& d : diag) {
        Int a = abs(d);
        if (sgn(a) == 0)
            ++g.free_rank;
        else if (a > 1)
            f.push_back(a);
    }
    g.invariant_factors = normalize_chain(std::move(f));
    return g;
}

Int FinAbGroup::order() const {
    Int n = 1;
    for (const auto& d : invariant_factors) n *= d;
    return n;
}

std::string FinAbGroup::str() const {
    if (is_trivial()) return "0";
    std::ostringstream os;
    bool first = true;
    if (free_rank == 1) {
        os << "Z";
        first = false;
    } else if (free_rank > 1) {
        os << "Z^" << free_rank;
        first = false;
    }
    for (const auto& d : invariant_factors) {
        if (!first) os << " x ";
        os << "Z/" << d.get_str();
        first = false;
    }
    return os.str();
}

FinAbGroup direct_sum(const FinAbGroup& a, const FinAbGroup& b) {
    std::vector<Int> f = a.invariant_factors;
    f.insert(f.end(), b.invariant_factors.begin(), b.invariant_factors.end());
    FinAbGroup out;
    out.invariant_factors = normalize_chain(std::move(f));
    out.free_rank = a.free_rank + b.free_rank;
    return out;
}

}  // namespace galcoh
