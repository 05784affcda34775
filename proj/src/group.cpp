#include "galcoh/group.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

namespace galcoh {

FiniteGroup FiniteGroup::trivial() { return cyclic(1); }

FiniteGroup FiniteGroup::cyclic(std::size_t n) {
    if (n == 0) throw InputError("cyclic group: order must be positive");
    FiniteGroup g;
    g.size_ = n;
    g.mul_.resize(n * n);
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b) g.mul_[a * n + b] = static_cast<int>((a + b) % n);
    g.identity_ = 0;
    g.inv_.resize(n);
    for (std::size_t a = 0; a < n; ++a) g.inv_[a] = static_cast<int>((n - a) % n);
    g.generators_ = n > 1 ? std::vector<int>{1} : std::vector<int>{};
    return g;
}

FiniteGroup FiniteGroup::from_table(const std::vector<std::vector<int>>& mul,
                                    const Limits& limits) {
    std::size_t n = mul.size();
    if (n == 0) throw InputError("group table: empty");
    if (n > limits.group_size) throw BudgetError("group table: size exceeds cap");
    FiniteGroup g;
    g.size_ = n;
    g.mul_.resize(n * n);
    for (std::size_t a = 0; a < n; ++a) {
        if (mul[a].size() != n) throw InputError("group table: not square");
        for (std::size_t b = 0; b < n; ++b) {
            int v = mul[a][b];
            if (v < 0 || static_cast<std::size_t>(v) >= n)
                throw InputError("group table: entry out of range");
            g.mul_[a * n + b] = v;
        }
    }
    // Every element is a generator candidate; actions over table groups are
    // supplied element-indexed.
    g.generators_.resize(n);
    std::iota(g.generators_.begin(), g.generators_.end(), 0);
    g.finish_validation();
    return g;
}

FiniteGroup FiniteGroup::from_permutations(std::size_t degree,
                                           const std::vector<std::vector<int>>& gens,
                                           const Limits& limits) {
    for (const auto& p : gens) {
        if (p.size() != degree) throw InputError("permutation generator: wrong degree");
        std::vector<bool> seen(degree, false);
        for (int v : p) {
            if (v < 0 || static_cast<std::size_t>(v) >= degree || seen[v])
                throw InputError("permutation generator: not a permutation");
            seen[v] = true;
        }
    }
    std::vector<int> id(degree);
    std::iota(id.begin(), id.end(), 0);
    auto compose = [degree](const std::vector<int>& p, const std::vector<int>& q) {
        std::vector<int> r(degree);
        for (std::size_t i = 0; i < degree; ++i) r[i] = p[q[i]];
        return r;
    };
    std::map<std::vector<int>, int> index;
    std::vector<std::vector<int>> elems{id};
    index[id] = 0;
    for (std::size_t head = 0; head < elems.size(); ++head) {
        for (const auto& p : gens) {
            auto next = compose(p, elems[head]);
            if (!index.contains(next)) {
                if (elems.size() >= limits.group_size)
                    throw BudgetError("permutation closure: size exceeds cap");
                index[next] = static_cast<int>(elems.size());
                elems.push_back(next);
            }
        }
    }
    std::size_t n = elems.size();
    FiniteGroup g;
    g.size_ = n;
    g.mul_.resize(n * n);
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b)
            g.mul_[a * n + b] = index.at(compose(elems[a], elems[b]));
    for (const auto& p : gens) g.generators_.push_back(index.at(p));
    g.finish_validation();
    return g;
}

FiniteGroup FiniteGroup::symmetric(std::size_t n, const Limits& limits) {
    if (n == 0) return trivial();
    std::vector<std::vector<int>> gens;
    for (std::size_t i = 0; i + 1 < n; ++i) {
        std::vector<int> p(n);
        std::iota(p.begin(), p.end(), 0);
        std::swap(p[i], p[i + 1]);
        gens.push_back(p);
    }
    return from_permutations(n, gens, limits);
}

void FiniteGroup::finish_validation() {
    std::size_t n = size_;
    // Identity.
    identity_ = -1;
    for (std::size_t e = 0; e < n; ++e) {
        bool ok = true;
        for (std::size_t a = 0; a < n; ++a)
            if (mul(static_cast<int>(e), static_cast<int>(a)) != static_cast<int>(a) ||
                mul(static_cast<int>(a), static_cast<int>(e)) != static_cast<int>(a)) {
                ok = false;
                break;
            }
        if (ok) {
            identity_ = static_cast<int>(e);
            break;
        }
    }
    if (identity_ < 0) throw InputError("group table: no identity element");
    // Inverses.
    inv_.assign(n, -1);
    for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t b = 0; b < n; ++b)
            if (mul(static_cast<int>(a), static_cast<int>(b)) == identity_ &&
                mul(static_cast<int>(b), static_cast<int>(a)) == identity_) {
                inv_[a] = static_cast<int>(b);
                break;
            }
        if (inv_[a] < 0) throw InputError("group table: element without inverse");
    }
    // Associativity.
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b)
            for (std::size_t c = 0; c < n; ++c)
                if (mul(mul(static_cast<int>(a), static_cast<int>(b)), static_cast<int>(c)) !=
                    mul(static_cast<int>(a), mul(static_cast<int>(b), static_cast<int>(c))))
                    throw InputError("group table: multiplication not associative");
    if (generators_.empty() && n > 1) {
        generators_.resize(n);
        std::iota(generators_.begin(), generators_.end(), 0);
    }
}

int FiniteGroup::order_of(int a) const {
    int x = a, k = 1;
    while (x != identity_) {
        x = mul(x, a);
        ++k;
    }
    return k;
}

int FiniteGroup::cyclic_generator() const {
    for (std::size_t a = 0; a < size_; ++a)
        if (order_of(static_cast<int>(a)) == static_cast<int>(size_)) return static_cast<int>(a);
    return -1;
}

bool FiniteGroup::same_table(const FiniteGroup& o) const {
    return size_ == o.size_ && mul_ == o.mul_;
}

std::vector<std::vector<int>> FiniteGroup::subgroups() const {
    auto closure = [this](std::vector<int> seed) {
        std::set<int> s(seed.begin(), seed.end());
        s.insert(identity_);
        bool grew = true;
        while (grew) {
            grew = false;
            std::vector<int> cur(s.begin(), s.end());
            for (int a : cur)
                for (int b : cur) {
                    if (s.insert(mul(a, b)).second) grew = true;
                    if (s.insert(inverse(a)).second) grew = true;
                }
        }
        return std::vector<int>(s.begin(), s.end());
    };
    std::set<std::vector<int>> found;
    std::vector<std::vector<int>> queue{closure({})};
    found.insert(queue[0]);
    for (std::size_t head = 0; head < queue.size(); ++head) {
        auto base = queue[head];
        for (std::size_t x = 0; x < size_; ++x) {
            if (std::binary_search(base.begin(), base.end(), static_cast<int>(x))) continue;
            auto bigger = base;
            bigger.push_back(static_cast<int>(x));
            auto sub = closure(bigger);
            if (found.insert(sub).second) queue.push_back(sub);
        }
    }
    std::vector<std::vector<int>> out(found.begin(), found.end());
    std::sort(out.begin(), out.end(),
              [](const auto& a, const auto& b) { return a.size() < b.size(); });
    return out;
}

}  // namespace galcoh
