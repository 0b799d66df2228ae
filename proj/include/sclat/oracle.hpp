#pragma once

// Brute-force ground truth. Uses only the poset and weak-order types; no
// chain or lattice code.

#include <algorithm>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "errors.hpp"
#include "preference.hpp"
#include "relation.hpp"

namespace sclat::oracle {

constexpr std::size_t max_exhaustive_posets = 5;
constexpr std::size_t max_brute_elements = 6;

inline std::vector<std::string> default_names(std::size_t n) {
    static const char* base[] = {"a", "b", "c", "d", "e", "f", "g", "h", "i", "j"};
    std::vector<std::string> out;
    for (std::size_t i = 0; i < n; ++i) out.push_back(i < 10 ? base[i] : "e" + std::to_string(i));
    return out;
}

/// Every labelled partial order on n elements: each unordered pair is
/// below, above or incomparable; keep the transitive assignments.
template <class F>
void for_each_poset(const Labels& labels, F&& f) {
    const std::size_t n = labels->size();
    if (n == 0) throw InputError("need at least one element");
    if (n > max_exhaustive_posets) throw TooLarge("exhaustive poset enumeration limited to 5 elements");
    std::vector<std::pair<Index, Index>> pairs;
    for (Index a = 0; a < n; ++a)
        for (Index b = a + 1; b < n; ++b) pairs.emplace_back(a, b);
    std::vector<int> st(pairs.size(), 0);
    while (true) {
        Relation r(labels);
        for (Index i = 0; i < n; ++i) r.set(i, i);
        for (std::size_t k = 0; k < pairs.size(); ++k) {
            if (st[k] == 1) r.set(pairs[k].first, pairs[k].second);
            if (st[k] == 2) r.set(pairs[k].second, pairs[k].first);
        }
        bool trans = true;
        for (Index a = 0; a < n && trans; ++a)
            for (Index b = 0; b < n && trans; ++b) {
                if (!r(a, b)) continue;
                for (Index c = 0; c < n; ++c)
                    if (r(b, c) && !r(a, c)) {
                        trans = false;
                        break;
                    }
            }
        if (trans) f(Poset::trusted(r));
        std::size_t k = 0;
        for (; k < st.size(); ++k) {
            if (++st[k] < 3) break;
            st[k] = 0;
        }
        if (k == st.size()) return;
    }
}

inline std::vector<Poset> enumerate_posets(std::size_t n) {
    std::vector<Poset> out;
    for_each_poset(make_labels(default_names(n)), [&](const Poset& p) { out.push_back(p); });
    return out;
}

/// Random order: random DAG along a shuffled linear order, then closure.
inline Poset random_poset(std::size_t n, std::mt19937_64& rng, double edge_prob = 0.3) {
    std::vector<Index> perm(n);
    for (Index i = 0; i < n; ++i) perm[i] = i;
    std::shuffle(perm.begin(), perm.end(), rng);
    std::bernoulli_distribution coin(edge_prob);
    Relation r(make_labels(default_names(n)));
    for (Index i = 0; i < n; ++i) r.set(i, i);
    for (Index i = 0; i < n; ++i)
        for (Index j = i + 1; j < n; ++j)
            if (coin(rng)) r.set(perm[i], perm[j]);
    return Poset::trusted(transitive_closure(std::move(r)));
}

/// Def. 1 written out independently of preference.hpp's sc_dominates.
inline bool dominates_by_definition(const std::vector<int>& hi, const std::vector<int>& lo, const Poset& p) {
    for (Index x = 0; x < p.size(); ++x)
        for (Index y = 0; y < p.size(); ++y) {
            if (x == y || !p.geq(x, y)) continue;
            bool lo_weak = lo[x] <= lo[y], lo_strict = lo[x] < lo[y];
            bool hi_weak = hi[x] <= hi[y], hi_strict = hi[x] < hi[y];
            if ((lo_weak && !hi_weak) || (lo_strict && !hi_strict)) return false;
        }
    return true;
}

/// Minimal dynamic bitset over weak-order ids.
class Bits {
public:
    Bits() = default;
    explicit Bits(std::size_t n) : n_(n), w_((n + 63) / 64, 0) {}
    void set(std::size_t i) { w_[i / 64] |= std::uint64_t(1) << (i % 64); }
    bool test(std::size_t i) const { return (w_[i / 64] >> (i % 64)) & 1; }
    std::size_t size() const { return n_; }
    bool none() const {
        for (auto w : w_)
            if (w) return false;
        return true;
    }
    std::size_t count() const {
        std::size_t c = 0;
        for (auto w : w_) c += static_cast<std::size_t>(__builtin_popcountll(w));
        return c;
    }
    Bits& operator&=(const Bits& o) {
        for (std::size_t i = 0; i < w_.size(); ++i) w_[i] &= o.w_[i];
        return *this;
    }
    /// this is a subset of o.
    bool subset_of(const Bits& o) const {
        for (std::size_t i = 0; i < w_.size(); ++i)
            if (w_[i] & ~o.w_[i]) return false;
        return true;
    }
    template <class F>
    void each(F&& f) const {
        for (std::size_t k = 0; k < w_.size(); ++k)
            for (auto w = w_[k]; w; w &= w - 1) f(k * 64 + static_cast<std::size_t>(__builtin_ctzll(w)));
    }
    friend bool operator==(const Bits& a, const Bits& b) { return a.w_ == b.w_; }

private:
    std::size_t n_ = 0;
    std::vector<std::uint64_t> w_;
};

/// Ordered pairs (x,y), x != y, as bits x*n+y: where the order ranks x
/// weakly (strictly) over y.
struct PairMasks {
    std::uint64_t weak = 0, strict = 0;
};

inline PairMasks pair_masks(const std::vector<int>& r) {
    PairMasks m;
    const std::size_t n = r.size();
    for (Index x = 0; x < n; ++x)
        for (Index y = 0; y < n; ++y) {
            if (x == y) continue;
            if (r[x] <= r[y]) m.weak |= std::uint64_t(1) << (x * n + y);
            if (r[x] < r[y]) m.strict |= std::uint64_t(1) << (x * n + y);
        }
    return m;
}

/// Bits x*n+y for x > y in the poset.
inline std::uint64_t comparable_mask(const Poset& p) {
    std::uint64_t c = 0;
    for (Index x = 0; x < p.size(); ++x)
        for (Index y = 0; y < p.size(); ++y)
            if (p.gt(x, y)) c |= std::uint64_t(1) << (x * p.size() + y);
    return c;
}

/// Weak orders of size n with their pair masks, shared across posets.
struct OrderCatalogue {
    std::vector<std::vector<int>> orders;
    std::vector<PairMasks> masks;

    explicit OrderCatalogue(std::size_t n) {
        if (n > max_brute_elements) throw TooLarge("brute force limited to 6 elements");
        if (n == 0) return;
        for_each_weak_order(n, [&](const std::vector<int>& r) {
            orders.push_back(r);
            masks.push_back(pair_masks(r));
        });
    }

    static const OrderCatalogue& of(std::size_t n) {
        static const std::vector<OrderCatalogue> all = [] {
            std::vector<OrderCatalogue> v;
            for (std::size_t k = 0; k <= max_brute_elements; ++k) v.emplace_back(k);
            return v;
        }();
        if (n > max_brute_elements) throw TooLarge("brute force limited to 6 elements");
        return all[n];
    }
};

/// Dominance table for one poset over all weak orders of its size.
/// above[i] = {u : u S order i}, below[i] = {u : order i S u}.
/// Def. 1 on bit masks: lo's weak (strict) rankings of comparable pairs must
/// be among hi's.
struct BruteTable {
    Poset poset;
    const std::vector<std::vector<int>>& orders;
    std::vector<Bits> above, below;

    explicit BruteTable(const Poset& p) : poset(p), orders(OrderCatalogue::of(p.size()).orders) {
        const auto& masks = OrderCatalogue::of(p.size()).masks;
        const std::uint64_t c = comparable_mask(p);
        const std::size_t m = orders.size();
        above.assign(m, Bits(m));
        below.assign(m, Bits(m));
        for (std::size_t v = 0; v < m; ++v) {
            const std::uint64_t lw = masks[v].weak & c, ls = masks[v].strict & c;
            for (std::size_t u = 0; u < m; ++u)
                if (!(lw & ~masks[u].weak) && !(ls & ~masks[u].strict)) {
                    above[v].set(u);
                    below[u].set(v);
                }
        }
    }

    std::size_t count() const { return orders.size(); }

    std::size_t id_of(const std::vector<int>& ranks) const {
        auto it = std::lower_bound(orders.begin(), orders.end(), ranks);
        if (it == orders.end() || *it != ranks) throw InputError("not a canonical rank vector");
        return static_cast<std::size_t>(it - orders.begin());
    }

    Bits upper_bounds(const std::vector<std::size_t>& members) const {
        Bits ub(count());
        for (std::size_t i = 0; i < count(); ++i) ub.set(i);
        for (auto m : members) ub &= above[m];
        return ub;
    }
    Bits lower_bounds(const std::vector<std::size_t>& members) const {
        Bits lb(count());
        for (std::size_t i = 0; i < count(); ++i) lb.set(i);
        for (auto m : members) lb &= below[m];
        return lb;
    }
    /// Upper bounds dominated by every upper bound.
    Bits minimum_upper_bounds(const Bits& ub) const {
        Bits out(count());
        ub.each([&](std::size_t u) {
            if (ub.subset_of(above[u])) out.set(u);
        });
        return out;
    }
    Bits maximum_lower_bounds(const Bits& lb) const {
        Bits out(count());
        lb.each([&](std::size_t u) {
            if (lb.subset_of(below[u])) out.set(u);
        });
        return out;
    }
};

struct BruteBounds {
    std::vector<WeakOrder> upper, minimum_upper, lower, maximum_lower;
};

inline BruteBounds brute_bounds(const Profile& P, const Poset& p) {
    BruteTable t(p);
    std::vector<std::size_t> ids;
    for (const auto& m : P) ids.push_back(t.id_of(m.ranks()));
    Bits ub = t.upper_bounds(ids), lb = t.lower_bounds(ids);
    BruteBounds out;
    auto collect = [&](const Bits& b, std::vector<WeakOrder>& dst) {
        b.each([&](std::size_t i) { dst.emplace_back(p.labels(), t.orders[i]); });
    };
    collect(ub, out.upper);
    collect(t.minimum_upper_bounds(ub), out.minimum_upper);
    collect(lb, out.lower);
    collect(t.maximum_lower_bounds(lb), out.maximum_lower);
    return out;
}

// ------------------------------------------------ counterexample profiles

/// Elements outside `seq` are appended to the bottom of every order, in
/// index order.
inline WeakOrder order_with_tail(const Labels& labels, const Seq& seq) {
    std::vector<int> r(labels->size(), -1);
    int k = 0;
    for (Index i : seq) r[i] = k++;
    for (auto& v : r)
        if (v < 0) v = k++;
    return WeakOrder(labels, std::move(r));
}

/// For a K-crown (x1..xK): xK > x1 > ... > x(K-1) and x2 > ... > xK > x1.
inline Profile crown_profile(const Poset& p, const Seq& crown) {
    const std::size_t k = crown.size();
    Seq a{crown[k - 1]}, b;
    for (std::size_t i = 0; i + 1 < k; ++i) a.push_back(crown[i]);
    for (std::size_t i = 1; i < k; ++i) b.push_back(crown[i]);
    b.push_back(crown[0]);
    return Profile{order_with_tail(p.labels(), a), order_with_tail(p.labels(), b)};
}

/// For a diamond (a,b,c,d): b > d > c > a and d > c > a > b.
inline Profile diamond_profile(const Poset& p, const Seq& d) {
    return Profile{order_with_tail(p.labels(), {d[1], d[3], d[2], d[0]}),
                   order_with_tail(p.labels(), {d[3], d[2], d[0], d[1]})};
}

}  // namespace sclat::oracle
