#pragma once

#include <algorithm>
#include <cstdint>
#include <sstream>
#include <string>
#include <vector>

#include "errors.hpp"
#include "lattice.hpp"
#include "preference.hpp"
#include "relation.hpp"

namespace sclat {

/// Finite set of reals, increasing. Element i is the i-th smallest value.
class RealChain {
public:
    explicit RealChain(std::vector<double> values) : v_(std::move(values)) {
        if (v_.empty()) throw EmptyInput("chain needs at least one alternative");
        for (std::size_t i = 1; i < v_.size(); ++i)
            if (!(v_[i - 1] < v_[i])) throw InputError("chain values must be strictly increasing");
        std::vector<std::string> names;
        for (double x : v_) {
            std::ostringstream os;
            os << x;
            names.push_back(os.str());
        }
        Relation r(make_labels(std::move(names)));
        for (Index a = 0; a < v_.size(); ++a)
            for (Index b = 0; b <= a; ++b) r.set(a, b);
        poset_ = Poset::trusted(std::move(r));
    }

    std::size_t size() const noexcept { return v_.size(); }
    double value(Index i) const { return v_[i]; }
    const std::vector<double>& values() const noexcept { return v_; }
    const Poset& poset() const noexcept { return poset_; }
    const Labels& labels() const noexcept { return poset_.labels(); }

private:
    std::vector<double> v_;
    Poset poset_;
};

/// Sorted chain indices; larger index = larger value.
using AltSet = std::vector<Index>;

inline AltSet argmax_set(const WeakOrder& pref, const RealChain&) {
    AltSet out;
    for (Index i = 0; i < pref.size(); ++i)
        if (pref.rank(i) == 0) out.push_back(i);
    return out;
}

inline AltSet consensus(const Profile& P, const RealChain& c) {
    AltSet out = argmax_set(P[0], c);
    for (std::size_t k = 1; k < P.size(); ++k) {
        AltSet next, m = argmax_set(P[k], c);
        std::set_intersection(out.begin(), out.end(), m.begin(), m.end(), std::back_inserter(next));
        out = std::move(next);
    }
    return out;
}

inline AltSet possibly_optimal(const Profile& P, const RealChain& c) {
    AltSet out;
    for (const auto& m : P) {
        AltSet next, a = argmax_set(m, c);
        std::set_union(out.begin(), out.end(), a.begin(), a.end(), std::back_inserter(next));
        out = std::move(next);
    }
    return out;
}

/// Strong set order A above B; vacuous when either is empty.
inline bool sso_dominates(const AltSet& A, const AltSet& B) {
    auto in = [](const AltSet& s, Index v) { return std::binary_search(s.begin(), s.end(), v); };
    for (Index a : A)
        for (Index b : B)
            if (!in(A, std::max(a, b)) || !in(B, std::min(a, b))) return false;
    return true;
}

/// Alternative set order A above B.
inline bool aso_dominates(const AltSet& A, const AltSet& B) {
    if (A.empty() || B.empty()) throw EmptyInput("alternative set order needs nonempty sets");
    for (Index a : A)
        for (Index b : B) {
            Index hi = std::max(a, b), lo = std::min(a, b);
            bool up = std::any_of(A.begin(), A.end(), [&](Index x) { return x >= hi; });
            bool down = std::any_of(B.begin(), B.end(), [&](Index x) { return x <= lo; });
            if (!up || !down) return false;
        }
    return true;
}

namespace detail {
inline bool contains_order(const std::vector<WeakOrder>& s, const WeakOrder& w) {
    return std::find(s.begin(), s.end(), w) != s.end();
}
}  // namespace detail

/// Ph above Pl: every pairwise join lies in Ph and every pairwise meet in Pl.
inline bool sso_on_preferences(const std::vector<WeakOrder>& Ph, const std::vector<WeakOrder>& Pl,
                               const RealChain& c) {
    for (const auto& h : Ph)
        for (const auto& l : Pl) {
            Profile pair{h, l};
            if (!detail::contains_order(Ph, join(pair, c.poset()))) return false;
            if (!detail::contains_order(Pl, meet(pair, c.poset()))) return false;
        }
    return true;
}

/// Ph above Pl in the alternative set order induced by S: some member of Ph
/// dominates each pairwise join and each pairwise meet dominates some member
/// of Pl.
inline bool aso_on_preferences(const std::vector<WeakOrder>& Ph, const std::vector<WeakOrder>& Pl,
                               const RealChain& c) {
    const Poset& p = c.poset();
    for (const auto& h : Ph)
        for (const auto& l : Pl) {
            Profile pair{h, l};
            WeakOrder j = join(pair, p), m = meet(pair, p);
            bool up = std::any_of(Ph.begin(), Ph.end(), [&](const WeakOrder& x) { return sc_dominates(x, j, p); });
            bool down =
                std::any_of(Pl.begin(), Pl.end(), [&](const WeakOrder& x) { return sc_dominates(m, x, p); });
            if (!up || !down) return false;
        }
    return true;
}

// ---------------------------------------------------------- set tables

/// Precomputed joins, meets and argmax sets for a small family of weak
/// orders on a chain; sets of orders are bitmasks over the family.
class OrderFamily {
public:
    using Mask = std::uint32_t;
    static constexpr std::size_t max_orders = 16;

    OrderFamily(const RealChain& c, std::vector<WeakOrder> orders) : chain_(c), orders_(std::move(orders)) {
        const std::size_t k = orders_.size();
        if (k == 0) throw EmptyInput("empty order family");
        if (k > max_orders) throw UniverseTooLarge("at most 16 distinct orders supported");
        if (c.size() > 31) throw UniverseTooLarge("order families need a chain of at most 31 alternatives");
        join_.assign(k * k, 0);
        meet_.assign(k * k, 0);
        dom_.assign(k, 0);
        top_.assign(k, 0);
        const Poset& p = c.poset();
        for (std::size_t h = 0; h < k; ++h) {
            for (Index i : argmax_set(orders_[h], c)) top_[h] |= 1u << i;
            for (std::size_t l = 0; l < k; ++l) {
                if (sc_dominates(orders_[h], orders_[l], p)) dom_[h] |= Mask(1) << l;
                Profile pair{orders_[h], orders_[l]};
                join_[h * k + l] = index_of_or_none(join(pair, p));
                meet_[h * k + l] = index_of_or_none(meet(pair, p));
            }
        }
        const Mask all = full();
        jt_.assign(k * (std::size_t(all) + 1), 0);
        mt_.assign(k * (std::size_t(all) + 1), 0);
        for (std::size_t h = 0; h < k; ++h)
            for (Mask b = 1; b <= all && b != 0; ++b) {
                int low = __builtin_ctz(b);
                Mask rest = b & (b - 1);
                jt_[h * (all + 1) + b] = jt_[h * (all + 1) + rest] | bit_or_outside(join_[h * k + low]);
                mt_[h * (all + 1) + b] = mt_[h * (all + 1) + rest] | bit_or_outside(meet_[h * k + low]);
                if (b == all) break;
            }
    }

    std::size_t size() const noexcept { return orders_.size(); }
    const std::vector<WeakOrder>& orders() const noexcept { return orders_; }
    const RealChain& chain() const noexcept { return chain_; }
    Mask full() const noexcept { return orders_.size() == 32 ? ~Mask(0) : (Mask(1) << orders_.size()) - 1; }

    /// Chain-index bitmask of the argmax of order h.
    std::uint32_t top(std::size_t h) const { return top_[h]; }

    std::uint32_t consensus(Mask s) const {
        std::uint32_t out = ~0u;
        for (Mask b = s; b; b &= b - 1) out &= top_[__builtin_ctz(b)];
        return out;
    }
    std::uint32_t possibly_optimal(Mask s) const {
        std::uint32_t out = 0;
        for (Mask b = s; b; b &= b - 1) out |= top_[__builtin_ctz(b)];
        return out;
    }

    /// A above B in the strong set order on preference sets.
    bool sso(Mask A, Mask B) const {
        const std::size_t stride = std::size_t(full()) + 1;
        for (Mask a = A; a; a &= a - 1) {
            std::size_t h = __builtin_ctz(a);
            if (jt_[h * stride + B] & ~A) return false;
            if (mt_[h * stride + B] & ~B) return false;
        }
        return true;
    }

    /// A above B in the alternative set order on preference sets.
    bool aso(Mask A, Mask B) const {
        const std::size_t stride = std::size_t(full()) + 1;
        Mask below_a = 0, above_b = 0;  // orders dominated by some member of A / dominating some member of B
        for (Mask a = A; a; a &= a - 1) below_a |= dom_[__builtin_ctz(a)];
        for (std::size_t j = 0; j < size(); ++j)
            if (dom_[j] & B) above_b |= Mask(1) << j;
        for (Mask a = A; a; a &= a - 1) {
            std::size_t h = __builtin_ctz(a);
            if (jt_[h * stride + B] & ~below_a) return false;
            if (mt_[h * stride + B] & ~above_b) return false;
        }
        return true;
    }

    std::vector<WeakOrder> members(Mask s) const {
        std::vector<WeakOrder> out;
        for (Mask b = s; b; b &= b - 1) out.push_back(orders_[__builtin_ctz(b)]);
        return out;
    }

    Mask mask_of(const std::vector<WeakOrder>& s) const {
        Mask m = 0;
        for (auto& w : s) {
            int i = index_of_or_none(w);
            if (i < 0) throw InputError("order outside the family");
            m |= Mask(1) << i;
        }
        return m;
    }

    int index_of_or_none(const WeakOrder& w) const {
        auto it = std::find(orders_.begin(), orders_.end(), w);
        return it == orders_.end() ? -1 : static_cast<int>(it - orders_.begin());
    }

private:
    // A join outside the family can never land in a member set.
    Mask bit_or_outside(int id) const { return id < 0 ? Mask(1) << 31 : Mask(1) << id; }

    RealChain chain_;
    std::vector<WeakOrder> orders_;
    std::vector<int> join_, meet_;
    std::vector<Mask> dom_;  // dom_[h] = orders that h dominates
    std::vector<std::uint32_t> top_;
    std::vector<Mask> jt_, mt_;  // union of join/meet bits of h with each member of B
};

// ------------------------------------------------------------------ psi

/// Monotone consensus selection over a finite universe of preference sets.
/// phi(P) = max C(P) where C(P) is nonempty; psi(P) = min phi over universe
/// sets that dominate P and have a consensus, else the top of the chain.
///
/// The set order is used reflexively: P counts as dominating itself even
/// when P is not closed under joins and meets. Without that, a set with a
/// consensus can be assigned an alternative outside it.
class ConsensusScf {
public:
    using Mask = OrderFamily::Mask;

    /// Universe of all nonempty sets of weak orders on the chain (|X| <= 3).
    explicit ConsensusScf(const RealChain& c) : fam_(c, all_orders(c)) {
        for (Mask m = 1; m <= fam_.full(); ++m) universe_.push_back(m);
        compute();
    }

    ConsensusScf(const RealChain& c, const std::vector<std::vector<WeakOrder>>& universe)
        : fam_(c, distinct_orders(universe)) {
        for (auto& s : universe) {
            if (s.empty()) throw EmptyInput("universe sets must be nonempty");
            universe_.push_back(fam_.mask_of(s));
        }
        std::sort(universe_.begin(), universe_.end());
        universe_.erase(std::unique(universe_.begin(), universe_.end()), universe_.end());
        compute();
    }

    const OrderFamily& family() const noexcept { return fam_; }
    const std::vector<Mask>& universe() const noexcept { return universe_; }

    /// Chain index chosen for a universe member.
    Index psi_index(Mask s) const {
        auto it = std::lower_bound(universe_.begin(), universe_.end(), s);
        if (it == universe_.end() || *it != s) throw InputError("set is not in the universe");
        return psi_[static_cast<std::size_t>(it - universe_.begin())];
    }

    double operator()(const std::vector<WeakOrder>& P) const {
        return fam_.chain().value(psi_index(fam_.mask_of(P)));
    }

private:
    static std::vector<WeakOrder> all_orders(const RealChain& c) {
        if (c.size() > 3) throw UniverseTooLarge("full universe needs |X| <= 3; pass an explicit universe");
        return enumerate_weak_orders(c.labels());
    }
    static std::vector<WeakOrder> distinct_orders(const std::vector<std::vector<WeakOrder>>& u) {
        std::vector<WeakOrder> out;
        for (auto& s : u)
            for (auto& w : s)
                if (!detail::contains_order(out, w)) out.push_back(w);
        return out;
    }

    void compute() {
        const Index top = fam_.chain().size() - 1;
        std::vector<int> phi(universe_.size(), -1);
        for (std::size_t i = 0; i < universe_.size(); ++i) {
            std::uint32_t c = fam_.consensus(universe_[i]);
            if (c) phi[i] = 31 - __builtin_clz(c);
        }
        psi_.assign(universe_.size(), top);
        for (std::size_t i = 0; i < universe_.size(); ++i) {
            int best = -1;
            for (std::size_t j = 0; j < universe_.size(); ++j) {
                if (phi[j] < 0 || (best >= 0 && phi[j] >= best)) continue;
                if (j == i || fam_.sso(universe_[j], universe_[i])) best = phi[j];
            }
            if (best >= 0) psi_[i] = static_cast<Index>(best);
        }
    }

    OrderFamily fam_;
    std::vector<Mask> universe_;
    std::vector<Index> psi_;
};

inline double monotone_scf_psi(const std::vector<WeakOrder>& P, const RealChain& c) {
    return ConsensusScf(c)(P);
}

}  // namespace sclat
