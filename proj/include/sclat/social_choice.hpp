#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "chain.hpp"
#include "lattice.hpp"
#include "oracle.hpp"
#include "preference.hpp"
#include "relation.hpp"
#include "structure.hpp"

namespace sclat {

enum class Axiom { justified_objections, conditional_unanimity, no_minimum_upper_bound };

inline const char* to_string(Axiom a) {
    switch (a) {
    case Axiom::justified_objections: return "justified_objections";
    case Axiom::conditional_unanimity: return "conditional_unanimity";
    case Axiom::no_minimum_upper_bound: return "no_minimum_upper_bound";
    }
    return "?";
}

/// The social order should rank x over y (strictly if `strict`) but does not.
/// For no_minimum_upper_bound, `cycle` holds the core witness instead.
struct Violation {
    Axiom axiom;
    Index x = 0, y = 0;
    bool strict = false;
    Seq cycle;
};

// ----------------------------------------------------------------- axioms

/// For x >= y: some x >=_i y forces x >= y socially, some x >_i y forces x > y.
inline std::optional<Violation> justified_objection_violation(const WeakOrder& social, const Profile& pi,
                                                              const Poset& p) {
    for (Index x = 0; x < p.size(); ++x)
        for (Index y = 0; y < p.size(); ++y) {
            if (x == y || !p.geq(x, y)) continue;
            for (const auto& m : pi) {
                if (m.weak(x, y) && !social.weak(x, y)) return Violation{Axiom::justified_objections, x, y, false, {}};
                if (m.strict(x, y) && !social.strict(x, y))
                    return Violation{Axiom::justified_objections, x, y, true, {}};
            }
        }
    return std::nullopt;
}

/// Both routes: member-wise dominance and the chain characterisation.
inline bool respects_justified_objections(const WeakOrder& social, const Profile& pi, const Poset& p) {
    bool a = !justified_objection_violation(social, pi, p);
    bool b = is_upper_bound(social, pi, p);
    if (a != b) throw std::logic_error("justified objections disagree with the upper-bound test");
    return a;
}

inline std::optional<Violation> unanimity_violation(const WeakOrder& social, const Profile& pi, const Poset& p,
                                                    const ChainDigraph& g) {
    for (Index x = 0; x < p.size(); ++x)
        for (Index y = 0; y < p.size(); ++y) {
            if (x == y) continue;
            bool all_weak = true, all_strict = true;
            for (const auto& m : pi) {
                all_weak = all_weak && m.weak(x, y);
                all_strict = all_strict && m.strict(x, y);
            }
            bool chain_yx = p.geq(y, x) && g.reaches(y, x);
            bool schain_yx = p.geq(y, x) && g.reaches_strictly(y, x);
            if (all_weak && !schain_yx && !social.weak(x, y))
                return Violation{Axiom::conditional_unanimity, x, y, false, {}};
            if (all_strict && !chain_yx && !social.strict(x, y))
                return Violation{Axiom::conditional_unanimity, x, y, true, {}};
        }
    return std::nullopt;
}

inline bool conditionally_respects_unanimity(const WeakOrder& social, const Profile& pi, const Poset& p) {
    return !unanimity_violation(social, pi, p, ChainDigraph(pi, p));
}

inline std::optional<Violation> first_violation(const WeakOrder& social, const Profile& pi, const Poset& p) {
    if (auto v = justified_objection_violation(social, pi, p)) return v;
    return unanimity_violation(social, pi, p, ChainDigraph(pi, p));
}

inline bool is_acceptable(const WeakOrder& social, const Profile& pi, const Poset& p) {
    return respects_justified_objections(social, pi, p) && conditionally_respects_unanimity(social, pi, p);
}

// -------------------------------------------------------- per-profile search

constexpr std::size_t max_search_elements = 5;

/// Every acceptable order, found among the minimum upper bounds.
inline std::vector<WeakOrder> acceptable_orders(const Profile& pi, const Poset& p) {
    if (p.size() > max_search_elements) throw TooLarge("acceptability search limited to 5 elements");
    ChainDigraph g(pi, p);
    CoreRelation c = core_relation(g);
    std::vector<WeakOrder> out;
    if (!is_suzumura_consistent(c.rel)) return out;
    for_each_weak_order(p.size(), [&](const std::vector<int>& r) {
        WeakOrder w(p.labels(), r);
        if (matches_core(w, c, p) && !justified_objection_violation(w, pi, p) && !unanimity_violation(w, pi, p, g))
            out.push_back(std::move(w));
    });
    return out;
}

inline std::optional<WeakOrder> acceptable_exists_for_profile(const Profile& pi, const Poset& p) {
    auto all = acceptable_orders(pi, p);
    if (all.empty()) return std::nullopt;
    return all.front();
}

// ------------------------------------------------------ structural verdict

struct SwfVerdict {
    bool exists = false;
    ForkClass fork_class = ForkClass::neither;
    std::optional<std::pair<FourPoset, Seq>> forbidden;  // first forbidden four-element subposet
};

/// Fork classification, cross-checked against the forbidden four-element
/// subposets.
inline SwfVerdict exists_acceptable_swf(const Poset& p) {
    SwfVerdict v;
    v.fork_class = classify_fork(p);
    v.forbidden = find_forbidden_four_poset(p);
    v.exists = v.fork_class != ForkClass::neither;
    if (v.exists == v.forbidden.has_value())
        throw std::logic_error("fork classification disagrees with the forbidden-subposet criterion");
    return v;
}

// ------------------------------------------------------------ construction

enum class ConstructionRoute { shattered, fork_blocks, fork_search };

namespace detail {

inline Relation pareto_relation(const Profile& pi, const Poset& p, bool unranked_only) {
    Relation r(p.labels());
    for (Index x = 0; x < p.size(); ++x)
        for (Index y = 0; y < p.size(); ++y) {
            if (unranked_only && x != y && p.comparable(x, y)) continue;
            bool all = true;
            for (const auto& m : pi) all = all && m.weak(x, y);
            if (all) r.set(x, y);
        }
    return r;
}

inline std::optional<WeakOrder> checked(WeakOrder w, const Profile& pi, const Poset& p) {
    if (is_minimum_upper_bound(w, pi, p) && is_acceptable(w, pi, p)) return w;
    return std::nullopt;
}

/// Core relation plus the given order on each block, extended.
inline std::optional<WeakOrder> with_blocks(const CoreRelation& c, const std::vector<std::vector<Index>>& blocks,
                                            const std::vector<WeakOrder>& block_orders) {
    Relation r = c.rel;
    for (std::size_t k = 0; k < blocks.size(); ++k)
        for (std::size_t i = 0; i < blocks[k].size(); ++i)
            for (std::size_t j = 0; j < blocks[k].size(); ++j)
                if (block_orders[k].weak(i, j)) r.set(blocks[k][i], blocks[k][j]);
    if (!is_suzumura_consistent(r)) return std::nullopt;
    return suzumura_extend(r);
}

}  // namespace detail

/// An acceptable social order for pi. Shattered forks: core relation on
/// comparable pairs, unanimity on unranked pairs, transitive closure, then
/// extension. Forks: blocks of the fork head with equal standing against the
/// chain get a Pareto-respecting order, then a minimum upper bound agreeing
/// with those blocks; block orders are searched if the first choice fails.
inline WeakOrder construct_acceptable(const Profile& pi, const Poset& p, ConstructionRoute* route = nullptr) {
    ForkShape shape = fork_shape(p);
    if (shape.cls == ForkClass::neither) throw NotAForkPoset("constraint poset is neither a fork nor a shattered fork");
    ChainDigraph g(pi, p);
    CoreRelation c = core_relation(g);

    if (shape.cls == ForkClass::shattered_up_fork || shape.cls == ForkClass::shattered_down_fork) {
        Relation r = c.rel;
        Relation u = detail::pareto_relation(pi, p, true);
        for (Index x = 0; x < p.size(); ++x)
            for (Index y = 0; y < p.size(); ++y)
                if (u(x, y)) r.set(x, y);
        if (auto w = detail::checked(suzumura_extend(transitive_closure(r)), pi, p)) {
            if (route) *route = ConstructionRoute::shattered;
            return *w;
        }
        throw InternalSearchExhausted("shattered-fork construction failed");
    }

    WeakOrder mub = suzumura_extend(c.rel);
    std::vector<Index> chain{shape.apex};
    chain.insert(chain.end(), shape.rest.begin(), shape.rest.end());
    std::vector<std::vector<Index>> blocks;
    std::vector<std::vector<bool>> sigs;
    for (Index h : shape.head) {
        std::vector<bool> sig;
        for (Index z : chain) {
            sig.push_back(mub.weak(h, z));
            sig.push_back(mub.strict(h, z));
        }
        std::size_t k = 0;
        while (k < sigs.size() && sigs[k] != sig) ++k;
        if (k == sigs.size()) {
            sigs.push_back(sig);
            blocks.emplace_back();
        }
        blocks[k].push_back(h);
    }

    Relation pareto = detail::pareto_relation(pi, p, false);
    std::vector<WeakOrder> first;
    for (auto& b : blocks) {
        std::vector<std::string> names;
        for (Index i : b) names.push_back(p.name(i));
        Relation local(make_labels(names));
        for (std::size_t i = 0; i < b.size(); ++i)
            for (std::size_t j = 0; j < b.size(); ++j)
                if (pareto(b[i], b[j])) local.set(i, j);
        first.push_back(suzumura_extend(local));
    }
    if (auto w = detail::with_blocks(c, blocks, first))
        if (auto ok = detail::checked(*w, pi, p)) {
            if (route) *route = ConstructionRoute::fork_blocks;
            return *ok;
        }

    // Every combination of block orders.
    std::vector<std::vector<WeakOrder>> options;
    for (std::size_t k = 0; k < blocks.size(); ++k) {
        if (blocks[k].size() > max_enumerated_elements) throw TooLarge("fork head block too large to search");
        options.emplace_back();
        for_each_weak_order(blocks[k].size(), [&](const std::vector<int>& r) {
            options.back().emplace_back(first[k].labels(), r);
        });
    }
    std::vector<std::size_t> pick(blocks.size(), 0);
    while (true) {
        std::vector<WeakOrder> orders;
        for (std::size_t k = 0; k < blocks.size(); ++k) orders.push_back(options[k][pick[k]]);
        if (auto w = detail::with_blocks(c, blocks, orders))
            if (auto ok = detail::checked(*w, pi, p)) {
                if (route) *route = ConstructionRoute::fork_search;
                return *ok;
            }
        std::size_t k = 0;
        for (; k < pick.size(); ++k) {
            if (++pick[k] < options[k].size()) break;
            pick[k] = 0;
        }
        if (k == pick.size()) break;
    }
    throw InternalSearchExhausted("no acceptable minimum upper bound among fork-head block orders");
}

// ------------------------------------------------------------------ report

struct ProfileResult {
    std::size_t id = 0;
    std::vector<WeakOrder> acceptable;
    std::optional<Violation> violation;  // set when nothing is acceptable
};

struct AcceptabilityReport {
    ForkClass constraint_class = ForkClass::neither;
    std::vector<ProfileResult> results;
};

/// Exhaustive search up to 5 elements, construction beyond.
inline ProfileResult check_profile(const Profile& pi, const Poset& p, std::size_t id = 0) {
    ProfileResult r;
    r.id = id;
    if (p.size() <= max_search_elements) {
        r.acceptable = acceptable_orders(pi, p);
    } else if (classify_fork(p) != ForkClass::neither) {
        r.acceptable.push_back(construct_acceptable(pi, p));
    }
    if (!r.acceptable.empty()) return r;
    Seq w;
    if (auto j = try_join(pi, p, &w))
        r.violation = first_violation(*j, pi, p);
    else
        r.violation = Violation{Axiom::no_minimum_upper_bound, 0, 0, false, w};
    return r;
}

inline AcceptabilityReport acceptability_report(const Poset& p, const std::vector<Profile>& profiles) {
    AcceptabilityReport rep;
    rep.constraint_class = classify_fork(p);
    for (std::size_t i = 0; i < profiles.size(); ++i) rep.results.push_back(check_profile(profiles[i], p, i));
    return rep;
}

// ------------------------------------------------- counterexample profiles

/// Two-member profile with no acceptable aggregate on the given forbidden
/// subposet (a,b,c,d). Elements outside it go to the bottom.
inline Profile four_poset_profile(const Poset& p, FourPoset kind, const Seq& t) {
    auto two = [&](Seq a, Seq b) {
        return Profile{oracle::order_with_tail(p.labels(), a), oracle::order_with_tail(p.labels(), b)};
    };
    const Index a = t[0], b = t[1], c = t[2], d = t[3];
    switch (kind) {
    case FourPoset::crown4: return oracle::crown_profile(p, t);
    case FourPoset::diamond: return oracle::diamond_profile(p, t);
    case FourPoset::ball_and_chain: return two({c, d, a, b}, {b, c, d, a});
    case FourPoset::dumbbells: return two({d, a, b, c}, {b, c, d, a});
    case FourPoset::saw: return two({d, a, b, c}, {b, c, d, a});
    case FourPoset::hook:
        if (p.gt(b, a)) return two({a, d, c, b}, {b, a, d, c});
        return two({b, c, d, a}, {c, d, a, b});  // dual orientation: both orders reversed
    }
    throw std::logic_error("unknown four-element subposet");
}

}  // namespace sclat
