#pragma once

// Exhaustive and seeded sweeps backing `sclat verify` and the acceptance run.

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "ambiguity.hpp"
#include "compstat.hpp"
#include "io.hpp"
#include "lattice.hpp"
#include "oracle.hpp"
#include "parallel.hpp"
#include "social_choice.hpp"
#include "structure.hpp"

namespace sclat {

constexpr std::uint64_t default_seed = 20240611;

struct SweepOptions {
    unsigned jobs = 1;
    std::uint64_t seed = default_seed;
    bool deep = false;
};

struct CheckResult {
    std::string id;
    std::uint64_t passed = 0, failed = 0;
    std::optional<json> counterexample;  // first failure, in instance order
};

struct InstanceSweep {
    std::string theorem;
    std::size_t n = 0, k = 0;
    std::string poset_source, profile_source;
    std::optional<std::uint64_t> seed;
    std::uint64_t instances = 0;
    std::vector<CheckResult> checks;

    bool ok() const {
        for (auto& c : checks)
            if (c.failed) return false;
        return true;
    }
    std::uint64_t failed() const {
        std::uint64_t f = 0;
        for (auto& c : checks) f += c.failed;
        return f;
    }
};

inline json sweep_to_json(const InstanceSweep& s) {
    json checks = json::array();
    for (auto& c : s.checks) {
        json j{{"id", c.id}, {"passed", c.passed}, {"failed", c.failed}};
        j["counterexample"] = c.counterexample ? *c.counterexample : json(nullptr);
        checks.push_back(j);
    }
    json j{{"theorem", s.theorem}, {"n", s.n}, {"k", s.k}, {"posets", s.poset_source}, {"profiles", s.profile_source}};
    j["seed"] = s.seed ? json(*s.seed) : json(nullptr);
    j["instances"] = s.instances;
    j["checks"] = checks;
    j["status"] = s.ok() ? "pass" : "fail";
    return j;
}

namespace detail {

/// Per-task tallies, merged in task order so output is independent of jobs.
class Tally {
public:
    explicit Tally(std::vector<std::string> ids) {
        for (auto& id : ids) checks_.push_back({id, 0, 0, std::nullopt});
    }
    void record(std::size_t check, bool ok, const std::function<json()>& witness = {}) {
        auto& c = checks_[check];
        if (ok) {
            ++c.passed;
        } else {
            ++c.failed;
            if (!c.counterexample) c.counterexample = witness ? witness() : json(nullptr);
        }
    }
    void count_instance(std::uint64_t k = 1) { instances_ += k; }
    void merge(const Tally& o) {
        instances_ += o.instances_;
        for (std::size_t i = 0; i < checks_.size(); ++i) {
            checks_[i].passed += o.checks_[i].passed;
            checks_[i].failed += o.checks_[i].failed;
            if (!checks_[i].counterexample && o.checks_[i].counterexample)
                checks_[i].counterexample = o.checks_[i].counterexample;
        }
    }
    void fill(InstanceSweep& s) const {
        s.instances = instances_;
        s.checks = checks_;
    }

private:
    std::vector<CheckResult> checks_;
    std::uint64_t instances_ = 0;
};

inline std::vector<Poset> posets_up_to(std::size_t n) {
    std::vector<Poset> out;
    for (std::size_t k = 1; k <= n; ++k)
        for (auto& p : oracle::enumerate_posets(k)) out.push_back(p);
    return out;
}

template <class F>
Tally run_tasks(std::size_t count, const std::vector<std::string>& ids, unsigned jobs, F&& task) {
    std::vector<Tally> parts(count, Tally(ids));
    parallel_for(count, jobs, [&](std::size_t i) { task(i, parts[i]); });
    Tally all(ids);
    for (auto& t : parts) all.merge(t);
    return all;
}

inline json profile_witness(const Poset& p, const Profile& P) {
    json j = poset_to_json(p);
    j["profile"] = profile_to_json(P)["profile"];
    return j;
}

inline json names_of(const Poset& p, const oracle::Bits& b, const oracle::BruteTable& t) {
    json a = json::array();
    b.each([&](std::size_t i) { a.push_back(format_ranking(WeakOrder(p.labels(), t.orders[i]))); });
    return a;
}

}  // namespace detail

// ------------------------------------------------------- characterisation

/// Chain-based upper bounds and minimum upper bounds against the
/// definitional brute force, for every poset of size n and every k-member
/// profile (k <= 2).
inline InstanceSweep verify_characterisation(std::size_t n, std::size_t k, const SweepOptions& opt = {}) {
    if (k < 1 || k > 2) throw InputError("profile size k must be 1 or 2");
    if (n > 4 && !opt.deep) throw TooLarge("characterisation sweep beyond 4 elements needs --deep");
    InstanceSweep s{"characterisation", n, k, "all labeled posets", "all " + std::to_string(k) + "-member profiles",
                    std::nullopt, 0, {}};
    const std::vector<std::string> ids{"upper_bounds", "minimum_upper_bounds", "canonical_join"};
    auto posets = oracle::enumerate_posets(n);
    auto tally = detail::run_tasks(posets.size(), ids, opt.jobs, [&](std::size_t pi, detail::Tally& t) {
        const Poset& p = posets[pi];
        oracle::BruteTable bt(p);
        const std::size_t m = bt.count();
        std::vector<WeakOrder> all;
        for (auto& r : bt.orders) all.emplace_back(p.labels(), r);
        for (std::size_t a = 0; a < m; ++a)
            for (std::size_t b = (k == 1 ? a : 0); b < (k == 1 ? a + 1 : m); ++b) {
                Profile P = k == 1 ? Profile{all[a]} : Profile{all[a], all[b]};
                oracle::Bits ub = bt.above[a];
                ub &= bt.above[b];
                oracle::Bits mub = bt.minimum_upper_bounds(ub);
                ChainDigraph g(P, p);
                CoreRelation c = core_relation(g);
                bool ub_ok = true, mub_ok = true;
                for (std::size_t u = 0; u < m; ++u) {
                    ub_ok = ub_ok && is_upper_bound_by_chains(all[u], g) == ub.test(u);
                    mub_ok = mub_ok && matches_core(all[u], c, p) == mub.test(u);
                }
                auto wit = [&] {
                    json j = detail::profile_witness(p, P);
                    j["brute_minimum_upper_bounds"] = detail::names_of(p, mub, bt);
                    return j;
                };
                t.count_instance();
                t.record(0, ub_ok, wit);
                t.record(1, mub_ok, wit);
                Seq w;
                auto j = try_join(P, p, &w);
                bool join_ok = j ? mub.test(bt.id_of(j->ranks())) : mub.none();
                t.record(2, join_ok, wit);
            }
    });
    tally.fill(s);
    return s;
}

// ------------------------------------------------- existence / uniqueness

/// Join existence for every pair iff crown- and diamond-free; a unique
/// minimum upper bound for every profile iff complete; the same for meets.
/// Profiles: all singletons and pairs for n <= 4; for n = 5 all singletons,
/// seeded random pairs and the crown/diamond counterexample pairs, unless
/// deep.
inline InstanceSweep verify_existence_uniqueness(std::size_t n, const SweepOptions& opt = {},
                                                 std::size_t samples_per_poset = 200) {
    const bool sampled = n >= 5 && !opt.deep;
    InstanceSweep s{"existence_uniqueness", n, 2, "all labeled posets",
                    sampled ? "all singletons, seeded random pairs, counterexample pairs"
                            : "all singletons and pairs",
                    sampled ? std::optional<std::uint64_t>(opt.seed) : std::nullopt, 0, {}};
    const std::vector<std::string> ids{"join_matches_brute",   "meet_matches_brute",   "join_existence",
                                       "meet_existence",       "join_uniqueness",      "meet_uniqueness",
                                       "counterexample_profiles"};
    auto posets = oracle::enumerate_posets(n);
    auto tally = detail::run_tasks(posets.size(), ids, opt.jobs, [&](std::size_t pi, detail::Tally& t) {
        const Poset& p = posets[pi];
        oracle::BruteTable bt(p);
        const std::size_t m = bt.count();
        std::vector<WeakOrder> all;
        for (auto& r : bt.orders) all.emplace_back(p.labels(), r);
        const bool free = is_crown_and_diamond_free(p), complete = is_complete(p);
        bool all_join = true, all_meet = true, uniq_join = true, uniq_meet = true;

        auto visit = [&](const Profile& P, std::size_t a, std::size_t b) {
            t.count_instance();
            oracle::Bits ub = bt.above[a], lb = bt.below[a];
            ub &= bt.above[b];
            lb &= bt.below[b];
            oracle::Bits mub = bt.minimum_upper_bounds(ub), mlb = bt.maximum_lower_bounds(lb);
            auto j = try_join(P, p), mt = try_meet(P, p);
            t.record(0, j ? mub.test(bt.id_of(j->ranks())) : mub.none(), [&] { return detail::profile_witness(p, P); });
            t.record(1, mt ? mlb.test(bt.id_of(mt->ranks())) : mlb.none(), [&] { return detail::profile_witness(p, P); });
            all_join = all_join && !mub.none();
            all_meet = all_meet && !mlb.none();
            uniq_join = uniq_join && mub.count() <= 1;
            uniq_meet = uniq_meet && mlb.count() <= 1;
            return mub.none();
        };
        for (std::size_t a = 0; a < m; ++a) visit(Profile{all[a]}, a, a);
        if (!sampled) {
            for (std::size_t a = 0; a < m; ++a)
                for (std::size_t b = 0; b < m; ++b) visit(Profile{all[a], all[b]}, a, b);
        } else {
            std::mt19937_64 rng(opt.seed ^ (0x9e3779b97f4a7c15ull * (pi + 1)));
            std::uniform_int_distribution<std::size_t> pick(0, m - 1);
            for (std::size_t i = 0; i < samples_per_poset; ++i) {
                std::size_t a = pick(rng), b = pick(rng);
                visit(Profile{all[a], all[b]}, a, b);
            }
        }
        // Crown or diamond counterexamples, for joins and (through the dual) meets.
        auto cex_for = [&](const Poset& q) -> std::optional<Profile> {
            if (auto c = find_crown(q)) return oracle::crown_profile(q, *c);
            if (auto d = find_diamond(q)) return oracle::diamond_profile(q, *d);
            return std::nullopt;
        };
        if (auto cex = cex_for(p)) {
            visit(*cex, bt.id_of((*cex)[0].ranks()), bt.id_of((*cex)[1].ranks()));
            t.record(6, !try_join(*cex, p), [&] { return detail::profile_witness(p, *cex); });
        }
        if (auto cex = cex_for(dual(p))) {
            visit(*cex, bt.id_of((*cex)[0].ranks()), bt.id_of((*cex)[1].ranks()));
            t.record(6, !try_meet(*cex, p), [&] { return detail::profile_witness(p, *cex); });
        }
        auto wit = [&] { return poset_to_json(p); };
        t.record(2, all_join == free, wit);
        t.record(3, all_meet == free, wit);
        t.record(4, (all_join && uniq_join) == complete, wit);
        t.record(5, (all_meet && uniq_meet) == complete, wit);
    });
    tally.fill(s);
    return s;
}

// --------------------------------------------------- cycles and chalices

/// Structural equivalences on every poset up to n elements plus seeded
/// random posets of sizes 6 and 7.
inline InstanceSweep verify_cycles_chalices(std::size_t n, const SweepOptions& opt = {}, std::size_t random_count = 500) {
    if (n > oracle::max_exhaustive_posets) throw TooLarge("exhaustive poset enumeration limited to 5 elements");
    InstanceSweep s{"cycles_chalices", n, 0,
                    "all labeled posets up to n, plus " + std::to_string(random_count) + " random posets of sizes 6 and 7",
                    "none", opt.seed, 0, {}};
    const std::vector<std::string> ids{"crown_diamond_iff_cycle_chalice", "proper_crowns_iff_weak_cycle",
                                       "fork_iff_no_forbidden_subposet", "witnesses_revalidate"};
    std::vector<Poset> posets = detail::posets_up_to(n);
    std::mt19937_64 rng(opt.seed);
    for (std::size_t size : {6, 7})
        for (std::size_t i = 0; i < random_count; ++i) {
            std::uniform_real_distribution<double> dens(0.1, 0.6);
            posets.push_back(oracle::random_poset(size, rng, dens(rng)));
        }
    auto tally = detail::run_tasks(posets.size(), ids, opt.jobs, [&](std::size_t pi, detail::Tally& t) {
        const Poset& p = posets[pi];
        t.count_instance();
        auto wit = [&] { return poset_to_json(p); };
        Relation red = transitive_reduction(p);
        auto crown = find_crown(p), diamond = find_diamond(p);
        auto cyc = find_weak_cycle(red);
        auto chal = find_chalice_in(red);
        t.record(0, (!crown && !diamond) == (!cyc && !chal), wit);
        auto big_crown = find_crown(p, 6);
        auto proper = find_proper_four_crown(p);
        t.record(1, (!diamond && !big_crown && !proper) == !cyc, wit);
        auto forb = find_forbidden_four_poset(p);
        t.record(2, (classify_fork(p) != ForkClass::neither) == (!forb && !big_crown), wit);
        bool valid = (!crown || is_crown(p, *crown)) && (!diamond || is_diamond(p, *diamond)) &&
                     (!cyc || is_weak_cycle(red, *cyc)) && (!chal || is_chalice(red, *chal)) &&
                     (!forb || is_four_poset(p, forb->first, forb->second)) &&
                     (!big_crown || is_crown(p, *big_crown)) && (!proper || is_crown(p, *proper));
        t.record(3, valid, wit);
    });
    tally.fill(s);
    return s;
}

// --------------------------------------------------------------------- swf

/// Minimal poset on four elements realising a forbidden kind, witness
/// (a,b,c,d) in index order.
inline Poset canonical_four_poset(FourPoset kind) {
    std::vector<std::string> names{"a", "b", "c", "d"};
    std::vector<std::pair<std::string, std::string>> cov;
    switch (kind) {
    case FourPoset::ball_and_chain: cov = {{"a", "b"}, {"b", "c"}}; break;
    case FourPoset::hook: cov = {{"b", "a"}, {"c", "b"}, {"c", "d"}}; break;
    case FourPoset::dumbbells: cov = {{"a", "b"}, {"c", "d"}}; break;
    case FourPoset::saw: cov = {{"a", "b"}, {"c", "b"}, {"c", "d"}}; break;
    case FourPoset::crown4: cov = {{"a", "b"}, {"c", "b"}, {"c", "d"}, {"a", "d"}}; break;
    case FourPoset::diamond: cov = {{"a", "b"}, {"a", "c"}, {"b", "d"}, {"c", "d"}}; break;
    }
    return poset_from_covers(names, cov);
}

/// Per-profile acceptability against the fork classification and the
/// forbidden-subposet criterion, for all posets up to n elements and all
/// two-member profiles.
inline InstanceSweep verify_swf(std::size_t n, const SweepOptions& opt = {}) {
    if (n > 4 && !opt.deep) throw TooLarge("swf sweep beyond 4 elements needs --deep");
    if (n > oracle::max_exhaustive_posets) throw TooLarge("exhaustive poset enumeration limited to 5 elements");
    InstanceSweep s{"swf", n, 2, "all labeled posets up to n", "all two-member profiles", std::nullopt, 0, {}};
    const std::vector<std::string> ids{"existence_iff_fork", "fork_iff_no_forbidden_subposet", "only_joins_acceptable",
                                       "construction_acceptable", "counterexample_profiles"};
    std::vector<Poset> posets = detail::posets_up_to(n);
    auto tally = detail::run_tasks(posets.size(), ids, opt.jobs, [&](std::size_t pi, detail::Tally& t) {
        const Poset& p = posets[pi];
        oracle::BruteTable bt(p);
        std::vector<WeakOrder> all;
        for (auto& r : bt.orders) all.emplace_back(p.labels(), r);
        const ForkClass cls = classify_fork(p);
        const auto forb = find_forbidden_four_poset(p);
        const bool fork = cls != ForkClass::neither;
        bool every = true;
        std::optional<Profile> missing;
        for (std::size_t a = 0; a < all.size(); ++a)
            for (std::size_t b = 0; b < all.size(); ++b) {
                Profile P{all[a], all[b]};
                t.count_instance();
                auto acc = acceptable_orders(P, p);
                if (acc.empty() && !missing) missing = P;
                every = every && !acc.empty();
                oracle::Bits ub = bt.above[a];
                ub &= bt.above[b];
                oracle::Bits mub = bt.minimum_upper_bounds(ub);
                bool only = true;
                for (auto& w : acc) only = only && mub.test(bt.id_of(w.ranks())) && is_acceptable(w, P, p);
                t.record(2, only, [&] { return detail::profile_witness(p, P); });
                if (fork) {
                    bool ok = false;
                    try {
                        ok = is_acceptable(construct_acceptable(P, p), P, p);
                    } catch (const InternalSearchExhausted&) {
                    }
                    t.record(3, ok, [&] { return detail::profile_witness(p, P); });
                }
            }
        t.record(0, every == fork, [&] {
            json j = poset_to_json(p);
            j["fork_class"] = to_string(cls);
            if (missing) j["profile"] = profile_to_json(*missing)["profile"];
            return j;
        });
        t.record(1, fork == !forb, [&] { return poset_to_json(p); });
        if (forb) {
            Profile P = four_poset_profile(p, forb->first, forb->second);
            t.record(4, acceptable_orders(P, p).empty(), [&] {
                json j = detail::profile_witness(p, P);
                j["kind"] = to_string(forb->first);
                return j;
            });
        }
    });
    tally.fill(s);
    return s;
}

// --------------------------------------------------------------------- mcs

/// Argmax dominance on the 5-chain, consensus under the strong set order and
/// possibly-optimal sets under the alternative set order on the 3-chain.
inline InstanceSweep verify_mcs(const SweepOptions& opt = {}) {
    InstanceSweep s{"mcs", 5, 2, "chains of 5 and 3 alternatives", "all dominance pairs; all nonempty set pairs",
                    std::nullopt, 0, {}};
    const std::vector<std::string> ids{"argmax_sso", "consensus_sso", "possibly_optimal_aso"};
    detail::Tally t(ids);

    RealChain c5({1, 2, 3, 4, 5});
    auto orders5 = enumerate_weak_orders(c5.labels());
    std::vector<AltSet> top5;
    for (auto& w : orders5) top5.push_back(argmax_set(w, c5));
    {
        std::vector<detail::Tally> parts(orders5.size(), detail::Tally(ids));
        parallel_for(orders5.size(), opt.jobs, [&](std::size_t h) {
            for (std::size_t l = 0; l < orders5.size(); ++l) {
                if (!sc_dominates(orders5[h], orders5[l], c5.poset())) continue;
                parts[h].count_instance();
                parts[h].record(0, sso_dominates(top5[h], top5[l]), [&] {
                    return json{{"hi", format_ranking(orders5[h])}, {"lo", format_ranking(orders5[l])}};
                });
            }
        });
        for (auto& p : parts) t.merge(p);
    }

    RealChain c3({1, 2, 3});
    OrderFamily fam(c3, enumerate_weak_orders(c3.labels()));
    const auto full = fam.full();
    auto alt = [](std::uint32_t bits) {
        AltSet a;
        for (Index i = 0; i < 32; ++i)
            if (bits >> i & 1u) a.push_back(i);
        return a;
    };
    auto set_json = [&](OrderFamily::Mask m) {
        json a = json::array();
        for (auto& w : fam.members(m)) a.push_back(format_ranking(w));
        return a;
    };
    std::vector<detail::Tally> parts(full, detail::Tally(ids));
    parallel_for(full, opt.jobs, [&](std::size_t i) {
        const auto A = static_cast<OrderFamily::Mask>(i + 1);
        const AltSet cA = alt(fam.consensus(A)), xA = alt(fam.possibly_optimal(A));
        for (OrderFamily::Mask B = 1; B <= full; ++B) {
            parts[i].count_instance();
            if (fam.sso(A, B))
                parts[i].record(1, sso_dominates(cA, alt(fam.consensus(B))),
                                [&] { return json{{"high", set_json(A)}, {"low", set_json(B)}}; });
            if (fam.aso(A, B))
                parts[i].record(2, aso_dominates(xA, alt(fam.possibly_optimal(B))),
                                [&] { return json{{"high", set_json(A)}, {"low", set_json(B)}}; });
        }
    });
    for (auto& p : parts) t.merge(p);
    t.fill(s);
    return s;
}

// --------------------------------------------------------------------- psi

inline InstanceSweep verify_psi(const SweepOptions& opt = {}) {
    InstanceSweep s{"psi", 3, 0, "chain of 3 alternatives", "all 8191 nonempty sets of weak orders", std::nullopt, 0, {}};
    const std::vector<std::string> ids{"monotone", "respects_unanimity"};
    RealChain c3({1, 2, 3});
    ConsensusScf psi(c3);
    const auto& fam = psi.family();
    const auto& u = psi.universe();
    std::vector<detail::Tally> parts(u.size(), detail::Tally(ids));
    parallel_for(u.size(), opt.jobs, [&](std::size_t i) {
        auto& t = parts[i];
        t.count_instance();
        const Index vi = psi.psi_index(u[i]);
        const std::uint32_t cons = fam.consensus(u[i]);
        t.record(1, !cons || (cons >> vi & 1u), [&] { return json{{"set", u[i]}, {"psi", vi}}; });
        for (std::size_t j = 0; j < u.size(); ++j)
            if (fam.sso(u[j], u[i]))
                t.record(0, psi.psi_index(u[j]) >= vi, [&] { return json{{"high", u[j]}, {"low", u[i]}}; });
    });
    detail::Tally all(ids);
    for (auto& p : parts) all.merge(p);
    all.fill(s);
    return s;
}

// ------------------------------------------------------------------ maxmin

/// Every act space on two states with prizes {0,1} or {0,1,2} and at most 4
/// non-constant acts; every CE map; profiles of one or two distinct maps.
inline InstanceSweep verify_maxmin(const SweepOptions& opt = {}) {
    InstanceSweep s{"maxmin", 2, 2, "two-state act spaces, prizes {0,1} or {0,1,2}, up to 4 non-constant acts",
                    "all CE maps; profiles of one or two maps", std::nullopt, 0, {}};
    const std::vector<std::string> ids{"representation_iff_minimum_upper_bound", "unique_join_brute",
                                       "corollary_subset",                      "corollary_sso",
                                       "singleton_maxmin",                      "aversion_iff_dominance",
                                       "act_order_crown_diamond_free"};
    struct Space {
        std::vector<double> prizes;
        std::vector<Act> acts;
    };
    std::vector<Space> spaces;
    for (std::vector<double> prizes : {std::vector<double>{0, 1}, std::vector<double>{0, 1, 2}}) {
        auto acts = all_acts({"w1", "w2"}, prizes);
        std::vector<Act> nonconst(acts.begin() + static_cast<long>(prizes.size()), acts.end());
        const std::size_t q = nonconst.size();
        for (std::uint32_t sub = 0; sub < (1u << q); ++sub) {
            if (__builtin_popcount(sub) > 4) continue;
            Space sp{prizes, {}};
            for (std::size_t i = 0; i < q; ++i)
                if (sub >> i & 1u) sp.acts.push_back(nonconst[i]);
            spaces.push_back(sp);
        }
    }
    auto tally = detail::run_tasks(spaces.size(), ids, opt.jobs, [&](std::size_t si, detail::Tally& t) {
        ActSpace sp({"w1", "w2"}, spaces[si].prizes, spaces[si].acts);
        const Poset order = induced_act_order(sp);
        const std::size_t n = sp.size();
        t.record(6, is_crown_and_diamond_free(order), [&] { return act_space_to_json(sp); });

        std::vector<Index> free;
        for (Index i = 0; i < n; ++i)
            if (!sp.is_constant(i)) free.push_back(i);
        std::vector<CEPreference> maps;
        std::vector<std::size_t> digit(free.size(), 0);
        while (true) {
            std::vector<double> ce(n);
            for (Index i = 0; i < n; ++i)
                if (sp.is_constant(i)) ce[i] = sp.act(i).payoff.front();
            for (std::size_t k = 0; k < free.size(); ++k) ce[free[k]] = sp.prizes()[digit[k]];
            maps.emplace_back(sp, ce);
            std::size_t k = 0;
            for (; k < digit.size(); ++k) {
                if (++digit[k] < sp.prizes().size()) break;
                digit[k] = 0;
            }
            if (k == digit.size()) break;
        }
        const std::size_t m = maps.size();
        std::vector<WeakOrder> as_order;
        for (auto& c : maps) as_order.push_back(to_weak_order(c, sp));

        std::vector<WeakOrder> targets;
        if (n <= 5)
            targets = enumerate_weak_orders(sp.labels());
        else
            targets = as_order;

        std::optional<oracle::BruteTable> bt;
        if (n <= oracle::max_brute_elements) bt.emplace(order);

        auto ce_index = [&](const CEPreference& c) {
            for (std::size_t i = 0; i < m; ++i)
                if (maps[i] == c) return i;
            throw std::logic_error("CE map outside the enumeration");
        };

        // Observation 1 and the dominance equivalence, per map and map pair.
        for (std::size_t a = 0; a < m; ++a) {
            CEPreference solo = maxmin_preference({maps[a]}, sp);
            t.record(4, solo == maps[a] && is_minimum_upper_bound(as_order[a], Profile{as_order[a]}, order),
                     [&] { return json{{"space", act_space_to_json(sp)}, {"map", ce_to_json(maps[a], sp)}}; });
            for (std::size_t b = 0; b < m; ++b)
                t.record(5, more_ambiguity_averse(maps[a], maps[b], sp) == sc_dominates(as_order[a], as_order[b], order),
                         [&] { return json{{"hi", ce_to_json(maps[a], sp)}, {"lo", ce_to_json(maps[b], sp)}}; });
        }

        // Profiles {a} and {a, b}, a < b.
        std::vector<std::vector<std::size_t>> profiles;
        for (std::size_t a = 0; a < m; ++a) {
            profiles.push_back({a});
            for (std::size_t b = a + 1; b < m; ++b) profiles.push_back({a, b});
        }
        std::vector<std::size_t> maxmin_of(profiles.size());
        for (std::size_t pi = 0; pi < profiles.size(); ++pi) {
            const auto& ids_ = profiles[pi];
            std::vector<CEPreference> P;
            std::vector<WeakOrder> W;
            for (auto i : ids_) {
                P.push_back(maps[i]);
                W.push_back(as_order[i]);
            }
            Profile prof(W);
            t.count_instance();
            CoreRelation core = core_relation(prof, order);
            auto wit = [&] {
                json a = json::array();
                for (auto& c : P) a.push_back(ce_to_json(c, sp));
                return json{{"space", act_space_to_json(sp)}, {"preferences", a}};
            };
            bool eq = true;
            for (auto& target : targets)
                eq = eq && (is_maxmin_representation(P, target, sp) == matches_core(target, core, order));
            t.record(0, eq, wit);
            CEPreference mm = maxmin_preference(P, sp);
            maxmin_of[pi] = ce_index(mm);
            if (bt) {
                oracle::Bits ub(bt->count());
                for (std::size_t i = 0; i < bt->count(); ++i) ub.set(i);
                for (auto& w : W) ub &= bt->above[bt->id_of(w.ranks())];
                oracle::Bits mub = bt->minimum_upper_bounds(ub);
                t.record(1, mub.count() == 1 && mub.test(bt->id_of(to_weak_order(mm, sp).ranks())), wit);
            }
        }
        // Corollary, subsets: {a} within {a, b}.
        for (std::size_t pi = 0; pi < profiles.size(); ++pi) {
            if (profiles[pi].size() != 2) continue;
            for (auto member : profiles[pi]) {
                std::size_t single = 0;
                while (profiles[single] != std::vector<std::size_t>{member}) ++single;
                t.record(2, more_ambiguity_averse(maps[maxmin_of[pi]], maps[maxmin_of[single]], sp), [&] {
                    return json{{"larger", ce_to_json(maps[maxmin_of[pi]], sp)},
                                {"smaller", ce_to_json(maps[maxmin_of[single]], sp)}};
                });
            }
        }
        // Corollary, strong set order on CE sets: the join of two maps is
        // their pointwise minimum, the meet their pointwise maximum.
        std::vector<std::size_t> join_ix(m * m), meet_ix(m * m);
        for (std::size_t a = 0; a < m; ++a)
            for (std::size_t b = 0; b < m; ++b) {
                join_ix[a * m + b] = ce_index(maxmin_preference({maps[a], maps[b]}, sp));
                meet_ix[a * m + b] = ce_index(maxmax_preference({maps[a], maps[b]}, sp));
            }
        auto in = [](const std::vector<std::size_t>& s, std::size_t x) {
            return std::find(s.begin(), s.end(), x) != s.end();
        };
        for (std::size_t hi = 0; hi < profiles.size(); ++hi)
            for (std::size_t lo = 0; lo < profiles.size(); ++lo) {
                bool sso = true;
                for (auto h : profiles[hi])
                    for (auto l : profiles[lo])
                        sso = sso && in(profiles[hi], join_ix[h * m + l]) && in(profiles[lo], meet_ix[h * m + l]);
                if (!sso) continue;
                t.record(3, more_ambiguity_averse(maps[maxmin_of[hi]], maps[maxmin_of[lo]], sp), [&] {
                    return json{{"high", ce_to_json(maps[maxmin_of[hi]], sp)}, {"low", ce_to_json(maps[maxmin_of[lo]], sp)}};
                });
            }
    });
    tally.fill(s);
    return s;
}

}  // namespace sclat
