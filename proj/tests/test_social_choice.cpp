#include <gtest/gtest.h>

#include <random>

#include "sclat/sclat.hpp"
#include "support.hpp"

using namespace sclat;

TEST(JustifiedObjections, Examples) {
    Poset c = fixtures::chain3();
    Profile pi = fixtures::chain3_profile(c);
    EXPECT_TRUE(respects_justified_objections(parse_ranking(c, "x > y > z"), pi, c));
    auto v = justified_objection_violation(parse_ranking(c, "z > x > y"), pi, c);
    ASSERT_TRUE(v);
    EXPECT_EQ(v->x, 1u);  // y over z is demanded by the second member
    EXPECT_EQ(v->y, 2u);
    EXPECT_FALSE(respects_justified_objections(parse_ranking(c, "z > x > y"), pi, c));

    Poset a = fixtures::anti2();
    for (auto& w : enumerate_weak_orders(a)) EXPECT_TRUE(respects_justified_objections(w, fixtures::anti2_profile(a), a));
}

TEST(ConditionalUnanimity, Examples) {
    Poset h = fixtures::hook();
    Profile pi = fixtures::hook_profile(h);
    auto v = unanimity_violation(parse_ranking(h, "w > x > y > z"), pi, h, ChainDigraph(pi, h));
    ASSERT_TRUE(v);
    EXPECT_FALSE(conditionally_respects_unanimity(parse_ranking(h, "w > x > y > z"), pi, h));

    Poset c = fixtures::chain3();
    EXPECT_TRUE(conditionally_respects_unanimity(parse_ranking(c, "x > y > z"), fixtures::chain3_profile(c), c));

    Profile flat = parse_profile(c, {"x ~ y ~ z", "x ~ y ~ z"});
    EXPECT_TRUE(conditionally_respects_unanimity(parse_ranking(c, "x ~ y ~ z"), flat, c));
}

TEST(Acceptable, Examples) {
    Poset c = fixtures::chain3();
    EXPECT_TRUE(is_acceptable(parse_ranking(c, "x > y > z"), fixtures::chain3_profile(c), c));
    for (const auto& [p, pi] : {std::pair{fixtures::hook(), fixtures::hook_profile(fixtures::hook())},
                                std::pair{fixtures::crown4(), fixtures::crown4_profile(fixtures::crown4())}})
        for (auto& w : enumerate_weak_orders(p)) EXPECT_FALSE(is_acceptable(w, pi, p));
}

TEST(Acceptable, PerProfileSearch) {
    Poset c = fixtures::chain3();
    auto a = acceptable_exists_for_profile(fixtures::chain3_profile(c), c);
    ASSERT_TRUE(a);
    EXPECT_EQ(format_ranking(*a), "x > y > z");
    EXPECT_EQ(acceptable_orders(fixtures::chain3_profile(c), c).size(), 1u);

    Poset h = fixtures::hook();
    EXPECT_FALSE(acceptable_exists_for_profile(fixtures::hook_profile(h), h));

    Poset big = poset_from_covers(gen::letters(6), {});
    EXPECT_THROW(acceptable_orders(Profile{WeakOrder(big.labels(), {0, 0, 0, 0, 0, 0})}, big), TooLarge);
}

TEST(Acceptable, StatusQuoProfiles) {
    Poset s = fixtures::status_quo();
    gen::Rng rng(11);
    for (int i = 0; i < 200; ++i) {
        Profile pi{gen::gen_weak_order(rng, s.labels()), gen::gen_weak_order(rng, s.labels())};
        WeakOrder w = construct_acceptable(pi, s);
        EXPECT_TRUE(is_acceptable(w, pi, s));
    }
    Profile sample = profile_from_json(s.labels(), load_json_file(SCLAT_SAMPLES "/data/status_quo_profile.json"));
    EXPECT_TRUE(is_acceptable(construct_acceptable(sample, s), sample, s));
}

TEST(SwfVerdict, Fixtures) {
    auto sq = exists_acceptable_swf(fixtures::status_quo());
    EXPECT_TRUE(sq.exists);
    EXPECT_EQ(sq.fork_class, ForkClass::shattered_down_fork);
    auto h = exists_acceptable_swf(fixtures::hook());
    EXPECT_FALSE(h.exists);
    ASSERT_TRUE(h.forbidden);
    EXPECT_EQ(h.forbidden->first, FourPoset::hook);
    EXPECT_TRUE(exists_acceptable_swf(fixtures::chain3()).exists);
}

TEST(Construct, Examples) {
    Poset c = fixtures::chain3();
    EXPECT_EQ(format_ranking(construct_acceptable(fixtures::chain3_profile(c), c)), "x > y > z");
    Poset h = fixtures::hook();
    EXPECT_THROW(construct_acceptable(fixtures::hook_profile(h), h), NotAForkPoset);
}

// Profiles from the brute-force reference. The commonly quoted dumbbells
// profile admits thirteen acceptable orders, so a corrected one is used.
TEST(CounterexampleProfiles, CanonicalShapes) {
    for (FourPoset k : all_four_posets) {
        Poset p = canonical_four_poset(k);
        Profile pi = four_poset_profile(p, k, *find_four_poset(p, k));
        EXPECT_TRUE(acceptable_orders(pi, p).empty()) << to_string(k);
    }
    Poset db = canonical_four_poset(FourPoset::dumbbells);
    Profile printed = parse_profile(db, {"a > b > c > d", "c > d > a > b"});
    EXPECT_EQ(acceptable_orders(printed, db).size(), 13u);

    Poset bc = canonical_four_poset(FourPoset::ball_and_chain);
    Profile pi = four_poset_profile(bc, FourPoset::ball_and_chain, *find_four_poset(bc, FourPoset::ball_and_chain));
    EXPECT_EQ(format_ranking(pi[0]), "c > d > a > b");
    EXPECT_EQ(format_ranking(pi[1]), "b > c > d > a");
}

TEST(CounterexampleProfiles, DualHook) {
    Poset h = fixtures::hook();
    Poset d = dual(h);
    auto t = find_four_poset(d, FourPoset::hook);
    ASSERT_TRUE(t);
    EXPECT_TRUE(acceptable_orders(four_poset_profile(d, FourPoset::hook, *t), d).empty());
    auto u = find_four_poset(h, FourPoset::hook);
    EXPECT_TRUE(acceptable_orders(four_poset_profile(h, FourPoset::hook, *u), h).empty());
}

// Totals from the brute-force reference, which checks both axioms over all
// weak orders rather than the minimum upper bounds only.
TEST(FrozenTotals, AcceptableProfilesOnThreeAndFourElements) {
    struct Row {
        std::size_t n;
        std::uint64_t profiles, posets;
    };
    for (Row row : {Row{3, 3211, 19}, Row{4, 1216035, 93}}) {
        auto posets = oracle::enumerate_posets(row.n);
        std::vector<std::uint64_t> ok(posets.size()), all(posets.size());
        parallel_for(posets.size(), resolve_jobs(), [&](std::size_t i) {
            const Poset& p = posets[i];
            auto orders = enumerate_weak_orders(p);
            bool every = true;
            for (auto& a : orders)
                for (auto& b : orders) {
                    bool found = acceptable_exists_for_profile(Profile{a, b}, p).has_value();
                    ok[i] += found;
                    every = every && found;
                }
            all[i] = every;
        });
        std::uint64_t profiles = 0, good = 0, forks = 0;
        for (std::size_t i = 0; i < posets.size(); ++i) {
            profiles += ok[i];
            good += all[i];
            forks += classify_fork(posets[i]) != ForkClass::neither;
        }
        EXPECT_EQ(profiles, row.profiles) << row.n;
        EXPECT_EQ(good, row.posets) << row.n;
        EXPECT_EQ(forks, row.posets) << row.n;
    }
}

TEST(Report, ViolationsAreNamed) {
    Poset h = fixtures::hook();
    auto r = acceptability_report(h, {fixtures::hook_profile(h)});
    ASSERT_EQ(r.results.size(), 1u);
    EXPECT_TRUE(r.results[0].acceptable.empty());
    ASSERT_TRUE(r.results[0].violation);
    EXPECT_EQ(r.results[0].violation->axiom, Axiom::conditional_unanimity);

    Poset c = fixtures::crown4();
    auto q = acceptability_report(c, {fixtures::crown4_profile(c)});
    EXPECT_EQ(q.results[0].violation->axiom, Axiom::no_minimum_upper_bound);
}
