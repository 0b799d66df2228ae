#include <gtest/gtest.h>

#include <map>
#include <set>

#include "sclat/sclat.hpp"

using namespace sclat;

TEST(WeakOrder, FromRankMaps) {
    Labels l = fixtures::chain3().labels();
    auto v = validate_weak_order(l, {{"x", 0}, {"y", 1}, {"z", 2}});
    EXPECT_TRUE(v.order.strict(0, 1));
    EXPECT_TRUE(v.order.strict(1, 2));
    EXPECT_FALSE(v.compacted);

    auto t = validate_weak_order(fixtures::anti2().labels(), {{"x", 0}, {"y", 0}});
    EXPECT_TRUE(t.order.indifferent(0, 1));

    try {
        validate_weak_order(l, {{"x", 0}, {"z", 1}});
        FAIL();
    } catch (const MissingElement& e) {
        EXPECT_EQ(e.name(), "y");
    }
    auto gap = validate_weak_order(l, {{"x", 0}, {"y", 5}, {"z", 5}});
    EXPECT_TRUE(gap.compacted);
    EXPECT_EQ(gap.order.ranks(), (std::vector<int>{0, 1, 1}));
}

TEST(ParseRanking, RanksAndTies) {
    Poset h = fixtures::hook();
    WeakOrder w = parse_ranking(h, "w > x > y > z");
    EXPECT_EQ(w.ranks(), (std::vector<int>{1, 2, 3, 0}));
    EXPECT_EQ(format_ranking(w), "w > x > y > z");

    WeakOrder t = parse_ranking(fixtures::anti2(), "x ~ y");
    EXPECT_EQ(t.ranks(), (std::vector<int>{0, 0}));
    EXPECT_EQ(format_ranking(t), "x ~ y");

    try {
        parse_ranking(fixtures::anti2(), "x > q");
        FAIL();
    } catch (const UnknownElement& e) {
        EXPECT_EQ(e.name(), "q");
    }
    EXPECT_THROW(parse_ranking(fixtures::anti2(), "x"), MissingElement);
    EXPECT_THROW(parse_ranking(fixtures::anti2(), "x > x > y"), InputError);
    EXPECT_THROW(parse_ranking(fixtures::anti2(), "x >> y"), InputError);
}

// Counts from the brute-force reference (ordered set partitions).
TEST(EnumerateWeakOrders, FubiniCounts) {
    const std::vector<std::size_t> expect{1, 3, 13, 75, 541, 4683};
    for (std::size_t n = 1; n <= 6; ++n) {
        std::size_t c = 0;
        for_each_weak_order(n, [&](const std::vector<int>&) { ++c; });
        EXPECT_EQ(c, expect[n - 1]) << n;
    }
    EXPECT_THROW(for_each_weak_order(8, [](const std::vector<int>&) {}), TooLarge);
}

TEST(EnumerateWeakOrders, DistinctAndCompact) {
    auto all = enumerate_weak_orders(make_labels({"a", "b", "c", "d"}));
    std::set<std::vector<int>> seen;
    for (auto& w : all) {
        auto r = w.ranks();
        EXPECT_FALSE(compact_ranks(r));
        EXPECT_TRUE(seen.insert(w.ranks()).second);
    }
}

TEST(ScDominates, Examples) {
    Poset c = fixtures::chain3();
    WeakOrder up = parse_ranking(c, "x > y > z"), down = parse_ranking(c, "z > y > x");
    EXPECT_TRUE(sc_dominates(up, up, c));
    EXPECT_FALSE(sc_dominates(down, up, c));
    EXPECT_TRUE(sc_dominates(up, down, c));

    Poset a = fixtures::anti2();
    EXPECT_TRUE(sc_dominates(parse_ranking(a, "y > x"), parse_ranking(a, "x > y"), a));
}

TEST(ScDominates, AgreesWithDefinitionOnAllFourElementPairs) {
    for (const Poset& p : {fixtures::hook(), fixtures::crown4(), fixtures::diamond4()}) {
        auto all = enumerate_weak_orders(p);
        for (auto& h : all)
            for (auto& l : all)
                ASSERT_EQ(sc_dominates(h, l, p), oracle::dominates_by_definition(h.ranks(), l.ranks(), p));
    }
}
