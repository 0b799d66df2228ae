#include <gtest/gtest.h>

#include "sclat/sclat.hpp"

using namespace sclat;

namespace {

Seq idx(const Poset& p, const std::vector<std::string>& names) {
    Seq s;
    for (auto& n : names) s.push_back(p.index_of(n));
    return s;
}

}  // namespace

TEST(Crown, FourCrownFixture) {
    Poset c = fixtures::crown4();
    auto w = find_crown(c);
    ASSERT_TRUE(w);
    EXPECT_EQ(*w, idx(c, {"x", "y", "z", "w"}));
    EXPECT_TRUE(is_crown(c, *w));
    EXPECT_FALSE(find_crown(fixtures::hook()));
    EXPECT_FALSE(find_crown(fixtures::chain3()));
    EXPECT_FALSE(find_crown(fixtures::diamond4()));
}

TEST(Crown, PermutationHexagonIsASixCrownOfItsReductionOnly) {
    // The closure makes 321 and 123 comparable to everything, so no crown
    // survives in the order itself, only the weak cycle in its reduction.
    Poset p = fixtures::perm3();
    EXPECT_FALSE(find_crown(p));
    EXPECT_TRUE(find_weak_cycle(transitive_reduction(p)));
}

TEST(Diamond, Fixtures) {
    Poset d = fixtures::diamond4();
    auto w = find_diamond(d);
    ASSERT_TRUE(w);
    EXPECT_EQ(*w, idx(d, {"x", "y", "z", "w"}));
    EXPECT_FALSE(find_diamond(fixtures::crown4()));

    Poset p = fixtures::perm3();
    auto pw = find_diamond(p);
    ASSERT_TRUE(pw);
    EXPECT_EQ(*pw, idx(p, {"321", "231", "312", "123"}));
}

TEST(Diamond, CrownDiamondFree) {
    EXPECT_TRUE(is_crown_and_diamond_free(fixtures::hook()));
    EXPECT_FALSE(is_crown_and_diamond_free(fixtures::crown4()));
    EXPECT_FALSE(is_crown_and_diamond_free(fixtures::diamond4()));
    EXPECT_FALSE(is_crown_and_diamond_free(fixtures::perm3()));
}

TEST(Chalice, Fixtures) {
    Poset c = fixtures::chalice5();
    auto w = find_chalice(c);
    ASSERT_TRUE(w);
    EXPECT_EQ(*w, idx(c, {"a", "b", "e", "c", "d"}));
    EXPECT_FALSE(find_chalice(fixtures::chain3()));
    EXPECT_FALSE(find_chalice(fixtures::perm3()));
}

TEST(WeakCycle, Reductions) {
    Poset p = fixtures::perm3();
    auto c = find_weak_cycle(transitive_reduction(p));
    ASSERT_TRUE(c);
    EXPECT_EQ(c->size(), 6u);
    EXPECT_FALSE(find_weak_cycle(transitive_reduction(fixtures::chain3())));

    Poset d = fixtures::diamond4();
    auto dc = find_weak_cycle(transitive_reduction(d));
    ASSERT_TRUE(dc);
    EXPECT_EQ(*dc, idx(d, {"x", "y", "w", "z"}));
}

TEST(ProperFourCrown, ImproperOnesSitInsideLargerOrders) {
    Poset c = fixtures::crown4();
    EXPECT_TRUE(find_proper_four_crown(c));
    // a, c >= e >= b, d makes (a,b,c,d) improper.
    Poset q = poset_from_covers({"a", "b", "c", "d", "e"}, {{"a", "e"}, {"c", "e"}, {"e", "b"}, {"e", "d"}});
    auto crown = find_crown(q);
    ASSERT_TRUE(crown);
    EXPECT_TRUE(is_improper_four_crown(q, *crown));
    EXPECT_FALSE(find_proper_four_crown(q));
}

TEST(ForkClass, Fixtures) {
    EXPECT_EQ(classify_fork(fixtures::status_quo()), ForkClass::shattered_down_fork);
    EXPECT_EQ(classify_fork(fixtures::hook()), ForkClass::neither);
    EXPECT_EQ(classify_fork(fixtures::chain3()), ForkClass::up_fork);
    EXPECT_EQ(classify_fork(fixtures::crown4()), ForkClass::neither);
    EXPECT_EQ(classify_fork(fixtures::anti2()), ForkClass::shattered_up_fork);
    // c above a and b, chain below c.
    Poset f = poset_from_covers({"a", "b", "c", "d"}, {{"c", "a"}, {"c", "b"}, {"d", "c"}});
    EXPECT_EQ(classify_fork(f), ForkClass::down_fork);
}

TEST(FourPosets, Fixtures) {
    Poset h = fixtures::hook();
    auto f = find_forbidden_four_poset(h);
    ASSERT_TRUE(f);
    EXPECT_EQ(f->first, FourPoset::hook);
    EXPECT_EQ(f->second, idx(h, {"z", "y", "x", "w"}));

    Poset db = poset_from_covers({"a", "b", "c", "d"}, {{"a", "b"}, {"c", "d"}});
    auto g = find_forbidden_four_poset(db);
    ASSERT_TRUE(g);
    EXPECT_EQ(g->first, FourPoset::dumbbells);

    EXPECT_FALSE(find_forbidden_four_poset(fixtures::status_quo()));
    EXPECT_FALSE(find_forbidden_four_poset(fixtures::chain3()));
}

TEST(FourPosets, CanonicalShapesMatchTheirOwnKindOnly) {
    for (FourPoset k : all_four_posets) {
        Poset p = canonical_four_poset(k);
        auto t = find_four_poset(p, k);
        ASSERT_TRUE(t) << to_string(k);
        EXPECT_TRUE(is_four_poset(p, k, *t));
        for (FourPoset other : all_four_posets) {
            if (other == k) continue;
            EXPECT_FALSE(find_four_poset(p, other)) << to_string(k) << " vs " << to_string(other);
        }
        EXPECT_EQ(classify_fork(p), ForkClass::neither) << to_string(k);
    }
}

TEST(Analyze, Crown) {
    StructureReport r = analyze_structure(fixtures::crown4());
    ASSERT_EQ(r.crowns.size(), 1u);
    EXPECT_TRUE(r.diamonds.empty());
    ASSERT_EQ(r.four_posets.size(), 1u);
    EXPECT_EQ(r.four_posets[0].first, FourPoset::crown4);
    EXPECT_EQ(r.fork_class, ForkClass::neither);
}
