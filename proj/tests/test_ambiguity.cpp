#include <gtest/gtest.h>

#include "sclat/sclat.hpp"

using namespace sclat;

namespace {

ActSpace xy() { return ActSpace({"w1", "w2"}, {0, 1}, {{"X", {0, 1}}, {"Y", {1, 0}}}); }

}  // namespace

TEST(ActSpace, AddsConstantsAndValidates) {
    ActSpace s = xy();
    EXPECT_EQ(s.size(), 4u);
    EXPECT_EQ(s.act(2).name, "c0");
    EXPECT_EQ(s.act(3).name, "c1");
    EXPECT_TRUE(s.is_constant(3));
    EXPECT_FALSE(s.is_constant(0));
    EXPECT_THROW(ActSpace({"w1"}, {1, 0}, {}), InputError);
    EXPECT_THROW(ActSpace({"w1"}, {0, 1}, {{"X", {2}}}), InputError);
    EXPECT_THROW(ActSpace({"w1", "w2"}, {0, 1}, {{"X", {0}}}), InputError);
    EXPECT_THROW(ActSpace({"w1", "w2"}, {0, 1}, {{"X", {0, 1}}, {"Z", {0, 1}}}), InputError);
}

TEST(ActOrder, ConstantsOnTopInPrizeOrder) {
    ActSpace s = xy();
    Poset p = induced_act_order(s);
    const Index X = 0, Y = 1, c0 = 2, c1 = 3;
    EXPECT_TRUE(p.gt(c1, c0));
    for (Index c : {c0, c1})
        for (Index a : {X, Y}) EXPECT_TRUE(p.gt(c, a));
    EXPECT_FALSE(p.comparable(X, Y));
    EXPECT_TRUE(is_crown_and_diamond_free(p));

    ActSpace k({"w1", "w2"}, {0, 1, 2}, {});
    EXPECT_TRUE(is_complete(induced_act_order(k)));
}

TEST(CePreference, Validation) {
    ActSpace s = xy();
    EXPECT_THROW(CEPreference(s, {0, 1, 1, 1}), InputError);  // c0 must map to 0
    EXPECT_THROW(CEPreference(s, {0.5, 1, 0, 1}), InputError);
    EXPECT_THROW(CEPreference::from_map(s, {{"X", 0}}), MissingElement);
    EXPECT_THROW(CEPreference::from_map(s, {{"X", 0}, {"Y", 0}, {"Q", 1}}), UnknownElement);
}

TEST(Aversion, Examples) {
    ActSpace s = xy();
    CEPreference cautious = CEPreference::from_map(s, {{"X", 0}, {"Y", 0}});
    CEPreference a = CEPreference::from_map(s, {{"X", 0}, {"Y", 1}});
    CEPreference bold = CEPreference::from_map(s, {{"X", 1}, {"Y", 1}});
    EXPECT_TRUE(more_ambiguity_averse(a, a, s));
    EXPECT_TRUE(more_ambiguity_averse(cautious, a, s));
    EXPECT_TRUE(more_ambiguity_averse(cautious, bold, s));
    EXPECT_FALSE(more_ambiguity_averse(bold, a, s));
    Poset p = induced_act_order(s);
    for (auto& [h, l] : std::vector<std::pair<CEPreference, CEPreference>>{{cautious, a}, {bold, a}, {a, bold}})
        EXPECT_EQ(more_ambiguity_averse(h, l, s), sc_dominates(to_weak_order(h, s), to_weak_order(l, s), p));
}

TEST(Maxmin, PointBeliefsGiveTheWorstCase) {
    ActSpace s = xy();
    // Beliefs concentrated on w1 and on w2: CE is the payoff in that state.
    CEPreference d1 = CEPreference::from_map(s, {{"X", 0}, {"Y", 1}});
    CEPreference d2 = CEPreference::from_map(s, {{"X", 1}, {"Y", 0}});
    EXPECT_EQ(maxmin_preference({d1}, s), d1);
    CEPreference m = maxmin_preference({d1, d2}, s);
    EXPECT_EQ(m.ce(0), 0);
    EXPECT_EQ(m.ce(1), 0);
    EXPECT_EQ(maxmin_preference({d1, d2, m}, s), m);
    EXPECT_EQ(format_ranking(to_weak_order(m, s)), "c1 > X ~ Y ~ c0");
    EXPECT_TRUE(is_maxmin_representation({d1, d2}, m, s));
    EXPECT_TRUE(is_minimum_upper_bound(to_weak_order(m, s), as_profile({d1, d2}, s), induced_act_order(s)));
}

TEST(Maxmin, RepresentationRejectsASeparatingTarget) {
    ActSpace s = xy();
    CEPreference d1 = CEPreference::from_map(s, {{"X", 0}, {"Y", 1}});
    CEPreference d2 = CEPreference::from_map(s, {{"X", 1}, {"Y", 0}});
    // min collapses X and Y onto 0; a target with Y strictly above X is not represented.
    EXPECT_FALSE(is_maxmin_representation({d1, d2}, d1, s));
    EXPECT_FALSE(is_maxmin_representation({d1, d2}, d2, s));
}

TEST(AllActs, GridAndConstantsFirst) {
    auto acts = all_acts({"w1", "w2"}, {0, 1});
    ASSERT_EQ(acts.size(), 4u);
    EXPECT_EQ(acts[0].payoff, (std::vector<double>{0, 0}));
    EXPECT_EQ(acts[1].payoff, (std::vector<double>{1, 1}));
    EXPECT_EQ(acts[2].name, "(1,0)");
    EXPECT_EQ(all_acts({"w1", "w2"}, {0, 1, 2}).size(), 9u);
}

TEST(RiskSample, MaxminOfTwoBeliefs) {
    json acts = load_json_file(SCLAT_SAMPLES "/data/risk.json");
    json prefs = load_json_file(SCLAT_SAMPLES "/data/risk_prefs.json");
    ActSpace s = act_space_from_json(acts);
    auto P = ce_list_from_json(s, prefs);
    CEPreference m = maxmin_preference(P, s);
    for (Index i = 0; i < s.size(); ++i)
        for (auto& c : P) EXPECT_LE(m.ce(i), c.ce(i));
    EXPECT_TRUE(is_minimum_upper_bound(to_weak_order(m, s), as_profile(P, s), induced_act_order(s)));
}
