#include <gtest/gtest.h>

#include "sclat/sclat.hpp"

using namespace sclat;

namespace {

Relation rel(const std::vector<std::string>& names, const std::vector<std::pair<std::string, std::string>>& pairs,
             bool reflexive = true) {
    Relation r(make_labels(names));
    if (reflexive)
        for (Index i = 0; i < names.size(); ++i) r.set(i, i);
    for (auto& [a, b] : pairs) r.set(r.index_of(a), r.index_of(b));
    return r;
}

}  // namespace

TEST(ValidatePoset, AcceptsChainAndAntichain) {
    EXPECT_NO_THROW(validate_poset(rel({"x", "y", "z"}, {{"x", "y"}, {"y", "z"}, {"x", "z"}})));
    EXPECT_NO_THROW(validate_poset(rel({"x", "y"}, {})));
}

TEST(ValidatePoset, ReportsAxiomWithWitness) {
    try {
        validate_poset(rel({"x", "y"}, {{"x", "y"}, {"y", "x"}}));
        FAIL() << "expected NotAntisymmetric";
    } catch (const PosetAxiomError& e) {
        EXPECT_EQ(e.kind(), AxiomViolation::NotAntisymmetric);
        EXPECT_EQ(e.witness(), (std::vector<std::string>{"x", "y"}));
    }
    try {
        validate_poset(rel({"x", "y", "z"}, {{"x", "y"}, {"y", "z"}}));
        FAIL() << "expected NotTransitive";
    } catch (const PosetAxiomError& e) {
        EXPECT_EQ(e.kind(), AxiomViolation::NotTransitive);
        EXPECT_EQ(e.witness(), (std::vector<std::string>{"x", "y", "z"}));
    }
    try {
        validate_poset(rel({"x"}, {}, false));
        FAIL() << "expected NotReflexive";
    } catch (const PosetAxiomError& e) {
        EXPECT_EQ(e.kind(), AxiomViolation::NotReflexive);
    }
}

TEST(Closure, AddsImpliedPairs) {
    Relation c = transitive_closure(rel({"x", "y", "z"}, {{"x", "y"}, {"y", "z"}}, false));
    EXPECT_TRUE(c(0, 2));
    EXPECT_FALSE(c(2, 0));
    EXPECT_FALSE(c(0, 0));
    Relation t = rel({"x", "y", "z"}, {{"x", "y"}, {"y", "z"}, {"x", "z"}});
    EXPECT_EQ(transitive_closure(t), t);
}

TEST(Closure, HexagonClosesToPermutationOrder) {
    Poset p = fixtures::perm3();
    Relation red = transitive_reduction(p);
    EXPECT_EQ(transitive_closure(reflexive_closure_of(red)), p.relation());
    // 321 on top, 123 at the bottom, 213 and 132 incomparable.
    EXPECT_TRUE(p.geq(p.index_of("321"), p.index_of("123")));
    EXPECT_FALSE(p.comparable(p.index_of("213"), p.index_of("132")));
    EXPECT_FALSE(p.comparable(p.index_of("231"), p.index_of("312")));
}

TEST(Reduction, CoverEdges) {
    Poset c = fixtures::chain3();
    auto r = transitive_reduction(c);
    EXPECT_EQ(r.pairs(), (std::vector<std::pair<Index, Index>>{{0, 1}, {1, 2}}));

    EXPECT_EQ(transitive_reduction(fixtures::perm3()).pairs().size(), 6u);

    Poset d = fixtures::diamond4();  // x, y, z, w
    EXPECT_EQ(transitive_reduction(d).pairs(), (std::vector<std::pair<Index, Index>>{{0, 1}, {0, 2}, {1, 3}, {2, 3}}));
}

TEST(Dual, ReversesAndIsInvolutive) {
    Poset c = fixtures::chain3();
    Poset d = dual(c);
    EXPECT_TRUE(d.gt(2, 1));
    EXPECT_TRUE(d.gt(1, 0));
    EXPECT_EQ(dual(d), c);
    EXPECT_EQ(dual(fixtures::anti2()), fixtures::anti2());
}

TEST(Complete, Fixtures) {
    EXPECT_TRUE(is_complete(fixtures::chain3()));
    EXPECT_FALSE(is_complete(fixtures::anti2()));
    EXPECT_FALSE(is_complete(fixtures::hook()));
}

TEST(Covers, RejectsCycles) {
    EXPECT_THROW(poset_from_covers({"x", "y"}, {{"x", "y"}, {"y", "x"}}), PosetAxiomError);
    EXPECT_THROW(poset_from_covers({"x", "y"}, {{"x", "q"}}), UnknownElement);
}

TEST(InducedSubposet, KeepsOrderAmongSurvivors) {
    Poset h = fixtures::hook();
    Poset s = induced_subposet(h, {0, 2, 3});  // x, z, w
    EXPECT_EQ(s.size(), 3u);
    EXPECT_TRUE(s.gt(0, 1));
    EXPECT_TRUE(s.gt(0, 2));
    EXPECT_FALSE(s.comparable(1, 2));
}
