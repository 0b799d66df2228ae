// Joins, a failed join and an acceptable social order on the small fixtures.

#include <iostream>

#include "sclat/sclat.hpp"

int main() {
    using namespace sclat;

    Poset hook = fixtures::hook();
    Profile p1 = fixtures::hook_profile(hook);
    std::cout << "hook join: " << format_ranking(join(p1, hook)) << "\n";

    Poset crown = fixtures::crown4();
    try {
        join(fixtures::crown4_profile(crown), crown);
    } catch (const NoJoin& e) {
        std::cout << "crown: " << e.what() << "\n";
    }

    Poset chain = fixtures::chain3();
    Profile p7 = fixtures::chain3_profile(chain);
    std::cout << "chain acceptable: " << format_ranking(construct_acceptable(p7, chain)) << "\n";
    std::cout << "hook fork class: " << to_string(classify_fork(hook)) << "\n";

    ActSpace s({"w1", "w2"}, {0, 1}, {{"X", {0, 1}}, {"Y", {1, 0}}});
    CEPreference m = maxmin_preference({CEPreference::from_map(s, {{"X", 0}, {"Y", 1}}),
                                        CEPreference::from_map(s, {{"X", 1}, {"Y", 0}})},
                                       s);
    std::cout << "cautious order: " << format_ranking(to_weak_order(m, s)) << "\n";
}
