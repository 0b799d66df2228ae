#pragma once

// Small posets and profiles used by the tests, samples and CLI demos.

#include <string>
#include <vector>

#include "preference.hpp"
#include "relation.hpp"

namespace sclat::fixtures {

/// x > y > z, x > w.
inline Poset hook() { return poset_from_covers({"x", "y", "z", "w"}, {{"x", "y"}, {"y", "z"}, {"x", "w"}}); }
inline Profile hook_profile(const Poset& p) { return parse_profile(p, {"z > w > x > y", "y > z > w > x"}); }

/// x and z each above y and w.
inline Poset crown4() {
    return poset_from_covers({"x", "y", "z", "w"}, {{"x", "y"}, {"z", "y"}, {"z", "w"}, {"x", "w"}});
}
inline Profile crown4_profile(const Poset& p) { return parse_profile(p, {"w > x > y > z", "y > z > w > x"}); }

/// x > y > w, x > z > w.
inline Poset diamond4() {
    return poset_from_covers({"x", "y", "z", "w"}, {{"x", "y"}, {"x", "z"}, {"y", "w"}, {"z", "w"}});
}
inline Profile diamond4_profile(const Poset& p) { return parse_profile(p, {"y > w > z > x", "w > z > x > y"}); }

inline Poset anti2() { return poset_from_covers({"x", "y"}, {}); }
inline Profile anti2_profile(const Poset& p) { return parse_profile(p, {"x > y", "y > x"}); }

inline Poset chain3() { return poset_from_covers({"x", "y", "z"}, {{"x", "y"}, {"y", "z"}}); }
inline Profile chain3_profile(const Poset& p) { return parse_profile(p, {"z > x > y", "y > z > x"}); }

/// Strict rankings of {1,2,3} under single-crossing dominance with 3 > 2 > 1.
/// Names list the most preferred number first.
inline Poset perm3() {
    return poset_from_covers({"321", "231", "312", "213", "132", "123"},
                             {{"321", "231"}, {"321", "312"}, {"231", "213"}, {"312", "132"}, {"213", "123"},
                              {"132", "123"}});
}

/// x0 above y, y', y''; z and z' unrelated to everything.
inline Poset status_quo() {
    return poset_from_covers({"z", "z'", "x0", "y", "y'", "y''"}, {{"x0", "y"}, {"x0", "y'"}, {"x0", "y''"}});
}

/// a, b > e > c, d.
inline Poset chalice5() {
    return poset_from_covers({"a", "b", "e", "c", "d"}, {{"a", "e"}, {"b", "e"}, {"e", "c"}, {"e", "d"}});
}

}  // namespace sclat::fixtures
