#pragma once

#include <array>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "relation.hpp"

namespace sclat {

// ---------------------------------------------------------------- crowns

/// a1 > a2 < a3 > ... > aK < a1 with every non-adjacent pair incomparable.
inline bool is_crown(const Poset& p, const Seq& s) {
    const std::size_t k = s.size();
    if (k < 4 || k % 2) return false;
    for (Index i = 0; i < k; ++i)
        for (Index j = i + 1; j < k; ++j)
            if (s[i] == s[j]) return false;
    for (Index i = 0; i < k; ++i) {
        Index nxt = (i + 1) % k;
        bool ok = (i % 2 == 0) ? p.gt(s[i], s[nxt]) : p.gt(s[nxt], s[i]);
        if (!ok) return false;
    }
    for (Index i = 0; i < k; ++i)
        for (Index j = i + 2; j < k; ++j) {
            if (i == 0 && j == k - 1) continue;
            if (p.comparable(s[i], s[j])) return false;
        }
    return true;
}

namespace detail {

template <class F>
bool crown_search(const Poset& p, std::size_t k, Seq& cur, F& f) {
    const std::size_t j = cur.size();
    if (j == k) return f(static_cast<const Seq&>(cur));
    for (Index e = 0; e < p.size(); ++e) {
        if (j == 0) {
            cur.push_back(e);
            if (crown_search(p, k, cur, f)) return true;
            cur.pop_back();
            continue;
        }
        Index prev = cur.back();
        bool ok = (j % 2 == 1) ? p.gt(prev, e) : p.gt(e, prev);
        for (Index i = 0; ok && i + 1 < j; ++i) {
            if (j == k - 1 && i == 0)
                ok = p.gt(cur[0], e);
            else
                ok = !p.comparable(cur[i], e);
        }
        if (!ok) continue;
        cur.push_back(e);
        if (crown_search(p, k, cur, f)) return true;
        cur.pop_back();
    }
    return false;
}

}  // namespace detail

/// Visits every k-crown as an index sequence (each cyclic rotation that
/// starts at a top, in both directions) in lexicographic order. The visitor
/// returns true to stop. Returns whether it was stopped.
template <class F>
bool for_each_crown(const Poset& p, std::size_t k, F&& f) {
    Seq cur;
    return detail::crown_search(p, k, cur, f);
}

inline std::optional<Seq> find_crown(const Poset& p, std::size_t min_k = 4) {
    std::optional<Seq> hit;
    for (std::size_t k = std::max<std::size_t>(4, min_k + (min_k % 2)); k <= p.size(); k += 2) {
        for_each_crown(p, k, [&](const Seq& s) {
            hit = s;
            return true;
        });
        if (hit) break;
    }
    return hit;
}

/// A 4-crown (a,b,c,d) with some e such that a,c >= e >= b,d.
inline bool is_improper_four_crown(const Poset& p, const Seq& s) {
    for (Index e = 0; e < p.size(); ++e)
        if (p.geq(s[0], e) && p.geq(s[2], e) && p.geq(e, s[1]) && p.geq(e, s[3])) return true;
    return false;
}

inline std::optional<Seq> find_proper_four_crown(const Poset& p) {
    std::optional<Seq> hit;
    for_each_crown(p, 4, [&](const Seq& s) {
        if (is_improper_four_crown(p, s)) return false;
        hit = s;
        return true;
    });
    return hit;
}

// -------------------------------------------------------------- diamonds

inline bool is_diamond(const Poset& p, const Seq& s) {
    if (s.size() != 4) return false;
    auto [a, b, c, d] = std::array<Index, 4>{s[0], s[1], s[2], s[3]};
    return p.geq(a, b) && p.geq(b, d) && p.geq(a, c) && p.geq(c, d) && !p.comparable(b, c);
}

inline std::optional<Seq> find_diamond(const Poset& p) {
    const std::size_t n = p.size();
    for (Index a = 0; a < n; ++a)
        for (Index b = 0; b < n; ++b) {
            if (!p.gt(a, b)) continue;
            for (Index c = 0; c < n; ++c) {
                if (!p.gt(a, c) || p.comparable(b, c)) continue;
                for (Index d = 0; d < n; ++d)
                    if (p.gt(b, d) && p.gt(c, d)) return Seq{a, b, c, d};
            }
        }
    return std::nullopt;
}

inline bool is_crown_and_diamond_free(const Poset& p) { return !find_crown(p) && !find_diamond(p); }

// -------------------------------------------------------------- chalices

/// (a,b,e1..eK,c,d) in a cover relation: a and b both cover e1, e1..eK is a
/// cover path, eK covers c and d, and all elements are distinct.
inline bool is_chalice(const Relation& red, const Seq& s) {
    if (s.size() < 5) return false;
    for (Index i = 0; i < s.size(); ++i)
        for (Index j = i + 1; j < s.size(); ++j)
            if (s[i] == s[j]) return false;
    const std::size_t m = s.size();
    Index a = s[0], b = s[1], c = s[m - 2], d = s[m - 1];
    if (!red(a, s[2]) || !red(b, s[2])) return false;
    for (Index i = 2; i + 3 < m; ++i)
        if (!red(s[i], s[i + 1])) return false;
    if (!red(s[m - 3], c) || !red(s[m - 3], d)) return false;
    return !red.ranked(a, b) && !red.ranked(c, d);
}

inline std::optional<Seq> find_chalice_in(const Relation& red) {
    const std::size_t n = red.size();
    // Lexicographic over (a, b, e1); then the shortest cover path from e1 to
    // an element with two lower covers.
    for (Index a = 0; a < n; ++a)
        for (Index b = a + 1; b < n; ++b) {
            if (red.ranked(a, b)) continue;
            for (Index e1 = 0; e1 < n; ++e1) {
                if (e1 == a || e1 == b || !red(a, e1) || !red(b, e1)) continue;
                std::vector<Index> parent(n, n);
                std::vector<Index> queue{e1};
                parent[e1] = e1;
                for (std::size_t qi = 0; qi < queue.size(); ++qi) {
                    Index e = queue[qi];
                    std::vector<Index> below;
                    for (Index v = 0; v < n; ++v)
                        if (v != e && red(e, v)) below.push_back(v);
                    for (std::size_t i = 0; i < below.size(); ++i)
                        for (std::size_t j = i + 1; j < below.size(); ++j) {
                            if (red.ranked(below[i], below[j])) continue;
                            Seq path;
                            for (Index v = e; v != e1; v = parent[v]) path.push_back(v);
                            path.push_back(e1);
                            Seq out{a, b};
                            out.insert(out.end(), path.rbegin(), path.rend());
                            out.push_back(below[i]);
                            out.push_back(below[j]);
                            if (is_chalice(red, out)) return out;
                        }
                    for (Index v : below)
                        if (parent[v] == n) {
                            parent[v] = e;
                            queue.push_back(v);
                        }
                }
            }
        }
    return std::nullopt;
}

inline std::optional<Seq> find_chalice(const Poset& p) { return find_chalice_in(transitive_reduction(p)); }

// ----------------------------------------------------------- weak cycles

inline bool is_weak_cycle(const Relation& rel, const Seq& s) {
    if (s.size() < 3) return false;
    for (Index i = 0; i < s.size(); ++i)
        for (Index j = i + 1; j < s.size(); ++j)
            if (s[i] == s[j]) return false;
    for (Index i = 0; i < s.size(); ++i)
        if (!rel.ranked(s[i], s[(i + 1) % s.size()])) return false;
    return true;
}

/// Cycle of length >= 3 in the comparability graph of rel (loops ignored).
/// DFS in index order; the first back edge to a non-parent ancestor closes it.
inline std::optional<Seq> find_weak_cycle(const Relation& rel) {
    const std::size_t n = rel.size();
    std::vector<int> state(n, 0);  // 0 new, 1 on stack, 2 done
    std::vector<Index> parent(n, n);
    Seq stack;
    std::optional<Seq> hit;

    auto dfs = [&](auto&& self, Index u) -> bool {
        state[u] = 1;
        stack.push_back(u);
        for (Index v = 0; v < n; ++v) {
            if (v == u || !rel.ranked(u, v)) continue;
            if (state[v] == 0) {
                parent[v] = u;
                if (self(self, v)) return true;
            } else if (state[v] == 1 && v != parent[u]) {
                auto it = std::find(stack.begin(), stack.end(), v);
                hit = Seq(it, stack.end());
                return true;
            }
        }
        stack.pop_back();
        state[u] = 2;
        return false;
    };
    for (Index s = 0; s < n; ++s)
        if (state[s] == 0 && dfs(dfs, s)) return hit;
    return std::nullopt;
}

// ----------------------------------------------------------------- forks

enum class ForkClass { up_fork, down_fork, shattered_up_fork, shattered_down_fork, neither };

inline const char* to_string(ForkClass c) {
    switch (c) {
    case ForkClass::up_fork: return "up_fork";
    case ForkClass::down_fork: return "down_fork";
    case ForkClass::shattered_up_fork: return "shattered_up_fork";
    case ForkClass::shattered_down_fork: return "shattered_down_fork";
    case ForkClass::neither: return "neither";
    }
    return "?";
}

/// For forks: `apex` is a, `head` is the fork head without a, `rest` is the
/// chain below (up-fork) or above (down-fork) a.
/// For shattered forks: `head` is the fork head without its extremum `apex`,
/// `rest` the isolated elements.
struct ForkShape {
    ForkClass cls = ForkClass::neither;
    Index apex = 0;
    std::vector<Index> head;
    std::vector<Index> rest;
};

namespace detail {

inline bool is_antichain(const Poset& p, const std::vector<Index>& s) {
    for (std::size_t i = 0; i < s.size(); ++i)
        for (std::size_t j = i + 1; j < s.size(); ++j)
            if (p.comparable(s[i], s[j])) return false;
    return true;
}

inline bool is_chain(const Poset& p, const std::vector<Index>& s) {
    for (std::size_t i = 0; i < s.size(); ++i)
        for (std::size_t j = i + 1; j < s.size(); ++j)
            if (!p.comparable(s[i], s[j])) return false;
    return true;
}

/// up: apex below every other element of s. Returns the apex if s minus it
/// is an antichain.
inline std::optional<Index> fork_head_apex(const Poset& p, const std::vector<Index>& s, bool up) {
    for (Index a : s) {
        bool extremal = true;
        std::vector<Index> others;
        for (Index b : s) {
            if (b == a) continue;
            if (up ? !p.gt(b, a) : !p.gt(a, b)) {
                extremal = false;
                break;
            }
            others.push_back(b);
        }
        if (extremal && is_antichain(p, others)) return a;
    }
    return std::nullopt;
}

inline std::optional<ForkShape> try_fork(const Poset& p, bool up) {
    const std::size_t n = p.size();
    for (Index a = 0; a < n; ++a) {
        std::vector<Index> above, below;
        bool all = true;
        for (Index b = 0; b < n && all; ++b) {
            if (b == a) continue;
            if (p.gt(b, a))
                above.push_back(b);
            else if (p.gt(a, b))
                below.push_back(b);
            else
                all = false;
        }
        if (!all) continue;
        auto& head = up ? above : below;
        auto& tail = up ? below : above;
        if (is_antichain(p, head) && is_chain(p, tail))
            return ForkShape{up ? ForkClass::up_fork : ForkClass::down_fork, a, head, tail};
    }
    return std::nullopt;
}

}  // namespace detail

inline ForkShape fork_shape(const Poset& p) {
    if (auto f = detail::try_fork(p, true)) return *f;
    if (auto f = detail::try_fork(p, false)) return *f;

    const std::size_t n = p.size();
    std::vector<Index> linked, isolated;
    for (Index a = 0; a < n; ++a) {
        bool iso = true;
        for (Index b = 0; b < n && iso; ++b)
            if (b != a && p.comparable(a, b)) iso = false;
        (iso ? isolated : linked).push_back(a);
    }
    if (linked.empty()) {
        ForkShape s{ForkClass::shattered_up_fork, isolated.front(), {}, {}};
        s.rest.assign(isolated.begin() + 1, isolated.end());
        return s;
    }
    for (bool up : {true, false}) {
        if (auto apex = detail::fork_head_apex(p, linked, up)) {
            ForkShape s{up ? ForkClass::shattered_up_fork : ForkClass::shattered_down_fork, *apex, {}, isolated};
            for (Index b : linked)
                if (b != *apex) s.head.push_back(b);
            return s;
        }
    }
    return {};
}

inline ForkClass classify_fork(const Poset& p) { return fork_shape(p).cls; }

// ------------------------------------------------------- four-element kinds

enum class FourPoset { ball_and_chain, hook, dumbbells, saw, crown4, diamond };

inline const char* to_string(FourPoset k) {
    switch (k) {
    case FourPoset::ball_and_chain: return "ball_and_chain";
    case FourPoset::hook: return "hook";
    case FourPoset::dumbbells: return "dumbbells";
    case FourPoset::saw: return "saw";
    case FourPoset::crown4: return "crown4";
    case FourPoset::diamond: return "diamond";
    }
    return "?";
}

inline constexpr std::array<FourPoset, 6> all_four_posets{FourPoset::ball_and_chain, FourPoset::hook,
                                                          FourPoset::dumbbells,      FourPoset::saw,
                                                          FourPoset::crown4,         FourPoset::diamond};

namespace detail {

using Pattern = std::vector<std::pair<int, int>>;  // (i, j): position i > position j

inline bool matches_pattern(const Poset& p, const Seq& t, const Pattern& pat) {
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) {
            if (i == j) continue;
            bool want = false;
            for (auto& [u, v] : pat)
                if (u == i && v == j) want = true;
            if (p.gt(t[i], t[j]) != want) return false;
        }
    return true;
}

inline std::vector<Pattern> patterns(FourPoset k) {
    switch (k) {
    case FourPoset::ball_and_chain: return {{{0, 1}, {1, 2}, {0, 2}}};
    case FourPoset::hook: return {{{0, 1}, {1, 2}, {3, 2}, {0, 2}}, {{1, 0}, {2, 1}, {2, 3}, {2, 0}}};
    case FourPoset::dumbbells: return {{{0, 1}, {2, 3}}};
    case FourPoset::saw: return {{{0, 1}, {2, 1}, {2, 3}}};
    case FourPoset::crown4: return {{{0, 1}, {2, 1}, {2, 3}, {0, 3}}};
    case FourPoset::diamond: return {{{0, 1}, {0, 2}, {1, 3}, {2, 3}, {0, 3}}};
    }
    return {};
}

}  // namespace detail

/// Exact match on all six pairs of the four-element restriction.
inline bool is_four_poset(const Poset& p, FourPoset kind, const Seq& t) {
    if (t.size() != 4) return false;
    for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j)
            if (t[i] == t[j]) return false;
    for (auto& pat : detail::patterns(kind))
        if (detail::matches_pattern(p, t, pat)) return true;
    return false;
}

inline std::optional<Seq> find_four_poset(const Poset& p, FourPoset kind) {
    const std::size_t n = p.size();
    auto pats = detail::patterns(kind);
    Seq t(4);
    for (t[0] = 0; t[0] < n; ++t[0])
        for (t[1] = 0; t[1] < n; ++t[1]) {
            if (t[1] == t[0]) continue;
            for (t[2] = 0; t[2] < n; ++t[2]) {
                if (t[2] == t[0] || t[2] == t[1]) continue;
                for (t[3] = 0; t[3] < n; ++t[3]) {
                    if (t[3] == t[0] || t[3] == t[1] || t[3] == t[2]) continue;
                    for (auto& pat : pats)
                        if (detail::matches_pattern(p, t, pat)) return t;
                }
            }
        }
    return std::nullopt;
}

inline std::optional<std::pair<FourPoset, Seq>> find_forbidden_four_poset(const Poset& p) {
    for (FourPoset k : all_four_posets)
        if (auto t = find_four_poset(p, k)) return std::make_pair(k, *t);
    return std::nullopt;
}

// ---------------------------------------------------------------- report

struct StructureReport {
    std::vector<Seq> crowns;
    std::vector<Seq> diamonds;
    std::vector<Seq> chalices;
    std::vector<Seq> weak_cycles;  // in the transitive reduction
    std::vector<std::pair<FourPoset, Seq>> four_posets;
    ForkClass fork_class = ForkClass::neither;
};

/// First hit of each detector; one witness per four-element kind.
inline StructureReport analyze_structure(const Poset& p) {
    StructureReport r;
    if (auto c = find_crown(p)) r.crowns.push_back(*c);
    if (auto d = find_diamond(p)) r.diamonds.push_back(*d);
    Relation red = transitive_reduction(p);
    if (auto c = find_chalice_in(red)) r.chalices.push_back(*c);
    if (auto w = find_weak_cycle(red)) r.weak_cycles.push_back(*w);
    for (FourPoset k : all_four_posets)
        if (auto t = find_four_poset(p, k)) r.four_posets.emplace_back(k, *t);
    r.fork_class = classify_fork(p);
    return r;
}

}  // namespace sclat
