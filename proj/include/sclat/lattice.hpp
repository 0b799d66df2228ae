#pragma once

#include <algorithm>
#include <optional>
#include <queue>
#include <string>
#include <vector>

#include "chain.hpp"
#include "preference.hpp"
#include "relation.hpp"
#include "structure.hpp"

namespace sclat {

// ---------------------------------------------------------- upper bounds

/// cand S m for every member m.
inline bool is_upper_bound(const WeakOrder& cand, const Profile& P, const Poset& p) {
    for (const auto& m : P)
        if (!sc_dominates(cand, m, p)) return false;
    return true;
}

/// Same test through chains: cand keeps every chain weakly and every strict
/// chain strictly.
inline bool is_upper_bound_by_chains(const WeakOrder& cand, const ChainDigraph& g) {
    const Poset& p = g.poset();
    for (Index x = 0; x < p.size(); ++x)
        for (Index y = 0; y < p.size(); ++y) {
            if (x == y || !p.geq(x, y)) continue;
            if (g.reaches(x, y) && !cand.weak(x, y)) return false;
            if (g.reaches_strictly(x, y) && !cand.strict(x, y)) return false;
        }
    return true;
}

inline bool is_upper_bound_by_chains(const WeakOrder& cand, const Profile& P, const Poset& p) {
    return is_upper_bound_by_chains(cand, ChainDigraph(P, p));
}

inline bool is_lower_bound(const WeakOrder& cand, const Profile& P, const Poset& p) {
    for (const auto& m : P)
        if (!sc_dominates(m, cand, p)) return false;
    return true;
}

// ------------------------------------------------------------------ core

/// The relation forced on comparable pairs. For x >= y:
/// x core y iff a chain x -> y exists; y core x iff no strict chain x -> y.
/// Incomparable pairs are left unranked.
struct CoreRelation {
    Relation rel;
    std::vector<std::uint8_t> chain;   // chain[x*n+y] for x >= y
    std::vector<std::uint8_t> schain;  // strict chain

    std::size_t size() const noexcept { return rel.size(); }
    bool has_chain(Index x, Index y) const noexcept { return chain[x * size() + y]; }
    bool has_strict_chain(Index x, Index y) const noexcept { return schain[x * size() + y]; }
};

inline CoreRelation core_relation(const ChainDigraph& g) {
    const Poset& p = g.poset();
    const std::size_t n = p.size();
    CoreRelation c{Relation(p.labels()), std::vector<std::uint8_t>(n * n), std::vector<std::uint8_t>(n * n)};
    for (Index x = 0; x < n; ++x) {
        c.rel.set(x, x);
        for (Index y = 0; y < n; ++y) {
            if (x == y || !p.geq(x, y)) continue;
            bool w = g.reaches(x, y), s = g.reaches_strictly(x, y);
            c.chain[x * n + y] = w;
            c.schain[x * n + y] = s;
            c.rel.set(x, y, w);
            c.rel.set(y, x, !s);
        }
    }
    return c;
}

inline CoreRelation core_relation(const Profile& P, const Poset& p) { return core_relation(ChainDigraph(P, p)); }

/// cand agrees with the core on every comparable pair, in both directions.
inline bool matches_core(const WeakOrder& cand, const CoreRelation& c, const Poset& p) {
    for (Index x = 0; x < p.size(); ++x)
        for (Index y = x + 1; y < p.size(); ++y) {
            if (!p.comparable(x, y)) continue;
            if (cand.weak(x, y) != c.rel(x, y) || cand.weak(y, x) != c.rel(y, x)) return false;
        }
    return true;
}

inline bool is_minimum_upper_bound(const WeakOrder& cand, const Profile& P, const Poset& p) {
    return matches_core(cand, core_relation(P, p), p);
}

// -------------------------------------------------------------- suzumura

namespace detail {

/// Shortest path a -> b in rel, index tie-break.
inline Seq rel_path(const Relation& rel, Index a, Index b) {
    const std::size_t n = rel.size();
    std::vector<Index> parent(n, n);
    std::vector<Index> q{a};
    parent[a] = a;
    for (std::size_t i = 0; i < q.size(); ++i) {
        Index u = q[i];
        if (u == b) break;
        for (Index v = 0; v < n; ++v)
            if (v != u && rel(u, v) && parent[v] == n) {
                parent[v] = u;
                q.push_back(v);
            }
    }
    Seq path;
    for (Index v = b;; v = parent[v]) {
        path.push_back(v);
        if (v == a) break;
    }
    return Seq(path.rbegin(), path.rend());
}

}  // namespace detail

/// A sequence a = w1 rel w2 ... rel wK = b with b strictly above a in rel,
/// or nothing if rel is Suzumura-consistent.
inline std::optional<Seq> suzumura_violation(const Relation& rel) {
    Relation t = transitive_closure(rel);
    for (Index a = 0; a < rel.size(); ++a)
        for (Index b = 0; b < rel.size(); ++b)
            if (a != b && t(a, b) && rel.strict(b, a)) return detail::rel_path(rel, a, b);
    return std::nullopt;
}

inline bool is_suzumura_consistent(const Relation& rel) { return !suzumura_violation(rel); }

/// Canonical complete transitive extension: close, condense mutually
/// reachable classes, order classes by Kahn's algorithm taking the class with
/// the smallest element index first, one rank per class.
inline WeakOrder suzumura_extend(const Relation& rel) {
    if (auto w = suzumura_violation(rel)) throw NotConsistent(*w, "relation is not Suzumura-consistent");
    const std::size_t n = rel.size();
    Relation t = transitive_closure(rel);
    std::vector<Index> cls(n, n);
    std::vector<Index> rep;  // smallest member of each class
    for (Index a = 0; a < n; ++a) {
        if (cls[a] != n) continue;
        cls[a] = rep.size();
        for (Index b = a + 1; b < n; ++b)
            if (t(a, b) && t(b, a)) cls[b] = rep.size();
        rep.push_back(a);
    }
    const std::size_t k = rep.size();
    std::vector<std::vector<std::uint8_t>> out(k, std::vector<std::uint8_t>(k, 0));
    std::vector<int> indeg(k, 0);
    for (Index a = 0; a < n; ++a)
        for (Index b = 0; b < n; ++b)
            if (t(a, b) && cls[a] != cls[b] && !out[cls[a]][cls[b]]) {
                out[cls[a]][cls[b]] = 1;
                ++indeg[cls[b]];
            }
    std::priority_queue<Index, std::vector<Index>, std::greater<>> ready;  // class ids ordered by rep
    for (Index c = 0; c < k; ++c)
        if (!indeg[c]) ready.push(c);
    std::vector<int> class_rank(k, -1);
    int next = 0;
    while (!ready.empty()) {
        Index c = ready.top();
        ready.pop();
        class_rank[c] = next++;
        for (Index d = 0; d < k; ++d)
            if (out[c][d] && --indeg[d] == 0) ready.push(d);
    }
    std::vector<int> ranks(n);
    for (Index a = 0; a < n; ++a) ranks[a] = class_rank[cls[a]];
    return WeakOrder(rel.labels(), std::move(ranks));
}

/// rel(a,b) implies ext.weak(a,b); strict rel pairs stay strict.
inline bool extends(const WeakOrder& ext, const Relation& rel) {
    for (Index a = 0; a < rel.size(); ++a)
        for (Index b = 0; b < rel.size(); ++b) {
            if (rel(a, b) && !ext.weak(a, b)) return false;
            if (rel.strict(a, b) && !ext.strict(a, b)) return false;
        }
    return true;
}

// ------------------------------------------------------------ join, meet

/// The canonical minimum upper bound, or nothing. On failure `witness`
/// receives the offending sequence of the core relation.
inline std::optional<WeakOrder> try_join(const Profile& P, const Poset& p, Seq* witness = nullptr) {
    CoreRelation c = core_relation(P, p);
    if (auto w = suzumura_violation(c.rel)) {
        if (witness) *witness = *w;
        return std::nullopt;
    }
    return suzumura_extend(c.rel);
}

inline std::optional<WeakOrder> try_meet(const Profile& P, const Poset& p, Seq* witness = nullptr) {
    return try_join(P, dual(p), witness);
}

namespace detail {
inline std::string format_seq(const Poset& p, const Seq& s) {
    std::string out = "(";
    for (std::size_t i = 0; i < s.size(); ++i) out += (i ? "," : "") + p.name(s[i]);
    return out + ")";
}
}  // namespace detail

inline WeakOrder join(const Profile& P, const Poset& p) {
    Seq w;
    if (auto j = try_join(P, p, &w)) return *j;
    throw NoJoin(w, "no minimum upper bound; core relation cycles through " + detail::format_seq(p, w));
}

inline WeakOrder meet(const Profile& P, const Poset& p) {
    Seq w;
    if (auto m = try_meet(P, p, &w)) return *m;
    throw NoMeet(w, "no maximum lower bound; dual core relation cycles through " + detail::format_seq(p, w));
}

inline bool is_maximum_lower_bound(const WeakOrder& cand, const Profile& P, const Poset& p) {
    return is_minimum_upper_bound(cand, P, dual(p));
}

// ------------------------------------------------ upper bound avoiding x, y

/// An upper bound with y strictly above x (strict = false) or y weakly above
/// x (strict = true). Requires x >= y and no chain (strict chain) x -> y.
inline WeakOrder upper_bound_avoiding(const Profile& P, const Poset& p, Index x, Index y, bool strict) {
    if (!p.geq(x, y)) throw PreconditionFailed("upper_bound_avoiding needs x >= y");
    ChainDigraph g(P, p);
    const std::size_t n = p.size();
    if (strict ? g.reaches_strictly(x, y) : g.reaches(x, y))
        throw PreconditionFailed(std::string(strict ? "strict " : "") + "chain exists from " + p.name(x) +
                                 " to " + p.name(y));

    Relation tri(p.labels());
    for (Index z = 0; z < n; ++z)
        for (Index w = 0; w < n; ++w)
            if (p.gt(z, w) && g.reaches(z, w)) tri.set(z, w);

    const bool weak_case = !g.reaches(x, y);
    if (weak_case) {
        if (x != y) tri.set(y, x);
    } else {
        // Reverse every step that lies on some chain from x to y.
        for (Index z = 0; z < n; ++z)
            for (Index w = 0; w < n; ++w)
                if (p.gt(w, z) && g.reaches(x, w) && g.reaches(w, z) && g.reaches(z, y)) tri.set(z, w);
    }
    WeakOrder out = suzumura_extend(tri);
    bool ok = is_upper_bound(out, P, p) && (strict ? out.weak(y, x) : out.strict(y, x));
    if (!ok) throw InternalSearchExhausted("upper_bound_avoiding produced an invalid order");
    return out;
}

// ---------------------------------------------------------------- status

enum class LatticeKind { complete_lattice, pre_lattice, none };

inline const char* to_string(LatticeKind k) {
    switch (k) {
    case LatticeKind::complete_lattice: return "complete_lattice";
    case LatticeKind::pre_lattice: return "pre_lattice";
    case LatticeKind::none: return "none";
    }
    return "?";
}

struct LatticeStatus {
    LatticeKind kind = LatticeKind::none;
    std::string witness_kind;  // "", "incomparable", "crown", "diamond"
    Seq witness;
};

inline LatticeStatus lattice_status(const Poset& p) {
    if (is_complete(p)) return {LatticeKind::complete_lattice, "", {}};
    if (auto c = find_crown(p)) return {LatticeKind::none, "crown", *c};
    if (auto d = find_diamond(p)) return {LatticeKind::none, "diamond", *d};
    for (Index a = 0; a < p.size(); ++a)
        for (Index b = a + 1; b < p.size(); ++b)
            if (!p.comparable(a, b)) return {LatticeKind::pre_lattice, "incomparable", {a, b}};
    return {};
}

}  // namespace sclat
