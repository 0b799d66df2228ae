#pragma once

#include <optional>
#include <string>
#include <vector>

#include "preference.hpp"
#include "relation.hpp"

namespace sclat {

/// Length-2 P-chain building blocks plus precomputed reachability.
///
/// Def. of a P-chain allows repeated elements, but a repeat can only follow
/// steps that stay at one element (the order is antisymmetric), and those
/// steps are self-loops. Plain reachability therefore answers every query.
class ChainDigraph {
public:
    ChainDigraph(const Profile& P, const Poset& p) : p_(p), n_(p.size()), edge_(n_ * n_), strict_(n_ * n_) {
        if (P.elements() != n_) throw InputError("profile and poset differ in size");
        for (Index a = 0; a < n_; ++a)
            for (Index b = 0; b < n_; ++b) {
                if (!p.geq(a, b)) continue;
                for (const auto& m : P) {
                    if (m.weak(a, b)) edge_[a * n_ + b] = 1;
                    if (m.strict(a, b)) strict_[a * n_ + b] = 1;
                }
            }
        reach_.assign(n_ * n_, 0);
        sreach_.assign(n_ * n_, 0);
        for (Index s = 0; s < n_; ++s) layered_bfs(s);
    }

    std::size_t size() const noexcept { return n_; }
    const Poset& poset() const noexcept { return p_; }

    bool edge(Index a, Index b) const noexcept { return edge_[a * n_ + b]; }
    bool strict_edge(Index a, Index b) const noexcept { return strict_[a * n_ + b]; }

    /// Unchecked reachability (weak includes the trivial chain a -> a).
    bool reaches(Index a, Index b) const noexcept { return reach_[a * n_ + b]; }
    bool reaches_strictly(Index a, Index b) const noexcept { return sreach_[a * n_ + b]; }

    void require_comparable(Index from, Index to) const {
        if (!p_.geq(from, to)) throw NotComparable(p_.name(from), p_.name(to));
    }

private:
    // States (v, seen_strict); a state id is 2v + flag.
    void layered_bfs(Index s) {
        std::vector<std::uint8_t> seen(2 * n_, 0);
        std::vector<Index> q{2 * s};
        seen[2 * s] = 1;
        for (std::size_t i = 0; i < q.size(); ++i) {
            Index u = q[i] / 2, f = q[i] % 2;
            for (Index v = 0; v < n_; ++v) {
                if (!edge(u, v)) continue;
                Index nf = f | (strict_edge(u, v) ? 1 : 0);
                if (!seen[2 * v + nf]) {
                    seen[2 * v + nf] = 1;
                    q.push_back(2 * v + nf);
                }
            }
        }
        for (Index v = 0; v < n_; ++v) {
            reach_[s * n_ + v] = seen[2 * v] || seen[2 * v + 1];
            sreach_[s * n_ + v] = seen[2 * v + 1];
        }
    }

    Poset p_;
    std::size_t n_;
    std::vector<std::uint8_t> edge_, strict_, reach_, sreach_;
};

inline ChainDigraph build_chain_digraph(const Profile& P, const Poset& p) { return ChainDigraph(P, p); }

inline bool has_p_chain(const ChainDigraph& g, Index from, Index to) {
    g.require_comparable(from, to);
    return g.reaches(from, to);
}

inline bool has_strict_p_chain(const ChainDigraph& g, Index from, Index to) {
    g.require_comparable(from, to);
    return g.reaches_strictly(from, to);
}

/// Chains that climb the order: queries on the dual.
inline bool has_reverse_p_chain(const Profile& P, const Poset& p, Index from, Index to, bool strict) {
    if (!p.geq(to, from)) throw NotComparable(p.name(from), p.name(to));
    ChainDigraph g(P, dual(p));
    return strict ? g.reaches_strictly(from, to) : g.reaches(from, to);
}

/// Shortest witness; BFS over (element, seen-strict) with neighbours in
/// index order.
inline std::optional<Seq> witness_chain(const ChainDigraph& g, Index from, Index to, bool strict) {
    g.require_comparable(from, to);
    const std::size_t n = g.size();
    const Index none = 2 * n;
    std::vector<Index> parent(2 * n, none);
    std::vector<Index> q{2 * from};
    parent[2 * from] = 2 * from;
    for (std::size_t i = 0; i < q.size(); ++i) {
        Index u = q[i] / 2, f = q[i] % 2;
        if (u == to && (f || !strict)) {
            Seq path;
            for (Index st = q[i];; st = parent[st]) {
                path.push_back(st / 2);
                if (parent[st] == st) break;
            }
            return Seq(path.rbegin(), path.rend());
        }
        for (Index v = 0; v < n; ++v) {
            if (v == u || !g.edge(u, v)) continue;
            Index ns = 2 * v + (f | (g.strict_edge(u, v) ? 1 : 0));
            if (parent[ns] == none) {
                parent[ns] = q[i];
                q.push_back(ns);
            }
        }
    }
    return std::nullopt;
}

/// Checks the chain definition directly on the profile.
inline bool is_p_chain(const Profile& P, const Poset& p, const Seq& w, bool strict) {
    if (w.empty()) return false;
    bool any_strict = false;
    for (std::size_t k = 0; k + 1 < w.size(); ++k) {
        if (!p.geq(w[k], w[k + 1])) return false;
        bool weak = false;
        for (const auto& m : P) {
            if (m.weak(w[k], w[k + 1])) weak = true;
            if (m.strict(w[k], w[k + 1])) any_strict = true;
        }
        if (!weak) return false;
    }
    return !strict || any_strict;
}

}  // namespace sclat
