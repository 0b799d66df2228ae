#pragma once

// Random instance generators for the property and unit tests.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <random>
#include <string>
#include <vector>

#include "sclat/sclat.hpp"

namespace sclat::gen {

using Rng = std::mt19937_64;

inline std::vector<std::string> letters(std::size_t n) {
    std::vector<std::string> out;
    for (std::size_t i = 0; i < n; ++i) out.push_back(std::string(1, static_cast<char>('a' + i)));
    return out;
}

inline std::size_t below(Rng& rng, std::size_t n) { return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng); }

inline bool coin(Rng& rng, double p) { return std::bernoulli_distribution(p)(rng); }

/// Random DAG over a shuffled topological order, then closed. Density varies
/// per draw so chains, antichains and everything between show up.
inline Poset gen_poset(Rng& rng, std::size_t n) {
    std::vector<Index> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    const double density = std::uniform_real_distribution<double>(0.0, 0.8)(rng);
    Relation r(make_labels(letters(n)));
    for (Index i = 0; i < n; ++i) r.set(i, i);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (coin(rng, density)) r.set(perm[i], perm[j]);
    return Poset::trusted(transitive_closure(r));
}

inline WeakOrder gen_weak_order(Rng& rng, const Labels& labels) {
    const std::size_t n = labels->size();
    const std::size_t levels = 1 + below(rng, n);
    std::vector<int> ranks(n);
    for (auto& r : ranks) r = static_cast<int>(below(rng, levels));
    return weak_order_from_ranks(labels, ranks);
}

inline Profile gen_profile(Rng& rng, const Labels& labels, std::size_t max_members = 3) {
    std::vector<WeakOrder> m;
    const std::size_t k = 1 + below(rng, max_members);
    for (std::size_t i = 0; i < k; ++i) m.push_back(gen_weak_order(rng, labels));
    return Profile(m);
}

/// Arbitrary relation, reflexive or not.
inline Relation gen_relation(Rng& rng, const Labels& labels, double p) {
    Relation r(labels);
    for (Index a = 0; a < labels->size(); ++a)
        for (Index b = 0; b < labels->size(); ++b)
            if (coin(rng, p)) r.set(a, b);
    return r;
}

/// Subrelation of a random weak order: always Suzumura-consistent.
inline Relation gen_consistent_relation(Rng& rng, const Labels& labels) {
    WeakOrder w = gen_weak_order(rng, labels);
    const double keep = std::uniform_real_distribution<double>(0.1, 0.9)(rng);
    Relation r(labels);
    for (Index a = 0; a < labels->size(); ++a)
        for (Index b = 0; b < labels->size(); ++b)
            if (w.weak(a, b) && coin(rng, keep)) r.set(a, b);
    return r;
}


/// Random fork or shattered fork on n elements, relabelled at random.
inline Poset gen_fork_poset(Rng& rng, std::size_t n) {
    std::vector<Index> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    const bool shattered = coin(rng, 0.5), up = coin(rng, 0.5);
    const Index apex = perm[0];
    const std::size_t head = below(rng, n);  // elements in the head besides the apex
    Relation r(make_labels(letters(n)));
    for (Index i = 0; i < n; ++i) r.set(i, i);
    auto above = [&](Index hi, Index lo) { up ? r.set(hi, lo) : r.set(lo, hi); };
    for (std::size_t i = 1; i <= head; ++i) above(perm[i], apex);
    if (!shattered) {
        // The rest is a chain on the other side of the apex.
        for (std::size_t i = head + 1; i < n; ++i) {
            above(apex, perm[i]);
            for (std::size_t j = i + 1; j < n; ++j) above(perm[i], perm[j]);
            for (std::size_t h = 1; h <= head; ++h) above(perm[h], perm[i]);
        }
    }
    return Poset::trusted(transitive_closure(r));
}

/// Certainty equivalents of a subjective expected utility maximiser, rounded
/// down to the prize grid. Monotone, and constants map to themselves.
inline CEPreference gen_seu(Rng& rng, const ActSpace& s) {
    const std::size_t k = s.states().size();
    std::vector<double> mu(k);
    double total = 0;
    for (auto& m : mu) {
        m = coin(rng, 0.25) ? 0.0 : std::uniform_real_distribution<double>(0.05, 1.0)(rng);
        total += m;
    }
    if (total == 0) {
        mu[below(rng, k)] = 1;
        total = 1;
    }
    for (auto& m : mu) m /= total;
    // Increasing utility on the grid.
    std::vector<double> u(s.prizes().size());
    double acc = 0;
    for (auto& v : u) v = (acc += std::uniform_real_distribution<double>(0.1, 1.0)(rng));
    std::vector<double> ce(s.size());
    for (Index i = 0; i < s.size(); ++i) {
        double eu = 0;
        for (std::size_t w = 0; w < k; ++w) eu += mu[w] * u[s.prize_index(s.act(i).payoff[w])];
        std::size_t best = 0;
        for (std::size_t p = 0; p < u.size(); ++p)
            if (u[p] <= eu + 1e-12) best = p;
        ce[i] = s.is_constant(i) ? s.act(i).payoff.front() : s.prizes()[best];
    }
    return CEPreference(s, ce);
}

/// Random two- or three-state act space with a few non-constant acts.
inline ActSpace gen_act_space(Rng& rng) {
    const std::size_t states = 2 + below(rng, 2);
    std::vector<double> prizes;
    const std::size_t np = 2 + below(rng, 3);
    for (std::size_t i = 0; i < np; ++i) prizes.push_back(static_cast<double>(10 * i));
    std::vector<std::string> st;
    for (std::size_t i = 0; i < states; ++i) st.push_back("s" + std::to_string(i));
    std::vector<Act> acts;
    const std::size_t want = 1 + below(rng, 4);
    for (int tries = 0; acts.size() < want && tries < 50; ++tries) {
        Act a{"A" + std::to_string(acts.size()), {}};
        for (std::size_t w = 0; w < states; ++w) a.payoff.push_back(prizes[below(rng, np)]);
        bool constant = std::all_of(a.payoff.begin(), a.payoff.end(), [&](double v) { return v == a.payoff[0]; });
        bool dup = std::any_of(acts.begin(), acts.end(), [&](const Act& b) { return b.payoff == a.payoff; });
        if (!constant && !dup) acts.push_back(a);
    }
    return ActSpace(st, prizes, acts);
}

}  // namespace sclat::gen
