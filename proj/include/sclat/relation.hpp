#pragma once

#include <algorithm>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "errors.hpp"

namespace sclat {

using Seq = std::vector<Index>;

/// Square boolean matrix over a labelled ground set. No axioms assumed.
class Relation {
public:
    Relation() = default;
    explicit Relation(Labels labels)
        : labels_(std::move(labels)), n_(labels_ ? labels_->size() : 0), m_(n_ * n_, 0) {}

    std::size_t size() const noexcept { return n_; }
    const Labels& labels() const noexcept { return labels_; }
    const std::string& name(Index i) const { return (*labels_)[i]; }

    Index index_of(const std::string& s) const {
        auto it = std::find(labels_->begin(), labels_->end(), s);
        if (it == labels_->end()) throw UnknownElement(s);
        return static_cast<Index>(it - labels_->begin());
    }

    bool operator()(Index a, Index b) const noexcept { return m_[a * n_ + b] != 0; }
    void set(Index a, Index b, bool v = true) noexcept { m_[a * n_ + b] = v ? 1 : 0; }

    bool strict(Index a, Index b) const noexcept { return (*this)(a, b) && !(*this)(b, a); }
    bool ranked(Index a, Index b) const noexcept { return (*this)(a, b) || (*this)(b, a); }

    friend bool operator==(const Relation& l, const Relation& r) {
        if (l.n_ != r.n_ || l.m_ != r.m_) return false;
        return l.labels_ == r.labels_ || *l.labels_ == *r.labels_;
    }

    std::vector<std::pair<Index, Index>> pairs() const {
        std::vector<std::pair<Index, Index>> out;
        for (Index a = 0; a < n_; ++a)
            for (Index b = 0; b < n_; ++b)
                if ((*this)(a, b)) out.emplace_back(a, b);
        return out;
    }

private:
    Labels labels_;
    std::size_t n_ = 0;
    std::vector<std::uint8_t> m_;
};

inline bool same_ground(const Labels& a, const Labels& b) {
    return a == b || (a && b && *a == *b);
}

/// Warshall closure.
inline Relation transitive_closure(Relation r) {
    const std::size_t n = r.size();
    for (Index k = 0; k < n; ++k)
        for (Index i = 0; i < n; ++i) {
            if (!r(i, k)) continue;
            for (Index j = 0; j < n; ++j)
                if (r(k, j)) r.set(i, j);
        }
    return r;
}

/// A validated partial order. Construct through validate_poset.
class Poset {
public:
    Poset() = default;

    std::size_t size() const noexcept { return r_.size(); }
    const Labels& labels() const noexcept { return r_.labels(); }
    const std::string& name(Index i) const { return r_.name(i); }
    Index index_of(const std::string& s) const { return r_.index_of(s); }
    const Relation& relation() const noexcept { return r_; }

    bool geq(Index a, Index b) const noexcept { return r_(a, b); }
    bool gt(Index a, Index b) const noexcept { return a != b && r_(a, b); }
    bool comparable(Index a, Index b) const noexcept { return r_(a, b) || r_(b, a); }

    friend bool operator==(const Poset& l, const Poset& r) { return l.r_ == r.r_; }

    /// Skips validation. Only for relations known to be partial orders.
    static Poset trusted(Relation r) {
        Poset p;
        p.r_ = std::move(r);
        return p;
    }

private:
    Relation r_;
};

inline Poset validate_poset(const Relation& r) {
    const std::size_t n = r.size();
    if (n == 0) throw InputError("poset needs at least one element");
    for (Index a = 0; a < n; ++a)
        if (!r(a, a))
            throw PosetAxiomError(AxiomViolation::NotReflexive, {r.name(a)},
                                  "not reflexive at " + r.name(a));
    for (Index a = 0; a < n; ++a)
        for (Index b = a + 1; b < n; ++b)
            if (r(a, b) && r(b, a))
                throw PosetAxiomError(AxiomViolation::NotAntisymmetric, {r.name(a), r.name(b)},
                                      "not antisymmetric: " + r.name(a) + ", " + r.name(b));
    for (Index a = 0; a < n; ++a)
        for (Index b = 0; b < n; ++b) {
            if (!r(a, b)) continue;
            for (Index c = 0; c < n; ++c)
                if (r(b, c) && !r(a, c))
                    throw PosetAxiomError(
                        AxiomViolation::NotTransitive, {r.name(a), r.name(b), r.name(c)},
                        "not transitive: " + r.name(a) + " >= " + r.name(b) + " >= " + r.name(c));
        }
    return Poset::trusted(r);
}

/// Builds a poset from strict "a above b" pairs, closing reflexively and
/// transitively.
inline Poset poset_from_covers(const std::vector<std::string>& names,
                               const std::vector<std::pair<std::string, std::string>>& covers) {
    Relation r(make_labels(names));
    for (Index i = 0; i < r.size(); ++i) r.set(i, i);
    for (auto& [a, b] : covers) r.set(r.index_of(a), r.index_of(b));
    return validate_poset(transitive_closure(std::move(r)));
}

/// Cover relation of the strict part. No loops.
inline Relation transitive_reduction(const Poset& p) {
    const std::size_t n = p.size();
    Relation red(p.labels());
    for (Index a = 0; a < n; ++a)
        for (Index b = 0; b < n; ++b) {
            if (!p.gt(a, b)) continue;
            bool covers = true;
            for (Index c = 0; c < n && covers; ++c)
                if (p.gt(a, c) && p.gt(c, b)) covers = false;
            if (covers) red.set(a, b);
        }
    return red;
}

/// Reflexive transitive closure of a cover relation.
inline Relation reflexive_closure_of(const Relation& covers) {
    Relation r = covers;
    for (Index i = 0; i < r.size(); ++i) r.set(i, i);
    return transitive_closure(std::move(r));
}

inline Relation transpose(const Relation& r) {
    Relation t(r.labels());
    for (Index a = 0; a < r.size(); ++a)
        for (Index b = 0; b < r.size(); ++b)
            if (r(a, b)) t.set(b, a);
    return t;
}

inline Poset dual(const Poset& p) { return Poset::trusted(transpose(p.relation())); }

inline bool is_complete(const Poset& p) {
    for (Index a = 0; a < p.size(); ++a)
        for (Index b = a + 1; b < p.size(); ++b)
            if (!p.comparable(a, b)) return false;
    return true;
}

/// Restriction of p to the listed elements, in the listed order.
inline Poset induced_subposet(const Poset& p, const std::vector<Index>& keep) {
    std::vector<std::string> names;
    for (Index i : keep) names.push_back(p.name(i));
    Relation r(make_labels(std::move(names)));
    for (Index a = 0; a < keep.size(); ++a)
        for (Index b = 0; b < keep.size(); ++b)
            if (p.geq(keep[a], keep[b])) r.set(a, b);
    return Poset::trusted(std::move(r));
}

}  // namespace sclat
