#pragma once

#include <algorithm>
#include <cctype>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "errors.hpp"
#include "relation.hpp"

namespace sclat {

/// Complete transitive preference stored as a rank per element
/// (0 = most preferred, ties share a rank, ranks consecutive).
class WeakOrder {
public:
    WeakOrder() = default;

    /// Ranks must already be consecutive from 0.
    WeakOrder(Labels labels, std::vector<int> ranks) : labels_(std::move(labels)), r_(std::move(ranks)) {}

    std::size_t size() const noexcept { return r_.size(); }
    const Labels& labels() const noexcept { return labels_; }
    int rank(Index i) const noexcept { return r_[i]; }
    const std::vector<int>& ranks() const noexcept { return r_; }

    /// a is weakly preferred to b.
    bool weak(Index a, Index b) const noexcept { return r_[a] <= r_[b]; }
    bool strict(Index a, Index b) const noexcept { return r_[a] < r_[b]; }
    bool indifferent(Index a, Index b) const noexcept { return r_[a] == r_[b]; }

    int levels() const noexcept {
        return r_.empty() ? 0 : *std::max_element(r_.begin(), r_.end()) + 1;
    }

    Relation as_relation() const {
        Relation r(labels_);
        for (Index a = 0; a < size(); ++a)
            for (Index b = 0; b < size(); ++b)
                if (weak(a, b)) r.set(a, b);
        return r;
    }

    friend bool operator==(const WeakOrder& l, const WeakOrder& r) { return l.r_ == r.r_; }
    friend bool operator<(const WeakOrder& l, const WeakOrder& r) { return l.r_ < r.r_; }

private:
    Labels labels_;
    std::vector<int> r_;
};

/// Renumbers arbitrary integer ranks to 0..k-1 preserving order.
/// Returns true if anything changed.
inline bool compact_ranks(std::vector<int>& ranks) {
    std::vector<int> vals(ranks);
    std::sort(vals.begin(), vals.end());
    vals.erase(std::unique(vals.begin(), vals.end()), vals.end());
    bool changed = false;
    for (int& r : ranks) {
        int c = static_cast<int>(std::lower_bound(vals.begin(), vals.end(), r) - vals.begin());
        if (c != r) changed = true;
        r = c;
    }
    return changed;
}

struct ValidatedOrder {
    WeakOrder order;
    bool compacted = false;  // input ranks were not consecutive from 0
};

inline ValidatedOrder validate_weak_order(const Labels& labels, const std::map<std::string, int>& ranks) {
    for (auto& [k, v] : ranks)
        if (std::find(labels->begin(), labels->end(), k) == labels->end()) throw UnknownElement(k);
    std::vector<int> r;
    for (auto& name : *labels) {
        auto it = ranks.find(name);
        if (it == ranks.end()) throw MissingElement(name);
        r.push_back(it->second);
    }
    bool changed = compact_ranks(r);
    return {WeakOrder(labels, std::move(r)), changed};
}

inline WeakOrder weak_order_from_ranks(const Labels& labels, std::vector<int> ranks) {
    if (ranks.size() != labels->size()) throw InputError("rank vector has the wrong length");
    compact_ranks(ranks);
    return WeakOrder(labels, std::move(ranks));
}

namespace detail {
inline std::string trim(const std::string& s) {
    auto b = s.find_first_not_of(" \t\r\n");
    if (b == std::string::npos) return {};
    auto e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
}
}  // namespace detail

/// Grammar: name (('>' | '~') name)*. '>' starts a new, less preferred level.
inline WeakOrder parse_ranking(const Labels& labels, const std::string& text) {
    std::vector<int> r(labels->size(), -1);
    int level = 0;
    std::string tok;
    auto flush = [&](char sep) {
        std::string name = detail::trim(tok);
        if (name.empty()) throw SyntaxError("empty element name in ranking \"" + text + "\"");
        auto it = std::find(labels->begin(), labels->end(), name);
        if (it == labels->end()) throw UnknownElement(name);
        Index i = static_cast<Index>(it - labels->begin());
        if (r[i] != -1) throw SyntaxError("element listed twice: " + name);
        r[i] = level;
        if (sep == '>') ++level;
        tok.clear();
    };
    for (char ch : text) {
        if (ch == '>' || ch == '~')
            flush(ch);
        else
            tok.push_back(ch);
    }
    flush('\0');
    for (Index i = 0; i < r.size(); ++i)
        if (r[i] == -1) throw MissingElement((*labels)[i]);
    return WeakOrder(labels, std::move(r));
}

inline WeakOrder parse_ranking(const Poset& p, const std::string& text) {
    return parse_ranking(p.labels(), text);
}

/// "w > x > y ~ z"; tied elements in index order.
inline std::string format_ranking(const WeakOrder& w) {
    std::string out;
    for (int lv = 0; lv < w.levels(); ++lv) {
        bool first = true;
        if (lv) out += " > ";
        for (Index i = 0; i < w.size(); ++i)
            if (w.rank(i) == lv) {
                if (!first) out += " ~ ";
                out += (*w.labels())[i];
                first = false;
            }
    }
    return out;
}

/// Nonempty list of weak orders over one ground set.
class Profile {
public:
    Profile() = default;
    Profile(std::vector<WeakOrder> members) : m_(std::move(members)) {
        if (m_.empty()) throw EmptyInput("profile must have at least one member");
        for (auto& w : m_)
            if (w.size() != m_.front().size()) throw InputError("profile members differ in size");
    }
    Profile(std::initializer_list<WeakOrder> members) : Profile(std::vector<WeakOrder>(members)) {}

    std::size_t size() const noexcept { return m_.size(); }
    const WeakOrder& operator[](std::size_t i) const { return m_[i]; }
    auto begin() const { return m_.begin(); }
    auto end() const { return m_.end(); }
    const std::vector<WeakOrder>& members() const noexcept { return m_; }
    std::size_t elements() const noexcept { return m_.front().size(); }

private:
    std::vector<WeakOrder> m_;
};

inline Profile parse_profile(const Labels& labels, const std::vector<std::string>& rankings) {
    std::vector<WeakOrder> m;
    for (auto& s : rankings) m.push_back(parse_ranking(labels, s));
    return Profile(std::move(m));
}

inline Profile parse_profile(const Poset& p, const std::vector<std::string>& rankings) {
    return parse_profile(p.labels(), rankings);
}

constexpr std::size_t max_enumerated_elements = 7;

/// Calls f(const std::vector<int>&) for every weak order on n elements, in
/// lexicographic order of the rank vector.
template <class F>
void for_each_weak_order(std::size_t n, F&& f) {
    if (n == 0) throw InputError("need at least one element");
    if (n > max_enumerated_elements) throw TooLarge("weak order enumeration limited to 7 elements");
    std::vector<int> r(n, 0);
    std::vector<int> used(n, 0);
    // Odometer over {0..n-1}^n keeping only surjections onto an initial segment.
    while (true) {
        std::fill(used.begin(), used.end(), 0);
        int mx = 0;
        for (int v : r) {
            used[v] = 1;
            mx = std::max(mx, v);
        }
        bool onto = true;
        for (int v = 0; v <= mx; ++v)
            if (!used[v]) {
                onto = false;
                break;
            }
        if (onto) f(static_cast<const std::vector<int>&>(r));
        std::size_t k = n;
        while (k > 0) {
            --k;
            if (++r[k] < static_cast<int>(n)) break;
            r[k] = 0;
            if (k == 0) return;
        }
    }
}

inline std::vector<WeakOrder> enumerate_weak_orders(const Labels& labels) {
    std::vector<WeakOrder> out;
    for_each_weak_order(labels->size(), [&](const std::vector<int>& r) { out.emplace_back(labels, r); });
    return out;
}

inline std::vector<WeakOrder> enumerate_weak_orders(const Poset& p) { return enumerate_weak_orders(p.labels()); }

/// Single-crossing dominance: hi S lo.
inline bool sc_dominates(const WeakOrder& hi, const WeakOrder& lo, const Poset& p) {
    const std::size_t n = p.size();
    for (Index x = 0; x < n; ++x)
        for (Index y = 0; y < n; ++y) {
            if (x == y || !p.geq(x, y)) continue;
            if (lo.weak(x, y) && !hi.weak(x, y)) return false;
            if (lo.strict(x, y) && !hi.strict(x, y)) return false;
        }
    return true;
}

}  // namespace sclat
