#pragma once

#include <algorithm>
#include <cmath>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "errors.hpp"
#include "preference.hpp"
#include "relation.hpp"

namespace sclat {

struct Act {
    std::string name;
    std::vector<double> payoff;  // one prize per state
};

/// Finite states, a finite sorted prize grid and acts mapping states to
/// prizes. Every constant act is present; missing ones are added as "c<prize>".
class ActSpace {
public:
    ActSpace(std::vector<std::string> states, std::vector<double> prizes, std::vector<Act> acts)
        : states_(std::move(states)), prizes_(std::move(prizes)), acts_(std::move(acts)) {
        if (states_.empty()) throw EmptyInput("act space needs at least one state");
        if (prizes_.empty()) throw EmptyInput("act space needs at least one prize");
        for (std::size_t i = 1; i < prizes_.size(); ++i)
            if (!(prizes_[i - 1] < prizes_[i])) throw InputError("prizes must be strictly increasing");
        for (auto& a : acts_) {
            if (a.payoff.size() != states_.size()) throw InputError("act " + a.name + " has the wrong number of states");
            for (double v : a.payoff) prize_index(v);
        }
        for (std::size_t i = 0; i < acts_.size(); ++i)
            for (std::size_t j = i + 1; j < acts_.size(); ++j) {
                if (acts_[i].name == acts_[j].name) throw InputError("duplicate act name " + acts_[i].name);
                if (acts_[i].payoff == acts_[j].payoff)
                    throw InputError("acts " + acts_[i].name + " and " + acts_[j].name + " are the same function");
            }
        for (double v : prizes_) {
            bool present = std::any_of(acts_.begin(), acts_.end(), [&](const Act& a) {
                return std::all_of(a.payoff.begin(), a.payoff.end(), [&](double x) { return x == v; });
            });
            if (!present) {
                std::ostringstream os;
                os << "c" << v;
                acts_.push_back({os.str(), std::vector<double>(states_.size(), v)});
            }
        }
        std::vector<std::string> names;
        for (auto& a : acts_) names.push_back(a.name);
        labels_ = make_labels(std::move(names));
    }

    std::size_t size() const noexcept { return acts_.size(); }
    const Labels& labels() const noexcept { return labels_; }
    const std::vector<std::string>& states() const noexcept { return states_; }
    const std::vector<double>& prizes() const noexcept { return prizes_; }
    const Act& act(Index i) const { return acts_[i]; }

    Index index_of(const std::string& name) const {
        for (Index i = 0; i < acts_.size(); ++i)
            if (acts_[i].name == name) return i;
        throw UnknownElement(name);
    }

    bool is_constant(Index i) const {
        const auto& p = acts_[i].payoff;
        return std::all_of(p.begin(), p.end(), [&](double v) { return v == p.front(); });
    }

    Index constant_act(double prize) const {
        for (Index i = 0; i < acts_.size(); ++i)
            if (is_constant(i) && acts_[i].payoff.front() == prize) return i;
        throw InputError("no constant act for this prize");
    }

    std::size_t prize_index(double v) const {
        auto it = std::find(prizes_.begin(), prizes_.end(), v);
        if (it == prizes_.end()) throw InputError("value is not on the prize grid");
        return static_cast<std::size_t>(it - prizes_.begin());
    }

private:
    std::vector<std::string> states_;
    std::vector<double> prizes_;
    std::vector<Act> acts_;
    Labels labels_;
};

/// Certainty equivalent per act, on the prize grid; constants map to
/// themselves.
class CEPreference {
public:
    CEPreference(const ActSpace& s, std::vector<double> ce) : ce_(std::move(ce)) {
        if (ce_.size() != s.size()) throw InputError("certainty equivalent map has the wrong size");
        for (Index i = 0; i < ce_.size(); ++i) {
            s.prize_index(ce_[i]);
            if (s.is_constant(i) && ce_[i] != s.act(i).payoff.front())
                throw InputError("constant act " + s.act(i).name + " must be its own certainty equivalent");
        }
    }

    /// Non-constant acts by name; constants are filled in.
    static CEPreference from_map(const ActSpace& s, const std::map<std::string, double>& ce) {
        std::vector<double> v(s.size());
        for (auto& [k, val] : ce) s.index_of(k);
        for (Index i = 0; i < s.size(); ++i) {
            if (s.is_constant(i)) {
                auto it = ce.find(s.act(i).name);
                v[i] = it == ce.end() ? s.act(i).payoff.front() : it->second;
                continue;
            }
            auto it = ce.find(s.act(i).name);
            if (it == ce.end()) throw MissingElement(s.act(i).name);
            v[i] = it->second;
        }
        return CEPreference(s, std::move(v));
    }

    double ce(Index i) const { return ce_[i]; }
    const std::vector<double>& values() const noexcept { return ce_; }
    std::size_t size() const noexcept { return ce_.size(); }
    friend bool operator==(const CEPreference& a, const CEPreference& b) { return a.ce_ == b.ce_; }

private:
    std::vector<double> ce_;
};

/// X over Y iff ce(X) >= ce(Y).
inline WeakOrder to_weak_order(const CEPreference& p, const ActSpace& s) {
    std::vector<int> r(s.size());
    for (Index i = 0; i < s.size(); ++i) r[i] = -static_cast<int>(s.prize_index(p.ce(i)));
    return weak_order_from_ranks(s.labels(), std::move(r));
}

/// X >= Y iff X = Y, or X constant and Y not, or both constant and X > Y.
inline Poset induced_act_order(const ActSpace& s) {
    Relation r(s.labels());
    for (Index x = 0; x < s.size(); ++x)
        for (Index y = 0; y < s.size(); ++y) {
            bool cx = s.is_constant(x), cy = s.is_constant(y);
            if (x == y || (cx && !cy) || (cx && cy && s.act(x).payoff.front() > s.act(y).payoff.front()))
                r.set(x, y);
        }
    return Poset::trusted(std::move(r));
}

/// For every act X and constant C: C weakly (strictly) preferred to X under
/// lo implies the same under hi.
inline bool more_ambiguity_averse(const CEPreference& hi, const CEPreference& lo, const ActSpace& s) {
    for (Index x = 0; x < s.size(); ++x)
        for (Index c = 0; c < s.size(); ++c) {
            if (!s.is_constant(c)) continue;
            double cv = s.act(c).payoff.front();
            if (lo.ce(x) <= cv && !(hi.ce(x) <= cv)) return false;
            if (lo.ce(x) < cv && !(hi.ce(x) < cv)) return false;
        }
    return true;
}

/// Pointwise minimum certainty equivalent.
inline CEPreference maxmin_preference(const std::vector<CEPreference>& P, const ActSpace& s) {
    if (P.empty()) throw EmptyInput("maxmin needs at least one preference");
    std::vector<double> v = P.front().values();
    for (auto& m : P)
        for (Index i = 0; i < v.size(); ++i) v[i] = std::min(v[i], m.ce(i));
    return CEPreference(s, std::move(v));
}

/// Pointwise maximum certainty equivalent.
inline CEPreference maxmax_preference(const std::vector<CEPreference>& P, const ActSpace& s) {
    if (P.empty()) throw EmptyInput("needs at least one preference");
    std::vector<double> v = P.front().values();
    for (auto& m : P)
        for (Index i = 0; i < v.size(); ++i) v[i] = std::max(v[i], m.ce(i));
    return CEPreference(s, std::move(v));
}

/// target is ordinally represented by X -> min over P of ce(X).
inline bool is_maxmin_representation(const std::vector<CEPreference>& P, const WeakOrder& target,
                                      const ActSpace& s) {
    CEPreference m = maxmin_preference(P, s);
    for (Index x = 0; x < s.size(); ++x)
        for (Index y = 0; y < s.size(); ++y)
            if (target.weak(x, y) != (m.ce(x) >= m.ce(y))) return false;
    return true;
}

inline bool is_maxmin_representation(const std::vector<CEPreference>& P, const CEPreference& target,
                                      const ActSpace& s) {
    return is_maxmin_representation(P, to_weak_order(target, s), s);
}

inline Profile as_profile(const std::vector<CEPreference>& P, const ActSpace& s) {
    std::vector<WeakOrder> m;
    for (auto& c : P) m.push_back(to_weak_order(c, s));
    return Profile(std::move(m));
}

/// Every act over the states with payoffs on the grid, constants first.
inline std::vector<Act> all_acts(const std::vector<std::string>& states, const std::vector<double>& prizes) {
    std::vector<Act> out;
    std::vector<std::size_t> idx(states.size(), 0);
    std::vector<Act> nonconst;
    while (true) {
        Act a;
        for (auto k : idx) a.payoff.push_back(prizes[k]);
        std::ostringstream os;
        os << "(";
        for (std::size_t i = 0; i < a.payoff.size(); ++i) os << (i ? "," : "") << a.payoff[i];
        os << ")";
        a.name = os.str();
        bool cst = std::all_of(a.payoff.begin(), a.payoff.end(), [&](double v) { return v == a.payoff.front(); });
        (cst ? out : nonconst).push_back(a);
        std::size_t k = 0;
        for (; k < idx.size(); ++k) {
            if (++idx[k] < prizes.size()) break;
            idx[k] = 0;
        }
        if (k == idx.size()) break;
    }
    out.insert(out.end(), nonconst.begin(), nonconst.end());
    return out;
}

}  // namespace sclat
