#pragma once

// JSON and DOT for posets, profiles, act spaces and reports.

#include <fstream>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "ambiguity.hpp"
#include "chain.hpp"
#include "lattice.hpp"
#include "preference.hpp"
#include "relation.hpp"
#include "social_choice.hpp"
#include "structure.hpp"

namespace sclat {

using json = nlohmann::ordered_json;

/// Schema problem at a JSON path such as "covers[2][1]".
class SchemaError : public InputError {
public:
    SchemaError(const std::string& where, const std::string& what)
        : InputError(where + ": " + what), where_(where) {}
    const std::string& where() const noexcept { return where_; }

private:
    std::string where_;
};

inline json parse_json_text(const std::string& text, const std::string& source = "input") {
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        throw SyntaxError(source + ": " + e.what());
    }
}

inline json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_json_text(ss.str(), path);
}

namespace detail {

inline const json& field(const json& j, const std::string& key, const std::string& where) {
    if (!j.is_object()) throw SchemaError(where, "expected an object");
    auto it = j.find(key);
    if (it == j.end()) throw SchemaError(where, "missing field \"" + key + "\"");
    return *it;
}

inline std::string str_at(const json& j, const std::string& where) {
    if (!j.is_string()) throw SchemaError(where, "expected a string");
    return j.get<std::string>();
}

inline double num_at(const json& j, const std::string& where) {
    if (!j.is_number()) throw SchemaError(where, "expected a number");
    return j.get<double>();
}

inline Index element_at(const Relation& r, const json& j, const std::string& where) {
    std::string s = str_at(j, where);
    try {
        return r.index_of(s);
    } catch (const UnknownElement&) {
        throw SchemaError(where, "unknown element \"" + s + "\"");
    }
}

}  // namespace detail

// ------------------------------------------------------------------ poset

/// {"elements": [...], "covers": [[a,b],...]} with a above b, closed on load;
/// or "relation": every pair of the full order (loops may be omitted).
inline Poset poset_from_json(const json& j) {
    const json& el = detail::field(j, "elements", "poset");
    if (!el.is_array() || el.empty()) throw SchemaError("elements", "expected a nonempty array");
    std::vector<std::string> names;
    std::set<std::string> seen;
    for (std::size_t i = 0; i < el.size(); ++i) {
        std::string w = "elements[" + std::to_string(i) + "]";
        names.push_back(detail::str_at(el[i], w));
        if (!seen.insert(names.back()).second) throw SchemaError(w, "duplicate element \"" + names.back() + "\"");
    }
    Relation r(make_labels(names));
    for (Index i = 0; i < r.size(); ++i) r.set(i, i);
    bool covers = j.contains("covers"), full = j.contains("relation");
    if (covers == full) throw SchemaError("poset", "expected exactly one of \"covers\" or \"relation\"");
    const std::string key = covers ? "covers" : "relation";
    const json& pairs = j.at(key);
    if (!pairs.is_array()) throw SchemaError(key, "expected an array of pairs");
    for (std::size_t i = 0; i < pairs.size(); ++i) {
        std::string w = key + "[" + std::to_string(i) + "]";
        if (!pairs[i].is_array() || pairs[i].size() != 2) throw SchemaError(w, "expected a pair");
        r.set(detail::element_at(r, pairs[i][0], w + "[0]"), detail::element_at(r, pairs[i][1], w + "[1]"));
    }
    return validate_poset(covers ? transitive_closure(std::move(r)) : r);
}

inline json poset_to_json(const Poset& p) {
    json j;
    j["elements"] = *p.labels();
    json cov = json::array();
    for (auto [a, b] : transitive_reduction(p).pairs()) cov.push_back({p.name(a), p.name(b)});
    j["covers"] = cov;
    return j;
}

// ---------------------------------------------------------------- profile

/// {"profile": ["w > x > y ~ z", ...]}
inline Profile profile_from_json(const Labels& labels, const json& j) {
    const json& arr = detail::field(j, "profile", "profile");
    if (!arr.is_array()) throw SchemaError("profile", "expected an array of rankings");
    if (arr.empty()) throw EmptyInput("profile must have at least one member");
    std::vector<WeakOrder> m;
    for (std::size_t i = 0; i < arr.size(); ++i) {
        std::string w = "profile[" + std::to_string(i) + "]";
        try {
            m.push_back(parse_ranking(labels, detail::str_at(arr[i], w)));
        } catch (const SchemaError&) {
            throw;
        } catch (const InputError& e) {
            throw SchemaError(w, e.what());
        }
    }
    return Profile(std::move(m));
}

inline json profile_to_json(const Profile& P) {
    json arr = json::array();
    for (const auto& m : P) arr.push_back(format_ranking(m));
    return json{{"profile", arr}};
}

// ------------------------------------------------------------ act spaces

/// {"states": [...], "prizes": [...], "acts": {"X": {"w1": 0, ...}, ...}}
inline ActSpace act_space_from_json(const json& j) {
    const json& st = detail::field(j, "states", "act_space");
    const json& pr = detail::field(j, "prizes", "act_space");
    const json& acts = detail::field(j, "acts", "act_space");
    if (!st.is_array()) throw SchemaError("states", "expected an array");
    if (!pr.is_array()) throw SchemaError("prizes", "expected an array");
    if (!acts.is_object()) throw SchemaError("acts", "expected an object");
    std::vector<std::string> states;
    for (std::size_t i = 0; i < st.size(); ++i) states.push_back(detail::str_at(st[i], "states[" + std::to_string(i) + "]"));
    std::vector<double> prizes;
    for (std::size_t i = 0; i < pr.size(); ++i) prizes.push_back(detail::num_at(pr[i], "prizes[" + std::to_string(i) + "]"));
    std::vector<Act> out;
    for (auto it = acts.begin(); it != acts.end(); ++it) {
        std::string w = "acts." + it.key();
        if (!it.value().is_object()) throw SchemaError(w, "expected an object of state payoffs");
        Act a{it.key(), {}};
        for (auto& s : states) {
            if (!it.value().contains(s)) throw SchemaError(w, "missing state \"" + s + "\"");
            a.payoff.push_back(detail::num_at(it.value().at(s), w + "." + s));
        }
        if (it.value().size() != states.size()) throw SchemaError(w, "unknown state");
        out.push_back(std::move(a));
    }
    try {
        return ActSpace(std::move(states), std::move(prizes), std::move(out));
    } catch (const InputError& e) {
        throw SchemaError("act_space", e.what());
    }
}

inline json act_space_to_json(const ActSpace& s) {
    json acts = json::object();
    for (Index i = 0; i < s.size(); ++i) {
        json a = json::object();
        for (std::size_t k = 0; k < s.states().size(); ++k) a[s.states()[k]] = s.act(i).payoff[k];
        acts[s.act(i).name] = a;
    }
    return json{{"states", s.states()}, {"prizes", s.prizes()}, {"acts", acts}};
}

/// {"ce": {"X": 0, ...}}; constants may be omitted.
inline CEPreference ce_from_json(const ActSpace& s, const json& j, const std::string& where = "ce") {
    const json& ce = detail::field(j, "ce", where);
    if (!ce.is_object()) throw SchemaError(where, "expected an object");
    std::map<std::string, double> m;
    for (auto it = ce.begin(); it != ce.end(); ++it) m[it.key()] = detail::num_at(it.value(), where + "." + it.key());
    try {
        return CEPreference::from_map(s, m);
    } catch (const InputError& e) {
        throw SchemaError(where, e.what());
    }
}

inline json ce_to_json(const CEPreference& c, const ActSpace& s) {
    json m = json::object();
    for (Index i = 0; i < s.size(); ++i) m[s.act(i).name] = c.ce(i);
    return json{{"ce", m}};
}

/// {"preferences": [{"ce": ...}, ...]}
inline std::vector<CEPreference> ce_list_from_json(const ActSpace& s, const json& j) {
    const json& arr = detail::field(j, "preferences", "preferences");
    if (!arr.is_array() || arr.empty()) throw SchemaError("preferences", "expected a nonempty array");
    std::vector<CEPreference> out;
    for (std::size_t i = 0; i < arr.size(); ++i)
        out.push_back(ce_from_json(s, arr[i], "preferences[" + std::to_string(i) + "]"));
    return out;
}

// ---------------------------------------------------------------- reports

inline json seq_json(const Poset& p, const Seq& s) {
    json a = json::array();
    for (Index i : s) a.push_back(p.name(i));
    return a;
}

inline json structure_report_to_json(const Poset& p, const StructureReport& r) {
    auto list = [&](const std::vector<Seq>& v) {
        json a = json::array();
        for (auto& s : v) a.push_back(seq_json(p, s));
        return a;
    };
    json fp = json::array();
    for (auto& [k, t] : r.four_posets) fp.push_back({{"kind", to_string(k)}, {"witness", seq_json(p, t)}});
    return json{{"crowns", list(r.crowns)},           {"diamonds", list(r.diamonds)},
                {"chalices", list(r.chalices)},       {"weak_cycles", list(r.weak_cycles)},
                {"four_posets", fp},                  {"fork_class", to_string(r.fork_class)}};
}

inline json lattice_status_to_json(const Poset& p, const LatticeStatus& s) {
    json j{{"kind", to_string(s.kind)}};
    if (!s.witness_kind.empty()) j["witness"] = {{"kind", s.witness_kind}, {"elements", seq_json(p, s.witness)}};
    return j;
}

inline json violation_to_json(const Poset& p, const Violation& v) {
    json j{{"axiom", to_string(v.axiom)}};
    if (v.axiom == Axiom::no_minimum_upper_bound)
        j["cycle"] = seq_json(p, v.cycle);
    else {
        j["pair"] = {p.name(v.x), p.name(v.y)};
        j["strict"] = v.strict;
    }
    return j;
}

inline json acceptability_report_to_json(const Poset& p, const AcceptabilityReport& r) {
    json res = json::array();
    for (auto& pr : r.results) {
        json a = json::array();
        for (auto& w : pr.acceptable) a.push_back(format_ranking(w));
        json e{{"profile", pr.id}, {"acceptable", a}};
        e["violation"] = pr.violation ? violation_to_json(p, *pr.violation) : json(nullptr);
        res.push_back(e);
    }
    return json{{"constraint_class", to_string(r.constraint_class)}, {"results", res}};
}

// -------------------------------------------------------------------- DOT

namespace detail {
inline std::string dot_id(const std::string& s) {
    std::string out = "\"";
    for (char c : s) {
        if (c == '"' || c == '\\') out += '\\';
        out += c;
    }
    return out + "\"";
}
}  // namespace detail

/// Hasse diagram, upper element first so edges point down. Edges between
/// consecutive witness elements are drawn red.
inline std::string poset_to_dot(const Poset& p, const std::vector<Seq>& witnesses = {}) {
    std::set<std::pair<Index, Index>> hot;
    for (auto& w : witnesses)
        for (std::size_t i = 0; i < w.size(); ++i) {
            Index a = w[i], b = w[(i + 1) % w.size()];
            hot.insert({std::min(a, b), std::max(a, b)});
        }
    std::ostringstream os;
    os << "digraph poset {\n  rankdir=TB;\n";
    for (Index i = 0; i < p.size(); ++i) os << "  " << detail::dot_id(p.name(i)) << ";\n";
    for (auto [a, b] : transitive_reduction(p).pairs()) {
        os << "  " << detail::dot_id(p.name(a)) << " -> " << detail::dot_id(p.name(b));
        if (hot.count({std::min(a, b), std::max(a, b)})) os << " [color=red, penwidth=2]";
        os << ";\n";
    }
    os << "}\n";
    return os.str();
}

/// Chain digraph edges; strict ones bold.
inline std::string chain_digraph_to_dot(const ChainDigraph& g) {
    const Poset& p = g.poset();
    std::ostringstream os;
    os << "digraph chains {\n";
    for (Index i = 0; i < p.size(); ++i) os << "  " << detail::dot_id(p.name(i)) << ";\n";
    for (Index a = 0; a < p.size(); ++a)
        for (Index b = 0; b < p.size(); ++b)
            if (a != b && g.edge(a, b)) {
                os << "  " << detail::dot_id(p.name(a)) << " -> " << detail::dot_id(p.name(b));
                if (g.strict_edge(a, b)) os << " [style=bold]";
                os << ";\n";
            }
    os << "}\n";
    return os.str();
}

}  // namespace sclat
