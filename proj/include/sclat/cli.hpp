#pragma once

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "io.hpp"
#include "sweeps.hpp"

namespace sclat::cli {

enum class Format { json, text, dot };

struct RunConfig {
    std::string command, sub;
    std::string poset, profile, acts, preferences, target;
    std::string chain, ranking;
    std::string theorem;
    std::size_t n = 4, k = 2;
    bool deep = false, explain = false;
    std::uint64_t seed = default_seed;
    unsigned jobs = 0;
    std::optional<Format> format;
    std::string expect;
    std::string output;  // empty: stdout
};

enum Exit { ok = 0, negative = 1, bad_input = 2 };

namespace detail {

inline Poset read_poset(const RunConfig& c) {
    if (c.poset.empty()) throw InputError("--poset is required");
    return poset_from_json(load_json_file(c.poset));
}

inline Profile read_profile(const RunConfig& c, const Labels& labels) {
    if (c.profile.empty()) throw InputError("--profile is required");
    return profile_from_json(labels, load_json_file(c.profile));
}

inline RealChain read_chain(const RunConfig& c) {
    std::vector<double> v;
    std::stringstream ss(c.chain.empty() ? "1,2,3" : c.chain);
    for (std::string tok; std::getline(ss, tok, ',');) {
        try {
            std::size_t used = 0;
            v.push_back(std::stod(tok, &used));
            if (sclat::detail::trim(tok.substr(used)) != "") throw std::invalid_argument(tok);
        } catch (const std::exception&) {
            throw InputError("--chain: not a number: \"" + tok + "\"");
        }
    }
    try {
        return RealChain(v);
    } catch (const Error& e) {
        throw InputError(std::string("--chain: ") + e.what());
    }
}

inline json seq_names(const Poset& p, const Seq& s) { return seq_json(p, s); }

inline std::string alt_names(const RealChain& c, const AltSet& a) {
    std::string out = "{";
    for (std::size_t i = 0; i < a.size(); ++i) out += (i ? ", " : "") + c.poset().name(a[i]);
    return out + "}";
}

inline std::string seq_text(const Poset& p, const Seq& s) {
    std::string out;
    for (std::size_t i = 0; i < s.size(); ++i) out += (i ? "," : "") + p.name(s[i]);
    return out;
}

/// One line per comparable pair: chains found and the forced relation.
inline std::string explain_core(const Profile& P, const Poset& p) {
    ChainDigraph g(P, p);
    CoreRelation c = core_relation(g);
    std::ostringstream os;
    for (Index x = 0; x < p.size(); ++x)
        for (Index y = 0; y < p.size(); ++y) {
            if (!p.gt(x, y)) continue;
            auto w = witness_chain(g, x, y, false);
            auto s = witness_chain(g, x, y, true);
            os << p.name(x) << " >= " << p.name(y) << ": ";
            os << (w ? "chain " + seq_text(p, *w) : std::string("no chain"));
            os << "; " << (s ? "strict chain " + seq_text(p, *s) : std::string("no strict chain"));
            const char* rel = c.rel(x, y) ? (c.rel(y, x) ? " ~ " : " > ") : " < ";
            os << " => " << p.name(x) << rel << p.name(y) << "\n";
        }
    return os.str();
}

inline int bound(const RunConfig& c, std::ostream& out, bool is_join) {
    Poset p = read_poset(c);
    Profile P = read_profile(c, p.labels());
    Seq w;
    auto r = is_join ? try_join(P, p, &w) : try_meet(P, p, &w);
    const std::string what = is_join ? "join" : "meet";
    if (c.format == Format::json) {
        json j{{"poset", poset_to_json(p)}, {"profile", profile_to_json(P)["profile"]}};
        j[what] = r ? json(format_ranking(*r)) : json(nullptr);
        if (!r) j["cycle"] = seq_names(p, w);
        out << j.dump(2) << "\n";
    } else {
        if (r)
            out << format_ranking(*r) << "\n";
        else
            out << "no " << what << "; core relation" << (is_join ? "" : " of the dual") << " cycles through ("
                << seq_text(p, w) << ")\n";
        if (c.explain) out << (is_join ? explain_core(P, p) : explain_core(P, dual(p)));
    }
    if (!c.expect.empty()) {
        if (c.expect == what) return r ? ok : negative;
        if (c.expect == "no" + what) return r ? negative : ok;
        throw InputError("--expect must be " + what + " or no" + what);
    }
    return ok;
}

inline int analyze(const RunConfig& c, std::ostream& out) {
    Poset p = read_poset(c);
    StructureReport r = analyze_structure(p);
    LatticeStatus ls = lattice_status(p);
    if (c.format == Format::dot) {
        std::vector<Seq> hot = r.crowns;
        hot.insert(hot.end(), r.diamonds.begin(), r.diamonds.end());
        out << poset_to_dot(p, hot);
        return ok;
    }
    if (c.format == Format::text) {
        auto list = [&](const char* name, const std::vector<Seq>& v) {
            out << name << ":";
            if (v.empty()) out << " none";
            for (auto& s : v) out << " (" << seq_text(p, s) << ")";
            out << "\n";
        };
        list("crowns", r.crowns);
        list("diamonds", r.diamonds);
        list("chalices", r.chalices);
        list("weak cycles", r.weak_cycles);
        out << "four-element subposets:";
        if (r.four_posets.empty()) out << " none";
        for (auto& [k, t] : r.four_posets) out << " " << to_string(k) << " (" << seq_text(p, t) << ")";
        out << "\nfork class: " << to_string(r.fork_class) << "\nlattice status: " << to_string(ls.kind) << "\n";
        return ok;
    }
    json j = structure_report_to_json(p, r);
    j["lattice_status"] = lattice_status_to_json(p, ls);
    out << j.dump(2) << "\n";
    return ok;
}

inline InstanceSweep run_verify(const RunConfig& c) {
    SweepOptions opt{resolve_jobs(c.jobs), c.seed, c.deep};
    const std::string& t = c.theorem;
    if (t == "characterisation") return verify_characterisation(c.n, c.k, opt);
    if (t == "existence" || t == "uniqueness") return verify_existence_uniqueness(c.n, opt);
    if (t == "cycles-chalices") return verify_cycles_chalices(c.n, opt);
    if (t == "swf") return verify_swf(c.n, opt);
    if (t == "mcs") return verify_mcs(opt);
    if (t == "psi") return verify_psi(opt);
    if (t == "maxmin") return verify_maxmin(opt);
    throw InputError("unknown theorem \"" + t + "\"");
}

inline int verify(const RunConfig& c, std::ostream& out) {
    InstanceSweep s = run_verify(c);
    out << sweep_to_json(s).dump(2) << "\n";
    return s.ok() ? ok : negative;
}

inline int mcs(const RunConfig& c, std::ostream& out) {
    if (c.sub == "sweep") {
        SweepOptions opt{resolve_jobs(c.jobs), c.seed, c.deep};
        json j = json::array({sweep_to_json(verify_mcs(opt)), sweep_to_json(verify_psi(opt))});
        out << j.dump(2) << "\n";
        return j[0]["status"] == "pass" && j[1]["status"] == "pass" ? ok : negative;
    }
    RealChain chain = read_chain(c);
    Profile P = !c.ranking.empty() ? Profile{parse_ranking(chain.labels(), c.ranking)}
                                   : read_profile(c, chain.labels());
    AltSet a;
    if (c.sub == "argmax") {
        if (P.size() != 1) throw InputError("argmax takes a single ranking");
        a = argmax_set(P[0], chain);
    } else if (c.sub == "consensus") {
        a = consensus(P, chain);
    } else if (c.sub == "possibly-optimal") {
        a = possibly_optimal(P, chain);
    } else {
        throw InputError("unknown mcs subcommand \"" + c.sub + "\"");
    }
    if (c.format == Format::json) {
        json arr = json::array();
        for (Index i : a) arr.push_back(chain.value(i));
        out << json{{c.sub, arr}}.dump(2) << "\n";
    } else {
        out << alt_names(chain, a) << "\n";
    }
    return ok;
}

inline int maxmin(const RunConfig& c, std::ostream& out) {
    if (c.acts.empty() || c.preferences.empty()) throw InputError("--acts and --preferences are required");
    ActSpace s = act_space_from_json(load_json_file(c.acts));
    std::vector<CEPreference> P = ce_list_from_json(s, load_json_file(c.preferences));
    CEPreference m = maxmin_preference(P, s);
    WeakOrder mo = to_weak_order(m, s);
    Poset order = induced_act_order(s);
    Profile prof = as_profile(P, s);
    bool mub = is_minimum_upper_bound(mo, prof, order);
    std::optional<bool> target_rep, target_mub;
    if (!c.target.empty()) {
        CEPreference t = ce_from_json(s, load_json_file(c.target));
        target_rep = is_maxmin_representation(P, t, s);
        target_mub = is_minimum_upper_bound(to_weak_order(t, s), prof, order);
    }
    if (c.format == Format::json) {
        json j = ce_to_json(m, s);
        j["order"] = format_ranking(mo);
        j["minimum_upper_bound"] = mub;
        if (target_rep) j["target"] = {{"maxmin_representation", *target_rep}, {"minimum_upper_bound", *target_mub}};
        out << j.dump(2) << "\n";
    } else {
        for (Index i = 0; i < s.size(); ++i) out << s.act(i).name << ": " << m.ce(i) << "\n";
        out << "order: " << format_ranking(mo) << "\n";
        out << "minimum upper bound: " << (mub ? "yes" : "no") << "\n";
        if (target_rep)
            out << "target: maxmin representation " << (*target_rep ? "yes" : "no") << ", minimum upper bound "
                << (*target_mub ? "yes" : "no") << "\n";
    }
    if (!mub || (target_rep && *target_rep != *target_mub)) return negative;
    return ok;
}

inline int swf(const RunConfig& c, std::ostream& out) {
    Poset p = read_poset(c);
    if (c.sub == "classify") {
        SwfVerdict v = exists_acceptable_swf(p);
        if (c.format == Format::text) {
            out << "fork class: " << to_string(v.fork_class) << "\nacceptable SWF exists: " << (v.exists ? "yes" : "no")
                << "\n";
            if (v.forbidden)
                out << "forbidden subposet: " << to_string(v.forbidden->first) << " (" << seq_text(p, v.forbidden->second)
                    << ")\n";
        } else {
            json j{{"fork_class", to_string(v.fork_class)}, {"exists", v.exists}};
            j["forbidden"] = v.forbidden ? json{{"kind", to_string(v.forbidden->first)},
                                                {"witness", seq_names(p, v.forbidden->second)}}
                                         : json(nullptr);
            out << j.dump(2) << "\n";
        }
        if (c.expect == "exists") return v.exists ? ok : negative;
        if (c.expect == "none") return v.exists ? negative : ok;
        if (!c.expect.empty()) throw InputError("--expect must be exists or none");
        return ok;
    }
    if (c.sub != "check") throw InputError("unknown swf subcommand \"" + c.sub + "\"");
    Profile P = read_profile(c, p.labels());
    ProfileResult r = check_profile(P, p);
    if (c.format == Format::text) {
        if (!r.acceptable.empty()) {
            out << format_ranking(r.acceptable.front()) << "\n";
        } else if (r.violation->axiom == Axiom::no_minimum_upper_bound) {
            out << "no acceptable order; no minimum upper bound, core relation cycles through ("
                << seq_text(p, r.violation->cycle) << ")\n";
        } else {
            const auto& v = *r.violation;
            out << "no acceptable order; canonical join violates " << to_string(v.axiom) << " on (" << p.name(v.x)
                << "," << p.name(v.y) << ")" << (v.strict ? " strictly" : "") << "\n";
        }
    } else {
        AcceptabilityReport rep{classify_fork(p), {r}};
        out << acceptability_report_to_json(p, rep).dump(2) << "\n";
    }
    if (c.expect == "acceptable") return r.acceptable.empty() ? negative : ok;
    if (c.expect == "none") return r.acceptable.empty() ? ok : negative;
    if (!c.expect.empty()) throw InputError("--expect must be acceptable or none");
    return ok;
}

inline int export_dot(const RunConfig& c, std::ostream& out) {
    Poset p = read_poset(c);
    if (!c.profile.empty()) {
        out << chain_digraph_to_dot(ChainDigraph(read_profile(c, p.labels()), p));
        return ok;
    }
    StructureReport r = analyze_structure(p);
    std::vector<Seq> hot = r.crowns;
    hot.insert(hot.end(), r.diamonds.begin(), r.diamonds.end());
    out << poset_to_dot(p, hot);
    return ok;
}

inline Format default_format(const std::string& cmd) {
    if (cmd == "export-dot") return Format::dot;
    if (cmd == "analyze" || cmd == "verify") return Format::json;
    return Format::text;
}

}  // namespace detail

/// Runs one command. Input errors print to err and return 2.
inline int dispatch(RunConfig c, std::ostream& out, std::ostream& err) {
    if (!c.format) c.format = detail::default_format(c.command);
    std::ofstream file;
    std::ostream* o = &out;
    try {
        if (!c.output.empty()) {
            file.open(c.output);
            if (!file) throw InputError("cannot write " + c.output);
            o = &file;
        }
        if (c.command == "analyze") return detail::analyze(c, *o);
        if (c.command == "join") return detail::bound(c, *o, true);
        if (c.command == "meet") return detail::bound(c, *o, false);
        if (c.command == "verify") return detail::verify(c, *o);
        if (c.command == "mcs") return detail::mcs(c, *o);
        if (c.command == "maxmin") return detail::maxmin(c, *o);
        if (c.command == "swf") return detail::swf(c, *o);
        if (c.command == "export-dot") return detail::export_dot(c, *o);
        throw InputError("unknown command \"" + c.command + "\"");
    } catch (const InputError& e) {
        err << "error: " << e.what() << "\n";
        return bad_input;
    } catch (const TooLarge& e) {
        err << "error: " << e.what() << "\n";
        return bad_input;
    } catch (const UniverseTooLarge& e) {
        err << "error: " << e.what() << "\n";
        return bad_input;
    } catch (const EmptyInput& e) {
        err << "error: " << e.what() << "\n";
        return bad_input;
    } catch (const PreconditionFailed& e) {
        err << "error: " << e.what() << "\n";
        return bad_input;
    } catch (const NotAForkPoset& e) {
        err << "error: " << e.what() << "\n";
        return negative;
    }
}

/// Builds the command-line parser; `cfg` receives the parsed values.
inline void configure(CLI::App& app, RunConfig& cfg) {
    app.require_subcommand(1);
    auto fmt = [&](CLI::App* s) {
        s->add_option_function<std::string>(
             "--format",
             [&](const std::string& v) {
                 cfg.format = v == "json" ? Format::json : v == "dot" ? Format::dot : Format::text;
             },
             "json, text or dot")
            ->check(CLI::IsMember({"json", "text", "dot"}));
        s->add_option("-o,--output", cfg.output, "write to a file instead of stdout");
    };
    auto poset = [&](CLI::App* s, bool required) {
        auto* o = s->add_option("--poset", cfg.poset, "poset JSON file");
        if (required) o->required();
    };

    auto* an = app.add_subcommand("analyze", "structure report and lattice status");
    poset(an, true);
    fmt(an);

    for (const char* name : {"join", "meet"}) {
        auto* b = app.add_subcommand(name, std::string("canonical ") + name + " of a profile");
        poset(b, true);
        b->add_option("--profile", cfg.profile, "profile JSON file")->required();
        b->add_flag("--explain", cfg.explain, "print the forced relation with chain witnesses");
        b->add_option("--expect", cfg.expect, std::string(name) + " or no" + name + "; exit 1 otherwise");
        fmt(b);
    }

    auto* v = app.add_subcommand("verify", "run an exhaustive or seeded theorem sweep");
    v->add_option("--theorem", cfg.theorem, "characterisation, existence, uniqueness, cycles-chalices, swf, mcs, psi, maxmin")
        ->required();
    v->add_option("--n", cfg.n, "poset size");
    v->add_option("--k", cfg.k, "profile size for characterisation");
    v->add_flag("--deep", cfg.deep, "allow full sweeps beyond the default sizes");
    v->add_option("--seed", cfg.seed, "seed for sampled sweeps");
    v->add_option("--jobs", cfg.jobs, "worker threads (default SCLAT_JOBS or 1)");
    fmt(v);

    auto* m = app.add_subcommand("mcs", "choice on a chain of real alternatives");
    m->require_subcommand(1);
    for (const char* name : {"argmax", "consensus", "possibly-optimal"}) {
        auto* s = m->add_subcommand(name);
        s->add_option("--chain", cfg.chain, "comma-separated increasing values (default 1,2,3)");
        s->add_option("--ranking", cfg.ranking, "a single ranking, e.g. \"3 > 2 ~ 1\"");
        s->add_option("--profile", cfg.profile, "profile JSON file");
        fmt(s);
    }
    auto* ms = m->add_subcommand("sweep", "argmax, consensus, possibly-optimal and selection sweeps");
    ms->add_option("--jobs", cfg.jobs, "worker threads");

    auto* mm = app.add_subcommand("maxmin", "pointwise-minimum certainty equivalents and the bound check");
    mm->add_option("--acts", cfg.acts, "act space JSON file")->required();
    mm->add_option("--preferences", cfg.preferences, "JSON file with a list of CE maps")->required();
    mm->add_option("--target", cfg.target, "CE map to test as a maxmin representation");
    fmt(mm);

    auto* sw = app.add_subcommand("swf", "acceptable social welfare");
    sw->require_subcommand(1);
    auto* chk = sw->add_subcommand("check", "acceptable order for one profile, or a violation");
    poset(chk, true);
    chk->add_option("--profile", cfg.profile, "profile JSON file")->required();
    chk->add_option("--expect", cfg.expect, "acceptable or none; exit 1 otherwise");
    fmt(chk);
    auto* cl = sw->add_subcommand("classify", "fork class and forbidden subposets");
    poset(cl, true);
    cl->add_option("--expect", cfg.expect, "exists or none; exit 1 otherwise");
    fmt(cl);

    auto* d = app.add_subcommand("export-dot", "Hasse diagram, or the chain digraph with --profile");
    poset(d, true);
    d->add_option("--profile", cfg.profile, "profile JSON file");
    d->add_option("-o,--output", cfg.output, "write to a file instead of stdout");
}

/// Parses argv and dispatches. Usage errors exit 2.
inline int run(int argc, char** argv, std::ostream& out = std::cout, std::ostream& err = std::cerr) {
    CLI::App app{"single-crossing dominance: joins, structure checks and theorem sweeps", "sclat"};
    RunConfig cfg;
    configure(app, cfg);
    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? ok : bad_input;
    }
    for (auto* s : app.get_subcommands()) {
        cfg.command = s->get_name();
        for (auto* t : s->get_subcommands()) cfg.sub = t->get_name();
    }
    return dispatch(cfg, out, err);
}

}  // namespace sclat::cli
