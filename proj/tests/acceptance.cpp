// One PASS/FAIL line per acceptance criterion. Exit status 0 iff all pass.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>
#include <thread>

#include "laws.hpp"
#include "sclat/sclat.hpp"

using namespace sclat;

namespace {

using Clock = std::chrono::steady_clock;

struct Outcome {
    bool ok = true;
    std::string detail;
};

std::string summary(const InstanceSweep& s) {
    std::ostringstream os;
    os << s.theorem << " n=" << s.n << ": " << s.instances << " instances";
    for (auto& c : s.checks)
        if (c.failed) os << "; " << c.id << " failed " << c.failed << " " << (c.counterexample ? c.counterexample->dump() : "");
    return os.str();
}

Outcome sweeps(const std::vector<InstanceSweep>& all) {
    Outcome o;
    for (auto& s : all) {
        o.ok = o.ok && s.ok() && s.instances > 0;
        o.detail += (o.detail.empty() ? "" : " | ") + summary(s);
    }
    return o;
}

Outcome worked_examples() {
    Outcome o;
    auto expect = [&](bool cond, const std::string& what) {
        if (!cond) {
            o.ok = false;
            o.detail += what + "; ";
        }
    };
    auto cyclic_no_join = [&](const Poset& p, const Profile& P, const std::string& name) {
        Seq w;
        bool none = !try_join(P, p, &w);
        CoreRelation c = core_relation(P, p);
        bool cyc = none && w.size() >= 2 && c.rel.strict(w.back(), w.front());
        for (std::size_t k = 0; cyc && k + 1 < w.size(); ++k) cyc = c.rel(w[k], w[k + 1]);
        try {
            join(P, p);
            cyc = false;
        } catch (const NoJoin&) {
        }
        expect(cyc, name + " NoJoin with a cyclic core witness");
    };

    Poset hook = fixtures::hook();
    expect(format_ranking(join(fixtures::hook_profile(hook), hook)) == "w > x > y > z", "hook join");
    Poset crown = fixtures::crown4();
    cyclic_no_join(crown, fixtures::crown4_profile(crown), "crown4");
    Poset diamond = fixtures::diamond4();
    cyclic_no_join(diamond, fixtures::diamond4_profile(diamond), "diamond4");
    Poset anti = fixtures::anti2();
    std::size_t mubs = 0;
    for (auto& w : enumerate_weak_orders(anti)) mubs += is_minimum_upper_bound(w, fixtures::anti2_profile(anti), anti);
    expect(mubs == 3, "anti2 has 3 minimum upper bounds");
    Poset chain = fixtures::chain3();
    auto acc = acceptable_exists_for_profile(fixtures::chain3_profile(chain), chain);
    expect(acc && format_ranking(*acc) == "x > y > z", "chain3 acceptable x > y > z");
    expect(format_ranking(construct_acceptable(fixtures::chain3_profile(chain), chain)) == "x > y > z",
           "chain3 construction");
    expect(classify_fork(fixtures::status_quo()) == ForkClass::shattered_down_fork, "status quo shattered down fork");
    expect(classify_fork(hook) == ForkClass::neither, "hook neither");
    return o;
}

Outcome property_laws() {
    Outcome o;
    std::uint64_t seed = 20240611;
    for (auto& law : gen::laws()) {
        auto r = gen::check_law(law, seed++);
        o.ok = o.ok && r.ok();
        o.detail += (o.detail.empty() ? "" : " | ") + r.name + ": " + std::to_string(r.cases) + " cases, " +
                    std::to_string(r.failures) + " failures" + (r.failures ? " (" + r.first_failure + ")" : "");
    }
    return o;
}

}  // namespace

int main() {
    SweepOptions opt;
    opt.jobs = resolve_jobs(std::max(1u, std::thread::hardware_concurrency()));

    struct Criterion {
        int id;
        const char* what;
        double budget_s;  // 0: none
        std::function<Outcome()> run;
    };
    const std::vector<Criterion> criteria{
        {1, "worked examples", 1.0, worked_examples},
        {2, "characterisation sweep", 0, [&] { return sweeps({verify_characterisation(4, 2, opt)}); }},
        {3, "existence and uniqueness sweep", 0,
         [&] {
             return sweeps({verify_existence_uniqueness(3, opt), verify_existence_uniqueness(4, opt),
                            verify_existence_uniqueness(5, opt)});
         }},
        {4, "weak cycles and chalices", 600, [&] { return sweeps({verify_cycles_chalices(5, opt)}); }},
        {5, "monotone comparative statics", 0, [&] { return sweeps({verify_mcs(opt)}); }},
        {6, "monotone selection psi", 0, [&] { return sweeps({verify_psi(opt)}); }},
        {7, "maxmin equivalence", 0, [&] { return sweeps({verify_maxmin(opt)}); }},
        {8, "social welfare sweep", 900, [&] { return sweeps({verify_swf(4, opt)}); }},
        {9, "property laws", 0, property_laws},
    };

    bool all = true;
    for (auto& c : criteria) {
        auto t0 = Clock::now();
        Outcome o;
        try {
            o = c.run();
        } catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        const double secs = std::chrono::duration<double>(Clock::now() - t0).count();
        if (c.budget_s > 0 && secs > c.budget_s) {
            o.ok = false;
            o.detail += " | over time budget";
        }
        all = all && o.ok;
        std::printf("%s criterion %d (%s) [%.2fs]: %s\n", o.ok ? "PASS" : "FAIL", c.id, c.what, secs, o.detail.c_str());
        std::fflush(stdout);
    }
    return all ? 0 : 1;
}
