// Acceptance run: one PASS/FAIL line per criterion.
#include <chrono>
#include <functional>
#include <iostream>
#include <sstream>

#include "bicat/cli.hpp"
#include "suite.hpp"

using namespace testing;

namespace {

using Clock = std::chrono::steady_clock;

struct Outcome {
    bool pass = true;
    std::string detail;

    void require(bool ok, const std::string& what) {
        if (!ok) {
            pass = false;
            detail += (detail.empty() ? "" : "; ") + what;
        }
    }
};

double seconds_since(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

Outcome appendix_reproduction() {
    Outcome o;
    auto t0 = Clock::now();
    std::ostringstream out, err;
    o.require(run_command({"demo", "appendix-toy"}, out, err) == kExitPass, "demo exit code");

    const Document& toy = fixture("appx-toy");
    const FinBicat& b = *toy.bicat;
    WClass w = resolve_class(toy, "W");
    o.require(w.bf().pass(), "W fails the fraction axioms");
    FractionBicat fb = materialize_fractions(w);
    PsFun U = universal_pseudofunctor(fb);
    o.require(U.two(two(b, "γ")) == U.two(two(b, "i_idB")), "U(γ) differs from U(i_idB)");
    ConditionReport ef3 = check_EF(U, w, 3);
    o.require(ef3.verdict == Verdict::Fail &&
                  unordered_pair_is(ef3, "preimage_1", "preimage_2", two(b, "γ"), two(b, "i_idB")),
              "EF3 verdict or counterexample");
    for (int i = 1; i <= 5; ++i) o.require(check_B(U, w, i).pass(), "B" + std::to_string(i) + " fails");
    double s = seconds_since(t0);
    o.require(s < 10, "runtime");
    o.detail += (o.detail.empty() ? "" : "; ") + std::to_string(s) + " s";
    return o;
}

Outcome localization_coherence() {
    Outcome o;
    for (const auto& [name, cls] : std::vector<std::pair<std::string, std::string>>{
             {"appx-toy", "W"}, {"appx-toy-idem", "W"}, {"iso2", "ids"}, {"iso2", "all"}, {"arrow2", "ids"}}) {
        auto t0 = Clock::now();
        FractionBicat fb = materialize_fractions(resolve_class(fixture(name), cls));
        auto v = validate_bicat(*fb.bicat);
        o.require(v.pass, name + " at " + cls + " is not coherent");
        o.require(!v.violates("pentagon") && !v.violates("triangle"), name + " pentagon/triangle");
        o.require(seconds_since(t0) < 60, name + " runtime");
    }
    return o;
}

Outcome equivalence_biconditional() {
    Outcome o;
    auto t0 = Clock::now();
    int all_hold = 0, exactly_one = 0, evaluated = 0;
    for (const auto& c : theorem_suite()) {
        Resolved x = resolve(c);
        auto as = check_A_all(x.r.fun, x.wa, x.wb);
        if (as[0].verdict == Verdict::Precondition) {
            o.require(false, c.label() + " precondition");
            continue;
        }
        ++evaluated;
        GTilde g = induce_g_tilde(x.r.fun, x.wa, x.wb);
        bool we = is_weak_equivalence(g.fun).holds;
        o.require(we == all_pass(as), c.label() + " disagrees");
        auto fails = failing(as);
        all_hold += fails.empty();
        exactly_one += fails.size() == 1;
    }
    o.require(evaluated >= 5, "suite too small");
    o.require(all_hold >= 1, "no configuration where every A condition holds");
    o.require(exactly_one >= 1, "no configuration with exactly one failing A condition");
    o.require(seconds_since(t0) < 300, "runtime");
    o.detail += (o.detail.empty() ? "" : "; ") + std::to_string(evaluated) + " configurations";
    return o;
}

Outcome a_matches_b_at_quasi_units() {
    Outcome o;
    int compared = 0;
    for (const auto& c : theorem_suite()) {
        Resolved x = resolve(c);
        WClass qmin = quasi_units(x.r.fun.target);
        auto as = check_A_all(x.r.fun, x.wa, qmin);
        auto bs = check_B_all(x.r.fun, x.wa);
        if (as[0].verdict == Verdict::Precondition || bs[0].verdict == Verdict::Precondition) continue;
        ++compared;
        for (int i = 0; i < 5; ++i) o.require(as[i].verdict == bs[i].verdict, c.label() + " " + as[i].tag);
    }
    o.require(compared >= 5, "too few comparable configurations");
    o.detail += (o.detail.empty() ? "" : "; ") + std::to_string(compared) + " configurations";
    return o;
}

Outcome ef_sufficient_not_necessary() {
    Outcome o;
    for (const auto& c : theorem_suite()) {
        Resolved x = resolve(c);
        auto bs = check_B_all(x.r.fun, x.wa);
        if (bs[0].verdict == Verdict::Precondition) continue;
        if (all_pass(check_EF_all(x.r.fun, x.wa))) o.require(all_pass(bs), c.label());
    }
    const Document& toy = fixture("appx-toy");
    auto u = workspace().psfun(toy, "UW");
    WClass w = resolve_class(toy, "W");
    o.require(all_pass(check_B_all(u.fun, w)), "B fails for U_W");
    o.require(!check_EF(u.fun, w, 3).pass(), "EF3 holds for U_W");
    return o;
}

Outcome saturation_laws() {
    Outcome o;
    int classes = 0;
    for (const auto& name : all_fixtures()) {
        const Document& d = fixture(name);
        std::vector<std::string> names = {"ids", "min", "equiv", "all"};
        for (const auto& [n, cells] : d.classes) names.push_back(n);
        o.require(saturate(quasi_units(d.bicat)) == internal_equivalences_class(d.bicat), name + " min/equiv");
        for (const auto& n : names) {
            WClass w = resolve_class(d, n);
            if (!w.bf().pass()) continue;
            ++classes;
            WClass sat = saturate(w);
            for (OneId f : w.cells()) o.require(sat.contains(f), name + "/" + n + " W ⊄ W_sat");
            o.require(saturate(sat) == sat, name + "/" + n + " not idempotent");
            const FinBicat& b = *d.bicat;
            for (std::size_t x = 0; x < b.one_count(); ++x)
                for (std::size_t u = 0; u < b.one_count(); ++u) {
                    OneId wc(x), uc(u);
                    if (b.composable(wc, uc) && sat.contains(wc) && sat.contains(b.hcomp1(wc, uc)))
                        o.require(sat.contains(uc), name + "/" + n + " two-out-of-three");
                }
        }
    }
    o.detail += (o.detail.empty() ? "" : "; ") + std::to_string(classes) + " classes";
    return o;
}

Outcome weak_equivalence_sanity() {
    Outcome o;
    for (const auto& name : all_fixtures())
        o.require(is_weak_equivalence(identity_psfun(fixture(name).bicat)).holds, name + " identity");
    for (const char* name : {"appx-toy", "iso2"})
        o.require(is_weak_equivalence(workspace().psfun(fixture(name), "Umin").fun).holds,
                  std::string(name) + " U at quasi-units");
    return o;
}

}  // namespace

int main() {
    const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
        {"appendix reproduction", appendix_reproduction},
        {"coherence of localizations", localization_coherence},
        {"equivalence iff A conditions", equivalence_biconditional},
        {"A conditions match B conditions at quasi-units", a_matches_b_at_quasi_units},
        {"EF sufficient, not necessary", ef_sufficient_not_necessary},
        {"saturation laws", saturation_laws},
        {"weak-equivalence sanity", weak_equivalence_sanity},
    };
    int failed = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        Outcome o;
        try {
            o = criteria[i].second();
        } catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        failed += !o.pass;
        std::cout << (o.pass ? "PASS" : "FAIL") << " " << (i + 1) << " " << criteria[i].first
                  << (o.detail.empty() ? "" : " (" + o.detail + ")") << "\n";
    }
    return failed == 0 ? 0 : 1;
}
