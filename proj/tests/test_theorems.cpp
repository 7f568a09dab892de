#include <catch_amalgamated.hpp>

#include "suite.hpp"

using namespace testing;

TEST_CASE("induced pseudofunctor is an equivalence exactly when the A conditions hold") {
    for (const auto& c : theorem_suite()) {
        INFO(c.label());
        Resolved x = resolve(c);
        auto as = check_A_all(x.r.fun, x.wa, x.wb);
        for (const auto& r : as) REQUIRE(r.verdict != Verdict::Precondition);
        CHECK(failing(as) == c.expected_failures);
        GTilde g = induce_g_tilde(x.r.fun, x.wa, x.wb);
        CHECK(is_weak_equivalence(g.fun).holds == all_pass(as));
    }
}

TEST_CASE("with quasi-units on the target each A condition matches its B counterpart") {
    for (const auto& c : theorem_suite()) {
        INFO(c.label());
        Resolved x = resolve(c);
        WClass qmin = quasi_units(x.r.fun.target);
        auto bs = check_B_all(x.r.fun, x.wa);
        auto as = check_A_all(x.r.fun, x.wa, qmin);
        if (as[0].verdict == Verdict::Precondition || bs[0].verdict == Verdict::Precondition) continue;
        for (int i = 0; i < 5; ++i) {
            INFO(as[i].tag);
            CHECK(as[i].verdict == bs[i].verdict);
        }
    }
}

TEST_CASE("EF conditions imply the B conditions, and the universal pseudofunctor shows the converse fails") {
    for (const auto& c : theorem_suite()) {
        INFO(c.label());
        Resolved x = resolve(c);
        auto bs = check_B_all(x.r.fun, x.wa);
        if (bs[0].verdict == Verdict::Precondition) continue;
        if (all_pass(check_EF_all(x.r.fun, x.wa))) CHECK(all_pass(bs));
    }
    const Document& toy = fixture("appx-toy");
    auto u = workspace().psfun(toy, "UW");
    WClass w = resolve_class(toy, "W");
    CHECK(all_pass(check_B_all(u.fun, w)));
    CHECK_FALSE(check_EF(u.fun, w, 3).pass());
}

TEST_CASE("cross-validation finds no disagreement on the suite") {
    for (const auto& c : theorem_suite()) {
        INFO(c.label());
        Resolved x = resolve(c);
        TheoremReport t = cross_validate_theorems(x.r.fun, x.wa, x.wb);
        for (const auto& f : t.findings) UNSCOPED_INFO(f);
        CHECK(t.consistent());
        CHECK(t.check("equivalence-vs-A").evaluated);
    }
}

TEST_CASE("cross-validation on the toy examples") {
    const Document& toy = fixture("appx-toy");
    PsFun id = identity_psfun(toy.bicat);
    WClass w = resolve_class(toy, "W");
    TheoremReport a = cross_validate_theorems(id, w, w);
    CHECK(a.consistent());

    TheoremReport b = cross_validate_theorems(id, quasi_units(toy.bicat), w);
    CHECK(b.consistent());
    CHECK(b.check("A-vs-B-at-quasi-units").evaluated);
    CHECK(b.check("equivalence-lifting").evaluated);

    auto u = workspace().psfun(toy, "UW");
    TheoremReport c = cross_validate_theorems(u.fun, w, quasi_units(u.fun.target));
    CHECK(c.consistent());
    CHECK(c.check("EF-implies-B").evaluated);
    CHECK(c.check("B-vs-equivalence").evaluated);
}

TEST_CASE("a failed precondition skips only the affected sub-check") {
    const Document& toy = fixture("appx-toy");
    PsFun id = identity_psfun(toy.bicat);
    WClass w = resolve_class(toy, "W");
    TheoremReport t = cross_validate_theorems(id, w, w);
    CHECK(t.check("equivalence-vs-A").evaluated);
    CHECK_FALSE(t.check("A-vs-B-at-quasi-units").evaluated);
    CHECK_FALSE(t.check("EF-implies-B").evaluated);
}

TEST_CASE("locally discrete fixtures satisfy the 2-cell conditions automatically") {
    for (const char* name : {"iso2", "trivial", "discrete2"}) {
        INFO(name);
        const Document& d = fixture(name);
        PsFun id = identity_psfun(d.bicat);
        WClass ids = resolve_class(d, "ids");
        CHECK(check_A(id, ids, ids, 4).pass());
        CHECK(check_B(id, ids, 4).pass());
    }
}
