#include <catch_amalgamated.hpp>

#include <fmt/format.h>

#include <random>

#include "support.hpp"

using namespace testing;

namespace {

std::vector<WClass> bf_classes() {
    std::vector<WClass> out;
    for (const auto& name : all_fixtures()) {
        const Document& d = fixture(name);
        std::vector<std::string> names = {"ids", "min", "equiv", "all"};
        for (const auto& [n, cells] : d.classes) names.push_back(n);
        for (const auto& n : names) {
            WClass w = resolve_class(d, n);
            if (w.bf().pass()) out.push_back(w);
        }
    }
    return out;
}

// Strict locally discrete bicategory of a random finite poset on n objects.
BicatPtr random_poset(std::mt19937& rng, int n) {
    std::vector<std::vector<bool>> le(n, std::vector<bool>(n, false));
    std::bernoulli_distribution edge(0.4);
    for (int i = 0; i < n; ++i) {
        le[i][i] = true;
        for (int j = i + 1; j < n; ++j) le[i][j] = edge(rng);
    }
    for (int k = 0; k < n; ++k)
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                if (le[i][k] && le[k][j]) le[i][j] = true;

    BicatTables t;
    t.strict = true;
    std::vector<std::vector<OneId>> arrow(n, std::vector<OneId>(n));
    for (int i = 0; i < n; ++i) t.objects.push_back("o" + std::to_string(i));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (le[i][j]) {
                arrow[i][j] = OneId(t.one_cells.size());
                t.one_cells.push_back({fmt::format("a{}{}", i, j), ObjId(i), ObjId(j)});
            }
    for (std::size_t f = 0; f < t.one_cells.size(); ++f) {
        t.two_cells.push_back({"i_" + t.one_cells[f].name, OneId(f), OneId(f)});
        t.id2.push_back(TwoId(f));
        t.runit.push_back(TwoId(f));
        t.lunit.push_back(TwoId(f));
        t.vcomp[{TwoId(f), TwoId(f)}] = TwoId(f);
    }
    for (int i = 0; i < n; ++i) t.id1.push_back(arrow[i][i]);
    for (std::size_t f = 0; f < t.one_cells.size(); ++f)
        for (std::size_t g = 0; g < t.one_cells.size(); ++g) {
            if (t.one_cells[g].src != t.one_cells[f].tgt) continue;
            OneId gf = arrow[t.one_cells[f].src.index()][t.one_cells[g].tgt.index()];
            t.hcomp1[{OneId(g), OneId(f)}] = gf;
            t.whisk_left[{OneId(g), TwoId(f)}] = TwoId(gf.index());
            t.whisk_right[{TwoId(g), OneId(f)}] = TwoId(gf.index());
            for (std::size_t h = 0; h < t.one_cells.size(); ++h)
                if (t.one_cells[h].src == t.one_cells[g].tgt) {
                    OneId hgf = arrow[t.one_cells[f].src.index()][t.one_cells[h].tgt.index()];
                    t.assoc[{OneId(h), OneId(g), OneId(f)}] = TwoId(hgf.index());
                }
        }
    return FinBicat::build(std::move(t));
}

WClass random_class(std::mt19937& rng, const BicatPtr& b) {
    std::bernoulli_distribution pick(0.5);
    std::vector<bool> m(b->one_count(), false);
    for (std::size_t f = 0; f < b->one_count(); ++f) m[f] = b->src(OneId(f)) == b->tgt(OneId(f)) || pick(rng);
    return WClass(b, std::move(m), "random");
}

}  // namespace

TEST_CASE("saturation laws on every class satisfying the fraction axioms") {
    auto classes = bf_classes();
    REQUIRE(classes.size() >= 8);
    for (const auto& w : classes) {
        INFO(w.describe());
        WClass sat = saturate(w);
        for (OneId f : w.cells()) CHECK(sat.contains(f));
        CHECK(saturate(sat) == sat);
        CHECK(names(sat) == oracle_saturation(w));
        const FinBicat& b = w.base();
        for (std::size_t x = 0; x < b.one_count(); ++x)
            for (std::size_t u = 0; u < b.one_count(); ++u) {
                OneId wc(x), uc(u);
                if (!b.composable(wc, uc)) continue;
                if (sat.contains(wc) && sat.contains(b.hcomp1(wc, uc))) CHECK(sat.contains(uc));
            }
    }
}

TEST_CASE("quasi-units saturate to the internal equivalences and satisfy the axioms") {
    for (const auto& name : all_fixtures()) {
        INFO(name);
        BicatPtr b = fixture(name).bicat;
        CHECK(saturate(quasi_units(b)) == internal_equivalences_class(b));
        CHECK(quasi_units(b).bf().pass());
    }
}

TEST_CASE("random posets: saturation, localization and the universal pseudofunctor") {
    std::mt19937 rng(20261019);
    int checked = 0;
    for (int round = 0; round < 40; ++round) {
        BicatPtr b = random_poset(rng, 2 + round % 3);
        REQUIRE(validate_bicat(*b).pass);
        CHECK(saturate(quasi_units(b)) == internal_equivalences_class(b));
        WClass w = random_class(rng, b);
        if (!w.bf().pass()) continue;
        ++checked;
        INFO(export_document(*b) << "\nclass " << w.describe());
        WClass sat = saturate(w);
        CHECK(names(sat) == oracle_saturation(w));
        CHECK(saturate(sat) == sat);

        FractionBicat fb = materialize_fractions(w);
        CHECK(validate_bicat(*fb.bicat).pass);
        PsFun U = universal_pseudofunctor(fb);
        CHECK(validate_psfun(U).pass);
        CHECK(maps_into(U, w, internal_equivalences_class(fb.bicat)));
        CHECK(all_pass(check_B_all(U, w)));

        TheoremReport t = cross_validate_theorems(identity_psfun(b), w, w);
        for (const auto& f : t.findings) UNSCOPED_INFO(f);
        CHECK(t.consistent());
    }
    CHECK(checked >= 10);
}

TEST_CASE("every verdict re-checks") {
    const Document& toy = fixture("appx-toy");
    std::vector<std::pair<PsFun, WClass>> cfgs = {
        {identity_psfun(toy.bicat), quasi_units(toy.bicat)},
        {workspace().psfun(toy, "UW").fun, resolve_class(toy, "W")},
        {workspace().psfun(toy, "collapse").fun, resolve_class(toy, "ids")},
    };
    for (const auto& [F, wa] : cfgs) {
        INFO(F.name);
        std::vector<ConditionReport> rs = check_B_all(F, wa);
        auto ef = check_EF_all(F, wa);
        rs.insert(rs.end(), ef.begin(), ef.end());
        auto x = is_weak_equivalence(F).reports;
        rs.insert(rs.end(), x.begin(), x.end());
        for (const auto& r : rs) {
            INFO(r.tag);
            CHECK(recheck(r));
        }
    }
}
