#include <catch_amalgamated.hpp>

#include "support.hpp"

using namespace testing;

TEST_CASE("toy fixture has the expected cells and is a strict bicategory") {
    const FinBicat& b = *fixture("appx-toy").bicat;
    CHECK(b.object_count() == 2);
    CHECK(b.one_count() == 3);
    CHECK(b.two_count() == 4);
    auto r = validate_bicat(b);
    CHECK(r.pass);
    CHECK(r.strict);
}

TEST_CASE("both choices of γ⊙γ are lawful") {
    CHECK(validate_bicat(*fixture("appx-toy").bicat).pass);
    CHECK(validate_bicat(*fixture("appx-toy-idem").bicat).pass);
}

TEST_CASE("every fixture validates") {
    for (const auto& name : all_fixtures()) {
        INFO(name);
        auto r = validate_bicat(*fixture(name).bicat);
        for (const auto& v : r.violations) UNSCOPED_INFO(v.law + ": " + v.detail);
        CHECK(r.pass);
    }
}

TEST_CASE("a corrupted whiskering entry is reported") {
    const FinBicat& b = *fixture("appx-toy").bicat;
    BicatTables t = b.tables();
    t.whisk_right[{two(b, "γ"), one(b, "v")}] = two(b, "γ");
    auto bad = FinBicat::build(t);
    auto r = validate_bicat(*bad);
    CHECK_FALSE(r.pass);
    CHECK((r.violates("typing") || r.violates("interchange")));
}

TEST_CASE("a missing table entry is a structural error naming the entry") {
    const FinBicat& b = *fixture("appx-toy").bicat;
    BicatTables t = b.tables();
    t.vcomp.erase({two(b, "γ"), two(b, "γ")});
    try {
        (void)FinBicat::build(t);
        FAIL("build accepted a partial vcomp table");
    } catch (const StructuralError& e) {
        CHECK_THAT(e.what(), Catch::Matchers::ContainsSubstring("γ"));
    }
}

TEST_CASE("horizontal composition of 1-cells") {
    const FinBicat& b = *fixture("appx-toy").bicat;
    CHECK(hcompose1(b, one(b, "idB"), one(b, "v")) == one(b, "v"));
    CHECK(hcompose1(b, one(b, "v"), one(b, "idA")) == one(b, "v"));
    CHECK_THROWS_AS(hcompose1(b, one(b, "v"), one(b, "idB")), Error);
}

TEST_CASE("vertical composition") {
    const FinBicat& b = *fixture("appx-toy").bicat;
    TwoId g = two(b, "γ"), i = two(b, "i_idB");
    CHECK(vcompose(b, g, i) == g);
    CHECK(vcompose(b, g, g) == i);
    CHECK_THROWS_AS(vcompose(b, g, two(b, "i_v")), Error);
    CHECK(vcompose(*fixture("appx-toy-idem").bicat, g, g) == g);
}

TEST_CASE("horizontal composition of 2-cells") {
    const FinBicat& b = *fixture("appx-toy").bicat;
    TwoId g = two(b, "γ"), iv = two(b, "i_v"), ib = two(b, "i_idB");
    CHECK(hcompose2(b, g, iv) == iv);
    CHECK(hcompose2(b, ib, iv) == iv);
    CHECK(b.whisk_right(g, one(b, "idB")) == g);
    CHECK(hcompose2(b, g, ib) == hcompose2_other(b, g, ib));
}

TEST_CASE("both interchange orders agree on every composable pair") {
    for (const auto& name : all_fixtures()) {
        const FinBicat& b = *fixture(name).bicat;
        for (std::size_t x = 0; x < b.two_count(); ++x)
            for (std::size_t y = 0; y < b.two_count(); ++y) {
                TwoId beta(y), alpha(x);
                if (!b.composable(b.src1(beta), b.src1(alpha))) continue;
                INFO(name << " " << b.name(beta) << " * " << b.name(alpha));
                CHECK(hcompose2(b, beta, alpha) == hcompose2_other(b, beta, alpha));
            }
    }
}

TEST_CASE("2-cell inverses agree with the brute-force oracle") {
    const FinBicat& toy = *fixture("appx-toy").bicat;
    CHECK(two_cell_inverse(toy, two(toy, "i_v")) == two(toy, "i_v"));
    CHECK(two_cell_inverse(toy, two(toy, "γ")) == two(toy, "γ"));
    const FinBicat& arrow = *fixture("arrow2").bicat;
    CHECK_FALSE(two_cell_inverse(arrow, two(arrow, "ν")).has_value());

    for (const auto& name : all_fixtures()) {
        const FinBicat& b = *fixture(name).bicat;
        for (std::size_t i = 0; i < b.two_count(); ++i) {
            TwoId a(i);
            auto inv = two_cell_inverse(b, a);
            CHECK(inv.has_value() == oracle_invertible(b, a));
            if (inv) CHECK(two_cell_inverse(b, *inv) == a);
        }
    }
}

TEST_CASE("internal equivalences agree with the brute-force oracle") {
    const FinBicat& toy = *fixture("appx-toy").bicat;
    auto w = internal_equivalence_witness(toy, one(toy, "idA"));
    REQUIRE(w);
    CHECK(w->reverse == one(toy, "idA"));
    CHECK_FALSE(internal_equivalence_witness(toy, one(toy, "v")));

    const FinBicat& iso = *fixture("iso2").bicat;
    auto e = internal_equivalence_witness(iso, one(iso, "e"));
    REQUIRE(e);
    CHECK(e->reverse == one(iso, "e'"));
    CHECK(e->unit == two(iso, "i_idX"));
    CHECK(e->counit == two(iso, "i_idY"));

    for (const auto& name : all_fixtures()) {
        const FinBicat& b = *fixture(name).bicat;
        for (std::size_t i = 0; i < b.one_count(); ++i) {
            INFO(name << " " << b.name(OneId(i)));
            CHECK(is_internal_equivalence(b, OneId(i)) == oracle_equivalence(b, OneId(i)));
        }
        for (std::size_t x = 0; x < b.object_count(); ++x) CHECK(is_internal_equivalence(b, b.id1(ObjId(x))));
    }
}

TEST_CASE("strict 1-cell inverses") {
    const FinBicat& iso = *fixture("iso2").bicat;
    CHECK(one_cell_isomorphism_inverse(iso, one(iso, "e")) == one(iso, "e'"));
    const FinBicat& toy = *fixture("appx-toy").bicat;
    CHECK_FALSE(one_cell_isomorphism_inverse(toy, one(toy, "v")));
}
