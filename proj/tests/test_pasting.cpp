#include <catch_amalgamated.hpp>

#include "support.hpp"

using namespace testing;
using P = PastingExpr;

TEST_CASE("atoms and vertical composites evaluate through the tables") {
    const FinBicat& b = *fixture("appx-toy").bicat;
    TwoId g = two(b, "γ");
    CHECK(eval_pasting(b, P::atom(g)) == g);
    CHECK(eval_pasting(b, P::vcomp(P::atom(g), P::atom(g))) == b.vcomp(g, g));
    CHECK(eval_pasting(b, P::vcomp(P::atom(g), P::atom(g))) == two(b, "i_idB"));
    CHECK(eval_pasting(b, P::runit(one(b, "v"))) == two(b, "i_v"));
}

TEST_CASE("whiskering and inverses") {
    const FinBicat& b = *fixture("appx-toy").bicat;
    TwoId g = two(b, "γ");
    CHECK(eval_pasting(b, P::whisk_r(P::atom(g), one(b, "v"))) == two(b, "i_v"));
    CHECK(eval_pasting(b, P::inv(P::atom(g))) == g);
    CHECK(eval_pasting(b, P::hcomp(P::atom(g), P::id_on(one(b, "v")))) == two(b, "i_v"));
}

TEST_CASE("ill-typed expressions are rejected") {
    const FinBicat& b = *fixture("appx-toy").bicat;
    CHECK_THROWS_AS(eval_pasting(b, P::vcomp(P::atom(two(b, "γ")), P::atom(two(b, "i_v")))), TypingError);
    const FinBicat& a = *fixture("arrow2").bicat;
    CHECK_THROWS_AS(eval_pasting(a, P::inv(P::atom(two(a, "ν")))), InvertibilityError);
}

TEST_CASE("structural cells evaluate to identities on strict instances") {
    for (const auto& name : all_fixtures()) {
        const FinBicat& b = *fixture(name).bicat;
        REQUIRE(b.strict());
        for (std::size_t h = 0; h < b.one_count(); ++h)
            for (std::size_t g = 0; g < b.one_count(); ++g)
                for (std::size_t f = 0; f < b.one_count(); ++f) {
                    OneId H(h), G(g), F(f);
                    if (!b.composable(H, G) || !b.composable(G, F)) continue;
                    auto e = P::chain({P::assoc(H, G, F), P::assoc_inv(H, G, F)});
                    CHECK(b.is_identity(eval_pasting(b, e)));
                    CHECK(b.is_identity(eval_pasting(b, P::assoc(H, G, F))));
                }
        for (std::size_t f = 0; f < b.one_count(); ++f) {
            CHECK(b.is_identity(eval_pasting(b, P::chain({P::lunit_inv(OneId(f)), P::runit(OneId(f))}))));
        }
    }
}

TEST_CASE("evaluated boundaries match the inferred boundaries") {
    const FinBicat& b = *fixture("appx-toy").bicat;
    for (std::size_t x = 0; x < b.two_count(); ++x)
        for (std::size_t f = 0; f < b.one_count(); ++f) {
            TwoId a(x);
            OneId F(f);
            if (!b.composable(b.src1(a), F)) continue;
            TwoId r = eval_pasting(b, P::whisk_r(P::atom(a), F));
            CHECK(b.src1(r) == b.hcomp1(b.src1(a), F));
            CHECK(b.tgt1(r) == b.hcomp1(b.tgt1(a), F));
        }
}

TEST_CASE("vertical factors flatten in application order") {
    const FinBicat& b = *fixture("appx-toy").bicat;
    auto e = P::chain({P::atom(two(b, "i_idB")), P::atom(two(b, "γ")), P::atom(two(b, "γ"))});
    auto fs = e.vertical_factors();
    REQUIRE(fs.size() == 3);
    CHECK(fs[0].cell() == two(b, "i_idB"));
    CHECK(fs[1].cell() == two(b, "γ"));
}
