#include <catch_amalgamated.hpp>

#include "support.hpp"

using namespace testing;

namespace {

Span span(const FinBicat& b, const std::string& apex, const std::string& back, const std::string& fwd) {
    return {ob(b, apex), one(b, back), one(b, fwd)};
}

}  // namespace

TEST_CASE("identity and declared pseudofunctors validate") {
    for (const auto& name : all_fixtures()) {
        INFO(name);
        CHECK(validate_psfun(identity_psfun(fixture(name).bicat)).pass);
    }
    const Document& toy = fixture("appx-toy");
    auto c = workspace().psfun(toy, "collapse");
    CHECK(validate_psfun(c.fun).pass);
    auto incl = workspace().psfun(fixture("appx-toy-point"), "incl");
    CHECK(validate_psfun(incl.fun).pass);
}

TEST_CASE("replacing an identity coherence cell by γ breaks unit coherence") {
    const Document& toy = fixture("appx-toy");
    const FinBicat& b = *toy.bicat;
    PsFun F = identity_psfun(toy.bicat);
    F.psi[{one(b, "idB"), one(b, "idB")}] = two(b, "γ");
    auto r = validate_psfun(F);
    CHECK_FALSE(r.pass);
    CHECK(r.violates("unit-coherence"));
    CHECK_FALSE(r.violates("psi-natural"));
}

TEST_CASE("a non-natural coherence cell is reported") {
    const Document& toy = fixture("appx-toy");
    const FinBicat& b = *toy.bicat;
    PsFun F = identity_psfun(toy.bicat);
    // F(γ) = i breaks vertical composition nowhere but is not natural once ψ is γ.
    F.on_two[two(b, "γ").index()] = two(b, "i_idB");
    F.psi[{one(b, "idB"), one(b, "idB")}] = two(b, "γ");
    auto r = validate_psfun(F);
    CHECK_FALSE(r.pass);
}

TEST_CASE("mapping classes into classes") {
    const Document& toy = fixture("appx-toy");
    const FinBicat& b = *toy.bicat;
    PsFun id = identity_psfun(toy.bicat);
    WClass w = resolve_class(toy, "W");
    CHECK(maps_into(id, w, saturate(w)));
    CHECK(maps_into_counterexample(id, w, saturate(quasi_units(toy.bicat))) == one(b, "v"));

    FractionBicat fb = materialize_fractions(w);
    PsFun U = universal_pseudofunctor(fb);
    CHECK(maps_into(U, w, internal_equivalences_class(fb.bicat)));
}

TEST_CASE("induced pseudofunctor for the identity") {
    const Document& toy = fixture("appx-toy");
    const FinBicat& b = *toy.bicat;
    PsFun id = identity_psfun(toy.bicat);
    WClass w = resolve_class(toy, "W");
    GTilde g = induce_g_tilde(id, w, w);
    OneId avv = g.source.span_id(span(b, "A", "v", "v"));
    CHECK(g.target.spans[g.fun.one(avv).index()] == span(b, "A", "v", "v"));
    for (std::size_t i = 0; i < g.source.spans.size(); ++i)
        CHECK(g.target.spans[g.fun.one(OneId(i)).index()] == g.source.spans[i]);
    CHECK(validate_psfun(g.fun).pass);

    CHECK_THROWS_AS(induce_g_tilde(id, w, quasi_units(toy.bicat)), PreconditionError);
}

TEST_CASE("induced pseudofunctor identifies γ with the identity once v is inverted") {
    const Document& toy = fixture("appx-toy");
    const FinBicat& b = *toy.bicat;
    PsFun id = identity_psfun(toy.bicat);
    GTilde g = induce_g_tilde(id, resolve_class(toy, "Wids"), resolve_class(toy, "W"));
    OneId idb = g.source.span_id(span(b, "B", "idB", "idB"));
    TwoId cg = g.source.class_of(idb, idb, {ob(b, "B"), one(b, "idB"), one(b, "idB"), two(b, "i_idB"), two(b, "γ")});
    TwoId ci =
        g.source.class_of(idb, idb, {ob(b, "B"), one(b, "idB"), one(b, "idB"), two(b, "i_idB"), two(b, "i_idB")});
    REQUIRE(cg != ci);
    CHECK(g.fun.two(cg) == g.fun.two(ci));
    CHECK(g.target.bicat->is_identity(g.fun.two(cg)));
    CHECK(validate_psfun(g.fun).pass);
}

TEST_CASE("induced 2-cell map does not depend on the representative") {
    struct Case {
        std::string fixture, psfun, wa, wb;
    };
    for (const auto& c : std::vector<Case>{{"appx-toy", "id", "W", "W"},
                                           {"appx-toy", "id", "Wids", "W"},
                                           {"appx-toy", "id", "min", "min"},
                                           {"iso2", "id", "ids", "all"},
                                           {"appx-toy", "collapse", "ids", "ids"}}) {
        INFO(c.fixture << " " << c.psfun << " " << c.wa << " " << c.wb);
        const Document& d = fixture(c.fixture);
        auto r = workspace().psfun(d, c.psfun);
        GTilde g = induce_g_tilde(r.fun, resolve_class(d, c.wa), r.target_class(c.wb));
        for (std::size_t k = 0; k < g.source.classes.size(); ++k)
            for (const auto& m : g.source.classes[k].members)
                CHECK(g_tilde_on_two_cell(g, TwoId(k), m) == g_tilde_on_two_cell(g, TwoId(k)));
        CHECK(validate_psfun(g.fun).pass);
    }
}
