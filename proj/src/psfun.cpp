#include "bicat/psfun.hpp"

#include <fmt/format.h>

#include "bicat/cell_algebra.hpp"

namespace bicat {

namespace {

constexpr std::size_t kMaxPerLaw = 16;

class PsFunValidator {
public:
    explicit PsFunValidator(const PsFun& F) : F_(F), s_(*F.source), t_(*F.target) {}

    ValidationReport run() {
        check_boundaries();
        f2_laws();
        invertibility();
        naturality();
        assoc_coherence();
        unit_coherence();
        rep_.pass = rep_.violations.empty();
        rep_.strict = s_.strict() && t_.strict();
        return rep_;
    }

private:
    void fail(const std::string& law, std::string detail) {
        if (counts_[law]++ < kMaxPerLaw) rep_.violations.push_back({law, std::move(detail)});
    }

    void check_boundaries() {
        if (F_.on_objects.size() != s_.object_count() || F_.on_one.size() != s_.one_count() ||
            F_.on_two.size() != s_.two_count() || F_.sigma.size() != s_.object_count())
            throw StructuralError(F_.name + ": maps are not total on the source");
        for (ObjId x : F_.on_objects)
            if (x.index() >= t_.object_count()) throw StructuralError(F_.name + ": object image out of range");
        for (std::size_t f = 0; f < s_.one_count(); ++f) {
            OneId g = F_.on_one[f];
            if (g.index() >= t_.one_count() || t_.src(g) != F_.obj(s_.src(OneId(f))) ||
                t_.tgt(g) != F_.obj(s_.tgt(OneId(f))))
                throw StructuralError(fmt::format("{}: image of 1-cell {} has the wrong boundary", F_.name,
                                                  s_.name(OneId(f))));
        }
        for (std::size_t a = 0; a < s_.two_count(); ++a) {
            TwoId b = F_.on_two[a];
            if (b.index() >= t_.two_count() || t_.src1(b) != F_.one(s_.src1(TwoId(a))) ||
                t_.tgt1(b) != F_.one(s_.tgt1(TwoId(a))))
                throw StructuralError(fmt::format("{}: image of 2-cell {} has the wrong frame", F_.name,
                                                  s_.name(TwoId(a))));
        }
        for (std::size_t g = 0; g < s_.one_count(); ++g)
            for (std::size_t f = 0; f < s_.one_count(); ++f) {
                OneId G(g), Fc(f);
                if (!s_.composable(G, Fc)) continue;
                auto it = F_.psi.find({G, Fc});
                if (it == F_.psi.end())
                    throw StructuralError(fmt::format("{}: psi ({}, {}) missing", F_.name, s_.name(G), s_.name(Fc)));
                if (t_.src1(it->second) != F_.one(s_.hcomp1(G, Fc)) ||
                    t_.tgt1(it->second) != t_.hcomp1(F_.one(G), F_.one(Fc)))
                    throw StructuralError(fmt::format("{}: psi ({}, {}) has the wrong frame", F_.name, s_.name(G),
                                                      s_.name(Fc)));
            }
        for (std::size_t x = 0; x < s_.object_count(); ++x) {
            TwoId c = F_.sigma[x];
            if (c.index() >= t_.two_count() || t_.src1(c) != F_.one(s_.id1(ObjId(x))) ||
                t_.tgt1(c) != t_.id1(F_.obj(ObjId(x))))
                throw StructuralError(fmt::format("{}: sigma at {} has the wrong frame", F_.name, s_.name(ObjId(x))));
        }
    }

    void f2_laws() {
        for (std::size_t f = 0; f < s_.one_count(); ++f)
            if (F_.two(s_.id2(OneId(f))) != t_.id2(F_.one(OneId(f))))
                fail("F2-identity", "identity on " + s_.name(OneId(f)));
        for (const auto& [k, c] : s_.tables().vcomp)
            if (F_.two(c) != t_.vcomp(F_.two(k.first), F_.two(k.second)))
                fail("F2-vcomp", fmt::format("({}, {})", s_.name(k.first), s_.name(k.second)));
    }

    void invertibility() {
        for (const auto& [k, c] : F_.psi)
            if (!t_.invertible(c)) fail("psi-invertible", fmt::format("({}, {})", s_.name(k.first), s_.name(k.second)));
        for (std::size_t x = 0; x < s_.object_count(); ++x)
            if (!t_.invertible(F_.sigma[x])) fail("sigma-invertible", s_.name(ObjId(x)));
    }

    void naturality() {
        for (const auto& [k, c] : s_.tables().whisk_left) {
            auto [g, a] = k;
            OneId f = s_.src1(a), f2 = s_.tgt1(a);
            TwoId lhs = t_.vcomp(F_.psi_at(g, f2), F_.two(c));
            TwoId rhs = t_.vcomp(t_.whisk_left(F_.one(g), F_.two(a)), F_.psi_at(g, f));
            if (lhs != rhs) fail("psi-natural", fmt::format("left argument: {} ∗ {}", s_.name(g), s_.name(a)));
        }
        for (const auto& [k, c] : s_.tables().whisk_right) {
            auto [b, f] = k;
            OneId g = s_.src1(b), g2 = s_.tgt1(b);
            TwoId lhs = t_.vcomp(F_.psi_at(g2, f), F_.two(c));
            TwoId rhs = t_.vcomp(t_.whisk_right(F_.two(b), F_.one(f)), F_.psi_at(g, f));
            if (lhs != rhs) fail("psi-natural", fmt::format("right argument: {} ∗ {}", s_.name(b), s_.name(f)));
        }
    }

    void assoc_coherence() {
        for (const auto& [k, th] : s_.tables().assoc) {
            auto [h, g, f] = k;
            OneId Fh = F_.one(h), Fg = F_.one(g), Ff = F_.one(f);
            TwoId lhs = t_.vcomp(t_.assoc(Fh, Fg, Ff),
                                 t_.vcomp(t_.whisk_left(Fh, F_.psi_at(g, f)), F_.psi_at(h, s_.hcomp1(g, f))));
            TwoId rhs = t_.vcomp(t_.whisk_right(F_.psi_at(h, g), Ff),
                                 t_.vcomp(F_.psi_at(s_.hcomp1(h, g), f), F_.two(th)));
            if (lhs != rhs)
                fail("assoc-coherence", fmt::format("({}, {}, {})", s_.name(h), s_.name(g), s_.name(f)));
        }
    }

    void unit_coherence() {
        for (std::size_t i = 0; i < s_.one_count(); ++i) {
            OneId f(i);
            OneId Ff = F_.one(f);
            ObjId a = s_.src(f), b = s_.tgt(f);
            TwoId right = t_.vcomp(t_.runit(Ff), t_.vcomp(t_.whisk_left(Ff, F_.sigma[a.index()]),
                                                          F_.psi_at(f, s_.id1(a))));
            if (right != F_.two(s_.runit(f))) fail("unit-coherence", "right unit at " + s_.name(f));
            TwoId left = t_.vcomp(t_.lunit(Ff), t_.vcomp(t_.whisk_right(F_.sigma[b.index()], Ff),
                                                         F_.psi_at(s_.id1(b), f)));
            if (left != F_.two(s_.lunit(f))) fail("unit-coherence", "left unit at " + s_.name(f));
        }
    }

    const PsFun& F_;
    const FinBicat& s_;
    const FinBicat& t_;
    ValidationReport rep_;
    std::map<std::string, std::size_t> counts_;
};

// Identity when the 1-cells agree, otherwise the first invertible 2-cell.
TwoId connecting(const FinBicat& b, OneId from, OneId to, const std::string& what) {
    if (from == to) return b.id2(from);
    if (auto c = b.first_invertible(from, to)) return *c;
    throw ConstructionError(fmt::format("no invertible {} from {} to {}", what, b.name(from), b.name(to)));
}

}  // namespace

ValidationReport validate_psfun(const PsFun& F) { return PsFunValidator(F).run(); }

PsFun identity_psfun(const BicatPtr& b, std::string name) {
    PsFun F;
    F.name = std::move(name);
    F.source = F.target = b;
    for (std::size_t x = 0; x < b->object_count(); ++x) {
        F.on_objects.emplace_back(x);
        F.sigma.push_back(b->id2(b->id1(ObjId(x))));
    }
    for (std::size_t f = 0; f < b->one_count(); ++f) F.on_one.emplace_back(f);
    for (std::size_t a = 0; a < b->two_count(); ++a) F.on_two.emplace_back(a);
    for (const auto& [k, h] : b->tables().hcomp1) F.psi[k] = b->id2(h);
    return F;
}

std::optional<OneId> maps_into_counterexample(const PsFun& F, const WClass& w_src, const WClass& w_tgt) {
    for (OneId w : w_src.cells())
        if (!w_tgt.contains(F.one(w))) return w;
    return std::nullopt;
}

TwoCellRep universal_rep(const FinBicat& b, TwoId alpha) {
    ObjId a = b.src(b.src1(alpha));
    OneId i = b.id1(a);
    return {a, i, i, b.id2(b.hcomp1(i, i)), b.whisk_right(alpha, i)};
}

PsFun universal_pseudofunctor(const FractionBicat& fb, std::string name) {
    const FractionContext& ctx = *fb.ctx;
    const FinBicat& b = ctx.base();
    const FinBicat& t = *fb.bicat;
    CellAlgebra alg(b, ctx.options().strict_fast_path);
    PsFun U;
    U.name = std::move(name);
    U.source = ctx.cls().base_ptr();
    U.target = fb.bicat;
    auto span_of = [&](OneId f) { return Span{b.src(f), b.id1(b.src(f)), f}; };
    for (std::size_t x = 0; x < b.object_count(); ++x) U.on_objects.emplace_back(x);
    for (std::size_t f = 0; f < b.one_count(); ++f) U.on_one.push_back(fb.span_id(span_of(OneId(f))));
    for (std::size_t a = 0; a < b.two_count(); ++a) {
        TwoId al(a);
        U.on_two.push_back(fb.class_of(U.one(b.src1(al)), U.one(b.tgt1(al)), universal_rep(b, al)));
    }
    // Reading a composite 1-cell as a single leaf, or back.
    auto relabel = [&](const Word& s, const Word& t2) { return alg.atom(b.id2(s.value()), s, t2); };
    for (const auto& [k, gf] : b.tables().hcomp1) {
        auto [g, f] = k;
        Span sg = span_of(g), sf = span_of(f);
        SpanComposite c = ctx.compose_spans(sg, sf);
        Word IA = alg.w(sf.back), V = alg.w(c.v), ID = alg.w(b.id1(c.apex));
        Word G = alg.w(g), Fw = alg.w(f), IB = alg.w(sg.back), Fp = alg.w(c.f);
        Word Back = alg.w(c.span.back), Fwd = alg.w(c.span.fwd), GF = alg.w(gf);
        Cell alpha = alg.chain({relabel(alg.w(IA, V), Back), alg.inv(alg.runit(Back))});
        Cell rho = alg.atom(c.rho, alg.w(Fw, V), alg.w(IB, Fp));
        Cell beta = alg.chain({relabel(alg.w(GF, V), alg.w(alg.w(G, Fw), V)), alg.lwhisk(G, rho),
                               alg.lwhisk(G, alg.lunit(Fp)), relabel(alg.w(G, Fp), Fwd), alg.inv(alg.runit(Fwd))});
        TwoCellRep r{c.apex, c.v, b.id1(c.apex), alpha.cell, beta.cell};
        U.psi[k] = fb.class_of(U.one(gf), t.hcomp1(U.one(g), U.one(f)), r);
    }
    for (std::size_t x = 0; x < b.object_count(); ++x) {
        ObjId X(x);
        U.sigma.push_back(connecting(t, U.one(b.id1(X)), t.id1(X), "unitor component"));
    }
    return U;
}

TwoCellRep g_tilde_rep(const PsFun& F, const FractionBicat& source, const FractionBicat&, OneId s1, OneId s2,
                       const TwoCellRep& r) {
    const FinBicat& b = *F.target;
    const Span& x = source.spans[s1.index()];
    const Span& y = source.spans[s2.index()];
    auto conj = [&](OneId p1, OneId q1, OneId p2, OneId q2, TwoId c) {
        TwoId pre = *b.inverse(F.psi_at(p1, q1));
        return b.vcomp(F.psi_at(p2, q2), b.vcomp(F.two(c), pre));
    };
    return {F.obj(r.apex), F.one(r.leg1), F.one(r.leg2), conj(x.back, r.leg1, y.back, r.leg2, r.alpha),
            conj(x.fwd, r.leg1, y.fwd, r.leg2, r.beta)};
}

GTilde induce_g_tilde(const PsFun& F, const WClass& w_a, const WClass& w_b, const SearchOptions& opt) {
    if (!w_a.bf(opt).pass()) throw PreconditionError("class '" + w_a.name() + "' fails the fraction axioms");
    if (!w_b.bf(opt).pass()) throw PreconditionError("class '" + w_b.name() + "' fails the fraction axioms");
    const WClass& sat = w_b.saturated();
    if (auto bad = maps_into_counterexample(F, w_a, sat))
        throw PreconditionError(fmt::format("{} sends {} outside the saturation of '{}'", F.name,
                                            F.source->name(*bad), w_b.name()));
    GTilde g{materialize_fractions(w_a, opt), materialize_fractions(sat, opt), F, {}};
    const FinBicat& s = *g.source.bicat;
    const FinBicat& t = *g.target.bicat;
    PsFun& G = g.fun;
    G.name = F.name + "~";
    G.source = g.source.bicat;
    G.target = g.target.bicat;
    G.on_objects = F.on_objects;
    for (const Span& sp : g.source.spans)
        G.on_one.push_back(g.target.span_id({F.obj(sp.apex), F.one(sp.back), F.one(sp.fwd)}));
    for (std::size_t c = 0; c < g.source.classes.size(); ++c) {
        const TwoCellClass& cl = g.source.classes[c];
        G.on_two.push_back(g_tilde_on_two_cell(g, TwoId(c), cl.canonical));
    }
    for (const auto& [k, gf] : s.tables().hcomp1)
        G.psi[k] = connecting(t, G.one(gf), t.hcomp1(G.one(k.first), G.one(k.second)), "composition component");
    for (std::size_t x = 0; x < s.object_count(); ++x)
        G.sigma.push_back(connecting(t, G.one(s.id1(ObjId(x))), t.id1(G.obj(ObjId(x))), "unitor component"));
    return g;
}

TwoId g_tilde_on_two_cell(const GTilde& g, TwoId cls, const TwoCellRep& member) {
    const TwoCellClass& cl = g.source.classes[cls.index()];
    const Span& a = g.source.spans[cl.src.index()];
    const Span& b = g.source.spans[cl.tgt.index()];
    const PsFun& F = g.base;
    OneId ia = g.target.span_id({F.obj(a.apex), F.one(a.back), F.one(a.fwd)});
    OneId ib = g.target.span_id({F.obj(b.apex), F.one(b.back), F.one(b.fwd)});
    return g.target.class_of(ia, ib, g_tilde_rep(F, g.source, g.target, cl.src, cl.tgt, member));
}

}  // namespace bicat
