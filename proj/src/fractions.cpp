#include "bicat/fractions.hpp"

#include <fmt/format.h>
#include <set>

#include "bicat/cell_algebra.hpp"

namespace bicat {

FractionContext::FractionContext(WClass w, SearchOptions opt) : w_(std::move(w)), opt_(opt) {}

std::string FractionContext::span_name(const Span& s) const {
    const auto& b = base();
    return fmt::format("({},{},{})", b.name(s.apex), b.name(s.back), b.name(s.fwd));
}

std::string FractionContext::rep_name(const TwoCellRep& r) const {
    const auto& b = base();
    return fmt::format("[{},{},{},{},{}]", b.name(r.apex), b.name(r.leg1), b.name(r.leg2), b.name(r.alpha),
                       b.name(r.beta));
}

std::vector<Span> FractionContext::enumerate_spans(ObjId src, ObjId tgt) const {
    const auto& b = base();
    std::vector<Span> out;
    for (std::size_t a = 0; a < b.object_count(); ++a)
        for (OneId w : b.hom(ObjId(a), src)) {
            if (!w_.contains(w)) continue;
            for (OneId f : b.hom(ObjId(a), tgt)) out.push_back({ObjId(a), w, f});
        }
    return out;
}

std::vector<Span> FractionContext::all_spans() const {
    const auto& b = base();
    std::vector<Span> out;
    for (std::size_t a = 0; a < b.object_count(); ++a)
        for (OneId w : b.ones_from(ObjId(a))) {
            if (!w_.contains(w)) continue;
            for (OneId f : b.ones_from(ObjId(a))) out.push_back({ObjId(a), w, f});
        }
    return out;
}

std::optional<std::string> FractionContext::validate_rep(const TwoCellRep& r, const Span& s1, const Span& s2) const {
    const auto& b = base();
    if (span_src(s1) != span_src(s2) || span_tgt(s1) != span_tgt(s2)) return "spans are not parallel";
    if (b.src(r.leg1) != r.apex || b.tgt(r.leg1) != s1.apex) return "leg1 has the wrong boundary";
    if (b.src(r.leg2) != r.apex || b.tgt(r.leg2) != s2.apex) return "leg2 has the wrong boundary";
    OneId wv1 = b.hcomp1(s1.back, r.leg1), wv2 = b.hcomp1(s2.back, r.leg2);
    if (b.src1(r.alpha) != wv1 || b.tgt1(r.alpha) != wv2) return "alpha has the wrong frame";
    OneId fv1 = b.hcomp1(s1.fwd, r.leg1), fv2 = b.hcomp1(s2.fwd, r.leg2);
    if (b.src1(r.beta) != fv1 || b.tgt1(r.beta) != fv2) return "beta has the wrong frame";
    if (!b.invertible(r.alpha)) return "alpha is not invertible";
    if (!w_.contains(wv1)) return "back∘leg1 is not in W";
    return std::nullopt;
}

std::vector<TwoCellRep> FractionContext::enumerate_reps(const Span& s1, const Span& s2) const {
    const auto& b = base();
    std::vector<TwoCellRep> out;
    for (std::size_t a = 0; a < b.object_count(); ++a) {
        ObjId A(a);
        for (OneId v1 : b.hom(A, s1.apex)) {
            OneId wv1 = b.hcomp1(s1.back, v1);
            if (!w_.contains(wv1)) continue;
            OneId fv1 = b.hcomp1(s1.fwd, v1);
            for (OneId v2 : b.hom(A, s2.apex)) {
                OneId wv2 = b.hcomp1(s2.back, v2), fv2 = b.hcomp1(s2.fwd, v2);
                for (TwoId al : b.cells(wv1, wv2)) {
                    if (!b.invertible(al)) continue;
                    for (TwoId be : b.cells(fv1, fv2)) out.push_back({A, v1, v2, al, be});
                }
            }
        }
    }
    return out;
}

std::optional<Refinement> FractionContext::reps_equivalent(const TwoCellRep& r1, const TwoCellRep& r2,
                                                           const Span& s1, const Span& s2) const {
    const auto& b = base();
    CellAlgebra alg(b, opt_.strict_fast_path);
    Word W1 = alg.w(s1.back), W2 = alg.w(s2.back), F1 = alg.w(s1.fwd), F2 = alg.w(s2.fwd);
    Word L1 = alg.w(r1.leg1), L2 = alg.w(r1.leg2), M1 = alg.w(r2.leg1), M2 = alg.w(r2.leg2);
    Cell a1 = alg.atom(r1.alpha, alg.w(W1, L1), alg.w(W2, L2));
    Cell a2 = alg.atom(r2.alpha, alg.w(W1, M1), alg.w(W2, M2));
    Cell b1 = alg.atom(r1.beta, alg.w(F1, L1), alg.w(F2, L2));
    Cell b2 = alg.atom(r2.beta, alg.w(F1, M1), alg.w(F2, M2));
    OneId wl1 = b.hcomp1(s1.back, r1.leg1);

    // Both sides of the compatibility square for the outer pair (X1, X2).
    auto compatible = [&](const Cell& c1, const Cell& c2, const Word& X1, const Word& X2, const Cell& z1c,
                          const Cell& z2c, const Word& Z, const Word& Zp) {
        Cell lhs = alg.chain({alg.rwhisk(c1, Z), alg.lwhisk(X2, z2c)});
        Cell rhs = alg.chain({alg.lwhisk(X1, z1c), alg.rwhisk(c2, Zp)});
        Word s = alg.w(alg.w(X1, c1.src.right()), Z);
        Word t = alg.w(alg.w(X2, c2.tgt.right()), Zp);
        return alg.cast(lhs, s, t).cell == alg.cast(rhs, s, t).cell;
    };

    for (std::size_t e = 0; e < b.object_count(); ++e) {
        ObjId E(e);
        for (OneId z : b.hom(E, r1.apex)) {
            if (!w_.contains(b.hcomp1(wl1, z))) continue;
            Word Z = alg.w(z);
            for (OneId zp : b.hom(E, r2.apex)) {
                Word Zp = alg.w(zp);
                Word lz1 = alg.w(L1, Z), mz1 = alg.w(M1, Zp), lz2 = alg.w(L2, Z), mz2 = alg.w(M2, Zp);
                for (TwoId z1 : b.cells(lz1.value(), mz1.value())) {
                    if (!b.invertible(z1)) continue;
                    Cell z1c = alg.atom(z1, lz1, mz1);
                    for (TwoId z2 : b.cells(lz2.value(), mz2.value())) {
                        if (!b.invertible(z2)) continue;
                        Cell z2c = alg.atom(z2, lz2, mz2);
                        if (!compatible(a1, a2, W1, W2, z1c, z2c, Z, Zp)) continue;
                        if (!compatible(b1, b2, F1, F2, z1c, z2c, Z, Zp)) continue;
                        return Refinement{E, z, zp, z1, z2};
                    }
                }
            }
        }
    }
    return std::nullopt;
}

std::optional<bool> FractionContext::fast_path_equivalent(const TwoCellRep& r1, const TwoCellRep& r2,
                                                          const Span& s1, const Span&) const {
    if (r1.apex != r2.apex || r1.leg1 != r2.leg1 || r1.leg2 != r2.leg2 || r1.alpha != r2.alpha) return std::nullopt;
    const auto& b = base();
    OneId wl1 = b.hcomp1(s1.back, r1.leg1);
    for (std::size_t e = 0; e < b.object_count(); ++e)
        for (OneId z : b.hom(ObjId(e), r1.apex)) {
            if (!w_.contains(b.hcomp1(wl1, z))) continue;
            if (b.whisk_right(r1.beta, z) == b.whisk_right(r2.beta, z)) return true;
        }
    return false;
}

SpanComposite FractionContext::compose_spans(const Span& outer, const Span& inner) const {
    const auto& b = base();
    if (span_tgt(inner) != span_src(outer))
        throw CompositionError(fmt::format("spans {} and {} do not compose", span_name(outer), span_name(inner)));
    // Canonical square completing inner.fwd against outer.back.
    for (std::size_t d = 0; d < b.object_count(); ++d)
        for (OneId v : b.hom(ObjId(d), inner.apex)) {
            if (!w_.contains(v)) continue;
            OneId fv = b.hcomp1(inner.fwd, v);
            for (OneId f : b.hom(ObjId(d), outer.apex))
                if (auto rho = b.first_invertible(fv, b.hcomp1(outer.back, f))) {
                    Span s{ObjId(d), b.hcomp1(inner.back, v), b.hcomp1(outer.fwd, f)};
                    return {s, ObjId(d), v, f, *rho};
                }
        }
    throw ConstructionError(fmt::format("no square completes {} against {} (axiom BF3 fails)", b.name(inner.fwd),
                                        b.name(outer.back)));
}

Span FractionContext::identity_span(ObjId x) const {
    OneId i = base().id1(x);
    return {x, i, i};
}

TwoCellRep FractionContext::identity_rep(const Span& s) const {
    const auto& b = base();
    OneId i = b.id1(s.apex);
    return {s.apex, i, i, b.id2(b.hcomp1(s.back, i)), b.id2(b.hcomp1(s.fwd, i))};
}

template <class Visit>
bool FractionContext::vertical_search(const TwoCellRep& upper, const TwoCellRep& lower, const Span& s1,
                                      const Span& s2, const Span& s3, Visit&& visit) const {
    const auto& b = base();
    CellAlgebra alg(b, opt_.strict_fast_path);
    Word W1 = alg.w(s1.back), W2 = alg.w(s2.back), W3 = alg.w(s3.back);
    Word F1 = alg.w(s1.fwd), F2 = alg.w(s2.fwd), F3 = alg.w(s3.fwd);
    Word V1 = alg.w(lower.leg1), V2 = alg.w(lower.leg2), U2 = alg.w(upper.leg1), U3 = alg.w(upper.leg2);
    Cell al = alg.atom(lower.alpha, alg.w(W1, V1), alg.w(W2, V2));
    Cell be = alg.atom(lower.beta, alg.w(F1, V1), alg.w(F2, V2));
    Cell al2 = alg.atom(upper.alpha, alg.w(W2, U2), alg.w(W3, U3));
    Cell be2 = alg.atom(upper.beta, alg.w(F2, U2), alg.w(F3, U3));
    OneId wv1 = b.hcomp1(s1.back, lower.leg1);
    for (std::size_t c = 0; c < b.object_count(); ++c)
        for (OneId r : b.hom(ObjId(c), lower.apex)) {
            OneId leg1 = b.hcomp1(lower.leg1, r);
            if (!w_.contains(b.hcomp1(s1.back, leg1))) continue;
            (void)wv1;
            Word R = alg.w(r);
            for (OneId s : b.hom(ObjId(c), upper.apex)) {
                Word S = alg.w(s);
                Word vr = alg.w(V2, R), us = alg.w(U2, S);
                for (TwoId rho : b.cells(vr.value(), us.value())) {
                    if (!b.invertible(rho)) continue;
                    Cell rc = alg.atom(rho, vr, us);
                    Word src_a = alg.w(W1, alg.w(V1, R)), tgt_a = alg.w(W3, alg.w(U3, S));
                    Word src_b = alg.w(F1, alg.w(V1, R)), tgt_b = alg.w(F3, alg.w(U3, S));
                    Cell a = alg.cast(alg.chain({alg.rwhisk(al, R), alg.lwhisk(W2, rc), alg.rwhisk(al2, S)}), src_a,
                                      tgt_a);
                    Cell bb = alg.cast(alg.chain({alg.rwhisk(be, R), alg.lwhisk(F2, rc), alg.rwhisk(be2, S)}), src_b,
                                       tgt_b);
                    if (visit(TwoCellRep{ObjId(c), leg1, b.hcomp1(upper.leg2, s), a.cell, bb.cell})) return true;
                }
            }
        }
    return false;
}

TwoCellRep FractionContext::vertical(const TwoCellRep& upper, const TwoCellRep& lower, const Span& s1,
                                     const Span& s2, const Span& s3) const {
    std::optional<TwoCellRep> out;
    vertical_search(upper, lower, s1, s2, s3, [&](const TwoCellRep& r) {
        out = r;
        return true;
    });
    if (!out)
        throw ConstructionError(fmt::format("no connecting square for {} after {}", rep_name(upper), rep_name(lower)));
    return *out;
}

std::vector<TwoCellRep> FractionContext::vertical_all(const TwoCellRep& upper, const TwoCellRep& lower,
                                                      const Span& s1, const Span& s2, const Span& s3) const {
    std::vector<TwoCellRep> out;
    vertical_search(upper, lower, s1, s2, s3, [&](const TwoCellRep& r) {
        out.push_back(r);
        return false;
    });
    return out;
}

TwoCellRep FractionContext::whisker_left(const Span& g, const TwoCellRep& r, const Span& s1, const Span& s2) const {
    const auto& b = base();
    CellAlgebra alg(b, opt_.strict_fast_path);
    SpanComposite c1 = compose_spans(g, s1), c2 = compose_spans(g, s2);
    Word WG = alg.w(g.back), G = alg.w(g.fwd);
    Word W1 = alg.w(s1.back), W2 = alg.w(s2.back), F1 = alg.w(s1.fwd), F2 = alg.w(s2.fwd);
    Word V1 = alg.w(r.leg1), V2 = alg.w(r.leg2);
    Word P1 = alg.w(c1.v), P2 = alg.w(c2.v), Q1 = alg.w(c1.f), Q2 = alg.w(c2.f);
    Cell rho1 = alg.atom(c1.rho, alg.w(F1, P1), alg.w(WG, Q1));
    Cell rho2 = alg.atom(c2.rho, alg.w(F2, P2), alg.w(WG, Q2));
    Cell al = alg.atom(r.alpha, alg.w(W1, V1), alg.w(W2, V2));
    Cell be = alg.atom(r.beta, alg.w(F1, V1), alg.w(F2, V2));
    OneId back1 = c1.span.back;

    for (std::size_t t = 0; t < b.object_count(); ++t) {
        ObjId T(t);
        for (OneId t1 : b.hom(T, c1.apex)) {
            if (!w_.contains(b.hcomp1(back1, t1))) continue;
            Word T1 = alg.w(t1);
            for (OneId t2 : b.hom(T, c2.apex)) {
                Word T2 = alg.w(t2);
                for (OneId e : b.hom(T, r.apex)) {
                    Word E = alg.w(e);
                    Word pt1 = alg.w(P1, T1), ve1 = alg.w(V1, E), pt2 = alg.w(P2, T2), ve2 = alg.w(V2, E);
                    for (TwoId l1 : b.cells(pt1.value(), ve1.value())) {
                        if (!b.invertible(l1)) continue;
                        Cell lam1 = alg.atom(l1, pt1, ve1);
                        for (TwoId l2 : b.cells(pt2.value(), ve2.value())) {
                            if (!b.invertible(l2)) continue;
                            Cell lam2 = alg.atom(l2, pt2, ve2);
                            Cell x = alg.chain({alg.rwhisk(alg.inv(rho1), T1), alg.lwhisk(F1, lam1), alg.rwhisk(be, E),
                                                alg.lwhisk(F2, alg.inv(lam2)), alg.rwhisk(rho2, T2)});
                            Word qt1 = alg.w(Q1, T1), qt2 = alg.w(Q2, T2);
                            Cell target = alg.cast(x, alg.w(WG, qt1), alg.w(WG, qt2));
                            for (TwoId m : b.cells(qt1.value(), qt2.value())) {
                                Cell mu = alg.atom(m, qt1, qt2);
                                if (alg.lwhisk(WG, mu).cell != target.cell) continue;
                                Cell a = alg.chain({alg.lwhisk(W1, lam1), alg.rwhisk(al, E), alg.lwhisk(W2, alg.inv(lam2))});
                                a = alg.cast(a, alg.w(alg.w(W1, P1), T1), alg.w(alg.w(W2, P2), T2));
                                Cell bb = alg.cast(alg.lwhisk(G, mu), alg.w(alg.w(G, Q1), T1), alg.w(alg.w(G, Q2), T2));
                                return {T, t1, t2, a.cell, bb.cell};
                            }
                        }
                    }
                }
            }
        }
    }
    throw ConstructionError(fmt::format("no whiskering data for {} ∗ {}", span_name(g), rep_name(r)));
}

TwoCellRep FractionContext::whisker_right(const TwoCellRep& r, const Span& h, const Span& s1, const Span& s2) const {
    const auto& b = base();
    CellAlgebra alg(b, opt_.strict_fast_path);
    SpanComposite c1 = compose_spans(s1, h), c2 = compose_spans(s2, h);
    Word U = alg.w(h.back), H = alg.w(h.fwd);
    Word W1 = alg.w(s1.back), W2 = alg.w(s2.back), F1 = alg.w(s1.fwd), F2 = alg.w(s2.fwd);
    Word V1 = alg.w(r.leg1), V2 = alg.w(r.leg2);
    Word D1 = alg.w(c1.v), D2 = alg.w(c2.v), Q1 = alg.w(c1.f), Q2 = alg.w(c2.f);
    Cell rho1 = alg.atom(c1.rho, alg.w(H, D1), alg.w(W1, Q1));
    Cell rho2 = alg.atom(c2.rho, alg.w(H, D2), alg.w(W2, Q2));
    Cell al = alg.atom(r.alpha, alg.w(W1, V1), alg.w(W2, V2));
    Cell be = alg.atom(r.beta, alg.w(F1, V1), alg.w(F2, V2));
    OneId back1 = c1.span.back;

    for (std::size_t t = 0; t < b.object_count(); ++t) {
        ObjId T(t);
        for (OneId t1 : b.hom(T, c1.apex)) {
            if (!w_.contains(b.hcomp1(back1, t1))) continue;
            Word T1 = alg.w(t1);
            for (OneId t2 : b.hom(T, c2.apex)) {
                Word T2 = alg.w(t2);
                Word dt1 = alg.w(D1, T1), dt2 = alg.w(D2, T2);
                for (TwoId k : b.cells(dt1.value(), dt2.value())) {
                    if (!b.invertible(k)) continue;
                    Cell kappa = alg.atom(k, dt1, dt2);
                    for (OneId e : b.hom(T, r.apex)) {
                        Word E = alg.w(e);
                        Word qt1 = alg.w(Q1, T1), ve1 = alg.w(V1, E), qt2 = alg.w(Q2, T2), ve2 = alg.w(V2, E);
                        for (TwoId l1 : b.cells(qt1.value(), ve1.value())) {
                            if (!b.invertible(l1)) continue;
                            Cell lam1 = alg.atom(l1, qt1, ve1);
                            for (TwoId l2 : b.cells(qt2.value(), ve2.value())) {
                                if (!b.invertible(l2)) continue;
                                Cell lam2 = alg.atom(l2, qt2, ve2);
                                Word src = alg.w(H, dt1), tgt = alg.w(W2, ve2);
                                Cell route_a = alg.cast(
                                    alg.chain({alg.lwhisk(H, kappa), alg.rwhisk(rho2, T2), alg.lwhisk(W2, lam2)}), src, tgt);
                                Cell route_b = alg.cast(
                                    alg.chain({alg.rwhisk(rho1, T1), alg.lwhisk(W1, lam1), alg.rwhisk(al, E)}), src, tgt);
                                if (route_a.cell != route_b.cell) continue;
                                Cell a = alg.cast(alg.lwhisk(U, kappa), alg.w(alg.w(U, D1), T1), alg.w(alg.w(U, D2), T2));
                                Cell bb = alg.chain({alg.lwhisk(F1, lam1), alg.rwhisk(be, E), alg.lwhisk(F2, alg.inv(lam2))});
                                bb = alg.cast(bb, alg.w(alg.w(F1, Q1), T1), alg.w(alg.w(F2, Q2), T2));
                                return {T, t1, t2, a.cell, bb.cell};
                            }
                        }
                    }
                }
            }
        }
    }
    throw ConstructionError(fmt::format("no whiskering data for {} ∗ {}", rep_name(r), span_name(h)));
}

OneId FractionBicat::span_id(const Span& s) const {
    auto it = span_index.find(s);
    if (it == span_index.end()) throw ConstructionError("span " + ctx->span_name(s) + " is not materialized");
    return it->second;
}

TwoId FractionBicat::class_of(OneId s1, OneId s2, const TwoCellRep& r) const {
    auto fr = rep_index.find({s1, s2});
    if (fr != rep_index.end()) {
        auto it = fr->second.find(r);
        if (it != fr->second.end()) return it->second;
    }
    throw ConstructionError(fmt::format("{} is not a valid representative from {} to {}", ctx->rep_name(r),
                                        ctx->span_name(spans[s1.index()]), ctx->span_name(spans[s2.index()])));
}

namespace {

class Materializer {
public:
    Materializer(const WClass& w, const SearchOptions& opt) : opt_(opt) {
        out_.ctx = std::make_shared<const FractionContext>(w, opt);
    }

    FractionBicat run() {
        const auto& ctx = *out_.ctx;
        const auto& b = ctx.base();
        out_.spans = ctx.all_spans();
        for (std::size_t i = 0; i < out_.spans.size(); ++i) out_.span_index[out_.spans[i]] = OneId(i);

        BicatTables t;
        for (std::size_t x = 0; x < b.object_count(); ++x) t.objects.push_back(b.name(ObjId(x)));
        for (const auto& s : out_.spans) t.one_cells.push_back({ctx.span_name(s), ctx.span_src(s), ctx.span_tgt(s)});
        for (std::size_t x = 0; x < b.object_count(); ++x) t.id1.push_back(out_.span_id(ctx.identity_span(ObjId(x))));

        const std::size_t n1 = out_.spans.size();
        for (std::size_t g = 0; g < n1; ++g)
            for (std::size_t f = 0; f < n1; ++f) {
                const Span &G = out_.spans[g], &F = out_.spans[f];
                if (ctx.span_tgt(F) != ctx.span_src(G)) continue;
                t.hcomp1[{OneId(g), OneId(f)}] = out_.span_id(ctx.compose_spans(G, F).span);
            }

        build_classes(t);

        const std::size_t n2 = out_.classes.size();
        for (std::size_t s = 0; s < n1; ++s) t.id2.push_back(class_of(OneId(s), OneId(s), ctx.identity_rep(out_.spans[s])));
        frames_by_src_.assign(n1, {});
        for (std::size_t c = 0; c < n2; ++c) frames_by_src_[out_.classes[c].src.index()].push_back(TwoId(c));

        // Vertical composition.
        auto vrows = parallel_map<std::vector<std::pair<std::pair<TwoId, TwoId>, TwoId>>>(n2, opt_.jobs, [&](std::size_t a) {
            std::vector<std::pair<std::pair<TwoId, TwoId>, TwoId>> row;
            const auto& A = out_.classes[a];
            for (TwoId bb : frames_by_src_[A.tgt.index()]) {
                const auto& B = out_.classes[bb.index()];
                TwoCellRep r = ctx.vertical(B.canonical, A.canonical, span(A.src), span(A.tgt), span(B.tgt));
                row.push_back({{bb, TwoId(a)}, class_of(A.src, B.tgt, r)});
            }
            return row;
        });
        for (auto& row : vrows)
            for (auto& [k, v] : row) t.vcomp[k] = v;

        // Whiskering.
        auto wrows = parallel_map<std::pair<std::vector<std::pair<std::pair<OneId, TwoId>, TwoId>>,
                                            std::vector<std::pair<std::pair<TwoId, OneId>, TwoId>>>>(
            n2, opt_.jobs, [&](std::size_t a) {
                std::pair<std::vector<std::pair<std::pair<OneId, TwoId>, TwoId>>,
                          std::vector<std::pair<std::pair<TwoId, OneId>, TwoId>>>
                    res;
                const auto& A = out_.classes[a];
                const Span &s1 = span(A.src), &s2 = span(A.tgt);
                for (std::size_t g = 0; g < n1; ++g) {
                    const Span& G = out_.spans[g];
                    if (ctx.span_src(G) == ctx.span_tgt(s1)) {
                        TwoCellRep r = ctx.whisker_left(G, A.canonical, s1, s2);
                        OneId from = out_.span_id(ctx.compose_spans(G, s1).span);
                        OneId to = out_.span_id(ctx.compose_spans(G, s2).span);
                        res.first.push_back({{OneId(g), TwoId(a)}, class_of(from, to, r)});
                    }
                    if (ctx.span_tgt(G) == ctx.span_src(s1)) {
                        TwoCellRep r = ctx.whisker_right(A.canonical, G, s1, s2);
                        OneId from = out_.span_id(ctx.compose_spans(s1, G).span);
                        OneId to = out_.span_id(ctx.compose_spans(s2, G).span);
                        res.second.push_back({{TwoId(a), OneId(g)}, class_of(from, to, r)});
                    }
                }
                return res;
            });
        for (auto& [l, r] : wrows) {
            for (auto& [k, v] : l) t.whisk_left[k] = v;
            for (auto& [k, v] : r) t.whisk_right[k] = v;
        }

        id2_ = t.id2;
        vcomp_ = &t.vcomp;

        for (std::size_t h = 0; h < n1; ++h)
            for (std::size_t g = 0; g < n1; ++g) {
                if (!composable(t, OneId(h), OneId(g))) continue;
                for (std::size_t f = 0; f < n1; ++f) {
                    if (!composable(t, OneId(g), OneId(f))) continue;
                    OneId H(h), G(g), F(f);
                    OneId from = t.hcomp1.at({H, t.hcomp1.at({G, F})});
                    OneId to = t.hcomp1.at({t.hcomp1.at({H, G}), F});
                    t.assoc[{H, G, F}] = connecting(from, to, "associator");
                }
            }
        for (std::size_t f = 0; f < n1; ++f) {
            OneId F(f);
            const Span& s = out_.spans[f];
            OneId ri = t.hcomp1.at({F, t.id1[ctx.span_src(s).index()]});
            OneId li = t.hcomp1.at({t.id1[ctx.span_tgt(s).index()], F});
            t.runit.push_back(connecting(ri, F, "right unitor"));
            t.lunit.push_back(connecting(li, F, "left unitor"));
        }
        t.strict = false;
        vcomp_ = nullptr;
        out_.bicat = FinBicat::build(std::move(t));
        return std::move(out_);
    }

private:
    const Span& span(OneId s) const { return out_.spans[s.index()]; }

    TwoId class_of(OneId s1, OneId s2, const TwoCellRep& r) const { return out_.class_of(s1, s2, r); }

    bool composable(const BicatTables& t, OneId g, OneId f) const {
        return t.one_cells[g.index()].src == t.one_cells[f.index()].tgt;
    }

    void build_classes(BicatTables& t) {
        const auto& ctx = *out_.ctx;
        const std::size_t n1 = out_.spans.size();
        std::vector<std::pair<OneId, OneId>> frames;
        for (std::size_t a = 0; a < n1; ++a)
            for (std::size_t c = 0; c < n1; ++c) {
                const Span &s1 = out_.spans[a], &s2 = out_.spans[c];
                if (ctx.span_src(s1) == ctx.span_src(s2) && ctx.span_tgt(s1) == ctx.span_tgt(s2))
                    frames.emplace_back(OneId(a), OneId(c));
            }
        // Per frame: classes as lists of members, in order of their minimal member.
        auto per_frame = parallel_map<std::vector<std::vector<TwoCellRep>>>(frames.size(), opt_.jobs, [&](std::size_t i) {
            const Span &s1 = span(frames[i].first), &s2 = span(frames[i].second);
            std::vector<std::vector<TwoCellRep>> cls;
            for (const auto& r : ctx.enumerate_reps(s1, s2)) {
                bool placed = false;
                for (auto& c : cls)
                    if (ctx.reps_equivalent(c.front(), r, s1, s2)) {
                        c.push_back(r);
                        placed = true;
                        break;
                    }
                if (!placed) cls.push_back({r});
            }
            return cls;
        });
        std::set<std::string> used;
        for (std::size_t i = 0; i < frames.size(); ++i) {
            auto& idx = out_.rep_index[frames[i]];
            for (auto& members : per_frame[i]) {
                TwoId id(out_.classes.size());
                for (const auto& r : members) idx[r] = id;
                std::string name = ctx.rep_name(members.front());
                if (!used.insert(name).second) {
                    for (int k = 2;; ++k) {
                        std::string alt = fmt::format("{}#{}", name, k);
                        if (used.insert(alt).second) {
                            name = alt;
                            break;
                        }
                    }
                }
                t.two_cells.push_back({name, frames[i].first, frames[i].second});
                out_.classes.push_back({frames[i].first, frames[i].second, members.front(), std::move(members)});
            }
        }
    }

    bool is_inverse_pair(TwoId a, TwoId inv) const {
        const auto& A = out_.classes[a.index()];
        return vcomp_->at({inv, a}) == id2_[A.src.index()] && vcomp_->at({a, inv}) == id2_[A.tgt.index()];
    }

    // Structure cell between two composites: the identity when they agree,
    // otherwise the first invertible class of the frame.
    TwoId connecting(OneId from, OneId to, const char* what) const {
        if (from == to) return id2_[from.index()];
        for (TwoId c : frames_by_src_[from.index()]) {
            if (out_.classes[c.index()].tgt != to) continue;
            for (TwoId d : frames_by_src_[to.index()])
                if (out_.classes[d.index()].tgt == from && is_inverse_pair(c, d)) return c;
        }
        const auto& ctx = *out_.ctx;
        throw ConstructionError(fmt::format("no invertible {} class from {} to {}", what, ctx.span_name(span(from)),
                                            ctx.span_name(span(to))));
    }

    SearchOptions opt_;
    FractionBicat out_;
    std::vector<std::vector<TwoId>> frames_by_src_;
    std::vector<TwoId> id2_;
    const std::map<std::pair<TwoId, TwoId>, TwoId>* vcomp_ = nullptr;
};

}  // namespace

FractionBicat materialize_fractions(const WClass& w, const SearchOptions& opt) {
    const auto& bf = w.bf(opt);
    if (!bf.pass()) {
        for (const auto& a : bf.axioms)
            if (!a.pass) throw PreconditionError("class '" + w.name() + "' fails " + a.name + ": " + a.detail);
    }
    return Materializer(w, opt).run();
}

bool span_is_equivalence(const FractionContext& ctx, const Span& s) {
    return ctx.cls().contains(s.back) && ctx.cls().saturated().contains(s.fwd);
}

}  // namespace bicat
