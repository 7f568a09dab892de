#include "bicat/conditions.hpp"

#include <fmt/format.h>

#include <algorithm>

namespace bicat {

const char* verdict_name(Verdict v) {
    switch (v) {
        case Verdict::Pass: return "pass";
        case Verdict::Fail: return "fail";
        case Verdict::Precondition: return "precondition";
    }
    return "?";
}

std::optional<std::uint32_t> ConditionReport::cell(const std::string& role) const {
    for (const auto* list : {&witness, &counterexample})
        for (const auto& b : *list)
            if (b.role == role) return b.index;
    return std::nullopt;
}

namespace {

using Ids = std::vector<std::uint32_t>;
using Outcome = ConditionDef::Outcome;

Role obj_s(std::string n) { return {std::move(n), CellKind::Object, false}; }
Role one_s(std::string n) { return {std::move(n), CellKind::OneCell, false}; }
Role two_s(std::string n) { return {std::move(n), CellKind::TwoCell, false}; }
Role obj_t(std::string n) { return {std::move(n), CellKind::Object, true}; }
Role one_t(std::string n) { return {std::move(n), CellKind::OneCell, true}; }
Role two_t(std::string n) { return {std::move(n), CellKind::TwoCell, true}; }

std::vector<Binding> bindings(const ConditionDef& d, const std::vector<Role>& roles, const Ids& ids) {
    std::vector<Binding> out;
    for (std::size_t i = 0; i < roles.size() && i < ids.size(); ++i) {
        const Role& r = roles[i];
        const FinBicat& b = r.target_side ? *d.target : *d.source;
        std::string side = r.target_side ? "target" : "source";
        switch (r.kind) {
            case CellKind::Object: out.push_back(bind(b, side, r.name, ObjId(ids[i]))); break;
            case CellKind::OneCell: out.push_back(bind(b, side, r.name, OneId(ids[i]))); break;
            case CellKind::TwoCell: out.push_back(bind(b, side, r.name, TwoId(ids[i]))); break;
        }
    }
    return out;
}

// Shared view of a pseudofunctor F: A → B with the classes the checkers need.
struct Ctx {
    PsFun F;
    const FinBicat& A;
    const FinBicat& B;
    std::optional<WClass> wa, wa_sat, wb, wb_sat;
    std::vector<bool> equiv_b;  // internal equivalences of B

    Ctx(const PsFun& f, const WClass* a, const WClass* b) : F(f), A(*F.source), B(*F.target) {
        if (a) {
            wa = *a;
            wa_sat = a->saturated();
        }
        if (b) {
            wb = *b;
            wb_sat = b->saturated();
        }
        equiv_b = internal_equivalences_class(F.target).mask();
    }

    [[nodiscard]] bool in_wa(OneId f) const { return wa->contains(f); }
    [[nodiscard]] bool in_wa_sat(OneId f) const { return wa_sat->contains(f); }
    [[nodiscard]] bool in_wb(OneId f) const { return wb->contains(f); }
    [[nodiscard]] bool in_wb_sat(OneId f) const { return wb_sat->contains(f); }
    [[nodiscard]] bool equiv(OneId f) const { return equiv_b[f.index()]; }

    [[nodiscard]] std::size_t nA() const { return A.object_count(); }
    [[nodiscard]] std::size_t nB() const { return B.object_count(); }

    // ψ_{g,f2} ⊙ F(c) ⊙ ψ_{g,f1}⁻¹ style conjugation of a 2-cell c: g1∘v ⇒ g2∘v.
    [[nodiscard]] TwoId conj(OneId g1, OneId v1, OneId g2, OneId v2, TwoId c) const {
        return B.vcomp(F.psi_at(g2, v2), B.vcomp(F.two(c), *B.inverse(F.psi_at(g1, v1))));
    }
};

using CtxPtr = std::shared_ptr<const Ctx>;

std::shared_ptr<ConditionDef> make_def(const std::string& tag, const Ctx& c) {
    auto d = std::make_shared<ConditionDef>();
    d->tag = tag;
    d->source = c.F.source;
    d->target = c.F.target;
    return d;
}

// ---- A conditions -------------------------------------------------------

std::shared_ptr<ConditionDef> def_A1(const CtxPtr& c) {
    auto d = make_def("A1", *c);
    d->input_roles = {obj_t("A_B")};
    d->witness_roles = {obj_s("A_A"), obj_t("A'_B"), one_t("w1_B"), one_t("w2_B")};
    for (std::size_t x = 0; x < c->nB(); ++x) d->inputs.push_back({std::uint32_t(x)});
    d->holds = [c](const Ids& in, const Ids& w) {
        const auto& B = c->B;
        ObjId ab(in[0]), aa(w[0]), ap(w[1]);
        OneId w1(w[2]), w2(w[3]);
        return B.src(w1) == ap && B.tgt(w1) == c->F.obj(aa) && c->in_wb(w1) && B.src(w2) == ap &&
               B.tgt(w2) == ab && c->in_wb_sat(w2);
    };
    d->search = [c](const Ids& in) {
        Outcome o;
        const auto& B = c->B;
        ObjId ab(in[0]);
        for (std::size_t a = 0; a < c->nA(); ++a)
            for (std::size_t p = 0; p < c->nB(); ++p)
                for (OneId w1 : B.hom(ObjId(p), c->F.obj(ObjId(a)))) {
                    if (!c->in_wb(w1)) continue;
                    for (OneId w2 : B.hom(ObjId(p), ab)) {
                        ++o.candidates;
                        if (!c->in_wb_sat(w2)) continue;
                        o.ok = true;
                        o.witness = {std::uint32_t(a), std::uint32_t(p), w1.value, w2.value};
                        return o;
                    }
                }
        return o;
    };
    return d;
}

std::shared_ptr<ConditionDef> def_A2(const CtxPtr& c) {
    auto d = make_def("A2", *c);
    d->input_roles = {obj_s("A1_A"), obj_s("A2_A"), obj_t("A_B"), one_t("w1_B"), one_t("w2_B")};
    d->witness_roles = {obj_s("A3_A"), one_s("w1_A"), one_s("w2_A"), obj_t("A'_B"),
                        one_t("z1_B"), one_t("z2_B"),  two_t("gamma1_B"), two_t("gamma2_B")};
    const auto& B = c->B;
    for (std::size_t a1 = 0; a1 < c->nA(); ++a1)
        for (std::size_t a2 = 0; a2 < c->nA(); ++a2)
            for (std::size_t ab = 0; ab < c->nB(); ++ab)
                for (OneId w1 : B.hom(ObjId(ab), c->F.obj(ObjId(a1)))) {
                    if (!c->in_wb(w1)) continue;
                    for (OneId w2 : B.hom(ObjId(ab), c->F.obj(ObjId(a2))))
                        if (c->in_wb_sat(w2))
                            d->inputs.push_back({std::uint32_t(a1), std::uint32_t(a2), std::uint32_t(ab), w1.value,
                                                 w2.value});
                }
    d->holds = [c](const Ids& in, const Ids& w) {
        const auto& A = c->A;
        const auto& B = c->B;
        ObjId a1(in[0]), a2(in[1]), ab(in[2]), a3(w[0]), ap(w[3]);
        OneId w1b(in[3]), w2b(in[4]), w1a(w[1]), w2a(w[2]), z1(w[4]), z2(w[5]);
        TwoId g1(w[6]), g2(w[7]);
        if (A.src(w1a) != a3 || A.tgt(w1a) != a1 || !c->in_wa(w1a)) return false;
        if (A.src(w2a) != a3 || A.tgt(w2a) != a2 || !c->in_wa_sat(w2a)) return false;
        if (B.src(z1) != ap || B.tgt(z1) != ab || !c->in_wb(z1)) return false;
        if (B.src(z2) != ap || B.tgt(z2) != c->F.obj(a3)) return false;
        return B.src1(g1) == B.hcomp1(w1b, z1) && B.tgt1(g1) == B.hcomp1(c->F.one(w1a), z2) && B.invertible(g1) &&
               B.src1(g2) == B.hcomp1(w2b, z1) && B.tgt1(g2) == B.hcomp1(c->F.one(w2a), z2) && B.invertible(g2);
    };
    d->search = [c](const Ids& in) {
        Outcome o;
        const auto& A = c->A;
        const auto& B = c->B;
        ObjId a1(in[0]), a2(in[1]), ab(in[2]);
        OneId w1b(in[3]), w2b(in[4]);
        for (std::size_t a3 = 0; a3 < c->nA(); ++a3)
            for (OneId w1a : A.hom(ObjId(a3), a1)) {
                if (!c->in_wa(w1a)) continue;
                for (OneId w2a : A.hom(ObjId(a3), a2)) {
                    if (!c->in_wa_sat(w2a)) continue;
                    OneId Fw1 = c->F.one(w1a), Fw2 = c->F.one(w2a);
                    for (std::size_t ap = 0; ap < c->nB(); ++ap)
                        for (OneId z1 : B.hom(ObjId(ap), ab)) {
                            if (!c->in_wb(z1)) continue;
                            for (OneId z2 : B.hom(ObjId(ap), c->F.obj(ObjId(a3)))) {
                                ++o.candidates;
                                auto g1 = B.first_invertible(B.hcomp1(w1b, z1), B.hcomp1(Fw1, z2));
                                if (!g1) continue;
                                auto g2 = B.first_invertible(B.hcomp1(w2b, z1), B.hcomp1(Fw2, z2));
                                if (!g2) continue;
                                o.ok = true;
                                o.witness = {std::uint32_t(a3), w1a.value, w2a.value, std::uint32_t(ap),
                                             z1.value,          z2.value,  g1->value, g2->value};
                                return o;
                            }
                        }
                }
            }
        return o;
    };
    return d;
}

std::shared_ptr<ConditionDef> def_A3(const CtxPtr& c) {
    auto d = make_def("A3", *c);
    d->input_roles = {obj_s("B_A"), obj_t("A_B"), one_t("f_B")};
    d->witness_roles = {obj_s("A_A"), one_s("f_A"), obj_t("A'_B"), one_t("v1_B"), one_t("v2_B"), two_t("alpha_B")};
    const auto& B = c->B;
    for (std::size_t ba = 0; ba < c->nA(); ++ba)
        for (std::size_t ab = 0; ab < c->nB(); ++ab)
            for (OneId f : B.hom(ObjId(ab), c->F.obj(ObjId(ba))))
                d->inputs.push_back({std::uint32_t(ba), std::uint32_t(ab), f.value});
    d->holds = [c](const Ids& in, const Ids& w) {
        const auto& A = c->A;
        const auto& B = c->B;
        ObjId ba(in[0]), ab(in[1]), aa(w[0]), ap(w[2]);
        OneId fb(in[2]), fa(w[1]), v1(w[3]), v2(w[4]);
        TwoId al(w[5]);
        if (A.src(fa) != aa || A.tgt(fa) != ba) return false;
        if (B.src(v1) != ap || B.tgt(v1) != ab || !c->in_wb(v1)) return false;
        if (B.src(v2) != ap || B.tgt(v2) != c->F.obj(aa) || !c->in_wb_sat(v2)) return false;
        return B.src1(al) == B.hcomp1(fb, v1) && B.tgt1(al) == B.hcomp1(c->F.one(fa), v2) && B.invertible(al);
    };
    d->search = [c](const Ids& in) {
        Outcome o;
        const auto& A = c->A;
        const auto& B = c->B;
        ObjId ba(in[0]), ab(in[1]);
        OneId fb(in[2]);
        for (std::size_t aa = 0; aa < c->nA(); ++aa)
            for (OneId fa : A.hom(ObjId(aa), ba))
                for (std::size_t ap = 0; ap < c->nB(); ++ap)
                    for (OneId v1 : B.hom(ObjId(ap), ab)) {
                        if (!c->in_wb(v1)) continue;
                        for (OneId v2 : B.hom(ObjId(ap), c->F.obj(ObjId(aa)))) {
                            ++o.candidates;
                            if (!c->in_wb_sat(v2)) continue;
                            auto al = B.first_invertible(B.hcomp1(fb, v1), B.hcomp1(c->F.one(fa), v2));
                            if (!al) continue;
                            o.ok = true;
                            o.witness = {std::uint32_t(aa), fa.value, std::uint32_t(ap), v1.value, v2.value, al->value};
                            return o;
                        }
                    }
        return o;
    };
    return d;
}

// Shared shape of A4/B4: whiskering by some z_A in W_A equalizes γ1, γ2.
void equalizer_search(const std::shared_ptr<ConditionDef>& d, const CtxPtr& c, std::size_t obj_pos,
                      std::size_t g1_pos, std::size_t g2_pos) {
    d->witness_roles = {obj_s("A'_A"), one_s("z_A")};
    d->holds = [c, obj_pos, g1_pos, g2_pos](const Ids& in, const Ids& w) {
        const auto& A = c->A;
        OneId z(w[1]);
        if (A.src(z) != ObjId(w[0]) || A.tgt(z) != ObjId(in[obj_pos]) || !c->in_wa(z)) return false;
        return A.whisk_right(TwoId(in[g1_pos]), z) == A.whisk_right(TwoId(in[g2_pos]), z);
    };
    d->search = [c, obj_pos, g1_pos, g2_pos](const Ids& in) {
        Outcome o;
        const auto& A = c->A;
        for (std::size_t ap = 0; ap < c->nA(); ++ap)
            for (OneId z : A.hom(ObjId(ap), ObjId(in[obj_pos]))) {
                if (!c->in_wa(z)) continue;
                ++o.candidates;
                if (A.whisk_right(TwoId(in[g1_pos]), z) != A.whisk_right(TwoId(in[g2_pos]), z)) continue;
                o.ok = true;
                o.witness = {std::uint32_t(ap), z.value};
                return o;
            }
        return o;
    };
}

std::shared_ptr<ConditionDef> def_A4(const CtxPtr& c) {
    auto d = make_def("A4", *c);
    d->input_roles = {obj_s("A_A"), obj_s("B_A"),  one_s("f1_A"),  one_s("f2_A"),
                      two_s("gamma1_A"), two_s("gamma2_A"), obj_t("A'_B"), one_t("z_B")};
    const auto& A = c->A;
    const auto& B = c->B;
    for (std::size_t a = 0; a < c->nA(); ++a)
        for (std::size_t b = 0; b < c->nA(); ++b)
            for (OneId f1 : A.hom(ObjId(a), ObjId(b)))
                for (OneId f2 : A.hom(ObjId(a), ObjId(b)))
                    for (TwoId g1 : A.cells(f1, f2))
                        for (TwoId g2 : A.cells(f1, f2)) {
                            if (g1 == g2) continue;
                            for (std::size_t ap = 0; ap < c->nB(); ++ap)
                                for (OneId z : B.hom(ObjId(ap), c->F.obj(ObjId(a)))) {
                                    if (!c->in_wb(z)) continue;
                                    if (B.whisk_right(c->F.two(g1), z) != B.whisk_right(c->F.two(g2), z)) continue;
                                    d->inputs.push_back({std::uint32_t(a), std::uint32_t(b), f1.value, f2.value,
                                                         g1.value, g2.value, std::uint32_t(ap), z.value});
                                }
                        }
    equalizer_search(d, c, 0, 4, 5);
    return d;
}

TwoId a5_composite_direct(const Ctx& c, const A5Data& x) {
    const auto& B = c.B;
    OneId Ff1 = c.F.one(x.f1), Ff2 = c.F.one(x.f2), Fv = c.F.one(x.v_a);
    TwoId s_inv = *B.inverse(x.sigma);
    TwoId t = *B.inverse(B.assoc(Ff1, x.v_b, x.z_prime));
    t = B.vcomp(B.whisk_left(Ff1, s_inv), t);
    t = B.vcomp(B.assoc(Ff1, Fv, x.z_b), t);
    TwoId mid = c.conj(x.f1, x.v_a, x.f2, x.v_a, x.alpha_a);
    t = B.vcomp(B.whisk_right(mid, x.z_b), t);
    t = B.vcomp(*B.inverse(B.assoc(Ff2, Fv, x.z_b)), t);
    t = B.vcomp(B.whisk_left(Ff2, x.sigma), t);
    return B.vcomp(B.assoc(Ff2, x.v_b, x.z_prime), t);
}

std::shared_ptr<ConditionDef> def_A5(const CtxPtr& c) {
    auto d = make_def("A5", *c);
    d->input_roles = {obj_s("A_A"), obj_s("B_A"), obj_t("A_B"), one_s("f1_A"),
                      one_s("f2_A"), one_t("v_B"), two_t("alpha_B")};
    d->witness_roles = {obj_s("A'_A"), obj_t("A'_B"), one_s("v_A"),    one_t("z_B"),
                        one_t("z'_B"), two_s("alpha_A"), two_t("sigma_B")};
    const auto& A = c->A;
    const auto& B = c->B;
    for (std::size_t a = 0; a < c->nA(); ++a)
        for (std::size_t b = 0; b < c->nA(); ++b)
            for (std::size_t ab = 0; ab < c->nB(); ++ab)
                for (OneId f1 : A.hom(ObjId(a), ObjId(b)))
                    for (OneId f2 : A.hom(ObjId(a), ObjId(b)))
                        for (OneId v : B.hom(ObjId(ab), c->F.obj(ObjId(a)))) {
                            if (!c->in_wb(v)) continue;
                            for (TwoId al : B.cells(B.hcomp1(c->F.one(f1), v), B.hcomp1(c->F.one(f2), v)))
                                d->inputs.push_back({std::uint32_t(a), std::uint32_t(b), std::uint32_t(ab), f1.value,
                                                     f2.value, v.value, al.value});
                        }
    d->holds = [c](const Ids& in, const Ids& w) {
        const auto& A = c->A;
        const auto& B = c->B;
        ObjId a(in[0]), ab(in[2]), apa(w[0]), apb(w[1]);
        A5Data x{OneId(in[3]), OneId(in[4]), OneId(in[5]), OneId(w[2]),
                 OneId(w[3]),  OneId(w[4]),  TwoId(w[6]),  TwoId(w[5])};
        if (A.src(x.v_a) != apa || A.tgt(x.v_a) != a || !c->in_wa(x.v_a)) return false;
        if (B.src(x.z_b) != apb || B.tgt(x.z_b) != c->F.obj(apa) || !c->in_wb(x.z_b)) return false;
        if (B.src(x.z_prime) != apb || B.tgt(x.z_prime) != ab) return false;
        if (A.src1(x.alpha_a) != A.hcomp1(x.f1, x.v_a) || A.tgt1(x.alpha_a) != A.hcomp1(x.f2, x.v_a)) return false;
        if (B.src1(x.sigma) != B.hcomp1(c->F.one(x.v_a), x.z_b) || B.tgt1(x.sigma) != B.hcomp1(x.v_b, x.z_prime) ||
            !B.invertible(x.sigma))
            return false;
        try {
            return eval_pasting(B, build_a5_composite(c->F, x)) == B.whisk_right(TwoId(in[6]), x.z_prime);
        } catch (const Error&) {
            return false;
        }
    };
    d->search = [c](const Ids& in) {
        Outcome o;
        const auto& A = c->A;
        const auto& B = c->B;
        ObjId a(in[0]), ab(in[2]);
        OneId f1(in[3]), f2(in[4]), vb(in[5]);
        TwoId alb(in[6]);
        for (std::size_t apa = 0; apa < c->nA(); ++apa)
            for (std::size_t apb = 0; apb < c->nB(); ++apb)
                for (OneId va : A.hom(ObjId(apa), a)) {
                    if (!c->in_wa(va)) continue;
                    for (OneId zb : B.hom(ObjId(apb), c->F.obj(ObjId(apa)))) {
                        if (!c->in_wb(zb)) continue;
                        for (OneId zp : B.hom(ObjId(apb), ab)) {
                            TwoId lhs = B.whisk_right(alb, zp);
                            const auto& sigmas = B.cells(B.hcomp1(c->F.one(va), zb), B.hcomp1(vb, zp));
                            for (TwoId ala : A.cells(A.hcomp1(f1, va), A.hcomp1(f2, va)))
                                for (TwoId s : sigmas) {
                                    if (!B.invertible(s)) continue;
                                    ++o.candidates;
                                    A5Data x{f1, f2, vb, va, zb, zp, s, ala};
                                    if (a5_composite_direct(*c, x) != lhs) continue;
                                    o.ok = true;
                                    o.witness = {std::uint32_t(apa), std::uint32_t(apb), va.value, zb.value,
                                                 zp.value,           ala.value,          s.value};
                                    return o;
                                }
                        }
                    }
                }
        return o;
    };
    return d;
}

// ---- B conditions -------------------------------------------------------

std::shared_ptr<ConditionDef> def_B1(const CtxPtr& c) {
    auto d = make_def("B1", *c);
    d->input_roles = {obj_t("A_B")};
    d->witness_roles = {obj_s("A_A"), one_t("e_B")};
    for (std::size_t x = 0; x < c->nB(); ++x) d->inputs.push_back({std::uint32_t(x)});
    d->holds = [c](const Ids& in, const Ids& w) {
        OneId e(w[1]);
        return c->B.src(e) == c->F.obj(ObjId(w[0])) && c->B.tgt(e) == ObjId(in[0]) && c->equiv(e);
    };
    d->search = [c](const Ids& in) {
        Outcome o;
        for (std::size_t a = 0; a < c->nA(); ++a)
            for (OneId e : c->B.hom(c->F.obj(ObjId(a)), ObjId(in[0]))) {
                ++o.candidates;
                if (!c->equiv(e)) continue;
                o.ok = true;
                o.witness = {std::uint32_t(a), e.value};
                return o;
            }
        return o;
    };
    return d;
}

std::shared_ptr<ConditionDef> def_B2(const CtxPtr& c) {
    auto d = make_def("B2", *c);
    d->input_roles = {obj_s("A1_A"), obj_s("A2_A"), one_t("e_B")};
    d->witness_roles = {obj_s("A3_A"), one_s("w1_A"), one_s("w2_A"), one_t("e'_B"), two_t("delta2_B"),
                        two_t("delta1_B")};
    const auto& B = c->B;
    for (std::size_t a1 = 0; a1 < c->nA(); ++a1)
        for (std::size_t a2 = 0; a2 < c->nA(); ++a2)
            for (OneId e : B.hom(c->F.obj(ObjId(a1)), c->F.obj(ObjId(a2))))
                if (c->equiv(e)) d->inputs.push_back({std::uint32_t(a1), std::uint32_t(a2), e.value});
    d->holds = [c](const Ids& in, const Ids& w) {
        const auto& A = c->A;
        const auto& B = c->B;
        ObjId a1(in[0]), a2(in[1]), a3(w[0]);
        OneId e(in[2]), w1(w[1]), w2(w[2]), ep(w[3]);
        TwoId d2(w[4]), d1(w[5]);
        if (A.src(w1) != a3 || A.tgt(w1) != a1 || !c->in_wa(w1)) return false;
        if (A.src(w2) != a3 || A.tgt(w2) != a2 || !c->in_wa_sat(w2)) return false;
        if (B.src(ep) != c->F.obj(a1) || B.tgt(ep) != c->F.obj(a3) || !c->equiv(ep)) return false;
        return B.src1(d2) == e && B.tgt1(d2) == B.hcomp1(c->F.one(w2), ep) && B.invertible(d2) &&
               B.src1(d1) == B.hcomp1(c->F.one(w1), ep) && B.tgt1(d1) == B.id1(c->F.obj(a1)) && B.invertible(d1);
    };
    d->search = [c](const Ids& in) {
        Outcome o;
        const auto& A = c->A;
        const auto& B = c->B;
        ObjId a1(in[0]), a2(in[1]);
        OneId e(in[2]);
        for (std::size_t a3 = 0; a3 < c->nA(); ++a3)
            for (OneId w1 : A.hom(ObjId(a3), a1)) {
                if (!c->in_wa(w1)) continue;
                for (OneId w2 : A.hom(ObjId(a3), a2)) {
                    if (!c->in_wa_sat(w2)) continue;
                    for (OneId ep : B.hom(c->F.obj(a1), c->F.obj(ObjId(a3)))) {
                        ++o.candidates;
                        if (!c->equiv(ep)) continue;
                        auto d2 = B.first_invertible(e, B.hcomp1(c->F.one(w2), ep));
                        if (!d2) continue;
                        auto d1 = B.first_invertible(B.hcomp1(c->F.one(w1), ep), B.id1(c->F.obj(a1)));
                        if (!d1) continue;
                        o.ok = true;
                        o.witness = {std::uint32_t(a3), w1.value, w2.value, ep.value, d2->value, d1->value};
                        return o;
                    }
                }
            }
        return o;
    };
    return d;
}

std::shared_ptr<ConditionDef> def_B3(const CtxPtr& c) {
    auto d = make_def("B3", *c);
    d->input_roles = {obj_s("B_A"), obj_t("A_B"), one_t("f_B")};
    d->witness_roles = {obj_s("A_A"), one_s("f_A"), one_t("e_B"), two_t("alpha_B")};
    const auto& B = c->B;
    for (std::size_t ba = 0; ba < c->nA(); ++ba)
        for (std::size_t ab = 0; ab < c->nB(); ++ab)
            for (OneId f : B.hom(ObjId(ab), c->F.obj(ObjId(ba))))
                d->inputs.push_back({std::uint32_t(ba), std::uint32_t(ab), f.value});
    d->holds = [c](const Ids& in, const Ids& w) {
        const auto& A = c->A;
        const auto& B = c->B;
        ObjId ba(in[0]), ab(in[1]), aa(w[0]);
        OneId fb(in[2]), fa(w[1]), e(w[2]);
        TwoId al(w[3]);
        if (A.src(fa) != aa || A.tgt(fa) != ba) return false;
        if (B.src(e) != ab || B.tgt(e) != c->F.obj(aa) || !c->equiv(e)) return false;
        return B.src1(al) == fb && B.tgt1(al) == B.hcomp1(c->F.one(fa), e) && B.invertible(al);
    };
    d->search = [c](const Ids& in) {
        Outcome o;
        const auto& A = c->A;
        const auto& B = c->B;
        ObjId ba(in[0]), ab(in[1]);
        OneId fb(in[2]);
        for (std::size_t aa = 0; aa < c->nA(); ++aa)
            for (OneId fa : A.hom(ObjId(aa), ba))
                for (OneId e : B.hom(ab, c->F.obj(ObjId(aa)))) {
                    ++o.candidates;
                    if (!c->equiv(e)) continue;
                    auto al = B.first_invertible(fb, B.hcomp1(c->F.one(fa), e));
                    if (!al) continue;
                    o.ok = true;
                    o.witness = {std::uint32_t(aa), fa.value, e.value, al->value};
                    return o;
                }
        return o;
    };
    return d;
}

std::shared_ptr<ConditionDef> def_B4(const CtxPtr& c) {
    auto d = make_def("B4", *c);
    d->input_roles = {obj_s("A_A"), obj_s("B_A"), one_s("f1_A"), one_s("f2_A"), two_s("gamma1_A"), two_s("gamma2_A")};
    const auto& A = c->A;
    for (std::size_t a = 0; a < c->nA(); ++a)
        for (std::size_t b = 0; b < c->nA(); ++b)
            for (OneId f1 : A.hom(ObjId(a), ObjId(b)))
                for (OneId f2 : A.hom(ObjId(a), ObjId(b)))
                    for (TwoId g1 : A.cells(f1, f2))
                        for (TwoId g2 : A.cells(f1, f2))
                            if (g1 != g2 && c->F.two(g1) == c->F.two(g2))
                                d->inputs.push_back({std::uint32_t(a), std::uint32_t(b), f1.value, f2.value, g1.value,
                                                     g2.value});
    equalizer_search(d, c, 0, 4, 5);
    return d;
}

// Shared shape of B5 and the local-fullness part of A5 over W_A.
std::shared_ptr<ConditionDef> def_B5(const CtxPtr& c) {
    auto d = make_def("B5", *c);
    d->input_roles = {obj_s("A_A"), obj_s("B_A"), one_s("f1_A"), one_s("f2_A"), two_t("alpha_B")};
    d->witness_roles = {obj_s("A'_A"), one_s("v_A"), two_s("alpha_A")};
    const auto& A = c->A;
    const auto& B = c->B;
    for (std::size_t a = 0; a < c->nA(); ++a)
        for (std::size_t b = 0; b < c->nA(); ++b)
            for (OneId f1 : A.hom(ObjId(a), ObjId(b)))
                for (OneId f2 : A.hom(ObjId(a), ObjId(b)))
                    for (TwoId al : B.cells(c->F.one(f1), c->F.one(f2)))
                        d->inputs.push_back({std::uint32_t(a), std::uint32_t(b), f1.value, f2.value, al.value});
    d->holds = [c](const Ids& in, const Ids& w) {
        const auto& A = c->A;
        const auto& B = c->B;
        OneId f1(in[2]), f2(in[3]), v(w[1]);
        TwoId alb(in[4]), ala(w[2]);
        if (A.src(v) != ObjId(w[0]) || A.tgt(v) != ObjId(in[0]) || !c->in_wa(v)) return false;
        if (A.src1(ala) != A.hcomp1(f1, v) || A.tgt1(ala) != A.hcomp1(f2, v)) return false;
        PastingExpr rhs = PastingExpr::chain({PastingExpr::inv(PastingExpr::atom(c->F.psi_at(f1, v))),
                                              PastingExpr::atom(c->F.two(ala)),
                                              PastingExpr::atom(c->F.psi_at(f2, v))});
        PastingExpr lhs = PastingExpr::whisk_r(PastingExpr::atom(alb), c->F.one(v));
        try {
            return eval_pasting(B, lhs) == eval_pasting(B, rhs);
        } catch (const Error&) {
            return false;
        }
    };
    d->search = [c](const Ids& in) {
        Outcome o;
        const auto& A = c->A;
        const auto& B = c->B;
        OneId f1(in[2]), f2(in[3]);
        TwoId alb(in[4]);
        for (std::size_t ap = 0; ap < c->nA(); ++ap)
            for (OneId v : A.hom(ObjId(ap), ObjId(in[0]))) {
                if (!c->in_wa(v)) continue;
                TwoId lhs = B.whisk_right(alb, c->F.one(v));
                for (TwoId ala : A.cells(A.hcomp1(f1, v), A.hcomp1(f2, v))) {
                    ++o.candidates;
                    if (c->conj(f1, v, f2, v, ala) != lhs) continue;
                    o.ok = true;
                    o.witness = {std::uint32_t(ap), v.value, ala.value};
                    return o;
                }
            }
        return o;
    };
    return d;
}

// ---- EF conditions ------------------------------------------------------

std::shared_ptr<ConditionDef> def_EF1(const CtxPtr& c) {
    auto d = make_def("EF1", *c);
    d->input_roles = {obj_t("A_B")};
    d->witness_roles = {obj_s("A_A"), one_t("t_B"), one_t("t_B_inverse")};
    for (std::size_t x = 0; x < c->nB(); ++x) d->inputs.push_back({std::uint32_t(x)});
    d->holds = [c](const Ids& in, const Ids& w) {
        const auto& B = c->B;
        OneId t(w[1]), u(w[2]);
        return B.src(t) == c->F.obj(ObjId(w[0])) && B.tgt(t) == ObjId(in[0]) && B.composable(u, t) &&
               B.composable(t, u) && B.hcomp1(u, t) == B.id1(B.src(t)) && B.hcomp1(t, u) == B.id1(B.tgt(t));
    };
    d->search = [c](const Ids& in) {
        Outcome o;
        for (std::size_t a = 0; a < c->nA(); ++a)
            for (OneId t : c->B.hom(c->F.obj(ObjId(a)), ObjId(in[0]))) {
                ++o.candidates;
                auto u = one_cell_isomorphism_inverse(c->B, t);
                if (!u) continue;
                o.ok = true;
                o.witness = {std::uint32_t(a), t.value, u->value};
                return o;
            }
        return o;
    };
    return d;
}

std::shared_ptr<ConditionDef> def_EF2(const CtxPtr& c) {
    auto d = make_def("EF2", *c);
    d->input_roles = {obj_s("A_A"), obj_s("B_A"), one_t("f_B")};
    d->witness_roles = {obj_s("A'_A"), one_s("f_A"), one_s("w_A"), two_t("alpha_B")};
    const auto& B = c->B;
    for (std::size_t a = 0; a < c->nA(); ++a)
        for (std::size_t b = 0; b < c->nA(); ++b)
            for (OneId f : B.hom(c->F.obj(ObjId(a)), c->F.obj(ObjId(b))))
                d->inputs.push_back({std::uint32_t(a), std::uint32_t(b), f.value});
    d->holds = [c](const Ids& in, const Ids& w) {
        const auto& A = c->A;
        const auto& B = c->B;
        ObjId ap(w[0]);
        OneId fb(in[2]), fa(w[1]), wa(w[2]);
        TwoId al(w[3]);
        if (A.src(fa) != ap || A.tgt(fa) != ObjId(in[1])) return false;
        if (A.src(wa) != ap || A.tgt(wa) != ObjId(in[0]) || !c->in_wa(wa)) return false;
        return B.src1(al) == c->F.one(fa) && B.tgt1(al) == B.hcomp1(fb, c->F.one(wa)) && B.invertible(al);
    };
    d->search = [c](const Ids& in) {
        Outcome o;
        const auto& A = c->A;
        const auto& B = c->B;
        OneId fb(in[2]);
        for (std::size_t ap = 0; ap < c->nA(); ++ap)
            for (OneId fa : A.hom(ObjId(ap), ObjId(in[1])))
                for (OneId wa : A.hom(ObjId(ap), ObjId(in[0]))) {
                    if (!c->in_wa(wa)) continue;
                    ++o.candidates;
                    auto al = B.first_invertible(c->F.one(fa), B.hcomp1(fb, c->F.one(wa)));
                    if (!al) continue;
                    o.ok = true;
                    o.witness = {std::uint32_t(ap), fa.value, wa.value, al->value};
                    return o;
                }
        return o;
    };
    return d;
}

// Preimage of a 2-cell under the local functor. With `unique`, a second
// preimage is a failure reported through the extra roles.
void preimage_search(const std::shared_ptr<ConditionDef>& d, const PsFun& M, bool unique, const char* role) {
    auto src = M.source;
    auto two = M.on_two;
    d->witness_roles = {{role, CellKind::TwoCell, false}};
    if (unique)
        d->extra_roles = {{"preimage_1", CellKind::TwoCell, false}, {"preimage_2", CellKind::TwoCell, false}};
    auto preimages = [src, two](const Ids& in) {
        std::vector<TwoId> out;
        for (TwoId a : src->cells(OneId(in[2]), OneId(in[3])))
            if (two[a.index()] == TwoId(in[4])) out.push_back(a);
        return out;
    };
    d->holds = [preimages, unique, two](const Ids& in, const Ids& w) {
        auto p = preimages(in);
        if (two[w[0]] != TwoId(in[4])) return false;
        return unique ? p.size() == 1 : !p.empty();
    };
    d->search = [preimages, unique](const Ids& in) {
        Outcome o;
        auto p = preimages(in);
        o.candidates = p.size();
        if (p.empty()) return o;
        if (unique && p.size() > 1) {
            o.extra = {p[0].value, p[1].value};
            return o;
        }
        o.ok = true;
        o.witness = {p[0].value};
        return o;
    };
}

std::shared_ptr<ConditionDef> def_local_full(const std::string& tag, const PsFun& M, bool unique, const char* in_role,
                                             const char* out_role) {
    auto d = std::make_shared<ConditionDef>();
    d->tag = tag;
    d->source = M.source;
    d->target = M.target;
    d->input_roles = {obj_s("A"), obj_s("B"), one_s("f1"), one_s("f2"), {in_role, CellKind::TwoCell, true}};
    const auto& S = *M.source;
    const auto& T = *M.target;
    for (std::size_t a = 0; a < S.object_count(); ++a)
        for (std::size_t b = 0; b < S.object_count(); ++b)
            for (OneId f1 : S.hom(ObjId(a), ObjId(b)))
                for (OneId f2 : S.hom(ObjId(a), ObjId(b)))
                    for (TwoId al : T.cells(M.one(f1), M.one(f2)))
                        d->inputs.push_back({std::uint32_t(a), std::uint32_t(b), f1.value, f2.value, al.value});
    preimage_search(d, M, unique, out_role);
    return d;
}

// ---- X conditions -------------------------------------------------------

std::shared_ptr<ConditionDef> def_X1(const PsFun& M) {
    auto d = std::make_shared<ConditionDef>();
    d->tag = "X1";
    d->source = M.source;
    d->target = M.target;
    d->input_roles = {obj_t("A_D")};
    d->witness_roles = {obj_s("A_C"), one_t("e_D")};
    auto equiv = std::make_shared<std::vector<bool>>(internal_equivalences_class(M.target).mask());
    for (std::size_t x = 0; x < M.target->object_count(); ++x) d->inputs.push_back({std::uint32_t(x)});
    auto objs = M.on_objects;
    auto T = M.target;
    auto ns = M.source->object_count();
    d->holds = [T, objs, equiv](const Ids& in, const Ids& w) {
        OneId e(w[1]);
        return T->src(e) == objs[w[0]] && T->tgt(e) == ObjId(in[0]) && (*equiv)[e.index()];
    };
    d->search = [T, objs, equiv, ns](const Ids& in) {
        Outcome o;
        for (std::size_t a = 0; a < ns; ++a)
            for (OneId e : T->hom(objs[a], ObjId(in[0]))) {
                ++o.candidates;
                if (!(*equiv)[e.index()]) continue;
                o.ok = true;
                o.witness = {std::uint32_t(a), e.value};
                return o;
            }
        return o;
    };
    return d;
}

std::shared_ptr<ConditionDef> def_X2a(const PsFun& M) {
    auto d = std::make_shared<ConditionDef>();
    d->tag = "X2a";
    d->source = M.source;
    d->target = M.target;
    d->input_roles = {obj_s("A_C"), obj_s("B_C"), one_t("f_D")};
    d->witness_roles = {one_s("f_C"), two_t("alpha_D")};
    const auto& S = *M.source;
    const auto& T = *M.target;
    for (std::size_t a = 0; a < S.object_count(); ++a)
        for (std::size_t b = 0; b < S.object_count(); ++b)
            for (OneId f : T.hom(M.obj(ObjId(a)), M.obj(ObjId(b))))
                d->inputs.push_back({std::uint32_t(a), std::uint32_t(b), f.value});
    auto Sp = M.source;
    auto Tp = M.target;
    auto ones = M.on_one;
    d->holds = [Sp, Tp, ones](const Ids& in, const Ids& w) {
        OneId fc(w[0]);
        TwoId al(w[1]);
        return Sp->src(fc) == ObjId(in[0]) && Sp->tgt(fc) == ObjId(in[1]) && Tp->src1(al) == ones[fc.index()] &&
               Tp->tgt1(al) == OneId(in[2]) && Tp->invertible(al);
    };
    d->search = [Sp, Tp, ones](const Ids& in) {
        Outcome o;
        for (OneId fc : Sp->hom(ObjId(in[0]), ObjId(in[1]))) {
            ++o.candidates;
            auto al = Tp->first_invertible(ones[fc.index()], OneId(in[2]));
            if (!al) continue;
            o.ok = true;
            o.witness = {fc.value, al->value};
            return o;
        }
        return o;
    };
    return d;
}

std::shared_ptr<ConditionDef> def_X2b(const PsFun& M) {
    auto d = std::make_shared<ConditionDef>();
    d->tag = "X2b";
    d->source = M.source;
    d->target = M.target;
    d->input_roles = {obj_s("A_C"), obj_s("B_C"), one_s("f1_C"), one_s("f2_C"), two_s("alpha1_C"), two_s("alpha2_C")};
    const auto& S = *M.source;
    for (std::size_t a = 0; a < S.object_count(); ++a)
        for (std::size_t b = 0; b < S.object_count(); ++b)
            for (OneId f1 : S.hom(ObjId(a), ObjId(b)))
                for (OneId f2 : S.hom(ObjId(a), ObjId(b))) {
                    const auto& cs = S.cells(f1, f2);
                    for (std::size_t i = 0; i < cs.size(); ++i)
                        for (std::size_t j = i + 1; j < cs.size(); ++j)
                            d->inputs.push_back({std::uint32_t(a), std::uint32_t(b), f1.value, f2.value,
                                                 cs[i].value, cs[j].value});
                }
    auto two = M.on_two;
    d->holds = [two](const Ids& in, const Ids&) { return two[in[4]] != two[in[5]]; };
    d->search = [two](const Ids& in) {
        Outcome o;
        o.candidates = 1;
        o.ok = two[in[4]] != two[in[5]];
        return o;
    };
    return d;
}

// ---- drivers ------------------------------------------------------------

ConditionReport precondition_report(const std::string& tag, std::string note) {
    ConditionReport r;
    r.tag = tag;
    r.verdict = Verdict::Precondition;
    r.note = std::move(note);
    return r;
}

std::optional<std::string> bf_problem(const WClass& w, const SearchOptions& opt) {
    const BfReport& r = w.bf(opt);
    for (const auto& a : r.axioms)
        if (!a.pass) return fmt::format("class '{}' fails {}: {}", w.name(), a.name, a.detail);
    return std::nullopt;
}

std::optional<std::string> a_precondition(const PsFun& F, const WClass& wa, const WClass& wb,
                                          const SearchOptions& opt) {
    if (auto p = bf_problem(wa, opt)) return p;
    if (auto p = bf_problem(wb, opt)) return p;
    if (auto bad = maps_into_counterexample(F, wa, wb.saturated()))
        return fmt::format("{} sends {} outside the saturation of '{}'", F.name, F.source->name(*bad), wb.name());
    return std::nullopt;
}

std::optional<std::string> b_precondition(const PsFun& F, const WClass& wa, const SearchOptions& opt) {
    if (auto p = bf_problem(wa, opt)) return p;
    WClass eq = internal_equivalences_class(F.target);
    if (auto bad = maps_into_counterexample(F, wa, eq))
        return fmt::format("{} sends {} to a 1-cell that is not an internal equivalence", F.name,
                           F.source->name(*bad));
    return std::nullopt;
}

std::shared_ptr<ConditionDef> def_A(const CtxPtr& c, int which) {
    switch (which) {
        case 1: return def_A1(c);
        case 2: return def_A2(c);
        case 3: return def_A3(c);
        case 4: return def_A4(c);
        case 5: return def_A5(c);
    }
    throw std::invalid_argument("condition A" + std::to_string(which) + " does not exist");
}

std::shared_ptr<ConditionDef> def_B(const CtxPtr& c, int which) {
    switch (which) {
        case 1: return def_B1(c);
        case 2: return def_B2(c);
        case 3: return def_B3(c);
        case 4: return def_B4(c);
        case 5: return def_B5(c);
    }
    throw std::invalid_argument("condition B" + std::to_string(which) + " does not exist");
}

}  // namespace

ConditionReport run_condition(std::shared_ptr<const ConditionDef> def, const SearchOptions& opt) {
    ConditionReport r;
    r.tag = def->tag;
    r.inputs = def->inputs.size();
    const std::size_t n = def->inputs.size();
    std::vector<Outcome> outs;
    if (opt.jobs <= 1) {
        for (std::size_t i = 0; i < n; ++i) {
            outs.push_back(def->search(def->inputs[i]));
            if (!outs.back().ok) break;
        }
    } else {
        outs = parallel_map<Outcome>(n, opt.jobs, [&](std::size_t i) { return def->search(def->inputs[i]); });
    }
    std::optional<std::size_t> worst;
    for (std::size_t i = 0; i < outs.size(); ++i) {
        r.candidates += outs[i].candidates;
        if (!outs[i].ok) {
            r.verdict = Verdict::Fail;
            r.input_ids = def->inputs[i];
            r.counterexample = bindings(*def, def->input_roles, def->inputs[i]);
            auto extra = bindings(*def, def->extra_roles, outs[i].extra);
            r.counterexample.insert(r.counterexample.end(), extra.begin(), extra.end());
            r.def = std::move(def);
            return r;
        }
        if (!worst || outs[i].candidates > outs[*worst].candidates) worst = i;
    }
    r.verdict = Verdict::Pass;
    if (worst) {
        r.input_ids = def->inputs[*worst];
        r.witness_ids = outs[*worst].witness;
        r.witness = bindings(*def, def->input_roles, r.input_ids);
        auto w = bindings(*def, def->witness_roles, r.witness_ids);
        r.witness.insert(r.witness.end(), w.begin(), w.end());
    } else {
        r.note = "vacuous: no input satisfies the hypotheses";
    }
    r.def = std::move(def);
    return r;
}

bool recheck(const ConditionReport& r) {
    if (!r.def || r.verdict == Verdict::Precondition) return true;
    if (r.verdict == Verdict::Pass) {
        if (r.input_ids.empty()) return r.def->inputs.empty();
        return r.def->holds(r.input_ids, r.witness_ids);
    }
    return !r.def->search(r.input_ids).ok;
}

ConditionReport check_A(const PsFun& F, const WClass& wa, const WClass& wb, int which, const SearchOptions& opt) {
    std::string tag = "A" + std::to_string(which);
    if (auto p = a_precondition(F, wa, wb, opt)) return precondition_report(tag, *p);
    auto c = std::make_shared<const Ctx>(F, &wa, &wb);
    return run_condition(def_A(c, which), opt);
}

std::vector<ConditionReport> check_A_all(const PsFun& F, const WClass& wa, const WClass& wb,
                                         const SearchOptions& opt) {
    std::vector<ConditionReport> out;
    if (auto p = a_precondition(F, wa, wb, opt)) {
        for (int i = 1; i <= 5; ++i) out.push_back(precondition_report("A" + std::to_string(i), *p));
        return out;
    }
    auto c = std::make_shared<const Ctx>(F, &wa, &wb);
    for (int i = 1; i <= 5; ++i) out.push_back(run_condition(def_A(c, i), opt));
    return out;
}

ConditionReport check_B(const PsFun& F, const WClass& wa, int which, const SearchOptions& opt) {
    std::string tag = "B" + std::to_string(which);
    if (auto p = b_precondition(F, wa, opt)) return precondition_report(tag, *p);
    auto c = std::make_shared<const Ctx>(F, &wa, nullptr);
    return run_condition(def_B(c, which), opt);
}

std::vector<ConditionReport> check_B_all(const PsFun& F, const WClass& wa, const SearchOptions& opt) {
    std::vector<ConditionReport> out;
    if (auto p = b_precondition(F, wa, opt)) {
        for (int i = 1; i <= 5; ++i) out.push_back(precondition_report("B" + std::to_string(i), *p));
        return out;
    }
    auto c = std::make_shared<const Ctx>(F, &wa, nullptr);
    for (int i = 1; i <= 5; ++i) out.push_back(run_condition(def_B(c, i), opt));
    return out;
}

ConditionReport check_EF(const PsFun& F, const WClass& wa, int which, const SearchOptions& opt) {
    auto c = std::make_shared<const Ctx>(F, &wa, nullptr);
    switch (which) {
        case 1: return run_condition(def_EF1(c), opt);
        case 2: return run_condition(def_EF2(c), opt);
        case 3: return run_condition(def_local_full("EF3", F, true, "alpha_B", "alpha_A"), opt);
    }
    throw std::invalid_argument("condition EF" + std::to_string(which) + " does not exist");
}

std::vector<ConditionReport> check_EF_all(const PsFun& F, const WClass& wa, const SearchOptions& opt) {
    std::vector<ConditionReport> out;
    for (int i = 1; i <= 3; ++i) out.push_back(check_EF(F, wa, i, opt));
    return out;
}

ConditionReport check_X(const PsFun& M, const std::string& which, const SearchOptions& opt) {
    if (which == "X1") return run_condition(def_X1(M), opt);
    if (which == "X2a") return run_condition(def_X2a(M), opt);
    if (which == "X2b") return run_condition(def_X2b(M), opt);
    if (which == "X2c") return run_condition(def_local_full("X2c", M, false, "alpha_D", "alpha_C"), opt);
    throw std::invalid_argument("condition " + which + " does not exist");
}

WeakEquivalenceReport is_weak_equivalence(const PsFun& M, const SearchOptions& opt) {
    WeakEquivalenceReport r;
    for (const char* x : {"X1", "X2a", "X2b", "X2c"}) {
        r.reports.push_back(check_X(M, x, opt));
        r.holds = r.holds && r.reports.back().pass();
    }
    return r;
}

PastingExpr build_a5_composite(const PsFun& F, const A5Data& d) {
    using P = PastingExpr;
    OneId Ff1 = F.one(d.f1), Ff2 = F.one(d.f2), Fv = F.one(d.v_a);
    P mid = P::chain({P::inv(P::atom(F.psi_at(d.f1, d.v_a))), P::atom(F.two(d.alpha_a)), P::atom(F.psi_at(d.f2, d.v_a))});
    return P::chain({
        P::assoc_inv(Ff1, d.v_b, d.z_prime),
        P::whisk_l(Ff1, P::inv(P::atom(d.sigma))),
        P::assoc(Ff1, Fv, d.z_b),
        P::whisk_r(mid, d.z_b),
        P::assoc_inv(Ff2, Fv, d.z_b),
        P::whisk_l(Ff2, P::atom(d.sigma)),
        P::assoc(Ff2, d.v_b, d.z_prime),
    });
}

const TheoremCheck& TheoremReport::check(const std::string& name) const {
    for (const auto& c : checks)
        if (c.name == name) return c;
    throw std::out_of_range("no theorem check " + name);
}

namespace {

bool all_pass(const std::vector<ConditionReport>& rs) {
    return std::ranges::all_of(rs, [](const ConditionReport& r) { return r.pass(); });
}

std::string verdicts(const std::vector<ConditionReport>& rs) {
    std::string s;
    for (const auto& r : rs) s += (s.empty() ? "" : " ") + r.tag + "=" + verdict_name(r.verdict);
    return s;
}

}  // namespace

TheoremReport cross_validate_theorems(const PsFun& F, const WClass& wa, const WClass& wb, const SearchOptions& opt) {
    TheoremReport rep;
    auto finding = [&](TheoremCheck& c, std::string what) {
        c.agree = false;
        rep.findings.push_back(c.name + ": " + what);
    };

    // (i) G̃ is a weak equivalence exactly when the A conditions hold.
    {
        TheoremCheck c{"equivalence-vs-A", false, true, ""};
        if (auto p = a_precondition(F, wa, wb, opt)) {
            c.detail = "skipped: " + *p;
        } else {
            c.evaluated = true;
            auto as = check_A_all(F, wa, wb, opt);
            GTilde g = induce_g_tilde(F, wa, wb, opt);
            auto we = is_weak_equivalence(g.fun, opt);
            c.detail = fmt::format("weak equivalence of induced = {}; {}", we.holds, verdicts(as));
            if (we.holds != all_pass(as)) finding(c, c.detail);
        }
        rep.checks.push_back(c);
    }

    WClass qmin = quasi_units(F.target);
    std::optional<std::vector<ConditionReport>> bs;
    // (ii) With quasi-units on the target, each A condition matches its B counterpart.
    {
        TheoremCheck c{"A-vs-B-at-quasi-units", false, true, ""};
        if (auto p = a_precondition(F, wa, qmin, opt)) {
            c.detail = "skipped: " + *p;
        } else {
            c.evaluated = true;
            auto as = check_A_all(F, wa, qmin, opt);
            bs = check_B_all(F, wa, opt);
            c.detail = verdicts(as) + "; " + verdicts(*bs);
            for (int i = 0; i < 5; ++i)
                if (as[i].verdict != (*bs)[i].verdict)
                    finding(c, fmt::format("{} is {} but {} is {}", as[i].tag, verdict_name(as[i].verdict),
                                           (*bs)[i].tag, verdict_name((*bs)[i].verdict)));
        }
        rep.checks.push_back(c);
    }

    // (iii) EF conditions are sufficient for the B conditions.
    auto efs = check_EF_all(F, wa, opt);
    bool b_ok = !b_precondition(F, wa, opt).has_value();
    {
        TheoremCheck c{"EF-implies-B", false, true, ""};
        if (!b_ok) {
            c.detail = "skipped: " + *b_precondition(F, wa, opt);
        } else {
            c.evaluated = true;
            if (!bs) bs = check_B_all(F, wa, opt);
            c.detail = verdicts(efs) + "; " + verdicts(*bs);
            if (all_pass(efs) && !all_pass(*bs)) finding(c, "EF conditions hold but " + verdicts(*bs));
        }
        rep.checks.push_back(c);
    }

    // (iv) Under EF2, EF3 and W_A ↦ equivalences, every f with F(f) an
    // equivalence has some g with f∘g ∈ W_A and F(g) an equivalence.
    {
        TheoremCheck c{"equivalence-lifting", false, true, ""};
        if (!b_ok || !efs[1].pass() || !efs[2].pass()) {
            c.detail = "skipped: hypotheses do not hold";
        } else {
            c.evaluated = true;
            const FinBicat& A = *F.source;
            auto eq = internal_equivalences_class(F.target);
            std::size_t checked = 0;
            for (std::size_t i = 0; i < A.one_count(); ++i) {
                OneId f(i);
                if (!eq.contains(F.one(f))) continue;
                ++checked;
                bool found = false;
                for (OneId g : A.ones_into(A.src(f)))
                    if (wa.contains(A.hcomp1(f, g)) && eq.contains(F.one(g))) {
                        found = true;
                        break;
                    }
                if (!found) finding(c, "no lifting partner for " + A.name(f));
            }
            c.detail = fmt::format("{} 1-cells checked", checked);
        }
        rep.checks.push_back(c);
    }

    // (v) The B conditions decide whether the induced pseudofunctor into the
    // localization at quasi-units is an equivalence.
    {
        TheoremCheck c{"B-vs-equivalence", false, true, ""};
        if (!b_ok || a_precondition(F, wa, qmin, opt)) {
            c.detail = "skipped: preconditions do not hold";
        } else {
            c.evaluated = true;
            if (!bs) bs = check_B_all(F, wa, opt);
            GTilde g = induce_g_tilde(F, wa, qmin, opt);
            auto we = is_weak_equivalence(g.fun, opt);
            c.detail = fmt::format("weak equivalence of induced = {}; {}", we.holds, verdicts(*bs));
            if (we.holds != all_pass(*bs)) finding(c, c.detail);
        }
        rep.checks.push_back(c);
    }
    return rep;
}

}  // namespace bicat
