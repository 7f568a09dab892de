#include "bicat/pasting.hpp"

#include <fmt/format.h>

namespace bicat {

PastingExpr PastingExpr::make(Kind k, TwoId c, std::vector<OneId> ones, std::vector<PastingExpr> ch) {
    return PastingExpr(std::make_shared<const Node>(Node{k, c, std::move(ones), std::move(ch)}));
}

PastingExpr PastingExpr::atom(TwoId a) { return make(Kind::Atom, a, {}, {}); }
PastingExpr PastingExpr::id_on(OneId f) { return make(Kind::IdOn, {}, {f}, {}); }
PastingExpr PastingExpr::vcomp(PastingExpr upper, PastingExpr lower) {
    return make(Kind::VComp, {}, {}, {std::move(upper), std::move(lower)});
}
PastingExpr PastingExpr::hcomp(PastingExpr left, PastingExpr right) {
    return make(Kind::HComp, {}, {}, {std::move(left), std::move(right)});
}
PastingExpr PastingExpr::whisk_l(OneId g, PastingExpr e) { return make(Kind::WhiskL, {}, {g}, {std::move(e)}); }
PastingExpr PastingExpr::whisk_r(PastingExpr e, OneId f) { return make(Kind::WhiskR, {}, {f}, {std::move(e)}); }
PastingExpr PastingExpr::assoc(OneId h, OneId g, OneId f) { return make(Kind::Assoc, {}, {h, g, f}, {}); }
PastingExpr PastingExpr::assoc_inv(OneId h, OneId g, OneId f) { return make(Kind::AssocInv, {}, {h, g, f}, {}); }
PastingExpr PastingExpr::runit(OneId f) { return make(Kind::RUnit, {}, {f}, {}); }
PastingExpr PastingExpr::runit_inv(OneId f) { return make(Kind::RUnitInv, {}, {f}, {}); }
PastingExpr PastingExpr::lunit(OneId f) { return make(Kind::LUnit, {}, {f}, {}); }
PastingExpr PastingExpr::lunit_inv(OneId f) { return make(Kind::LUnitInv, {}, {f}, {}); }
PastingExpr PastingExpr::inv(PastingExpr e) { return make(Kind::Inv, {}, {}, {std::move(e)}); }

PastingExpr PastingExpr::chain(const std::vector<PastingExpr>& factors) {
    if (factors.empty()) throw TypingError("empty vertical chain");
    PastingExpr acc = factors.front();
    for (std::size_t i = 1; i < factors.size(); ++i) acc = vcomp(factors[i], acc);
    return acc;
}

std::vector<PastingExpr> PastingExpr::vertical_factors() const {
    if (kind() != Kind::VComp) return {*this};
    auto out = children()[1].vertical_factors();
    auto up = children()[0].vertical_factors();
    out.insert(out.end(), up.begin(), up.end());
    return out;
}

std::string PastingExpr::to_string(const FinBicat& b) const {
    auto one = [&](std::size_t i) { return b.name(ones()[i]); };
    switch (kind()) {
        case Kind::Atom: return b.name(cell());
        case Kind::IdOn: return "i_" + one(0);
        case Kind::VComp: return "(" + children()[0].to_string(b) + " ⊙ " + children()[1].to_string(b) + ")";
        case Kind::HComp: return "(" + children()[0].to_string(b) + " ∗ " + children()[1].to_string(b) + ")";
        case Kind::WhiskL: return "(" + one(0) + " ∗ " + children()[0].to_string(b) + ")";
        case Kind::WhiskR: return "(" + children()[0].to_string(b) + " ∗ " + one(0) + ")";
        case Kind::Assoc: return fmt::format("θ[{},{},{}]", one(0), one(1), one(2));
        case Kind::AssocInv: return fmt::format("θ⁻¹[{},{},{}]", one(0), one(1), one(2));
        case Kind::RUnit: return "π[" + one(0) + "]";
        case Kind::RUnitInv: return "π⁻¹[" + one(0) + "]";
        case Kind::LUnit: return "υ[" + one(0) + "]";
        case Kind::LUnitInv: return "υ⁻¹[" + one(0) + "]";
        case Kind::Inv: return "(" + children()[0].to_string(b) + ")⁻¹";
    }
    return "?";
}

namespace {

TwoId eval(const FinBicat& b, const PastingExpr& e) {
    using K = PastingExpr::Kind;
    auto untypable = [&](const std::string& why) -> TypingError {
        return TypingError("untypable subterm " + e.to_string(b) + ": " + why);
    };
    auto composable3 = [&]() {
        const auto& o = e.ones();
        return b.composable(o[0], o[1]) && b.composable(o[1], o[2]);
    };
    auto invert = [&](TwoId a) {
        auto r = b.inverse(a);
        if (!r) throw InvertibilityError("subterm " + e.to_string(b) + " inverts non-invertible " + b.name(a));
        return *r;
    };
    switch (e.kind()) {
        case K::Atom:
            if (!e.cell().valid() || e.cell().index() >= b.two_count()) throw untypable("unknown 2-cell");
            return e.cell();
        case K::IdOn: return b.id2(e.ones()[0]);
        case K::VComp: {
            TwoId lower = eval(b, e.children()[1]);
            TwoId upper = eval(b, e.children()[0]);
            if (b.tgt1(lower) != b.src1(upper))
                throw untypable(fmt::format("lower ends at {} but upper starts at {}", b.name(b.tgt1(lower)),
                                            b.name(b.src1(upper))));
            return b.vcomp(upper, lower);
        }
        case K::HComp: {
            TwoId left = eval(b, e.children()[0]);
            TwoId right = eval(b, e.children()[1]);
            if (b.src(b.src1(left)) != b.tgt(b.src1(right))) throw untypable("horizontal boundary objects differ");
            return hcompose2(b, left, right);
        }
        case K::WhiskL: {
            TwoId a = eval(b, e.children()[0]);
            if (b.tgt(b.src1(a)) != b.src(e.ones()[0])) throw untypable("whiskering 1-cell does not compose");
            return b.whisk_left(e.ones()[0], a);
        }
        case K::WhiskR: {
            TwoId a = eval(b, e.children()[0]);
            if (b.src(b.src1(a)) != b.tgt(e.ones()[0])) throw untypable("whiskering 1-cell does not compose");
            return b.whisk_right(a, e.ones()[0]);
        }
        case K::Assoc:
            if (!composable3()) throw untypable("1-cells do not compose");
            return b.assoc(e.ones()[0], e.ones()[1], e.ones()[2]);
        case K::AssocInv:
            if (!composable3()) throw untypable("1-cells do not compose");
            return invert(b.assoc(e.ones()[0], e.ones()[1], e.ones()[2]));
        case K::RUnit: return b.runit(e.ones()[0]);
        case K::RUnitInv: return invert(b.runit(e.ones()[0]));
        case K::LUnit: return b.lunit(e.ones()[0]);
        case K::LUnitInv: return invert(b.lunit(e.ones()[0]));
        case K::Inv: return invert(eval(b, e.children()[0]));
    }
    throw untypable("unknown node");
}

}  // namespace

TwoId eval_pasting(const FinBicat& b, const PastingExpr& e) { return eval(b, e); }

}  // namespace bicat
