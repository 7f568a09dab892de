#include "bicat/wclass.hpp"

#include <algorithm>
#include <fmt/format.h>

#include "bicat/cell_algebra.hpp"

namespace bicat {

bool BfReport::pass() const {
    return std::ranges::all_of(axioms, [](const BfAxiom& a) { return a.pass; });
}

const BfAxiom& BfReport::axiom(const std::string& name) const {
    for (const auto& a : axioms)
        if (a.name == name) return a;
    throw std::out_of_range("no axiom " + name);
}

WClass::WClass(BicatPtr base, std::vector<bool> members, std::string name)
    : base_(std::move(base)), members_(std::move(members)), name_(std::move(name)), cache_(std::make_shared<Cache>()) {
    if (members_.size() != base_->one_count()) throw StructuralError("class '" + name_ + "': membership size mismatch");
}

WClass WClass::of(BicatPtr base, const std::vector<OneId>& cells, std::string name) {
    std::vector<bool> m(base->one_count(), false);
    for (OneId f : cells) m.at(f.index()) = true;
    return WClass(std::move(base), std::move(m), std::move(name));
}

std::vector<OneId> WClass::cells() const {
    std::vector<OneId> out;
    for (std::size_t i = 0; i < members_.size(); ++i)
        if (members_[i]) out.emplace_back(i);
    return out;
}

std::size_t WClass::size() const { return static_cast<std::size_t>(std::ranges::count(members_, true)); }

const BfReport& WClass::bf(const SearchOptions& opt) const {
    std::lock_guard lk(cache_->mu);
    if (!cache_->bf) cache_->bf = check_bf(*base_, *this, opt);
    return *cache_->bf;
}

const WClass& WClass::saturated(const SearchOptions&) const {
    std::lock_guard lk(cache_->mu);
    if (!cache_->sat) cache_->sat = std::make_shared<WClass>(saturate(*this));
    return *cache_->sat;
}

std::string WClass::describe() const {
    std::string s = "{";
    bool first = true;
    for (OneId f : cells()) {
        if (!first) s += ", ";
        s += base_->name(f);
        first = false;
    }
    return s + "}";
}

namespace {

class BfChecker {
public:
    BfChecker(const FinBicat& b, const WClass& w, const SearchOptions& opt)
        : b_(b), w_(w), alg_(b, opt.strict_fast_path) {}

    BfReport run() {
        BfReport r;
        r.axioms.push_back(bf1());
        r.axioms.push_back(bf2());
        r.axioms.push_back(bf3());
        auto four = bf4();
        for (auto& a : four) r.axioms.push_back(std::move(a));
        r.axioms.push_back(bf5());
        r.contains_all_equivalences = true;
        for (std::size_t f = 0; f < b_.one_count(); ++f)
            if (!w_.contains(OneId(f)) && is_internal_equivalence(b_, OneId(f))) r.contains_all_equivalences = false;
        return r;
    }

private:
    Binding bo(const char* role, ObjId x) const { return bind(b_, "base", role, x); }
    Binding b1(const char* role, OneId f) const { return bind(b_, "base", role, f); }
    Binding b2(const char* role, TwoId a) const { return bind(b_, "base", role, a); }

    BfAxiom bf1() {
        BfAxiom a{"BF1", true, {}, {}};
        for (std::size_t x = 0; x < b_.object_count(); ++x) {
            OneId i = b_.id1(ObjId(x));
            if (!w_.contains(i)) {
                a.pass = false;
                a.counterexample = {b1("identity", i)};
                a.detail = b_.name(i) + " is not in the class";
                break;
            }
        }
        return a;
    }

    BfAxiom bf2() {
        BfAxiom a{"BF2", true, {}, {}};
        for (OneId u : w_.cells())
            for (OneId v : w_.cells()) {
                if (!b_.composable(v, u)) continue;
                OneId vu = b_.hcomp1(v, u);
                if (!w_.contains(vu)) {
                    a.pass = false;
                    a.counterexample = {b1("outer", v), b1("inner", u)};
                    a.detail = fmt::format("{}∘{} = {} is not in the class", b_.name(v), b_.name(u), b_.name(vu));
                    return a;
                }
            }
        return a;
    }

    BfAxiom bf3() {
        BfAxiom a{"BF3", true, {}, {}};
        for (OneId w : w_.cells())
            for (OneId f : b_.ones_into(b_.tgt(w))) {
                bool found = false;
                for (std::size_t d = 0; d < b_.object_count() && !found; ++d)
                    for (OneId v : b_.hom(ObjId(d), b_.src(f))) {
                        if (!w_.contains(v)) continue;
                        for (OneId g : b_.hom(ObjId(d), b_.src(w)))
                            if (b_.first_invertible(b_.hcomp1(f, v), b_.hcomp1(w, g))) {
                                found = true;
                                break;
                            }
                        if (found) break;
                    }
                if (!found) {
                    a.pass = false;
                    a.counterexample = {b1("w", w), b1("f", f)};
                    a.detail = fmt::format("no square completes {} against {}", b_.name(f), b_.name(w));
                    return a;
                }
            }
        return a;
    }

    struct Solution {
        OneId v;
        TwoId beta;
    };

    // All (v, β) with α∗i_v equal to w∗β up to associators.
    std::vector<Solution> solutions(OneId w, OneId f, OneId g, TwoId alpha) {
        std::vector<Solution> out;
        ObjId a = b_.src(f);
        Cell al = alg_.atom(alpha, alg_.w(w, f), alg_.w(w, g));
        for (std::size_t d = 0; d < b_.object_count(); ++d)
            for (OneId v : b_.hom(ObjId(d), a)) {
                if (!w_.contains(v)) continue;
                Word V = alg_.w(v);
                Cell lhs = alg_.rwhisk(al, V);
                for (TwoId beta : b_.cells(b_.hcomp1(f, v), b_.hcomp1(g, v))) {
                    Cell be = alg_.atom(beta, alg_.w(alg_.w(f), V), alg_.w(alg_.w(g), V));
                    Cell rhs = alg_.cast(alg_.lwhisk(alg_.w(w), be), lhs.src, lhs.tgt);
                    if (rhs.cell == lhs.cell) out.push_back({v, beta});
                }
            }
        return out;
    }

    bool refines(OneId f, OneId g, const Solution& s1, const Solution& s2) {
        ObjId d1 = b_.src(s1.v), d2 = b_.src(s2.v);
        Word F = alg_.w(f), G = alg_.w(g);
        for (std::size_t e = 0; e < b_.object_count(); ++e)
            for (OneId u : b_.hom(ObjId(e), d1)) {
                if (!w_.contains(b_.hcomp1(s1.v, u))) continue;
                Word vu = alg_.w(alg_.w(s1.v), alg_.w(u));
                for (OneId u2 : b_.hom(ObjId(e), d2)) {
                    Word vu2 = alg_.w(alg_.w(s2.v), alg_.w(u2));
                    for (TwoId eps : b_.cells(vu.value(), vu2.value())) {
                        if (!b_.invertible(eps)) continue;
                        Cell ep = alg_.atom(eps, vu, vu2);
                        Cell b1c = alg_.atom(s1.beta, alg_.w(F, alg_.w(s1.v)), alg_.w(G, alg_.w(s1.v)));
                        Cell b2c = alg_.atom(s2.beta, alg_.w(F, alg_.w(s2.v)), alg_.w(G, alg_.w(s2.v)));
                        Cell lhs = alg_.chain({alg_.lwhisk(F, ep), alg_.rwhisk(b2c, alg_.w(u2))});
                        Cell rhs = alg_.chain({alg_.rwhisk(b1c, alg_.w(u)), alg_.lwhisk(G, ep)});
                        Word s = alg_.w(F, vu), t = alg_.w(G, vu2);
                        if (alg_.cast(lhs, s, t).cell == alg_.cast(rhs, s, t).cell) return true;
                    }
                }
            }
        return false;
    }

    std::vector<BfAxiom> bf4() {
        BfAxiom a{"BF4a", true, {}, {}}, bax{"BF4b", true, {}, {}}, c{"BF4c", true, {}, {}};
        for (OneId w : w_.cells())
            for (std::size_t f = 0; f < b_.one_count(); ++f) {
                OneId F(f);
                if (b_.tgt(F) != b_.src(w)) continue;
                for (OneId g : b_.hom(b_.src(F), b_.tgt(F)))
                    for (TwoId alpha : b_.cells(b_.hcomp1(w, F), b_.hcomp1(w, g))) {
                        auto sols = solutions(w, F, g, alpha);
                        std::vector<Binding> ce{b1("w", w), b1("f", F), b1("g", g), b2("alpha", alpha)};
                        if (sols.empty()) {
                            if (a.pass) {
                                a.pass = false;
                                a.counterexample = ce;
                                a.detail = "no (v, β) lifts " + b_.name(alpha);
                            }
                            continue;
                        }
                        if (bax.pass && b_.invertible(alpha) &&
                            std::ranges::none_of(sols, [&](const Solution& s) { return b_.invertible(s.beta); })) {
                            bax.pass = false;
                            bax.counterexample = ce;
                            bax.detail = "no invertible lift of invertible " + b_.name(alpha);
                        }
                        if (!c.pass) continue;
                        for (std::size_t i = 0; i < sols.size() && c.pass; ++i)
                            for (std::size_t j = 0; j < sols.size(); ++j) {
                                if (i == j) continue;
                                if (!refines(F, g, sols[i], sols[j])) {
                                    c.pass = false;
                                    c.counterexample = ce;
                                    c.counterexample.push_back(b1("v", sols[i].v));
                                    c.counterexample.push_back(b2("beta", sols[i].beta));
                                    c.counterexample.push_back(b1("v'", sols[j].v));
                                    c.counterexample.push_back(b2("beta'", sols[j].beta));
                                    c.detail = "two lifts admit no common refinement";
                                    break;
                                }
                            }
                    }
            }
        return {a, bax, c};
    }

    BfAxiom bf5() {
        BfAxiom a{"BF5", true, {}, {}};
        for (OneId w : w_.cells())
            for (OneId v : b_.hom(b_.src(w), b_.tgt(w))) {
                if (w_.contains(v)) continue;
                if (auto al = b_.first_invertible(w, v)) {
                    a.pass = false;
                    a.counterexample = {b1("w", w), b1("v", v), b2("alpha", *al)};
                    a.detail = fmt::format("{} is invertibly isomorphic to {} but not in the class", b_.name(v),
                                           b_.name(w));
                    return a;
                }
            }
        return a;
    }

    const FinBicat& b_;
    const WClass& w_;
    CellAlgebra alg_;
};

}  // namespace

BfReport check_bf(const FinBicat& b, const WClass& w, const SearchOptions& opt) {
    if (&b != &w.base()) throw PreconditionError("class '" + w.name() + "' lives on a different bicategory");
    return BfChecker(b, w, opt).run();
}

Saturation saturate_with_witnesses(const WClass& w) {
    const FinBicat& b = w.base();
    std::vector<bool> m(b.one_count(), false);
    std::map<OneId, SaturationWitness> wit;
    for (std::size_t f = 0; f < b.one_count(); ++f) {
        OneId F(f);
        bool done = false;
        for (OneId g : b.ones_into(b.src(F))) {
            if (!w.contains(b.hcomp1(F, g))) continue;
            for (OneId h : b.ones_into(b.src(g)))
                if (w.contains(b.hcomp1(g, h))) {
                    m[f] = true;
                    wit[F] = {g, h};
                    done = true;
                    break;
                }
            if (done) break;
        }
    }
    std::string name = w.name().empty() ? std::string() : w.name() + "_sat";
    return {WClass(w.base_ptr(), std::move(m), std::move(name)), std::move(wit)};
}

WClass saturate(const WClass& w) { return saturate_with_witnesses(w).cls; }

WClass quasi_units(const BicatPtr& b) {
    std::vector<bool> m(b->one_count(), false);
    for (std::size_t f = 0; f < b->one_count(); ++f) {
        OneId F(f);
        if (b->src(F) == b->tgt(F) && b->first_invertible(F, b->id1(b->src(F)))) m[f] = true;
    }
    return WClass(b, std::move(m), "min");
}

WClass internal_equivalences_class(const BicatPtr& b) {
    std::vector<bool> m(b->one_count(), false);
    for (std::size_t f = 0; f < b->one_count(); ++f) m[f] = is_internal_equivalence(*b, OneId(f));
    return WClass(b, std::move(m), "equiv");
}

WClass identities_class(const BicatPtr& b) {
    std::vector<bool> m(b->one_count(), false);
    for (std::size_t x = 0; x < b->object_count(); ++x) m[b->id1(ObjId(x)).index()] = true;
    return WClass(b, std::move(m), "ids");
}

WClass all_cells_class(const BicatPtr& b) {
    return WClass(b, std::vector<bool>(b->one_count(), true), "all");
}

}  // namespace bicat
