#include "bicat/core.hpp"

#include <algorithm>
#include <fmt/format.h>
#include <set>

namespace bicat {

namespace {

constexpr std::uint32_t kNone = 0xffffffffu;

template <class Map, class Key>
void require_key(const Map& m, const Key& k, bool expected, const std::string& what) {
    bool present = m.contains(k);
    if (present && !expected) throw StructuralError(what + ": entry present for a non-composable key");
    if (!present && expected) throw StructuralError(what + ": missing entry");
}

}  // namespace

std::shared_ptr<const FinBicat> FinBicat::build(BicatTables tables) {
    auto* raw = new FinBicat(std::move(tables));
    std::shared_ptr<FinBicat> p(raw);
    p->index();
    return p;
}

void FinBicat::index() {
    const std::size_t n0 = t_.objects.size(), n1 = t_.one_cells.size(), n2 = t_.two_cells.size();
    auto one_name = [&](OneId f) { return f.index() < n1 ? t_.one_cells[f.index()].name : std::string("?"); };
    auto two_name = [&](TwoId a) { return a.index() < n2 ? t_.two_cells[a.index()].name : std::string("?"); };

    for (std::size_t i = 0; i < n0; ++i)
        if (!obj_by_name_.emplace(t_.objects[i], ObjId(i)).second)
            throw StructuralError("objects: duplicate id '" + t_.objects[i] + "'");
    for (std::size_t i = 0; i < n1; ++i) {
        const auto& d = t_.one_cells[i];
        if (!one_by_name_.emplace(d.name, OneId(i)).second)
            throw StructuralError("one_cells: duplicate id '" + d.name + "'");
        if (d.src.index() >= n0 || d.tgt.index() >= n0)
            throw StructuralError("one_cells: '" + d.name + "' has an undeclared boundary object");
    }
    for (std::size_t i = 0; i < n2; ++i) {
        const auto& d = t_.two_cells[i];
        if (!two_by_name_.emplace(d.name, TwoId(i)).second)
            throw StructuralError("two_cells: duplicate id '" + d.name + "'");
        if (d.src.index() >= n1 || d.tgt.index() >= n1)
            throw StructuralError("two_cells: '" + d.name + "' has an undeclared boundary 1-cell");
        if (src(d.src) != src(d.tgt) || tgt(d.src) != tgt(d.tgt))
            throw StructuralError("two_cells: '" + d.name + "' has non-parallel boundary 1-cells");
    }
    if (t_.id1.size() != n0) throw StructuralError("id1: expected one entry per object");
    if (t_.id2.size() != n1) throw StructuralError("id2: expected one entry per 1-cell");
    if (t_.runit.size() != n1) throw StructuralError("runit: expected one entry per 1-cell");
    if (t_.lunit.size() != n1) throw StructuralError("lunit: expected one entry per 1-cell");
    for (auto f : t_.id1)
        if (f.index() >= n1) throw StructuralError("id1: value out of range");
    for (const auto* v : {&t_.id2, &t_.runit, &t_.lunit})
        for (auto a : *v)
            if (a.index() >= n2) throw StructuralError("identity/unitor table: value out of range");

    auto check_one = [&](OneId v, const std::string& what) {
        if (v.index() >= n1) throw StructuralError(what + ": value out of range");
    };
    auto check_two = [&](TwoId v, const std::string& what) {
        if (v.index() >= n2) throw StructuralError(what + ": value out of range");
    };

    for (const auto& [k, v] : t_.hcomp1) {
        if (k.first.index() >= n1 || k.second.index() >= n1) throw StructuralError("hcomp1: undeclared key");
        check_one(v, "hcomp1");
    }
    for (const auto& [k, v] : t_.vcomp) {
        if (k.first.index() >= n2 || k.second.index() >= n2) throw StructuralError("vcomp: undeclared key");
        check_two(v, "vcomp");
    }
    for (const auto& [k, v] : t_.whisk_left) {
        if (k.first.index() >= n1 || k.second.index() >= n2) throw StructuralError("whisk_left: undeclared key");
        check_two(v, "whisk_left");
    }
    for (const auto& [k, v] : t_.whisk_right) {
        if (k.first.index() >= n2 || k.second.index() >= n1) throw StructuralError("whisk_right: undeclared key");
        check_two(v, "whisk_right");
    }
    for (const auto& [k, v] : t_.assoc) {
        auto [h, g, f] = k;
        if (h.index() >= n1 || g.index() >= n1 || f.index() >= n1) throw StructuralError("assoc: undeclared key");
        check_two(v, "assoc");
    }

    hcomp1_.assign(n1 * n1, kNone);
    for (std::size_t g = 0; g < n1; ++g)
        for (std::size_t f = 0; f < n1; ++f) {
            OneId G(g), F(f);
            std::pair key{G, F};
            require_key(t_.hcomp1, key, composable(G, F),
                        fmt::format("hcomp1 ({}, {})", one_name(G), one_name(F)));
            if (composable(G, F)) hcomp1_[g * n1 + f] = t_.hcomp1.at(key).value;
        }

    vcomp_.assign(n2 * n2, kNone);
    for (std::size_t b = 0; b < n2; ++b)
        for (std::size_t a = 0; a < n2; ++a) {
            TwoId B(b), A(a);
            bool ok = tgt1(A) == src1(B);
            std::pair key{B, A};
            require_key(t_.vcomp, key, ok, fmt::format("vcomp ({}, {})", two_name(B), two_name(A)));
            if (ok) vcomp_[b * n2 + a] = t_.vcomp.at(key).value;
        }

    wl_.assign(n1 * n2, kNone);
    wr_.assign(n2 * n1, kNone);
    for (std::size_t g = 0; g < n1; ++g)
        for (std::size_t a = 0; a < n2; ++a) {
            OneId G(g);
            TwoId A(a);
            bool ok = tgt(tgt1(A)) == src(G);
            std::pair key{G, A};
            require_key(t_.whisk_left, key, ok, fmt::format("whisk_left ({}, {})", one_name(G), two_name(A)));
            if (ok) wl_[g * n2 + a] = t_.whisk_left.at(key).value;
        }
    for (std::size_t b = 0; b < n2; ++b)
        for (std::size_t f = 0; f < n1; ++f) {
            TwoId B(b);
            OneId F(f);
            bool ok = tgt(F) == src(src1(B));
            std::pair key{B, F};
            require_key(t_.whisk_right, key, ok, fmt::format("whisk_right ({}, {})", two_name(B), one_name(F)));
            if (ok) wr_[b * n1 + f] = t_.whisk_right.at(key).value;
        }

    assoc_.assign(n1 * n1 * n1, kNone);
    for (std::size_t h = 0; h < n1; ++h)
        for (std::size_t g = 0; g < n1; ++g)
            for (std::size_t f = 0; f < n1; ++f) {
                OneId H(h), G(g), F(f);
                bool ok = composable(H, G) && composable(G, F);
                std::tuple key{H, G, F};
                require_key(t_.assoc, key, ok,
                            fmt::format("assoc ({}, {}, {})", one_name(H), one_name(G), one_name(F)));
                if (ok) assoc_[(h * n1 + g) * n1 + f] = t_.assoc.at(key).value;
            }

    hom_.assign(n0 * n0, {});
    for (std::size_t f = 0; f < n1; ++f) hom_[src(OneId(f)).index() * n0 + tgt(OneId(f)).index()].push_back(OneId(f));
    cells_.assign(n1 * n1, {});
    for (std::size_t a = 0; a < n2; ++a) cells_[src1(TwoId(a)).index() * n1 + tgt1(TwoId(a)).index()].push_back(TwoId(a));

    // Inverses by exhaustive search over the opposite hom.
    inverse_.assign(n2, kNone);
    for (std::size_t a = 0; a < n2; ++a) {
        TwoId A(a);
        for (TwoId b : cells(tgt1(A), src1(A))) {
            if (vcomp(b, A) == id2(src1(A)) && vcomp(A, b) == id2(tgt1(A))) {
                inverse_[a] = b.value;
                break;
            }
        }
    }
}

std::optional<ObjId> FinBicat::find_object(const std::string& n) const {
    auto it = obj_by_name_.find(n);
    if (it == obj_by_name_.end()) return std::nullopt;
    return it->second;
}

std::optional<OneId> FinBicat::find_one(const std::string& n) const {
    auto it = one_by_name_.find(n);
    if (it == one_by_name_.end()) return std::nullopt;
    return it->second;
}

std::optional<TwoId> FinBicat::find_two(const std::string& n) const {
    auto it = two_by_name_.find(n);
    if (it == two_by_name_.end()) return std::nullopt;
    return it->second;
}

OneId FinBicat::hcomp1(OneId g, OneId f) const {
    auto v = hcomp1_[g.index() * one_count() + f.index()];
    if (v == kNone) throw CompositionError(fmt::format("cannot compose 1-cells {} and {}", name(g), name(f)));
    return OneId(v);
}

TwoId FinBicat::vcomp(TwoId b, TwoId a) const {
    auto v = vcomp_[b.index() * two_count() + a.index()];
    if (v == kNone)
        throw CompositionError(fmt::format("frame mismatch composing {} after {} vertically", name(b), name(a)));
    return TwoId(v);
}

TwoId FinBicat::whisk_left(OneId g, TwoId a) const {
    auto v = wl_[g.index() * two_count() + a.index()];
    if (v == kNone) throw CompositionError(fmt::format("cannot whisker {} by {} on the left", name(a), name(g)));
    return TwoId(v);
}

TwoId FinBicat::whisk_right(TwoId b, OneId f) const {
    auto v = wr_[b.index() * one_count() + f.index()];
    if (v == kNone) throw CompositionError(fmt::format("cannot whisker {} by {} on the right", name(b), name(f)));
    return TwoId(v);
}

TwoId FinBicat::assoc(OneId h, OneId g, OneId f) const {
    auto n1 = one_count();
    auto v = assoc_[(h.index() * n1 + g.index()) * n1 + f.index()];
    if (v == kNone) throw CompositionError(fmt::format("no associator for ({}, {}, {})", name(h), name(g), name(f)));
    return TwoId(v);
}

const std::vector<TwoId>& FinBicat::cells(OneId f, OneId g) const { return cells_[f.index() * one_count() + g.index()]; }

std::vector<OneId> FinBicat::ones_from(ObjId a) const {
    std::vector<OneId> out;
    for (std::size_t f = 0; f < one_count(); ++f)
        if (src(OneId(f)) == a) out.emplace_back(f);
    return out;
}

std::vector<OneId> FinBicat::ones_into(ObjId b) const {
    std::vector<OneId> out;
    for (std::size_t f = 0; f < one_count(); ++f)
        if (tgt(OneId(f)) == b) out.emplace_back(f);
    return out;
}

std::optional<TwoId> FinBicat::inverse(TwoId a) const {
    auto v = inverse_[a.index()];
    if (v == kNone) return std::nullopt;
    return TwoId(v);
}

std::optional<TwoId> FinBicat::first_invertible(OneId f, OneId g) const {
    for (TwoId a : cells(f, g))
        if (invertible(a)) return a;
    return std::nullopt;
}

bool ValidationReport::violates(const std::string& law) const {
    return std::ranges::any_of(violations, [&](const Violation& v) { return v.law == law; });
}

namespace {

class Validator {
public:
    explicit Validator(const FinBicat& b) : b_(b) {}

    ValidationReport run() {
        rep_.strict = b_.strict();
        typing();
        if (!rep_.violations.empty()) {
            rep_.pass = false;
            return rep_;
        }
        category_laws();
        whisker_laws();
        interchange();
        structure_cells();
        pentagon();
        triangle();
        if (b_.strict()) strictness();
        rep_.pass = rep_.violations.empty();
        return rep_;
    }

private:
    void fail(std::string law, std::string detail) {
        // Keep reports bounded on badly broken inputs.
        if (per_law_[law]++ < 16) rep_.violations.push_back({std::move(law), std::move(detail)});
    }

    const std::string& n(OneId f) const { return b_.name(f); }
    const std::string& n(TwoId a) const { return b_.name(a); }

    void expect_frame(TwoId a, OneId s, OneId t, const std::string& where) {
        if (b_.src1(a) != s || b_.tgt1(a) != t)
            fail("typing", fmt::format("{} = {} has frame {} => {}, expected {} => {}", where, n(a), n(b_.src1(a)),
                                       n(b_.tgt1(a)), n(s), n(t)));
    }

    void typing() {
        const auto& t = b_.tables();
        for (std::size_t x = 0; x < b_.object_count(); ++x) {
            OneId i = b_.id1(ObjId(x));
            if (b_.src(i) != ObjId(x) || b_.tgt(i) != ObjId(x))
                fail("typing", fmt::format("id1({}) = {} is not an endo-1-cell there", b_.name(ObjId(x)), n(i)));
        }
        if (!rep_.violations.empty()) return;
        for (std::size_t f = 0; f < b_.one_count(); ++f) {
            OneId F(f);
            expect_frame(b_.id2(F), F, F, fmt::format("id2({})", n(F)));
        }
        for (const auto& [k, v] : t.hcomp1) {
            auto [g, f] = k;
            if (b_.src(v) != b_.src(f) || b_.tgt(v) != b_.tgt(g))
                fail("typing", fmt::format("hcomp1({}, {}) = {} has the wrong boundary", n(g), n(f), n(v)));
        }
        if (!rep_.violations.empty()) return;
        for (const auto& [k, v] : t.vcomp) {
            auto [bb, a] = k;
            expect_frame(v, b_.src1(a), b_.tgt1(bb), fmt::format("vcomp({}, {})", n(bb), n(a)));
        }
        for (const auto& [k, v] : t.whisk_left) {
            auto [g, a] = k;
            expect_frame(v, b_.hcomp1(g, b_.src1(a)), b_.hcomp1(g, b_.tgt1(a)),
                         fmt::format("whisk_left({}, {})", n(g), n(a)));
        }
        for (const auto& [k, v] : t.whisk_right) {
            auto [bb, f] = k;
            expect_frame(v, b_.hcomp1(b_.src1(bb), f), b_.hcomp1(b_.tgt1(bb), f),
                         fmt::format("whisk_right({}, {})", n(bb), n(f)));
        }
        for (const auto& [k, v] : t.assoc) {
            auto [h, g, f] = k;
            expect_frame(v, b_.hcomp1(h, b_.hcomp1(g, f)), b_.hcomp1(b_.hcomp1(h, g), f),
                         fmt::format("assoc({}, {}, {})", n(h), n(g), n(f)));
        }
        for (std::size_t f = 0; f < b_.one_count(); ++f) {
            OneId F(f);
            expect_frame(b_.runit(F), b_.hcomp1(F, b_.id1(b_.src(F))), F, fmt::format("runit({})", n(F)));
            expect_frame(b_.lunit(F), b_.hcomp1(b_.id1(b_.tgt(F)), F), F, fmt::format("lunit({})", n(F)));
        }
    }

    void category_laws() {
        const std::size_t n2 = b_.two_count();
        for (std::size_t a = 0; a < n2; ++a) {
            TwoId A(a);
            if (b_.vcomp(b_.id2(b_.tgt1(A)), A) != A || b_.vcomp(A, b_.id2(b_.src1(A))) != A)
                fail("vcomp-unit", fmt::format("identity law fails for {}", n(A)));
        }
        for (std::size_t a = 0; a < n2; ++a) {
            TwoId A(a);
            for (std::size_t f = 0; f < b_.one_count(); ++f) {
                for (TwoId B : b_.cells(b_.tgt1(A), OneId(f))) {
                    TwoId BA = b_.vcomp(B, A);
                    for (std::size_t g = 0; g < b_.one_count(); ++g)
                        for (TwoId C : b_.cells(OneId(f), OneId(g)))
                            if (b_.vcomp(b_.vcomp(C, B), A) != b_.vcomp(C, BA))
                                fail("vcomp-assoc", fmt::format("({} ⊙ {}) ⊙ {} differs from {} ⊙ ({} ⊙ {})", n(C),
                                                                n(B), n(A), n(C), n(B), n(A)));
                }
            }
        }
    }

    void whisker_laws() {
        for (std::size_t g = 0; g < b_.one_count(); ++g) {
            OneId G(g);
            for (OneId f : b_.ones_into(b_.src(G)))
                if (b_.whisk_left(G, b_.id2(f)) != b_.id2(b_.hcomp1(G, f)))
                    fail("whisker-identity", fmt::format("whisk_left({}, i_{}) is not an identity", n(G), n(f)));
            for (OneId f : b_.ones_from(b_.tgt(G)))
                if (b_.whisk_right(b_.id2(f), G) != b_.id2(b_.hcomp1(f, G)))
                    fail("whisker-identity", fmt::format("whisk_right(i_{}, {}) is not an identity", n(f), n(G)));
        }
        for (std::size_t a = 0; a < b_.two_count(); ++a) {
            TwoId A(a);
            for (std::size_t f = 0; f < b_.one_count(); ++f)
                for (TwoId B : b_.cells(b_.tgt1(A), OneId(f))) {
                    TwoId BA = b_.vcomp(B, A);
                    ObjId top = b_.tgt(b_.src1(A)), bottom = b_.src(b_.src1(A));
                    for (OneId g : b_.ones_from(top))
                        if (b_.whisk_left(g, BA) != b_.vcomp(b_.whisk_left(g, B), b_.whisk_left(g, A)))
                            fail("whisker-functor",
                                 fmt::format("whisk_left({}, -) does not preserve {} ⊙ {}", n(g), n(B), n(A)));
                    for (OneId h : b_.ones_into(bottom))
                        if (b_.whisk_right(BA, h) != b_.vcomp(b_.whisk_right(B, h), b_.whisk_right(A, h)))
                            fail("whisker-functor",
                                 fmt::format("whisk_right(-, {}) does not preserve {} ⊙ {}", n(h), n(B), n(A)));
                }
        }
    }

    void interchange() {
        for (std::size_t a = 0; a < b_.two_count(); ++a) {
            TwoId A(a);
            OneId f = b_.src1(A), f2 = b_.tgt1(A);
            for (std::size_t bb = 0; bb < b_.two_count(); ++bb) {
                TwoId B(bb);
                if (b_.src(b_.src1(B)) != b_.tgt(f)) continue;
                OneId g = b_.src1(B), g2 = b_.tgt1(B);
                TwoId one = b_.vcomp(b_.whisk_right(B, f2), b_.whisk_left(g, A));
                TwoId two = b_.vcomp(b_.whisk_left(g2, A), b_.whisk_right(B, f));
                if (one != two)
                    fail("interchange", fmt::format("{} and {} fail to interchange", n(B), n(A)));
            }
        }
    }

    void structure_cells() {
        const std::size_t n1 = b_.one_count();
        for (std::size_t f = 0; f < n1; ++f) {
            OneId F(f);
            if (!b_.invertible(b_.runit(F))) fail("unitor-invertible", fmt::format("runit({}) is not invertible", n(F)));
            if (!b_.invertible(b_.lunit(F))) fail("unitor-invertible", fmt::format("lunit({}) is not invertible", n(F)));
        }
        // Naturality of the unitors.
        for (std::size_t a = 0; a < b_.two_count(); ++a) {
            TwoId A(a);
            OneId f = b_.src1(A), f2 = b_.tgt1(A);
            OneId is = b_.id1(b_.src(f)), it = b_.id1(b_.tgt(f));
            if (b_.vcomp(b_.runit(f2), b_.whisk_right(A, is)) != b_.vcomp(A, b_.runit(f)))
                fail("unitor-natural", fmt::format("runit is not natural at {}", n(A)));
            if (b_.vcomp(b_.lunit(f2), b_.whisk_left(it, A)) != b_.vcomp(A, b_.lunit(f)))
                fail("unitor-natural", fmt::format("lunit is not natural at {}", n(A)));
        }
        for (std::size_t h = 0; h < n1; ++h)
            for (OneId g : b_.ones_into(b_.src(OneId(h))))
                for (OneId f : b_.ones_into(b_.src(g))) {
                    OneId H(h);
                    TwoId th = b_.assoc(H, g, f);
                    if (!b_.invertible(th))
                        fail("associator-invertible", fmt::format("assoc({}, {}, {}) is not invertible", n(H), n(g), n(f)));
                    // Naturality in f.
                    for (OneId f2 : b_.hom(b_.src(f), b_.tgt(f)))
                        for (TwoId A : b_.cells(f, f2)) {
                            TwoId lhs = b_.vcomp(b_.assoc(H, g, f2), b_.whisk_left(H, b_.whisk_left(g, A)));
                            TwoId rhs = b_.vcomp(b_.whisk_left(b_.hcomp1(H, g), A), th);
                            if (lhs != rhs)
                                fail("associator-natural",
                                     fmt::format("assoc not natural in the right argument at ({}, {}, {})", n(H), n(g), n(A)));
                        }
                    for (OneId g2 : b_.hom(b_.src(g), b_.tgt(g)))
                        for (TwoId B : b_.cells(g, g2)) {
                            TwoId lhs = b_.vcomp(b_.assoc(H, g2, f), b_.whisk_left(H, b_.whisk_right(B, f)));
                            TwoId rhs = b_.vcomp(b_.whisk_right(b_.whisk_left(H, B), f), th);
                            if (lhs != rhs)
                                fail("associator-natural",
                                     fmt::format("assoc not natural in the middle argument at ({}, {}, {})", n(H), n(B), n(f)));
                        }
                    for (OneId h2 : b_.hom(b_.src(H), b_.tgt(H)))
                        for (TwoId C : b_.cells(H, h2)) {
                            TwoId lhs = b_.vcomp(b_.assoc(h2, g, f), b_.whisk_right(C, b_.hcomp1(g, f)));
                            TwoId rhs = b_.vcomp(b_.whisk_right(b_.whisk_right(C, g), f), th);
                            if (lhs != rhs)
                                fail("associator-natural",
                                     fmt::format("assoc not natural in the left argument at ({}, {}, {})", n(C), n(g), n(f)));
                        }
                }
    }

    void pentagon() {
        const std::size_t n1 = b_.one_count();
        for (std::size_t k = 0; k < n1; ++k)
            for (OneId h : b_.ones_into(b_.src(OneId(k))))
                for (OneId g : b_.ones_into(b_.src(h)))
                    for (OneId f : b_.ones_into(b_.src(g))) {
                        OneId K(k);
                        OneId kh = b_.hcomp1(K, h), hg = b_.hcomp1(h, g), gf = b_.hcomp1(g, f);
                        TwoId route1 = b_.vcomp(b_.assoc(kh, g, f), b_.assoc(K, h, gf));
                        TwoId route2 = b_.vcomp(b_.whisk_right(b_.assoc(K, h, g), f),
                                                b_.vcomp(b_.assoc(K, hg, f), b_.whisk_left(K, b_.assoc(h, g, f))));
                        if (route1 != route2)
                            fail("pentagon", fmt::format("pentagon fails at ({}, {}, {}, {})", n(K), n(h), n(g), n(f)));
                    }
    }

    void triangle() {
        for (std::size_t g = 0; g < b_.one_count(); ++g) {
            OneId G(g);
            OneId i = b_.id1(b_.src(G));
            for (OneId f : b_.ones_into(b_.src(G))) {
                TwoId lhs = b_.vcomp(b_.whisk_right(b_.runit(G), f), b_.assoc(G, i, f));
                TwoId rhs = b_.whisk_left(G, b_.lunit(f));
                if (lhs != rhs) fail("triangle", fmt::format("triangle fails at ({}, {})", n(G), n(f)));
            }
        }
    }

    void strictness() {
        for (const auto& [k, v] : b_.tables().assoc) {
            if (!b_.is_identity(v)) {
                auto [h, g, f] = k;
                fail("strict", fmt::format("assoc({}, {}, {}) is not an identity", n(h), n(g), n(f)));
            }
        }
        for (std::size_t f = 0; f < b_.one_count(); ++f) {
            OneId F(f);
            if (!b_.is_identity(b_.runit(F))) fail("strict", fmt::format("runit({}) is not an identity", n(F)));
            if (!b_.is_identity(b_.lunit(F))) fail("strict", fmt::format("lunit({}) is not an identity", n(F)));
        }
    }

    const FinBicat& b_;
    ValidationReport rep_;
    std::map<std::string, int> per_law_;
};

}  // namespace

ValidationReport validate_bicat(const FinBicat& b) { return Validator(b).run(); }

OneId hcompose1(const FinBicat& b, OneId g, OneId f) { return b.hcomp1(g, f); }

TwoId vcompose(const FinBicat& b, TwoId beta, TwoId alpha) { return b.vcomp(beta, alpha); }

TwoId hcompose2(const FinBicat& b, TwoId beta, TwoId alpha) {
    if (b.src(b.src1(beta)) != b.tgt(b.src1(alpha)))
        throw CompositionError(fmt::format("cannot compose {} and {} horizontally", b.name(beta), b.name(alpha)));
    return b.vcomp(b.whisk_right(beta, b.tgt1(alpha)), b.whisk_left(b.src1(beta), alpha));
}

TwoId hcompose2_other(const FinBicat& b, TwoId beta, TwoId alpha) {
    if (b.src(b.src1(beta)) != b.tgt(b.src1(alpha)))
        throw CompositionError(fmt::format("cannot compose {} and {} horizontally", b.name(beta), b.name(alpha)));
    return b.vcomp(b.whisk_left(b.tgt1(beta), alpha), b.whisk_right(beta, b.src1(alpha)));
}

std::optional<TwoId> two_cell_inverse(const FinBicat& b, TwoId alpha) { return b.inverse(alpha); }

std::optional<EquivalenceWitness> internal_equivalence_witness(const FinBicat& b, OneId f) {
    ObjId a = b.src(f), c = b.tgt(f);
    OneId ia = b.id1(a), ic = b.id1(c);
    for (OneId g : b.hom(c, a)) {
        auto eta = b.first_invertible(ia, b.hcomp1(g, f));
        if (!eta) continue;
        auto eps = b.first_invertible(b.hcomp1(f, g), ic);
        if (!eps) continue;
        return EquivalenceWitness{g, *eta, *eps};
    }
    return std::nullopt;
}

bool is_internal_equivalence(const FinBicat& b, OneId f) { return internal_equivalence_witness(b, f).has_value(); }

std::optional<OneId> one_cell_isomorphism_inverse(const FinBicat& b, OneId f) {
    for (OneId g : b.hom(b.tgt(f), b.src(f)))
        if (b.hcomp1(g, f) == b.id1(b.src(f)) && b.hcomp1(f, g) == b.id1(b.tgt(f))) return g;
    return std::nullopt;
}

}  // namespace bicat
