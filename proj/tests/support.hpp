#pragma once

#include <algorithm>
#include <set>
#include <string>
#include <vector>

#include "bicat/conditions.hpp"
#include "bicat/presentation.hpp"

namespace testing {

using namespace bicat;

inline Workspace& workspace() {
    static Workspace ws;
    return ws;
}

inline const Document& fixture(const std::string& stem) { return workspace().load(stem); }

inline ObjId ob(const FinBicat& b, const std::string& n) { return b.find_object(n).value(); }
inline OneId one(const FinBicat& b, const std::string& n) { return b.find_one(n).value(); }
inline TwoId two(const FinBicat& b, const std::string& n) { return b.find_two(n).value(); }

inline std::set<std::string> names(const WClass& w) {
    std::set<std::string> out;
    for (OneId f : w.cells()) out.insert(w.base().name(f));
    return out;
}

inline const std::vector<std::string>& all_fixtures() {
    static const std::vector<std::string> v = {"appx-toy", "appx-toy-idem", "appx-toy-point", "iso2",
                                               "arrow2",   "trivial",       "discrete2"};
    return v;
}

// Oracles below work directly on the raw tables, independently of the
// library's search helpers.

inline bool oracle_invertible(const FinBicat& b, TwoId a) {
    const auto& t = b.tables();
    OneId s = t.two_cells[a.index()].src, g = t.two_cells[a.index()].tgt;
    for (std::size_t i = 0; i < t.two_cells.size(); ++i) {
        if (t.two_cells[i].src != g || t.two_cells[i].tgt != s) continue;
        TwoId c(i);
        if (t.vcomp.at({c, a}) == t.id2[s.index()] && t.vcomp.at({a, c}) == t.id2[g.index()]) return true;
    }
    return false;
}

inline bool oracle_has_invertible(const FinBicat& b, OneId s, OneId g) {
    const auto& t = b.tables();
    for (std::size_t i = 0; i < t.two_cells.size(); ++i)
        if (t.two_cells[i].src == s && t.two_cells[i].tgt == g && oracle_invertible(b, TwoId(i))) return true;
    return false;
}

inline bool oracle_equivalence(const FinBicat& b, OneId f) {
    const auto& t = b.tables();
    ObjId x = t.one_cells[f.index()].src, y = t.one_cells[f.index()].tgt;
    for (std::size_t i = 0; i < t.one_cells.size(); ++i) {
        if (t.one_cells[i].src != y || t.one_cells[i].tgt != x) continue;
        OneId g(i);
        if (oracle_has_invertible(b, t.id1[x.index()], t.hcomp1.at({g, f})) &&
            oracle_has_invertible(b, t.hcomp1.at({f, g}), t.id1[y.index()]))
            return true;
    }
    return false;
}

// f with g, h such that f∘g ∈ W and g∘h ∈ W.
inline std::set<std::string> oracle_saturation(const WClass& w) {
    const FinBicat& b = w.base();
    const auto& t = b.tables();
    std::set<std::string> out;
    for (std::size_t f = 0; f < t.one_cells.size(); ++f)
        for (std::size_t g = 0; g < t.one_cells.size(); ++g) {
            if (t.one_cells[g].tgt != t.one_cells[f].src) continue;
            if (!w.contains(t.hcomp1.at({OneId(f), OneId(g)}))) continue;
            for (std::size_t h = 0; h < t.one_cells.size(); ++h)
                if (t.one_cells[h].tgt == t.one_cells[g].src && w.contains(t.hcomp1.at({OneId(g), OneId(h)})))
                    out.insert(t.one_cells[f].name);
        }
    return out;
}

inline bool unordered_pair_is(const ConditionReport& r, const std::string& role1, const std::string& role2,
                              TwoId a, TwoId b) {
    auto x = r.cell(role1);
    auto y = r.cell(role2);
    return x && y && std::minmax(*x, *y) == std::minmax(a.value, b.value);
}

inline bool all_pass(const std::vector<ConditionReport>& rs) {
    return std::ranges::all_of(rs, [](const ConditionReport& r) { return r.pass(); });
}

inline std::vector<std::string> failing(const std::vector<ConditionReport>& rs) {
    std::vector<std::string> out;
    for (const auto& r : rs)
        if (!r.pass()) out.push_back(r.tag);
    return out;
}

}  // namespace testing
