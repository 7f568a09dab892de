#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "bicat/core.hpp"
#include "bicat/fractions.hpp"
#include "bicat/wclass.hpp"

namespace bicat {

struct PsFun {
    std::string name;
    BicatPtr source;
    BicatPtr target;
    std::vector<ObjId> on_objects;
    std::vector<OneId> on_one;
    std::vector<TwoId> on_two;
    // (g, f) ↦ F(g∘f) ⇒ F(g)∘F(f)
    std::map<std::pair<OneId, OneId>, TwoId> psi;
    // A ↦ F(id_A) ⇒ id_{F(A)}
    std::vector<TwoId> sigma;

    [[nodiscard]] ObjId obj(ObjId x) const { return on_objects[x.index()]; }
    [[nodiscard]] OneId one(OneId f) const { return on_one[f.index()]; }
    [[nodiscard]] TwoId two(TwoId a) const { return on_two[a.index()]; }
    [[nodiscard]] TwoId psi_at(OneId g, OneId f) const { return psi.at({g, f}); }
};

// Laws: "F2-identity", "F2-vcomp", "psi-invertible", "sigma-invertible",
// "psi-natural", "assoc-coherence", "unit-coherence".
ValidationReport validate_psfun(const PsFun& F);

PsFun identity_psfun(const BicatPtr& b, std::string name = "id");

// First member of w_src whose image is not in w_tgt.
std::optional<OneId> maps_into_counterexample(const PsFun& F, const WClass& w_src, const WClass& w_tgt);
inline bool maps_into(const PsFun& F, const WClass& w_src, const WClass& w_tgt) {
    return !maps_into_counterexample(F, w_src, w_tgt).has_value();
}

// The canonical pseudofunctor into a materialized fraction bicategory.
PsFun universal_pseudofunctor(const FractionBicat& fb, std::string name = "U");
TwoCellRep universal_rep(const FinBicat& b, TwoId alpha);

struct GTilde {
    FractionBicat source;  // A[W_A⁻¹]
    FractionBicat target;  // B[W_B,sat⁻¹]
    PsFun base;            // the pseudofunctor it is induced from
    PsFun fun;
};

GTilde induce_g_tilde(const PsFun& F, const WClass& w_a, const WClass& w_b, const SearchOptions& opt = {});
// Image representative of a class representative, before re-canonicalization.
TwoCellRep g_tilde_rep(const PsFun& F, const FractionBicat& source, const FractionBicat& target, OneId s1, OneId s2,
                       const TwoCellRep& r);
// Image class, computed from any member of the class.
TwoId g_tilde_on_two_cell(const GTilde& g, TwoId cls, const TwoCellRep& member);
inline TwoId g_tilde_on_two_cell(const GTilde& g, TwoId cls) { return g.fun.two(cls); }

}  // namespace bicat
