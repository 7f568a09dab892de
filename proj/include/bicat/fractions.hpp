#pragma once

#include <compare>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "bicat/core.hpp"
#include "bicat/parallel.hpp"
#include "bicat/wclass.hpp"

namespace bicat {

// (apex, back, forward): apex --back--> source, apex --forward--> target.
struct Span {
    ObjId apex;
    OneId back;
    OneId fwd;

    friend auto operator<=>(const Span&, const Span&) = default;
};

// Representative [apex, leg1, leg2, alpha, beta] of a 2-cell between spans
// (A1, w1, f1) => (A2, w2, f2): alpha: w1∘leg1 => w2∘leg2 (invertible),
// beta: f1∘leg1 => f2∘leg2, and w1∘leg1 in W.
struct TwoCellRep {
    ObjId apex;
    OneId leg1;
    OneId leg2;
    TwoId alpha;
    TwoId beta;

    friend auto operator<=>(const TwoCellRep&, const TwoCellRep&) = default;
};

struct Refinement {
    ObjId apex;
    OneId z1;  // into the first representative's apex
    OneId z2;  // into the second representative's apex
    TwoId zeta1;
    TwoId zeta2;
};

struct SpanComposite {
    Span span;
    // Filler square: inner.fwd∘v ⇒ outer.back∘f, with v in W.
    ObjId apex;
    OneId v;
    OneId f;
    TwoId rho;
};

// Span-level and representative-level operations for one pair (B, W).
class FractionContext {
public:
    FractionContext(WClass w, SearchOptions opt = {});

    [[nodiscard]] const FinBicat& base() const { return w_.base(); }
    [[nodiscard]] const WClass& cls() const { return w_; }
    [[nodiscard]] const SearchOptions& options() const { return opt_; }

    [[nodiscard]] ObjId span_src(const Span& s) const { return base().tgt(s.back); }
    [[nodiscard]] ObjId span_tgt(const Span& s) const { return base().tgt(s.fwd); }
    [[nodiscard]] std::string span_name(const Span& s) const;
    [[nodiscard]] std::string rep_name(const TwoCellRep& r) const;

    [[nodiscard]] std::vector<Span> enumerate_spans(ObjId src, ObjId tgt) const;
    [[nodiscard]] std::vector<Span> all_spans() const;

    // Empty when valid, otherwise the failing component.
    [[nodiscard]] std::optional<std::string> validate_rep(const TwoCellRep& r, const Span& s1, const Span& s2) const;
    [[nodiscard]] std::vector<TwoCellRep> enumerate_reps(const Span& s1, const Span& s2) const;

    [[nodiscard]] std::optional<Refinement> reps_equivalent(const TwoCellRep& r1, const TwoCellRep& r2,
                                                            const Span& s1, const Span& s2) const;
    // Criterion for representatives sharing (apex, legs, alpha): some z keeps
    // the W-condition and equalizes the betas. Empty when not applicable.
    [[nodiscard]] std::optional<bool> fast_path_equivalent(const TwoCellRep& r1, const TwoCellRep& r2,
                                                           const Span& s1, const Span& s2) const;

    [[nodiscard]] SpanComposite compose_spans(const Span& outer, const Span& inner) const;
    [[nodiscard]] Span identity_span(ObjId x) const;
    [[nodiscard]] TwoCellRep identity_rep(const Span& s) const;

    // upper ⊙ lower for lower: s1 ⇒ s2, upper: s2 ⇒ s3.
    [[nodiscard]] TwoCellRep vertical(const TwoCellRep& upper, const TwoCellRep& lower, const Span& s1,
                                      const Span& s2, const Span& s3) const;
    // Every admissible choice of connecting data for vertical composition.
    [[nodiscard]] std::vector<TwoCellRep> vertical_all(const TwoCellRep& upper, const TwoCellRep& lower,
                                                       const Span& s1, const Span& s2, const Span& s3) const;
    // g∘Γ for Γ: s1 ⇒ s2
    [[nodiscard]] TwoCellRep whisker_left(const Span& g, const TwoCellRep& r, const Span& s1, const Span& s2) const;
    // Γ∘h for Γ: s1 ⇒ s2
    [[nodiscard]] TwoCellRep whisker_right(const TwoCellRep& r, const Span& h, const Span& s1, const Span& s2) const;

private:
    template <class Visit>
    bool vertical_search(const TwoCellRep& upper, const TwoCellRep& lower, const Span& s1, const Span& s2,
                         const Span& s3, Visit&& visit) const;

    WClass w_;
    SearchOptions opt_;
};

struct TwoCellClass {
    OneId src;  // span index in the materialized bicategory
    OneId tgt;
    TwoCellRep canonical;
    std::vector<TwoCellRep> members;
};

struct FractionBicat {
    std::shared_ptr<const FractionContext> ctx;
    BicatPtr bicat;
    std::vector<Span> spans;
    std::vector<TwoCellClass> classes;
    std::map<Span, OneId> span_index;
    std::map<std::pair<OneId, OneId>, std::map<TwoCellRep, TwoId>> rep_index;

    [[nodiscard]] OneId span_id(const Span& s) const;
    // Class of a valid representative between two materialized spans.
    [[nodiscard]] TwoId class_of(OneId s1, OneId s2, const TwoCellRep& r) const;
};

FractionBicat materialize_fractions(const WClass& w, const SearchOptions& opt = {});

// Fraction 1-cell is an internal equivalence iff its forward leg is in W_sat.
bool span_is_equivalence(const FractionContext& ctx, const Span& s);

}  // namespace bicat
