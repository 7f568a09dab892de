#pragma once

#include <memory>
#include <string>
#include <vector>

#include "bicat/core.hpp"

namespace bicat {

// Formal composite of 2-cells. Nodes are immutable and shared.
class PastingExpr {
public:
    enum class Kind {
        Atom,
        IdOn,
        VComp,
        HComp,
        WhiskL,
        WhiskR,
        Assoc,
        AssocInv,
        RUnit,
        RUnitInv,
        LUnit,
        LUnitInv,
        Inv,
    };

    static PastingExpr atom(TwoId a);
    static PastingExpr id_on(OneId f);
    // upper ⊙ lower: lower is applied first.
    static PastingExpr vcomp(PastingExpr upper, PastingExpr lower);
    static PastingExpr hcomp(PastingExpr left, PastingExpr right);
    static PastingExpr whisk_l(OneId g, PastingExpr e);
    static PastingExpr whisk_r(PastingExpr e, OneId f);
    static PastingExpr assoc(OneId h, OneId g, OneId f);
    static PastingExpr assoc_inv(OneId h, OneId g, OneId f);
    static PastingExpr runit(OneId f);
    static PastingExpr runit_inv(OneId f);
    static PastingExpr lunit(OneId f);
    static PastingExpr lunit_inv(OneId f);
    static PastingExpr inv(PastingExpr e);

    // Vertical chain written bottom-up: factors[0] is applied first.
    static PastingExpr chain(const std::vector<PastingExpr>& factors);

    [[nodiscard]] Kind kind() const { return node_->kind; }
    [[nodiscard]] TwoId cell() const { return node_->cell; }
    [[nodiscard]] const std::vector<OneId>& ones() const { return node_->ones; }
    [[nodiscard]] const std::vector<PastingExpr>& children() const { return node_->children; }

    // Factors of a vertical composite flattened in application order.
    [[nodiscard]] std::vector<PastingExpr> vertical_factors() const;

    [[nodiscard]] std::string to_string(const FinBicat& b) const;

private:
    struct Node {
        Kind kind;
        TwoId cell;
        std::vector<OneId> ones;
        std::vector<PastingExpr> children;
    };
    explicit PastingExpr(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
    static PastingExpr make(Kind k, TwoId c, std::vector<OneId> ones, std::vector<PastingExpr> ch);

    std::shared_ptr<const Node> node_;
};

// Evaluates e over b. Throws TypingError naming the first untypable subterm and
// InvertibilityError when an Inv node wraps a non-invertible cell.
TwoId eval_pasting(const FinBicat& b, const PastingExpr& e);

}  // namespace bicat
