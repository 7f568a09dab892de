#pragma once

#include <map>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <tuple>
#include <unordered_map>
#include <utility>
#include <vector>

#include "bicat/ids.hpp"

namespace bicat {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct StructuralError : Error {
    using Error::Error;
};
struct CompositionError : Error {
    using Error::Error;
};
struct TypingError : Error {
    using Error::Error;
};
struct InvertibilityError : Error {
    using Error::Error;
};
struct PreconditionError : Error {
    using Error::Error;
};
struct ConstructionError : Error {
    using Error::Error;
};

struct OneCellDecl {
    std::string name;
    ObjId src;
    ObjId tgt;
};

struct TwoCellDecl {
    std::string name;
    OneId src;
    OneId tgt;
};

// Raw tabulated data. Keys of the composition maps follow the usual reading
// order: hcomp1 (g, f) is g∘f, vcomp (β, α) is β⊙α.
struct BicatTables {
    std::vector<std::string> objects;
    std::vector<OneCellDecl> one_cells;
    std::vector<TwoCellDecl> two_cells;
    std::vector<OneId> id1;
    std::vector<TwoId> id2;
    std::map<std::pair<OneId, OneId>, OneId> hcomp1;
    std::map<std::pair<TwoId, TwoId>, TwoId> vcomp;
    std::map<std::pair<OneId, TwoId>, TwoId> whisk_left;
    std::map<std::pair<TwoId, OneId>, TwoId> whisk_right;
    std::map<std::tuple<OneId, OneId, OneId>, TwoId> assoc;
    std::vector<TwoId> runit;
    std::vector<TwoId> lunit;
    bool strict = false;
};

// Immutable finite bicategory with dense lookup tables. Only the domains of
// the tables are checked on construction; typing of table values and the
// coherence laws are the validator's business.
class FinBicat {
public:
    static std::shared_ptr<const FinBicat> build(BicatTables tables);

    [[nodiscard]] std::size_t object_count() const { return t_.objects.size(); }
    [[nodiscard]] std::size_t one_count() const { return t_.one_cells.size(); }
    [[nodiscard]] std::size_t two_count() const { return t_.two_cells.size(); }

    [[nodiscard]] const std::string& name(ObjId x) const { return t_.objects.at(x.index()); }
    [[nodiscard]] const std::string& name(OneId f) const { return t_.one_cells.at(f.index()).name; }
    [[nodiscard]] const std::string& name(TwoId a) const { return t_.two_cells.at(a.index()).name; }

    [[nodiscard]] std::optional<ObjId> find_object(const std::string& n) const;
    [[nodiscard]] std::optional<OneId> find_one(const std::string& n) const;
    [[nodiscard]] std::optional<TwoId> find_two(const std::string& n) const;

    [[nodiscard]] ObjId src(OneId f) const { return t_.one_cells[f.index()].src; }
    [[nodiscard]] ObjId tgt(OneId f) const { return t_.one_cells[f.index()].tgt; }
    [[nodiscard]] OneId src1(TwoId a) const { return t_.two_cells[a.index()].src; }
    [[nodiscard]] OneId tgt1(TwoId a) const { return t_.two_cells[a.index()].tgt; }

    [[nodiscard]] OneId id1(ObjId x) const { return t_.id1[x.index()]; }
    [[nodiscard]] TwoId id2(OneId f) const { return t_.id2[f.index()]; }
    [[nodiscard]] bool is_identity(TwoId a) const { return id2(src1(a)) == a; }

    [[nodiscard]] bool composable(OneId g, OneId f) const { return src(g) == tgt(f); }

    // Table lookups; each throws CompositionError outside its domain.
    [[nodiscard]] OneId hcomp1(OneId g, OneId f) const;
    [[nodiscard]] TwoId vcomp(TwoId b, TwoId a) const;
    [[nodiscard]] TwoId whisk_left(OneId g, TwoId a) const;
    [[nodiscard]] TwoId whisk_right(TwoId b, OneId f) const;
    [[nodiscard]] TwoId assoc(OneId h, OneId g, OneId f) const;
    [[nodiscard]] TwoId runit(OneId f) const { return t_.runit[f.index()]; }
    [[nodiscard]] TwoId lunit(OneId f) const { return t_.lunit[f.index()]; }

    [[nodiscard]] bool strict() const { return t_.strict; }

    [[nodiscard]] const std::vector<OneId>& hom(ObjId a, ObjId b) const { return hom_[a.index() * object_count() + b.index()]; }
    [[nodiscard]] const std::vector<TwoId>& cells(OneId f, OneId g) const;
    [[nodiscard]] std::vector<OneId> ones_from(ObjId a) const;
    [[nodiscard]] std::vector<OneId> ones_into(ObjId b) const;

    [[nodiscard]] std::optional<TwoId> inverse(TwoId a) const;
    [[nodiscard]] bool invertible(TwoId a) const { return inverse(a).has_value(); }
    [[nodiscard]] std::optional<TwoId> first_invertible(OneId f, OneId g) const;

    [[nodiscard]] const BicatTables& tables() const { return t_; }

private:
    explicit FinBicat(BicatTables t) : t_(std::move(t)) {}
    void index();

    BicatTables t_;
    std::vector<std::uint32_t> hcomp1_;
    std::vector<std::uint32_t> vcomp_;
    std::vector<std::uint32_t> wl_;
    std::vector<std::uint32_t> wr_;
    std::vector<std::uint32_t> assoc_;
    std::vector<std::vector<OneId>> hom_;
    std::vector<std::vector<TwoId>> cells_;
    std::vector<std::uint32_t> inverse_;
    std::unordered_map<std::string, ObjId> obj_by_name_;
    std::unordered_map<std::string, OneId> one_by_name_;
    std::unordered_map<std::string, TwoId> two_by_name_;
};

using BicatPtr = std::shared_ptr<const FinBicat>;

struct Violation {
    std::string law;
    std::string detail;
};

struct ValidationReport {
    bool pass = true;
    bool strict = false;
    std::vector<Violation> violations;

    [[nodiscard]] bool violates(const std::string& law) const;
};

ValidationReport validate_bicat(const FinBicat& b);

OneId hcompose1(const FinBicat& b, OneId g, OneId f);
TwoId vcompose(const FinBicat& b, TwoId beta, TwoId alpha);
// β∗α for α: f⇒f', β: g⇒g', computed as (β∗i_{f'}) ⊙ (i_g∗α).
TwoId hcompose2(const FinBicat& b, TwoId beta, TwoId alpha);
// Same composite through the other interchange order, (i_{g'}∗α) ⊙ (β∗i_f).
TwoId hcompose2_other(const FinBicat& b, TwoId beta, TwoId alpha);
std::optional<TwoId> two_cell_inverse(const FinBicat& b, TwoId alpha);

struct EquivalenceWitness {
    OneId reverse;
    TwoId unit;    // id ⇒ reverse∘f
    TwoId counit;  // f∘reverse ⇒ id
};

std::optional<EquivalenceWitness> internal_equivalence_witness(const FinBicat& b, OneId f);
bool is_internal_equivalence(const FinBicat& b, OneId f);

// f has a strict two-sided inverse 1-cell.
std::optional<OneId> one_cell_isomorphism_inverse(const FinBicat& b, OneId f);

}  // namespace bicat
