#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "bicat/core.hpp"
#include "bicat/parallel.hpp"
#include "bicat/report.hpp"

namespace bicat {

struct BfAxiom {
    std::string name;  // BF1, BF2, BF3, BF4a, BF4b, BF4c, BF5
    bool pass = true;
    std::vector<Binding> counterexample;
    std::string detail;
};

struct BfReport {
    std::vector<BfAxiom> axioms;
    // Informational only: every internal equivalence belongs to the class.
    bool contains_all_equivalences = false;

    [[nodiscard]] bool pass() const;
    [[nodiscard]] const BfAxiom& axiom(const std::string& name) const;
};

struct SaturationWitness {
    OneId g;  // f∘g ∈ W
    OneId h;  // g∘h ∈ W
};

class WClass {
public:
    WClass(BicatPtr base, std::vector<bool> members, std::string name = {});
    static WClass of(BicatPtr base, const std::vector<OneId>& cells, std::string name = {});

    [[nodiscard]] bool contains(OneId f) const { return members_[f.index()]; }
    [[nodiscard]] std::vector<OneId> cells() const;
    [[nodiscard]] const std::vector<bool>& mask() const { return members_; }
    [[nodiscard]] const FinBicat& base() const { return *base_; }
    [[nodiscard]] const BicatPtr& base_ptr() const { return base_; }
    [[nodiscard]] const std::string& name() const { return name_; }
    [[nodiscard]] std::size_t size() const;

    // Cached; the cache is shared between copies since membership is fixed.
    [[nodiscard]] const BfReport& bf(const SearchOptions& opt = {}) const;
    [[nodiscard]] const WClass& saturated(const SearchOptions& opt = {}) const;

    [[nodiscard]] std::string describe() const;

    friend bool operator==(const WClass& a, const WClass& b) {
        return a.base_ == b.base_ && a.members_ == b.members_;
    }

private:
    struct Cache {
        std::mutex mu;
        std::optional<BfReport> bf;
        std::shared_ptr<WClass> sat;
    };
    BicatPtr base_;
    std::vector<bool> members_;
    std::string name_;
    std::shared_ptr<Cache> cache_;
};

BfReport check_bf(const FinBicat& b, const WClass& w, const SearchOptions& opt = {});

struct Saturation {
    WClass cls;
    std::map<OneId, SaturationWitness> witnesses;
};

Saturation saturate_with_witnesses(const WClass& w);
WClass saturate(const WClass& w);
WClass quasi_units(const BicatPtr& b);
WClass internal_equivalences_class(const BicatPtr& b);
WClass identities_class(const BicatPtr& b);
WClass all_cells_class(const BicatPtr& b);

}  // namespace bicat
