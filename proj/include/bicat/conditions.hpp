#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "bicat/core.hpp"
#include "bicat/parallel.hpp"
#include "bicat/pasting.hpp"
#include "bicat/psfun.hpp"
#include "bicat/report.hpp"
#include "bicat/wclass.hpp"

namespace bicat {

enum class Verdict { Pass, Fail, Precondition };
const char* verdict_name(Verdict v);

struct Role {
    std::string name;
    CellKind kind;
    bool target_side;  // false: source bicategory of the pseudofunctor
};

// One checker: universally quantified inputs, an existential search per input
// and an independent predicate used to re-validate stored witnesses.
struct ConditionDef {
    struct Outcome {
        bool ok = false;
        std::vector<std::uint32_t> witness;
        std::vector<std::uint32_t> extra;  // extra counterexample data (e.g. a non-unique pair)
        std::size_t candidates = 0;
    };

    std::string tag;
    BicatPtr source;
    BicatPtr target;
    std::vector<Role> input_roles;
    std::vector<Role> witness_roles;
    std::vector<Role> extra_roles;
    std::vector<std::vector<std::uint32_t>> inputs;
    std::function<Outcome(const std::vector<std::uint32_t>&)> search;
    std::function<bool(const std::vector<std::uint32_t>&, const std::vector<std::uint32_t>&)> holds;
};

struct ConditionReport {
    std::string tag;
    Verdict verdict = Verdict::Pass;
    // Pass: the input with the largest search effort followed by its witness.
    std::vector<Binding> witness;
    // Fail: the first input (canonical order) whose search space was exhausted.
    std::vector<Binding> counterexample;
    std::size_t inputs = 0;
    std::size_t candidates = 0;
    std::string note;

    std::shared_ptr<const ConditionDef> def;
    std::vector<std::uint32_t> input_ids;
    std::vector<std::uint32_t> witness_ids;

    [[nodiscard]] bool pass() const { return verdict == Verdict::Pass; }
    [[nodiscard]] std::optional<std::uint32_t> cell(const std::string& role) const;
};

ConditionReport run_condition(std::shared_ptr<const ConditionDef> def, const SearchOptions& opt = {});
// Pass: the stored witness satisfies the predicate. Fail: a fresh search on
// the counterexample input still finds nothing.
bool recheck(const ConditionReport& r);

// Conditions for G̃: A[W_A⁻¹] → B[W_B,sat⁻¹] to be an equivalence; which ∈ 1..5.
ConditionReport check_A(const PsFun& F, const WClass& wa, const WClass& wb, int which, const SearchOptions& opt = {});
std::vector<ConditionReport> check_A_all(const PsFun& F, const WClass& wa, const WClass& wb,
                                         const SearchOptions& opt = {});
// Conditions for the induced A[W_A⁻¹] → B to be an equivalence; which ∈ 1..5.
ConditionReport check_B(const PsFun& F, const WClass& wa, int which, const SearchOptions& opt = {});
std::vector<ConditionReport> check_B_all(const PsFun& F, const WClass& wa, const SearchOptions& opt = {});
// Sufficient conditions; which ∈ 1..3.
ConditionReport check_EF(const PsFun& F, const WClass& wa, int which, const SearchOptions& opt = {});
std::vector<ConditionReport> check_EF_all(const PsFun& F, const WClass& wa, const SearchOptions& opt = {});
// which ∈ {"X1", "X2a", "X2b", "X2c"}.
ConditionReport check_X(const PsFun& M, const std::string& which, const SearchOptions& opt = {});

struct WeakEquivalenceReport {
    bool holds = true;
    std::vector<ConditionReport> reports;
};
WeakEquivalenceReport is_weak_equivalence(const PsFun& M, const SearchOptions& opt = {});

struct A5Data {
    OneId f1, f2;   // A_A → B_A
    OneId v_b;      // A_B → F(A_A), in W_B
    OneId v_a;      // A'_A → A_A, in W_A
    OneId z_b;      // A'_B → F(A'_A), in W_B
    OneId z_prime;  // A'_B → A_B
    TwoId sigma;    // F(v_A)∘z_B ⇒ v_B∘z', invertible
    TwoId alpha_a;  // f1∘v_A ⇒ f2∘v_A
};
// Seven-factor composite (F f1∘v_B)∘z' ⇒ (F f2∘v_B)∘z' compared against α_B∗z'.
PastingExpr build_a5_composite(const PsFun& F, const A5Data& d);

struct TheoremCheck {
    std::string name;
    bool evaluated = false;
    bool agree = true;
    std::string detail;
};

struct TheoremReport {
    std::vector<TheoremCheck> checks;
    std::vector<std::string> findings;

    [[nodiscard]] bool consistent() const { return findings.empty(); }
    [[nodiscard]] const TheoremCheck& check(const std::string& name) const;
};

TheoremReport cross_validate_theorems(const PsFun& F, const WClass& wa, const WClass& wb,
                                      const SearchOptions& opt = {});

}  // namespace bicat
