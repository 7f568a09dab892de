#pragma once

#include <string>
#include <vector>

#include "support.hpp"

namespace testing {

// Curated (F, W_A, W_B) configurations whose preconditions hold.
struct SuiteCase {
    std::string fixture;
    std::string psfun;
    std::string class_src;
    std::string class_tgt;
    std::vector<std::string> expected_failures;  // A conditions expected to fail

    [[nodiscard]] std::string label() const {
        return fixture + "/" + psfun + " (" + class_src + ", " + class_tgt + ")";
    }
};

inline const std::vector<SuiteCase>& theorem_suite() {
    static const std::vector<SuiteCase> v = {
        {"appx-toy", "id", "W", "W", {}},
        {"appx-toy", "id", "min", "W", {"A2", "A4"}},
        {"appx-toy-point", "incl", "ids", "W", {"A4"}},
        {"appx-toy-idem", "id", "W", "W", {}},
        {"appx-toy", "UW", "W", "min", {}},
        {"appx-toy", "Umin", "min", "min", {}},
        {"appx-toy", "collapse", "ids", "ids", {"A1", "A2", "A4"}},
        {"iso2", "id", "ids", "ids", {}},
        {"iso2", "id", "all", "all", {}},
        {"iso2", "Umin", "min", "min", {}},
        {"arrow2", "id", "ids", "ids", {}},
        {"trivial", "id", "ids", "ids", {}},
        {"discrete2", "id", "ids", "ids", {}},
    };
    return v;
}

struct Resolved {
    ResolvedPsFun r;
    WClass wa;
    WClass wb;
};

inline Resolved resolve(const SuiteCase& c) {
    const Document& d = fixture(c.fixture);
    ResolvedPsFun r = workspace().psfun(d, c.psfun);
    WClass wa = resolve_class(d, c.class_src);
    WClass wb = r.target_class(c.class_tgt);
    return {std::move(r), std::move(wa), std::move(wb)};
}

}  // namespace testing
