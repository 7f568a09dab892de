#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "bicat/core.hpp"

namespace bicat {

enum class CellKind { Object, OneCell, TwoCell };

// One named cell inside a witness or counterexample tuple. `side` tells which
// bicategory the index refers to ("source", "target", or "base").
struct Binding {
    std::string role;
    CellKind kind = CellKind::Object;
    std::string side;
    std::uint32_t index = 0;
    std::string name;

    friend bool operator==(const Binding&, const Binding&) = default;
};

inline Binding bind(const FinBicat& b, std::string side, std::string role, ObjId x) {
    return {std::move(role), CellKind::Object, std::move(side), x.value, b.name(x)};
}
inline Binding bind(const FinBicat& b, std::string side, std::string role, OneId f) {
    return {std::move(role), CellKind::OneCell, std::move(side), f.value, b.name(f)};
}
inline Binding bind(const FinBicat& b, std::string side, std::string role, TwoId a) {
    return {std::move(role), CellKind::TwoCell, std::move(side), a.value, b.name(a)};
}

std::string format_bindings(const std::vector<Binding>& bs);
const char* kind_name(CellKind k);

}  // namespace bicat
