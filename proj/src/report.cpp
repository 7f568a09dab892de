#include "bicat/report.hpp"

#include <fmt/format.h>

namespace bicat {

const char* kind_name(CellKind k) {
    switch (k) {
        case CellKind::Object: return "object";
        case CellKind::OneCell: return "1-cell";
        case CellKind::TwoCell: return "2-cell";
    }
    return "?";
}

std::string format_bindings(const std::vector<Binding>& bs) {
    std::string out;
    for (const auto& b : bs) {
        if (!out.empty()) out += ", ";
        out += fmt::format("{}={}", b.role, b.name);
        if (!b.side.empty() && b.side != "base") out += fmt::format(" ({})", b.side);
    }
    return out;
}

}  // namespace bicat
