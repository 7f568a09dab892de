#pragma once

#include <compare>
#include <cstdint>
#include <functional>

namespace bicat {

// Dense index into one of the cell tables of a FinBicat. Declaration order is
// the canonical order used by every search in the library.
template <class Tag>
struct Id {
    static constexpr std::uint32_t kInvalid = 0xffffffffu;

    std::uint32_t value = kInvalid;

    constexpr Id() = default;
    constexpr explicit Id(std::uint32_t v) : value(v) {}
    constexpr explicit Id(std::size_t v) : value(static_cast<std::uint32_t>(v)) {}
    constexpr explicit Id(int v) : value(static_cast<std::uint32_t>(v)) {}

    [[nodiscard]] constexpr bool valid() const { return value != kInvalid; }
    [[nodiscard]] constexpr std::size_t index() const { return value; }

    friend constexpr auto operator<=>(Id, Id) = default;
};

using ObjId = Id<struct ObjTag>;
using OneId = Id<struct OneTag>;
using TwoId = Id<struct TwoTag>;

}  // namespace bicat

template <class Tag>
struct std::hash<bicat::Id<Tag>> {
    std::size_t operator()(bicat::Id<Tag> id) const noexcept { return std::hash<std::uint32_t>{}(id.value); }
};
