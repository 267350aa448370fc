// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <array>
#include <cstddef>
#include <string_view>

namespace qhelix {

/// Quadruple-helix actor classes. The qubit assignment is fixed:
/// Academia = qubit 0, Industry = 1, Government = 2, CivilSociety = 3.
enum class HelixActor : int {
    Academia = 0,
    Industry = 1,
    Government = 2,
    CivilSociety = 3,
};

inline constexpr std::size_t kHelixCount = 4;

inline constexpr std::array<HelixActor, kHelixCount> kAllActors = {
    HelixActor::Academia,
    HelixActor::Industry,
    HelixActor::Government,
    HelixActor::CivilSociety,
};

constexpr int qubit_of(HelixActor actor) noexcept { return static_cast<int>(actor); }

constexpr std::string_view actor_name(HelixActor actor) noexcept {
    switch (actor) {
    case HelixActor::Academia: return "academia";
    case HelixActor::Industry: return "industry";
    case HelixActor::Government: return "government";
    case HelixActor::CivilSociety: return "civil_society";
    }
    return "unknown";
}

} // namespace qhelix
