#pragma once

#include <array>
#include <utility>

namespace gtm::testing {

// The parameter pairs exercised throughout the suite.
inline constexpr std::array<std::pair<unsigned, unsigned>, 9> kPairs{{
    {2, 2}, {2, 3}, {2, 4}, {3, 2}, {3, 4}, {3, 5}, {4, 3}, {5, 2}, {2, 1},
}};

inline constexpr std::array<std::pair<unsigned, unsigned>, 5> kAperiodicPairs{{
    {2, 2}, {2, 3}, {2, 4}, {3, 4}, {3, 5},
}};

}  // namespace gtm::testing
