#ifndef SHIMIN_TESTS_A2_CENSUS_HPP
#define SHIMIN_TESTS_A2_CENSUS_HPP

#include <array>
#include <string_view>

// The sixteen admissible A_2 sign types, order (e1-e2, e1-e3, e2-e3).
inline constexpr std::array<std::string_view, 16> a2_sign_types = {
    "+,+,+", "-,-,-", "+,+,-", "-,+,+", "-,-,+", "+,-,-", "+,+,0", "0,+,+",
    "+,0,-", "-,0,+", "-,-,0", "0,-,-", "0,+,0", "0,0,-", "-,0,0", "0,0,0",
};

#endif
