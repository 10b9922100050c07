#pragma once

#include <array>

// Reference values reproduced by `heisenring tables`, one array per
// table. Index by qubit count where noted.
namespace heisenring::cli::reference {

struct Entry {
    int n;
    double value;
};

struct GhzEntry {
    int n;
    double fidelity;
    int sign;
};

// Ground-state concurrence, N = 2..11.
inline constexpr std::array<Entry, 10> kGroundStateConcurrence{{
    {2, 1.0}, {3, 0.0}, {4, 0.5}, {5, 0.247}, {6, 0.434},
    {7, 0.316}, {8, 0.412}, {9, 0.344}, {10, 0.403}, {11, 0.358},
}};

// Threshold temperature, even N.
inline constexpr std::array<Entry, 5> kThresholdEven{{
    {2, 3.64095691}, {4, 1.72672823}, {6, 1.60976354}, {8, 1.59167655}, {10, 1.59038369},
}};

// Threshold temperature, odd N.
inline constexpr std::array<Entry, 5> kThresholdOdd{{
    {3, 0.0}, {5, 1.53825517}, {7, 1.58556286}, {9, 1.58979598}, {11, 1.59020107},
}};

// Ground-state fidelity against the Neel GHZ pair with the listed relative sign.
inline constexpr std::array<GhzEntry, 10> kGhzFidelity{{
    {2, 1.0000, -1}, {3, 0.1667, +1}, {4, 0.6667, +1}, {5, 0.0873, +1}, {6, 0.4580, -1},
    {7, 0.0505, +1}, {8, 0.3173, +1}, {9, 0.0306, +1}, {10, 0.2205, -1}, {11, 0.0191, +1},
}};

inline constexpr double kThermodynamicLimitThreshold = 1.5903;
inline constexpr double kFourQubitFidelityThreshold = 0.83;

} // namespace heisenring::cli::reference
