#pragma once

#include <array>

#include "polycube/count.hpp"

namespace polycube::tables {

// Published counts for n x n x n prisms, n = 1..8, by family.
inline const std::array<Count, 8> kCubeDiagonal{1, 32, 2271, 79936, 2103269, 49998072, 1163531779LL, 27263453288LL};
inline const std::array<Count, 8> kCubeTwoDxTwoD{0, 0, 66, 2256, 34092, 352992, 2994750, 22756896};
inline const std::array<Count, 8> kCubeSkewCrossA{0, 0, 48, 3456, 85008, 1321344, 16174416, 172476672};
inline const std::array<Count, 8> kCubeSkewCrossB{0, 0, 16, 1408, 33776, 505472, 5998512, 62474496};
inline const std::array<Count, 8> kCubeTotal{1, 32, 2401, 87056, 2256145, 52177880, 1188699457LL, 27521161352LL};

// Published totals by volume, n = 1..10.
inline const std::array<Count, 10> kByVolume{1, 3, 15, 83, 450, 2295, 10834, 47175, 190407, 719243};

}  // namespace polycube::tables
