#pragma once

#include <cstdint>
#include <vector>

#include "singer/triangulation.hpp"

namespace singer {

// Deterministic: a fixed config always yields the same triangulation, byte
// for byte after canonical serialization.
struct GeneratorConfig {
    std::uint64_t seed = 1;
    int target_vertices = 12;
    std::vector<int> palette{2, 3, 4, 5};
    int plant3 = 0;  // empty Euclidean 3-circuits to plant via merge surgery
    int plant4 = 0;  // empty Euclidean 4-circuits to plant via merge surgery
};

// Grows a flag triangulation from a seed complex by edge flips and vertex
// splits, assigns palette labels with per-face spherical-sum repair, then
// plants empty Euclidean circuits by merging in prefabricated pieces along
// Euclidean vertex stars.  The result always passes validation and the
// metric flag check.  Throws GenerationFailed when the target is infeasible
// or bounded retries run out (the message names the seed).
LabeledTriangulation generate(const GeneratorConfig& config);

}  // namespace singer
