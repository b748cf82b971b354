#pragma once

#include <array>
#include <vector>

#include "singer/triangulation.hpp"

namespace singer::reference {

// Plain quadratically/quartically scanning enumerators, independent of the
// production kernels in triangulation.cpp.  Kept serial on purpose: tests
// compare the two routes, and the benchmark tool measures them against each
// other.

std::vector<Triple> cliques3_bruteforce(const LabeledTriangulation& L);

std::vector<std::array<int, 4>> cliques4_bruteforce(const LabeledTriangulation& L);

// Canonical cycles (a, b, c, d): a minimal, b < d, both diagonals non-edges.
std::vector<std::array<int, 4>> chordless4_bruteforce(const LabeledTriangulation& L);

}  // namespace singer::reference
