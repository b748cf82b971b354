#pragma once

#include <optional>
#include <variant>
#include <vector>

#include "singer/cell_complex.hpp"
#include "singer/triangulation.hpp"

namespace singer {

enum class VertexClass { NotEuclidean, Euclid3, Euclid4 };

std::string to_string(VertexClass c);

// Euclid3: valence 3 and the three link labels have 1/p + 1/q + 1/r = 1.
// Euclid4: valence 4 and all four link-cycle labels equal 2.
// Spoke labels are unconstrained in both cases.
VertexClass classify_vertex(const LabeledTriangulation& L, int v);

// All Euclidean vertices, sorted by index.
std::vector<int> euclidean_vertices(const LabeledTriangulation& L);

// An empty Euclidean circuit: a Euclidean-labeled 3- or 4-circuit that is
// not the link of a vertex (and, for 4-circuits, chordless — which also
// rules out bounding two adjacent triangles).  The two sides are the vertex
// sets of the open disks it cuts the sphere into; each holds >= 2 vertices.
struct EmptyEuclideanCircuit {
    enum class Kind { Three, Four };
    Kind kind = Kind::Three;
    CycleWithLabels cycle;
    std::vector<int> side1;  // side containing the smallest off-circuit vertex
    std::vector<int> side2;
};

// Complete list, kind Three before Four, then lexicographic by cycle.
std::vector<EmptyEuclideanCircuit> find_empty_euclidean_circuits(const LabeledTriangulation& L);

struct SplitResult {
    LabeledTriangulation first;   // side1 capped
    LabeledTriangulation second;  // side2 capped
    int cap_first = -1;           // cone vertex index in `first`
    int cap_second = -1;
};

// Caps both sides of an empty Euclidean circuit with a cone whose edges are
// labeled 2.  Both children are strictly smaller metric flag triangulations
// and the cone points are Euclidean vertices of the matching kind.
SplitResult split_along_circuit(const LabeledTriangulation& L, const EmptyEuclideanCircuit& c);

// Inverse surgery: glues L1 - star(s1) to L2 - star(s2) along their link
// cycles, which must be isomorphic as labeled cycles (all dihedral matchings
// are searched; the first in cyclic order wins).  Used by the generator and
// the round-trip tests.
LabeledTriangulation merge_along_euclidean_vertices(const LabeledTriangulation& L1, int s1,
                                                    const LabeledTriangulation& L2, int s2);

struct ReducedComplex {
    LabeledCellComplex complex;
    std::vector<int> kept;  // new index -> original vertex index
};

// Witness that star replacement would overlap two added squares in two
// adjacent edges, i.e. the input is an L6-triangulation.
struct L6Overlap {
    int removed1 = -1;  // the two 4-Euclidean vertices whose squares collide
    int removed2 = -1;
    std::array<int, 3> shared_path{};  // (t, v, b): the two shared edges t-v, v-b
};

// Replaces the star of every vertex in T by a triangular or square cell.
// T must consist of Euclidean vertices, no two adjacent
// (AdjacentEuclideanVertices otherwise — the underlying theory rules this
// out whenever the certifier calls through, so hitting it signals a bug).
std::variant<ReducedComplex, L6Overlap> reduce_stars(const LabeledTriangulation& L,
                                                     const std::vector<int>& T);

struct L6Witness {
    std::array<int, 2> poles{};
    std::vector<int> hexagon;  // equator cycle
    int s1 = -1;               // the two overlapping 4-Euclidean vertices
    int s2 = -1;
    int middle = -1;  // shared edges are poles[0]-middle and poles[1]-middle
};

// A suspension of a 6-gon with two 4-Euclidean equator vertices at distance
// two, whose added squares would share the two edges through the vertex
// between them.
std::optional<L6Witness> recognize_L6(const LabeledTriangulation& L);

}  // namespace singer
