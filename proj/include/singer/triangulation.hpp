#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "singer/label.hpp"

namespace singer {

using Edge = std::array<int, 2>;      // always a < b
using Triple = std::array<int, 3>;    // always a < b < c

// A simple cycle in the 1-skeleton together with the labels of its own
// edges.  labels[i] belongs to the edge {vertices[i], vertices[i+1 mod n]}.
// Canonical form: starts at the smallest vertex, oriented toward the smaller
// of its two cycle neighbours.
struct CycleWithLabels {
    std::vector<int> vertices;
    std::vector<int> labels;

    int size() const { return static_cast<int>(vertices.size()); }
    bool operator==(const CycleWithLabels&) const = default;
};

// Plain vertex/edge/triangle triple describing a subcomplex; everything
// sorted, so equality is structural.
struct SubComplex {
    std::vector<int> vertices;
    std::vector<Edge> edges;
    std::vector<Triple> triangles;

    bool operator==(const SubComplex&) const = default;
};

// Closed star of a vertex: its triangles plus the boundary (= link) cycle.
struct Star {
    int center = -1;
    std::vector<Triple> triangles;
    CycleWithLabels boundary;
};

struct Suspension {
    int pole_a = -1;
    int pole_b = -1;
    CycleWithLabels equator;

    int gon() const { return equator.size(); }
};

// Raw parts, before any validation.
struct TriangulationData {
    std::vector<std::string> vertex_names;
    std::vector<std::array<int, 3>> triangles;
    // (i, j, m) with i < j
    std::vector<std::array<int, 3>> labels;
};

// An edge-labeled triangulation of the 2-sphere: the nerve of a Coxeter
// system whose Davis complex is a 3-manifold.  Immutable after build();
// every query is read-only and safe to call concurrently.
//
// build() enforces the full invariant set:
//   - unique vertex names, well-formed triangles and label entries,
//   - every triangle edge labeled exactly once, labels in [2, 10^6],
//     no label on a pair that is not a triangle edge,
//   - every edge lies in exactly two triangles,
//   - the link of every vertex is one simple cycle,
//   - connected and V - E + F = 2.
// Together these pin the underlying space to S^2 (closed surface with
// Euler characteristic 2); no orientation data is kept.
class LabeledTriangulation {
public:
    static LabeledTriangulation build(TriangulationData data);

    int vertex_count() const { return static_cast<int>(names_.size()); }
    int edge_count() const { return static_cast<int>(edges_.size()); }
    int triangle_count() const { return static_cast<int>(triangles_.size()); }

    const std::vector<std::string>& vertex_names() const { return names_; }
    const std::string& name(int v) const { return names_.at(v); }
    const std::vector<Triple>& triangles() const { return triangles_; }
    const std::vector<Edge>& edges() const { return edges_; }

    bool has_vertex(int v) const { return v >= 0 && v < vertex_count(); }
    void require_vertex(int v) const;

    // Sorted neighbour list.
    const std::vector<int>& neighbors(int v) const;
    int valence(int v) const { return static_cast<int>(neighbors(v).size()); }
    bool adjacent(int u, int v) const;
    bool has_triangle(int a, int b, int c) const;

    Label label(int u, int v) const;       // Infinite when {u,v} is not an edge
    int finite_label(int u, int v) const;  // throws InfiniteLabel on non-edges

    // Link cycle of v in canonical order (smallest neighbour first).
    const std::vector<int>& link_cycle(int v) const;

    TriangulationData data() const;

private:
    LabeledTriangulation() = default;

    std::vector<std::string> names_;
    std::vector<Triple> triangles_;
    std::vector<Edge> edges_;
    std::vector<std::vector<int>> adj_;
    std::vector<std::vector<int>> links_;
    std::unordered_map<std::uint64_t, int> label_by_edge_;
    std::unordered_set<std::uint64_t> triangle_keys_;
};

// --- documents -----------------------------------------------------------

// Parses the canonical JSON input format:
//   {"vertices": ["name", ...], "triangles": [[i,j,k], ...],
//    "labels": [[i,j,m], ...]}
// Malformed JSON or structure -> SchemaError; manifold failures ->
// TopologyError; label failures -> LabelError.
LabeledTriangulation parse_triangulation(const std::string& document);

// Canonical byte form (minified JSON, sorted keys, sorted triangle and label
// lists).  Certificates digest exactly these bytes.
std::string canonical_document(const LabeledTriangulation& L);

// --- queries -------------------------------------------------------------

CycleWithLabels link(const LabeledTriangulation& L, int v);
Star star(const LabeledTriangulation& L, int v);

SubComplex induced_subcomplex(const LabeledTriangulation& L, const std::vector<int>& vertices);
bool is_full(const LabeledTriangulation& L, const SubComplex& a);
bool is_full(const LabeledTriangulation& L, const CycleWithLabels& cycle);
bool is_full(const LabeledTriangulation& L, const Star& st);

// All pairwise-adjacent vertex triples, in lexicographic order.
std::vector<Triple> enumerate_cliques3(const LabeledTriangulation& L);

// All 4-circuits of the 1-skeleton with both diagonals absent, as canonical
// cycles in lexicographic order.  Chordlessness is checked explicitly even
// where it would follow from metric flagness.
std::vector<CycleWithLabels> enumerate_chordless_4_circuits(const LabeledTriangulation& L);

// All pairwise-adjacent 4-subsets, in lexicographic order.
std::vector<std::array<int, 4>> enumerate_cliques4(const LabeledTriangulation& L);

bool recognize_boundary_simplex(const LabeledTriangulation& L);

// Finds non-adjacent poles joined to everything else, with the rest a single
// induced cycle; the lexicographically smallest pole pair wins.
std::optional<Suspension> recognize_suspension(const LabeledTriangulation& L);

// Suspension presentation check against a *given* pole pair (used by the
// certificate verifier, where the poles are part of the witness).
std::optional<Suspension> suspension_with_poles(const LabeledTriangulation& L, int pole_a, int pole_b);

// Canonicalizes a cycle given as a vertex list (rotation + reflection) and
// fills in the labels from L; every consecutive pair must be an edge.
CycleWithLabels canonical_cycle(const LabeledTriangulation& L, std::vector<int> cycle);

namespace detail {
inline std::uint64_t edge_key(int a, int b) {
    if (a > b) std::swap(a, b);
    return (static_cast<std::uint64_t>(a) << 32) | static_cast<std::uint32_t>(b);
}
inline std::uint64_t triple_key(int a, int b, int c) {
    // fits: vertex indices stay far below 2^21
    return (static_cast<std::uint64_t>(a) << 42) | (static_cast<std::uint64_t>(b) << 21) |
           static_cast<std::uint64_t>(c);
}
}  // namespace detail

}  // namespace singer
