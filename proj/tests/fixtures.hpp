#pragma once

#include <map>
#include <string>
#include <vector>

#include "singer/triangulation.hpp"

namespace fixtures {

using singer::LabeledTriangulation;
using singer::TriangulationData;

// all-m labels on every triangle edge of the given face list
inline LabeledTriangulation from_faces(int n, const std::vector<std::array<int, 3>>& faces,
                                       int default_label = 2,
                                       const std::map<std::pair<int, int>, int>& overrides = {}) {
    TriangulationData d;
    for (int i = 0; i < n; ++i) d.vertex_names.push_back("v" + std::to_string(i));
    d.triangles = faces;
    std::map<std::pair<int, int>, int> labels;
    for (const auto& t : faces) {
        int s[3] = {t[0], t[1], t[2]};
        std::sort(s, s + 3);
        labels[{s[0], s[1]}] = default_label;
        labels[{s[0], s[2]}] = default_label;
        labels[{s[1], s[2]}] = default_label;
    }
    for (const auto& [e, m] : overrides) {
        auto key = e.first < e.second ? e : std::make_pair(e.second, e.first);
        if (!labels.count(key)) throw singer::Error("override on a non-edge");
        labels[key] = m;
    }
    for (const auto& [e, m] : labels) d.labels.push_back({e.first, e.second, m});
    return LabeledTriangulation::build(std::move(d));
}

// boundary of the 3-simplex on vertices 0..3
inline LabeledTriangulation simplex_boundary(int default_label = 2,
                                             const std::map<std::pair<int, int>, int>& overrides = {}) {
    return from_faces(4, {{0, 1, 2}, {0, 1, 3}, {0, 2, 3}, {1, 2, 3}}, default_label, overrides);
}

// affine boundary simplex: 4-cycle 0-1-2-3 labeled 3, diagonals 2
inline LabeledTriangulation simplex_affine() {
    return simplex_boundary(2, {{{0, 1}, 3}, {{1, 2}, 3}, {{2, 3}, 3}, {{0, 3}, 3}});
}

// linear diagram 5-3-4 on the boundary simplex: m01=5, m12=3, m23=4, rest 2
inline LabeledTriangulation simplex_534() {
    return simplex_boundary(2, {{{0, 1}, 5}, {{1, 2}, 3}, {{2, 3}, 4}});
}

// bipyramid over an n-gon: equator 0..n-1, poles n and n+1
inline LabeledTriangulation bipyramid(int n, int default_label = 2,
                                      const std::map<std::pair<int, int>, int>& overrides = {}) {
    std::vector<std::array<int, 3>> faces;
    for (int i = 0; i < n; ++i) {
        faces.push_back({n, i, (i + 1) % n});
        faces.push_back({n + 1, i, (i + 1) % n});
    }
    return from_faces(n + 2, faces, default_label, overrides);
}

inline LabeledTriangulation octahedron(int default_label = 2) { return bipyramid(4, default_label); }

inline LabeledTriangulation icosahedron(int default_label = 2) {
    return from_faces(12,
                      {{0, 1, 2},  {0, 2, 3},  {0, 3, 4},  {0, 4, 5},  {0, 5, 1},
                       {1, 2, 6},  {2, 6, 7},  {2, 3, 7},  {3, 7, 8},  {3, 4, 8},
                       {4, 8, 9},  {4, 5, 9},  {5, 9, 10}, {5, 1, 10}, {1, 10, 6},
                       {6, 7, 11}, {7, 8, 11}, {8, 9, 11}, {9, 10, 11}, {10, 6, 11}},
                      default_label);
}

// suspension of a 3-gon (triangular bipyramid); Andreev prism fixture when
// the suspension edges stay 2 and the equator is (3,4,5)
inline LabeledTriangulation prism_all_right_angles() {
    return bipyramid(3, 2, {{{0, 1}, 3}, {{1, 2}, 4}, {{0, 2}, 5}});
}

// non-face (3,3,3) clique: suspension of a 3-gon with equator all 3 and one
// suspension edge 3 to dodge the prism condition
inline LabeledTriangulation planted_affine_clique() {
    return bipyramid(3, 2, {{{0, 1}, 3}, {{1, 2}, 3}, {{0, 2}, 3}, {{0, 3}, 3}});
}

// suspension of a 4-gon passing Andreev outright (every 4-circuit carries a
// label 3)
inline LabeledTriangulation suspension4_andreev_pass() {
    return bipyramid(4, 2, {{{0, 1}, 3}, {{0, 4}, 3}, {{1, 5}, 3}});
}

// suspensions of 5-gons driving the three five-gon branches
inline LabeledTriangulation five_gon_reduction_fixture() {
    // v0 is the only 4-Euclidean vertex and [L-v0] passes Andreev
    return bipyramid(5, 2, {{{2, 5}, 3}, {{3, 5}, 3}});
}

inline LabeledTriangulation five_gon_figure4_fixture() {
    // v0 and v3 are 4-Euclidean; [L-v0] fails condition (v) at g=v2
    return bipyramid(5, 2, {{{0, 5}, 3}, {{3, 5}, 3}});
}

inline LabeledTriangulation five_gon_adjacent_fixture() {
    // v0, v1 adjacent 4-Euclidean; v3 is the opposite Euclidean vertex
    return bipyramid(5, 2, {{{3, 5}, 3}});
}

// L6-triangulation: suspension of a 6-gon whose pole edges are all 2, so
// every equator vertex is 4-Euclidean and neighboring added squares would
// share two edges; hexagon labels 3 keep the faces away from the equality
// case
inline LabeledTriangulation l6_triangulation() {
    return bipyramid(6, 2,
                     {{{0, 1}, 3}, {{1, 2}, 3}, {{2, 3}, 3}, {{3, 4}, 3}, {{4, 5}, 3}, {{0, 5}, 3}});
}

// suspension of a 6-gon with no 4-Euclidean equator vertex at all
inline LabeledTriangulation suspension6_no_euclidean() {
    std::map<std::pair<int, int>, int> overrides;
    for (int i = 0; i < 6; ++i) {
        overrides[{i, 6}] = 3;
        overrides[{i, 7}] = 3;
    }
    return bipyramid(6, 2, overrides);
}

// gyroelongated square bipyramid: 10 vertices, 16 faces, poles 8 and 9 of
// valence 4; with all-2 labels both poles are 4-Euclidean
inline LabeledTriangulation gyro_bipyramid(int default_label = 2) {
    return from_faces(10,
                      {{0, 1, 5}, {1, 2, 6}, {2, 3, 7}, {3, 0, 4}, {0, 4, 5}, {1, 5, 6}, {2, 6, 7},
                       {3, 7, 4}, {8, 0, 1}, {8, 1, 2}, {8, 2, 3}, {8, 3, 0}, {9, 4, 5}, {9, 5, 6},
                       {9, 6, 7}, {9, 7, 4}},
                      default_label);
}

}  // namespace fixtures
