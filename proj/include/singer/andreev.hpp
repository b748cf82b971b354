#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "singer/cell_complex.hpp"

namespace singer {

// Combinatorial summary of the polytope dual to a cell complex: faces
// correspond to vertices, polytope vertices to cells (3- or 4-valent), and
// the dihedral angle on the edge dual to {s,t} is pi/m_st.
struct DualPolytope {
    int faces = 0;
    int polytope_edges = 0;
    int polytope_vertices = 0;
    int trivalent_vertices = 0;   // triangle cells
    int quadrivalent_vertices = 0;  // square cells
    bool is_simplex = false;
    bool is_triangular_prism = false;
    // set when is_triangular_prism: the suspension points of the complex,
    // dual to the prism base and top
    std::optional<std::array<int, 2>> prism_poles;
};

DualPolytope dual_polytope(const LabeledCellComplex& X);

// One evaluated configuration of one condition.
struct AndreevInstance {
    std::string what;           // configuration tag
    std::vector<int> vertices;  // the combinatorial witness
    std::vector<int> aux;       // extra vertex data (e.g. the third face)
    std::string note;           // exact angle data, rendered as rationals
    bool pass = true;

    bool operator==(const AndreevInstance&) const = default;
};

struct AndreevCondition {
    std::string id;  // "i" .. "v"
    bool pass = true;
    std::vector<AndreevInstance> instances;

    std::vector<AndreevInstance> failures() const;
};

struct AndreevTranscript {
    bool pass = true;
    std::array<AndreevCondition, 5> conditions;

    const AndreevCondition& condition(int index_1_to_5) const { return conditions.at(index_1_to_5 - 1); }
};

// Decides the five conditions for the dual polytope of X, entirely on X:
//  (i)   triangle cells have angle sum >= pi (strictly > for original
//        triangles, = pi for added ones); squares are all right angles,
//  (ii)  3-cliques spanning no cell have angle sum < pi,
//  (iii) all-right-angle chordless 4-circuits must bound a square cell,
//  (iv)  a triangular prism cannot have all base and top angles right,
//  (v)   around every square cell, a face adjacent to both members of an
//        opposite corner pair (without the three meeting at one polytope
//        vertex) sees angle sum < pi, i.e. the two labels are not both 2.
// All comparisons are exact rational comparisons.  Throws SimplexInput when
// the dual is a simplex; those inputs take the Gram-class route instead.
AndreevTranscript andreev_check(const LabeledCellComplex& X);

// Canonical JSON (used inside certificates and by the CLI).
std::string transcript_json(const AndreevTranscript& t);
AndreevTranscript transcript_from_json(const std::string& json_text);

std::string instance_json(const AndreevInstance& inst);
AndreevInstance instance_from_json(const std::string& json_text);

}  // namespace singer
