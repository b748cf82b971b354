#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "singer/label.hpp"
#include "singer/triangulation.hpp"

namespace singer {

enum class CellOrigin { OriginalTriangle, AddedTriangle, AddedSquare };

std::string to_string(CellOrigin o);
CellOrigin cell_origin_from_string(const std::string& s);

// A 2-cell given by its cyclically ordered corners (3 or 4 of them) in
// canonical form: smallest corner first, oriented toward the smaller
// neighbour.
struct Cell {
    std::vector<int> corners;
    CellOrigin origin = CellOrigin::OriginalTriangle;

    int size() const { return static_cast<int>(corners.size()); }
    bool operator==(const Cell&) const = default;
};

struct CellComplexData {
    std::vector<std::string> vertex_names;
    std::vector<Cell> cells;
    std::vector<std::array<int, 3>> labels;  // (i, j, m) with i < j
};

// An edge-labeled cell complex homeomorphic to S^2 with triangular and
// square faces, strict in the sense that any non-empty intersection of two
// cells is a single cell (a vertex or an edge).  This is the shape of the
// reduced complex obtained by replacing Euclidean vertex stars with
// triangular or square cells:
//   - every AddedSquare has all four boundary labels 2,
//   - every AddedTriangle has exact angle sum pi (sum of 1/m equal to 1).
// Both are enforced at build time, in exact rational arithmetic.
class LabeledCellComplex {
public:
    static LabeledCellComplex build(CellComplexData data);

    // Embeds a triangulation as the cell complex with all cells original.
    static LabeledCellComplex from_triangulation(const LabeledTriangulation& L);

    int vertex_count() const { return static_cast<int>(names_.size()); }
    int edge_count() const { return static_cast<int>(edges_.size()); }
    int cell_count() const { return static_cast<int>(cells_.size()); }

    const std::vector<std::string>& vertex_names() const { return names_; }
    const std::string& name(int v) const { return names_.at(v); }
    const std::vector<Cell>& cells() const { return cells_; }
    const std::vector<Edge>& edges() const { return edges_; }

    bool has_vertex(int v) const { return v >= 0 && v < vertex_count(); }
    const std::vector<int>& neighbors(int v) const;
    int valence(int v) const { return static_cast<int>(neighbors(v).size()); }
    bool adjacent(int u, int v) const;

    Label label(int u, int v) const;
    int finite_label(int u, int v) const;

    // Cell spanned by exactly this vertex set, if any.
    std::optional<int> cell_with_corners(std::vector<int> corners) const;
    const Cell& cell(int index) const { return cells_.at(index); }

    int triangle_cell_count() const { return n_triangles_; }
    int square_cell_count() const { return n_squares_; }

    CellComplexData data() const;

private:
    LabeledCellComplex() = default;

    std::vector<std::string> names_;
    std::vector<Cell> cells_;
    std::vector<Edge> edges_;
    std::vector<std::vector<int>> adj_;
    std::unordered_map<std::uint64_t, int> label_by_edge_;
    std::unordered_map<std::string, int> cell_by_corners_;
    int n_triangles_ = 0;
    int n_squares_ = 0;
};

// Canonical byte form used for reduced-complex digests inside certificates.
std::string canonical_document(const LabeledCellComplex& X);

// Canonicalizes a corner list (rotation + reflection).
std::vector<int> canonical_corners(std::vector<int> corners);

// 3-cliques / chordless 4-circuits of the 1-skeleton, as for triangulations.
std::vector<Triple> enumerate_cliques3(const LabeledCellComplex& X);
std::vector<std::vector<int>> enumerate_chordless_4_circuits(const LabeledCellComplex& X);

}  // namespace singer
