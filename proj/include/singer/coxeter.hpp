#pragma once

#include <array>
#include <string>
#include <vector>

#include "singer/rational.hpp"
#include "singer/triangulation.hpp"

namespace singer {

// Classification of the symmetric bilinear form with G_ii = 1 and
// G_ij = -cos(pi/m_ij) attached to a labeled vertex subset.
struct GramClass {
    enum class Kind { PositiveDefinite, PositiveSemidefinite, Indefinite };
    Kind kind = Kind::PositiveDefinite;
    int corank = 0;  // >= 1 exactly when kind == PositiveSemidefinite

    bool operator==(const GramClass&) const = default;
};

std::string to_string(const GramClass& g);

// Symmetric label assignment on a subset of at most 4 vertices.  Diagonal is
// implicit; off-diagonal defaults to infinite (non-adjacent pair).
class LabelMatrix {
public:
    explicit LabelMatrix(int n);
    static LabelMatrix from_subset(const LabeledTriangulation& L, const std::vector<int>& subset);

    int size() const { return n_; }
    void set(int i, int j, int m);
    Label get(int i, int j) const;
    int finite(int i, int j) const { return get(i, j).value(); }

private:
    int n_;
    std::array<std::array<int, 4>, 4> m_{};  // 0 = infinite
};

// Classifies the Gram form. Ranks <= 3 are decided in exact rational
// arithmetic; rank 4 goes through certified sign decisions on the
// characteristic-polynomial coefficients at high floating precision (default
// 256 bits, override with SINGER_PRECISION_BITS).  All pairs must carry
// finite labels (InfiniteLabel otherwise); subsets larger than 4 are never
// needed and rejected (SubsetTooLarge).
GramClass gram_class(const LabelMatrix& labels);

// The numeric route on its own (any rank up to 4).  This is what rank 4
// uses; tests cross-check it against the exact route on rank 3.
GramClass gram_class_via_minors(const LabelMatrix& labels);

// Working precision for the numeric route, in bits.
int gram_precision_bits();

bool is_spherical(const LabelMatrix& labels);

// |W_T| for subsets of size <= 3:
//   |W_{}| = 1, |W_v| = 2, |W_edge| = 2m,
//   |W_triangle| = 4 / (1/p + 1/q + 1/r - 1).
Rational spherical_order(const LabelMatrix& labels);

// --- metric flag check -----------------------------------------------------

struct MetricFlagViolation {
    // 'a': a triangle of L is not spherical
    // 'b': a spherical 3-clique of the 1-skeleton spans no triangle
    // 'c': a 4-clique of the 1-skeleton has positive definite Gram form
    char clause = '?';
    std::vector<int> clique;
    std::string detail;
};

struct MetricFlagReport {
    bool pass = true;
    std::vector<MetricFlagViolation> violations;
};

MetricFlagReport metric_flag_check(const LabeledTriangulation& L);

// Throws NotMetricFlag with the first violation rendered into the message.
void require_metric_flag(const LabeledTriangulation& L);

// --- spherical poset and chi^2 ----------------------------------------------

struct SphericalSubset {
    std::vector<int> vertices;  // sorted; empty for the trivial subgroup
    Rational order;
};

struct SphericalPoset {
    std::vector<SphericalSubset> elements;  // by size, then lexicographic
};

SphericalPoset spherical_poset(const LabeledTriangulation& L);

// Sum of (-1)^|T| / |W_T| over the spherical poset, in exact rational
// arithmetic.  Used as a global oracle: it must vanish for every metric
// flag triangulation of the 2-sphere.
Rational l2_euler_characteristic(const LabeledTriangulation& L);

}  // namespace singer
