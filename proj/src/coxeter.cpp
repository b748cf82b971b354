#include "singer/coxeter.hpp"

#include <algorithm>

namespace singer {

std::string to_string(const GramClass& g) {
    switch (g.kind) {
        case GramClass::Kind::PositiveDefinite: return "PositiveDefinite";
        case GramClass::Kind::PositiveSemidefinite:
            return "PositiveSemidefiniteCorank(" + std::to_string(g.corank) + ")";
        case GramClass::Kind::Indefinite: return "Indefinite";
    }
    throw Error("bad gram kind");
}

LabelMatrix::LabelMatrix(int n) : n_(n) {
    if (n < 0) throw Error("negative subset size");
    if (n > 4) throw SubsetTooLarge("subsets of size " + std::to_string(n) + " are never needed");
    for (auto& row : m_) row.fill(0);
}

LabelMatrix LabelMatrix::from_subset(const LabeledTriangulation& L, const std::vector<int>& subset) {
    LabelMatrix lm(static_cast<int>(subset.size()));
    for (int i = 0; i < lm.size(); ++i)
        for (int j = i + 1; j < lm.size(); ++j) {
            Label l = L.label(subset[i], subset[j]);
            if (l.is_finite()) lm.set(i, j, l.value());
        }
    return lm;
}

void LabelMatrix::set(int i, int j, int m) {
    if (i < 0 || j < 0 || i >= n_ || j >= n_ || i == j) throw Error("bad label matrix position");
    if (m < 2 || m > Label::kMaxLabel) throw LabelError("label out of range: " + std::to_string(m));
    m_[i][j] = m_[j][i] = m;
}

Label LabelMatrix::get(int i, int j) const {
    if (i < 0 || j < 0 || i >= n_ || j >= n_) throw Error("bad label matrix position");
    if (i == j) throw Error("diagonal is implicit");
    if (m_[i][j] == 0) return Label::infinite();
    return Label::finite(m_[i][j]);
}

namespace {

void require_all_finite(const LabelMatrix& lm) {
    for (int i = 0; i < lm.size(); ++i)
        for (int j = i + 1; j < lm.size(); ++j)
            if (!lm.get(i, j).is_finite())
                throw InfiniteLabel("pair (" + std::to_string(i) + "," + std::to_string(j) +
                                    ") in the subset is not adjacent");
}

Rational triangle_angle_sum(const LabelMatrix& lm) {
    return frac(1, lm.finite(0, 1)) + frac(1, lm.finite(1, 2)) + frac(1, lm.finite(0, 2));
}

}  // namespace

GramClass gram_class(const LabelMatrix& lm) {
    require_all_finite(lm);
    switch (lm.size()) {
        case 0:
        case 1:
        case 2:
            // off-diagonal entries have |.| = cos(pi/m) < 1
            return {GramClass::Kind::PositiveDefinite, 0};
        case 3: {
            // leading 2x2 minors are positive, so the determinant sign
            // decides; it matches the spherical/Euclidean/hyperbolic
            // trichotomy of the angle sum, exactly.
            Rational sum = triangle_angle_sum(lm);
            if (sum > 1) return {GramClass::Kind::PositiveDefinite, 0};
            if (sum == 1) return {GramClass::Kind::PositiveSemidefinite, 1};
            return {GramClass::Kind::Indefinite, 0};
        }
        case 4:
            return gram_class_via_minors(lm);
        default:
            throw SubsetTooLarge("gram_class beyond size 4");
    }
}

bool is_spherical(const LabelMatrix& lm) {
    switch (lm.size()) {
        case 0:
        case 1:
            return true;
        case 2:
            return lm.get(0, 1).is_finite();
        case 3: {
            for (int i = 0; i < 3; ++i)
                for (int j = i + 1; j < 3; ++j)
                    if (!lm.get(i, j).is_finite()) return false;
            return triangle_angle_sum(lm) > 1;
        }
        case 4: {
            for (int i = 0; i < 4; ++i)
                for (int j = i + 1; j < 4; ++j)
                    if (!lm.get(i, j).is_finite()) return false;
            return gram_class(lm).kind == GramClass::Kind::PositiveDefinite;
        }
        default:
            throw SubsetTooLarge("is_spherical beyond size 4");
    }
}

Rational spherical_order(const LabelMatrix& lm) {
    if (lm.size() > 3) throw SubsetTooLarge("orders are only needed up to rank 3");
    if (!is_spherical(lm)) throw NotSpherical("subset does not generate a finite group");
    switch (lm.size()) {
        case 0: return 1;
        case 1: return 2;
        case 2: return 2 * lm.finite(0, 1);
        default: {
            Rational excess = triangle_angle_sum(lm) - 1;
            return Rational(4) / excess;
        }
    }
}

// --- metric flag -------------------------------------------------------------

MetricFlagReport metric_flag_check(const LabeledTriangulation& L) {
    MetricFlagReport report;

    // (a) every triangle of L is spherical
    for (const Triple& t : L.triangles()) {
        LabelMatrix lm = LabelMatrix::from_subset(L, {t[0], t[1], t[2]});
        Rational sum = triangle_angle_sum(lm);
        if (!(sum > 1))
            report.violations.push_back(
                {'a', {t[0], t[1], t[2]}, "face angle sum 1/p+1/q+1/r = " + rational_string(sum)});
    }

    // (b) spherical 3-cliques must span triangles
    for (const Triple& t : enumerate_cliques3(L)) {
        if (L.has_triangle(t[0], t[1], t[2])) continue;
        LabelMatrix lm = LabelMatrix::from_subset(L, {t[0], t[1], t[2]});
        if (is_spherical(lm))
            report.violations.push_back({'b',
                                         {t[0], t[1], t[2]},
                                         "spherical 3-clique (sum " + rational_string(triangle_angle_sum(lm)) +
                                             ") spans no triangle"});
    }

    // (c) no 4-clique may carry a positive definite form
    for (const auto& q : enumerate_cliques4(L)) {
        LabelMatrix lm = LabelMatrix::from_subset(L, {q[0], q[1], q[2], q[3]});
        GramClass g = gram_class(lm);
        if (g.kind == GramClass::Kind::PositiveDefinite)
            report.violations.push_back(
                {'c', {q[0], q[1], q[2], q[3]}, "4-clique with positive definite Gram form"});
    }

    report.pass = report.violations.empty();
    return report;
}

void require_metric_flag(const LabeledTriangulation& L) {
    MetricFlagReport r = metric_flag_check(L);
    if (r.pass) return;
    const MetricFlagViolation& v = r.violations.front();
    std::string msg = "not metric flag: clause (";
    msg += v.clause;
    msg += ") at {";
    for (size_t i = 0; i < v.clique.size(); ++i) msg += (i ? "," : "") + L.name(v.clique[i]);
    msg += "}: " + v.detail;
    throw NotMetricFlag(msg);
}

// --- spherical poset and chi^2 ------------------------------------------------

SphericalPoset spherical_poset(const LabeledTriangulation& L) {
    require_metric_flag(L);
    SphericalPoset poset;
    poset.elements.push_back({{}, Rational(1)});
    for (int v = 0; v < L.vertex_count(); ++v) poset.elements.push_back({{v}, Rational(2)});
    for (const Edge& e : L.edges())
        poset.elements.push_back({{e[0], e[1]}, Rational(2 * L.finite_label(e[0], e[1]))});
    // clause (b) makes faces exactly the spherical 3-subsets; clause (c)
    // rules out spherical 4-subsets, so the poset stops at rank 3.
    for (const Triple& t : L.triangles()) {
        LabelMatrix lm = LabelMatrix::from_subset(L, {t[0], t[1], t[2]});
        poset.elements.push_back({{t[0], t[1], t[2]}, spherical_order(lm)});
    }
    return poset;
}

Rational l2_euler_characteristic(const LabeledTriangulation& L) {
    require_metric_flag(L);
    Rational chi = 1;
    chi -= frac(L.vertex_count(), 2);
    for (const Edge& e : L.edges()) chi += frac(1, 2 * L.finite_label(e[0], e[1]));
    for (const Triple& t : L.triangles()) {
        LabelMatrix lm = LabelMatrix::from_subset(L, {t[0], t[1], t[2]});
        chi -= (triangle_angle_sum(lm) - 1) / 4;
    }
    return chi;
}

}  // namespace singer
