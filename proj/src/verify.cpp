#include <algorithm>
#include <set>

#include "singer/certify.hpp"
#include "singer/digest.hpp"

namespace singer {

namespace {

struct Checker {
    VerificationReport report;

    void fail(const std::string& path, const std::string& reason) {
        report.failures.push_back({path, reason});
    }

    // convenience: record and report in one step
    bool expect(bool ok, const std::string& path, const std::string& reason) {
        if (!ok) fail(path, reason);
        return ok;
    }

    void check_tree(const LabeledTriangulation& L, const CertTree& t, const std::string& path);
    void check_node(const LabeledTriangulation& L, const CertNode& n, const std::string& path);

    void check_base_simplex(const LabeledTriangulation& L, const NodeBaseSimplex& n, const std::string& path);
    void check_suspension(const LabeledTriangulation& L, const NodeSuspension& n, const std::string& path);
    void check_five_gon_reduction(const LabeledTriangulation& L, const NodeSuspension& n,
                                  const SubFiveGonReduction& sub, const std::string& path);
    void check_five_gon_figure4(const LabeledTriangulation& L, const NodeSuspension& n,
                                const SubFiveGonFigure4Split& sub, const std::string& path);
    void check_five_gon_adjacent(const LabeledTriangulation& L, const NodeSuspension& n,
                                 const SubFiveGonAdjacentEuclidean& sub, const std::string& path);
    void check_l6(const LabeledTriangulation& L, const NodeL6& n, const std::string& path);
    void check_split(const LabeledTriangulation& L, const NodeCircuitSplit& n, const std::string& path);
    void check_reduction(const LabeledTriangulation& L, const NodeEuclideanReduction& n,
                         const std::string& path);
};

bool euclidean_with_full_star(Checker& c, const LabeledTriangulation& L, int v, VertexClass expected,
                              const std::string& path, const std::string& role) {
    if (!L.has_vertex(v)) {
        c.fail(path, role + " index out of range");
        return false;
    }
    bool ok = c.expect(classify_vertex(L, v) == expected, path,
                       role + " " + L.name(v) + " is not " + to_string(expected));
    ok &= c.expect(is_full(L, link(L, v)), path, "link of " + role + " " + L.name(v) + " is not full");
    ok &= c.expect(is_full(L, star(L, v)), path, "star of " + role + " " + L.name(v) + " is not full");
    return ok;
}

bool transcripts_equal(const AndreevTranscript& a, const AndreevTranscript& b) {
    return transcript_json(a) == transcript_json(b);
}

void Checker::check_base_simplex(const LabeledTriangulation& L, const NodeBaseSimplex& n,
                                 const std::string& path) {
    if (!expect(recognize_boundary_simplex(L), path, "complex is not the boundary of a 3-simplex")) return;
    if (!expect(n.vertices == std::vector<int>{0, 1, 2, 3}, path, "generator witness is not the vertex set"))
        return;
    GramClass g = gram_class(LabelMatrix::from_subset(L, n.vertices));
    expect(g == n.gram, path, "stored Gram class " + to_string(n.gram) + " != recomputed " + to_string(g));
    if (n.euclidean) {
        expect(g.kind == GramClass::Kind::PositiveSemidefinite && g.corank == 1, path,
               "Euclidean simplex node needs PSD corank 1, recomputed " + to_string(g));
    } else {
        expect(g.kind == GramClass::Kind::Indefinite, path,
               "hyperbolic simplex node needs an indefinite form, recomputed " + to_string(g));
        // compact hyperbolic simplex groups have all rank-3 subgroups finite
        for (const Triple& t : L.triangles()) {
            LabelMatrix lm = LabelMatrix::from_subset(L, {t[0], t[1], t[2]});
            expect(is_spherical(lm), path, "simplex face is not spherical");
        }
    }
}

void Checker::check_suspension(const LabeledTriangulation& L, const NodeSuspension& n,
                               const std::string& path) {
    if (!expect(n.n >= 3 && n.n <= 5, path, "suspension parameter n out of range")) return;
    if (!L.has_vertex(n.poles[0]) || !L.has_vertex(n.poles[1])) {
        fail(path, "pole index out of range");
        return;
    }
    auto susp = suspension_with_poles(L, n.poles[0], n.poles[1]);
    if (!expect(susp.has_value(), path, "stored poles are not a suspension presentation")) return;
    if (!expect(susp->gon() == n.n, path, "equator size does not match n")) return;
    if (!expect(susp->equator.vertices == n.equator, path, "stored equator does not match the complex"))
        return;

    std::visit(
        [&](const auto& sub) {
            using S = std::decay_t<decltype(sub)>;
            if constexpr (std::is_same_v<S, SubAndreevDirect>) {
                try {
                    AndreevTranscript rt = andreev_check(LabeledCellComplex::from_triangulation(L));
                    expect(rt.pass, path, "recomputed Andreev transcript does not pass");
                    expect(transcripts_equal(rt, sub.transcript), path,
                           "stored transcript differs from recomputation");
                } catch (const Error& e) {
                    fail(path, std::string("Andreev recomputation failed: ") + e.what());
                }
            } else if constexpr (std::is_same_v<S, SubRightAngledSuspension>) {
                for (int z : n.equator)
                    for (int pole : n.poles)
                        if (L.finite_label(z, pole) != 2) {
                            fail(path, "suspension edge {" + L.name(z) + "," + L.name(pole) +
                                           "} is not labeled 2");
                            return;
                        }
            } else if constexpr (std::is_same_v<S, SubEuclideanPolesSplit>) {
                if (!expect(n.n == 3 || n.n == 4, path, "pole split only applies to 3- and 4-gons")) return;
                const VertexClass expected = n.n == 3 ? VertexClass::Euclid3 : VertexClass::Euclid4;
                euclidean_with_full_star(*this, L, n.poles[0], expected, path, "pole");
                euclidean_with_full_star(*this, L, n.poles[1], expected, path, "pole");
                for (const Triple& t : L.triangles()) {
                    bool covered = false;
                    for (int x : t)
                        if (x == n.poles[0] || x == n.poles[1]) covered = true;
                    if (!covered) {
                        fail(path, "a triangle avoids both poles; stars do not cover the complex");
                        break;
                    }
                }
            } else if constexpr (std::is_same_v<S, SubFiveGonReduction>) {
                if (!expect(n.n == 5, path, "FiveGonReduction on a non-5-gon")) return;
                check_five_gon_reduction(L, n, sub, path);
            } else if constexpr (std::is_same_v<S, SubFiveGonFigure4Split>) {
                if (!expect(n.n == 5, path, "FiveGonFigure4Split on a non-5-gon")) return;
                check_five_gon_figure4(L, n, sub, path);
            } else if constexpr (std::is_same_v<S, SubFiveGonAdjacentEuclidean>) {
                if (!expect(n.n == 5, path, "FiveGonAdjacentEuclidean on a non-5-gon")) return;
                check_five_gon_adjacent(L, n, sub, path);
            }
        },
        n.subcase);
}

namespace {
bool on_equator(const NodeSuspension& n, int v) {
    return std::find(n.equator.begin(), n.equator.end(), v) != n.equator.end();
}
}  // namespace

void Checker::check_five_gon_reduction(const LabeledTriangulation& L, const NodeSuspension& n,
                                       const SubFiveGonReduction& sub, const std::string& path) {
    if (!expect(on_equator(n, sub.v), path, "v is not an equator vertex")) return;
    if (!euclidean_with_full_star(*this, L, sub.v, VertexClass::Euclid4, path, "vertex v")) return;
    for (int u : L.neighbors(sub.v))
        if (classify_vertex(L, u) != VertexClass::NotEuclidean) {
            fail(path, "branch condition violated: v has a Euclidean neighbor");
            return;
        }
    auto reduced = reduce_stars(L, {sub.v});
    if (!expect(std::holds_alternative<ReducedComplex>(reduced), path, "star replacement collided")) return;
    const ReducedComplex& rc = std::get<ReducedComplex>(reduced);
    if (!expect(sha256_hex(canonical_document(rc.complex)) == sub.reduced_digest, path,
                "reduced complex digest mismatch"))
        return;
    AndreevTranscript rt = andreev_check(rc.complex);
    expect(rt.pass, path, "recomputed Andreev transcript on [L-v] does not pass");
    expect(transcripts_equal(rt, sub.transcript), path, "stored transcript differs from recomputation");
}

void Checker::check_five_gon_figure4(const LabeledTriangulation& L, const NodeSuspension& n,
                                     const SubFiveGonFigure4Split& sub, const std::string& path) {
    if (!expect(on_equator(n, sub.v) && on_equator(n, sub.s), path, "v or s off the equator")) return;
    if (!euclidean_with_full_star(*this, L, sub.v, VertexClass::Euclid4, path, "vertex v")) return;
    for (int u : L.neighbors(sub.v))
        if (classify_vertex(L, u) != VertexClass::NotEuclidean) {
            fail(path, "branch condition violated: v has a Euclidean neighbor");
            return;
        }
    auto reduced = reduce_stars(L, {sub.v});
    if (!expect(std::holds_alternative<ReducedComplex>(reduced), path, "star replacement collided")) return;
    const ReducedComplex& rc = std::get<ReducedComplex>(reduced);
    if (!expect(sha256_hex(canonical_document(rc.complex)) == sub.reduced_digest, path,
                "reduced complex digest mismatch"))
        return;
    AndreevTranscript rt = andreev_check(rc.complex);
    if (!expect(!rt.pass, path, "[L-v] passes Andreev; the split branch does not apply")) return;
    for (int k : {1, 2, 4})
        expect(rt.condition(k).pass, path, "[L-v] fails condition (" + rt.condition(k).id + ")");
    if (!expect(!rt.condition(5).pass, path, "[L-v] does not fail condition (v)")) return;
    expect(rt.condition(5).failures().front() == sub.failed_instance, path,
           "stored failing instance differs from recomputation");

    if (!expect(sub.s != sub.v && !L.adjacent(sub.s, sub.v), path,
                "s must differ from v and sit at equator distance two"))
        return;
    euclidean_with_full_star(*this, L, sub.s, VertexClass::Euclid4, path, "vertex s");
    for (int z : n.equator)
        if (z != sub.v && z != sub.s)
            for (int pole : n.poles)
                if (L.finite_label(z, pole) != 2) {
                    fail(path, "remainder is not a right-angled suspension: edge {" + L.name(z) + "," +
                                   L.name(pole) + "} not labeled 2");
                    return;
                }
}

void Checker::check_five_gon_adjacent(const LabeledTriangulation& L, const NodeSuspension& n,
                                      const SubFiveGonAdjacentEuclidean& sub, const std::string& path) {
    if (!expect(on_equator(n, sub.v) && on_equator(n, sub.w) && on_equator(n, sub.v_prime), path,
                "witness vertices off the equator"))
        return;
    expect(L.adjacent(sub.v, sub.w), path, "v and w are not adjacent");
    expect(classify_vertex(L, sub.v) == VertexClass::Euclid4, path, "v is not 4-Euclidean");
    expect(classify_vertex(L, sub.w) == VertexClass::Euclid4, path, "w is not 4-Euclidean");
    if (!expect(sub.v_prime != sub.v && sub.v_prime != sub.w && !L.adjacent(sub.v_prime, sub.v) &&
                    !L.adjacent(sub.v_prime, sub.w),
                path, "v' is not opposite the Euclidean pair"))
        return;
    euclidean_with_full_star(*this, L, sub.v_prime, VertexClass::Euclid4, path, "vertex v'");
    for (int z : n.equator)
        if (z != sub.v_prime)
            for (int pole : n.poles)
                if (L.finite_label(z, pole) != 2) {
                    fail(path, "star complement is not right-angled: edge {" + L.name(z) + "," +
                                   L.name(pole) + "} not labeled 2");
                    return;
                }
}

void Checker::check_l6(const LabeledTriangulation& L, const NodeL6& n, const std::string& path) {
    const L6Witness& w = n.witness;
    if (!L.has_vertex(w.poles[0]) || !L.has_vertex(w.poles[1]) || !L.has_vertex(w.s1) ||
        !L.has_vertex(w.s2) || !L.has_vertex(w.middle)) {
        fail(path, "L6 witness index out of range");
        return;
    }
    auto susp = suspension_with_poles(L, w.poles[0], w.poles[1]);
    if (!expect(susp && susp->gon() == 6, path, "complex is not a suspension of a 6-gon at the stored poles"))
        return;
    if (!expect(susp->equator.vertices == w.hexagon, path, "stored hexagon does not match the equator"))
        return;
    // s1 and s2 at hexagon distance two, through the stored middle vertex
    const auto& hex = w.hexagon;
    bool placed = false;
    for (int i = 0; i < 6; ++i) {
        int a = hex[i], m = hex[(i + 1) % 6], b = hex[(i + 2) % 6];
        if ((a == w.s1 && m == w.middle && b == w.s2) || (a == w.s2 && m == w.middle && b == w.s1))
            placed = true;
    }
    if (!expect(placed, path, "overlap vertices are not at hexagon distance two through the middle")) return;
    expect(classify_vertex(L, w.s1) == VertexClass::Euclid4, path, "s1 is not 4-Euclidean");
    expect(classify_vertex(L, w.s2) == VertexClass::Euclid4, path, "s2 is not 4-Euclidean");
}

void Checker::check_split(const LabeledTriangulation& L, const NodeCircuitSplit& n, const std::string& path) {
    // the stored circuit must be exactly one of the empty Euclidean circuits
    // of this complex, sides included
    std::vector<EmptyEuclideanCircuit> all;
    try {
        all = find_empty_euclidean_circuits(L);
    } catch (const Error& e) {
        fail(path, std::string("circuit enumeration failed: ") + e.what());
        return;
    }
    const EmptyEuclideanCircuit* match = nullptr;
    for (const auto& c : all)
        if (c.kind == n.circuit.kind && c.cycle == n.circuit.cycle) match = &c;
    if (!expect(match != nullptr, path, "stored circuit is not an empty Euclidean circuit of this complex"))
        return;
    if (!expect(match->side1 == n.circuit.side1 && match->side2 == n.circuit.side2, path,
                "stored circuit sides do not match the complex"))
        return;

    SplitResult split = split_along_circuit(L, *match);
    const VertexClass expected = n.circuit.kind == EmptyEuclideanCircuit::Kind::Three
                                     ? VertexClass::Euclid3
                                     : VertexClass::Euclid4;
    expect(classify_vertex(split.first, split.cap_first) == expected, path,
           "side1 cap is not Euclidean of the circuit kind");
    expect(classify_vertex(split.second, split.cap_second) == expected, path,
           "side2 cap is not Euclidean of the circuit kind");
    expect(split.first.vertex_count() + split.second.vertex_count() ==
               L.vertex_count() + n.circuit.cycle.size() + 2,
           path, "split vertex accounting failed");
    expect(metric_flag_check(split.first).pass, path, "side1 cap is not metric flag");
    expect(metric_flag_check(split.second).pass, path, "side2 cap is not metric flag");

    check_tree(split.first, *n.left, path + ".left");
    check_tree(split.second, *n.right, path + ".right");
}

void Checker::check_reduction(const LabeledTriangulation& L, const NodeEuclideanReduction& n,
                              const std::string& path) {
    if (!expect(n.euclidean_vertices == euclidean_vertices(L), path,
                "stored T is not the full Euclidean vertex set"))
        return;
    // the non-adjacency guarantee is re-checked explicitly, never assumed
    for (size_t i = 0; i < n.euclidean_vertices.size(); ++i)
        for (size_t j = i + 1; j < n.euclidean_vertices.size(); ++j)
            if (L.adjacent(n.euclidean_vertices[i], n.euclidean_vertices[j])) {
                fail(path, "two Euclidean vertices of T are adjacent");
                return;
            }

    // hypotheses under which the reduced dual is realizable
    if (!expect(!recognize_boundary_simplex(L), path, "reduction node on a boundary simplex")) return;
    if (auto susp = recognize_suspension(L); susp && susp->gon() <= 5) {
        fail(path, "reduction node on a suspension of a " + std::to_string(susp->gon()) + "-gon");
        return;
    }
    if (!expect(!recognize_L6(L).has_value(), path, "reduction node on an L6-triangulation")) return;
    if (!expect(find_empty_euclidean_circuits(L).empty(), path,
                "reduction node although empty Euclidean circuits exist"))
        return;

    for (int v : n.euclidean_vertices) {
        VertexClass c = classify_vertex(L, v);
        euclidean_with_full_star(*this, L, v, c, path, "Euclidean vertex");
    }

    std::optional<std::variant<ReducedComplex, L6Overlap>> reduced;
    try {
        reduced = reduce_stars(L, n.euclidean_vertices);
    } catch (const Error& e) {
        fail(path, std::string("star replacement failed: ") + e.what());
        return;
    }
    if (!expect(std::holds_alternative<ReducedComplex>(*reduced), path,
                "star replacement hit the L6 overlap"))
        return;
    const ReducedComplex& rc = std::get<ReducedComplex>(*reduced);
    if (!expect(sha256_hex(canonical_document(rc.complex)) == n.reduced_digest, path,
                "reduced complex digest mismatch"))
        return;

    const bool simplex = dual_polytope(rc.complex).is_simplex;
    if (n.dual_is_simplex) {
        if (!expect(simplex, path, "node claims a simplex dual but the reduced dual is not")) return;
        LabelMatrix lm(4);
        for (int i = 0; i < 4; ++i)
            for (int j = i + 1; j < 4; ++j) lm.set(i, j, rc.complex.finite_label(i, j));
        GramClass g = gram_class(lm);
        expect(g == n.simplex_gram, path, "stored simplex Gram class differs from recomputation");
        expect(g.kind == GramClass::Kind::Indefinite, path,
               "reduced simplex group must be indefinite (non-compact hyperbolic)");
    } else {
        if (!expect(!simplex, path, "node claims Andreev but the reduced dual is a simplex")) return;
        if (!expect(n.transcript.has_value(), path, "missing transcript")) return;
        try {
            AndreevTranscript rt = andreev_check(rc.complex);
            expect(rt.pass, path, "recomputed Andreev transcript does not pass");
            expect(transcripts_equal(rt, *n.transcript), path,
                   "stored transcript differs from recomputation");
        } catch (const Error& e) {
            fail(path, std::string("Andreev recomputation failed: ") + e.what());
        }
    }
}

void Checker::check_node(const LabeledTriangulation& L, const CertNode& n, const std::string& path) {
    try {
        std::visit(
            [&](const auto& node) {
                using T = std::decay_t<decltype(node)>;
                if constexpr (std::is_same_v<T, NodeBaseSimplex>)
                    check_base_simplex(L, node, path);
                else if constexpr (std::is_same_v<T, NodeSuspension>)
                    check_suspension(L, node, path);
                else if constexpr (std::is_same_v<T, NodeL6>)
                    check_l6(L, node, path);
                else if constexpr (std::is_same_v<T, NodeCircuitSplit>)
                    check_split(L, node, path);
                else
                    check_reduction(L, node, path);
            },
            n);
    } catch (const Error& e) {
        fail(path, std::string("check raised: ") + e.what());
    } catch (const std::exception& e) {
        fail(path, std::string("check raised: ") + e.what());
    }
}

void Checker::check_tree(const LabeledTriangulation& L, const CertTree& t, const std::string& path) {
    if (!expect(sha256_hex(canonical_document(L)) == t.digest, path, "input digest mismatch")) return;
    check_node(L, t.node, path);
}

}  // namespace

VerificationReport verify(const LabeledTriangulation& L, const Certificate& cert) {
    Checker checker;
    checker.check_tree(L, cert.root, "root");
    checker.report.accepted = checker.report.failures.empty();
    return checker.report;
}

}  // namespace singer
