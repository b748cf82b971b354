#include "singer/certify.hpp"

#include <algorithm>
#include <set>

#include "singer/digest.hpp"

namespace singer {

namespace {

std::string doc_digest(const LabeledTriangulation& L) { return sha256_hex(canonical_document(L)); }
std::string doc_digest(const LabeledCellComplex& X) { return sha256_hex(canonical_document(X)); }

[[noreturn]] void contradiction(const LabeledTriangulation& L, const std::string& what) {
    throw InternalContradiction(what, canonical_document(L));
}

bool all_pole_edges_two(const LabeledTriangulation& L, const Suspension& susp) {
    for (int v : susp.equator.vertices)
        for (int pole : {susp.pole_a, susp.pole_b})
            if (L.finite_label(v, pole) != 2) return false;
    return true;
}

// Maps a failing condition-(iii) circuit of the dual of a suspension back to
// the 4-Euclidean equator vertex whose link it is; -1 if it is not a link.
int circuit_link_vertex(const LabeledTriangulation& L, const std::vector<int>& circuit) {
    std::set<int> c(circuit.begin(), circuit.end());
    for (int v = 0; v < L.vertex_count(); ++v) {
        const std::vector<int>& link = L.link_cycle(v);
        if (link.size() != c.size()) continue;
        if (std::set<int>(link.begin(), link.end()) == c) return v;
    }
    return -1;
}

CertTree certify_tree(const LabeledTriangulation& L, int depth, int root_vertex_count);

NodeSuspension suspension_case(const LabeledTriangulation& L, const Suspension& susp) {
    NodeSuspension node;
    node.n = susp.gon();
    node.poles = {susp.pole_a, susp.pole_b};
    node.equator = susp.equator.vertices;

    LabeledCellComplex X = LabeledCellComplex::from_triangulation(L);
    AndreevTranscript t = andreev_check(X);
    if (t.pass) {
        node.subcase = SubAndreevDirect{std::move(t)};
        return node;
    }

    if (node.n == 3) {
        // only (ii) and (iv) can fail here; (ii) first, per the case analysis
        if (!t.condition(2).pass) {
            for (int pole : node.poles)
                if (classify_vertex(L, pole) != VertexClass::Euclid3)
                    contradiction(L, "3-gon suspension fails (ii) but pole " + L.name(pole) +
                                         " is not 3-Euclidean");
            node.subcase = SubEuclideanPolesSplit{};
            return node;
        }
        if (!t.condition(4).pass) {
            if (!all_pole_edges_two(L, susp))
                contradiction(L, "3-gon suspension fails (iv) but some suspension edge is not labeled 2");
            node.subcase = SubRightAngledSuspension{};
            return node;
        }
        contradiction(L, "3-gon suspension fails an unexpected Andreev condition");
    }

    if (!t.condition(3).pass) {
        if (node.n == 4) {
            // the two vertices off the failing circuit are 4-Euclidean and
            // form a valid pole pair
            const AndreevInstance fail = t.condition(3).failures().front();
            std::set<int> on(fail.vertices.begin(), fail.vertices.end());
            std::vector<int> off;
            for (int v = 0; v < L.vertex_count(); ++v)
                if (!on.count(v)) off.push_back(v);
            if (off.size() != 2) contradiction(L, "4-gon suspension: failing circuit misses != 2 vertices");
            auto repose = suspension_with_poles(L, off[0], off[1]);
            if (!repose) contradiction(L, "4-gon suspension: off-circuit vertices are not a pole pair");
            for (int pole : off)
                if (classify_vertex(L, pole) != VertexClass::Euclid4)
                    contradiction(L, "4-gon suspension: rearranged pole is not 4-Euclidean");
            node.poles = {repose->pole_a, repose->pole_b};
            node.equator = repose->equator.vertices;
            node.subcase = SubEuclideanPolesSplit{};
            return node;
        }

        // n == 5
        const AndreevInstance fail = t.condition(3).failures().front();
        const int v = circuit_link_vertex(L, fail.vertices);
        if (v == -1 || classify_vertex(L, v) != VertexClass::Euclid4)
            contradiction(L, "5-gon suspension: failing circuit is not the link of a 4-Euclidean vertex");

        bool has_euclidean_neighbor = false;
        for (int u : L.neighbors(v))
            if (classify_vertex(L, u) != VertexClass::NotEuclidean) has_euclidean_neighbor = true;

        if (!has_euclidean_neighbor) {
            auto reduced = reduce_stars(L, {v});
            if (!std::holds_alternative<ReducedComplex>(reduced))
                contradiction(L, "5-gon suspension: single-star replacement collided");
            const ReducedComplex& rc = std::get<ReducedComplex>(reduced);
            AndreevTranscript t2 = andreev_check(rc.complex);
            if (t2.pass) {
                node.subcase = SubFiveGonReduction{v, doc_digest(rc.complex), std::move(t2)};
                return node;
            }
            // conditions (i), (ii) and (iv) cannot fail here; (iii) can only
            // fail in tandem with (v) (an all-right-angle circuit through
            // the poles is exactly a condition-(v) witness), so the case
            // analysis routes on (v)
            for (int k : {1, 2, 4})
                if (!t2.condition(k).pass)
                    contradiction(L, "5-gon reduction fails Andreev condition (" + t2.condition(k).id + ")");
            if (t2.condition(5).pass)
                contradiction(L, "5-gon reduction fails only condition (iii) without a (v) witness");
            // the (v) witness g has both pole edges labeled 2; the other
            // equator vertex at distance two from v is the second Euclidean
            // star of the decomposition
            const AndreevInstance inst = t2.condition(5).failures().front();
            const int g_reduced = inst.vertices[2];
            const int g = rc.kept.at(g_reduced);
            std::vector<int> dist2;
            const std::vector<int>& eq = node.equator;
            for (int i = 0; i < 5; ++i)
                if (eq[(i + 2) % 5] == v || eq[(i + 3) % 5] == v) dist2.push_back(eq[i]);
            std::sort(dist2.begin(), dist2.end());
            if (dist2.size() != 2 || (g != dist2[0] && g != dist2[1]))
                contradiction(L, "5-gon reduction: condition (v) witness is not at distance 2 from v");
            const int s = g == dist2[0] ? dist2[1] : dist2[0];
            if (classify_vertex(L, s) != VertexClass::Euclid4)
                contradiction(L, "5-gon reduction: derived second star vertex is not 4-Euclidean");
            for (int z : eq)
                if (z != v && z != s)
                    for (int pole : node.poles)
                        if (L.finite_label(z, pole) != 2)
                            contradiction(L, "5-gon reduction: remainder is not a right-angled suspension");
            node.subcase = SubFiveGonFigure4Split{v, s, doc_digest(rc.complex), inst};
            return node;
        }

        // v is adjacent to another Euclidean vertex: the opposite equator
        // vertex is itself 4-Euclidean and its star splits off a
        // right-angled suspension
        int w = -1;
        for (int u : L.neighbors(v))
            if (classify_vertex(L, u) != VertexClass::NotEuclidean && (w == -1 || u < w)) w = u;
        const std::vector<int>& eq = node.equator;
        if (std::find(eq.begin(), eq.end(), w) == eq.end())
            contradiction(L, "5-gon suspension: Euclidean neighbor off the equator");
        int v_prime = -1;
        for (int z : eq)
            if (z != v && z != w && !L.adjacent(z, v) && !L.adjacent(z, w)) v_prime = z;
        if (v_prime == -1) contradiction(L, "5-gon suspension: no vertex opposite the Euclidean pair");
        if (classify_vertex(L, v_prime) != VertexClass::Euclid4)
            contradiction(L, "5-gon suspension: opposite vertex is not 4-Euclidean");
        for (int z : eq)
            if (z != v_prime)
                for (int pole : node.poles)
                    if (L.finite_label(z, pole) != 2)
                        contradiction(L, "5-gon suspension: star complement is not right-angled");
        node.subcase = SubFiveGonAdjacentEuclidean{v, w, v_prime};
        return node;
    }

    contradiction(L, "suspension of a " + std::to_string(node.n) + "-gon fails conditions it must satisfy");
}

CertNode dispatch(const LabeledTriangulation& L, int depth, int root_vertex_count) {
    // (1) boundary of a 3-simplex
    if (recognize_boundary_simplex(L)) {
        NodeBaseSimplex node;
        node.vertices = {0, 1, 2, 3};
        node.gram = gram_class(LabelMatrix::from_subset(L, node.vertices));
        if (node.gram.kind == GramClass::Kind::PositiveDefinite)
            contradiction(L, "metric flag boundary simplex with positive definite Gram form");
        node.euclidean = node.gram.kind == GramClass::Kind::PositiveSemidefinite;
        if (node.euclidean && node.gram.corank != 1)
            contradiction(L, "boundary simplex with PSD corank != 1");
        return node;
    }

    // (2) suspension of a 3-, 4- or 5-gon
    if (auto susp = recognize_suspension(L); susp && susp->gon() >= 3 && susp->gon() <= 5)
        return suspension_case(L, *susp);

    // (3) L6-triangulation
    if (auto l6 = recognize_L6(L)) return NodeL6{*l6};

    // (4) empty Euclidean circuit: split and recurse
    std::vector<EmptyEuclideanCircuit> circuits = find_empty_euclidean_circuits(L);
    if (!circuits.empty()) {
        const EmptyEuclideanCircuit& c = circuits.front();
        SplitResult split = split_along_circuit(L, c);
        const VertexClass expect =
            c.kind == EmptyEuclideanCircuit::Kind::Three ? VertexClass::Euclid3 : VertexClass::Euclid4;
        if (classify_vertex(split.first, split.cap_first) != expect ||
            classify_vertex(split.second, split.cap_second) != expect)
            contradiction(L, "circuit cap is not Euclidean of the expected kind");
        // both children contain the shared circuit; only the two cone
        // points are new
        if (split.first.vertex_count() + split.second.vertex_count() !=
            L.vertex_count() + c.cycle.size() + 2)
            contradiction(L, "circuit split vertex accounting failed");
        NodeCircuitSplit node;
        node.circuit = c;
        node.left = std::make_unique<CertTree>(certify_tree(split.first, depth + 1, root_vertex_count));
        node.right = std::make_unique<CertTree>(certify_tree(split.second, depth + 1, root_vertex_count));
        return node;
    }

    // (5) star replacement and Andreev (Euclidean vertex set may be empty)
    std::vector<int> T = euclidean_vertices(L);
    auto reduced = reduce_stars(L, T);
    if (std::holds_alternative<L6Overlap>(reduced))
        contradiction(L, "star replacement collided although L6 recognition found nothing");
    const ReducedComplex& rc = std::get<ReducedComplex>(reduced);

    NodeEuclideanReduction node;
    node.euclidean_vertices = std::move(T);
    node.reduced_digest = doc_digest(rc.complex);
    if (dual_polytope(rc.complex).is_simplex) {
        node.dual_is_simplex = true;
        std::vector<int> all{0, 1, 2, 3};
        std::vector<int> originals;
        for (int idx : all) originals.push_back(rc.kept.at(idx));
        LabelMatrix lm(4);
        for (int i = 0; i < 4; ++i)
            for (int j = i + 1; j < 4; ++j) lm.set(i, j, rc.complex.finite_label(i, j));
        node.simplex_gram = gram_class(lm);
        if (node.simplex_gram.kind != GramClass::Kind::Indefinite)
            contradiction(L, "reduced simplex is not a non-compact hyperbolic simplex group (" +
                                 to_string(node.simplex_gram) + ")");
        return node;
    }
    AndreevTranscript t = andreev_check(rc.complex);
    if (!t.pass) {
        std::string failing;
        for (const auto& c : t.conditions)
            if (!c.pass) failing += (failing.empty() ? "" : ",") + c.id;
        throw InternalContradiction(
            "Andreev check failed on the reduced complex (conditions " + failing + ")",
            transcript_json(t) + "\n" + canonical_document(L));
    }
    node.transcript = std::move(t);
    return node;
}

CertTree certify_tree(const LabeledTriangulation& L, int depth, int root_vertex_count) {
    if (depth > root_vertex_count)
        contradiction(L, "recursion depth exceeded the vertex count of the input");
    CertTree tree;
    tree.digest = doc_digest(L);
    tree.node = dispatch(L, depth, root_vertex_count);
    return tree;
}

}  // namespace

Certificate certify(const LabeledTriangulation& L) {
    require_metric_flag(L);
    Certificate cert;
    cert.engine = kEngineVersion;
    cert.root = certify_tree(L, 0, L.vertex_count());
    return cert;
}

}  // namespace singer
