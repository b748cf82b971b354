#include "singer/reduction.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "singer/coxeter.hpp"
#include "singer/rational.hpp"

namespace singer {

std::string to_string(VertexClass c) {
    switch (c) {
        case VertexClass::NotEuclidean: return "NotEuclidean";
        case VertexClass::Euclid3: return "Euclid3";
        case VertexClass::Euclid4: return "Euclid4";
    }
    throw Error("bad vertex class");
}

VertexClass classify_vertex(const LabeledTriangulation& L, int v) {
    L.require_vertex(v);
    const std::vector<int>& cyc = L.link_cycle(v);
    if (cyc.size() == 3) {
        Rational sum = frac(1, L.finite_label(cyc[0], cyc[1])) + frac(1, L.finite_label(cyc[1], cyc[2])) +
                       frac(1, L.finite_label(cyc[2], cyc[0]));
        return sum == 1 ? VertexClass::Euclid3 : VertexClass::NotEuclidean;
    }
    if (cyc.size() == 4) {
        for (int i = 0; i < 4; ++i)
            if (L.finite_label(cyc[i], cyc[(i + 1) % 4]) != 2) return VertexClass::NotEuclidean;
        return VertexClass::Euclid4;
    }
    return VertexClass::NotEuclidean;
}

std::vector<int> euclidean_vertices(const LabeledTriangulation& L) {
    std::vector<int> t;
    for (int v = 0; v < L.vertex_count(); ++v)
        if (classify_vertex(L, v) != VertexClass::NotEuclidean) t.push_back(v);
    return t;
}

namespace {

// Cuts the sphere along a circuit: faces are connected across every edge not
// on the circuit; a simple closed curve leaves exactly two components.
// Returns the two off-circuit vertex sets, sorted.
std::pair<std::vector<int>, std::vector<int>> circuit_sides(const LabeledTriangulation& L,
                                                            const std::vector<int>& cycle) {
    const int k = static_cast<int>(cycle.size());
    std::set<Edge> cut;
    for (int i = 0; i < k; ++i) {
        int a = cycle[i], b = cycle[(i + 1) % k];
        if (a > b) std::swap(a, b);
        cut.insert({a, b});
    }

    const auto& tris = L.triangles();
    std::map<Edge, std::vector<int>> by_edge;
    for (int f = 0; f < static_cast<int>(tris.size()); ++f) {
        const Triple& t = tris[f];
        by_edge[{t[0], t[1]}].push_back(f);
        by_edge[{t[0], t[2]}].push_back(f);
        by_edge[{t[1], t[2]}].push_back(f);
    }

    std::vector<int> comp(tris.size(), -1);
    int n_comp = 0;
    for (int seed = 0; seed < static_cast<int>(tris.size()); ++seed) {
        if (comp[seed] != -1) continue;
        if (n_comp == 2) throw Error("circuit does not separate the sphere into two disks");
        std::vector<int> stack{seed};
        comp[seed] = n_comp;
        while (!stack.empty()) {
            int f = stack.back();
            stack.pop_back();
            const Triple& t = tris[f];
            for (const Edge& e : {Edge{t[0], t[1]}, Edge{t[0], t[2]}, Edge{t[1], t[2]}}) {
                if (cut.count(e)) continue;
                for (int g : by_edge[e])
                    if (comp[g] == -1) {
                        comp[g] = n_comp;
                        stack.push_back(g);
                    }
            }
        }
        ++n_comp;
    }
    if (n_comp != 2) throw Error("circuit does not separate the sphere into two disks");

    std::set<int> on_cycle(cycle.begin(), cycle.end());
    std::set<int> s1, s2;
    for (int f = 0; f < static_cast<int>(tris.size()); ++f)
        for (int v : tris[f])
            if (!on_cycle.count(v)) (comp[f] == 0 ? s1 : s2).insert(v);
    // deterministic: side1 holds the smallest off-circuit vertex
    std::vector<int> a(s1.begin(), s1.end()), b(s2.begin(), s2.end());
    if (a.empty() || (!b.empty() && b.front() < a.front())) std::swap(a, b);
    return {a, b};
}

bool circuit_is_euclidean_three(const LabeledTriangulation& L, const Triple& t) {
    if (L.has_triangle(t[0], t[1], t[2])) return false;  // faces are spherical under metric flagness
    Rational sum = frac(1, L.finite_label(t[0], t[1])) + frac(1, L.finite_label(t[1], t[2])) +
                   frac(1, L.finite_label(t[0], t[2]));
    return sum == 1;
}

}  // namespace

std::vector<EmptyEuclideanCircuit> find_empty_euclidean_circuits(const LabeledTriangulation& L) {
    std::vector<EmptyEuclideanCircuit> out;

    for (const Triple& t : enumerate_cliques3(L)) {
        if (!circuit_is_euclidean_three(L, t)) continue;
        auto [s1, s2] = circuit_sides(L, {t[0], t[1], t[2]});
        // "not the link of a vertex": neither side is a single vertex
        if (s1.size() < 2 || s2.size() < 2) continue;
        EmptyEuclideanCircuit c;
        c.kind = EmptyEuclideanCircuit::Kind::Three;
        c.cycle = canonical_cycle(L, {t[0], t[1], t[2]});
        c.side1 = std::move(s1);
        c.side2 = std::move(s2);
        out.push_back(std::move(c));
    }

    for (const CycleWithLabels& cyc : enumerate_chordless_4_circuits(L)) {
        bool all_two = std::all_of(cyc.labels.begin(), cyc.labels.end(), [](int m) { return m == 2; });
        if (!all_two) continue;
        auto [s1, s2] = circuit_sides(L, cyc.vertices);
        // chordlessness already rules out bounding two adjacent triangles
        if (s1.size() < 2 || s2.size() < 2) continue;
        EmptyEuclideanCircuit c;
        c.kind = EmptyEuclideanCircuit::Kind::Four;
        c.cycle = cyc;
        c.side1 = std::move(s1);
        c.side2 = std::move(s2);
        out.push_back(std::move(c));
    }
    // 3-circuits first (already true: cliques pass precedes circuits pass);
    // within a kind the enumerations are lexicographic already
    return out;
}

namespace {

std::string fresh_cap_name(const std::vector<std::string>& taken) {
    std::set<std::string> names(taken.begin(), taken.end());
    std::string base = "@cap";
    if (!names.count(base)) return base;
    for (int i = 1;; ++i) {
        std::string cand = base + std::to_string(i);
        if (!names.count(cand)) return cand;
    }
}

LabeledTriangulation cap_side(const LabeledTriangulation& L, const EmptyEuclideanCircuit& c,
                              const std::vector<int>& side, int* cap_index) {
    std::set<int> keep(side.begin(), side.end());
    keep.insert(c.cycle.vertices.begin(), c.cycle.vertices.end());

    std::vector<int> old_ids(keep.begin(), keep.end());
    std::map<int, int> to_new;
    TriangulationData d;
    for (int v : old_ids) {
        to_new[v] = static_cast<int>(d.vertex_names.size());
        d.vertex_names.push_back(L.name(v));
    }
    const int cap = static_cast<int>(d.vertex_names.size());
    d.vertex_names.push_back(fresh_cap_name(d.vertex_names));

    std::set<int> side_set(side.begin(), side.end());
    for (const Triple& t : L.triangles()) {
        // a face belongs to this side iff all corners are kept and at least
        // one lies strictly inside (faces spanned by the circuit alone do
        // not exist: 3-circuits here are non-faces, 4-circuits chordless)
        if (!keep.count(t[0]) || !keep.count(t[1]) || !keep.count(t[2])) continue;
        if (!side_set.count(t[0]) && !side_set.count(t[1]) && !side_set.count(t[2])) continue;
        d.triangles.push_back({to_new[t[0]], to_new[t[1]], to_new[t[2]]});
    }
    const int k = c.cycle.size();
    for (int i = 0; i < k; ++i)
        d.triangles.push_back({to_new[c.cycle.vertices[i]], to_new[c.cycle.vertices[(i + 1) % k]], cap});

    // inherited labels: every edge of the capped side present in L
    std::set<Edge> edges;
    for (const auto& t : d.triangles) {
        std::array<int, 3> s = t;
        std::sort(s.begin(), s.end());
        edges.insert({s[0], s[1]});
        edges.insert({s[0], s[2]});
        edges.insert({s[1], s[2]});
    }
    std::map<int, int> to_old;
    for (const auto& [o, nw] : to_new) to_old[nw] = o;
    for (const Edge& e : edges) {
        int m;
        if (e[1] == cap || e[0] == cap)
            m = 2;  // cone edges are labeled 2
        else
            m = L.finite_label(to_old[e[0]], to_old[e[1]]);
        d.labels.push_back({e[0], e[1], m});
    }
    *cap_index = cap;
    return LabeledTriangulation::build(std::move(d));
}

}  // namespace

SplitResult split_along_circuit(const LabeledTriangulation& L, const EmptyEuclideanCircuit& c) {
    // re-derive and compare: guards against hand-built circuits
    std::vector<EmptyEuclideanCircuit> all = find_empty_euclidean_circuits(L);
    bool found = false;
    for (const auto& x : all)
        if (x.kind == c.kind && x.cycle == c.cycle) {
            if (x.side1 != c.side1 || x.side2 != c.side2)
                throw NotEmptyCircuit("circuit sides do not match the complex");
            found = true;
            break;
        }
    if (!found) throw NotEmptyCircuit("not an empty Euclidean circuit of this complex");

    int cap1 = -1, cap2 = -1;
    LabeledTriangulation first = cap_side(L, c, c.side1, &cap1);
    LabeledTriangulation second = cap_side(L, c, c.side2, &cap2);
    return SplitResult{std::move(first), std::move(second), cap1, cap2};
}

LabeledTriangulation merge_along_euclidean_vertices(const LabeledTriangulation& L1, int s1,
                                                    const LabeledTriangulation& L2, int s2) {
    if (classify_vertex(L1, s1) == VertexClass::NotEuclidean ||
        classify_vertex(L2, s2) == VertexClass::NotEuclidean)
        throw PreconditionViolated("merge endpoints must be Euclidean vertices");

    const std::vector<int>& c1 = L1.link_cycle(s1);
    const std::vector<int>& c2 = L2.link_cycle(s2);
    const int k = static_cast<int>(c1.size());
    if (static_cast<int>(c2.size()) != k) throw LinkMismatch("link cycles have different lengths");

    auto lab1 = [&](int i) { return L1.finite_label(c1[i % k], c1[(i + 1) % k]); };
    auto lab2 = [&](int i) { return L2.finite_label(c2[i % k], c2[(i + 1) % k]); };

    // first labeled isomorphism in cyclic order: rotations, then reflections
    std::vector<int> match;  // match[i] = position in c2 identified with c1[i]
    for (int dir : {+1, -1}) {
        for (int off = 0; off < k && match.empty(); ++off) {
            bool ok = true;
            for (int i = 0; i < k && ok; ++i) {
                int e2 = dir == 1 ? off + i : (off - i - 1 + 2 * k);
                if (lab1(i) != lab2(e2 % k)) ok = false;
            }
            if (ok) {
                match.resize(k);
                for (int i = 0; i < k; ++i) match[i] = ((dir == 1 ? off + i : off - i + 2 * k)) % k;
            }
        }
        if (!match.empty()) break;
    }
    if (match.empty()) throw LinkMismatch("no labeled isomorphism between the two link cycles");

    // assemble: L1 minus star(s1), then L2 minus star(s2) with the seam identified
    TriangulationData d;
    std::map<int, int> id1, id2;
    std::set<std::string> used;
    auto add_vertex = [&](const std::string& name) {
        std::string n = name;
        while (used.count(n)) n += "'";
        used.insert(n);
        d.vertex_names.push_back(n);
        return static_cast<int>(d.vertex_names.size()) - 1;
    };
    for (int v = 0; v < L1.vertex_count(); ++v)
        if (v != s1) id1[v] = add_vertex(L1.name(v));
    for (int i = 0; i < k; ++i) id2[c2[match[i]]] = id1[c1[i]];
    for (int v = 0; v < L2.vertex_count(); ++v)
        if (v != s2 && !id2.count(v)) id2[v] = add_vertex(L2.name(v));

    for (const Triple& t : L1.triangles())
        if (t[0] != s1 && t[1] != s1 && t[2] != s1) d.triangles.push_back({id1[t[0]], id1[t[1]], id1[t[2]]});
    for (const Triple& t : L2.triangles())
        if (t[0] != s2 && t[1] != s2 && t[2] != s2) d.triangles.push_back({id2[t[0]], id2[t[1]], id2[t[2]]});

    std::map<Edge, int> labels;
    auto put_label = [&](int a, int b, int m) {
        Edge e{std::min(a, b), std::max(a, b)};
        auto it = labels.find(e);
        if (it != labels.end() && it->second != m) throw DegenerateGlue("conflicting labels across the seam");
        labels[e] = m;
    };
    for (const Edge& e : L1.edges())
        if (e[0] != s1 && e[1] != s1) put_label(id1[e[0]], id1[e[1]], L1.finite_label(e[0], e[1]));
    for (const Edge& e : L2.edges())
        if (e[0] != s2 && e[1] != s2) put_label(id2[e[0]], id2[e[1]], L2.finite_label(e[0], e[1]));
    for (const auto& [e, m] : labels) d.labels.push_back({e[0], e[1], m});

    try {
        return LabeledTriangulation::build(std::move(d));
    } catch (const SchemaError& e) {
        throw DegenerateGlue(std::string("glue result is degenerate: ") + e.what());
    } catch (const TopologyError& e) {
        throw DegenerateGlue(std::string("glue result is degenerate: ") + e.what());
    }
}

std::variant<ReducedComplex, L6Overlap> reduce_stars(const LabeledTriangulation& L,
                                                     const std::vector<int>& T) {
    std::set<int> removed(T.begin(), T.end());
    for (int v : T) {
        if (classify_vertex(L, v) == VertexClass::NotEuclidean)
            throw PreconditionViolated("vertex " + L.name(v) + " is not Euclidean");
        for (int u : L.neighbors(v))
            if (removed.count(u))
                throw AdjacentEuclideanVertices("Euclidean vertices " + L.name(v) + " and " + L.name(u) +
                                                " are adjacent");
    }

    CellComplexData d;
    std::vector<int> kept;
    std::map<int, int> to_new;
    for (int v = 0; v < L.vertex_count(); ++v) {
        if (removed.count(v)) continue;
        to_new[v] = static_cast<int>(d.vertex_names.size());
        d.vertex_names.push_back(L.name(v));
        kept.push_back(v);
    }

    std::vector<Cell> added;
    for (int v : T) {
        const std::vector<int>& cyc = L.link_cycle(v);
        Cell c;
        for (int u : cyc) c.corners.push_back(to_new.at(u));
        c.corners = canonical_corners(std::move(c.corners));
        c.origin = cyc.size() == 3 ? CellOrigin::AddedTriangle : CellOrigin::AddedSquare;
        added.push_back(std::move(c));
    }

    // two added squares sharing two adjacent edges: the L6 configuration
    for (size_t i = 0; i < added.size(); ++i) {
        for (size_t j = i + 1; j < added.size(); ++j) {
            if (added[i].size() != 4 || added[j].size() != 4) continue;
            std::vector<int> a = added[i].corners, b = added[j].corners;
            std::sort(a.begin(), a.end());
            std::sort(b.begin(), b.end());
            std::vector<int> shared;
            std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(shared));
            if (shared.size() != 3) continue;
            // any 3 corners of a 4-cycle form a path of two edges; the L6
            // configuration is the one where both squares share the *same*
            // two edges, i.e. the path middles agree
            auto path_middle = [&](const Cell& c) {
                for (int t = 0; t < 4; ++t) {
                    int prev = c.corners[(t + 3) % 4], cur = c.corners[t], next = c.corners[(t + 1) % 4];
                    if (std::count(shared.begin(), shared.end(), prev) &&
                        std::count(shared.begin(), shared.end(), cur) &&
                        std::count(shared.begin(), shared.end(), next))
                        return cur;
                }
                return -1;
            };
            int mid_i = path_middle(added[i]);
            int mid_j = path_middle(added[j]);
            if (mid_i == -1 || mid_i != mid_j) continue;  // not the L6 pattern; build will reject it
            L6Overlap o;
            o.removed1 = T[i];
            o.removed2 = T[j];
            int t_new = -1, b_new = -1;
            for (int s : shared)
                if (s != mid_i) (t_new == -1 ? t_new : b_new) = s;
            o.shared_path = {kept[t_new], kept[mid_i], kept[b_new]};
            return o;
        }
    }

    for (const Triple& t : L.triangles())
        if (!removed.count(t[0]) && !removed.count(t[1]) && !removed.count(t[2]))
            d.cells.push_back({{to_new[t[0]], to_new[t[1]], to_new[t[2]]}, CellOrigin::OriginalTriangle});
    for (Cell& c : added) d.cells.push_back(std::move(c));

    for (const Edge& e : L.edges())
        if (!removed.count(e[0]) && !removed.count(e[1]))
            d.labels.push_back({std::min(to_new[e[0]], to_new[e[1]]), std::max(to_new[e[0]], to_new[e[1]]),
                                L.finite_label(e[0], e[1])});

    try {
        ReducedComplex r{LabeledCellComplex::build(std::move(d)), std::move(kept)};
        return r;
    } catch (const Error& e) {
        throw PreconditionViolated(std::string("star replacement is not well defined here: ") + e.what());
    }
}

std::optional<L6Witness> recognize_L6(const LabeledTriangulation& L) {
    std::optional<Suspension> s = recognize_suspension(L);
    if (!s || s->gon() != 6) return std::nullopt;
    const std::vector<int>& hex = s->equator.vertices;
    for (int i = 0; i < 6; ++i) {
        int a = hex[i], mid = hex[(i + 1) % 6], b = hex[(i + 2) % 6];
        if (classify_vertex(L, a) != VertexClass::Euclid4) continue;
        if (classify_vertex(L, b) != VertexClass::Euclid4) continue;
        L6Witness w;
        w.poles = {s->pole_a, s->pole_b};
        w.hexagon = hex;
        w.s1 = a;
        w.s2 = b;
        w.middle = mid;
        return w;
    }
    return std::nullopt;
}

}  // namespace singer
