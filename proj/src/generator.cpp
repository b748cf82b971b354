#include "singer/generator.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <set>

#include "singer/coxeter.hpp"
#include "singer/rational.hpp"
#include "singer/reduction.hpp"

namespace singer {

namespace {

using Rng = std::mt19937_64;

// bounded draw; modulo bias is irrelevant here and keeps runs reproducible
// across platforms (mt19937_64 output is pinned by the standard)
int draw(Rng& rng, int n) { return static_cast<int>(rng() % static_cast<std::uint64_t>(n)); }

// Mutable flag triangulation used only during growth; no labels yet.
// apex[{a,b}] holds the third corners of the (at most two) faces at the
// edge, which doubles as the wedge structure for link walks.
struct MutableComplex {
    int nv = 0;
    std::vector<std::set<int>> adj;
    std::set<Triple> faces;
    std::map<Edge, std::vector<int>> apex;

    static Triple key(int a, int b, int c) {
        Triple t{a, b, c};
        std::sort(t.begin(), t.end());
        return t;
    }
    static Edge ekey(int a, int b) { return {std::min(a, b), std::max(a, b)}; }

    bool has_edge(int a, int b) const { return adj[a].count(b) != 0; }

    void add_face(int a, int b, int c) {
        faces.insert(key(a, b, c));
        const int vs[3] = {a, b, c};
        for (int i = 0; i < 3; ++i) {
            int u = vs[i], v = vs[(i + 1) % 3], other = vs[(i + 2) % 3];
            apex[ekey(u, v)].push_back(other);
            adj[u].insert(v);
            adj[v].insert(u);
        }
    }

    void remove_face(int a, int b, int c) {
        faces.erase(key(a, b, c));
        const int vs[3] = {a, b, c};
        for (int i = 0; i < 3; ++i) {
            int u = vs[i], v = vs[(i + 1) % 3], other = vs[(i + 2) % 3];
            auto& ap = apex[ekey(u, v)];
            ap.erase(std::find(ap.begin(), ap.end(), other));
            if (ap.empty()) {
                apex.erase(ekey(u, v));
                adj[u].erase(v);
                adj[v].erase(u);
            }
        }
    }

    std::vector<int> link_cycle(int v) const {
        if (adj[v].empty()) return {};
        const int start = *adj[v].begin();
        std::vector<int> cycle;
        int prev = -1, cur = start;
        do {
            cycle.push_back(cur);
            auto it = apex.find(ekey(v, cur));
            if (it == apex.end() || it->second.size() != 2) return {};
            int step = (it->second[0] == prev) ? it->second[1] : it->second[0];
            prev = cur;
            cur = step;
        } while (cur != start && cycle.size() <= adj[v].size());
        if (cycle.size() != adj[v].size()) return {};
        return cycle;
    }

    bool try_flip(int a, int b) {
        if (!has_edge(a, b)) return false;
        if (adj[a].size() < 5 || adj[b].size() < 5) return false;  // flag complexes have no valence 3
        auto it = apex.find(ekey(a, b));
        if (it == apex.end() || it->second.size() != 2) return false;
        const int c = it->second[0], d = it->second[1];
        if (has_edge(c, d)) return false;
        // the new edge c-d must build 3-cliques only with its two new faces
        std::vector<int> common;
        std::set_intersection(adj[c].begin(), adj[c].end(), adj[d].begin(), adj[d].end(),
                              std::back_inserter(common));
        for (int x : common)
            if (x != a && x != b) return false;
        remove_face(a, b, c);
        remove_face(a, b, d);
        add_face(a, c, d);
        add_face(b, c, d);
        return true;
    }

    // splits v along link positions i and i+d; returns the new vertex or -1
    int try_split(int v, int i, int d) {
        std::vector<int> cyc = link_cycle(v);
        const int k = static_cast<int>(cyc.size());
        if (k < 4 || d < 2 || d > k - 2) return -1;
        const int xi = cyc[i % k], xj = cyc[(i + d) % k];
        if (has_edge(xi, xj)) return -1;  // would create a non-face 3-clique

        const int w = nv++;
        adj.emplace_back();
        // remove the whole umbrella, then rebuild both halves
        for (int t = 0; t < k; ++t) remove_face(v, cyc[t], cyc[(t + 1) % k]);
        for (int t = i; (t % k) != (i + d) % k; ++t) add_face(v, cyc[t % k], cyc[(t + 1) % k]);
        for (int t = i + d; (t % k) != i % k; ++t) add_face(w, cyc[t % k], cyc[(t + 1) % k]);
        add_face(v, w, xi);
        add_face(v, w, xj);
        return w;
    }
};

MutableComplex icosahedron_topology() {
    MutableComplex m;
    m.nv = 12;
    m.adj.resize(12);
    const int F[20][3] = {{0, 1, 2},  {0, 2, 3},  {0, 3, 4},  {0, 4, 5},  {0, 5, 1},
                          {1, 2, 6},  {2, 6, 7},  {2, 3, 7},  {3, 7, 8},  {3, 4, 8},
                          {4, 8, 9},  {4, 5, 9},  {5, 9, 10}, {5, 1, 10}, {1, 10, 6},
                          {6, 7, 11}, {7, 8, 11}, {8, 9, 11}, {9, 10, 11}, {10, 6, 11}};
    for (const auto& f : F) m.add_face(f[0], f[1], f[2]);
    return m;
}

MutableComplex bipyramid_topology(int gon) {
    MutableComplex m;
    m.nv = gon + 2;
    m.adj.resize(m.nv);
    const int p = gon, q = gon + 1;
    for (int i = 0; i < gon; ++i) {
        m.add_face(p, i, (i + 1) % gon);
        m.add_face(q, i, (i + 1) % gon);
    }
    return m;
}

// ---- labeled working form ----------------------------------------------------

using NamePair = std::pair<std::string, std::string>;

NamePair name_pair(const std::string& a, const std::string& b) {
    return a < b ? NamePair{a, b} : NamePair{b, a};
}

struct Workspace {
    TriangulationData data;
    std::set<NamePair> frozen;
    Rng rng;
    std::uint64_t seed_for_messages = 0;

    int index_of(const std::string& name) const {
        for (int i = 0; i < static_cast<int>(data.vertex_names.size()); ++i)
            if (data.vertex_names[i] == name) return i;
        throw GenerationFailed("lost vertex " + name);
    }
    bool is_frozen(int a, int b) const {
        return frozen.count(name_pair(data.vertex_names[a], data.vertex_names[b])) != 0;
    }
    void freeze(int a, int b) { frozen.insert(name_pair(data.vertex_names[a], data.vertex_names[b])); }
};

std::map<Edge, int> label_map(const TriangulationData& d) {
    std::map<Edge, int> m;
    for (const auto& l : d.labels) m[{l[0], l[1]}] = l[2];
    return m;
}

void write_labels(TriangulationData& d, const std::map<Edge, int>& m) {
    d.labels.clear();
    for (const auto& [e, v] : m) d.labels.push_back({e[0], e[1], v});
}

// Lowers labels until every face has angle sum > pi.  Never touches frozen
// or protected edges; the caller guarantees a repairable configuration.
void repair_faces(Workspace& ws, const std::set<NamePair>& protected_edges) {
    std::map<Edge, int> labels = label_map(ws.data);
    auto protected_or_frozen = [&](int a, int b) {
        NamePair p = name_pair(ws.data.vertex_names[a], ws.data.vertex_names[b]);
        return ws.frozen.count(p) != 0 || protected_edges.count(p) != 0;
    };
    std::vector<Triple> faces;
    for (const auto& t : ws.data.triangles) {
        Triple s{t[0], t[1], t[2]};
        std::sort(s.begin(), s.end());
        faces.push_back(s);
    }
    std::sort(faces.begin(), faces.end());

    bool changed = true;
    while (changed) {
        changed = false;
        for (const Triple& f : faces) {
            const Edge es[3] = {{f[0], f[1]}, {f[0], f[2]}, {f[1], f[2]}};
            Rational sum = frac(1, labels[es[0]]) + frac(1, labels[es[1]]) + frac(1, labels[es[2]]);
            if (sum > 1) continue;
            // lower the largest free label one step toward 2
            int pick = -1;
            for (int i = 0; i < 3; ++i) {
                if (labels[es[i]] <= 2 || protected_or_frozen(es[i][0], es[i][1])) continue;
                if (pick == -1 || labels[es[i]] > labels[es[pick]]) pick = i;
            }
            if (pick == -1)
                throw GenerationFailed("face repair blocked by frozen labels (seed " +
                                       std::to_string(ws.seed_for_messages) + ")");
            labels[es[pick]] -= 1;
            changed = true;
        }
    }
    write_labels(ws.data, labels);
}

void assign_palette_labels(Workspace& ws, const std::vector<int>& palette) {
    std::map<Edge, int> labels;
    std::set<Edge> edges;
    for (const auto& t : ws.data.triangles) {
        Triple s{t[0], t[1], t[2]};
        std::sort(s.begin(), s.end());
        edges.insert({s[0], s[1]});
        edges.insert({s[0], s[2]});
        edges.insert({s[1], s[2]});
    }
    for (const Edge& e : edges) labels[e] = palette[draw(ws.rng, static_cast<int>(palette.size()))];
    write_labels(ws.data, labels);
    repair_faces(ws, {});
}

// ---- plants -------------------------------------------------------------------

std::array<int, 3> euclidean_triple(const std::vector<int>& palette, std::uint64_t seed) {
    bool has3 = std::count(palette.begin(), palette.end(), 3) != 0;
    bool has4 = std::count(palette.begin(), palette.end(), 4) != 0;
    bool has6 = std::count(palette.begin(), palette.end(), 6) != 0;
    if (has3 && has6) return {2, 3, 6};
    if (has3) return {3, 3, 3};
    if (has4) return {2, 4, 4};
    throw GenerationFailed("palette admits no Euclidean triangle (seed " + std::to_string(seed) + ")");
}

// prefabricated side for a 3-circuit plant: an octahedron with one face
// subdivided; the center is 3-Euclidean with the given seam labels
LabeledTriangulation three_plant_piece(Workspace& ws, const std::array<int, 3>& seam, int plant_index,
                                       const std::vector<int>& palette) {
    TriangulationData d;
    const std::string tag = "q" + std::to_string(plant_index) + "_";
    for (int i = 0; i < 7; ++i) d.vertex_names.push_back(tag + std::to_string(i));
    // octahedron: square 0-1-2-3, poles 4, 5; face (4,0,1) subdivided by 6
    const int F[7][3] = {{4, 1, 2}, {4, 2, 3}, {4, 3, 0}, {5, 0, 1}, {5, 1, 2}, {5, 2, 3}, {5, 3, 0}};
    for (const auto& f : F) d.triangles.push_back({f[0], f[1], f[2]});
    d.triangles.push_back({6, 4, 0});
    d.triangles.push_back({6, 0, 1});
    d.triangles.push_back({6, 1, 4});

    std::map<Edge, int> labels;
    auto set = [&](int a, int b, int m) { labels[{std::min(a, b), std::max(a, b)}] = m; };
    // seam triangle 4-0-1 carries the Euclidean triple
    set(4, 0, seam[0]);
    set(0, 1, seam[1]);
    set(1, 4, seam[2]);
    set(6, 4, 2);
    set(6, 0, 2);
    set(6, 1, 2);
    for (const Edge& e : std::vector<Edge>{{0, 3}, {1, 2}, {2, 3}, {2, 4}, {3, 4}, {0, 5}, {1, 5}, {2, 5}, {3, 5}})
        set(e[0], e[1], palette[draw(ws.rng, static_cast<int>(palette.size()))]);
    write_labels(d, labels);

    Workspace piece{std::move(d), {}, ws.rng, ws.seed_for_messages};
    std::set<NamePair> keep;
    for (const Edge& e : std::vector<Edge>{{0, 4}, {0, 1}, {1, 4}, {4, 6}, {0, 6}, {1, 6}})
        keep.insert(name_pair(piece.data.vertex_names[e[0]], piece.data.vertex_names[e[1]]));
    repair_faces(piece, keep);
    ws.rng = piece.rng;
    return LabeledTriangulation::build(std::move(piece.data));
}

// prefabricated side for a 4-circuit plant: a hexagonal bipyramid whose
// equator vertex 0 is 4-Euclidean
LabeledTriangulation four_plant_piece(Workspace& ws, int plant_index, const std::vector<int>& palette) {
    TriangulationData d;
    const std::string tag = "q" + std::to_string(plant_index) + "_";
    for (int i = 0; i < 8; ++i) d.vertex_names.push_back(tag + std::to_string(i));
    const int p = 6, q = 7;
    for (int i = 0; i < 6; ++i) {
        d.triangles.push_back({p, i, (i + 1) % 6});
        d.triangles.push_back({q, i, (i + 1) % 6});
    }
    std::map<Edge, int> labels;
    auto set = [&](int a, int b, int m) { labels[{std::min(a, b), std::max(a, b)}] = m; };
    // link of 0 is (1, p, 5, q); its edges must all be 2
    set(1, p, 2);
    set(5, p, 2);
    set(1, q, 2);
    set(5, q, 2);
    for (int i = 0; i < 6; ++i) {
        set(i, (i + 1) % 6, palette[draw(ws.rng, static_cast<int>(palette.size()))]);
        if (i != 1 && i != 5) {
            set(i, p, palette[draw(ws.rng, static_cast<int>(palette.size()))]);
            set(i, q, palette[draw(ws.rng, static_cast<int>(palette.size()))]);
        }
    }
    write_labels(d, labels);

    Workspace piece{std::move(d), {}, ws.rng, ws.seed_for_messages};
    std::set<NamePair> keep;
    for (const Edge& e : std::vector<Edge>{{1, p}, {5, p}, {1, q}, {5, q}})
        keep.insert(name_pair(piece.data.vertex_names[e[0]], piece.data.vertex_names[e[1]]));
    repair_faces(piece, keep);
    ws.rng = piece.rng;
    return LabeledTriangulation::build(std::move(piece.data));
}

bool seam_is_planted(const LabeledTriangulation& L, const std::vector<std::string>& seam_names,
                     EmptyEuclideanCircuit::Kind kind) {
    std::set<int> want;
    for (const auto& name : seam_names) {
        bool found = false;
        for (int v = 0; v < L.vertex_count(); ++v)
            if (L.name(v) == name) {
                want.insert(v);
                found = true;
            }
        if (!found) return false;
    }
    for (const EmptyEuclideanCircuit& c : find_empty_euclidean_circuits(L)) {
        if (c.kind != kind) continue;
        std::set<int> got(c.cycle.vertices.begin(), c.cycle.vertices.end());
        if (got == want) return true;
    }
    return false;
}

// subdivides face (x,y,z) with a fresh 3-Euclidean center and merges the
// prefabricated piece in; returns false when the site is unusable
bool plant_three(Workspace& ws, int plant_index, const std::vector<int>& palette) {
    const std::array<int, 3> seam_labels = euclidean_triple(palette, ws.seed_for_messages);
    LabeledTriangulation L = LabeledTriangulation::build(ws.data);

    const int nf = L.triangle_count();
    const int start = draw(ws.rng, nf);
    for (int probe = 0; probe < nf; ++probe) {
        const Triple t = L.triangles()[(start + probe) % nf];
        const int x = t[0], y = t[1], z = t[2];
        if (ws.is_frozen(x, y) || ws.is_frozen(y, z) || ws.is_frozen(x, z)) continue;
        // the outside faces around the seam must keep two free edges each
        bool ok = true;
        for (const Triple& f : L.triangles()) {
            if (f == t) continue;
            int shared = 0;
            for (int v : f) shared += (v == x || v == y || v == z);
            if (shared < 2) continue;
            for (int i = 0; i < 3 && ok; ++i)
                for (int j = i + 1; j < 3; ++j)
                    if (ws.is_frozen(f[i], f[j])) ok = false;
        }
        if (!ok) continue;

        TriangulationData d = ws.data;
        const int u = static_cast<int>(d.vertex_names.size());
        d.vertex_names.push_back("c" + std::to_string(plant_index));
        std::erase_if(d.triangles, [&](const std::array<int, 3>& f) {
            std::array<int, 3> s = f;
            std::sort(s.begin(), s.end());
            return s == std::array<int, 3>{x, y, z};
        });
        d.triangles.push_back({u, x, y});
        d.triangles.push_back({u, y, z});
        d.triangles.push_back({u, z, x});
        std::map<Edge, int> labels = label_map(d);
        labels[{std::min(x, y), std::max(x, y)}] = seam_labels[0];
        labels[{std::min(y, z), std::max(y, z)}] = seam_labels[1];
        labels[{std::min(x, z), std::max(x, z)}] = seam_labels[2];
        labels[{std::min(u, x), std::max(u, x)}] = 2;
        labels[{std::min(u, y), std::max(u, y)}] = 2;
        labels[{std::min(u, z), std::max(u, z)}] = 2;
        write_labels(d, labels);

        Workspace trial{std::move(d), ws.frozen, ws.rng, ws.seed_for_messages};
        std::set<NamePair> keep;
        for (const Edge& e : std::vector<Edge>{{x, y}, {y, z}, {x, z}, {u, x}, {u, y}, {u, z}})
            keep.insert(name_pair(trial.data.vertex_names[e[0]], trial.data.vertex_names[e[1]]));
        try {
            repair_faces(trial, keep);
            LabeledTriangulation L1 = LabeledTriangulation::build(trial.data);
            if (!metric_flag_check(L1).pass) continue;
            LabeledTriangulation piece = three_plant_piece(trial, seam_labels, plant_index, palette);
            LabeledTriangulation merged =
                merge_along_euclidean_vertices(L1, u, piece, piece.vertex_count() - 1);
            if (!metric_flag_check(merged).pass) continue;
            std::vector<std::string> seam_names{L1.name(x), L1.name(y), L1.name(z)};
            if (!seam_is_planted(merged, seam_names, EmptyEuclideanCircuit::Kind::Three)) continue;
            ws.data = merged.data();
            ws.rng = trial.rng;
            ws.freeze(ws.index_of(seam_names[0]), ws.index_of(seam_names[1]));
            ws.freeze(ws.index_of(seam_names[1]), ws.index_of(seam_names[2]));
            ws.freeze(ws.index_of(seam_names[0]), ws.index_of(seam_names[2]));
            return true;
        } catch (const Error&) {
            continue;
        }
    }
    return false;
}

// subdivides an edge into a fresh 4-Euclidean vertex and merges the
// prefabricated piece in
bool plant_four(Workspace& ws, int plant_index, const std::vector<int>& palette) {
    LabeledTriangulation L = LabeledTriangulation::build(ws.data);
    const int ne = L.edge_count();
    const int start = draw(ws.rng, ne);
    for (int probe = 0; probe < ne; ++probe) {
        const Edge e = L.edges()[(start + probe) % ne];
        const int a = e[0], b = e[1];
        if (ws.is_frozen(a, b)) continue;
        // apexes of the two faces at (a, b)
        std::vector<int> ap;
        for (const Triple& t : L.triangles()) {
            int hit = 0;
            for (int v : t) hit += (v == a || v == b);
            if (hit == 2 && std::count(t.begin(), t.end(), a) && std::count(t.begin(), t.end(), b))
                for (int v : t)
                    if (v != a && v != b) ap.push_back(v);
        }
        if (ap.size() != 2) continue;
        const int c = std::min(ap[0], ap[1]), d0 = std::max(ap[0], ap[1]);
        if (L.adjacent(c, d0)) continue;  // would create a spherical 4-clique
        if (ws.is_frozen(a, c) || ws.is_frozen(c, b) || ws.is_frozen(b, d0) || ws.is_frozen(d0, a)) continue;

        TriangulationData d = ws.data;
        const int u = static_cast<int>(d.vertex_names.size());
        d.vertex_names.push_back("c" + std::to_string(plant_index));
        // drop the two faces at (a, b); the edge itself disappears with them
        d.triangles.clear();
        for (const Triple& t : L.triangles()) {
            const bool at_ab = std::count(t.begin(), t.end(), a) && std::count(t.begin(), t.end(), b);
            if (!at_ab) d.triangles.push_back({t[0], t[1], t[2]});
        }
        d.triangles.push_back({u, a, c});
        d.triangles.push_back({u, c, b});
        d.triangles.push_back({u, b, d0});
        d.triangles.push_back({u, d0, a});
        std::map<Edge, int> labels = label_map(ws.data);
        labels.erase({a, b});
        for (int x : {a, b, c, d0}) labels[{std::min(u, x), std::max(u, x)}] = 2;
        for (const Edge& le : std::vector<Edge>{{a, c}, {c, b}, {b, d0}, {d0, a}})
            labels[{std::min(le[0], le[1]), std::max(le[0], le[1])}] = 2;
        write_labels(d, labels);

        Workspace trial{std::move(d), ws.frozen, ws.rng, ws.seed_for_messages};
        try {
            LabeledTriangulation L1 = LabeledTriangulation::build(trial.data);
            if (!metric_flag_check(L1).pass) continue;
            LabeledTriangulation piece = four_plant_piece(trial, plant_index, palette);
            LabeledTriangulation merged = merge_along_euclidean_vertices(L1, u, piece, 0);
            if (!metric_flag_check(merged).pass) continue;
            std::vector<std::string> seam_names{L1.name(a), L1.name(c), L1.name(b), L1.name(d0)};
            if (!seam_is_planted(merged, seam_names, EmptyEuclideanCircuit::Kind::Four)) continue;
            ws.data = merged.data();
            ws.rng = trial.rng;
            ws.freeze(ws.index_of(seam_names[0]), ws.index_of(seam_names[1]));
            ws.freeze(ws.index_of(seam_names[1]), ws.index_of(seam_names[2]));
            ws.freeze(ws.index_of(seam_names[2]), ws.index_of(seam_names[3]));
            ws.freeze(ws.index_of(seam_names[3]), ws.index_of(seam_names[0]));
            return true;
        } catch (const Error&) {
            continue;
        }
    }
    return false;
}

LabeledTriangulation rename_canonically(const LabeledTriangulation& L) {
    TriangulationData d = L.data();
    for (int i = 0; i < static_cast<int>(d.vertex_names.size()); ++i)
        d.vertex_names[i] = "v" + std::to_string(i);
    return LabeledTriangulation::build(std::move(d));
}

LabeledTriangulation generate_once(const GeneratorConfig& config, std::uint64_t attempt_seed) {
    Rng rng(attempt_seed);
    const int plants = config.plant3 + config.plant4;
    const int base = config.target_vertices - 3 * plants;
    if (config.target_vertices < 5)
        throw GenerationFailed("target vertex count below feasibility (seed " +
                               std::to_string(config.seed) + ")");
    if (base < 6)
        throw GenerationFailed("target too small for the requested plants (seed " +
                               std::to_string(config.seed) + ")");
    if (config.palette.empty()) throw GenerationFailed("empty palette");
    for (int m : config.palette)
        if (m < 2 || m > Label::kMaxLabel) throw GenerationFailed("palette label out of range");

    // topology growth
    MutableComplex m = base >= 12 ? icosahedron_topology() : bipyramid_topology(base - 2);
    {
        int stall = 0;
        while (m.nv < base && stall < 4000) {
            const int move = draw(rng, 10);
            bool progressed = false;
            if (move < 3) {
                // flip for variety; vertex count unchanged
                int a = draw(rng, m.nv);
                if (!m.adj[a].empty()) {
                    std::vector<int> nb(m.adj[a].begin(), m.adj[a].end());
                    m.try_flip(a, nb[draw(rng, static_cast<int>(nb.size()))]);
                }
            } else {
                int v = draw(rng, m.nv);
                std::vector<int> cyc = m.link_cycle(v);
                const int k = static_cast<int>(cyc.size());
                if (k >= 4) {
                    int i = draw(rng, k);
                    int d = 2 + draw(rng, k - 3);
                    progressed = m.try_split(v, i, d) != -1;
                }
            }
            stall = progressed ? 0 : stall + 1;
        }
        if (m.nv != base)
            throw GenerationFailed("growth stalled at " + std::to_string(m.nv) + " vertices (seed " +
                                   std::to_string(config.seed) + ")");
    }

    Workspace ws;
    ws.rng = rng;
    ws.seed_for_messages = config.seed;
    for (int i = 0; i < m.nv; ++i) ws.data.vertex_names.push_back("g" + std::to_string(i));
    for (const Triple& t : m.faces) ws.data.triangles.push_back({t[0], t[1], t[2]});
    assign_palette_labels(ws, config.palette);
    {
        LabeledTriangulation L = LabeledTriangulation::build(ws.data);
        if (!metric_flag_check(L).pass)
            throw GenerationFailed("grown complex is not metric flag (seed " +
                                   std::to_string(config.seed) + ")");
    }

    int plant_counter = 0;
    for (int i = 0; i < config.plant3; ++i)
        if (!plant_three(ws, plant_counter++, config.palette))
            throw GenerationFailed("no viable site for a 3-circuit plant (seed " +
                                   std::to_string(config.seed) + ")");
    for (int i = 0; i < config.plant4; ++i)
        if (!plant_four(ws, plant_counter++, config.palette))
            throw GenerationFailed("no viable site for a 4-circuit plant (seed " +
                                   std::to_string(config.seed) + ")");

    LabeledTriangulation result = rename_canonically(LabeledTriangulation::build(ws.data));
    if (!metric_flag_check(result).pass)
        throw GenerationFailed("final complex is not metric flag (seed " + std::to_string(config.seed) + ")");
    if (result.vertex_count() != config.target_vertices)
        throw GenerationFailed("vertex accounting drifted (seed " + std::to_string(config.seed) + ")");
    return result;
}

}  // namespace

LabeledTriangulation generate(const GeneratorConfig& config) {
    std::string last;
    for (std::uint64_t attempt = 0; attempt < 8; ++attempt) {
        try {
            return generate_once(config, config.seed * 0x9e3779b97f4a7c15ULL + attempt + 1);
        } catch (const GenerationFailed& e) {
            last = e.what();
            // infeasible configurations cannot be retried away
            std::string msg = e.what();
            if (msg.find("feasibility") != std::string::npos || msg.find("too small") != std::string::npos ||
                msg.find("palette") != std::string::npos)
                throw;
        }
    }
    throw GenerationFailed(last.empty() ? "generation failed" : last);
}

}  // namespace singer
