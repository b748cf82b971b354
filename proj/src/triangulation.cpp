#include "singer/triangulation.hpp"

#include <algorithm>
#include <map>
#include <nlohmann/json.hpp>
#include <set>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace singer {

using detail::edge_key;
using detail::triple_key;
using json = nlohmann::json;

namespace {

std::string edge_str(const LabeledTriangulation& L, int a, int b) {
    return "{" + L.name(a) + "," + L.name(b) + "}";
}

// Walks the link edges of one vertex into a single cycle; throws if the
// incident triangles do not close up into one umbrella.
std::vector<int> walk_link_cycle(int v, const std::vector<Edge>& opposite, int valence) {
    std::map<int, std::vector<int>> next;
    for (const Edge& e : opposite) {
        next[e[0]].push_back(e[1]);
        next[e[1]].push_back(e[0]);
    }
    if (static_cast<int>(next.size()) != valence)
        throw TopologyError("link of vertex #" + std::to_string(v) + " is not a cycle");
    for (auto& [u, partners] : next) {
        if (partners.size() != 2)
            throw TopologyError("link of vertex #" + std::to_string(v) +
                                " is not a cycle at neighbor #" + std::to_string(u));
        std::sort(partners.begin(), partners.end());
    }

    const int start = next.begin()->first;
    std::vector<int> cycle;
    cycle.reserve(valence);
    int prev = -1;
    int cur = start;
    // canonical orientation: leave the smallest neighbour toward its smaller partner
    int fwd = next[start][0];
    while (true) {
        cycle.push_back(cur);
        int step = fwd;
        if (prev != -1) {
            const auto& p = next[cur];
            step = (p[0] == prev) ? p[1] : p[0];
        }
        prev = cur;
        cur = step;
        if (cur == start) break;
        if (static_cast<int>(cycle.size()) > valence)
            throw TopologyError("link of vertex #" + std::to_string(v) + " is not a single cycle");
    }
    if (static_cast<int>(cycle.size()) != valence)
        throw TopologyError("link of vertex #" + std::to_string(v) + " has more than one cycle");
    return cycle;
}

}  // namespace

void LabeledTriangulation::require_vertex(int v) const {
    if (!has_vertex(v)) throw UnknownVertex("no vertex with index " + std::to_string(v));
}

const std::vector<int>& LabeledTriangulation::neighbors(int v) const {
    require_vertex(v);
    return adj_[v];
}

bool LabeledTriangulation::adjacent(int u, int v) const {
    require_vertex(u);
    require_vertex(v);
    if (u == v) return false;
    return label_by_edge_.count(edge_key(u, v)) != 0;
}

bool LabeledTriangulation::has_triangle(int a, int b, int c) const {
    std::array<int, 3> t{a, b, c};
    std::sort(t.begin(), t.end());
    return triangle_keys_.count(triple_key(t[0], t[1], t[2])) != 0;
}

Label LabeledTriangulation::label(int u, int v) const {
    require_vertex(u);
    require_vertex(v);
    auto it = label_by_edge_.find(edge_key(u, v));
    if (it == label_by_edge_.end()) return Label::infinite();
    return Label::finite(it->second);
}

int LabeledTriangulation::finite_label(int u, int v) const { return label(u, v).value(); }

const std::vector<int>& LabeledTriangulation::link_cycle(int v) const {
    require_vertex(v);
    return links_[v];
}

LabeledTriangulation LabeledTriangulation::build(TriangulationData data) {
    LabeledTriangulation L;
    const int n = static_cast<int>(data.vertex_names.size());
    if (n == 0) throw SchemaError("vertex list is empty");
    {
        std::set<std::string> seen;
        for (const auto& name : data.vertex_names) {
            if (name.empty()) throw SchemaError("vertex names must be non-empty");
            if (!seen.insert(name).second) throw SchemaError("duplicate vertex name: " + name);
        }
    }
    L.names_ = std::move(data.vertex_names);

    // triangles
    std::set<Triple> tris;
    for (auto t : data.triangles) {
        for (int x : t)
            if (x < 0 || x >= n) throw SchemaError("triangle vertex index out of range: " + std::to_string(x));
        std::sort(t.begin(), t.end());
        if (t[0] == t[1] || t[1] == t[2]) throw SchemaError("triangle with repeated vertex");
        if (!tris.insert({t[0], t[1], t[2]}).second) throw SchemaError("duplicate triangle");
    }
    L.triangles_.assign(tris.begin(), tris.end());
    for (const Triple& t : L.triangles_) L.triangle_keys_.insert(triple_key(t[0], t[1], t[2]));

    // labels
    std::map<Edge, int> labels;
    for (const auto& entry : data.labels) {
        const int i = entry[0], j = entry[1], m = entry[2];
        if (i < 0 || i >= n || j < 0 || j >= n) throw SchemaError("label vertex index out of range");
        if (i >= j) throw SchemaError("label pairs must satisfy i < j");
        if (m < 2 || m > Label::kMaxLabel)
            throw LabelError("label on {" + L.names_[i] + "," + L.names_[j] + "} must be in [2, 10^6], got " +
                             std::to_string(m));
        if (!labels.emplace(Edge{i, j}, m).second)
            throw SchemaError("pair {" + L.names_[i] + "," + L.names_[j] + "} labeled twice");
    }

    // edges from triangles, with incidence counts
    std::map<Edge, int> edge_use;
    for (const Triple& t : L.triangles_) {
        edge_use[{t[0], t[1]}]++;
        edge_use[{t[0], t[2]}]++;
        edge_use[{t[1], t[2]}]++;
    }
    for (const auto& [e, cnt] : edge_use) {
        if (cnt != 2)
            throw TopologyError("edge " + edge_str(L, e[0], e[1]) + " lies in " + std::to_string(cnt) +
                                " triangles, expected 2");
        if (!labels.count(e)) throw LabelError("triangle edge " + edge_str(L, e[0], e[1]) + " has no label");
    }
    for (const auto& [e, m] : labels)
        if (!edge_use.count(e))
            throw LabelError("label on " + edge_str(L, e[0], e[1]) + ", which is not a triangle edge");

    L.edges_.reserve(edge_use.size());
    L.adj_.assign(n, {});
    for (const auto& [e, cnt] : edge_use) {
        L.edges_.push_back(e);
        L.adj_[e[0]].push_back(e[1]);
        L.adj_[e[1]].push_back(e[0]);
        L.label_by_edge_[edge_key(e[0], e[1])] = labels[e];
    }
    for (auto& a : L.adj_) std::sort(a.begin(), a.end());

    // vertex links
    std::vector<std::vector<Edge>> opposite(n);
    for (const Triple& t : L.triangles_) {
        opposite[t[0]].push_back({t[1], t[2]});
        opposite[t[1]].push_back({t[0], t[2]});
        opposite[t[2]].push_back({t[0], t[1]});
    }
    L.links_.resize(n);
    for (int v = 0; v < n; ++v) {
        if (L.adj_[v].empty()) throw TopologyError("isolated vertex #" + std::to_string(v));
        L.links_[v] = walk_link_cycle(v, opposite[v], static_cast<int>(L.adj_[v].size()));
    }

    // connectivity
    {
        std::vector<char> seen(n, 0);
        std::vector<int> stack{0};
        seen[0] = 1;
        int reached = 1;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            for (int u : L.adj_[v])
                if (!seen[u]) {
                    seen[u] = 1;
                    ++reached;
                    stack.push_back(u);
                }
        }
        if (reached != n) throw TopologyError("1-skeleton is not connected");
    }

    const int V = n, E = L.edge_count(), F = L.triangle_count();
    if (V - E + F != 2)
        throw TopologyError("Euler characteristic is " + std::to_string(V - E + F) + ", expected 2");
    return L;
}

TriangulationData LabeledTriangulation::data() const {
    TriangulationData d;
    d.vertex_names = names_;
    for (const Triple& t : triangles_) d.triangles.push_back({t[0], t[1], t[2]});
    for (const Edge& e : edges_) d.labels.push_back({e[0], e[1], label_by_edge_.at(edge_key(e[0], e[1]))});
    return d;
}

// --- documents -------------------------------------------------------------

LabeledTriangulation parse_triangulation(const std::string& document) {
    json doc;
    try {
        doc = json::parse(document);
    } catch (const json::exception& e) {
        throw SchemaError(std::string("invalid JSON: ") + e.what());
    }
    if (!doc.is_object()) throw SchemaError("document must be a JSON object");
    for (const auto& [key, _] : doc.items())
        if (key != "vertices" && key != "triangles" && key != "labels")
            throw SchemaError("unexpected key: " + key);
    for (const char* key : {"vertices", "triangles", "labels"})
        if (!doc.contains(key) || !doc[key].is_array())
            throw SchemaError(std::string("missing array field: ") + key);

    TriangulationData d;
    for (const auto& v : doc["vertices"]) {
        if (!v.is_string()) throw SchemaError("vertex names must be strings");
        d.vertex_names.push_back(v.get<std::string>());
    }
    auto read_int = [](const json& x, const char* where) -> int {
        if (!x.is_number_integer()) throw SchemaError(std::string("expected integer in ") + where);
        return x.get<int>();
    };
    for (const auto& t : doc["triangles"]) {
        if (!t.is_array() || t.size() != 3) throw SchemaError("triangles must be [i,j,k]");
        d.triangles.push_back({read_int(t[0], "triangles"), read_int(t[1], "triangles"), read_int(t[2], "triangles")});
    }
    for (const auto& l : doc["labels"]) {
        if (!l.is_array() || l.size() != 3) throw SchemaError("labels must be [i,j,m]");
        d.labels.push_back({read_int(l[0], "labels"), read_int(l[1], "labels"), read_int(l[2], "labels")});
    }
    return LabeledTriangulation::build(std::move(d));
}

std::string canonical_document(const LabeledTriangulation& L) {
    json doc;
    doc["vertices"] = L.vertex_names();
    json tris = json::array();
    for (const Triple& t : L.triangles()) tris.push_back({t[0], t[1], t[2]});
    doc["triangles"] = std::move(tris);
    json labels = json::array();
    for (const Edge& e : L.edges()) labels.push_back({e[0], e[1], L.finite_label(e[0], e[1])});
    doc["labels"] = std::move(labels);
    return doc.dump();
}

// --- queries ---------------------------------------------------------------

CycleWithLabels canonical_cycle(const LabeledTriangulation& L, std::vector<int> cycle) {
    const int k = static_cast<int>(cycle.size());
    if (k < 3) throw Error("cycle too short");
    const auto min_it = std::min_element(cycle.begin(), cycle.end());
    std::rotate(cycle.begin(), min_it, cycle.end());
    if (cycle[k - 1] < cycle[1]) {
        std::reverse(cycle.begin() + 1, cycle.end());
    }
    CycleWithLabels out;
    out.vertices = std::move(cycle);
    for (int i = 0; i < k; ++i) out.labels.push_back(L.finite_label(out.vertices[i], out.vertices[(i + 1) % k]));
    return out;
}

CycleWithLabels link(const LabeledTriangulation& L, int v) {
    return canonical_cycle(L, L.link_cycle(v));
}

Star star(const LabeledTriangulation& L, int v) {
    Star s;
    s.center = v;
    s.boundary = link(L, v);
    for (const Triple& t : L.triangles())
        if (t[0] == v || t[1] == v || t[2] == v) s.triangles.push_back(t);
    return s;
}

SubComplex induced_subcomplex(const LabeledTriangulation& L, const std::vector<int>& vertices) {
    std::set<int> vs;
    for (int v : vertices) {
        L.require_vertex(v);
        vs.insert(v);
    }
    SubComplex sc;
    sc.vertices.assign(vs.begin(), vs.end());
    for (size_t i = 0; i < sc.vertices.size(); ++i)
        for (size_t j = i + 1; j < sc.vertices.size(); ++j)
            if (L.adjacent(sc.vertices[i], sc.vertices[j])) sc.edges.push_back({sc.vertices[i], sc.vertices[j]});
    for (const Triple& t : L.triangles())
        if (vs.count(t[0]) && vs.count(t[1]) && vs.count(t[2])) sc.triangles.push_back(t);
    return sc;
}

bool is_full(const LabeledTriangulation& L, const SubComplex& a) {
    SubComplex b = a;
    std::sort(b.vertices.begin(), b.vertices.end());
    std::sort(b.edges.begin(), b.edges.end());
    std::sort(b.triangles.begin(), b.triangles.end());
    return b == induced_subcomplex(L, b.vertices);
}

bool is_full(const LabeledTriangulation& L, const CycleWithLabels& cycle) {
    SubComplex sc;
    sc.vertices = cycle.vertices;
    const int k = cycle.size();
    for (int i = 0; i < k; ++i) {
        int a = cycle.vertices[i], b = cycle.vertices[(i + 1) % k];
        if (a > b) std::swap(a, b);
        sc.edges.push_back({a, b});
    }
    return is_full(L, sc);
}

bool is_full(const LabeledTriangulation& L, const Star& st) {
    SubComplex sc;
    sc.vertices = st.boundary.vertices;
    sc.vertices.push_back(st.center);
    const int k = st.boundary.size();
    for (int i = 0; i < k; ++i) {
        int a = st.boundary.vertices[i], b = st.boundary.vertices[(i + 1) % k];
        if (a > b) std::swap(a, b);
        sc.edges.push_back({a, b});
        sc.edges.push_back({std::min(st.center, st.boundary.vertices[i]), std::max(st.center, st.boundary.vertices[i])});
    }
    sc.triangles = st.triangles;
    return is_full(L, sc);
}

// --- enumeration kernels -----------------------------------------------------
//
// The hot scans are bucketed by their leading index so the OpenMP and serial
// paths produce byte-identical, lexicographically sorted output.  A naive
// quadruple/triple scan lives in singer/reference.hpp and the tests compare
// the two routes.

namespace {
constexpr int kParallelThreshold = 256;
}

std::vector<Triple> enumerate_cliques3(const LabeledTriangulation& L) {
    const auto& edges = L.edges();
    const int ne = static_cast<int>(edges.size());
    std::vector<std::vector<Triple>> bucket(ne);

#pragma omp parallel for schedule(dynamic, 64) if (L.vertex_count() >= kParallelThreshold)
    for (int e = 0; e < ne; ++e) {
        const int a = edges[e][0], b = edges[e][1];
        const auto& na = L.neighbors(a);
        const auto& nb = L.neighbors(b);
        std::vector<Triple>& out = bucket[e];
        // sorted-merge of the two neighbour lists; keep common c > b
        size_t i = 0, j = 0;
        while (i < na.size() && j < nb.size()) {
            if (na[i] < nb[j])
                ++i;
            else if (nb[j] < na[i])
                ++j;
            else {
                if (na[i] > b) out.push_back({a, b, na[i]});
                ++i;
                ++j;
            }
        }
    }
    std::vector<Triple> result;
    for (auto& bq : bucket) result.insert(result.end(), bq.begin(), bq.end());
    return result;  // edges are sorted, c ascends per edge => already lexicographic
}

std::vector<std::array<int, 4>> enumerate_cliques4(const LabeledTriangulation& L) {
    std::vector<Triple> cliques = enumerate_cliques3(L);
    std::vector<std::array<int, 4>> result;
    for (const Triple& t : cliques) {
        // extend by d > max(t); adjacency to all three
        const auto& nc = L.neighbors(t[2]);
        for (int d : nc) {
            if (d <= t[2]) continue;
            if (L.adjacent(t[0], d) && L.adjacent(t[1], d)) result.push_back({t[0], t[1], t[2], d});
        }
    }
    return result;
}

std::vector<CycleWithLabels> enumerate_chordless_4_circuits(const LabeledTriangulation& L) {
    const int n = L.vertex_count();
    std::vector<std::vector<std::array<int, 4>>> bucket(n);

#pragma omp parallel for schedule(dynamic, 16) if (n >= kParallelThreshold)
    for (int a = 0; a < n; ++a) {
        auto& out = bucket[a];
        // a is the smallest vertex of the circuit (a, b, c, d); c is the
        // opposite corner, {b, d} the common neighbours with b < d.
        for (int c = a + 1; c < n; ++c) {
            if (L.adjacent(a, c)) continue;
            const auto& na = L.neighbors(a);
            const auto& nc = L.neighbors(c);
            std::vector<int> common;
            std::set_intersection(na.begin(), na.end(), nc.begin(), nc.end(), std::back_inserter(common));
            for (size_t i = 0; i < common.size(); ++i) {
                if (common[i] <= a) continue;
                for (size_t j = i + 1; j < common.size(); ++j) {
                    if (L.adjacent(common[i], common[j])) continue;
                    out.push_back({a, common[i], c, common[j]});
                }
            }
        }
        std::sort(out.begin(), out.end());
    }

    std::vector<CycleWithLabels> result;
    for (const auto& bq : bucket)
        for (const auto& q : bq) result.push_back(canonical_cycle(L, {q[0], q[1], q[2], q[3]}));
    return result;
}

// --- recognizers -------------------------------------------------------------

bool recognize_boundary_simplex(const LabeledTriangulation& L) {
    return L.vertex_count() == 4 && L.edge_count() == 6 && L.triangle_count() == 4;
}

std::optional<Suspension> suspension_with_poles(const LabeledTriangulation& L, int pole_a, int pole_b) {
    const int n = L.vertex_count();
    if (pole_a == pole_b || !L.has_vertex(pole_a) || !L.has_vertex(pole_b)) return std::nullopt;
    if (L.adjacent(pole_a, pole_b)) return std::nullopt;
    if (L.valence(pole_a) != n - 2 || L.valence(pole_b) != n - 2) return std::nullopt;

    // the rest must be one induced cycle
    std::vector<int> rest;
    for (int v = 0; v < n; ++v)
        if (v != pole_a && v != pole_b) rest.push_back(v);
    std::map<int, std::vector<int>> nbr;
    for (int v : rest)
        for (int u : L.neighbors(v))
            if (u != pole_a && u != pole_b) nbr[v].push_back(u);
    for (int v : rest)
        if (nbr[v].size() != 2) return std::nullopt;
    std::vector<int> cycle;
    int prev = -1, cur = rest[0];
    do {
        cycle.push_back(cur);
        const auto& p = nbr[cur];
        int step = (p[0] == prev) ? p[1] : p[0];
        prev = cur;
        cur = step;
    } while (cur != rest[0] && static_cast<int>(cycle.size()) <= static_cast<int>(rest.size()));
    if (cycle.size() != rest.size()) return std::nullopt;

    Suspension s;
    s.pole_a = std::min(pole_a, pole_b);
    s.pole_b = std::max(pole_a, pole_b);
    s.equator = canonical_cycle(L, std::move(cycle));
    return s;
}

std::optional<Suspension> recognize_suspension(const LabeledTriangulation& L) {
    const int n = L.vertex_count();
    if (n < 5) return std::nullopt;  // suspension of a 3-gon is the smallest
    for (int p = 0; p < n; ++p) {
        if (L.valence(p) != n - 2) continue;
        for (int q = p + 1; q < n; ++q) {
            if (auto s = suspension_with_poles(L, p, q)) return s;
        }
    }
    return std::nullopt;
}

}  // namespace singer
