#include "singer/cell_complex.hpp"

#include <algorithm>
#include <map>
#include <nlohmann/json.hpp>
#include <set>

#include "singer/rational.hpp"

namespace singer {

using detail::edge_key;
using json = nlohmann::json;

std::string to_string(CellOrigin o) {
    switch (o) {
        case CellOrigin::OriginalTriangle: return "OriginalTriangle";
        case CellOrigin::AddedTriangle: return "AddedTriangle";
        case CellOrigin::AddedSquare: return "AddedSquare";
    }
    throw Error("bad cell origin");
}

CellOrigin cell_origin_from_string(const std::string& s) {
    if (s == "OriginalTriangle") return CellOrigin::OriginalTriangle;
    if (s == "AddedTriangle") return CellOrigin::AddedTriangle;
    if (s == "AddedSquare") return CellOrigin::AddedSquare;
    throw SchemaError("unknown cell origin: " + s);
}

std::vector<int> canonical_corners(std::vector<int> corners) {
    const int k = static_cast<int>(corners.size());
    auto min_it = std::min_element(corners.begin(), corners.end());
    std::rotate(corners.begin(), min_it, corners.end());
    if (corners[k - 1] < corners[1]) std::reverse(corners.begin() + 1, corners.end());
    return corners;
}

namespace {

std::string corner_key(std::vector<int> corners) {
    std::sort(corners.begin(), corners.end());
    std::string key;
    for (int c : corners) key += std::to_string(c) + ",";
    return key;
}

// cells must intersect in a single shared cell: a vertex or one edge
void check_strictness(const std::vector<Cell>& cells) {
    for (size_t i = 0; i < cells.size(); ++i) {
        for (size_t j = i + 1; j < cells.size(); ++j) {
            std::vector<int> a = cells[i].corners, b = cells[j].corners;
            std::sort(a.begin(), a.end());
            std::sort(b.begin(), b.end());
            std::vector<int> shared;
            std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(shared));
            if (shared.size() <= 1) continue;
            if (shared.size() > 2)
                throw TopologyError("cells #" + std::to_string(i) + " and #" + std::to_string(j) +
                                    " share " + std::to_string(shared.size()) + " vertices");
            auto consecutive = [](const Cell& c, int u, int v) {
                const int k = c.size();
                for (int t = 0; t < k; ++t) {
                    int x = c.corners[t], y = c.corners[(t + 1) % k];
                    if ((x == u && y == v) || (x == v && y == u)) return true;
                }
                return false;
            };
            if (!consecutive(cells[i], shared[0], shared[1]) || !consecutive(cells[j], shared[0], shared[1]))
                throw TopologyError("cells #" + std::to_string(i) + " and #" + std::to_string(j) +
                                    " share two corners that are not a common edge");
        }
    }
}

}  // namespace

const std::vector<int>& LabeledCellComplex::neighbors(int v) const {
    if (!has_vertex(v)) throw UnknownVertex("no vertex with index " + std::to_string(v));
    return adj_[v];
}

bool LabeledCellComplex::adjacent(int u, int v) const {
    if (!has_vertex(u) || !has_vertex(v)) throw UnknownVertex("vertex index out of range");
    if (u == v) return false;
    return label_by_edge_.count(edge_key(u, v)) != 0;
}

Label LabeledCellComplex::label(int u, int v) const {
    if (!has_vertex(u) || !has_vertex(v)) throw UnknownVertex("vertex index out of range");
    auto it = label_by_edge_.find(edge_key(u, v));
    if (it == label_by_edge_.end()) return Label::infinite();
    return Label::finite(it->second);
}

int LabeledCellComplex::finite_label(int u, int v) const { return label(u, v).value(); }

std::optional<int> LabeledCellComplex::cell_with_corners(std::vector<int> corners) const {
    auto it = cell_by_corners_.find(corner_key(std::move(corners)));
    if (it == cell_by_corners_.end()) return std::nullopt;
    return it->second;
}

LabeledCellComplex LabeledCellComplex::build(CellComplexData data) {
    LabeledCellComplex X;
    const int n = static_cast<int>(data.vertex_names.size());
    if (n == 0) throw SchemaError("vertex list is empty");
    {
        std::set<std::string> seen;
        for (const auto& name : data.vertex_names)
            if (name.empty() || !seen.insert(name).second) throw SchemaError("bad or duplicate vertex name");
    }
    X.names_ = std::move(data.vertex_names);

    for (Cell& c : data.cells) {
        if (c.size() != 3 && c.size() != 4) throw TopologyError("cells must have 3 or 4 corners");
        std::set<int> distinct(c.corners.begin(), c.corners.end());
        if (static_cast<int>(distinct.size()) != c.size()) throw TopologyError("cell with repeated corner");
        for (int v : c.corners)
            if (v < 0 || v >= n) throw SchemaError("cell corner out of range");
        c.corners = canonical_corners(std::move(c.corners));
        if (c.size() == 4 && c.origin != CellOrigin::AddedSquare)
            throw TopologyError("square cells must be AddedSquare");
        if (c.size() == 3 && c.origin == CellOrigin::AddedSquare)
            throw TopologyError("triangle cell tagged AddedSquare");
    }
    std::sort(data.cells.begin(), data.cells.end(), [](const Cell& a, const Cell& b) {
        if (a.size() != b.size()) return a.size() < b.size();
        if (a.corners != b.corners) return a.corners < b.corners;
        return static_cast<int>(a.origin) < static_cast<int>(b.origin);
    });
    X.cells_ = std::move(data.cells);

    for (int i = 0; i < static_cast<int>(X.cells_.size()); ++i) {
        const Cell& c = X.cells_[i];
        if (!X.cell_by_corners_.emplace(corner_key(c.corners), i).second)
            throw TopologyError("two cells with the same corner set");
        if (c.size() == 3)
            ++X.n_triangles_;
        else
            ++X.n_squares_;
    }

    // labels
    std::map<Edge, int> labels;
    for (const auto& entry : data.labels) {
        const int i = entry[0], j = entry[1], m = entry[2];
        if (i < 0 || i >= n || j < 0 || j >= n || i >= j) throw SchemaError("bad label pair");
        if (m < 2 || m > Label::kMaxLabel) throw LabelError("label out of range: " + std::to_string(m));
        if (!labels.emplace(Edge{i, j}, m).second) throw SchemaError("pair labeled twice");
    }

    // edges from cell sides, each in exactly two cells
    std::map<Edge, int> edge_use;
    for (const Cell& c : X.cells_) {
        const int k = c.size();
        for (int t = 0; t < k; ++t) {
            int a = c.corners[t], b = c.corners[(t + 1) % k];
            if (a > b) std::swap(a, b);
            edge_use[{a, b}]++;
        }
    }
    for (const auto& [e, cnt] : edge_use) {
        if (cnt != 2)
            throw TopologyError("edge {" + X.names_[e[0]] + "," + X.names_[e[1]] + "} lies in " +
                                std::to_string(cnt) + " cells, expected 2");
        if (!labels.count(e))
            throw LabelError("cell edge {" + X.names_[e[0]] + "," + X.names_[e[1]] + "} has no label");
    }
    for (const auto& [e, m] : labels)
        if (!edge_use.count(e)) throw LabelError("label on a pair that is not a cell edge");

    X.adj_.assign(n, {});
    for (const auto& [e, cnt] : edge_use) {
        X.edges_.push_back(e);
        X.adj_[e[0]].push_back(e[1]);
        X.adj_[e[1]].push_back(e[0]);
        X.label_by_edge_[edge_key(e[0], e[1])] = labels[e];
    }
    for (auto& a : X.adj_) std::sort(a.begin(), a.end());

    // added-cell label constraints, exact
    for (const Cell& c : X.cells_) {
        if (c.origin == CellOrigin::AddedSquare) {
            for (int t = 0; t < 4; ++t)
                if (X.finite_label(c.corners[t], c.corners[(t + 1) % 4]) != 2)
                    throw LabelError("AddedSquare with a boundary label != 2");
        } else if (c.origin == CellOrigin::AddedTriangle) {
            Rational sum = frac(1, X.finite_label(c.corners[0], c.corners[1])) +
                           frac(1, X.finite_label(c.corners[1], c.corners[2])) +
                           frac(1, X.finite_label(c.corners[2], c.corners[0]));
            if (sum != 1) throw LabelError("AddedTriangle with angle sum != pi");
        }
    }

    // vertex links: the wedges around each vertex must close into one cycle
    for (int v = 0; v < n; ++v) {
        if (X.adj_[v].empty()) throw TopologyError("isolated vertex #" + std::to_string(v));
        std::map<int, std::vector<int>> wedge;
        for (const Cell& c : X.cells_) {
            const int k = c.size();
            for (int t = 0; t < k; ++t) {
                if (c.corners[t] != v) continue;
                int p = c.corners[(t + k - 1) % k], q = c.corners[(t + 1) % k];
                wedge[p].push_back(q);
                wedge[q].push_back(p);
            }
        }
        if (wedge.size() != X.adj_[v].size())
            throw TopologyError("link of vertex #" + std::to_string(v) + " does not cover its neighbors");
        for (const auto& [u, partners] : wedge)
            if (partners.size() != 2)
                throw TopologyError("link of vertex #" + std::to_string(v) + " is not a cycle");
        int start = wedge.begin()->first;
        int prev = -1, cur = start, steps = 0;
        do {
            const auto& p = wedge[cur];
            int nxt = (p[0] == prev) ? p[1] : p[0];
            prev = cur;
            cur = nxt;
            ++steps;
        } while (cur != start && steps <= static_cast<int>(wedge.size()));
        if (steps != static_cast<int>(wedge.size()))
            throw TopologyError("link of vertex #" + std::to_string(v) + " has more than one cycle");
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
            for (int u : X.adj_[v])
                if (!seen[u]) {
                    seen[u] = 1;
                    ++reached;
                    stack.push_back(u);
                }
        }
        if (reached != n) throw TopologyError("1-skeleton is not connected");
    }

    const int V = n, E = X.edge_count(), F = X.cell_count();
    if (V - E + F != 2)
        throw TopologyError("Euler characteristic is " + std::to_string(V - E + F) + ", expected 2");

    check_strictness(X.cells_);
    return X;
}

LabeledCellComplex LabeledCellComplex::from_triangulation(const LabeledTriangulation& L) {
    CellComplexData d;
    d.vertex_names = L.vertex_names();
    for (const Triple& t : L.triangles()) d.cells.push_back({{t[0], t[1], t[2]}, CellOrigin::OriginalTriangle});
    for (const Edge& e : L.edges()) d.labels.push_back({e[0], e[1], L.finite_label(e[0], e[1])});
    return build(std::move(d));
}

CellComplexData LabeledCellComplex::data() const {
    CellComplexData d;
    d.vertex_names = names_;
    d.cells = cells_;
    for (const Edge& e : edges_) d.labels.push_back({e[0], e[1], label_by_edge_.at(edge_key(e[0], e[1]))});
    return d;
}

std::string canonical_document(const LabeledCellComplex& X) {
    json doc;
    doc["vertices"] = X.vertex_names();
    json cells = json::array();
    for (const Cell& c : X.cells()) {
        json jc;
        jc["corners"] = c.corners;
        jc["origin"] = to_string(c.origin);
        cells.push_back(std::move(jc));
    }
    doc["cells"] = std::move(cells);
    json labels = json::array();
    for (const Edge& e : X.edges()) labels.push_back({e[0], e[1], X.finite_label(e[0], e[1])});
    doc["labels"] = std::move(labels);
    return doc.dump();
}

std::vector<Triple> enumerate_cliques3(const LabeledCellComplex& X) {
    std::vector<Triple> result;
    for (const Edge& e : X.edges()) {
        const auto& na = X.neighbors(e[0]);
        const auto& nb = X.neighbors(e[1]);
        std::vector<int> common;
        std::set_intersection(na.begin(), na.end(), nb.begin(), nb.end(), std::back_inserter(common));
        for (int c : common)
            if (c > e[1]) result.push_back({e[0], e[1], c});
    }
    return result;
}

std::vector<std::vector<int>> enumerate_chordless_4_circuits(const LabeledCellComplex& X) {
    const int n = X.vertex_count();
    std::vector<std::vector<int>> result;
    for (int a = 0; a < n; ++a) {
        for (int c = a + 1; c < n; ++c) {
            if (X.adjacent(a, c)) continue;
            const auto& na = X.neighbors(a);
            const auto& nc = X.neighbors(c);
            std::vector<int> common;
            std::set_intersection(na.begin(), na.end(), nc.begin(), nc.end(), std::back_inserter(common));
            for (size_t i = 0; i < common.size(); ++i) {
                if (common[i] <= a) continue;
                for (size_t j = i + 1; j < common.size(); ++j) {
                    if (X.adjacent(common[i], common[j])) continue;
                    result.push_back({a, common[i], c, common[j]});
                }
            }
        }
    }
    return result;
}

}  // namespace singer
