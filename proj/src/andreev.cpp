#include "singer/andreev.hpp"

#include <algorithm>
#include <nlohmann/json.hpp>
#include <set>

#include "singer/rational.hpp"

namespace singer {

using json = nlohmann::json;

std::vector<AndreevInstance> AndreevCondition::failures() const {
    std::vector<AndreevInstance> f;
    for (const auto& i : instances)
        if (!i.pass) f.push_back(i);
    return f;
}

DualPolytope dual_polytope(const LabeledCellComplex& X) {
    DualPolytope d;
    d.faces = X.vertex_count();
    d.polytope_edges = X.edge_count();
    d.polytope_vertices = X.cell_count();
    d.trivalent_vertices = X.triangle_cell_count();
    d.quadrivalent_vertices = X.square_cell_count();

    // dual simplex: the boundary of the 3-simplex as a cell complex
    d.is_simplex = X.vertex_count() == 4 && X.cell_count() == 4 && X.square_cell_count() == 0;

    // dual triangular prism: the complex is the suspension of a 3-gon, i.e.
    // the triangular bipyramid (two non-adjacent valence-3 poles, a
    // pairwise-adjacent valence-4 equator, six triangle cells)
    if (X.vertex_count() == 5 && X.cell_count() == 6 && X.square_cell_count() == 0) {
        std::vector<int> low, high;
        for (int v = 0; v < 5; ++v) (X.valence(v) == 3 ? low : high).push_back(v);
        if (low.size() == 2 && !X.adjacent(low[0], low[1])) {
            bool equator_clique = true;
            for (size_t i = 0; i < high.size(); ++i)
                for (size_t j = i + 1; j < high.size(); ++j)
                    if (!X.adjacent(high[i], high[j])) equator_clique = false;
            if (equator_clique) {
                d.is_triangular_prism = true;
                d.prism_poles = {low[0], low[1]};
            }
        }
    }
    return d;
}

namespace {

Rational angle_sum3(const LabeledCellComplex& X, int a, int b, int c) {
    return frac(1, X.finite_label(a, b)) + frac(1, X.finite_label(b, c)) + frac(1, X.finite_label(a, c));
}

void sort_instances(AndreevCondition& c) {
    std::sort(c.instances.begin(), c.instances.end(), [](const AndreevInstance& a, const AndreevInstance& b) {
        if (a.what != b.what) return a.what < b.what;
        if (a.vertices != b.vertices) return a.vertices < b.vertices;
        return a.aux < b.aux;
    });
    c.pass = std::all_of(c.instances.begin(), c.instances.end(), [](const auto& i) { return i.pass; });
}

}  // namespace

AndreevTranscript andreev_check(const LabeledCellComplex& X) {
    DualPolytope dual = dual_polytope(X);
    if (dual.is_simplex) throw SimplexInput("the dual polytope is a simplex; Andreev does not apply");

    AndreevTranscript t;
    t.conditions[0].id = "i";
    t.conditions[1].id = "ii";
    t.conditions[2].id = "iii";
    t.conditions[3].id = "iv";
    t.conditions[4].id = "v";

    // (i) angle sums at polytope vertices.  Square cells carry all-2 labels
    // by construction, giving the required angle sum 2*pi; triangle cells
    // need sum >= pi, strictly for original triangles (metric flagness).
    {
        AndreevCondition& c = t.conditions[0];
        for (int i = 0; i < X.cell_count(); ++i) {
            const Cell& cell = X.cell(i);
            AndreevInstance inst;
            inst.vertices = cell.corners;
            if (cell.size() == 4) {
                inst.what = "square-cell";
                inst.pass = true;
                for (int k = 0; k < 4; ++k)
                    if (X.finite_label(cell.corners[k], cell.corners[(k + 1) % 4]) != 2) inst.pass = false;
                inst.note = "all labels 2";
            } else {
                Rational sum = angle_sum3(X, cell.corners[0], cell.corners[1], cell.corners[2]);
                inst.what = cell.origin == CellOrigin::AddedTriangle ? "added-triangle-cell" : "triangle-cell";
                inst.note = "sum " + rational_string(sum);
                inst.pass = cell.origin == CellOrigin::AddedTriangle ? sum >= 1 : sum > 1;
            }
            c.instances.push_back(std::move(inst));
        }
        sort_instances(c);
    }

    // (ii) three faces meeting pairwise with no common polytope vertex
    {
        AndreevCondition& c = t.conditions[1];
        for (const Triple& q : enumerate_cliques3(X)) {
            if (X.cell_with_corners({q[0], q[1], q[2]})) continue;
            Rational sum = angle_sum3(X, q[0], q[1], q[2]);
            AndreevInstance inst;
            inst.what = "nonface-3-clique";
            inst.vertices = {q[0], q[1], q[2]};
            inst.note = "sum " + rational_string(sum);
            inst.pass = sum < 1;
            c.instances.push_back(std::move(inst));
        }
        sort_instances(c);
    }

    // (iii) four faces intersecting cyclically at right angles must meet in
    // a (4-valent, ideal) polytope vertex, i.e. bound a square cell; a chord
    // is the allowed "two opposite faces intersect" exemption and chorded
    // circuits are simply absent from the enumeration.
    {
        AndreevCondition& c = t.conditions[2];
        for (const auto& q : enumerate_chordless_4_circuits(X)) {
            bool all_two = true;
            for (int k = 0; k < 4; ++k)
                if (X.finite_label(q[k], q[(k + 1) % 4]) != 2) all_two = false;
            if (!all_two) continue;
            AndreevInstance inst;
            inst.what = "all2-chordless-4-circuit";
            inst.vertices = q;
            bool bounds_square = false;
            if (auto cell = X.cell_with_corners(q)) bounds_square = X.cell(*cell).size() == 4;
            inst.note = bounds_square ? "bounds a square cell" : "bounds no square cell";
            inst.pass = bounds_square;
            c.instances.push_back(std::move(inst));
        }
        sort_instances(c);
    }

    // (iv) triangular prism: the base and top angles are the ones dual to
    // the suspension-point edges of X
    {
        AndreevCondition& c = t.conditions[3];
        if (dual.is_triangular_prism) {
            AndreevInstance inst;
            inst.what = "prism-base-top";
            inst.vertices = {(*dual.prism_poles)[0], (*dual.prism_poles)[1]};
            bool all_two = true;
            std::string labels;
            for (int pole : inst.vertices)
                for (int u : X.neighbors(pole)) {
                    int m = X.finite_label(pole, u);
                    labels += (labels.empty() ? "" : ",") + std::to_string(m);
                    if (m != 2) all_two = false;
                    inst.aux.push_back(u);
                }
            inst.note = "pole edge labels " + labels;
            inst.pass = !all_two;
            c.instances.push_back(std::move(inst));
        }
        sort_instances(c);
    }

    // (v) two non-adjacent faces concurrent at an (ideal) vertex: they are
    // dual to opposite corners of a square cell.  Triangle cells cannot host
    // a non-adjacent pair (their corners are pairwise adjacent by cell-side
    // validity), so squares are the only source — asserted by construction.
    {
        AndreevCondition& c = t.conditions[4];
        for (int i = 0; i < X.cell_count(); ++i) {
            const Cell& cell = X.cell(i);
            if (cell.size() != 4) continue;
            for (int d0 = 0; d0 < 2; ++d0) {
                const int f1 = cell.corners[d0], f3 = cell.corners[d0 + 2];
                const int o1 = cell.corners[(d0 + 1) % 4], o2 = cell.corners[(d0 + 3) % 4];
                const auto& n1 = X.neighbors(f1);
                const auto& n3 = X.neighbors(f3);
                std::vector<int> common;
                std::set_intersection(n1.begin(), n1.end(), n3.begin(), n3.end(), std::back_inserter(common));
                for (int g : common) {
                    if (g == o1 || g == o2) continue;  // the three faces meet at this square's vertex
                    AndreevInstance inst;
                    inst.what = "square-opposite-pair";
                    inst.vertices = {std::min(f1, f3), std::max(f1, f3), g};
                    inst.aux = cell.corners;
                    const int m1 = X.finite_label(g, f1), m3 = X.finite_label(g, f3);
                    inst.note = "labels " + std::to_string(m1) + "," + std::to_string(m3);
                    inst.pass = !(m1 == 2 && m3 == 2);
                    c.instances.push_back(std::move(inst));
                }
            }
        }
        sort_instances(c);
    }

    t.pass = std::all_of(t.conditions.begin(), t.conditions.end(), [](const auto& c) { return c.pass; });
    return t;
}

// --- JSON ---------------------------------------------------------------------

namespace {

json instance_to_json(const AndreevInstance& i) {
    json j;
    j["what"] = i.what;
    j["vertices"] = i.vertices;
    j["aux"] = i.aux;
    j["note"] = i.note;
    j["pass"] = i.pass;
    return j;
}

AndreevInstance instance_from(const json& j) {
    if (!j.is_object()) throw SchemaError("instance must be an object");
    AndreevInstance i;
    i.what = j.at("what").get<std::string>();
    i.vertices = j.at("vertices").get<std::vector<int>>();
    i.aux = j.at("aux").get<std::vector<int>>();
    i.note = j.at("note").get<std::string>();
    i.pass = j.at("pass").get<bool>();
    return i;
}

}  // namespace

json transcript_to_json_obj(const AndreevTranscript& t);
AndreevTranscript transcript_from_json_obj(const json& j);

json transcript_to_json_obj(const AndreevTranscript& t) {
    json conditions = json::array();
    for (const auto& c : t.conditions) {
        json jc;
        jc["id"] = c.id;
        jc["pass"] = c.pass;
        json instances = json::array();
        for (const auto& i : c.instances) instances.push_back(instance_to_json(i));
        jc["instances"] = std::move(instances);
        conditions.push_back(std::move(jc));
    }
    json j;
    j["pass"] = t.pass;
    j["conditions"] = std::move(conditions);
    return j;
}

AndreevTranscript transcript_from_json_obj(const json& j) {
    try {
        AndreevTranscript t;
        t.pass = j.at("pass").get<bool>();
        const json& cs = j.at("conditions");
        if (!cs.is_array() || cs.size() != 5) throw SchemaError("transcript needs 5 conditions");
        for (int k = 0; k < 5; ++k) {
            AndreevCondition& c = t.conditions[k];
            c.id = cs[k].at("id").get<std::string>();
            c.pass = cs[k].at("pass").get<bool>();
            for (const auto& i : cs[k].at("instances")) c.instances.push_back(instance_from(i));
        }
        return t;
    } catch (const json::exception& e) {
        throw SchemaError(std::string("bad transcript: ") + e.what());
    }
}

std::string transcript_json(const AndreevTranscript& t) { return transcript_to_json_obj(t).dump(); }

AndreevTranscript transcript_from_json(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::exception& e) {
        throw SchemaError(std::string("bad transcript JSON: ") + e.what());
    }
    return transcript_from_json_obj(j);
}

std::string instance_json(const AndreevInstance& inst) { return instance_to_json(inst).dump(); }

AndreevInstance instance_from_json(const std::string& text) {
    try {
        return instance_from(json::parse(text));
    } catch (const json::exception& e) {
        throw SchemaError(std::string("bad instance JSON: ") + e.what());
    }
}

}  // namespace singer
