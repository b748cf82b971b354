#include "singer/certificate.hpp"

#include <nlohmann/json.hpp>

namespace singer {

using json = nlohmann::json;

// defined in andreev.cpp
json transcript_to_json_obj(const AndreevTranscript& t);
AndreevTranscript transcript_from_json_obj(const json& j);

std::string subcase_tag(const SuspensionSubcase& s) {
    return std::visit(
        [](const auto& sub) -> std::string {
            using T = std::decay_t<decltype(sub)>;
            if constexpr (std::is_same_v<T, SubAndreevDirect>) return "AndreevDirect";
            if constexpr (std::is_same_v<T, SubRightAngledSuspension>) return "RightAngledSuspension";
            if constexpr (std::is_same_v<T, SubEuclideanPolesSplit>) return "EuclideanPolesSplit";
            if constexpr (std::is_same_v<T, SubFiveGonReduction>) return "FiveGonReduction";
            if constexpr (std::is_same_v<T, SubFiveGonFigure4Split>) return "FiveGonFigure4Split";
            if constexpr (std::is_same_v<T, SubFiveGonAdjacentEuclidean>) return "FiveGonAdjacentEuclidean";
        },
        s);
}

std::string node_kind(const CertNode& node) {
    return std::visit(
        [](const auto& n) -> std::string {
            using T = std::decay_t<decltype(n)>;
            if constexpr (std::is_same_v<T, NodeBaseSimplex>)
                return n.euclidean ? "BaseSimplexEuclidean" : "BaseSimplexHyperbolic";
            if constexpr (std::is_same_v<T, NodeSuspension>) return "SuspensionCase";
            if constexpr (std::is_same_v<T, NodeL6>) return "L6";
            if constexpr (std::is_same_v<T, NodeCircuitSplit>) return "CircuitSplit";
            if constexpr (std::is_same_v<T, NodeEuclideanReduction>) return "EuclideanReduction";
        },
        node);
}

std::string summary_line(const CertNode& node) {
    return std::visit(
        [&](const auto& n) -> std::string {
            using T = std::decay_t<decltype(n)>;
            if constexpr (std::is_same_v<T, NodeBaseSimplex>) {
                return node_kind(node) + " " + to_string(n.gram);
            } else if constexpr (std::is_same_v<T, NodeSuspension>) {
                return "SuspensionCase n=" + std::to_string(n.n) + " " + subcase_tag(n.subcase);
            } else if constexpr (std::is_same_v<T, NodeL6>) {
                return "L6 overlap at " + std::to_string(n.witness.s1) + "," + std::to_string(n.witness.s2);
            } else if constexpr (std::is_same_v<T, NodeCircuitSplit>) {
                std::string cyc;
                for (int v : n.circuit.cycle.vertices) cyc += (cyc.empty() ? "" : " ") + std::to_string(v);
                return std::string("CircuitSplit ") +
                       (n.circuit.kind == EmptyEuclideanCircuit::Kind::Three ? "Three" : "Four") + " (" + cyc +
                       ")";
            } else {
                std::string out = "EuclideanReduction |T|=" + std::to_string(n.euclidean_vertices.size());
                out += n.dual_is_simplex ? " SimplexAfterReduction " + to_string(n.simplex_gram)
                                         : " AndreevPass";
                return out;
            }
        },
        node);
}

namespace {
void summary_rec(const CertTree& t, int depth, std::string& out) {
    out.append(static_cast<size_t>(2 * depth), ' ');
    out += summary_line(t.node);
    out += "\n";
    if (const auto* split = std::get_if<NodeCircuitSplit>(&t.node)) {
        summary_rec(*split->left, depth + 1, out);
        summary_rec(*split->right, depth + 1, out);
    }
}
}  // namespace

std::string summary_tree(const CertTree& tree) {
    std::string out;
    summary_rec(tree, 0, out);
    return out;
}

// --- JSON out ------------------------------------------------------------------

namespace {

json gram_to_json(const GramClass& g) {
    json j;
    switch (g.kind) {
        case GramClass::Kind::PositiveDefinite: j["class"] = "PositiveDefinite"; break;
        case GramClass::Kind::PositiveSemidefinite:
            j["class"] = "PositiveSemidefinite";
            j["corank"] = g.corank;
            break;
        case GramClass::Kind::Indefinite: j["class"] = "Indefinite"; break;
    }
    return j;
}

GramClass gram_from_json(const json& j) {
    GramClass g;
    const std::string cls = j.at("class").get<std::string>();
    if (cls == "PositiveDefinite") {
        g.kind = GramClass::Kind::PositiveDefinite;
    } else if (cls == "PositiveSemidefinite") {
        g.kind = GramClass::Kind::PositiveSemidefinite;
        g.corank = j.at("corank").get<int>();
        if (g.corank < 1) throw SchemaError("PSD corank must be >= 1");
    } else if (cls == "Indefinite") {
        g.kind = GramClass::Kind::Indefinite;
    } else {
        throw SchemaError("unknown Gram class: " + cls);
    }
    return g;
}

json circuit_to_json(const EmptyEuclideanCircuit& c) {
    json j;
    j["kind"] = c.kind == EmptyEuclideanCircuit::Kind::Three ? "Three" : "Four";
    j["cycle"] = c.cycle.vertices;
    j["labels"] = c.cycle.labels;
    j["side1"] = c.side1;
    j["side2"] = c.side2;
    return j;
}

EmptyEuclideanCircuit circuit_from_json(const json& j) {
    EmptyEuclideanCircuit c;
    const std::string kind = j.at("kind").get<std::string>();
    if (kind == "Three")
        c.kind = EmptyEuclideanCircuit::Kind::Three;
    else if (kind == "Four")
        c.kind = EmptyEuclideanCircuit::Kind::Four;
    else
        throw SchemaError("unknown circuit kind: " + kind);
    c.cycle.vertices = j.at("cycle").get<std::vector<int>>();
    c.cycle.labels = j.at("labels").get<std::vector<int>>();
    c.side1 = j.at("side1").get<std::vector<int>>();
    c.side2 = j.at("side2").get<std::vector<int>>();
    const size_t expect = c.kind == EmptyEuclideanCircuit::Kind::Three ? 3 : 4;
    if (c.cycle.vertices.size() != expect || c.cycle.labels.size() != expect)
        throw SchemaError("circuit cycle has the wrong length");
    return c;
}

json instance_to_json_local(const AndreevInstance& i) {
    json j;
    j["what"] = i.what;
    j["vertices"] = i.vertices;
    j["aux"] = i.aux;
    j["note"] = i.note;
    j["pass"] = i.pass;
    return j;
}

AndreevInstance instance_from_json_local(const json& j) {
    AndreevInstance i;
    i.what = j.at("what").get<std::string>();
    i.vertices = j.at("vertices").get<std::vector<int>>();
    i.aux = j.at("aux").get<std::vector<int>>();
    i.note = j.at("note").get<std::string>();
    i.pass = j.at("pass").get<bool>();
    return i;
}

json tree_to_json(const CertTree& t);

json node_to_json(const CertNode& node) {
    return std::visit(
        [](const auto& n) -> json {
            using T = std::decay_t<decltype(n)>;
            json j;
            if constexpr (std::is_same_v<T, NodeBaseSimplex>) {
                j["kind"] = n.euclidean ? "BaseSimplexEuclidean" : "BaseSimplexHyperbolic";
                j["gram"] = gram_to_json(n.gram);
                j["vertices"] = n.vertices;
            } else if constexpr (std::is_same_v<T, NodeSuspension>) {
                j["kind"] = "SuspensionCase";
                j["n"] = n.n;
                j["poles"] = {n.poles[0], n.poles[1]};
                j["equator"] = n.equator;
                json sub;
                sub["tag"] = subcase_tag(n.subcase);
                std::visit(
                    [&sub](const auto& s) {
                        using S = std::decay_t<decltype(s)>;
                        if constexpr (std::is_same_v<S, SubAndreevDirect>) {
                            sub["transcript"] = transcript_to_json_obj(s.transcript);
                        } else if constexpr (std::is_same_v<S, SubFiveGonReduction>) {
                            sub["v"] = s.v;
                            sub["reduced_digest"] = s.reduced_digest;
                            sub["transcript"] = transcript_to_json_obj(s.transcript);
                        } else if constexpr (std::is_same_v<S, SubFiveGonFigure4Split>) {
                            sub["v"] = s.v;
                            sub["s"] = s.s;
                            sub["reduced_digest"] = s.reduced_digest;
                            sub["failed_instance"] = instance_to_json_local(s.failed_instance);
                        } else if constexpr (std::is_same_v<S, SubFiveGonAdjacentEuclidean>) {
                            sub["v"] = s.v;
                            sub["w"] = s.w;
                            sub["v_prime"] = s.v_prime;
                        }
                    },
                    n.subcase);
                j["subcase"] = std::move(sub);
            } else if constexpr (std::is_same_v<T, NodeL6>) {
                j["kind"] = "L6";
                j["poles"] = {n.witness.poles[0], n.witness.poles[1]};
                j["hexagon"] = n.witness.hexagon;
                j["s1"] = n.witness.s1;
                j["s2"] = n.witness.s2;
                j["middle"] = n.witness.middle;
            } else if constexpr (std::is_same_v<T, NodeCircuitSplit>) {
                j["kind"] = "CircuitSplit";
                j["circuit"] = circuit_to_json(n.circuit);
                j["left"] = tree_to_json(*n.left);
                j["right"] = tree_to_json(*n.right);
            } else {
                j["kind"] = "EuclideanReduction";
                j["euclidean_vertices"] = n.euclidean_vertices;
                j["reduced_digest"] = n.reduced_digest;
                json outcome;
                if (n.dual_is_simplex) {
                    outcome["type"] = "SimplexAfterReduction";
                    outcome["gram"] = gram_to_json(n.simplex_gram);
                } else {
                    outcome["type"] = "Andreev";
                    outcome["transcript"] = transcript_to_json_obj(*n.transcript);
                }
                j["outcome"] = std::move(outcome);
            }
            return j;
        },
        node);
}

json tree_to_json(const CertTree& t) {
    json j;
    j["digest"] = t.digest;
    j["node"] = node_to_json(t.node);
    return j;
}

CertTree tree_from_json(const json& j);

CertNode node_from_json(const json& j) {
    if (!j.is_object()) throw SchemaError("certificate node must be an object");
    const std::string kind = j.at("kind").get<std::string>();
    if (kind == "BaseSimplexEuclidean" || kind == "BaseSimplexHyperbolic") {
        NodeBaseSimplex n;
        n.euclidean = kind == "BaseSimplexEuclidean";
        n.gram = gram_from_json(j.at("gram"));
        n.vertices = j.at("vertices").get<std::vector<int>>();
        return n;
    }
    if (kind == "SuspensionCase") {
        NodeSuspension n;
        n.n = j.at("n").get<int>();
        auto poles = j.at("poles").get<std::vector<int>>();
        if (poles.size() != 2) throw SchemaError("poles must be a pair");
        n.poles = {poles[0], poles[1]};
        n.equator = j.at("equator").get<std::vector<int>>();
        const json& sub = j.at("subcase");
        const std::string tag = sub.at("tag").get<std::string>();
        if (tag == "AndreevDirect") {
            SubAndreevDirect s;
            s.transcript = transcript_from_json_obj(sub.at("transcript"));
            n.subcase = std::move(s);
        } else if (tag == "RightAngledSuspension") {
            n.subcase = SubRightAngledSuspension{};
        } else if (tag == "EuclideanPolesSplit") {
            n.subcase = SubEuclideanPolesSplit{};
        } else if (tag == "FiveGonReduction") {
            SubFiveGonReduction s;
            s.v = sub.at("v").get<int>();
            s.reduced_digest = sub.at("reduced_digest").get<std::string>();
            s.transcript = transcript_from_json_obj(sub.at("transcript"));
            n.subcase = std::move(s);
        } else if (tag == "FiveGonFigure4Split") {
            SubFiveGonFigure4Split s;
            s.v = sub.at("v").get<int>();
            s.s = sub.at("s").get<int>();
            s.reduced_digest = sub.at("reduced_digest").get<std::string>();
            s.failed_instance = instance_from_json_local(sub.at("failed_instance"));
            n.subcase = std::move(s);
        } else if (tag == "FiveGonAdjacentEuclidean") {
            SubFiveGonAdjacentEuclidean s;
            s.v = sub.at("v").get<int>();
            s.w = sub.at("w").get<int>();
            s.v_prime = sub.at("v_prime").get<int>();
            n.subcase = std::move(s);
        } else {
            throw SchemaError("unknown suspension subcase: " + tag);
        }
        return n;
    }
    if (kind == "L6") {
        NodeL6 n;
        auto poles = j.at("poles").get<std::vector<int>>();
        if (poles.size() != 2) throw SchemaError("poles must be a pair");
        n.witness.poles = {poles[0], poles[1]};
        n.witness.hexagon = j.at("hexagon").get<std::vector<int>>();
        n.witness.s1 = j.at("s1").get<int>();
        n.witness.s2 = j.at("s2").get<int>();
        n.witness.middle = j.at("middle").get<int>();
        return n;
    }
    if (kind == "CircuitSplit") {
        NodeCircuitSplit n;
        n.circuit = circuit_from_json(j.at("circuit"));
        n.left = std::make_unique<CertTree>(tree_from_json(j.at("left")));
        n.right = std::make_unique<CertTree>(tree_from_json(j.at("right")));
        return n;
    }
    if (kind == "EuclideanReduction") {
        NodeEuclideanReduction n;
        n.euclidean_vertices = j.at("euclidean_vertices").get<std::vector<int>>();
        n.reduced_digest = j.at("reduced_digest").get<std::string>();
        const json& outcome = j.at("outcome");
        const std::string type = outcome.at("type").get<std::string>();
        if (type == "SimplexAfterReduction") {
            n.dual_is_simplex = true;
            n.simplex_gram = gram_from_json(outcome.at("gram"));
        } else if (type == "Andreev") {
            n.dual_is_simplex = false;
            n.transcript = transcript_from_json_obj(outcome.at("transcript"));
        } else {
            throw SchemaError("unknown reduction outcome: " + type);
        }
        return n;
    }
    throw SchemaError("unknown certificate node kind: " + kind);
}

CertTree tree_from_json(const json& j) {
    if (!j.is_object()) throw SchemaError("certificate tree must be an object");
    CertTree t;
    t.digest = j.at("digest").get<std::string>();
    if (t.digest.size() != 64) throw SchemaError("digest must be 64 hex characters");
    t.node = node_from_json(j.at("node"));
    return t;
}

}  // namespace

std::string serialize(const Certificate& cert) {
    json j;
    j["format"] = kCertificateFormat;
    j["engine"] = cert.engine;
    j["certificate"] = tree_to_json(cert.root);
    return j.dump();
}

Certificate deserialize(const std::string& bytes) {
    json j;
    try {
        j = json::parse(bytes);
    } catch (const json::exception& e) {
        throw SchemaError(std::string("invalid certificate JSON: ") + e.what());
    }
    try {
        if (!j.is_object() || j.at("format").get<std::string>() != kCertificateFormat)
            throw SchemaError("not a singer certificate");
        Certificate cert;
        cert.engine = j.at("engine").get<std::string>();
        cert.root = tree_from_json(j.at("certificate"));
        return cert;
    } catch (const json::exception& e) {
        throw SchemaError(std::string("malformed certificate: ") + e.what());
    }
}

}  // namespace singer
