#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <nlohmann/json.hpp>

#include "fixtures.hpp"
#include "singer/certify.hpp"
#include "singer/generator.hpp"

using namespace singer;
using json = nlohmann::json;

namespace {

GeneratorConfig corpus_config(std::uint64_t seed) {
    GeneratorConfig cfg;
    cfg.seed = seed;
    cfg.target_vertices = 14 + static_cast<int>(seed % 17);
    cfg.plant3 = seed % 5 == 0 ? 1 : 0;
    cfg.plant4 = seed % 3 == 0 ? 1 : 0;
    cfg.target_vertices += 3 * (cfg.plant3 + cfg.plant4);
    return cfg;
}

int tree_depth(const CertTree& t) {
    if (const auto* split = std::get_if<NodeCircuitSplit>(&t.node))
        return 1 + std::max(tree_depth(*split->left), tree_depth(*split->right));
    return 1;
}

// walks the certificate, reconstructing each split child, and applies f to
// every (complex, node) pair
template <typename F>
void walk(const LabeledTriangulation& L, const CertTree& t, F&& f) {
    f(L, t.node);
    if (const auto* split = std::get_if<NodeCircuitSplit>(&t.node)) {
        SplitResult s = split_along_circuit(L, split->circuit);
        walk(s.first, *split->left, f);
        walk(s.second, *split->right, f);
    }
}

}  // namespace

TEST_CASE("named fixture certificates have the expected node kinds") {
    SUBCASE("affine boundary simplex") {
        Certificate c = certify(fixtures::simplex_affine());
        CHECK(node_kind(c.root.node) == "BaseSimplexEuclidean");
        const auto& n = std::get<NodeBaseSimplex>(c.root.node);
        CHECK(n.gram == GramClass{GramClass::Kind::PositiveSemidefinite, 1});
    }
    SUBCASE("5-3-4 boundary simplex") {
        Certificate c = certify(fixtures::simplex_534());
        CHECK(node_kind(c.root.node) == "BaseSimplexHyperbolic");
        CHECK(std::get<NodeBaseSimplex>(c.root.node).gram.kind == GramClass::Kind::Indefinite);
    }
    SUBCASE("icosahedron reduces with empty T and a passing transcript") {
        Certificate c = certify(fixtures::icosahedron());
        REQUIRE(node_kind(c.root.node) == "EuclideanReduction");
        const auto& n = std::get<NodeEuclideanReduction>(c.root.node);
        CHECK(n.euclidean_vertices.empty());
        REQUIRE(n.transcript.has_value());
        CHECK(n.transcript->pass);
    }
    SUBCASE("octahedron splits at its Euclidean poles") {
        Certificate c = certify(fixtures::octahedron());
        REQUIRE(node_kind(c.root.node) == "SuspensionCase");
        const auto& n = std::get<NodeSuspension>(c.root.node);
        CHECK(n.n == 4);
        CHECK(subcase_tag(n.subcase) == "EuclideanPolesSplit");
        // the poles are the pair off the first failing circuit, 4-Euclidean
        for (int pole : n.poles)
            CHECK(classify_vertex(fixtures::octahedron(), pole) == VertexClass::Euclid4);
    }
    SUBCASE("right-angled prism suspension") {
        Certificate c = certify(fixtures::prism_all_right_angles());
        const auto& n = std::get<NodeSuspension>(c.root.node);
        CHECK(n.n == 3);
        CHECK(subcase_tag(n.subcase) == "RightAngledSuspension");
    }
    SUBCASE("affine equator clique splits at 3-Euclidean poles") {
        Certificate c = certify(fixtures::planted_affine_clique());
        const auto& n = std::get<NodeSuspension>(c.root.node);
        CHECK(n.n == 3);
        CHECK(subcase_tag(n.subcase) == "EuclideanPolesSplit");
    }
    SUBCASE("a 4-gon suspension can pass Andreev outright") {
        Certificate c = certify(fixtures::suspension4_andreev_pass());
        const auto& n = std::get<NodeSuspension>(c.root.node);
        CHECK(n.n == 4);
        CHECK(subcase_tag(n.subcase) == "AndreevDirect");
    }
    SUBCASE("the three 5-gon branches") {
        CHECK(subcase_tag(std::get<NodeSuspension>(certify(fixtures::five_gon_reduction_fixture()).root.node)
                              .subcase) == "FiveGonReduction");
        CHECK(subcase_tag(std::get<NodeSuspension>(certify(fixtures::five_gon_figure4_fixture()).root.node)
                              .subcase) == "FiveGonFigure4Split");
        CHECK(subcase_tag(std::get<NodeSuspension>(certify(fixtures::five_gon_adjacent_fixture()).root.node)
                              .subcase) == "FiveGonAdjacentEuclidean");
    }
    SUBCASE("an L6-triangulation is its own certificate") {
        Certificate c = certify(fixtures::l6_triangulation());
        REQUIRE(node_kind(c.root.node) == "L6");
        const auto& n = std::get<NodeL6>(c.root.node);
        CHECK(n.witness.poles == std::array<int, 2>{6, 7});
    }
    SUBCASE("non metric flag input is rejected") {
        CHECK_THROWS_AS(certify(fixtures::simplex_boundary()), NotMetricFlag);
    }
}

TEST_CASE("soundness loop on a small corpus") {
    for (std::uint64_t seed = 1; seed <= 20; ++seed) {
        LabeledTriangulation L = generate(corpus_config(seed));
        Certificate cert = certify(L);
        VerificationReport report = verify(L, cert);
        if (!report.accepted) {
            CAPTURE(seed);
            for (const auto& f : report.failures) {
                CAPTURE(f.path);
                CAPTURE(f.reason);
            }
            REQUIRE(report.accepted);
        }
        CHECK(tree_depth(cert.root) <= L.vertex_count());
    }
}

TEST_CASE("split children re-enter the full dispatch") {
    for (std::uint64_t seed : {3, 6, 9, 15, 20}) {
        LabeledTriangulation L = generate(corpus_config(seed));
        Certificate cert = certify(L);
        walk(L, cert.root, [](const LabeledTriangulation& piece, const CertNode& node) {
            const std::string kind = node_kind(node);
            if (recognize_boundary_simplex(piece)) {
                CHECK((kind == "BaseSimplexEuclidean" || kind == "BaseSimplexHyperbolic"));
                return;
            }
            if (auto s = recognize_suspension(piece); s && s->gon() <= 5) {
                CHECK(kind == "SuspensionCase");
                return;
            }
            if (recognize_L6(piece)) {
                CHECK(kind == "L6");
                return;
            }
            if (!find_empty_euclidean_circuits(piece).empty()) {
                CHECK(kind == "CircuitSplit");
                return;
            }
            CHECK(kind == "EuclideanReduction");
        });
    }
}

TEST_CASE("serialization") {
    Certificate cert = certify(fixtures::octahedron());
    const std::string bytes = serialize(cert);

    SUBCASE("round trip is the identity on bytes") {
        Certificate back = deserialize(bytes);
        CHECK(serialize(back) == bytes);
        CHECK(back.engine == cert.engine);
    }
    SUBCASE("two runs serialize identically") {
        CHECK(serialize(certify(fixtures::octahedron())) == bytes);
    }
    SUBCASE("truncated bytes") {
        CHECK_THROWS_AS(deserialize(bytes.substr(0, bytes.size() / 2)), SchemaError);
    }
    SUBCASE("wrong format marker") {
        std::string other = bytes;
        other.replace(other.find("singer-certificate-v1"), 21, "something-else-entire");
        CHECK_THROWS_AS(deserialize(other), SchemaError);
    }
}

TEST_CASE("verification rejects tampering") {
    LabeledTriangulation L = generate(corpus_config(6));  // planted: has a CircuitSplit
    Certificate cert = certify(L);
    REQUIRE(verify(L, cert).accepted);
    const std::string bytes = serialize(cert);

    SUBCASE("digest mismatch rejects at the root") {
        VerificationReport r = verify(fixtures::icosahedron(), cert);
        REQUIRE_FALSE(r.accepted);
        REQUIRE(r.failures.size() == 1);
        CHECK(r.failures[0].path == "root");
        CHECK(r.failures[0].reason.find("digest") != std::string::npos);
    }
    SUBCASE("swapping a circuit vertex rejects at that node") {
        json j = json::parse(bytes);
        REQUIRE(j["certificate"]["node"]["kind"] == "CircuitSplit");
        auto& cycle = j["certificate"]["node"]["circuit"]["cycle"];
        std::swap(cycle[0], cycle[1]);
        Certificate bad = deserialize(j.dump());
        VerificationReport r = verify(L, bad);
        REQUIRE_FALSE(r.accepted);
        CHECK(r.failures[0].path == "root");
        CHECK(r.failures[0].reason.find("circuit") != std::string::npos);
    }
    SUBCASE("tampering deep in a child is localized") {
        json j = json::parse(bytes);
        json& left = j["certificate"]["node"]["left"];
        std::string digest = left["digest"].get<std::string>();
        digest[0] = digest[0] == '0' ? '1' : '0';
        left["digest"] = digest;
        Certificate bad = deserialize(j.dump());
        VerificationReport r = verify(L, bad);
        REQUIRE_FALSE(r.accepted);
        CHECK(r.failures[0].path == "root.left");
    }
    SUBCASE("out-of-range witness indices are failures, not crashes") {
        json j = json::parse(serialize(certify(fixtures::octahedron())));
        j["certificate"]["node"]["poles"] = {0, 99};
        Certificate bad = deserialize(j.dump());
        VerificationReport r = verify(fixtures::octahedron(), bad);
        CHECK_FALSE(r.accepted);
    }
    SUBCASE("a wrong Gram class is caught") {
        json j = json::parse(serialize(certify(fixtures::simplex_affine())));
        j["certificate"]["node"]["kind"] = "BaseSimplexHyperbolic";
        j["certificate"]["node"]["gram"] = {{"class", "Indefinite"}};
        Certificate bad = deserialize(j.dump());
        CHECK_FALSE(verify(fixtures::simplex_affine(), bad).accepted);
    }
    SUBCASE("a truncated Euclidean vertex set is caught") {
        LabeledTriangulation g = fixtures::gyro_bipyramid();
        json j = json::parse(serialize(certify(g)));
        REQUIRE(j["certificate"]["node"]["kind"] == "EuclideanReduction");
        j["certificate"]["node"]["euclidean_vertices"] = {8};
        CHECK_FALSE(verify(g, deserialize(j.dump())).accepted);
    }
    SUBCASE("a swapped five-gon witness is caught") {
        LabeledTriangulation L5 = fixtures::five_gon_figure4_fixture();
        json j = json::parse(serialize(certify(L5)));
        j["certificate"]["node"]["subcase"]["v"] = 1;
        CHECK_FALSE(verify(L5, deserialize(j.dump())).accepted);
    }
    SUBCASE("a forged L6 overlap is caught") {
        LabeledTriangulation l6 = fixtures::l6_triangulation();
        json j = json::parse(serialize(certify(l6)));
        j["certificate"]["node"]["s1"] = j["certificate"]["node"]["middle"];
        CHECK_FALSE(verify(l6, deserialize(j.dump())).accepted);
    }
    SUBCASE("an unknown node kind is a schema error") {
        json j = json::parse(bytes);
        j["certificate"]["node"]["kind"] = "Imagined";
        CHECK_THROWS_AS(deserialize(j.dump()), SchemaError);
    }
}

TEST_CASE("corpus euler characteristic vanishes") {
    for (std::uint64_t seed : {2, 4, 8, 16}) {
        LabeledTriangulation L = generate(corpus_config(seed));
        CHECK(l2_euler_characteristic(L) == Rational(0));
    }
}
