#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "fixtures.hpp"
#include "singer/coxeter.hpp"
#include "singer/generator.hpp"
#include "singer/reduction.hpp"

using namespace singer;

TEST_CASE("fixed config yields identical bytes") {
    GeneratorConfig cfg;
    cfg.seed = 1;
    cfg.target_vertices = 20;
    std::string a = canonical_document(generate(cfg));
    std::string b = canonical_document(generate(cfg));
    CHECK(a == b);
    cfg.seed = 2;
    CHECK(canonical_document(generate(cfg)) != a);
}

TEST_CASE("every output passes validation and the metric flag check") {
    for (std::uint64_t seed = 30; seed < 40; ++seed) {
        GeneratorConfig cfg;
        cfg.seed = seed;
        cfg.target_vertices = 8 + static_cast<int>(seed % 23);
        LabeledTriangulation L = generate(cfg);
        CHECK(L.vertex_count() == cfg.target_vertices);
        CHECK(metric_flag_check(L).pass);
        // reparse through the document path
        CHECK(metric_flag_check(parse_triangulation(canonical_document(L))).pass);
    }
}

TEST_CASE("planted circuits are present") {
    SUBCASE("a planted 4-circuit") {
        GeneratorConfig cfg;
        cfg.seed = 5;
        cfg.target_vertices = 21;
        cfg.plant4 = 1;
        LabeledTriangulation L = generate(cfg);
        int fours = 0;
        for (const auto& c : find_empty_euclidean_circuits(L))
            if (c.kind == EmptyEuclideanCircuit::Kind::Four) ++fours;
        CHECK(fours >= 1);
    }
    SUBCASE("a planted 3-circuit") {
        GeneratorConfig cfg;
        cfg.seed = 5;
        cfg.target_vertices = 21;
        cfg.plant3 = 1;
        LabeledTriangulation L = generate(cfg);
        int threes = 0;
        for (const auto& c : find_empty_euclidean_circuits(L))
            if (c.kind == EmptyEuclideanCircuit::Kind::Three) ++threes;
        CHECK(threes >= 1);
    }
    SUBCASE("both at once") {
        GeneratorConfig cfg;
        cfg.seed = 12;
        cfg.target_vertices = 30;
        cfg.plant3 = 2;
        cfg.plant4 = 1;
        LabeledTriangulation L = generate(cfg);
        CHECK(L.vertex_count() == 30);
        int threes = 0, fours = 0;
        for (const auto& c : find_empty_euclidean_circuits(L)) {
            threes += c.kind == EmptyEuclideanCircuit::Kind::Three;
            fours += c.kind == EmptyEuclideanCircuit::Kind::Four;
        }
        CHECK(threes >= 2);
        CHECK(fours >= 1);
    }
}

TEST_CASE("labels stay within the palette's reach") {
    GeneratorConfig cfg;
    cfg.seed = 3;
    cfg.target_vertices = 16;
    cfg.palette = {2, 5};
    LabeledTriangulation L = generate(cfg);
    for (const Edge& e : L.edges()) {
        int m = L.finite_label(e[0], e[1]);
        CHECK(m >= 2);
        CHECK(m <= 5);  // repair only lowers
    }
}

TEST_CASE("infeasible targets fail loudly") {
    GeneratorConfig cfg;
    cfg.seed = 1;
    cfg.target_vertices = 4;
    CHECK_THROWS_AS(generate(cfg), GenerationFailed);
    cfg.target_vertices = 8;
    cfg.plant4 = 1;  // base would drop below the smallest flag complex
    CHECK_THROWS_AS(generate(cfg), GenerationFailed);
    cfg.plant4 = 0;
    cfg.target_vertices = 12;
    cfg.palette = {5};  // no Euclidean triangle available
    cfg.plant3 = 1;
    CHECK_THROWS_AS(generate(cfg), GenerationFailed);
}
