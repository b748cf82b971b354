#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "fixtures.hpp"
#include "singer/andreev.hpp"
#include "singer/reduction.hpp"

using namespace singer;

namespace {

LabeledCellComplex embed(const LabeledTriangulation& L) { return LabeledCellComplex::from_triangulation(L); }

int failing_conditions(const AndreevTranscript& t, std::string* which = nullptr) {
    int n = 0;
    for (const auto& c : t.conditions)
        if (!c.pass) {
            ++n;
            if (which) *which = c.id;
        }
    return n;
}

}  // namespace

TEST_CASE("dual polytope combinatorics") {
    SUBCASE("icosahedron dual is the dodecahedron pattern") {
        DualPolytope d = dual_polytope(embed(fixtures::icosahedron()));
        CHECK(d.faces == 12);
        CHECK(d.polytope_vertices == 20);
        CHECK(d.trivalent_vertices == 20);
        CHECK(d.quadrivalent_vertices == 0);
        CHECK_FALSE(d.is_simplex);
        CHECK_FALSE(d.is_triangular_prism);
    }
    SUBCASE("suspension of a 3-gon dualizes to the triangular prism") {
        DualPolytope d = dual_polytope(embed(fixtures::prism_all_right_angles()));
        CHECK(d.is_triangular_prism);
        REQUIRE(d.prism_poles.has_value());
        CHECK(*d.prism_poles == std::array<int, 2>{3, 4});
        CHECK_FALSE(d.is_simplex);
    }
    SUBCASE("an added square is a 4-valent dual vertex") {
        LabeledTriangulation g = fixtures::gyro_bipyramid();
        auto r = reduce_stars(g, {8});
        REQUIRE(std::holds_alternative<ReducedComplex>(r));
        DualPolytope d = dual_polytope(std::get<ReducedComplex>(r).complex);
        CHECK(d.quadrivalent_vertices == 1);
    }
    SUBCASE("boundary simplex input is routed away") {
        CHECK(dual_polytope(embed(fixtures::simplex_boundary())).is_simplex);
        CHECK_THROWS_AS(andreev_check(embed(fixtures::simplex_boundary())), SimplexInput);
    }
}

TEST_CASE("icosahedron passes all five conditions") {
    AndreevTranscript t = andreev_check(embed(fixtures::icosahedron()));
    CHECK(t.pass);
    for (const auto& c : t.conditions) CHECK(c.pass);
    // (i) evaluated one instance per cell; (ii)/(iii) found nothing to check
    CHECK(t.condition(1).instances.size() == 20);
    CHECK(t.condition(2).instances.empty());
    CHECK(t.condition(3).instances.empty());
}

TEST_CASE("the all-right-angle prism fails exactly condition (iv)") {
    AndreevTranscript t = andreev_check(embed(fixtures::prism_all_right_angles()));
    CHECK_FALSE(t.pass);
    std::string which;
    CHECK(failing_conditions(t, &which) == 1);
    CHECK(which == "iv");
    auto fails = t.condition(4).failures();
    REQUIRE(fails.size() == 1);
    CHECK(fails[0].vertices == std::vector<int>{3, 4});  // the suspension points
    // witness covers all six base/top edges
    CHECK(fails[0].aux.size() == 6);
}

TEST_CASE("a planted non-face (3,3,3) clique fails exactly condition (ii)") {
    AndreevTranscript t = andreev_check(embed(fixtures::planted_affine_clique()));
    CHECK_FALSE(t.pass);
    std::string which;
    CHECK(failing_conditions(t, &which) == 1);
    CHECK(which == "ii");
    auto fails = t.condition(2).failures();
    REQUIRE(fails.size() == 1);
    CHECK(fails[0].vertices == std::vector<int>{0, 1, 2});
    CHECK(fails[0].note == "sum 1/1");  // the boundary equality case
}

TEST_CASE("an all-2 chordless circuit bounding no square fails exactly condition (iii)") {
    AndreevTranscript t = andreev_check(embed(fixtures::octahedron()));
    CHECK_FALSE(t.pass);
    std::string which;
    CHECK(failing_conditions(t, &which) == 1);
    CHECK(which == "iii");
    CHECK(t.condition(3).failures().size() == 3);  // the three equators
    CHECK(t.condition(3).failures()[0].vertices == std::vector<int>{0, 1, 2, 3});
}

TEST_CASE("condition (v) around an added square") {
    SUBCASE("both opposite-pair witnesses carry a non-right angle: pass") {
        LabeledTriangulation L = fixtures::five_gon_reduction_fixture();
        auto r = reduce_stars(L, {0});
        REQUIRE(std::holds_alternative<ReducedComplex>(r));
        AndreevTranscript t = andreev_check(std::get<ReducedComplex>(r).complex);
        CHECK(t.pass);
        CHECK(t.condition(5).instances.size() == 2);  // the two far equator vertices against the poles
    }
    SUBCASE("a witness with two right angles: (v) fails, and (iii) fails in tandem") {
        LabeledTriangulation L = fixtures::five_gon_figure4_fixture();
        auto r = reduce_stars(L, {0});
        REQUIRE(std::holds_alternative<ReducedComplex>(r));
        AndreevTranscript t = andreev_check(std::get<ReducedComplex>(r).complex);
        CHECK_FALSE(t.pass);
        CHECK_FALSE(t.condition(5).pass);
        REQUIRE(t.condition(5).failures().size() == 1);
        CHECK(t.condition(5).failures()[0].note == "labels 2,2");
        // an all-right-angle circuit through the poles is the same
        // configuration seen by condition (iii)
        CHECK_FALSE(t.condition(3).pass);
        CHECK(t.condition(1).pass);
        CHECK(t.condition(2).pass);
        CHECK(t.condition(4).pass);
    }
}

TEST_CASE("transcripts are canonical and round-trip through JSON") {
    AndreevTranscript a = andreev_check(embed(fixtures::octahedron()));
    AndreevTranscript b = andreev_check(embed(fixtures::octahedron()));
    CHECK(transcript_json(a) == transcript_json(b));  // idempotent re-evaluation
    AndreevTranscript c = transcript_from_json(transcript_json(a));
    CHECK(transcript_json(c) == transcript_json(a));
    CHECK_THROWS_AS(transcript_from_json("{\"pass\":true}"), SchemaError);
    CHECK_THROWS_AS(transcript_from_json("not json"), SchemaError);
}
