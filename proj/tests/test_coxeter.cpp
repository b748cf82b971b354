#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "fixtures.hpp"
#include "oracles.hpp"
#include "singer/coxeter.hpp"

using namespace singer;

namespace {

LabelMatrix triple(int p, int q, int r) {
    LabelMatrix lm(3);
    lm.set(0, 1, p);
    lm.set(1, 2, q);
    lm.set(0, 2, r);
    return lm;
}

LabelMatrix all_two(int n) {
    LabelMatrix lm(n);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) lm.set(i, j, 2);
    return lm;
}

}  // namespace

TEST_CASE("gram classification fixtures") {
    SUBCASE("identity form on four generators") {
        CHECK(gram_class(all_two(4)) == GramClass{GramClass::Kind::PositiveDefinite, 0});
    }
    SUBCASE("4-cycle labeled 3 is the affine form") {
        LabelMatrix lm(4);
        lm.set(0, 1, 3);
        lm.set(1, 2, 3);
        lm.set(2, 3, 3);
        lm.set(0, 3, 3);
        lm.set(0, 2, 2);
        lm.set(1, 3, 2);
        CHECK(gram_class(lm) == GramClass{GramClass::Kind::PositiveSemidefinite, 1});
    }
    SUBCASE("linear diagram 5-3-4 is indefinite") {
        LabelMatrix lm = all_two(4);
        lm.set(0, 1, 5);
        lm.set(1, 2, 3);
        lm.set(2, 3, 4);
        CHECK(gram_class(lm).kind == GramClass::Kind::Indefinite);
    }
    SUBCASE("rank <= 2 is always definite") {
        CHECK(gram_class(LabelMatrix(1)).kind == GramClass::Kind::PositiveDefinite);
        LabelMatrix lm(2);
        lm.set(0, 1, 7);
        CHECK(gram_class(lm).kind == GramClass::Kind::PositiveDefinite);
    }
    SUBCASE("infinite labels are rejected") {
        LabelMatrix lm(3);
        lm.set(0, 1, 2);  // pair (1,2) and (0,2) left non-adjacent
        CHECK_THROWS_AS(gram_class(lm), InfiniteLabel);
    }
    SUBCASE("subsets beyond 4 are rejected") { CHECK_THROWS_AS(LabelMatrix(5), SubsetTooLarge); }
}

TEST_CASE("rank-3 numeric route agrees with the exact rational test, labels to 50") {
    for (int p = 2; p <= 50; ++p)
        for (int q = p; q <= 50; ++q)
            for (int r = q; r <= 50; ++r) {
                Rational sum = frac(1, p) + frac(1, q) + frac(1, r);
                GramClass expected;
                if (sum > 1)
                    expected = {GramClass::Kind::PositiveDefinite, 0};
                else if (sum == 1)
                    expected = {GramClass::Kind::PositiveSemidefinite, 1};
                else
                    expected = {GramClass::Kind::Indefinite, 0};
                GramClass exact = gram_class(triple(p, q, r));
                GramClass numeric = gram_class_via_minors(triple(p, q, r));
                if (!(exact == expected) || !(numeric == expected)) {
                    CAPTURE(p);
                    CAPTURE(q);
                    CAPTURE(r);
                    REQUIRE(exact == expected);
                    REQUIRE(numeric == expected);
                }
            }
}

TEST_CASE("spherical subsets and orders") {
    SUBCASE("the (2,3,5) triangle group has order 120") {
        CHECK(is_spherical(triple(2, 3, 5)));
        CHECK(spherical_order(triple(2, 3, 5)) == Rational(120));
    }
    SUBCASE("(3,3,3) is the Euclidean triangle") {
        CHECK_FALSE(is_spherical(triple(3, 3, 3)));
        CHECK_THROWS_AS(spherical_order(triple(3, 3, 3)), NotSpherical);
    }
    SUBCASE("(2,2,m) has order 4m") {
        for (int m = 2; m <= 6; ++m) CHECK(spherical_order(triple(2, 2, m)) == Rational(4 * m));
    }
    SUBCASE("low ranks") {
        CHECK(spherical_order(LabelMatrix(0)) == Rational(1));
        CHECK(spherical_order(LabelMatrix(1)) == Rational(2));
        LabelMatrix edge(2);
        edge.set(0, 1, 6);
        CHECK(spherical_order(edge) == Rational(12));
        CHECK_THROWS_AS(spherical_order(all_two(4)), SubsetTooLarge);
    }
}

TEST_CASE("orders match brute-force group enumeration for labels up to 6") {
    for (int p = 2; p <= 6; ++p)
        for (int q = p; q <= 6; ++q)
            for (int r = q; r <= 6; ++r) {
                if (!is_spherical(triple(p, q, r))) continue;
                Rational order = spherical_order(triple(p, q, r));
                REQUIRE(order.get_den() == 1);
                const int bfs = oracles::coxeter_group_order_bfs(p, q, r);
                CAPTURE(p);
                CAPTURE(q);
                CAPTURE(r);
                CHECK(Rational(bfs) == order);
            }
}

TEST_CASE("raising a label never makes a non-spherical triple spherical") {
    for (int p = 2; p <= 12; ++p)
        for (int q = p; q <= 12; ++q)
            for (int r = q; r <= 12; ++r) {
                if (is_spherical(triple(p, q, r))) continue;
                CHECK_FALSE(is_spherical(triple(p + 1, q, r)));
                CHECK_FALSE(is_spherical(triple(p, q + 1, r)));
                CHECK_FALSE(is_spherical(triple(p, q, r + 1)));
            }
}

TEST_CASE("metric flag check") {
    SUBCASE("icosahedron passes") { CHECK(metric_flag_check(fixtures::icosahedron()).pass); }
    SUBCASE("all-2 boundary simplex fails clause (c)") {
        MetricFlagReport r = metric_flag_check(fixtures::simplex_boundary());
        REQUIRE_FALSE(r.pass);
        CHECK(r.violations.size() == 1);
        CHECK(r.violations[0].clause == 'c');
        CHECK(r.violations[0].clique == std::vector<int>{0, 1, 2, 3});
    }
    SUBCASE("a face with angle sum pi fails clause (a)") {
        LabeledTriangulation L =
            fixtures::bipyramid(4, 2, {{{0, 1}, 3}, {{0, 4}, 3}, {{1, 4}, 3}});  // face (4,0,1) = (3,3,3)
        MetricFlagReport r = metric_flag_check(L);
        REQUIRE_FALSE(r.pass);
        CHECK(r.violations[0].clause == 'a');
    }
    SUBCASE("a spherical non-face clique fails clause (b)") {
        // equator of the 3-gon suspension is a non-face 3-clique; labels
        // (2,2,3) make it spherical
        LabeledTriangulation L = fixtures::bipyramid(3, 2, {{{0, 2}, 3}});
        MetricFlagReport r = metric_flag_check(L);
        REQUIRE_FALSE(r.pass);
        bool found_b = false;
        for (const auto& v : r.violations) found_b |= (v.clause == 'b');
        CHECK(found_b);
    }
    SUBCASE("require_metric_flag throws with the violation in the message") {
        CHECK_THROWS_AS(require_metric_flag(fixtures::simplex_boundary()), NotMetricFlag);
    }
}

TEST_CASE("spherical poset") {
    SUBCASE("octahedron has 27 elements") {
        SphericalPoset p = spherical_poset(fixtures::octahedron());
        CHECK(p.elements.size() == 27);  // 1 + 6 + 12 + 8
    }
    SUBCASE("affine boundary simplex has 15 elements") {
        SphericalPoset p = spherical_poset(fixtures::simplex_affine());
        CHECK(p.elements.size() == 15);  // 1 + 4 + 6 + 4
    }
    SUBCASE("icosahedron has 63 elements") {
        SphericalPoset p = spherical_poset(fixtures::icosahedron());
        CHECK(p.elements.size() == 63);  // 1 + 12 + 30 + 20
    }
    SUBCASE("closed under subsets, with the right orders") {
        SphericalPoset p = spherical_poset(fixtures::simplex_affine());
        std::set<std::vector<int>> elems;
        for (const auto& e : p.elements) elems.insert(e.vertices);
        for (const auto& e : p.elements) {
            if (e.vertices.empty()) {
                CHECK(e.order == Rational(1));
                continue;
            }
            if (e.vertices.size() == 1) CHECK(e.order == Rational(2));
            // dropping any one vertex stays in the poset
            for (size_t skip = 0; skip < e.vertices.size(); ++skip) {
                std::vector<int> sub;
                for (size_t i = 0; i < e.vertices.size(); ++i)
                    if (i != skip) sub.push_back(e.vertices[i]);
                CHECK(elems.count(sub) == 1);
            }
        }
    }
    SUBCASE("non metric flag input is rejected") {
        CHECK_THROWS_AS(spherical_poset(fixtures::simplex_boundary()), NotMetricFlag);
    }
}

TEST_CASE("exact l2 Euler characteristic") {
    SUBCASE("octahedron: 1 - 3 + 3 - 1 = 0") {
        CHECK(l2_euler_characteristic(fixtures::octahedron()) == Rational(0));
    }
    SUBCASE("icosahedron: 1 - 6 + 30/4 - 20/8 = 0") {
        CHECK(l2_euler_characteristic(fixtures::icosahedron()) == Rational(0));
    }
    SUBCASE("rejects non metric flag input") {
        CHECK_THROWS_AS(l2_euler_characteristic(fixtures::simplex_boundary()), NotMetricFlag);
    }
    SUBCASE("agrees with the alternating sum over the poset") {
        for (const LabeledTriangulation& L : {fixtures::octahedron(), fixtures::icosahedron(),
                                              fixtures::simplex_affine(), fixtures::gyro_bipyramid()}) {
            Rational by_poset = 0;
            for (const auto& e : spherical_poset(L).elements) {
                Rational term = Rational(1) / e.order;
                by_poset += (e.vertices.size() % 2 == 0) ? term : -term;
            }
            CHECK(by_poset == l2_euler_characteristic(L));
        }
    }
}
