#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "wci/singularity.hpp"

using namespace wci;

TEST_CASE("discrepancy formula") {
    CHECK(blowup_discrepancy(4, WeightList{1, 1, 1}) == Rational(-1, 4));
    CHECK(blowup_discrepancy(8, WeightList{3, 3, 3}) == Rational(1, 8));
    CHECK(blowup_discrepancy(2, WeightList{1, 1, 1}) == Rational(1, 2));
    CHECK_THROWS_AS(blowup_discrepancy(1, WeightList{1}), std::invalid_argument);
    CHECK_THROWS_AS(blowup_discrepancy(4, WeightList{0}), std::invalid_argument);
    CHECK_THROWS_AS(blowup_discrepancy(4, WeightList{4}), std::invalid_argument);
}

TEST_CASE("discrepancy is invariant under common scaling") {
    const WeightList base{1, 2};
    for (Weight t = 1; t <= 6; ++t) {
        WeightList scaled;
        for (Weight w : base) scaled.push_back(t * w);
        CHECK(blowup_discrepancy(3 * t, scaled) == blowup_discrepancy(3, base));
    }
}

TEST_CASE("coordinate point analysis on the worked examples") {
    const auto f = normalize_family({1, 1, 1, 1, 4}, {5});
    const auto pa = coordinate_point_analysis(f, 4);
    REQUIRE(pa.kind == PointAnalysis::Kind::quotient);
    CHECK(pa.singularity->order == 4);
    CHECK(pa.singularity->local_weights == WeightList{1, 1, 1});
    CHECK(pa.singularity->discrepancy == Rational(-1, 4));
    CHECK(pa.singularity->matched_externals == std::vector<int>{0});
    CHECK_FALSE(pa.singularity->reduced);

    const auto g = normalize_family({1, 1, 1, 3}, {6});
    CHECK(coordinate_point_analysis(g, 3).kind == PointAnalysis::Kind::off_x);

    const auto h = normalize_family({2, 3, 3, 3, 8}, {18});
    const auto ph = coordinate_point_analysis(h, 4);
    REQUIRE(ph.kind == PointAnalysis::Kind::quotient);
    CHECK(ph.singularity->order == 8);
    CHECK(ph.singularity->local_weights == WeightList{3, 3, 3});
    CHECK(ph.singularity->discrepancy == Rational(1, 8));
    CHECK(ph.singularity->matched_externals == std::vector<int>{0}); // 18 - 2 = 2*8

    CHECK_THROWS_AS(coordinate_point_analysis(f, 9), std::out_of_range);
}

TEST_CASE("weight-1 points never appear") {
    const auto f = normalize_family({1, 1, 1, 1, 4}, {5});
    for (int i = 0; i < 4; ++i)
        CHECK(coordinate_point_analysis(f, i).kind == PointAnalysis::Kind::off_x);
    CHECK(coordinate_point_scan(f).size() == 1);
}

TEST_CASE("point on X without equation structure") {
    // P_2 lies on X (4 does not divide 6) and no d - a_e is a multiple of 4
    const auto f = normalize_family({1, 1, 4, 5}, {6});
    CHECK(coordinate_point_analysis(f, 2).kind == PointAnalysis::Kind::no_structure);
}

TEST_CASE("hypersurface structure d = a_n + a_e gives q = -alpha/a_n - 1") {
    const auto f = normalize_family({1, 1, 1, 2, 3}, {5});
    const auto pa = coordinate_point_analysis(f, 4);
    REQUIRE(pa.kind == PointAnalysis::Kind::quotient);
    const Weight e = pa.singularity->matched_externals[0];
    CHECK(f.degrees[0] == f.space.weights[4] + f.space.weights[e]);
    const Rational expected = Rational(-f.amplitude(), f.space.weights[4]) - 1;
    CHECK(pa.singularity->discrepancy == expected);
}

TEST_CASE("klt witness scan") {
    const auto f = normalize_family({1, 1, 1, 1, 4}, {5});
    const auto w1 = epsilon_klt_witness(f, KltParams(Rational(4, 5)));
    REQUIRE(w1.has_value());
    CHECK(w1->point_index == 4);

    CHECK_FALSE(epsilon_klt_witness(f, KltParams(Rational(1, 2))).has_value());

    const auto g = normalize_family({1, 1, 1, 3}, {6});
    CHECK_FALSE(epsilon_klt_witness(g, KltParams(Rational(1))).has_value());

    CHECK_THROWS_AS(KltParams(Rational(0)), std::invalid_argument);
    CHECK_THROWS_AS(KltParams(Rational(3, 2)), std::invalid_argument);
}

TEST_CASE("anticanonical template families across k") {
    // weights (2, k, k, k, 3k-1), degree 6k: the top point carries
    // 1/(3k-1)(k,k,k), so the stored discrepancy is 1/(3k-1); the twisted
    // representation (1,1,1) of the same quotient gives 3/(3k-1) - 1.
    for (Weight k : WeightList{3, 5, 7}) {
        const auto f = normalize_family({2, k, k, k, 3 * k - 1}, {6 * k});
        const auto pa = coordinate_point_analysis(f, 4);
        REQUIRE(pa.kind == PointAnalysis::Kind::quotient);
        CHECK(pa.singularity->local_weights == WeightList{k, k, k});
        CHECK(pa.singularity->discrepancy == Rational(1, 3 * k - 1));
        CHECK_FALSE(epsilon_klt_witness(f, KltParams(Rational(1))).has_value());
        CHECK(blowup_discrepancy(3 * k - 1, WeightList{1, 1, 1}) ==
              Rational(3, 3 * k - 1) - 1);
    }
}

TEST_CASE("degenerate direction is discarded and flagged") {
    // P_3 (weight 4) lies on X_9, matched through e = 0; the surviving
    // weight 8 is divisible by 4 and must be dropped from the local type
    const auto f = normalize_family({1, 2, 3, 4, 8}, {9});
    const auto pa = coordinate_point_analysis(f, 3);
    REQUIRE(pa.kind == PointAnalysis::Kind::quotient);
    CHECK(pa.singularity->reduced);
    CHECK(pa.singularity->matched_externals == std::vector<int>{0});
    CHECK(pa.singularity->local_weights == WeightList{2, 3});
    CHECK(pa.singularity->discrepancy == Rational(1, 4));
}
