#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>

#include "wci/core.hpp"

using namespace wci;

TEST_CASE("normalize_family sorts both lists") {
    const auto f = normalize_family({3, 1, 1, 1}, {6});
    CHECK(f.space.weights == WeightList{1, 1, 1, 3});
    CHECK(f.degrees == WeightList{6});

    const auto g = normalize_family({1, 2, 3, 4}, {5, 4});
    CHECK(g.space.weights == WeightList{1, 2, 3, 4});
    CHECK(g.degrees == WeightList{4, 5});

    const auto h = normalize_family({1, 1, 2, 3}, {4});
    CHECK(h.space.weights == WeightList{1, 1, 2, 3});
    CHECK(h.degrees == WeightList{4});
}

TEST_CASE("normalize_family rejects bad input") {
    CHECK_THROWS_AS(normalize_family({}, {4}), std::invalid_argument);
    CHECK_THROWS_AS(normalize_family({1, 2}, {}), std::invalid_argument);
    CHECK_THROWS_AS(normalize_family({1, 0, 2}, {3}), std::invalid_argument);
    CHECK_THROWS_AS(normalize_family({1, 2}, {-3}), std::invalid_argument);
    // c > n
    CHECK_THROWS_AS(normalize_family({1, 2}, {3, 4}), std::invalid_argument);
}

TEST_CASE("normalize_family is idempotent and permutation invariant") {
    std::mt19937 rng(42);
    std::uniform_int_distribution<Weight> val(1, 20);
    for (int it = 0; it < 200; ++it) {
        WeightList w{val(rng), val(rng), val(rng), val(rng), val(rng)};
        WeightList d{val(rng), val(rng)};
        const auto f = normalize_family(w, d);
        std::shuffle(w.begin(), w.end(), rng);
        std::shuffle(d.begin(), d.end(), rng);
        const auto g = normalize_family(w, d);
        CHECK(f == g);
        const auto h = normalize_family(f.space.weights, f.degrees);
        CHECK(f == h);
    }
}

TEST_CASE("amplitude and delta profile") {
    const auto f = normalize_family({1, 1, 1, 3}, {6});
    auto [alpha, profile] = amplitude_delta(f);
    CHECK(alpha == 0);
    CHECK(profile.deltas == WeightList{3});
    CHECK(profile.total == 3);

    const auto g = normalize_family({1, 1, 1, 1, 4}, {5});
    auto [ag, pg] = amplitude_delta(g);
    CHECK(ag == -3);
    CHECK(pg.total == 1);

    const auto h = normalize_family({2, 3, 3, 3, 8}, {18});
    auto [ah, ph] = amplitude_delta(h);
    CHECK(ah == -1);
    CHECK(ph.deltas == WeightList{10});
}

TEST_CASE("linear cone reduction") {
    const auto f = normalize_family({1, 1, 2, 2, 3}, {2, 6});
    const auto r = linear_cone_reduce(f);
    REQUIRE(!r.degenerate());
    CHECK(r.steps.size() == 1);
    CHECK(r.family->space.weights == WeightList{1, 1, 2, 3});
    CHECK(r.family->degrees == WeightList{6});

    const auto g = normalize_family({1, 1, 1, 3}, {6});
    const auto rg = linear_cone_reduce(g);
    CHECK(rg.steps.empty());
    CHECK(*rg.family == g);

    const auto h = normalize_family({1, 2, 2, 3, 4}, {4, 6});
    const auto rh = linear_cone_reduce(h);
    CHECK(rh.steps.size() == 1);
    CHECK(rh.family->space.weights == WeightList{1, 2, 2, 3});
    CHECK(rh.family->degrees == WeightList{6});
}

TEST_CASE("linear cone reduction preserves amplitude") {
    const auto f = normalize_family({1, 1, 2, 2, 3, 5}, {2, 5, 6});
    const auto r = linear_cone_reduce(f);
    REQUIRE(!r.degenerate());
    CHECK(r.family->amplitude() == f.amplitude());
}

TEST_CASE("full reduction is degenerate, not an error") {
    const auto f = normalize_family({1, 2}, {2});
    const auto r = linear_cone_reduce(f);
    CHECK(r.degenerate());
    CHECK(r.steps.size() == 1);
    CHECK(r.weights == WeightList{1});
}

TEST_CASE("well-formed ambient space") {
    CHECK(is_wellformed_space(WeightSystem{{1, 1, 1, 3}}));
    CHECK_FALSE(is_wellformed_space(WeightSystem{{2, 2, 3}}));
    CHECK(is_wellformed_space(WeightSystem{{2, 3, 3, 3, 8}}));
    CHECK_FALSE(is_wellformed_space(WeightSystem{{2, 4, 6, 5}})); // drop 5: gcd 2
}

TEST_CASE("exact volumes") {
    const auto f = normalize_family({1, 1, 1, 3}, {6});
    const auto vf = volume(f);
    CHECK(vf.o1_power == Rational(2));
    CHECK(vf.canonical_power == 0);

    const auto g = normalize_family({1, 1, 1, 1, 4}, {5});
    const auto vg = volume(g);
    CHECK(vg.o1_power == Rational(5, 4));
    CHECK(vg.anticanonical_power == Rational(135, 4));

    const auto h = normalize_family({2, 3, 3, 3, 8}, {18});
    const auto vh = volume(h);
    CHECK(vh.o1_power == Rational(1, 24));
    CHECK(vh.anticanonical_power == Rational(1, 24));
    CHECK(vh.canonical_power == Rational(-1, 24));
}

TEST_CASE("volume cross-multiplication identity") {
    std::mt19937 rng(7);
    std::uniform_int_distribution<Weight> val(1, 30);
    for (int it = 0; it < 300; ++it) {
        WeightList w{val(rng), val(rng), val(rng), val(rng), val(rng)};
        WeightList d{val(rng), val(rng)};
        const auto f = normalize_family(w, d);
        const auto v = volume(f);
        BigInt pa(1), pd(1);
        for (Weight a : f.space.weights) pa *= a;
        for (Weight dd : f.degrees) pd *= dd;
        CHECK(v.o1_power * pa == Rational(pd));
    }
}

TEST_CASE("cone lift") {
    const auto f = normalize_family({1, 1, 1, 3}, {6});
    const auto lifted = cone_lift(f);
    CHECK(lifted.space.weights == WeightList{1, 1, 1, 1, 3});
    CHECK(lifted.dim() == f.dim() + 1);
    CHECK(lifted.amplitude() == f.amplitude() - 1);

    const auto g = normalize_family({1, 1, 1, 1, 4}, {5});
    CHECK(cone_lift(g).amplitude() == -4);

    const auto twice = cone_lift(cone_lift(f));
    CHECK(twice.amplitude() == f.amplitude() - 2);
    CHECK(twice.space.weights == WeightList{1, 1, 1, 1, 1, 3});
}

TEST_CASE("rational helpers") {
    CHECK(rational_str(Rational(6, 4)) == "3/2");
    CHECK(rational_str(Rational(-8, 2)) == "-4");
    CHECK(*parse_rational("3/4") == Rational(3, 4));
    CHECK(*parse_rational("-12") == Rational(-12));
    CHECK(!parse_rational("1/0"));
    CHECK(!parse_rational("x/2"));
    CHECK(!parse_rational(""));
    CHECK(rational_pow(Rational(5, 2), 3) == Rational(125, 8));
    CHECK(rational_pow(Rational(2), -2) == Rational(1, 4));
    CHECK(rational_pow(Rational(7), 0) == 1);
}
