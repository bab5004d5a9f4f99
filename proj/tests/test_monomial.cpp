#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>

#include "wci/monomial.hpp"

using namespace wci;

namespace {

// exhaustive exponent search, the oracle representable() is checked against
bool brute_representable(Weight d, const WeightList& gens, std::size_t idx = 0) {
    if (d == 0) return true;
    if (d < 0 || idx == gens.size()) return false;
    for (Weight k = 0; k * gens[idx] <= d; ++k)
        if (brute_representable(d - k * gens[idx], gens, idx + 1)) return true;
    return false;
}

} // namespace

TEST_CASE("semigroup membership basics") {
    CHECK(semigroup_contains(6, WeightList{1, 3}));
    CHECK_FALSE(semigroup_contains(5, WeightList{2, 4}));
    CHECK(semigroup_contains(16, WeightList{8}));
    CHECK_FALSE(semigroup_contains(18, WeightList{8}));
    CHECK(semigroup_contains(0, WeightList{7, 11}));
    CHECK(semigroup_contains(0, WeightList{}));
    CHECK_FALSE(semigroup_contains(1, WeightList{}));
}

TEST_CASE("witness is the lexicographically smallest exponent vector") {
    const auto w = semigroup_witness(6, WeightList{1, 3});
    REQUIRE(w.has_value());
    CHECK(*w == WeightList{0, 2}); // prefers low exponent on the first generator

    const auto w2 = semigroup_witness(16, WeightList{8});
    CHECK(*w2 == WeightList{2});

    const auto w0 = semigroup_witness(0, WeightList{2, 5});
    CHECK(*w0 == WeightList{0, 0});

    CHECK_FALSE(semigroup_witness(5, WeightList{2, 4}).has_value());
}

TEST_CASE("witness degree consistency") {
    std::mt19937 rng(3);
    std::uniform_int_distribution<Weight> val(1, 9), deg(0, 50);
    for (int it = 0; it < 500; ++it) {
        WeightList gens{val(rng), val(rng), val(rng)};
        const Weight d = deg(rng);
        const auto w = semigroup_witness(d, gens);
        if (!w) continue;
        Weight total = 0;
        for (std::size_t i = 0; i < gens.size(); ++i) total += (*w)[i] * gens[i];
        CHECK(total == d);
    }
}

TEST_CASE("membership agrees with brute force") {
    // modest slice here; the acceptance suite runs the full grid
    for (Weight a = 1; a <= 8; ++a)
        for (Weight b = a; b <= 8; ++b)
            for (Weight c = b; c <= 8; ++c) {
                const WeightList gens{a, b, c};
                for (Weight d = 0; d <= 30; ++d)
                    CHECK(semigroup_contains(d, gens) == brute_representable(d, gens));
            }
}

TEST_CASE("semigroup closure") {
    std::mt19937 rng(11);
    std::uniform_int_distribution<Weight> val(1, 10), deg(0, 40);
    for (int it = 0; it < 300; ++it) {
        WeightList gens{val(rng), val(rng)};
        const Weight d = deg(rng);
        if (!semigroup_contains(d, gens)) continue;
        for (Weight g : gens) CHECK(semigroup_contains(d + g, gens));
    }
}

TEST_CASE("representable maps exponents back to variable indices") {
    const auto f = normalize_family({1, 1, 1, 3}, {6});
    const auto mono = representable(f, 6, VariableSubset{0, 3});
    REQUIRE(mono.has_value());
    CHECK(mono->degree == 6);
    Weight total = 0;
    for (auto [i, k] : mono->exponents) total += k * f.space.weights[i];
    CHECK(total == 6);

    const auto none = representable(f, 5, VariableSubset{3});
    CHECK_FALSE(none.has_value());

    const auto zero = representable(f, 0, VariableSubset{2});
    REQUIRE(zero.has_value());
    CHECK(zero->exponents.empty());
}

TEST_CASE("external candidates") {
    const auto f = normalize_family({1, 1, 1, 1, 4}, {5});
    CHECK(external_candidates(f, 5, VariableSubset{4}) == std::vector<int>{0, 1, 2, 3});

    const auto g = normalize_family({1, 1, 1, 3}, {6});
    CHECK(external_candidates(g, 6, VariableSubset{3}).empty());
    CHECK(external_candidates(g, 6, VariableSubset{0, 1, 2, 3}).empty());
}

TEST_CASE("candidates survive growing the subset") {
    // e in cand(E) stays a candidate for any E' containing E that does not
    // absorb e itself (the semigroup only grows)
    std::mt19937 rng(17);
    std::uniform_int_distribution<Weight> val(1, 9), deg(1, 40);
    for (int it = 0; it < 200; ++it) {
        WeightList w{val(rng), val(rng), val(rng), val(rng), val(rng)};
        const auto f = normalize_family(w, {deg(rng)});
        const Weight d = f.degrees[0];
        const VariableSubset E{1, 3};
        const VariableSubset Eprime{1, 2, 3};
        const auto ce = external_candidates(f, d, E);
        const auto cp = external_candidates(f, d, Eprime);
        for (int e : ce) {
            if (std::find(Eprime.begin(), Eprime.end(), e) != Eprime.end()) continue;
            CHECK(std::find(cp.begin(), cp.end(), e) != cp.end());
        }
    }
}

TEST_CASE("distinct assignment") {
    CHECK_FALSE(distinct_assignment({{0}, {0}}).has_value());
    const auto a = distinct_assignment({{0, 1}, {0}});
    REQUIRE(a.has_value());
    CHECK(*a == std::vector<int>{1, 0});
    const auto empty = distinct_assignment({});
    REQUIRE(empty.has_value());
    CHECK(empty->empty());
}

TEST_CASE("distinct assignment matches Hall's condition") {
    std::mt19937 rng(23);
    std::uniform_int_distribution<int> nreq(1, 5), coin(0, 1);
    for (int it = 0; it < 400; ++it) {
        const int r = nreq(rng);
        std::vector<std::vector<int>> reqs(r);
        for (auto& req : reqs)
            for (int e = 0; e < 5; ++e)
                if (coin(rng)) req.push_back(e);
        bool hall = true;
        for (unsigned mask = 1; mask < (1u << r); ++mask) {
            std::set<int> uni;
            int cnt = 0;
            for (int j = 0; j < r; ++j)
                if (mask >> j & 1) {
                    ++cnt;
                    uni.insert(reqs[j].begin(), reqs[j].end());
                }
            if (static_cast<int>(uni.size()) < cnt) hall = false;
        }
        CHECK(distinct_assignment(reqs).has_value() == hall);
    }
}

TEST_CASE("table window lookup") {
    const SemigroupTable t(WeightList{3, 7}, 40);
    CHECK(t.max_member_in(0, 40) == 40);
    CHECK(t.max_member_in(4, 6) == 6);
    CHECK(t.max_member_in(1, 2) == -1);
    CHECK(t.max_member_in(11, 11) == -1);
    CHECK(t.max_member_in(-5, 2) == 0);
    const SemigroupTable empty({}, 10);
    CHECK(empty.max_member_in(0, 10) == 0);
    CHECK(empty.max_member_in(1, 10) == -1);
}
