#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "steinerlab/formulas.hpp"

using namespace steinerlab;

namespace {
const DesignParams kFano(2, 3, 7);
const DesignParams kS2413(2, 4, 13);
const DesignParams kS348(3, 4, 8);
}  // namespace

TEST_CASE("alpha formula") {
    long long expect[] = {4, 6, 7, 11, 13, 14, 18};
    for (int m = 1; m <= 7; ++m) {
        auto d = alpha_formula(kFano, m);
        CHECK(d.alpha == expect[m - 1]);
        CHECK(d.m == m);
        CHECK(d.p * 3 + d.q == m);
        CHECK(d.q >= 0);
        CHECK(d.q < 3);
    }
    CHECK(alpha_formula(kS2413, 1).alpha == 9);
    CHECK(alpha_formula(kS2413, 2).alpha == 11);
    CHECK(alpha_formula(kS2413, 4).alpha == 13);
    CHECK(alpha_formula(kS2413, 5).alpha == 22);
}

TEST_CASE("alpha saturation: alpha(m+n) = alpha(m) + v") {
    for (int m = 1; m <= 20; ++m)
        CHECK(alpha_formula(kFano, m + 3).alpha == alpha_formula(kFano, m).alpha + 7);
    for (int m = 1; m <= 20; ++m)
        CHECK(alpha_formula(kS2413, m + 4).alpha == alpha_formula(kS2413, m).alpha + 13);
}

TEST_CASE("waldschmidt") {
    CHECK(waldschmidt(kFano) == Rat(7, 3));
    CHECK(waldschmidt(kS2413) == Rat(13, 4));
    // alpha(m)/m converges from above to v/n
    for (int m = 1; m <= 30; ++m)
        CHECK(Rat(alpha_formula(kFano, m).alpha, m) >= Rat(7, 3));
    CHECK(Rat(alpha_formula(kFano, 300).alpha, 300) == Rat(7, 3));
}

TEST_CASE("h-vector formula") {
    CHECK(h_vector_formula(kFano).entries == std::vector<long long>{1, 3, 6, 10, 8});
    CHECK(h_vector_formula(kS348).entries == std::vector<long long>{1, 4, 10, 20, 21});
    CHECK(h_vector_formula(kS2413).entries ==
          std::vector<long long>{1, 4, 10, 20, 35, 56, 84, 120, 165, 207});
}

TEST_CASE("regularity") {
    CHECK(regularity(kFano) == 5);
    CHECK(regularity(kS348) == 5);
    CHECK(regularity(kS2413) == 10);
}

TEST_CASE("top linear-strand Betti number") {
    auto f = beta0_top(kFano);
    CHECK(f.is_zero);
    CHECK(f.value == 0);
    auto s8 = beta0_top(kS348);
    CHECK(s8.is_zero);
    CHECK(s8.value == 0);
    auto s13 = beta0_top(kS2413);
    CHECK_FALSE(s13.is_zero);
    CHECK(s13.value == 234);
}

TEST_CASE("betti table formula") {
    BettiTable f = betti_table_formula(kFano);
    CHECK(f.at(0, 4) == 7);
    CHECK(f.at(1, 6) == 14);
    CHECK(f.at(2, 7) == 8);
    CHECK(f.at(1, 5) == 0);
    CHECK(f.beta.size() == 3);

    BettiTable s8 = betti_table_formula(kS348);
    CHECK(s8.at(0, 4) == 14);
    CHECK(s8.at(1, 6) == 56);
    CHECK(s8.at(2, 7) == 64);
    CHECK(s8.at(3, 8) == 21);

    // only defined on the two-strand case t = n-1
    CHECK_THROWS(betti_table_formula(kS2413));
}

TEST_CASE("omega") {
    CHECK(omega(kFano) == 4);
    CHECK(omega(kS348) == 4);
    CHECK(omega(kS2413) == 10);
}

TEST_CASE("resurgence bounds") {
    auto f = resurgence_bounds(kFano);
    CHECK(f.lower == Rat(12, 7));
    CHECK(f.upper == Rat(15, 7));
    CHECK(f.asymptotic_equality);

    auto s13 = resurgence_bounds(kS2413);
    CHECK(s13.lower == Rat(36, 13));
    CHECK(s13.upper == Rat(40, 13));
    CHECK_FALSE(s13.asymptotic_equality);
}

TEST_CASE("noncontainment threshold") {
    CHECK(noncontainment_threshold(kFano, 3) == Rat(7, 4));
    CHECK(noncontainment_threshold(kFano, 4) == Rat(11, 4));
    // the threshold stays below m * upper resurgence bound
    for (int m = 1; m <= 12; ++m)
        CHECK(noncontainment_threshold(kFano, m) <= Rat(15, 7) * m);
}

TEST_CASE("containment gap") {
    // floor(alpha(m) / (alpha(1) * reg)) = floor(alpha(m) / 20) on the Fano
    CHECK(containment_gap(kFano, 4) == 0);
    CHECK(containment_gap(kFano, 7) == 0);
    CHECK(containment_gap(kFano, 12) == 1);
    CHECK(containment_gap(kFano, 24) == 2);
}

TEST_CASE("sts distances") {
    CHECK(sts_distances(7) == std::pair<BigInt, BigInt>(4, 16));
    CHECK(sts_distances(9) == std::pair<BigInt, BigInt>(8, 48));
    CHECK(sts_distances(13) == std::pair<BigInt, BigInt>(20, 200));
    CHECK_THROWS(sts_distances(8));
}
