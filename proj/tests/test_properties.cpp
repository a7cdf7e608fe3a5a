#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "steinerlab/designs.hpp"
#include "steinerlab/formulas.hpp"
#include "steinerlab/monomial_oracle.hpp"

using namespace steinerlab;

namespace {

struct Instance {
    const char* name;
    SteinerSystem system;
};

std::vector<Instance> bundled() {
    return {{"fano", fano()},
            {"s_2_4_13", s_2_4_13()},
            {"sts9", construct_sts(9)},
            {"s_3_4_8", *search_design(DesignParams(3, 4, 8)).system}};
}

Monomial random_monomial(std::mt19937& rng, int v, int max_exp) {
    std::uniform_int_distribution<int> d(0, max_exp);
    std::vector<int> e(v);
    for (auto& x : e) x = d(rng);
    return Monomial(e);
}

// membership decided independently of the oracle: plain scan
bool member_scan(const Monomial& m, const BlockFamily& fam, int k) {
    for (Mask sigma : fam.blocks) {
        int s = 0;
        for (int i = 0; i < fam.v; ++i)
            if (sigma >> i & 1) s += m.exponents[i];
        if (s < k) return false;
    }
    return true;
}

}  // namespace

TEST_CASE("oracle membership matches an independent scan") {
    std::mt19937 rng(20240811);
    for (const auto& inst : bundled()) {
        CoverIdealSpec J{complement(inst.system)};
        std::uniform_int_distribution<int> kd(1, 6);
        for (int it = 0; it < 1000; ++it) {
            Monomial m = random_monomial(rng, J.family.v, 2);
            int k = kd(rng);
            CHECK(in_symbolic_power(m, J, k) == member_scan(m, J.family, k));
        }
    }
}

TEST_CASE("symbolic powers are nested") {
    std::mt19937 rng(7001);
    for (const auto& inst : bundled()) {
        CoverIdealSpec J{complement(inst.system)};
        std::uniform_int_distribution<int> kd(2, 6);
        for (int it = 0; it < 1000; ++it) {
            Monomial m = random_monomial(rng, J.family.v, 3);
            int k = kd(rng);
            if (in_symbolic_power(m, J, k)) CHECK(in_symbolic_power(m, J, k - 1));
        }
    }
}

TEST_CASE("products multiply symbolic orders") {
    std::mt19937 rng(90210);
    for (const auto& inst : bundled()) {
        CoverIdealSpec J{complement(inst.system)};
        int v = J.family.v;
        std::uniform_int_distribution<int> kd(1, 3);
        for (int it = 0; it < 1000; ++it) {
            Monomial a = random_monomial(rng, v, 2);
            Monomial b = random_monomial(rng, v, 2);
            int ka = kd(rng), kb = kd(rng);
            if (!in_symbolic_power(a, J, ka) || !in_symbolic_power(b, J, kb)) continue;
            std::vector<int> e(v);
            for (int i = 0; i < v; ++i) e[i] = a.exponents[i] + b.exponents[i];
            CHECK(in_symbolic_power(Monomial(e), J, ka + kb));
        }
    }
}

TEST_CASE("dividing by a variable drops the order by at most one") {
    std::mt19937 rng(424242);
    for (const auto& inst : bundled()) {
        CoverIdealSpec J{complement(inst.system)};
        int v = J.family.v;
        std::uniform_int_distribution<int> kd(2, 5);
        std::uniform_int_distribution<int> xd(0, v - 1);
        for (int it = 0; it < 1000; ++it) {
            Monomial m = random_monomial(rng, v, 3);
            int k = kd(rng);
            int x = xd(rng);
            if (m.exponents[x] == 0 || !in_symbolic_power(m, J, k)) continue;
            std::vector<int> e = m.exponents;
            --e[x];
            CHECK(in_symbolic_power(Monomial(e), J, k - 1));
        }
    }
}

TEST_CASE("ordinary powers sit inside symbolic powers") {
    std::mt19937 rng(5150);
    for (const auto& inst : bundled()) {
        if (inst.system.params.v > 9) continue;  // generator sets stay small
        CoverIdealSpec J{complement(inst.system)};
        MonomialIdealGens gens = minimal_generators(J);
        int v = J.family.v;
        std::uniform_int_distribution<std::size_t> gd(0, gens.gens.size() - 1);
        std::uniform_int_distribution<int> dd(1, 3);
        for (int it = 0; it < 1000; ++it) {
            // random product of d generators times a random cofactor
            int d = dd(rng);
            std::vector<int> e = random_monomial(rng, v, 1).exponents;
            for (int j = 0; j < d; ++j) {
                const Monomial& g = gens.gens[gd(rng)];
                for (int i = 0; i < v; ++i) e[i] += g.exponents[i];
            }
            Monomial m(e);
            CHECK(in_ordinary_power(m, gens, d));
            CHECK(in_symbolic_power(m, J, d));
        }
    }
}

TEST_CASE("alpha saturation holds for every instance and many orders") {
    int cases = 0;
    for (const auto& inst : bundled()) {
        const DesignParams& p = inst.system.params;
        for (int m = 1; m <= 250; ++m) {
            CHECK(alpha_formula(p, m + p.n).alpha == alpha_formula(p, m).alpha + p.v);
            ++cases;
        }
    }
    CHECK(cases == 1000);
}

TEST_CASE("formula betti tables respect the regularity bound") {
    for (const auto& inst : bundled()) {
        const DesignParams& p = inst.system.params;
        if (p.t != p.n - 1) continue;
        BettiTable b = betti_table_formula(p);
        for (const auto& [key, val] : b.beta) {
            auto [i, j] = key;
            CHECK(j - i <= regularity(p));
            CHECK(j - i >= p.v - p.n);  // generated in degrees >= alpha
            CHECK(val > 0);
        }
    }
}
