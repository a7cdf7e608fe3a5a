#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "steinerlab/codes.hpp"
#include "steinerlab/designs.hpp"

using namespace steinerlab;

namespace {

std::vector<ProjectivePoint> fano_points(const BlockFamily& fam) {
    Arrangement A = vandermonde_arrangement(7, 3, default_nodes(7));
    return configuration_points(A, fam);
}

}  // namespace

TEST_CASE("generating matrix") {
    auto pts = fano_points(fano().blocks);
    GeneratingMatrix M = generating_matrix(pts);
    CHECK(M.rows == 4);
    CHECK(M.columns.size() == 7);
    CHECK(rank(M) == 4);

    CHECK_THROWS(generating_matrix({}));
    auto dup = pts;
    dup.push_back(pts[0]);
    CHECK_THROWS(generating_matrix(dup));
}

TEST_CASE("hyp and distance for the Fano configuration") {
    auto pts = fano_points(fano().blocks);
    HypResult h = hyp(pts);
    CHECK(h.count == 3);
    // the reported hyperplane really passes through `count` of the points
    long long on = 0;
    for (const auto& p : pts) {
        BigInt s = 0;
        for (std::size_t k = 0; k < h.hyperplane.coefficients.size(); ++k)
            s += h.hyperplane.coefficients[k] * p.coordinates[k];
        if (s == 0) ++on;
    }
    CHECK(on == h.count);
    CHECK(min_distance(pts) == 4);

    CodeParams cp = code_params(pts);
    CHECK(cp.length == 7);
    CHECK(cp.dimension == 4);
    CHECK(cp.distance == 4);
}

TEST_CASE("complement and star configurations on the Fano arrangement") {
    auto comp = fano_points(complement(fano()));
    CodeParams cc = code_params(comp);
    CHECK(cc.length == 28);
    CHECK(cc.dimension == 4);
    CHECK(cc.distance == 16);
    CHECK(hyp(comp).count == 12);

    auto star = fano_points(full_family(7, 3));
    CodeParams cs = code_params(star);
    CHECK(cs.length == 35);
    CHECK(cs.dimension == 4);
    CHECK(cs.distance == 20);
    CHECK(hyp(star).count == 15);
}

TEST_CASE("distance formulas agree with brute force") {
    auto [db, dc] = distance_formulas(fano().params);
    CHECK(db == 4);
    CHECK(dc == 16);
    CHECK(db == min_distance(fano_points(fano().blocks)));
    CHECK(dc == min_distance(fano_points(complement(fano()))));

    auto [db13, dc13] = distance_formulas(s_2_4_13().params);
    CHECK(db13 == 9);
    CHECK(dc13 == 486);
}

TEST_CASE("mds flags") {
    MdsFlags f = mds_check(fano().params);
    CHECK(f.steiner);       // [7,4,4]: d = length - dimension + 1
    CHECK_FALSE(f.complement);

    // S(2,4,13): replication 4 = n, so the Steiner code [13,5,9] is MDS
    MdsFlags s13 = mds_check(s_2_4_13().params);
    CHECK(s13.steiner);
    CHECK_FALSE(s13.complement);

    // MDS flag matches the Singleton bound computed by brute force
    CodeParams cp = code_params(fano_points(fano().blocks));
    CHECK((cp.distance == cp.length - cp.dimension + 1) == f.steiner);
    CodeParams cc = code_params(fano_points(complement(fano())));
    CHECK((cc.distance == cc.length - cc.dimension + 1) == f.complement);
}

TEST_CASE("code parameters are arrangement independent") {
    Arrangement B = vandermonde_arrangement(
        7, 3, {Rat(-3), Rat(-1), Rat(1, 2), Rat(2), Rat(5), Rat(8, 3), Rat(11)});
    REQUIRE(general_position_check(B));
    auto pts = configuration_points(B, fano().blocks);
    CodeParams cp = code_params(pts);
    CHECK(cp.length == 7);
    CHECK(cp.dimension == 4);
    CHECK(cp.distance == 4);
    CHECK(min_distance(configuration_points(B, complement(fano()))) == 16);
}

TEST_CASE("sts distance formulas line up with the code formulas") {
    for (int v : {7, 9, 13}) {
        DesignParams p(2, 3, v);
        auto [db, dc] = distance_formulas(p);
        auto [sb, sc] = sts_distances(v);
        CHECK(db == sb);
        CHECK(dc == sc);
    }
}
