#pragma once

#include <vector>

#include "steinerlab/formulas.hpp"
#include "steinerlab/geometry.hpp"

namespace steinerlab {

/// (n+1) x r integer matrix whose columns are the canonical coordinates of
/// the configuration points.
struct GeneratingMatrix {
    int rows = 0;
    std::vector<std::vector<BigInt>> columns;  // column-major
};

struct CodeParams {
    long long length = 0;
    long long dimension = 0;
    long long distance = 0;
};

GeneratingMatrix generating_matrix(const std::vector<ProjectivePoint>& points);

/// Exact rank over the rationals.
long long rank(const GeneratingMatrix& A);

struct HypResult {
    long long count = 0;
    LinearForm hyperplane;  // one maximizer, canonical normal form
};

/// Brute force: every n-subset of points spanning a hyperplane, incidence
/// counted after dedup by canonical normal form.
HypResult hyp(const std::vector<ProjectivePoint>& points);

/// |X| - hyp(X).
long long min_distance(const std::vector<ProjectivePoint>& points);

CodeParams code_params(const std::vector<ProjectivePoint>& points);

/// Closed-form minimum distances (d_B, d_C) for the Steiner configuration
/// and its complement.
std::pair<BigInt, BigInt> distance_formulas(const DesignParams& params);

struct MdsFlags {
    bool steiner = false;
    bool complement = false;
};

/// MDS criteria: steiner iff n equals the replication number, complement iff
/// n = C(v-1,n-1) - replication number.
MdsFlags mds_check(const DesignParams& params);

}  // namespace steinerlab
