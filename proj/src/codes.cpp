#include "steinerlab/codes.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>

namespace steinerlab {

namespace {

std::size_t rank_exact(std::vector<std::vector<BigInt>> m) {
    if (m.empty()) return 0;
    std::size_t rows = m.size(), cols = m[0].size();
    std::size_t rank = 0;
    BigInt prev = 1;
    for (std::size_t c = 0; c < cols && rank < rows; ++c) {
        std::size_t piv = rank;
        while (piv < rows && m[piv][c] == 0) ++piv;
        if (piv == rows) continue;
        std::swap(m[rank], m[piv]);
        for (std::size_t i = rank + 1; i < rows; ++i)
            for (std::size_t j = c + 1; j < cols; ++j)
                m[i][j] = (m[i][j] * m[rank][c] - m[i][c] * m[rank][j]) / prev;
        for (std::size_t i = rank + 1; i < rows; ++i) m[i][c] = 0;
        prev = m[rank][c];
        ++rank;
    }
    return rank;
}

// Hyperplane through n points of rank n: null space of the n x (n+1)
// coordinate matrix, via cofactors of the transpose.
std::vector<BigInt> hyperplane_normal(const std::vector<const ProjectivePoint*>& pts) {
    int cols = int(pts[0]->coordinates.size());
    std::vector<BigInt> normal(cols);
    for (int k = 0; k < cols; ++k) {
        std::vector<std::vector<BigInt>> minor;
        for (const auto* p : pts) {
            std::vector<BigInt> r;
            for (int j = 0; j < cols; ++j)
                if (j != k) r.push_back(p->coordinates[j]);
            minor.push_back(std::move(r));
        }
        // Bareiss determinant of the (n x n) minor
        std::size_t n = minor.size();
        BigInt det = 1;
        {
            BigInt prev = 1;
            int sign = 1;
            bool zero = false;
            for (std::size_t kk = 0; kk + 1 < n && !zero; ++kk) {
                if (minor[kk][kk] == 0) {
                    std::size_t piv = kk + 1;
                    while (piv < n && minor[piv][kk] == 0) ++piv;
                    if (piv == n) { zero = true; break; }
                    std::swap(minor[kk], minor[piv]);
                    sign = -sign;
                }
                for (std::size_t i = kk + 1; i < n; ++i)
                    for (std::size_t j = kk + 1; j < n; ++j)
                        minor[i][j] = (minor[i][j] * minor[kk][kk] - minor[i][kk] * minor[kk][j]) / prev;
                prev = minor[kk][kk];
            }
            det = zero ? BigInt(0) : sign * minor[n - 1][n - 1];
        }
        normal[k] = (k % 2 == 0) ? det : -det;
    }
    return normal;
}

}  // namespace

GeneratingMatrix generating_matrix(const std::vector<ProjectivePoint>& points) {
    if (points.empty()) throw std::invalid_argument("generating_matrix: no points");
    GeneratingMatrix A;
    A.rows = int(points[0].coordinates.size());
    std::set<std::vector<BigInt>> seen;
    for (const auto& p : points) {
        if (int(p.coordinates.size()) != A.rows)
            throw std::invalid_argument("generating_matrix: inconsistent point dimensions");
        if (!seen.insert(p.coordinates).second)
            throw std::invalid_argument("generating_matrix: proportional columns (repeated point)");
        A.columns.push_back(p.coordinates);
    }
    return A;
}

long long rank(const GeneratingMatrix& A) {
    // rank of the transpose equals the rank
    return (long long)rank_exact(A.columns);
}

HypResult hyp(const std::vector<ProjectivePoint>& points) {
    if (points.empty()) throw std::invalid_argument("hyp: no points");
    int n = int(points[0].coordinates.size()) - 1;
    if (int(points.size()) < n) throw std::invalid_argument("hyp: fewer than n points");
    std::map<std::vector<BigInt>, long long> hyperplanes;
    std::vector<int> idx(n);
    std::iota(idx.begin(), idx.end(), 0);
    int r = int(points.size());
    while (true) {
        std::vector<const ProjectivePoint*> sub;
        for (int i : idx) sub.push_back(&points[i]);
        std::vector<BigInt> normal = hyperplane_normal(sub);
        bool nonzero = std::any_of(normal.begin(), normal.end(),
                                   [](const BigInt& x) { return x != 0; });
        if (nonzero) hyperplanes.emplace(canonical_primitive(std::move(normal)), 0);
        int i = n - 1;
        while (i >= 0 && idx[i] == r - n + i) --i;
        if (i < 0) break;
        ++idx[i];
        for (int j = i + 1; j < n; ++j) idx[j] = idx[j - 1] + 1;
    }
    HypResult best;
    for (auto& [normal, count] : hyperplanes) {
        count = 0;
        for (const auto& p : points) {
            BigInt s = 0;
            for (std::size_t k = 0; k < normal.size(); ++k) s += normal[k] * p.coordinates[k];
            if (s == 0) ++count;
        }
        if (count > best.count) {  // map order makes the tie-break canonical
            best.count = count;
            best.hyperplane.coefficients = normal;
        }
    }
    return best;
}

long long min_distance(const std::vector<ProjectivePoint>& points) {
    return (long long)points.size() - hyp(points).count;
}

CodeParams code_params(const std::vector<ProjectivePoint>& points) {
    CodeParams cp;
    cp.length = (long long)points.size();
    cp.dimension = rank(generating_matrix(points));
    cp.distance = min_distance(points);
    return cp;
}

std::pair<BigInt, BigInt> distance_formulas(const DesignParams& params) {
    BigInt b = block_count(params);
    BigInt rep = replication_number(params);
    BigInt d_b = b - rep;
    BigInt d_c = binomial(params.v, params.n) - b - binomial(params.v - 1, params.n - 1) + rep;
    return {d_b, d_c};
}

MdsFlags mds_check(const DesignParams& params) {
    BigInt rep = replication_number(params);
    MdsFlags f;
    f.steiner = (rep == params.n);
    f.complement = (binomial(params.v - 1, params.n - 1) - rep == params.n);
    return f;
}

}  // namespace steinerlab
