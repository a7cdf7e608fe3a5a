#include "steinerlab/geometry.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>

namespace steinerlab {

namespace {

BigInt gcd_big(BigInt a, BigInt b) {
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    while (b != 0) {
        BigInt r = a % b;
        a = b;
        b = r;
    }
    return a;
}

/// Exact determinant by fraction-free (Bareiss) elimination.
BigInt det_bareiss(std::vector<std::vector<BigInt>> m) {
    std::size_t n = m.size();
    if (n == 0) return 1;
    BigInt prev = 1;
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m[k][k] == 0) {
            std::size_t piv = k + 1;
            while (piv < n && m[piv][k] == 0) ++piv;
            if (piv == n) return 0;
            std::swap(m[k], m[piv]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j)
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
        prev = m[k][k];
    }
    return sign * m[n - 1][n - 1];
}

/// Exact rank via fraction-free elimination with full pivot search.
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

}  // namespace

std::vector<Rat> default_nodes(int v) {
    std::vector<Rat> nodes;
    for (long long c = 2; int(nodes.size()) < v; ++c) {
        bool prime = c >= 2;
        for (long long d = 2; d * d <= c && prime; ++d)
            if (c % d == 0) prime = false;
        if (prime) nodes.emplace_back(c);
    }
    return nodes;
}

std::vector<BigInt> canonical_primitive(std::vector<BigInt> coords) {
    BigInt g = 0;
    for (const auto& c : coords) g = gcd_big(g, c);
    if (g == 0) throw std::invalid_argument("canonical_primitive: zero vector");
    for (auto& c : coords) c /= g;
    for (const auto& c : coords) {
        if (c == 0) continue;
        if (c < 0)
            for (auto& x : coords) x = -x;
        break;
    }
    return coords;
}

LinearForm::LinearForm(const std::vector<Rat>& coeffs) {
    // clear denominators, then reduce
    BigInt lcm = 1;
    for (const auto& c : coeffs) {
        BigInt d = denominator(c);
        lcm = lcm / gcd_big(lcm, d) * d;
    }
    std::vector<BigInt> ints;
    for (const auto& c : coeffs) ints.push_back(numerator(c) * (lcm / denominator(c)));
    coefficients = canonical_primitive(std::move(ints));
}

BigInt evaluate(const LinearForm& form, const ProjectivePoint& p) {
    if (form.coefficients.size() != p.coordinates.size())
        throw std::invalid_argument("evaluate: dimension mismatch");
    BigInt s = 0;
    for (std::size_t i = 0; i < p.coordinates.size(); ++i)
        s += form.coefficients[i] * p.coordinates[i];
    return s;
}

Arrangement vandermonde_arrangement(int v, int n, const std::vector<Rat>& nodes) {
    if (int(nodes.size()) != v) throw std::invalid_argument("vandermonde_arrangement: need v nodes");
    if (v < n + 1)
        throw std::invalid_argument("vandermonde_arrangement: need v >= n+1 hyperplanes");
    std::set<Rat> distinct(nodes.begin(), nodes.end());
    if (int(distinct.size()) != v)
        throw std::invalid_argument("vandermonde_arrangement: duplicate nodes");
    Arrangement A;
    A.n = n;
    for (const Rat& a : nodes) {
        std::vector<Rat> coeffs;
        Rat pw = 1;
        for (int k = 0; k <= n; ++k) {
            coeffs.push_back(pw);
            pw *= a;
        }
        A.forms.push_back(LinearForm(coeffs));
    }
    return A;
}

bool general_position_check(const Arrangement& A) {
    int v = int(A.forms.size());
    int k = std::min(A.n + 1, v);
    std::vector<int> idx(k);
    std::iota(idx.begin(), idx.end(), 0);
    while (true) {
        std::vector<std::vector<BigInt>> m;
        for (int i : idx) m.push_back(A.forms[i].coefficients);
        if (rank_exact(m) != std::size_t(k)) return false;
        // next combination
        int i = k - 1;
        while (i >= 0 && idx[i] == v - k + i) --i;
        if (i < 0) break;
        ++idx[i];
        for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
    return true;
}

ProjectivePoint intersection_point(const Arrangement& A, Mask sigma) {
    if (popcount(sigma) != A.n)
        throw std::invalid_argument("intersection_point: |sigma| must equal n");
    std::vector<std::vector<BigInt>> m;
    Mask rest = sigma;
    while (rest) {
        int i = std::countr_zero(rest);
        if (i >= int(A.forms.size()))
            throw std::invalid_argument("intersection_point: sigma outside arrangement");
        m.push_back(A.forms[i].coefficients);
        rest &= rest - 1;
    }
    // null vector by cofactors: p_k = (-1)^k det(M with column k removed)
    int cols = A.n + 1;
    std::vector<BigInt> p(cols);
    for (int k = 0; k < cols; ++k) {
        std::vector<std::vector<BigInt>> minor;
        for (const auto& row : m) {
            std::vector<BigInt> r;
            for (int j = 0; j < cols; ++j)
                if (j != k) r.push_back(row[j]);
            minor.push_back(r);
        }
        BigInt d = det_bareiss(std::move(minor));
        p[k] = (k % 2 == 0) ? d : -d;
    }
    ProjectivePoint out{canonical_primitive(std::move(p))};
    for (int i = 0; i < int(A.forms.size()); ++i) {
        bool on = evaluate(A.forms[i], out) == 0;
        bool expected = (sigma >> i) & 1;
        if (on != expected)
            throw std::logic_error("intersection_point: incidence violates general position");
    }
    return out;
}

std::vector<ProjectivePoint> configuration_points(const Arrangement& A,
                                                  const BlockFamily& family) {
    if (family.n != A.n)
        throw std::invalid_argument("configuration_points: block size must equal n");
    std::vector<ProjectivePoint> pts;
    for (Mask sigma : family.blocks) pts.push_back(intersection_point(A, sigma));
    std::set<std::vector<BigInt>> seen;
    for (const auto& p : pts)
        if (!seen.insert(p.coordinates).second)
            throw std::logic_error("configuration_points: duplicate point, arrangement degenerate");
    return pts;
}

}  // namespace steinerlab
