#include "steinerlab/formulas.hpp"

#include <stdexcept>

namespace steinerlab {

AlphaDecomposition alpha_formula(const DesignParams& params, long long m) {
    if (m < 0) throw std::invalid_argument("alpha_formula: m >= 0");
    long long v = params.v, n = params.n;
    AlphaDecomposition out;
    out.m = m;
    out.p = m / n;
    out.q = int(m % n);
    long long base;
    if (out.q == 0)
        base = 0;
    else if (out.q == 1)
        base = v - n;
    else
        base = v - n + out.q;
    out.alpha = base + out.p * v;
    return out;
}

Rat waldschmidt(const DesignParams& params) { return Rat(params.v, params.n); }

HVector h_vector_formula(const DesignParams& params) {
    long long v = params.v, n = params.n;
    BigInt nblocks = block_count(params);
    HVector h;
    for (long long i = 0; i <= v - n - 1; ++i)
        h.entries.push_back(binomial_ll(n - 1 + i, n - 1));
    BigInt lastv = binomial(v - 1, n - 1) - nblocks;
    h.entries.push_back(static_cast<long long>(lastv));
    return h;
}

int regularity(const DesignParams& params) { return params.v - params.n + 1; }

Beta0Top beta0_top(const DesignParams& params) {
    BigInt val = params.n * block_count(params) - binomial(params.v, params.n - 1);
    return {abs(val), params.t == params.n - 1};
}

BettiTable betti_table_formula(const DesignParams& params) {
    if (params.t != params.n - 1)
        throw std::invalid_argument("betti_table_formula: stated only for t = n-1");
    int v = params.v, n = params.n;
    HVector h = h_vector_formula(params);
    // n-fold finite differences of the h-vector padded with zeros
    std::vector<long long> diff(h.entries.begin(), h.entries.end());
    diff.resize(v + 2, 0);
    for (int round = 0; round < n; ++round)
        for (int j = int(diff.size()) - 1; j >= 1; --j) diff[j] -= diff[j - 1];
    BettiTable table;
    table.beta[{0, v - n}] = static_cast<long long>(block_count(params));
    for (int i = 0; v - n + 1 + i < int(diff.size()); ++i) {
        int j = v - n + 1 + i;
        long long val = diff[j];
        if (val == 0) continue;
        // Betti numbers are non-negative; the strand values alternate in sign
        // inside the difference sequence.
        long long expected_sign = (i % 2 == 0) ? -1 : 1;
        if ((val > 0 ? 1 : -1) != expected_sign)
            throw std::logic_error("betti_table_formula: unexpected sign in difference strand");
        table.beta[{i, j}] = std::abs(val);
    }
    return table;
}

int omega(const DesignParams& params) {
    return params.t == params.n - 1 ? params.v - params.n : params.v - params.n + 1;
}

ResurgenceBounds resurgence_bounds(const DesignParams& params) {
    long long v = params.v, n = params.n;
    return {Rat((v - n) * n, v), Rat((v - n + 1) * n, v), params.t == params.n - 1};
}

Rat noncontainment_threshold(const DesignParams& params, long long m) {
    if (m < 1) throw std::invalid_argument("noncontainment_threshold: m >= 1");
    long long v = params.v, n = params.n;
    if (m % n == 1) return 1 + Rat((m - 1) * v, n * (v - n));
    return 1 + Rat(m - n, n) + Rat(m, v - n);
}

long long containment_gap(const DesignParams& params, long long m) {
    long long a = alpha_formula(params, m).alpha;
    long long denom = (long long)(params.v - params.n) * regularity(params);
    return a / denom;
}

std::pair<BigInt, BigInt> sts_distances(int v) {
    if (v < 7 || (v % 6 != 1 && v % 6 != 3))
        throw std::invalid_argument("sts_distances: need v = 1 or 3 mod 6, v >= 7");
    BigInt a = BigInt(v - 1) * (v - 3) / 6;
    return {a, a * (v - 3)};
}

}  // namespace steinerlab
