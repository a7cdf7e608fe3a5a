#include "steinerlab/designs.hpp"

#include <algorithm>
#include <chrono>
#include <map>
#include <stdexcept>

namespace steinerlab {

DesignParams::DesignParams(int t_, int n_, int v_, int lambda_)
    : t(t_), n(n_), v(v_), lambda(lambda_) {
    if (!(2 <= t && t < n && n <= v))
        throw std::invalid_argument("DesignParams: need 2 <= t < n <= v");
    if (lambda < 1) throw std::invalid_argument("DesignParams: lambda >= 1");
    if (v > 62) throw std::invalid_argument("DesignParams: v too large for bitmask blocks");
}

BlockFamily::BlockFamily(int v_, int n_, std::vector<Mask> blocks_)
    : v(v_), n(n_), blocks(std::move(blocks_)) {
    Mask ground = (Mask{1} << v) - 1;
    for (Mask b : blocks) {
        if ((b & ~ground) != 0) throw std::invalid_argument("BlockFamily: block outside ground set");
        if (popcount(b) != n) throw std::invalid_argument("BlockFamily: block size != n");
    }
    std::sort(blocks.begin(), blocks.end());
    blocks.erase(std::unique(blocks.begin(), blocks.end()), blocks.end());
}

std::vector<int> BlockFamily::to_points(Mask m) {
    std::vector<int> pts;
    for (int i = 0; m; ++i, m >>= 1)
        if (m & 1) pts.push_back(i + 1);
    return pts;
}

Mask BlockFamily::from_points(const std::vector<int>& pts, int v) {
    Mask m = 0;
    for (int p : pts) {
        if (p < 1 || p > v) throw std::invalid_argument("point outside {1..v}");
        Mask bit = Mask{1} << (p - 1);
        if (m & bit) throw std::invalid_argument("repeated point in block");
        m |= bit;
    }
    return m;
}

namespace {

// Enumerates all k-subsets of {0..v-1} as masks, ascending.
void for_each_subset(int v, int k, const std::function<void(Mask)>& f) {
    if (k == 0) {
        f(0);
        return;
    }
    Mask m = (Mask{1} << k) - 1;
    Mask limit = Mask{1} << v;
    while (m < limit) {
        f(m);
        // Gosper's hack
        Mask c = m & -m;
        Mask r = m + c;
        m = (((r ^ m) >> 2) / c) | r;
        if (c == 0) break;
    }
}

BigInt exact_quotient(const BigInt& num, const BigInt& den, const char* what) {
    if (den == 0 || num % den != 0)
        throw std::invalid_argument(std::string(what) + ": non-integral quotient, no such Steiner system");
    return num / den;
}

}  // namespace

VerificationReport verify_design(const DesignParams& params, const BlockFamily& blocks,
                                 std::size_t max_violations) {
    if (blocks.v != params.v || blocks.n != params.n)
        throw std::invalid_argument("verify_design: params/blocks dimension mismatch");
    VerificationReport rep;
    rep.ok = true;
    for_each_subset(params.v, params.t, [&](Mask tup) {
        int count = 0;
        for (Mask b : blocks.blocks)
            if ((b & tup) == tup) ++count;
        if (count != params.lambda) {
            rep.ok = false;
            if (rep.violations.size() < max_violations) rep.violations.push_back({tup, count});
        }
    });
    return rep;
}

BigInt block_count(const DesignParams& params) {
    return exact_quotient(params.lambda * binomial(params.v, params.t),
                          binomial(params.n, params.t), "block_count");
}

BigInt replication_number(const DesignParams& params) {
    return exact_quotient(params.lambda * binomial(params.v - 1, params.t - 1),
                          binomial(params.n - 1, params.t - 1), "replication_number");
}

SteinerSystem fano() {
    DesignParams p(2, 3, 7);
    std::vector<std::vector<int>> raw = {{1, 2, 3}, {1, 4, 5}, {1, 6, 7}, {2, 4, 6},
                                         {2, 5, 7}, {3, 4, 7}, {3, 5, 6}};
    std::vector<Mask> blocks;
    for (auto& b : raw) blocks.push_back(BlockFamily::from_points(b, 7));
    return {p, BlockFamily(7, 3, std::move(blocks))};
}

SteinerSystem s_2_4_13() {
    DesignParams p(2, 4, 13);
    std::vector<std::vector<int>> raw = {
        {2, 3, 5, 11},  {3, 4, 6, 12},  {4, 5, 7, 13}, {1, 5, 6, 8},  {2, 6, 7, 9},
        {3, 7, 8, 10},  {4, 8, 9, 11},  {5, 9, 10, 12}, {6, 10, 11, 13}, {1, 7, 11, 12},
        {2, 8, 12, 13}, {1, 3, 9, 13},  {1, 2, 4, 10}};
    std::vector<Mask> blocks;
    for (auto& b : raw) blocks.push_back(BlockFamily::from_points(b, 13));
    return {p, BlockFamily(13, 4, std::move(blocks))};
}

namespace {

SteinerSystem sts_bose(int v) {
    // v = 6k+3; points are Z_{2k+1} x {0,1,2}, numbered 1 + i + r*(2k+1).
    int m = v / 3;        // 2k+1
    int half = (m + 1) / 2;  // inverse of 2 mod m
    auto pt = [&](int i, int r) { return 1 + (i % m) + r * m; };
    auto qg = [&](int i, int j) { return int((long long)(i + j) * half % m); };
    std::vector<Mask> blocks;
    for (int i = 0; i < m; ++i)
        blocks.push_back(BlockFamily::from_points({pt(i, 0), pt(i, 1), pt(i, 2)}, v));
    for (int i = 0; i < m; ++i)
        for (int j = i + 1; j < m; ++j)
            for (int r = 0; r < 3; ++r)
                blocks.push_back(
                    BlockFamily::from_points({pt(i, r), pt(j, r), pt(qg(i, j), (r + 1) % 3)}, v));
    return {DesignParams(2, 3, v), BlockFamily(v, 3, std::move(blocks))};
}

SteinerSystem sts_skolem(int v) {
    // v = 6k+1; points are (Z_{2k} x {0,1,2}) plus an extra point "infinity".
    int k = v / 6;
    int m = 2 * k;
    int inf = v;
    auto pt = [&](int i, int r) { return 1 + (i % m) + r * m; };
    // Half-idempotent commutative quasigroup on {0..2k-1}: relabel the Cayley
    // table of Z_{2k} so the diagonal reads 0..k-1,0..k-1.
    auto qg = [&](int i, int j) {
        int s = (i + j) % m;
        return (s % 2 == 0) ? s / 2 : k + (s - 1) / 2;
    };
    std::vector<Mask> blocks;
    for (int i = 0; i < k; ++i)
        blocks.push_back(BlockFamily::from_points({pt(i, 0), pt(i, 1), pt(i, 2)}, v));
    for (int i = k; i < m; ++i)
        for (int r = 0; r < 3; ++r)
            blocks.push_back(BlockFamily::from_points({inf, pt(i, r), pt(i - k, (r + 1) % 3)}, v));
    for (int i = 0; i < m; ++i)
        for (int j = i + 1; j < m; ++j)
            for (int r = 0; r < 3; ++r)
                blocks.push_back(
                    BlockFamily::from_points({pt(i, r), pt(j, r), pt(qg(i, j), (r + 1) % 3)}, v));
    return {DesignParams(2, 3, v), BlockFamily(v, 3, std::move(blocks))};
}

}  // namespace

SteinerSystem construct_sts(int v) {
    if (v < 7 || (v % 6 != 1 && v % 6 != 3))
        throw std::invalid_argument("construct_sts: need v = 1 or 3 mod 6, v >= 7");
    SteinerSystem sys = (v % 6 == 3) ? sts_bose(v) : sts_skolem(v);
    if (!verify_design(sys.params, sys.blocks).ok)
        throw std::logic_error("construct_sts: construction produced an invalid system");
    return sys;
}

namespace {

// Plain Algorithm X over dense row/column incidence lists. Sizes here are
// small (at most C(13,4) = 715 rows), so no dancing links needed.
struct ExactCover {
    int ncols = 0;
    std::vector<std::vector<int>> row_cols;  // columns covered by each row
    std::vector<std::vector<int>> col_rows;  // rows covering each column
    std::vector<char> row_active, col_active;
    std::vector<int> col_size;
    std::vector<int> chosen;
    std::size_t nodes = 0, budget = 0;
    bool exceeded = false;

    bool solve() {
        if (++nodes > budget) {
            exceeded = true;
            return false;
        }
        int best = -1;
        for (int c = 0; c < ncols; ++c) {
            if (!col_active[c]) continue;
            if (best == -1 || col_size[c] < col_size[best]) best = c;
        }
        if (best == -1) return true;  // every column covered
        if (col_size[best] == 0) return false;
        for (int r : col_rows[best]) {
            if (!row_active[r]) continue;
            std::vector<int> removed_rows;
            std::vector<int> removed_cols;
            for (int c : row_cols[r]) {
                col_active[c] = 0;
                removed_cols.push_back(c);
                for (int r2 : col_rows[c]) {
                    if (!row_active[r2]) continue;
                    row_active[r2] = 0;
                    removed_rows.push_back(r2);
                    for (int c2 : row_cols[r2])
                        if (col_active[c2]) --col_size[c2];
                }
            }
            chosen.push_back(r);
            if (solve()) return true;
            chosen.pop_back();
            for (auto it = removed_rows.rbegin(); it != removed_rows.rend(); ++it) {
                row_active[*it] = 1;
                for (int c2 : row_cols[*it])
                    if (col_active[c2]) ++col_size[c2];
            }
            for (int c : removed_cols) col_active[c] = 1;
            if (exceeded) return false;
        }
        return false;
    }
};

}  // namespace

SearchResult search_design(const DesignParams& params, std::size_t node_budget) {
    // Divisibility is necessary for existence; an inadmissible parameter set
    // is a definite "none exists", not an error.
    if (binomial(params.v, params.t) % binomial(params.n, params.t) != 0)
        return {SearchStatus::Exhausted, std::nullopt};

    std::vector<Mask> tuples, candidates;
    for_each_subset(params.v, params.t, [&](Mask m) { tuples.push_back(m); });
    for_each_subset(params.v, params.n, [&](Mask m) { candidates.push_back(m); });
    std::map<Mask, int> tuple_index;
    for (std::size_t i = 0; i < tuples.size(); ++i) tuple_index[tuples[i]] = int(i);

    ExactCover ec;
    ec.ncols = int(tuples.size());
    ec.row_cols.resize(candidates.size());
    ec.col_rows.resize(tuples.size());
    for (std::size_t r = 0; r < candidates.size(); ++r) {
        for_each_subset(params.n, params.t, [&](Mask sub) {
            // sub indexes positions within the candidate block
            Mask tup = 0;
            Mask b = candidates[r];
            int pos = 0;
            for (int i = 0; i < params.v; ++i) {
                if (!(b >> i & 1)) continue;
                if (sub >> pos & 1) tup |= Mask{1} << i;
                ++pos;
            }
            int c = tuple_index.at(tup);
            ec.row_cols[r].push_back(c);
            ec.col_rows[c].push_back(int(r));
        });
    }
    ec.row_active.assign(candidates.size(), 1);
    ec.col_active.assign(tuples.size(), 1);
    ec.col_size.resize(tuples.size());
    for (std::size_t c = 0; c < tuples.size(); ++c) ec.col_size[c] = int(ec.col_rows[c].size());
    ec.budget = node_budget;

    SearchResult res;
    if (ec.solve()) {
        std::vector<Mask> blocks;
        for (int r : ec.chosen) blocks.push_back(candidates[r]);
        SteinerSystem sys{params, BlockFamily(params.v, params.n, std::move(blocks))};
        if (!verify_design(sys.params, sys.blocks).ok)
            throw std::logic_error("search_design: exact cover returned an invalid system");
        res.status = SearchStatus::Found;
        res.system = std::move(sys);
    } else {
        res.status = ec.exceeded ? SearchStatus::BudgetExceeded : SearchStatus::Exhausted;
    }
    return res;
}

BlockFamily complement(const SteinerSystem& sys) {
    std::vector<Mask> rest;
    const auto& b = sys.blocks.blocks;
    for_each_subset(sys.params.v, sys.params.n, [&](Mask m) {
        if (!std::binary_search(b.begin(), b.end(), m)) rest.push_back(m);
    });
    return BlockFamily(sys.params.v, sys.params.n, std::move(rest));
}

BlockFamily full_family(int v, int n) {
    std::vector<Mask> all;
    for_each_subset(v, n, [&](Mask m) { all.push_back(m); });
    return BlockFamily(v, n, std::move(all));
}

}  // namespace steinerlab
