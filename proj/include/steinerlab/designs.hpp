#pragma once

#include <optional>
#include <string>
#include <vector>

#include "steinerlab/util.hpp"

namespace steinerlab {

/// Parameters (t, n, v, lambda) of a t-design. Steiner systems have lambda = 1.
struct DesignParams {
    int t = 0;
    int n = 0;
    int v = 0;
    int lambda = 1;

    DesignParams() = default;
    DesignParams(int t_, int n_, int v_, int lambda_ = 1);

    bool operator==(const DesignParams&) const = default;
};

/// A family of n-subsets of {1..v}, each stored as a v-bit mask (bit i-1 is
/// point i). Blocks are kept sorted ascending by mask value, duplicate-free.
struct BlockFamily {
    int v = 0;
    int n = 0;
    std::vector<Mask> blocks;

    BlockFamily() = default;
    BlockFamily(int v_, int n_, std::vector<Mask> blocks_);

    std::size_t size() const { return blocks.size(); }

    /// Block as a sorted list of 1-indexed points.
    static std::vector<int> to_points(Mask m);
    static Mask from_points(const std::vector<int>& pts, int v);

    bool operator==(const BlockFamily&) const = default;
};

struct SteinerSystem {
    DesignParams params;
    BlockFamily blocks;
};

struct Violation {
    Mask tuple;       // the t-subset
    int cover_count;  // how many blocks contain it
};

struct VerificationReport {
    bool ok = false;
    std::vector<Violation> violations;  // up to max_violations entries
};

/// Checks that every t-subset of {1..v} is covered exactly lambda times.
VerificationReport verify_design(const DesignParams& params, const BlockFamily& blocks,
                                 std::size_t max_violations = 16);

/// |B| = C(v,t)/C(n,t). Throws if the quotient is not integral (no Steiner
/// system with these parameters can exist).
BigInt block_count(const DesignParams& params);

/// Number of blocks through a fixed point: C(v-1,t-1)/C(n-1,t-1).
/// Throws if not integral.
BigInt replication_number(const DesignParams& params);

/// The Fano plane S(2,3,7).
SteinerSystem fano();

/// The S(2,4,13) system with 13 blocks.
SteinerSystem s_2_4_13();

/// Steiner triple system on v points, v = 1 or 3 mod 6, v >= 7.
/// Bose construction for v = 3 mod 6, Skolem for v = 1 mod 6. The result is
/// verified before being returned.
SteinerSystem construct_sts(int v);

enum class SearchStatus { Found, Exhausted, BudgetExceeded };

struct SearchResult {
    SearchStatus status = SearchStatus::Exhausted;
    std::optional<SteinerSystem> system;
};

/// Exact-cover backtracking search for an S(t,n,v): candidate blocks are the
/// n-subsets, columns are the t-subsets. Deterministic: most-constrained
/// column first, ties broken by smallest column index, rows tried in
/// ascending mask order.
SearchResult search_design(const DesignParams& params, std::size_t node_budget = 50'000'000);

/// C_{(n,v)} \ B, in canonical order.
BlockFamily complement(const SteinerSystem& sys);

/// All n-subsets of {1..v}.
BlockFamily full_family(int v, int n);

}  // namespace steinerlab
