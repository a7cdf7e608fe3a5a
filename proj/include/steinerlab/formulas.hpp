#pragma once

#include "steinerlab/designs.hpp"
#include "steinerlab/simplicial.hpp"

namespace steinerlab {

/// m = p*n + q with 0 <= q < n, and the closed-form initial degree of the
/// m-th symbolic power of the complement ideal.
struct AlphaDecomposition {
    long long m = 0;
    long long p = 0;
    int q = 0;
    long long alpha = 0;
};

/// alpha(I^(m)): v-n for q=1 (and m=1), v-n+q for 2<=q<n, p*v added per full
/// multiple of n.
AlphaDecomposition alpha_formula(const DesignParams& params, long long m);

/// v/n, reduced.
Rat waldschmidt(const DesignParams& params);

/// (1, n, C(n+1,n-1), ..., C(v-2,n-1), C(v-1,n-1)-|B|), length v-n+1.
HVector h_vector_formula(const DesignParams& params);

/// reg(I_{X_C}) = v-n+1.
int regularity(const DesignParams& params);

struct Beta0Top {
    BigInt value;   // |n|B| - C(v,n-1)|
    bool is_zero;   // iff t = n-1
};

Beta0Top beta0_top(const DesignParams& params);

/// Two-strand Betti table for t = n-1: beta_{0,v-n} = |B| and the strand
/// j = v-n+1+i from n-fold finite differences of the padded h-vector.
/// Refuses t < n-1.
BettiTable betti_table_formula(const DesignParams& params);

/// Largest degree of a minimal generator: v-n if t = n-1, else v-n+1.
int omega(const DesignParams& params);

struct ResurgenceBounds {
    Rat lower;                 // (v-n)n/v, equals rho_a when t = n-1
    Rat upper;                 // (v-n+1)n/v
    bool asymptotic_equality;  // t == n-1
};

ResurgenceBounds resurgence_bounds(const DesignParams& params);

/// Exact threshold: any integer d strictly above it gives
/// I^(m) not contained in I^d.
Rat noncontainment_threshold(const DesignParams& params, long long m);

/// floor(alpha(I^(m)) / (alpha(I) * reg(I))): length of the (m,d) range the
/// containment bounds leave undecided.
long long containment_gap(const DesignParams& params, long long m);

/// Minimum distances (d_B, d_C) for a Steiner triple system on v points:
/// ((v-1)(v-3)/6, (v-1)(v-3)^2/6).
std::pair<BigInt, BigInt> sts_distances(int v);

}  // namespace steinerlab
