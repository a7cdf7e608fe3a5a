#pragma once

#include <optional>
#include <vector>

#include "steinerlab/designs.hpp"

namespace steinerlab {

/// Exponent vector of length v.
struct Monomial {
    std::vector<int> exponents;

    Monomial() = default;
    explicit Monomial(std::vector<int> e) : exponents(std::move(e)) {}
    static Monomial squarefree(Mask m, int v);

    int degree() const;
    bool operator==(const Monomial&) const = default;
};

/// The cover ideal J = intersection of the variable-primes p_sigma over the
/// blocks sigma of the family.
struct CoverIdealSpec {
    BlockFamily family;

    explicit CoverIdealSpec(BlockFamily f);
    int v() const { return family.v; }
};

/// Minimal monomial generators, pairwise non-dividing, sorted by
/// (degree, exponent vector).
struct MonomialIdealGens {
    std::vector<Monomial> gens;
};

/// m in J^(k)  <=>  for every block sigma, the sigma-restricted degree of m
/// is at least k.
bool in_symbolic_power(const Monomial& m, const CoverIdealSpec& J, int k);

/// Least degree d <= degree_cap with a degree-d monomial in J^(k), by
/// exhaustive enumeration smallest degree first. Throws if the cap is
/// exceeded (a formula/oracle discrepancy must surface, not loop).
int alpha_symbolic(const CoverIdealSpec& J, int k, int degree_cap);

/// dim_k (R / J^(k))_d: the number of degree-d exponent vectors with some
/// sigma-degree < k. Streams counts; never materializes monomial lists.
long long hilbert_function(const CoverIdealSpec& J, int k, int d);

/// Squarefree minimal generators of J: the minimal non-faces of Delta,
/// i.e. minimal subsets meeting every block of the family.
MonomialIdealGens minimal_generators(const CoverIdealSpec& J);

/// True iff m is divisible by a product of d generators (with repetition).
/// Depth-d recursive division with memoization; intended for d <= 4.
bool in_ordinary_power(const Monomial& m, const MonomialIdealGens& gens, int d);

/// A monomial in J^(k) but not in J^d, if one exists up to degree_cap.
/// Low-degree witnesses (degree < d * alpha(J)) are found first; the rest of
/// the range is searched exhaustively with both membership oracles.
std::optional<Monomial> containment_witness(const CoverIdealSpec& J, int k, int d, int degree_cap);

}  // namespace steinerlab
