#pragma once

#include <map>
#include <optional>
#include <vector>

#include "steinerlab/designs.hpp"
#include "steinerlab/monomial_oracle.hpp"

namespace steinerlab {

/// Simplicial complex on vertex set {1..v}, given by its facets (maximal
/// faces, pairwise non-contained) as v-bit masks.
struct SimplicialComplex {
    int v = 0;
    std::vector<Mask> facets;

    SimplicialComplex() = default;
    SimplicialComplex(int v_, std::vector<Mask> facets_);

    int dim() const;  // -1 for the complex {emptyset}
};

/// f_{-1} = 1, f_0, ..., f_dim.
struct FVector {
    std::vector<long long> counts;  // counts[i] = f_{i-1}
};

struct HVector {
    std::vector<long long> entries;  // h_0 .. h_p, last entry nonzero

    bool operator==(const HVector&) const = default;
};

/// Graded Betti numbers beta_{i,j} of an ideal, keyed by (homological index,
/// internal degree). Zero entries are absent.
struct BettiTable {
    std::map<std::pair<int, int>, long long> beta;

    long long at(int i, int j) const {
        auto it = beta.find({i, j});
        return it == beta.end() ? 0 : it->second;
    }
    bool operator==(const BettiTable&) const = default;
};

/// Homology coefficient field: a prime modulus or the rationals.
struct HomologyField {
    bool rational = false;
    long prime = 32003;

    static HomologyField gf(long p) { return {false, p}; }
    static HomologyField rationals() { return {true, 0}; }
};

/// Delta_C = < V \ sigma | sigma in C >.
SimplicialComplex delta_of_family(const BlockFamily& C);

bool is_face(const SimplicialComplex& K, Mask F);

struct MatroidCheck {
    bool ok = false;
    std::optional<std::pair<Mask, Mask>> counterexample;  // (F, G) violating exchange
};

/// Exchange axiom, checked exhaustively over all face pairs.
MatroidCheck is_matroid(const SimplicialComplex& K);

/// Every (v-n-1)-subset of V is a face.
bool small_faces_check(const SimplicialComplex& K, const DesignParams& params);

FVector f_vector(const SimplicialComplex& K);

/// h-vector of R/J_C^(k) as the (v-n)-th finite difference of the enumerated
/// Hilbert function. Requires the quotient to be Cohen-Macaulay (true for
/// Steiner complement families); a non-vanishing difference tail up to
/// degree_cap is reported as an error. degree_cap <= 0 selects the default
/// k*v.
HVector h_vector_oracle(const BlockFamily& C, int k, int degree_cap = 0);

/// Rank of reduced simplicial homology in the given dimension, via ranks of
/// boundary matrices.
long long reduced_homology_rank(const SimplicialComplex& K, int dim, const HomologyField& field);

/// Full graded Betti table of J_C = I_{Delta_C} by Hochster's formula:
/// beta_{i,j} = sum over j-subsets W of rank Htilde_{j-i-2}(Delta_C|_W).
BettiTable hochster_betti(const BlockFamily& C, const HomologyField& field);

}  // namespace steinerlab
