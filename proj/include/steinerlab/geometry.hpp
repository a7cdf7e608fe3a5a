#pragma once

#include <vector>

#include "steinerlab/designs.hpp"

namespace steinerlab {

/// Linear form on projective n-space: n+1 integer coefficients, primitive
/// (gcd 1), first nonzero coefficient positive.
struct LinearForm {
    std::vector<BigInt> coefficients;

    LinearForm() = default;
    /// Normalizes rational coefficients to the canonical primitive form.
    explicit LinearForm(const std::vector<Rat>& coeffs);

    bool operator==(const LinearForm&) const = default;
};

/// v hyperplanes in projective n-space.
struct Arrangement {
    int n = 0;
    std::vector<LinearForm> forms;
};

/// Canonical projective point: primitive integer coordinates, first nonzero
/// entry positive.
struct ProjectivePoint {
    std::vector<BigInt> coordinates;

    bool operator==(const ProjectivePoint&) const = default;
    bool operator<(const ProjectivePoint& o) const { return coordinates < o.coordinates; }
};

/// Canonicalize a nonzero integer vector: divide by gcd, flip sign so the
/// first nonzero entry is positive.
std::vector<BigInt> canonical_primitive(std::vector<BigInt> coords);

/// Evaluate a form at a point.
BigInt evaluate(const LinearForm& form, const ProjectivePoint& p);

/// Forms l_i = sum_k a_i^k x_k for distinct nodes a_i: the Vandermonde
/// structure guarantees general position.
Arrangement vandermonde_arrangement(int v, int n, const std::vector<Rat>& nodes);

/// The first v primes. Consecutive-integer or geometric nodes can put
/// configuration points of small designs onto a common hyperplane, which
/// breaks the generic-distance formulas; prime nodes avoid the known cases.
std::vector<Rat> default_nodes(int v);

/// Every subset of min(n+1, v) forms is linearly independent (exhaustive
/// exact rank checks).
bool general_position_check(const Arrangement& A);

/// The unique point on the hyperplanes indexed by sigma (an n-subset), via
/// the exact null space of the n x (n+1) coefficient matrix.
ProjectivePoint intersection_point(const Arrangement& A, Mask sigma);

/// One point per block, in block order. Throws if two points coincide
/// (a general-position violation).
std::vector<ProjectivePoint> configuration_points(const Arrangement& A, const BlockFamily& family);

}  // namespace steinerlab
