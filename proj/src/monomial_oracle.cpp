#include "steinerlab/monomial_oracle.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

namespace steinerlab {

Monomial Monomial::squarefree(Mask m, int v) {
    std::vector<int> e(v, 0);
    for (int i = 0; i < v; ++i)
        if (m >> i & 1) e[i] = 1;
    return Monomial(std::move(e));
}

int Monomial::degree() const { return std::accumulate(exponents.begin(), exponents.end(), 0); }

CoverIdealSpec::CoverIdealSpec(BlockFamily f) : family(std::move(f)) {
    if (family.blocks.empty()) throw std::invalid_argument("CoverIdealSpec: empty family");
}

bool in_symbolic_power(const Monomial& m, const CoverIdealSpec& J, int k) {
    if (int(m.exponents.size()) != J.v())
        throw std::invalid_argument("in_symbolic_power: wrong monomial length");
    for (Mask sigma : J.family.blocks) {
        int s = 0;
        Mask b = sigma;
        while (b) {
            int i = std::countr_zero(b);
            s += m.exponents[i];
            b &= b - 1;
        }
        if (s < k) return false;
    }
    return true;
}

namespace {

// Monomials of degree r in c variables.
long long compositions(int r, int c) {
    if (c == 0) return r == 0 ? 1 : 0;
    return binomial_ll(r + c - 1, c - 1);
}

// Shared per-block bookkeeping for the enumeration loops.
struct BlockIndex {
    int v;
    std::vector<Mask> sigmas;
    std::vector<std::vector<int>> containing;   // var -> blocks containing it
    std::vector<std::vector<int>> last_var_of;  // var -> blocks whose highest var is it
    std::vector<std::vector<int>> first_var_of; // var -> blocks whose lowest var is it

    explicit BlockIndex(const CoverIdealSpec& J)
        : v(J.v()), sigmas(J.family.blocks), containing(v), last_var_of(v), first_var_of(v) {
        for (std::size_t s = 0; s < sigmas.size(); ++s) {
            Mask b = sigmas[s];
            int lo = std::countr_zero(b);
            int hi = 63 - std::countl_zero(b);
            first_var_of[lo].push_back(int(s));
            last_var_of[hi].push_back(int(s));
            while (b) {
                containing[std::countr_zero(b)].push_back(int(s));
                b &= b - 1;
            }
        }
    }
};

// Counts degree-d exponent vectors with some sigma-degree < k. Subtrees are
// cut as soon as the answer is forced: a completed block below k accepts the
// whole subtree, and all blocks reaching k rejects it.
struct QuotientCounter {
    const BlockIndex& idx;
    int k;
    std::vector<int> sums;
    int num_below;  // blocks with current sum < k

    QuotientCounter(const BlockIndex& bi, int k_)
        : idx(bi), k(k_), sums(bi.sigmas.size(), 0), num_below(int(bi.sigmas.size())) {
        if (k <= 0) num_below = 0;
    }

    long long run(int d) { return recurse(0, d); }

    long long recurse(int i, int rem) {
        if (num_below == 0) return 0;
        int cnt_rest = idx.v - i - 1;
        long long total = 0;
        int e_lo = (i == idx.v - 1) ? rem : 0;
        for (int e = e_lo; e <= rem; ++e) {
            for (int s : idx.containing[i]) {
                if (sums[s] < k && sums[s] + e >= k) --num_below;
                sums[s] += e;
            }
            bool accepted = false;
            for (int s : idx.last_var_of[i]) {
                if (sums[s] < k) {  // block complete and short: every completion counts
                    total += compositions(rem - e, cnt_rest);
                    accepted = true;
                    break;
                }
            }
            if (!accepted) {
                if (i + 1 < idx.v)
                    total += recurse(i + 1, rem - e);
                // at the last variable with all blocks >= k the monomial is in J^(k)
            }
            for (int s : idx.containing[i]) {
                sums[s] -= e;
                if (sums[s] < k && sums[s] + e >= k) ++num_below;
            }
        }
        return total;
    }
};

// First degree-d member of J^(k) in colex order (variables assigned from the
// last one down, smaller exponents first), optionally subject to an extra
// predicate.
struct MemberSearch {
    const BlockIndex& idx;
    int k;
    std::vector<int> sums;
    std::vector<int> expo;
    const std::function<bool(const Monomial&)>* accept = nullptr;

    MemberSearch(const BlockIndex& bi, int k_)
        : idx(bi), k(k_), sums(bi.sigmas.size(), 0), expo(bi.v, 0) {}

    std::optional<Monomial> run(int d) {
        std::optional<Monomial> found;
        recurse(idx.v - 1, d, found);
        return found;
    }

    bool recurse(int i, int rem, std::optional<Monomial>& found) {
        // No block can end short of k given the remaining degree.
        for (std::size_t s = 0; s < sums.size(); ++s)
            if (sums[s] + rem < k) return false;
        int e_hi = rem;
        int e_lo = (i == 0) ? rem : 0;
        for (int e = e_lo; e <= e_hi; ++e) {
            expo[i] = e;
            for (int s : idx.containing[i]) sums[s] += e;
            bool dead = false;
            for (int s : idx.first_var_of[i])
                if (sums[s] < k) { dead = true; break; }
            if (!dead) {
                if (i == 0) {
                    Monomial m(expo);
                    if (!accept || (*accept)(m)) {
                        found = std::move(m);
                        for (int s : idx.containing[i]) sums[s] -= e;
                        expo[i] = 0;
                        return true;
                    }
                } else if (recurse(i - 1, rem - e, found)) {
                    for (int s : idx.containing[i]) sums[s] -= e;
                    expo[i] = 0;
                    return true;
                }
            }
            for (int s : idx.containing[i]) sums[s] -= e;
        }
        expo[i] = 0;
        return false;
    }
};

}  // namespace

int alpha_symbolic(const CoverIdealSpec& J, int k, int degree_cap) {
    BlockIndex idx(J);
    for (int d = 0; d <= degree_cap; ++d) {
        MemberSearch ms(idx, k);
        if (ms.run(d)) return d;
    }
    throw std::runtime_error("alpha_symbolic: no member up to the degree cap (cap " +
                             std::to_string(degree_cap) + ", k " + std::to_string(k) + ")");
}

long long hilbert_function(const CoverIdealSpec& J, int k, int d) {
    if (d < 0) return 0;
    BlockIndex idx(J);
    QuotientCounter qc(idx, k);
    return qc.run(d);
}

MonomialIdealGens minimal_generators(const CoverIdealSpec& J) {
    int v = J.v();
    if (v > 24) throw std::invalid_argument("minimal_generators: v too large for subset enumeration");
    std::size_t total = std::size_t{1} << v;
    // b is a face of Delta iff some block avoids it
    std::vector<char> face(total, 0);
    for (std::size_t b = 0; b < total; ++b)
        for (Mask sigma : J.family.blocks)
            if ((sigma & b) == 0) { face[b] = 1; break; }
    MonomialIdealGens out;
    for (std::size_t b = 1; b < total; ++b) {
        if (face[b]) continue;
        bool minimal = true;
        Mask rest = b;
        while (rest) {
            Mask bit = rest & -rest;
            if (!face[b ^ bit]) { minimal = false; break; }
            rest &= rest - 1;
        }
        if (minimal) out.gens.push_back(Monomial::squarefree(Mask(b), v));
    }
    std::sort(out.gens.begin(), out.gens.end(), [](const Monomial& a, const Monomial& b) {
        int da = a.degree(), db = b.degree();
        if (da != db) return da < db;
        return a.exponents < b.exponents;
    });
    return out;
}

namespace {

bool divides(const Monomial& g, const std::vector<int>& e) {
    for (std::size_t i = 0; i < e.size(); ++i)
        if (g.exponents[i] > e[i]) return false;
    return true;
}

bool ordinary_rec(std::vector<int>& e, const MonomialIdealGens& gens, int d,
                  std::map<std::pair<std::vector<int>, int>, bool>& memo) {
    if (d == 0) return true;
    auto key = std::make_pair(e, d);
    auto it = memo.find(key);
    if (it != memo.end()) return it->second;
    bool ok = false;
    for (const Monomial& g : gens.gens) {
        if (!divides(g, e)) continue;
        for (std::size_t i = 0; i < e.size(); ++i) e[i] -= g.exponents[i];
        ok = ordinary_rec(e, gens, d - 1, memo);
        for (std::size_t i = 0; i < e.size(); ++i) e[i] += g.exponents[i];
        if (ok) break;
    }
    memo.emplace(std::move(key), ok);
    return ok;
}

}  // namespace

bool in_ordinary_power(const Monomial& m, const MonomialIdealGens& gens, int d) {
    if (d > 4) throw std::invalid_argument("in_ordinary_power: d > 4 not supported");
    std::vector<int> e = m.exponents;
    std::map<std::pair<std::vector<int>, int>, bool> memo;
    return ordinary_rec(e, gens, d, memo);
}

std::optional<Monomial> containment_witness(const CoverIdealSpec& J, int k, int d, int degree_cap) {
    MonomialIdealGens gens = minimal_generators(J);
    BlockIndex idx(J);
    std::function<bool(const Monomial&)> not_in_ordinary = [&](const Monomial& m) {
        return !in_ordinary_power(m, gens, d);
    };
    for (int deg = 0; deg <= degree_cap; ++deg) {
        MemberSearch ms(idx, k);
        ms.accept = &not_in_ordinary;
        if (auto w = ms.run(deg)) return w;
    }
    return std::nullopt;
}

}  // namespace steinerlab
