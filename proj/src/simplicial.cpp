#include "steinerlab/simplicial.hpp"

#include <algorithm>
#include <mutex>
#include <stdexcept>

namespace steinerlab {

SimplicialComplex::SimplicialComplex(int v_, std::vector<Mask> facets_)
    : v(v_), facets(std::move(facets_)) {
    std::sort(facets.begin(), facets.end());
    facets.erase(std::unique(facets.begin(), facets.end()), facets.end());
    // drop facets contained in another
    std::vector<Mask> keep;
    for (Mask f : facets) {
        bool contained = false;
        for (Mask g : facets)
            if (f != g && (f & g) == f) { contained = true; break; }
        if (!contained) keep.push_back(f);
    }
    facets = std::move(keep);
}

int SimplicialComplex::dim() const {
    int d = -1;
    for (Mask f : facets) d = std::max(d, popcount(f) - 1);
    return d;
}

SimplicialComplex delta_of_family(const BlockFamily& C) {
    if (C.blocks.empty()) throw std::invalid_argument("delta_of_family: empty family");
    Mask full = (Mask{1} << C.v) - 1;
    std::vector<Mask> facets;
    for (Mask sigma : C.blocks) facets.push_back(full ^ sigma);
    return SimplicialComplex(C.v, std::move(facets));
}

bool is_face(const SimplicialComplex& K, Mask F) {
    for (Mask f : K.facets)
        if ((F & f) == F) return true;
    return false;
}

namespace {

constexpr int kMaxEnumV = 24;

// face bitset over all 2^v subsets
std::vector<char> face_table(const SimplicialComplex& K) {
    if (K.v > kMaxEnumV) throw std::invalid_argument("complex too large for subset enumeration");
    std::size_t total = std::size_t{1} << K.v;
    std::vector<char> face(total, 0);
    for (Mask f : K.facets) {
        // mark all subsets of each facet
        Mask sub = f;
        while (true) {
            face[sub] = 1;
            if (sub == 0) break;
            sub = (sub - 1) & f;
        }
    }
    return face;
}

}  // namespace

MatroidCheck is_matroid(const SimplicialComplex& K) {
    std::vector<char> face = face_table(K);
    std::vector<Mask> faces;
    for (std::size_t b = 0; b < face.size(); ++b)
        if (face[b]) faces.push_back(Mask(b));
    // ext[G] = set of vertices i with G u {i} a face
    std::vector<Mask> ext(faces.size(), 0);
    for (std::size_t gi = 0; gi < faces.size(); ++gi) {
        Mask G = faces[gi];
        for (int i = 0; i < K.v; ++i) {
            Mask bit = Mask{1} << i;
            if ((G & bit) == 0 && face[G | bit]) ext[gi] |= bit;
        }
    }
    for (std::size_t gi = 0; gi < faces.size(); ++gi) {
        Mask G = faces[gi];
        int szG = popcount(G);
        for (Mask F : faces) {
            if (popcount(F) <= szG) continue;
            if ((F & ~G & ext[gi]) == 0) return {false, std::make_pair(F, G)};
        }
    }
    return {true, std::nullopt};
}

bool small_faces_check(const SimplicialComplex& K, const DesignParams& params) {
    int size = params.v - params.n - 1;
    if (size <= 0) return true;
    Mask m = (Mask{1} << size) - 1;
    Mask limit = Mask{1} << params.v;
    while (m < limit) {
        if (!is_face(K, m)) return false;
        Mask c = m & -m;
        Mask r = m + c;
        m = (((r ^ m) >> 2) / c) | r;
    }
    return true;
}

FVector f_vector(const SimplicialComplex& K) {
    std::vector<char> face = face_table(K);
    FVector fv;
    fv.counts.assign(K.dim() + 2, 0);
    for (std::size_t b = 0; b < face.size(); ++b)
        if (face[b]) ++fv.counts[popcount(Mask(b))];
    return fv;
}

HVector h_vector_oracle(const BlockFamily& C, int k, int degree_cap) {
    CoverIdealSpec J{C};
    int v = C.v, n = C.n;
    int r = v - n;  // Krull dimension of the quotient
    if (degree_cap <= 0) degree_cap = k * v;
    std::vector<long long> hf(degree_cap + 1);
    for (int d = 0; d <= degree_cap; ++d) hf[d] = hilbert_function(J, k, d);
    auto HF = [&](int d) -> long long { return d < 0 ? 0 : hf[d]; };
    std::vector<long long> h(degree_cap + 1, 0);
    for (int j = 0; j <= degree_cap; ++j) {
        long long acc = 0;
        for (int i = 0; i <= r; ++i) {
            long long c = binomial_ll(r, i);
            acc += (i % 2 == 0 ? 1 : -1) * c * HF(j - i);
        }
        h[j] = acc;
    }
    int last = -1;
    for (int j = 0; j <= degree_cap; ++j)
        if (h[j] != 0) last = j;
    // The difference sequence must have settled to zero strictly below the
    // cap, otherwise the cap (or the CM assumption) is wrong.
    if (last >= degree_cap)
        throw std::runtime_error("h_vector_oracle: difference tail not zero within degree cap");
    HVector out;
    out.entries.assign(h.begin(), h.begin() + (last + 1));
    if (out.entries.empty()) out.entries.push_back(0);
    return out;
}

namespace {

// --- field policies for exact rank computation ---

struct GFp {
    using Elem = long;
    long p;
    Elem zero() const { return 0; }
    Elem from_int(long x) const { return ((x % p) + p) % p; }
    Elem add(Elem a, Elem b) const { return (a + b) % p; }
    Elem mul(Elem a, Elem b) const { return (a * b) % p; }
    Elem neg(Elem a) const { return a == 0 ? 0 : p - a; }
    Elem inv(Elem a) const {
        // Fermat
        Elem r = 1, b = a;
        long e = p - 2;
        while (e) {
            if (e & 1) r = mul(r, b);
            b = mul(b, b);
            e >>= 1;
        }
        return r;
    }
    bool is_zero(Elem a) const { return a == 0; }
};

struct QField {
    using Elem = Rat;
    Elem zero() const { return 0; }
    Elem from_int(long x) const { return Rat(x); }
    Elem add(const Elem& a, const Elem& b) const { return a + b; }
    Elem mul(const Elem& a, const Elem& b) const { return a * b; }
    Elem neg(const Elem& a) const { return -a; }
    Elem inv(const Elem& a) const { return 1 / a; }
    bool is_zero(const Elem& a) const { return a == 0; }
};

// Sparse column reduction: columns hold (row, value) sorted by row; rank is
// the number of columns that stay nonzero once every "low" row is unique.
template <class F>
long long rank_by_column_reduction(std::vector<std::vector<std::pair<int, typename F::Elem>>> cols,
                                   const F& fld) {
    using Col = std::vector<std::pair<int, typename F::Elem>>;
    std::vector<int> owner_of_low;  // low row -> column index, -1 if free
    int max_row = -1;
    for (auto& c : cols)
        for (auto& e : c) max_row = std::max(max_row, e.first);
    owner_of_low.assign(max_row + 1, -1);
    long long rank = 0;
    for (std::size_t j = 0; j < cols.size(); ++j) {
        Col& col = cols[j];
        while (!col.empty()) {
            int low = col.back().first;
            int own = owner_of_low[low];
            if (own < 0) break;
            const Col& other = cols[own];
            auto factor = fld.mul(fld.neg(col.back().second), fld.inv(other.back().second));
            // col += factor * other
            Col merged;
            merged.reserve(col.size() + other.size());
            std::size_t a = 0, b = 0;
            while (a < col.size() || b < other.size()) {
                if (b == other.size() || (a < col.size() && col[a].first < other[b].first)) {
                    merged.push_back(col[a++]);
                } else if (a == col.size() || other[b].first < col[a].first) {
                    merged.emplace_back(other[b].first, fld.mul(factor, other[b].second));
                    ++b;
                } else {
                    auto s = fld.add(col[a].second, fld.mul(factor, other[b].second));
                    if (!fld.is_zero(s)) merged.emplace_back(col[a].first, s);
                    ++a, ++b;
                }
            }
            col = std::move(merged);
        }
        if (!col.empty()) {
            owner_of_low[col.back().first] = int(j);
            ++rank;
        }
    }
    return rank;
}

// Boundary matrix of the d-faces over the (d-1)-faces, as sparse columns.
// faces_dm1 must be sorted. d = 0 maps every vertex to the empty face.
template <class F>
std::vector<std::vector<std::pair<int, typename F::Elem>>> boundary_columns(
    const std::vector<Mask>& faces_d, const std::vector<Mask>& faces_dm1, const F& fld) {
    std::vector<std::vector<std::pair<int, typename F::Elem>>> cols;
    cols.reserve(faces_d.size());
    for (Mask Fc : faces_d) {
        std::vector<std::pair<int, typename F::Elem>> col;
        int pos = 0;
        Mask rest = Fc;
        while (rest) {
            Mask bit = rest & -rest;
            Mask sub = Fc ^ bit;
            auto it = std::lower_bound(faces_dm1.begin(), faces_dm1.end(), sub);
            if (it == faces_dm1.end() || *it != sub)
                throw std::logic_error("boundary_columns: missing sub-face");
            int row = int(it - faces_dm1.begin());
            col.emplace_back(row, fld.from_int(pos % 2 == 0 ? 1 : -1));
            rest ^= bit;
            ++pos;
        }
        std::sort(col.begin(), col.end(),
                  [](const auto& a, const auto& b) { return a.first < b.first; });
        cols.push_back(std::move(col));
    }
    return cols;
}

// All reduced homology ranks of the complex whose faces (including the empty
// set) are listed by dimension. faces_by_dim[d+1] holds the d-faces, sorted.
template <class F>
std::vector<long long> homology_ranks(const std::vector<std::vector<Mask>>& faces_by_dim,
                                      const F& fld) {
    int top = int(faces_by_dim.size()) - 2;  // top dimension
    std::vector<long long> rank_bd(top + 2, 0);  // rank of boundary_d, d = 0..top
    for (int d = 0; d <= top; ++d)
        rank_bd[d] = rank_by_column_reduction(
            boundary_columns(faces_by_dim[d + 1], faces_by_dim[d], fld), fld);
    std::vector<long long> h(top + 2, 0);  // h[d+1] = rank Htilde_d
    for (int d = -1; d <= top; ++d) {
        long long fd = (long long)faces_by_dim[d + 1].size();
        long long cycles = fd - (d >= 0 ? rank_bd[d] : 0);
        long long boundaries = (d + 1 <= top) ? rank_bd[d + 1] : 0;
        h[d + 1] = cycles - boundaries;
    }
    return h;
}

template <class F>
BettiTable hochster_betti_impl(const BlockFamily& C, const F& fld) {
    if (C.v > kMaxEnumV) throw std::invalid_argument("hochster_betti: v too large");
    int v = C.v;
    std::size_t total = std::size_t{1} << v;
    // F is a face of Delta_C iff some block is disjoint from F
    std::vector<char> face(total, 0);
    for (std::size_t b = 0; b < total; ++b)
        for (Mask sigma : C.blocks)
            if ((sigma & b) == 0) { face[b] = 1; break; }

    std::vector<BettiTable> partial;
    std::mutex mtx;
    parallel_chunks(total, [&](std::size_t chunk, std::size_t lo, std::size_t hi) {
        BettiTable local;
        for (std::size_t W = lo; W < hi; ++W) {
            int sz = popcount(Mask(W));
            if (sz == 0) continue;
            std::vector<std::vector<Mask>> faces_by_dim(sz + 1);
            Mask sub = Mask(W);
            while (true) {
                if (face[sub]) faces_by_dim[popcount(sub)].push_back(sub);
                if (sub == 0) break;
                sub = (sub - 1) & Mask(W);
            }
            while (faces_by_dim.size() > 1 && faces_by_dim.back().empty()) faces_by_dim.pop_back();
            for (auto& fs : faces_by_dim) std::sort(fs.begin(), fs.end());
            if (faces_by_dim[0].empty()) continue;  // void complex, no homology
            auto h = homology_ranks(faces_by_dim, fld);
            for (int d = -1; d + 1 < int(h.size()); ++d) {
                if (h[d + 1] == 0) continue;
                int i = sz - d - 2;
                if (i < 0) continue;
                local.beta[{i, sz}] += h[d + 1];
            }
        }
        std::lock_guard<std::mutex> g(mtx);
        if (partial.size() <= chunk) partial.resize(chunk + 1);
        partial[chunk] = std::move(local);
    });
    BettiTable out;
    for (const auto& t : partial)
        for (const auto& [key, val] : t.beta) out.beta[key] += val;
    return out;
}

}  // namespace

long long reduced_homology_rank(const SimplicialComplex& K, int dim, const HomologyField& field) {
    if (dim < -1) throw std::invalid_argument("reduced_homology_rank: dim >= -1");
    if (K.facets.empty()) return 0;  // void complex
    std::vector<char> face = face_table(K);
    int top = K.dim();
    if (dim > top) return 0;
    std::vector<std::vector<Mask>> faces_by_dim(top + 2);
    for (std::size_t b = 0; b < face.size(); ++b)
        if (face[b]) faces_by_dim[popcount(Mask(b))].push_back(Mask(b));
    for (auto& fs : faces_by_dim) std::sort(fs.begin(), fs.end());
    if (field.rational) {
        return homology_ranks(faces_by_dim, QField{})[dim + 1];
    }
    return homology_ranks(faces_by_dim, GFp{field.prime})[dim + 1];
}

BettiTable hochster_betti(const BlockFamily& C, const HomologyField& field) {
    if (field.rational) return hochster_betti_impl(C, QField{});
    return hochster_betti_impl(C, GFp{field.prime});
}

}  // namespace steinerlab
