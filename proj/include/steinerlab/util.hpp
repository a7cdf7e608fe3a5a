#pragma once

#include <bit>
#include <cstdint>
#include <functional>
#include <stdexcept>
#include <thread>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace steinerlab {

using BigInt = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

using Mask = std::uint64_t;

inline int popcount(Mask m) { return std::popcount(m); }

/// Exact binomial coefficient.
inline BigInt binomial(long n, long k) {
    if (k < 0 || k > n) return 0;
    if (k > n - k) k = n - k;
    BigInt r = 1;
    for (long i = 1; i <= k; ++i) {
        r *= n - k + i;
        r /= i;
    }
    return r;
}

/// Binomial coefficient as long long; throws on overflow.
inline long long binomial_ll(long n, long k) {
    BigInt b = binomial(n, k);
    if (b > BigInt(std::numeric_limits<long long>::max()))
        throw std::overflow_error("binomial_ll: result does not fit in long long");
    return static_cast<long long>(b);
}

/// Runs body(first, last) on disjoint chunks of [0, count). Results must be
/// combined by the caller in chunk order so the outcome does not depend on
/// the number of threads.
inline void parallel_chunks(std::size_t count,
                            const std::function<void(std::size_t, std::size_t, std::size_t)>& body) {
    std::size_t nthreads = std::max<std::size_t>(1, std::thread::hardware_concurrency());
    nthreads = std::min(nthreads, count ? count : 1);
    if (nthreads <= 1) {
        body(0, 0, count);
        return;
    }
    std::vector<std::thread> workers;
    std::size_t chunk = (count + nthreads - 1) / nthreads;
    for (std::size_t t = 0; t < nthreads; ++t) {
        std::size_t lo = t * chunk, hi = std::min(count, lo + chunk);
        if (lo >= hi) break;
        workers.emplace_back([&body, t, lo, hi] { body(t, lo, hi); });
    }
    for (auto& w : workers) w.join();
}

}  // namespace steinerlab
