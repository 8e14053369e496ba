#include "phibound/sieve.hpp"

#include <cmath>
#include <stdexcept>

namespace phibound {

SieveTables build_sieve(long x_max) {
    if (x_max < 1) throw std::invalid_argument("build_sieve: x_max must be >= 1");
    size_t n = static_cast<size_t>(x_max) + 1;
    SieveTables t;
    t.x_max = x_max;
    t.mu.assign(n, 0);
    t.phi.assign(n, 0);
    t.mu[1] = 1;
    t.phi[1] = 1;

    std::vector<int32_t> primes;
    for (long i = 2; i <= x_max; ++i) {
        if (t.phi[static_cast<size_t>(i)] == 0) { // i prime
            primes.push_back(static_cast<int32_t>(i));
            t.mu[static_cast<size_t>(i)] = -1;
            t.phi[static_cast<size_t>(i)] = static_cast<uint32_t>(i - 1);
        }
        for (int32_t p : primes) {
            long v = static_cast<long>(p) * i;
            if (v > x_max) break;
            if (i % p == 0) {
                t.mu[static_cast<size_t>(v)] = 0;
                t.phi[static_cast<size_t>(v)] = t.phi[static_cast<size_t>(i)] * static_cast<uint32_t>(p);
                break;
            }
            t.mu[static_cast<size_t>(v)] = static_cast<int8_t>(-t.mu[static_cast<size_t>(i)]);
            t.phi[static_cast<size_t>(v)] = t.phi[static_cast<size_t>(i)] * static_cast<uint32_t>(p - 1);
        }
    }

    t.prefix_M.assign(n, 0);
    t.prefix_Q.assign(n, 0);
    t.prefix_K.assign(n, 0);
    for (long i = 1; i <= x_max; ++i) {
        size_t k = static_cast<size_t>(i);
        t.prefix_M[k] = t.prefix_M[k - 1] + t.mu[k];
        t.prefix_Q[k] = t.prefix_Q[k - 1] + (t.mu[k] != 0 ? 1 : 0);
        t.prefix_K[k] = t.prefix_K[k - 1] + t.phi[k];
    }
    return t;
}

void for_each_mu(long x_max, const std::function<void(long, int)>& f) {
    if (x_max < 1) return;
    f(1, 1);
    if (x_max < 2) return;

    long root = static_cast<long>(std::sqrt(static_cast<double>(x_max))) + 1;
    while (root * root > x_max) --root;
    std::vector<long> primes;
    {
        std::vector<char> comp(static_cast<size_t>(root) + 1, 0);
        for (long i = 2; i <= root; ++i)
            if (!comp[static_cast<size_t>(i)]) {
                primes.push_back(i);
                for (long k = i * i; k <= root; k += i) comp[static_cast<size_t>(k)] = 1;
            }
    }

    const long seg = 1 << 20;
    std::vector<int8_t> sign(static_cast<size_t>(seg));
    std::vector<uint64_t> rest(static_cast<size_t>(seg));
    for (long lo = 2; lo <= x_max; lo += seg) {
        long hi = std::min(x_max, lo + seg - 1);
        long len = hi - lo + 1;
        for (long i = 0; i < len; ++i) {
            sign[static_cast<size_t>(i)] = 1;
            rest[static_cast<size_t>(i)] = static_cast<uint64_t>(lo + i);
        }
        for (long p : primes) {
            if (p * p > hi) break;
            long start = ((lo + p - 1) / p) * p;
            for (long v = start; v <= hi; v += p) {
                size_t k = static_cast<size_t>(v - lo);
                rest[k] /= static_cast<uint64_t>(p);
                sign[k] = static_cast<int8_t>(-sign[k]);
                if (rest[k] % static_cast<uint64_t>(p) == 0) sign[k] = 0; // p^2 | n
                while (rest[k] % static_cast<uint64_t>(p) == 0) rest[k] /= static_cast<uint64_t>(p);
            }
        }
        for (long i = 0; i < len; ++i) {
            size_t k = static_cast<size_t>(i);
            int m = sign[k];
            if (rest[k] > 1) m = -m; // one leftover prime factor > sqrt(x_max)
            f(lo + i, m);
        }
    }
}

} // namespace phibound
