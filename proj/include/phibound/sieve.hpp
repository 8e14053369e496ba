#ifndef PHIBOUND_SIEVE_HPP
#define PHIBOUND_SIEVE_HPP

#include <cstdint>
#include <functional>
#include <vector>

namespace phibound {

/// Linear-sieve tables for mu and phi with exact prefix sums
///   M(x) = sum mu(n),  Q(x) = sum |mu(n)|,  K(x) = sum phi(n).
struct SieveTables {
    long x_max = 0;
    std::vector<int8_t> mu;       // mu[n], n <= x_max (index 0 unused)
    std::vector<uint32_t> phi;    // phi[n]
    std::vector<int32_t> prefix_M;
    std::vector<int32_t> prefix_Q;
    std::vector<int64_t> prefix_K;

    long long M(long x) const { return x < 1 ? 0 : prefix_M[static_cast<size_t>(x)]; }
    long long Q(long x) const { return x < 1 ? 0 : prefix_Q[static_cast<size_t>(x)]; }
    long long K(long x) const { return x < 1 ? 0 : prefix_K[static_cast<size_t>(x)]; }
};

SieveTables build_sieve(long x_max);

/// Segmented streaming of mu(n) for n = 1..x_max without holding the full
/// table; f(n, mu_n) is called in increasing n.
void for_each_mu(long x_max, const std::function<void(long, int)>& f);

} // namespace phibound

#endif
