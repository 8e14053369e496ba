#include "phibound/qexp.hpp"

#include <memory>
#include <mutex>
#include <stdexcept>

namespace phibound {

namespace {

// prod_{n>=1} (1-q^n) truncated; by Euler's pentagonal number theorem only
// O(sqrt(prec)) terms are nonzero, but the direct product is cheap enough
// and needs no extra facts.
IntSeries euler_product(long prec) {
    std::vector<mpz_class> c(static_cast<size_t>(prec));
    c[0] = 1;
    for (long n = 1; n < prec; ++n) {
        // multiply by (1 - q^n) in place, high to low
        for (long k = prec - 1; k >= n; --k)
            c[static_cast<size_t>(k)] -= c[static_cast<size_t>(k - n)];
    }
    return IntSeries(0, std::move(c));
}

} // namespace

IntSeries delta_expansion(long prec) {
    if (prec < 2) throw std::invalid_argument("delta_expansion: prec must be >= 2");
    long p = prec - 1; // after the q shift the product part is needed mod q^(prec-1)
    IntSeries e = euler_product(p);
    // 24th power by repeated squaring: e^24 = ((e^2)^2)^2 * ((e^2)^2)^2 ... use e8^2 * e8 = e^24? no:
    // e2 = e^2, e4 = e2^2, e8 = e4^2, e16 = e8^2, e24 = e16 * e8.
    IntSeries e2 = (e * e).truncated(p);
    IntSeries e4 = (e2 * e2).truncated(p);
    IntSeries e8 = (e4 * e4).truncated(p);
    IntSeries e16 = (e8 * e8).truncated(p);
    IntSeries e24 = (e16 * e8).truncated(p);
    return e24.shifted(1);
}

IntSeries e4_expansion(long prec) {
    if (prec < 1) throw std::invalid_argument("e4_expansion: prec must be >= 1");
    std::vector<mpz_class> c(static_cast<size_t>(prec));
    c[0] = 1;
    // sigma_3 by summing d^3 over multiples of d
    for (long d = 1; d < prec; ++d) {
        mpz_class d3 = mpz_class(d) * d * d * 240;
        for (long n = d; n < prec; n += d)
            c[static_cast<size_t>(n)] += d3;
    }
    return IntSeries(0, std::move(c));
}

IntSeries j_expansion(long prec) {
    if (prec < 0) throw std::invalid_argument("j_expansion: prec must be >= 0");
    // numerator and denominator to prec+2 so the quotient covers [-1, prec)
    long p = prec + 2;
    IntSeries e4 = e4_expansion(p);
    IntSeries num = (e4 * e4 * e4).truncated(p);
    IntSeries den = delta_expansion(p + 1);
    IntSeries j = num.divided_exact(den).truncated(prec);
    // multiply back: any nonzero remainder within shared precision is an
    // arithmetic bug, not a user error
    IntSeries back = (j * den).truncated(prec);
    if (!(back == num.truncated(prec)))
        throw std::runtime_error("j_expansion: E4^3 / Delta left a nonzero remainder");
    return j;
}

IntSeries j_cached(long n_terms) {
    static std::mutex mu;
    static std::shared_ptr<const IntSeries> cache;
    std::lock_guard<std::mutex> lock(mu);
    if (!cache || cache->prec() < n_terms) {
        long need = n_terms;
        if (cache) need = std::max(need, 2 * cache->prec());
        cache = std::make_shared<const IntSeries>(j_expansion(need));
    }
    return cache->truncated(n_terms);
}

IntSeries substitute_power(const IntSeries& s, long m) {
    if (m < 1) throw std::invalid_argument("substitute_power: m must be >= 1");
    long rprec = m * s.prec();
    if (s.is_zero()) return IntSeries::zero(rprec);
    long rval = m * s.valuation();
    std::vector<mpz_class> c(static_cast<size_t>(rprec - rval));
    for (long e = s.valuation(); e < s.prec(); ++e)
        c[static_cast<size_t>(m * e - rval)] = s.coeff(e);
    return IntSeries(rval, std::move(c));
}

} // namespace phibound
