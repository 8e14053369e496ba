#include "phibound/modpoly.hpp"

#include <cmath>
#include <cstdint>
#include <atomic>
#include <future>
#include <map>
#include <sstream>
#include <thread>

#include "phibound/qexp.hpp"
#include "phibound/real.hpp"

namespace phibound {

namespace {

using u64 = uint64_t;
using u128 = unsigned __int128;

bool is_prime_long(long n) {
    if (n < 2) return false;
    for (long d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

// exponent window matched by the linear solve: [-l(l+1), 3l+18], i.e.
// (l+1)^2 + 2(l+1) + 16 coefficient equations
long solve_window_hi(long l) { return 3 * l + 18; }

// ---------------------------------------------------------------------------
// shared fixed-point helpers
// ---------------------------------------------------------------------------

struct Mont {
    u64 p, pinv, r2;
    explicit Mont(u64 prime) : p(prime) {
        u64 x = p;
        for (int i = 0; i < 6; ++i) x *= 2 - p * x; // p^{-1} mod 2^64
        pinv = ~x + 1;
        r2 = static_cast<u64>((~static_cast<u128>(0)) % p + 1); // 2^128 mod p
    }
    u64 mul(u64 a, u64 b) const {
        u128 t = static_cast<u128>(a) * b;
        u64 m = static_cast<u64>(t) * pinv;
        u64 r = static_cast<u64>((t + static_cast<u128>(m) * p) >> 64);
        return r >= p ? r - p : r;
    }
    u64 add(u64 a, u64 b) const {
        u64 s = a + b;
        return s >= p ? s - p : s;
    }
    u64 sub(u64 a, u64 b) const { return a >= b ? a - b : a + p - b; }
    u64 to(u64 a) const { return mul(a % p, r2); }
    u64 from(u64 a) const { return mul(a, 1); }
    u64 of_mpz(const mpz_class& v) const { return to(mpz_fdiv_ui(v.get_mpz_t(), p)); }
};

// dense coefficient vector over an exponent window, Montgomery form
struct PSeries {
    long val = 0;
    std::vector<u64> c;
    bool empty() const { return c.empty(); }
};

PSeries pseries_of(const IntSeries& s, const Mont& M, long hi) {
    PSeries r;
    if (s.is_zero() || s.valuation() > hi) return r;
    r.val = s.valuation();
    long top = std::min(hi, s.prec() - 1);
    r.c.reserve(static_cast<size_t>(top - r.val + 1));
    for (long e = r.val; e <= top; ++e) r.c.push_back(M.of_mpz(s.coeff(e)));
    return r;
}

// product truncated to exponents <= cap; callers budget the exactness
// degradation caused by the cut tail themselves
PSeries pmul(const PSeries& a, const PSeries& b, const Mont& M, long cap) {
    PSeries r;
    if (a.empty() || b.empty()) return r;
    r.val = a.val + b.val;
    long n = cap - r.val + 1;
    if (n <= 0) return r;
    r.c.assign(static_cast<size_t>(n), 0);
    for (size_t i = 0; i < a.c.size(); ++i) {
        if (a.c[i] == 0) continue;
        long base = static_cast<long>(i) + b.val + a.val - r.val;
        if (base >= n) break;
        size_t jmax = std::min(b.c.size(), static_cast<size_t>(n - base));
        u64* out = r.c.data() + base;
        for (size_t j = 0; j < jmax; ++j)
            if (b.c[j]) out[j] = M.add(out[j], M.mul(a.c[i], b.c[j]));
    }
    return r;
}

// deterministic prime chains; solve primes and verification primes are drawn
// from disjoint ranges
std::vector<u64> prime_chain(unsigned start_exp, int count) {
    std::vector<u64> v;
    mpz_class p = mpz_class(1) << start_exp;
    for (int i = 0; i < count; ++i) {
        mpz_class np;
        mpz_nextprime(np.get_mpz_t(), p.get_mpz_t());
        v.push_back(np.get_ui());
        p = np;
    }
    return v;
}

const std::vector<u64>& check_primes() {
    static const std::vector<u64> primes = prime_chain(62, 3);
    return primes;
}

// ---------------------------------------------------------------------------
// linear_solve: ansatz Phi = X^{l+1} + Y^{l+1} - X^l Y^l + sum a_ij X^i Y^j
// (a_ij = a_ji, 0 <= i,j <= l), X = j(q^l), Y = j(q).  Impose
// Phi(j(q^l), j(q)) = 0 and match q-coefficients.  The unordered pair {i,j}
// (i >= j canonical) first contributes at exponent -(il+j); these leading
// exponents are pairwise distinct over canonical pairs, so an ascending sweep
// determines one coefficient per leading exponent and the remaining matched
// exponents are consistency checks.
//
// Exact big-integer sweep for small l; above that the sweep runs modulo a
// batch of 61-bit primes whose product exceeds the proven coefficient bound
// 6 l log l + 18 l, and the integer solution is CRT-reconstructed.
// ---------------------------------------------------------------------------

std::map<long, std::pair<long, long>> lead_table(long l) {
    std::map<long, std::pair<long, long>> lead;
    for (long i = 0; i <= l; ++i)
        for (long j = 0; j <= i; ++j) lead[-(i * l + j)] = {i, j};
    return lead;
}

BivariateIntPoly solve_linear_exact(long l, long hi) {
    const long lo = -l * (l + 1);
    // Y^j must be known through hi + il for every partner exponent i
    const long ylen = hi + l * (l + 1) + 2;
    IntSeries jq = j_cached(ylen + l + 3);
    std::vector<IntSeries> ypow(static_cast<size_t>(l + 2));
    ypow[0] = IntSeries::one_to_prec(ylen);
    for (long j = 1; j <= l + 1; ++j)
        ypow[static_cast<size_t>(j)] =
            (ypow[static_cast<size_t>(j - 1)] * jq).truncated(ylen - j);

    const long uprec = (hi + 2) / l + l + 4;
    IntSeries ju = j_cached(uprec);
    std::vector<IntSeries> xpow(static_cast<size_t>(l + 2));
    {
        IntSeries cur = IntSeries::one_to_prec(uprec);
        xpow[0] = substitute_power(cur, l);
        for (long i = 1; i <= l + 1; ++i) {
            cur = cur * ju;
            xpow[static_cast<size_t>(i)] = substitute_power(cur, l);
        }
    }

    auto monomial = [&](long i, long j) {
        // X^i is sparse; keep it on the left of the schoolbook product
        return (xpow[static_cast<size_t>(i)] * ypow[static_cast<size_t>(j)]).truncated(hi + 1);
    };

    std::vector<mpz_class> r(static_cast<size_t>(hi - lo + 1));
    auto add_scaled = [&](const IntSeries& s, const mpz_class& scale) {
        if (s.is_zero() || scale == 0) return;
        if (s.prec() <= hi)
            throw InsufficientPrecision("linear_solve: series precision below match window");
        for (long e = std::max(s.valuation(), lo); e <= hi; ++e) {
            const mpz_class& v = s.coeff(e);
            if (v != 0) r[static_cast<size_t>(e - lo)] += scale * v;
        }
    };
    add_scaled(monomial(l + 1, 0), 1);
    add_scaled(monomial(0, l + 1), 1);
    add_scaled(monomial(l, l), -1);

    auto lead = lead_table(l);
    BivariateIntPoly phi(l);
    long determined = 0;
    for (long e = lo; e <= hi; ++e) {
        auto it = lead.find(e);
        if (it != lead.end()) {
            auto [i, j] = it->second;
            mpz_class a = -r[static_cast<size_t>(e - lo)];
            ++determined;
            if (a != 0) {
                add_scaled(monomial(i, j), a);
                if (i != j) add_scaled(monomial(j, i), a);
                phi.set_coeff(i, j, std::move(a));
            }
        } else if (r[static_cast<size_t>(e - lo)] != 0) {
            throw InsufficientPrecision("linear_solve: inconsistent residual at q^" +
                                        std::to_string(e));
        }
    }
    if (determined != (l + 1) * (l + 2) / 2)
        throw InsufficientPrecision("linear_solve: not all coefficients were reachable");

    phi.set_coeff(l + 1, 0, 1);
    phi.set_coeff(l, l, phi.coeff(l, l) - 1);
    return phi;
}

// one modular image of the sweep; returns a_ij mod p (plain residues) in
// canonical pair order, or reports an inconsistent residual
struct ModImage {
    std::vector<u64> a;
    bool consistent = true;
};

ModImage sweep_mod_prime(long l, long hi, u64 prime) {
    const Mont M(prime);
    const long lo = -l * (l + 1);
    // Y^j exact through ycap - j + 1, needed through hi + il for i <= l+1
    const long ycap = hi + l * (l + 1) + 2;
    IntSeries jq = j_cached(ycap + 2);
    PSeries Y = pseries_of(jq, M, ycap);
    std::vector<PSeries> ypow(static_cast<size_t>(l + 2));
    ypow[0].val = 0;
    ypow[0].c.assign(static_cast<size_t>(ycap + 1), 0);
    ypow[0].c[0] = M.to(1);
    for (long j = 1; j <= l + 1; ++j)
        ypow[static_cast<size_t>(j)] = pmul(ypow[static_cast<size_t>(j - 1)], Y, M, ycap);

    // u-side powers of j mod p for the sparse X^i factors
    const long uprec = (hi + 2) / l + l + 4;
    IntSeries ju = j_cached(uprec);
    std::vector<std::vector<u64>> upow(static_cast<size_t>(l + 2)); // index 0 <-> u^{-i}
    {
        PSeries jup = pseries_of(ju, M, uprec - 1);
        PSeries cur;
        cur.val = 0;
        cur.c.assign(static_cast<size_t>(uprec), 0);
        cur.c[0] = M.to(1);
        upow[0] = cur.c;
        for (long i = 1; i <= l + 1; ++i) {
            cur = pmul(cur, jup, M, uprec - 1 - i);
            upow[static_cast<size_t>(i)] = cur.c; // entry k <-> u^{k - i}
        }
    }

    std::vector<u64> r(static_cast<size_t>(hi - lo + 1), 0);
    // r += scale * X^i Y^j over [lo, hi]
    auto add_scaled = [&](long i, long j, u64 scale) {
        const std::vector<u64>& xi = upow[static_cast<size_t>(i)];
        const PSeries& yj = ypow[static_cast<size_t>(j)];
        for (size_t k = 0; k < xi.size(); ++k) {
            if (xi[k] == 0) continue;
            long xe = l * (static_cast<long>(k) - i); // exponent of this X entry
            if (xe > hi + j) break;
            u64 s = M.mul(scale, xi[k]);
            long e0 = xe + yj.val; // = xe - j
            size_t tmax = std::min(yj.c.size(), static_cast<size_t>(hi - e0 + 1));
            u64* out = r.data() + (e0 - lo);
            for (size_t t = 0; t < tmax; ++t)
                if (yj.c[t]) out[t] = M.add(out[t], M.mul(s, yj.c[t]));
        }
    };
    add_scaled(l + 1, 0, M.to(1));
    add_scaled(0, l + 1, M.to(1));
    add_scaled(l, l, prime - M.to(1));

    auto lead = lead_table(l);
    ModImage img;
    img.a.assign(static_cast<size_t>((l + 1) * (l + 2) / 2), 0);
    size_t pid = 0;
    for (long e = lo; e <= hi; ++e) {
        auto it = lead.find(e);
        if (it != lead.end()) {
            auto [i, j] = it->second;
            u64 rv = r[static_cast<size_t>(e - lo)];
            u64 am = rv == 0 ? 0 : prime - rv; // Montgomery form of -r
            if (am != 0) {
                add_scaled(i, j, am);
                if (i != j) add_scaled(j, i, am);
            }
            img.a[static_cast<size_t>(i * (i + 1) / 2 + j)] = M.from(am);
            ++pid;
        } else if (r[static_cast<size_t>(e - lo)] != 0) {
            img.consistent = false;
            return img;
        }
    }
    (void)pid;
    return img;
}

BivariateIntPoly solve_linear_crt(long l, long hi) {
    // proven a-priori coefficient bound: h(Phi_l) <= 6 l log l + 18 l
    double bound_nats = 6.0 * l * std::log(static_cast<double>(l)) + 18.0 * l;
    int nprimes = static_cast<int>(bound_nats / std::log(2.0) / 61.0) + 3;
    std::vector<u64> primes = prime_chain(61, nprimes);

    std::vector<ModImage> images(primes.size());
    unsigned hw = std::max(1u, std::thread::hardware_concurrency());
    std::vector<std::future<void>> futs;
    std::atomic<size_t> next{0};
    for (unsigned t = 0; t < std::min<size_t>(hw, primes.size()); ++t)
        futs.push_back(std::async(std::launch::async, [&] {
            for (size_t k = next.fetch_add(1); k < primes.size(); k = next.fetch_add(1))
                images[k] = sweep_mod_prime(l, hi, primes[k]);
        }));
    for (auto& f : futs) f.get();
    for (const ModImage& img : images)
        if (!img.consistent)
            throw InsufficientPrecision("linear_solve: inconsistent modular residual");

    // CRT with symmetric lift
    size_t npairs = static_cast<size_t>((l + 1) * (l + 2) / 2);
    std::vector<mpz_class> prefix(primes.size()); // product of previous primes
    std::vector<u64> pref_inv(primes.size());     // its inverse mod p_k
    mpz_class prod = 1;
    for (size_t k = 0; k < primes.size(); ++k) {
        prefix[k] = prod;
        if (k > 0) {
            u64 pm = mpz_fdiv_ui(prod.get_mpz_t(), primes[k]);
            mpz_class inv, pk = mpz_class(static_cast<unsigned long>(primes[k]));
            mpz_class pmz = mpz_class(static_cast<unsigned long>(pm));
            if (mpz_invert(inv.get_mpz_t(), pmz.get_mpz_t(), pk.get_mpz_t()) == 0)
                throw ModPolyError("linear_solve: CRT inversion failed");
            pref_inv[k] = inv.get_ui();
        }
        prod *= static_cast<unsigned long>(primes[k]);
    }
    mpz_class half = prod / 2;

    BivariateIntPoly phi(l);
    for (long i = 0; i <= l; ++i)
        for (long j = 0; j <= i; ++j) {
            size_t pid = static_cast<size_t>(i * (i + 1) / 2 + j);
            mpz_class x = static_cast<unsigned long>(images[0].a[pid]);
            for (size_t k = 1; k < primes.size(); ++k) {
                const Mont M(primes[k]);
                u64 xk = mpz_fdiv_ui(x.get_mpz_t(), primes[k]);
                u64 diff = M.sub(images[k].a[pid] % primes[k], xk % primes[k]);
                u64 t = M.from(M.mul(M.to(diff), M.to(pref_inv[k])));
                x += prefix[k] * static_cast<unsigned long>(t);
            }
            if (x > half) x -= prod;
            phi.set_coeff(i, j, std::move(x));
        }
    (void)npairs;
    phi.set_coeff(l + 1, 0, 1);
    phi.set_coeff(l, l, phi.coeff(l, l) - 1);
    return phi;
}

BivariateIntPoly solve_linear(long l, long hi) {
    return l <= 23 ? solve_linear_exact(l, hi) : solve_linear_crt(l, hi);
}

// ---------------------------------------------------------------------------
// j_reduction: Phi(X, j(z)) = (X - j(lz)) prod_b (X - j((z+b)/l)).  With
// u = q^{1/l}, the power sums p_m(q) = sum_b j((z+b)/l)^m are l times every
// l-th coefficient of j(u)^m; Newton's identities give the elementary
// symmetric functions e_m(q); each X^i coefficient series is then reduced
// against powers of j(q) to read off integer coefficients.
// ---------------------------------------------------------------------------

IntSeries decimate(const IntSeries& s, long l) {
    long top = s.prec() - 1; // highest known exponent
    long qprec = (top >= 0 ? top / l : -((-top + l - 1) / l)) + 1;
    if (s.is_zero()) return IntSeries::zero(qprec);
    long e0 = s.valuation() >= 0 ? (s.valuation() + l - 1) / l : -((-s.valuation()) / l);
    std::vector<mpz_class> c;
    for (long e = e0; e < qprec; ++e) c.push_back(s.coeff(l * e));
    return IntSeries(e0, std::move(c));
}

BivariateIntPoly solve_jreduction(long l, long slack) {
    // e_m needed through q^{l + slack} (the J e_{l-i} assembly shifts by l and
    // Newton loses one exponent per level)
    const long cap = 2 * l + slack + 2;
    const long ucap = l * cap + l + 2;
    IntSeries ju = j_cached(ucap);

    std::vector<IntSeries> psum(static_cast<size_t>(l + 1));
    {
        IntSeries cur = IntSeries::one_to_prec(ucap);
        for (long m = 1; m <= l; ++m) {
            cur = (cur * ju).truncated(l * cap + 1);
            psum[static_cast<size_t>(m)] = mpz_class(l) * decimate(cur, l);
        }
    }

    // m e_m = sum_{k=1}^{m} (-1)^{k-1} e_{m-k} p_k
    std::vector<IntSeries> esym(static_cast<size_t>(l + 2));
    esym[0] = IntSeries::one_to_prec(cap);
    for (long m = 1; m <= l; ++m) {
        IntSeries acc = IntSeries::zero(cap);
        for (long k = 1; k <= m; ++k) {
            IntSeries term =
                (esym[static_cast<size_t>(m - k)] * psum[static_cast<size_t>(k)]).truncated(cap);
            acc = (k % 2 == 1) ? acc + term : acc - term;
        }
        if (acc.is_zero()) {
            esym[static_cast<size_t>(m)] = acc;
            continue;
        }
        std::vector<mpz_class> c;
        for (long e = acc.valuation(); e < acc.prec(); ++e) {
            if (!mpz_divisible_ui_p(acc.coeff(e).get_mpz_t(), static_cast<unsigned long>(m)))
                throw InsufficientPrecision("j_reduction: Newton identity not divisible by m");
            mpz_class q;
            mpz_divexact_ui(q.get_mpz_t(), acc.coeff(e).get_mpz_t(),
                            static_cast<unsigned long>(m));
            c.push_back(std::move(q));
        }
        esym[static_cast<size_t>(m)] = IntSeries(acc.valuation(), std::move(c));
    }
    esym[static_cast<size_t>(l + 1)] = IntSeries::zero(cap);

    IntSeries J = substitute_power(j_cached(cap / l + 3), l); // j(q^l)

    IntSeries jq = j_cached(cap + l + 3);
    std::vector<IntSeries> ypow(static_cast<size_t>(l + 2));
    ypow[0] = IntSeries::one_to_prec(cap);
    for (long d = 1; d <= l + 1; ++d)
        ypow[static_cast<size_t>(d)] = (ypow[static_cast<size_t>(d - 1)] * jq).truncated(cap - d);

    std::vector<std::vector<mpz_class>> a(static_cast<size_t>(l + 2),
                                          std::vector<mpz_class>(static_cast<size_t>(l + 2)));
    for (long i = 0; i <= l + 1; ++i) {
        // coefficient of X^i in (X - J) sum_m (-1)^m e_m X^{l-m}
        IntSeries ai = esym[static_cast<size_t>(l + 1 - i)];
        if (i <= l) ai = ai + (J * esym[static_cast<size_t>(l - i)]);
        if ((l + 1 - i) % 2 == 1) ai = -ai;
        while (!ai.is_zero() && ai.valuation() < 0) {
            long d = -ai.valuation();
            if (d > l + 1)
                throw InsufficientPrecision("j_reduction: X^" + std::to_string(i) +
                                            " coefficient exceeds degree l+1 in j");
            mpz_class c = ai.coeff(-d);
            ai -= c * ypow[static_cast<size_t>(d)];
            a[static_cast<size_t>(i)][static_cast<size_t>(d)] = std::move(c);
        }
        if (!ai.is_zero()) {
            a[static_cast<size_t>(i)][0] = ai.coeff(0);
            ai -= a[static_cast<size_t>(i)][0] * ypow[0];
        }
        if (!ai.is_zero())
            throw InsufficientPrecision("j_reduction: nonzero remainder for X^" +
                                        std::to_string(i));
    }

    // the reduction never assumed symmetry, so a_{i,d} == a_{d,i} is a check
    BivariateIntPoly phi(l);
    for (long i = 0; i <= l + 1; ++i)
        for (long d = 0; d <= i; ++d) {
            if (a[static_cast<size_t>(i)][static_cast<size_t>(d)] !=
                a[static_cast<size_t>(d)][static_cast<size_t>(i)])
                throw InsufficientPrecision("j_reduction: asymmetric solution");
            phi.set_coeff(i, d, a[static_cast<size_t>(i)][static_cast<size_t>(d)]);
        }
    return phi;
}

// ---------------------------------------------------------------------------
// modular-equation verification
// ---------------------------------------------------------------------------

// exact evaluation of Phi(j(q^l), j(q)); precision degradation from the
// negative valuations is absorbed by the cap margin and asserted at the end
bool verify_exact(const BivariateIntPoly& p, long hi) {
    long l = p.level();
    const long cap = hi + (l + 1) * (l + 2) + 2;
    IntSeries jq = j_cached(cap + l + 3);
    std::vector<IntSeries> ypow(static_cast<size_t>(l + 2));
    ypow[0] = IntSeries::one_to_prec(cap);
    for (long j = 1; j <= l + 1; ++j)
        ypow[static_cast<size_t>(j)] = (ypow[static_cast<size_t>(j - 1)] * jq).truncated(cap);

    const long uprec = cap / l + 3;
    IntSeries X = substitute_power(j_cached(uprec), l);

    IntSeries acc = IntSeries::zero(cap);
    for (long i = l + 1; i >= 0; --i) {
        IntSeries qi = IntSeries::zero(cap);
        for (long j = 0; j <= l + 1; ++j) {
            const mpz_class& c = p.coeff(i, j);
            if (c != 0) qi += (c * ypow[static_cast<size_t>(j)]).truncated(cap);
        }
        acc = (acc * X).truncated(cap) + qi;
    }
    if (acc.prec() <= hi)
        throw ModPolyError("verify_modular_equation: internal precision budget exhausted");
    return acc.truncated(hi + 1).is_zero();
}

bool verify_mod_prime(const BivariateIntPoly& p, long hi, u64 prime) {
    long l = p.level();
    Mont M(prime);
    const long cap = hi + (l + 1) * (l + 2) + 2;
    IntSeries jq = j_cached(cap + 2);
    PSeries Y = pseries_of(jq, M, cap);

    std::vector<PSeries> ypow(static_cast<size_t>(l + 2));
    ypow[0].val = 0;
    ypow[0].c.assign(static_cast<size_t>(cap + 1), 0);
    ypow[0].c[0] = M.to(1);
    for (long j = 1; j <= l + 1; ++j)
        ypow[static_cast<size_t>(j)] = pmul(ypow[static_cast<size_t>(j - 1)], Y, M, cap);

    const long uprec = cap / l + 3;
    PSeries X;
    {
        IntSeries ju = j_cached(uprec);
        X.val = -l;
        X.c.assign(static_cast<size_t>(l * (uprec + 1)), 0);
        for (long e = -1; e < uprec; ++e)
            X.c[static_cast<size_t>(l * (e + 1))] = M.of_mpz(ju.coeff(e));
    }

    const long lo = -l * (l + 1) - 1;
    PSeries acc;
    for (long i = l + 1; i >= 0; --i) {
        acc = pmul(acc, X, M, cap);
        if (acc.empty()) {
            acc.val = lo;
            acc.c.assign(static_cast<size_t>(cap - lo + 1), 0);
        }
        for (long j = 0; j <= l + 1; ++j) {
            const mpz_class& cij = p.coeff(i, j);
            if (cij == 0) continue;
            u64 s = M.of_mpz(cij);
            const PSeries& yj = ypow[static_cast<size_t>(j)];
            for (size_t t = 0; t < yj.c.size(); ++t) {
                long e = yj.val + static_cast<long>(t);
                if (e > cap) break;
                if (yj.c[t])
                    acc.c[static_cast<size_t>(e - acc.val)] =
                        M.add(acc.c[static_cast<size_t>(e - acc.val)], M.mul(s, yj.c[t]));
            }
        }
    }
    for (size_t k = 0; k < acc.c.size(); ++k) {
        long e = acc.val + static_cast<long>(k);
        if (e > hi) break;
        if (acc.c[k] != 0) return false;
    }
    return true;
}

void run_all_checks(const BivariateIntPoly& phi, int slack) {
    if (!degree_structure_ok(phi))
        throw ModPolyError("compute_phi: degree/monic structure check failed");
    if (!kronecker_congruence_ok(phi))
        throw ModPolyError("compute_phi: Kronecker congruence check failed");
    if (!verify_modular_equation(phi, slack))
        throw ModPolyError("compute_phi: modular equation residual is nonzero");
}

} // namespace

const mpz_class& BivariateIntPoly::max_abs_coeff() const {
    const mpz_class* best = &c_[0];
    for (const mpz_class& v : c_)
        if (mpz_cmpabs(v.get_mpz_t(), best->get_mpz_t()) > 0) best = &v;
    return *best;
}

BivariateIntPoly compute_phi(long l, PhiStrategy strategy, long max_l) {
    if (!is_prime_long(l)) throw std::invalid_argument("compute_phi: l must be prime");
    if (l > max_l)
        throw std::out_of_range("compute_phi: l exceeds the configured maximum " +
                                std::to_string(max_l));
    for (int attempt = 0;; ++attempt) {
        long scale = attempt == 0 ? 1 : 2; // doubled precision on retry
        try {
            BivariateIntPoly phi = strategy == PhiStrategy::LinearSolve
                                       ? solve_linear(l, scale * solve_window_hi(l))
                                       : solve_jreduction(l, scale * 12);
            run_all_checks(phi, 16);
            return phi;
        } catch (const InsufficientPrecision&) {
            if (attempt == 1) throw;
        }
    }
}

bool verify_modular_equation(const BivariateIntPoly& p, int slack) {
    long hi = solve_window_hi(p.level()) + slack;
    if (p.level() <= 13) return verify_exact(p, hi);
    for (u64 prime : check_primes())
        if (!verify_mod_prime(p, hi, prime)) return false;
    return true;
}

bool kronecker_congruence_ok(const BivariateIntPoly& p) {
    long l = p.level();
    for (long i = 0; i <= l + 1; ++i)
        for (long j = 0; j <= i; ++j) {
            long want = 0;
            if (i == l + 1 && j == 0) want = 1; // X^{l+1} and Y^{l+1}
            else if (i == l && j == l) want = -1;
            else if (i == 1 && j == 1) want = -1;
            mpz_class diff = p.coeff(i, j) - want;
            if (!mpz_divisible_ui_p(diff.get_mpz_t(), static_cast<unsigned long>(l)))
                return false;
        }
    return true;
}

bool degree_structure_ok(const BivariateIntPoly& p) {
    long l = p.level();
    if (p.coeff(l + 1, 0) != 1) return false;
    for (long j = 1; j <= l + 1; ++j)
        if (p.coeff(l + 1, j) != 0) return false;
    return true;
}

HeightReport height(const BivariateIntPoly& p, HeightConvention conv) {
    const mpz_class& m = p.max_abs_coeff();
    if (m == 0) throw std::invalid_argument("height: zero polynomial");
    HeightReport r;
    r.l = p.level();
    r.h2 = static_cast<long>(mpz_sizeinbase(m.get_mpz_t(), 2));
    Real hm(128);
    mpfr_set_z(hm.get(), m.get_mpz_t(), MPFR_RNDN);
    mpfr_abs(hm.get(), hm.get(), MPFR_RNDN);
    mpfr_log(hm.get(), hm.get(), MPFR_RNDN);
    r.h = hm.to_double();
    r.conv = conv;
    double hconv = conv == HeightConvention::BitsTimesLog2
                       ? static_cast<double>(r.h2) * std::log(2.0)
                       : r.h;
    double lead = 6.0 * r.l * std::log(static_cast<double>(r.l));
    r.c_l = (hconv - lead) / r.l;
    r.r_l = (lead + 18.0 * r.l) / hconv;
    return r;
}

double round2_half_up(double x) { return std::floor(x * 100.0 + 0.5) / 100.0; }

std::pair<double, double> table_stats(const HeightReport& r) {
    return {round2_half_up(r.c_l), round2_half_up(r.r_l)};
}

std::string serialize(const BivariateIntPoly& p) {
    std::ostringstream os;
    os << "phi l " << p.level() << "\n";
    for (long i = 0; i <= p.level() + 1; ++i)
        for (long j = 0; j <= i; ++j) {
            const mpz_class& c = p.coeff(i, j);
            if (c != 0) os << i << " " << j << " " << c.get_str() << "\n";
        }
    return os.str();
}

BivariateIntPoly parse_phi(const std::string& text) {
    std::istringstream is(text);
    std::string line;
    if (!std::getline(is, line)) throw std::invalid_argument("parse_phi: empty input");
    long l = -1;
    {
        std::istringstream hs(line);
        std::string w1, w2;
        if (!(hs >> w1 >> w2 >> l) || w1 != "phi" || w2 != "l" || l < 2 || !(hs >> std::ws).eof())
            throw std::invalid_argument("parse_phi: bad header line");
    }
    BivariateIntPoly p(l);
    long prev_i = -1, prev_j = -1;
    while (std::getline(is, line)) {
        if (line.empty()) throw std::invalid_argument("parse_phi: blank line");
        std::istringstream ls(line);
        long i, j;
        std::string cs;
        if (!(ls >> i >> j >> cs) || !(ls >> std::ws).eof())
            throw std::invalid_argument("parse_phi: malformed line: " + line);
        if (i < j) throw std::invalid_argument("parse_phi: symmetry-redundant entry (i < j)");
        if (i > l + 1 || j < 0) throw std::invalid_argument("parse_phi: exponent out of range");
        if (std::make_pair(i, j) <= std::make_pair(prev_i, prev_j))
            throw std::invalid_argument("parse_phi: entries not in ascending (i, j) order");
        mpz_class c;
        if (cs.empty() || c.set_str(cs, 10) != 0)
            throw std::invalid_argument("parse_phi: bad integer: " + cs);
        if (c == 0) throw std::invalid_argument("parse_phi: explicit zero coefficient");
        p.set_coeff(i, j, std::move(c));
        prev_i = i;
        prev_j = j;
    }
    return p;
}

std::vector<mpz_class> specialize_at_integer(const BivariateIntPoly& p, const mpz_class& y) {
    long l = p.level();
    std::vector<mpz_class> ypow(static_cast<size_t>(l + 2));
    ypow[0] = 1;
    for (long j = 1; j <= l + 1; ++j)
        ypow[static_cast<size_t>(j)] = ypow[static_cast<size_t>(j - 1)] * y;
    std::vector<mpz_class> out(static_cast<size_t>(l + 2));
    for (long i = 0; i <= l + 1; ++i)
        for (long j = 0; j <= l + 1; ++j)
            out[static_cast<size_t>(i)] += p.coeff(i, j) * ypow[static_cast<size_t>(j)];
    return out;
}

} // namespace phibound
