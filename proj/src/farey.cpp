#include "phibound/farey.hpp"

#include <cmath>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <utility>

#include "phibound/jfunction.hpp"

namespace phibound {

Frac Frac::of(long long n, long long d) {
    if (d == 0) throw std::invalid_argument("Frac: zero denominator");
    if (d < 0) {
        n = -n;
        d = -d;
    }
    long long g = std::gcd(n < 0 ? -n : n, d);
    if (g > 1) {
        n /= g;
        d /= g;
    }
    return Frac{n, d};
}

std::string Frac::str() const {
    return std::to_string(num) + "/" + std::to_string(den);
}

Frac frac_sub(const Frac& a, const Frac& b) {
    return Frac::of(a.num * b.den - b.num * a.den, a.den * b.den);
}

Frac frac_abs(const Frac& a) { return Frac{a.num < 0 ? -a.num : a.num, a.den}; }

namespace {

// r k - s h = 1 with 0 <= s < k (canonical; j-invariance makes any valid
// pair equivalent)
std::pair<long long, long long> unimodular_rs(long long h, long long k) {
    if (k == 1) return {1, 0};
    long long t0 = 0, t1 = 1, r0 = k, r1 = h % k;
    while (r1 != 0) {
        long long q = r0 / r1;
        r0 = std::exchange(r1, r0 - q * r1);
        t0 = std::exchange(t1, t0 - q * t1);
    }
    long long inv = ((t0 % k) + k) % k; // h inv == 1 (mod k)
    long long s = (k - inv) % k;        // s h == -1 (mod k)
    long long r = (s * h + 1) / k;
    return {r, s};
}

} // namespace

FareyPartition build_partition(long N) {
    if (N < 1) throw std::invalid_argument("build_partition: N must be >= 1");
    // ascending Farey sequence of order N via the next-term recurrence
    std::vector<std::pair<long long, long long>> f; // (h, k), from 0/1 to 1/1
    f.emplace_back(0, 1);
    f.emplace_back(1, N);
    while (f.back() != std::make_pair(1LL, 1LL)) {
        auto [a, b] = f[f.size() - 2];
        auto [c, d] = f.back();
        long long t = (N + b) / d;
        f.emplace_back(t * c - a, t * d - b);
    }

    FareyPartition p;
    p.N = N;
    // mediant endpoints; the 0/1 fragment shifts up by 1 and lands on 1/1, so
    // the entries run over 1 <= h <= k <= N and cover I_N exactly
    for (size_t i = 1; i < f.size(); ++i) {
        auto [h, k] = f[i];
        Frac lo = Frac::of(f[i - 1].first + h, f[i - 1].second + k);
        Frac hi = (i + 1 < f.size())
                      ? Frac::of(f[i + 1].first + h, f[i + 1].second + k)
                      : Frac::of(N + 2, N + 1);
        auto [r, s] = unimodular_rs(h, k);
        p.entries.push_back(FareyInterval{h, k, lo, hi, r, s});
    }
    return p;
}

bool partition_covers_exactly(const FareyPartition& p) {
    Frac lo = Frac::of(1, p.N + 1);
    Frac hi = Frac::of(p.N + 2, p.N + 1);
    if (!(p.entries.front().rho1 == lo)) return false;
    if (!(p.entries.back().rho2 == hi)) return false;
    for (size_t i = 0; i < p.entries.size(); ++i) {
        const FareyInterval& e = p.entries[i];
        if (!(e.rho1 < e.rho2)) return false;
        Frac center = Frac::of(e.h, e.k);
        if (!(e.rho1 <= center) || !(center < e.rho2)) return false;
        if (i + 1 < p.entries.size() && !(e.rho2 == p.entries[i + 1].rho1)) return false;
        if (e.r * e.k - e.s * e.h != 1) return false;
        if (e.s < 0 || e.s >= e.k) return false;
    }
    return true;
}

bool endpoint_inequalities_hold(const FareyPartition& p) {
    long long N = p.N;
    for (const FareyInterval& e : p.entries) {
        Frac center = Frac::of(e.h, e.k);
        for (const Frac& rho : {e.rho1, e.rho2}) {
            Frac d = frac_abs(frac_sub(rho, center));
            // 1/(2kN) <= d  <=>  d.den <= 2 k N d.num
            if (static_cast<__int128>(d.den) > static_cast<__int128>(2 * e.k * N) * d.num)
                return false;
            // d <= 1/(k(N+1))  <=>  d.num k (N+1) <= d.den
            if (static_cast<__int128>(d.num) * e.k * (N + 1) > d.den) return false;
        }
    }
    return true;
}

FareyPartition partition_for(long l, double t) {
    long N = static_cast<long>(std::floor(std::sqrt(static_cast<double>(l) / t)));
    return build_partition(N);
}

std::vector<PointClassification> classify_points(long l, double t, const FareyPartition& p) {
    if (l <= 5) throw std::invalid_argument("classify_points: requires l > 5");
    if (!(t >= 1.0 && t < 1.254))
        throw std::invalid_argument("classify_points: t must lie in [1, 1.254)");
    if (p.N != static_cast<long>(std::floor(std::sqrt(static_cast<double>(l) / t))))
        throw std::invalid_argument(
            "classify_points: partition order does not match floor(sqrt(l/t))");

    // the l integers b with b/l in I_N
    long long b0 = (l + p.N) / (p.N + 1); // ceil(l/(N+1)); l/(N+1) is never integral
    std::vector<std::vector<long long>> members(p.entries.size());
    size_t idx = 0;
    for (long long b = b0; b < b0 + l; ++b) {
        Frac x = Frac::of(b, l);
        while (idx < p.entries.size() && !(x < p.entries[idx].rho2)) ++idx;
        if (idx >= p.entries.size() || x < p.entries[idx].rho1)
            throw std::runtime_error("classify_points: lattice point escaped the partition");
        members[idx].push_back(b);
    }

    std::vector<PointClassification> out;
    out.reserve(static_cast<size_t>(l));
    Frac half_l = Frac::of(1, 2 * l);
    double sqrt_lt = std::sqrt(static_cast<double>(l) / t);
    for (size_t i = 0; i < p.entries.size(); ++i) {
        const FareyInterval& e = p.entries[i];
        Frac center = Frac::of(e.h, e.k);
        for (size_t m = 0; m < members[i].size(); ++m) {
            long long b = members[i][m];
            Frac x = Frac::of(b, l);
            PointClassification pc;
            pc.b = b;
            pc.interval = i;
            Frac dist = frac_abs(frac_sub(x, center));
            pc.alpha = static_cast<double>(e.k) * sqrt_lt * dist.to_double();
            pc.beta = static_cast<double>(e.k) / sqrt_lt;
            bool exterior = (m == 0 || m + 1 == members[i].size());
            if (!exterior) {
                pc.kind = PointKind::Interior;
            } else {
                // good iff at least 1/(2l) from both endpoints (exact)
                Frac d1 = frac_sub(x, e.rho1);
                Frac d2 = frac_sub(e.rho2, x);
                bool good = (half_l <= d1) && (half_l <= d2);
                pc.kind = good ? PointKind::GoodExterior : PointKind::BadExterior;
            }
            out.push_back(pc);
        }
    }
    return out;
}

bool bad_exterior_adjacency_ok(long l, double t) {
    FareyPartition p = partition_for(l, t);
    std::vector<PointClassification> cls = classify_points(l, t, p);
    std::vector<bool> bad_left(p.entries.size(), false), bad_right(p.entries.size(), false);
    for (const PointClassification& pc : cls) {
        if (pc.kind != PointKind::BadExterior) continue;
        const FareyInterval& e = p.entries[pc.interval];
        Frac x = Frac::of(pc.b, l);
        Frac center = Frac::of(e.h, e.k);
        if (x < center) bad_left[pc.interval] = true;
        else bad_right[pc.interval] = true;
    }
    for (size_t i = 0; i + 1 < p.entries.size(); ++i)
        if (bad_right[i] && bad_left[i + 1]) return false;
    return true;
}

std::pair<double, double> empirical_S(long l, double t) {
    if (l < 2 || l > 200) throw std::invalid_argument("empirical_S: l out of supported range");
    if (!(t >= 1.0 && t < 1.254)) throw std::invalid_argument("empirical_S: t out of range");
    double lo = 0, hi = 0;
    for (long b = 0; b < l; ++b) {
        Real re(256), im(256);
        mpfr_set_si(re.get(), b, MPFR_RNDN);
        mpfr_div_si(re.get(), re.get(), l, MPFR_RNDN);
        mpfr_set_d(im.get(), t, MPFR_RNDN);
        mpfr_div_si(im.get(), im.get(), l, MPFR_RNDN);
        JValue v = eval_j_rel(ComplexPoint(re, im), 1e-12);
        lo += v.lognorm_lower();
        hi += v.lognorm_upper();
    }
    return {lo, hi};
}

namespace {

std::vector<long> totients_to(long n) {
    std::vector<long> phi(static_cast<size_t>(n + 1));
    for (long i = 0; i <= n; ++i) phi[static_cast<size_t>(i)] = i;
    for (long i = 2; i <= n; ++i)
        if (phi[static_cast<size_t>(i)] == i) // i prime
            for (long k = i; k <= n; k += i)
                phi[static_cast<size_t>(k)] -= phi[static_cast<size_t>(k)] / i;
    return phi;
}

constexpr long double PI_L = 3.14159265358979323846264338327950288L;

} // namespace

bool kn_bound_check(long N) {
    if (N < 2) throw std::invalid_argument("kn_bound_check: N must be >= 2");
    std::vector<long> phi = totients_to(N);
    long long kn = 0;
    for (long k = 1; k <= N; ++k) kn += phi[static_cast<size_t>(k)];
    long double bound =
        3.0L * N * N / (PI_L * PI_L) + 0.5L * N * logl(static_cast<long double>(N));
    return static_cast<long double>(kn) <= bound;
}

long kn_bound_smallest_valid(long nmax) {
    long first = -1;
    for (long N = 2; N <= nmax; ++N) {
        if (kn_bound_check(N)) {
            if (first < 0) first = N;
        } else {
            first = -1;
        }
    }
    return first;
}

std::string dump_partition(const FareyPartition& p) {
    std::ostringstream os;
    for (const FareyInterval& e : p.entries)
        os << e.h << "/" << e.k << " " << e.rho1.str() << " " << e.rho2.str() << " " << e.k
           << "\n";
    return os.str();
}

} // namespace phibound
