#include "phibound/jfunction.hpp"

#include <cmath>
#include <cstdint>
#include <vector>

#include "phibound/qexp.hpp"

namespace phibound {

namespace {

constexpr long double PI_L = 3.14159265358979323846264338327950288L;

// generous per-operation rounding bound at precision p
long double eps_of(mpfr_prec_t p) { return ldexpl(1.0L, 2 - static_cast<int>(p)); }

// upper bound on |k| that survives huge integers
long double mpz_abs_ub(const mpz_class& k) {
    if (k == 0) return 0.0L;
    double d = std::abs(k.get_d());
    if (std::isfinite(d)) return static_cast<long double>(d) * (1.0L + 1e-9L);
    return ldexpl(1.0L, static_cast<int>(mpz_sizeinbase(k.get_mpz_t(), 2)));
}

// complex ball: value (re, im) at some working precision, Euclidean radius
struct CBall {
    Real re, im;
    long double rad;
    mpfr_prec_t p;

    explicit CBall(mpfr_prec_t prec) : re(prec), im(prec), rad(0), p(prec) {}

    long double mag_ub() const { return abs_ub(re.get()) + abs_ub(im.get()) + rad; }
    long double hypot_lb() const {
        long double a = abs_lb(re.get()), b = abs_lb(im.get());
        return sqrtl(a * a + b * b);
    }
};

CBall cb_add(const CBall& a, const CBall& b) {
    CBall r(a.p);
    mpfr_add(r.re.get(), a.re.get(), b.re.get(), MPFR_RNDN);
    mpfr_add(r.im.get(), a.im.get(), b.im.get(), MPFR_RNDN);
    r.rad = a.rad + b.rad + eps_of(a.p) * (abs_ub(r.re.get()) + abs_ub(r.im.get()));
    return r;
}

CBall cb_mul(const CBall& a, const CBall& b) {
    CBall r(a.p);
    mpfr_t t1, t2;
    mpfr_init2(t1, a.p);
    mpfr_init2(t2, a.p);
    mpfr_mul(t1, a.re.get(), b.re.get(), MPFR_RNDN);
    mpfr_mul(t2, a.im.get(), b.im.get(), MPFR_RNDN);
    mpfr_sub(r.re.get(), t1, t2, MPFR_RNDN);
    mpfr_mul(t1, a.re.get(), b.im.get(), MPFR_RNDN);
    mpfr_mul(t2, a.im.get(), b.re.get(), MPFR_RNDN);
    mpfr_add(r.im.get(), t1, t2, MPFR_RNDN);
    mpfr_clear(t1);
    mpfr_clear(t2);
    long double ma = a.mag_ub(), mb = b.mag_ub();
    r.rad = ma * b.rad + mb * a.rad + a.rad * b.rad + 6.0L * eps_of(a.p) * ma * mb;
    return r;
}

CBall cb_mul_mpz(const CBall& a, const mpz_class& k) {
    CBall r(a.p);
    mpfr_mul_z(r.re.get(), a.re.get(), k.get_mpz_t(), MPFR_RNDN);
    mpfr_mul_z(r.im.get(), a.im.get(), k.get_mpz_t(), MPFR_RNDN);
    long double ku = mpz_abs_ub(k);
    r.rad = ku * a.rad + 3.0L * eps_of(a.p) * ku * a.mag_ub();
    return r;
}

CBall cb_recip(const CBall& a) {
    long double clb = a.hypot_lb();
    if (!(clb > 4.0L * a.rad) || clb <= 0.0L)
        throw PrecisionUnreachable("complex reciprocal: ball contains or nearly contains 0");
    CBall r(a.p);
    mpfr_t n, t;
    mpfr_init2(n, a.p);
    mpfr_init2(t, a.p);
    mpfr_sqr(n, a.re.get(), MPFR_RNDN);
    mpfr_sqr(t, a.im.get(), MPFR_RNDN);
    mpfr_add(n, n, t, MPFR_RNDN);
    mpfr_div(r.re.get(), a.re.get(), n, MPFR_RNDN);
    mpfr_div(r.im.get(), a.im.get(), n, MPFR_RNDN);
    mpfr_neg(r.im.get(), r.im.get(), MPFR_RNDN);
    mpfr_clear(n);
    mpfr_clear(t);
    r.rad = a.rad / (clb * (clb - a.rad)) + 8.0L * eps_of(a.p) / clb;
    return r;
}

// q = exp(2 pi i z) for a ball z with small radius
CBall cb_exp_2pi_i(const CBall& z) {
    if (!(z.rad < 0.01L))
        throw PrecisionUnreachable("exp(2 pi i z): input radius too large");
    mpfr_prec_t p = z.p;
    CBall q(p);
    mpfr_t pi2, u, th, ex, c, s;
    mpfr_inits2(p, pi2, u, th, ex, c, s, static_cast<mpfr_ptr>(nullptr));
    mpfr_const_pi(pi2, MPFR_RNDN);
    mpfr_mul_ui(pi2, pi2, 2, MPFR_RNDN);
    mpfr_mul(u, pi2, z.im.get(), MPFR_RNDN);
    mpfr_neg(u, u, MPFR_RNDN);
    mpfr_mul(th, pi2, z.re.get(), MPFR_RNDN);
    mpfr_exp(ex, u, MPFR_RNDN);
    mpfr_sin_cos(s, c, th, MPFR_RNDN);
    mpfr_mul(q.re.get(), ex, c, MPFR_RNDN);
    mpfr_mul(q.im.get(), ex, s, MPFR_RNDN);
    long double qmag = abs_ub(ex) * (1.0L + 1e-9L);
    long double uabs = abs_ub(u), thabs = abs_ub(th);
    // input radius propagates through |dq| <= |q| (e^{2 pi |dz|} - 1)
    long double prop = qmag * 7.0L * z.rad;
    long double round = qmag * eps_of(p) * (8.0L + 2.0L * uabs + 2.0L * thabs);
    q.rad = prop + round;
    mpfr_clears(pi2, u, th, ex, c, s, static_cast<mpfr_ptr>(nullptr));
    return q;
}

// q-expansion coefficients of j (c[k] = coeff of q^{k-1})
std::vector<mpz_class> j_coeffs(long n_terms) {
    IntSeries j = j_cached(n_terms + 1);
    std::vector<mpz_class> out;
    out.reserve(static_cast<size_t>(n_terms + 2));
    for (long e = -1; e <= n_terms; ++e) out.push_back(j.coeff(e));
    return out;
}

// Sum_{n > N} e^{4 pi sqrt n} qub^n  <=  rho^{N+1} / (1 - rho),
// rho = e^{4 pi / sqrt(N+1)} * qub  (valid since sqrt n <= n / sqrt(N+1))
long double series_tail_bound(long double qub, long N) {
    long double rho = expl(4.0L * PI_L / sqrtl(static_cast<long double>(N + 1))) * qub;
    if (!(rho < 0.5L)) return HUGE_VALL;
    return powl(rho, static_cast<long double>(N + 1)) / (1.0L - rho);
}

struct Reduction {
    CBall z;
    Unimodular m;
    explicit Reduction(mpfr_prec_t p) : z(p) {}
};

Reduction reduce_ball(const ComplexPoint& zin, mpfr_prec_t p) {
    Reduction r(p);
    mpfr_set(r.z.re.get(), zin.re.get(), MPFR_RNDN);
    mpfr_set(r.z.im.get(), zin.im.get(), MPFR_RNDN);
    r.z.rad = eps_of(p) * (abs_ub(r.z.re.get()) + abs_ub(r.z.im.get()));

    mpfr_t n2, t;
    mpfr_inits2(p, n2, t, static_cast<mpfr_ptr>(nullptr));

    auto compose_shift = [&](long long n) {
        // T^{-n}: [[1,-n],[0,1]] * M
        __int128 na = static_cast<__int128>(r.m.a) - static_cast<__int128>(n) * r.m.c;
        __int128 nb = static_cast<__int128>(r.m.b) - static_cast<__int128>(n) * r.m.d;
        if (na > INT64_MAX / 2 || na < INT64_MIN / 2 || nb > INT64_MAX / 2 || nb < INT64_MIN / 2)
            throw std::runtime_error("reduce: matrix entry overflow");
        r.m.a = static_cast<long long>(na);
        r.m.b = static_cast<long long>(nb);
    };

    bool done = false;
    for (int iter = 0; iter < 100000 && !done; ++iter) {
        // translate Re into [-1/2, 1/2]
        mpfr_round(t, r.z.re.get());
        if (!mpfr_fits_slong_p(t, MPFR_RNDN))
            throw std::runtime_error("reduce: translation does not fit a machine word");
        long long n = mpfr_get_si(t, MPFR_RNDN);
        if (n != 0) {
            mpfr_sub_si(r.z.re.get(), r.z.re.get(), n, MPFR_RNDN);
            r.z.rad += eps_of(p) * abs_ub(r.z.re.get());
            compose_shift(n);
        }
        // |z|^2 vs 1
        mpfr_sqr(n2, r.z.re.get(), MPFR_RNDN);
        mpfr_sqr(t, r.z.im.get(), MPFR_RNDN);
        mpfr_add(n2, n2, t, MPFR_RNDN);
        long double m2_ub = abs_ub(n2) + 4.0L * r.z.rad * r.z.mag_ub();
        if (!(m2_ub < 1.0L)) {
            done = true; // inside (or within certified slack of) the domain
            break;
        }
        // z -> -1/z, matrix S = [[0,-1],[1,0]]
        CBall inv = cb_recip(r.z);
        mpfr_neg(inv.re.get(), inv.re.get(), MPFR_RNDN);
        mpfr_neg(inv.im.get(), inv.im.get(), MPFR_RNDN);
        r.z = inv;
        long long a = r.m.a, b = r.m.b;
        r.m.a = -r.m.c;
        r.m.b = -r.m.d;
        r.m.c = a;
        r.m.d = b;
        if (mpfr_sgn(r.z.im.get()) <= 0)
            throw std::runtime_error("reduce: left the upper half-plane (precision loss)");
    }
    mpfr_clears(n2, t, static_cast<mpfr_ptr>(nullptr));
    if (!done) throw std::runtime_error("reduce: did not terminate");
    if (r.m.det() != 1) throw std::runtime_error("reduce: matrix determinant != 1");
    return r;
}

// one evaluation pass at fixed precision; returns a certified value
JValue eval_pass(const ComplexPoint& z, mpfr_prec_t p) {
    Reduction red = reduce_ball(z, p);
    CBall q = cb_exp_2pi_i(red.z);
    long double qub = q.mag_ub();
    if (!(qub < 0.5L)) throw PrecisionUnreachable("eval_j: |q| not small after reduction");

    // series length from the tail bound at the smallest target this precision
    // could certify anyway
    long N = 8;
    long double floor_target = ldexpl(1.0L, -static_cast<int>(p));
    while (N < 4000 && series_tail_bound(qub, N) > floor_target) N += 8;

    const std::vector<mpz_class> c = j_coeffs(N);
    CBall sum = cb_recip(q); // c_{-1} = 1
    CBall konst(p);
    mpfr_set_z(konst.re.get(), c[1].get_mpz_t(), MPFR_RNDN); // 744
    sum = cb_add(sum, konst);
    CBall pw(p);
    mpfr_set_ui(pw.re.get(), 1, MPFR_RNDN);
    for (long n = 1; n <= N; ++n) {
        pw = cb_mul(pw, q);
        sum = cb_add(sum, cb_mul_mpz(pw, c[static_cast<size_t>(n + 1)]));
    }
    return JValue{sum.re, sum.im, sum.rad + series_tail_bound(qub, N)};
}

JValue eval_core(const ComplexPoint& z, double abs_target, double rel_target) {
    if (mpfr_sgn(z.im.get()) <= 0) throw std::domain_error("eval_j: Im z must be positive");
    if (abs_target <= 0 && rel_target <= 0)
        throw std::domain_error("eval_j: target precision must be positive");
    const mpfr_prec_t pmax = 1 << 16;
    for (mpfr_prec_t p = 128; p <= pmax; p *= 2) {
        JValue v{Real(p), Real(p), 0};
        try {
            v = eval_pass(z, p);
        } catch (const PrecisionUnreachable&) {
            continue;
        }
        if (abs_target > 0 && v.radius <= static_cast<long double>(abs_target)) return v;
        if (rel_target > 0 && v.radius <= static_cast<long double>(rel_target) * v.abs_lower())
            return v;
    }
    throw PrecisionUnreachable("eval_j: requested radius underflows working precision");
}

} // namespace

long double JValue::abs_lower() const {
    long double a = abs_lb(re.get()), b = abs_lb(im.get());
    long double h = sqrtl(a * a + b * b) - radius;
    return h > 0 ? h : 0;
}

long double JValue::abs_upper() const {
    long double a = abs_ub(re.get()), b = abs_ub(im.get());
    return sqrtl(a * a + b * b) * (1.0L + 1e-15L) + radius;
}

double JValue::lognorm_lower() const {
    long double v = abs_lower();
    return v <= 1.0L ? 0.0 : static_cast<double>(logl(v));
}

double JValue::lognorm_upper() const {
    long double v = abs_upper();
    return v <= 1.0L ? 0.0 : static_cast<double>(logl(v) * (1.0L + 1e-15L) + 1e-15L);
}

std::pair<ComplexPoint, Unimodular> reduce_to_fundamental_domain(const ComplexPoint& z) {
    mpfr_prec_t p = std::max<mpfr_prec_t>(192, z.re.prec() + 64);
    Reduction r = reduce_ball(z, p);
    return {ComplexPoint(r.z.re, r.z.im), r.m};
}

JValue eval_j(const ComplexPoint& z, double target_radius) {
    return eval_core(z, target_radius, 0);
}

JValue eval_j_rel(const ComplexPoint& z, double rel_target) {
    return eval_core(z, 0, rel_target);
}

JValue eval_j_it(double t, double target_radius, mpfr_prec_t point_prec) {
    return eval_j(ComplexPoint::of(0.0, t, point_prec), target_radius);
}

double solve_t_for_y(double y) {
    if (!(y >= 1728.0 && y <= 3456.0))
        throw std::domain_error("solve_t_for_y: y must lie in [1728, 3456]");
    double lo = 1.0, hi = 1.254;
    for (int i = 0; i < 60 && hi - lo > 1e-14; ++i) {
        double mid = 0.5 * (lo + hi);
        JValue v = eval_j_it(mid, 1e-11);
        if (v.re.to_double() < y) lo = mid;
        else hi = mid;
    }
    double t = 0.5 * (lo + hi);
    JValue check = eval_j_it(t, 1e-11);
    if (std::abs(check.re.to_double() - y) > 1e-9)
        throw std::runtime_error("solve_t_for_y: bisection failed to converge");
    return t;
}

} // namespace phibound
