#include "phibound/bounds.hpp"

#include <cmath>
#include <numeric>
#include <stdexcept>

namespace phibound {

namespace {
constexpr double PI = 3.14159265358979323846;
constexpr double E2PI = 535.49165552476473650;   // e^{2 pi}
} // namespace

double BoundBreakdown::recombine() const {
    double ld = static_cast<double>(l);
    return leading + linear_coeff * ld + sqrt_log_coeff * std::sqrt(ld) * std::log(ld) +
           sqrt_coeff * std::sqrt(ld) + constant;
}

double lognorm(std::complex<double> y) {
    double a = std::abs(y);
    return a <= 1.0 ? 0.0 : std::log(a);
}

double c_of_x(double x) {
    if (!(x > 0)) throw std::domain_error("c_of_x: x must be positive");
    double m = std::max(x, 1.0 / x);
    // log(e^{2 pi m} + 1728 - e^{2 pi}) - 2 pi x, written to survive large m
    return 2 * PI * (m - x) + std::log1p((1728.0 - E2PI) * std::exp(-2 * PI * m));
}

double f_alpha_beta(double alpha, double beta) {
    double s = alpha * alpha + beta * beta;
    if (s > 2.0 + 1e-12 || s <= 0.0)
        throw std::domain_error("f_alpha_beta: alpha^2 + beta^2 must lie in (0, 2]");
    return c_of_x(1.0 / s);
}

EpsilonContext EpsilonContext::make(double t) {
    if (!(t >= 1.0 && t < 1.254))
        throw std::domain_error("EpsilonContext: t must lie in [1, 1.254)");
    EpsilonContext e;
    e.t = t;
    e.c1 = f_alpha_beta(1.0, 1.0);
    e.c2 = f_alpha_beta(1.0, C3);
    e.c3 = f_alpha_beta(1.0 - C2 / (2 * t), C2);
    e.c4 = f_alpha_beta(1.0 - C1 / (2 * t), C1);
    e.c5 = f_alpha_beta(1.0 - 1.0 / t, 1.0);
    e.c6 = f_alpha_beta(1.0 - C3 / t, C3);
    e.c7 = f_alpha_beta(1.0 - C2 / t, C2);
    return e;
}

double EpsilonContext::M(double l) const {
    return 3.0 * l / (2 * PI * PI * t) + 0.125 * std::sqrt(l / t) * std::log(l / t);
}

double epsilon_prime(double l, double t) {
    if (!(l > 5)) throw std::domain_error("epsilon_prime: requires l > 5");
    EpsilonContext e = EpsilonContext::make(t);
    double m = e.M(l);
    return e.c1 * (m + 4) + e.c2 * m + e.c3 * m + e.c4 * (m - 4) + 0.5 * e.c5 * (m + 2) +
           e.c6 * m + e.c7 * (l - 5.5 * m - 2);
}

double lemma5_bound(double l, double t) {
    if (!(l > 5)) throw std::domain_error("lemma5_bound: requires l > 5");
    if (!(t >= 1.0 && t < 1.254)) throw std::domain_error("lemma5_bound: t out of range");
    return (3.066 + 1.0 - t) * l + 2.485 * std::sqrt(l) * std::log(l) + 36.963;
}

namespace {

void factor(long long n, std::vector<std::pair<long long, int>>& out) {
    out.clear();
    for (long long p = 2; p * p <= n; ++p)
        if (n % p == 0) {
            int e = 0;
            while (n % p == 0) {
                n /= p;
                ++e;
            }
            out.emplace_back(p, e);
        }
    if (n > 1) out.emplace_back(n, 1);
}

long long euler_phi(long long n) {
    std::vector<std::pair<long long, int>> f;
    factor(n, f);
    long long r = n;
    for (auto [p, e] : f) r -= r / p;
    return r;
}

int moebius(long long n) {
    std::vector<std::pair<long long, int>> f;
    factor(n, f);
    for (auto [p, e] : f)
        if (e > 1) return 0;
    return f.size() % 2 == 0 ? 1 : -1;
}

} // namespace

long long ramanujan_ck(long long k, long long n) {
    if (k < 1) throw std::domain_error("ramanujan_ck: k must be >= 1");
    if (n < 0) n = -n; // c_k(-n) = c_k(n)
    long long g = n == 0 ? k : std::gcd(k, n);
    long long kg = k / g;
    int mu = moebius(kg);
    if (mu == 0) return 0;
    return mu * (euler_phi(k) / euler_phi(kg));
}

BoundBreakdown lemma6_bound(double l, double t) {
    if (!(t >= 1.0)) throw std::domain_error("lemma6_bound: t must be >= 1");
    if (std::floor(std::sqrt(l / t)) < 2)
        throw std::domain_error("lemma6_bound: requires floor(sqrt(l/t)) >= 2");
    BoundBreakdown b;
    b.l = l;
    b.t = t;
    b.kind = BoundKind::Lemma6;
    b.leading = 6.0 * l * std::log(l);
    b.linear_coeff = 13.889 - 6.0 * std::log(t);
    b.sqrt_log_coeff = 3.290;
    b.sqrt_coeff = 6.580;
    b.total = b.recombine();
    return b;
}

double lemma6_tail_per_l(double t) {
    if (!(t >= 1.0)) throw std::domain_error("lemma6_tail_per_l: t must be >= 1");
    double integral_tail = std::exp(-4 * PI) * (1 + 4 * PI) / (4 * PI * PI);
    return 2 * PI * PI * std::exp(-2 * PI * t) + 3 * PI * PI * std::exp(-4 * PI * t) +
           2 * PI * PI * integral_tail;
}

double poisson_lhs(double t, double theta) {
    if (!(t > 0)) throw std::domain_error("poisson_lhs: t must be positive");
    const long C = 20000;
    double s = 0;
    for (long c = -C; c <= C; ++c) {
        double d = static_cast<double>(c) - theta;
        s += 1.0 / (t * t + d * d);
    }
    // midpoint-rule tail corrections on both sides; the rule's own error is
    // O(C^{-3}), far below the 1e-12 we need
    double hi = (PI / 2 - std::atan((C + 0.5 - theta) / t)) / t;
    double lo = (PI / 2 - std::atan((C + 0.5 + theta) / t)) / t;
    return s + hi + lo;
}

double poisson_identity_residual(double t, double theta, long trunc) {
    if (trunc < 1) throw std::domain_error("poisson_identity_residual: trunc must be >= 1");
    double lhs = poisson_lhs(t, theta);
    double rhs = 1.0;
    for (long nu = 1; nu <= trunc; ++nu)
        rhs += 2.0 * std::exp(-2 * PI * nu * t) * std::cos(2 * PI * nu * theta);
    rhs *= PI / t;
    double q = std::exp(-2 * PI * t);
    double rhs_tail = (PI / t) * 2.0 * std::pow(q, static_cast<double>(trunc + 1)) / (1 - q);
    return std::abs(lhs - rhs) + rhs_tail;
}

double s_d(double l, double t, long d) {
    if (d < 1) throw std::domain_error("s_d: d must be >= 1");
    double dd = static_cast<double>(d);
    return 6.0 / (PI * PI) * std::log((dd + 1) / dd) -
           (std::log(l * t) - 2 * ((dd + 1) * std::log(dd + 1) - dd * std::log(dd)) + 2) /
               (6 * std::sqrt(l * t));
}

double delta_eps1(double l, double t) {
    return -((t + 2) * std::log(l) + 2 * t + 4 - std::log(16.0) + (2 - t) * std::log(t)) /
           (6 * std::sqrt(l * t));
}

double delta_eps2(double l, double t) {
    return -(std::log(l * t) - 2 * (3 * std::log(3.0) - 2 * std::log(2.0)) + 2) /
           (6 * std::sqrt(l * t));
}

namespace {

// partial sums of the tanh/coth expansions removed from the full series.
// "pi tanh pi" / "pi coth pi" in the d > 2 display is read with the argument
// pi t, consistently with delta_1 and delta_2; at t = 1 the readings agree.
double bracket_odd(double t, long d) {
    double s = 0;
    for (long n = -(d - 1) / 2; n <= (d + 1) / 2; ++n) {
        double u = static_cast<double>(n) - 0.5;
        s += t / (t * t + u * u);
    }
    return PI * std::tanh(PI * t) - s;
}

double bracket_even(double t, long d) {
    double s = 0;
    for (long n = -d / 2; n <= d / 2; ++n) s += t / (t * t + static_cast<double>(n) * n);
    return PI / std::tanh(PI * t) - s;
}

} // namespace

double delta_d(double l, double t, long d) {
    if (d < 1) throw std::domain_error("delta_d: d must be >= 1");
    if (!(l >= (d + 1.0) * (d + 1.0)))
        throw std::domain_error("delta_d: requires l >= (d+1)^2");
    if (d == 1) {
        double br = PI * std::tanh(PI * t) - 2 * t / (t * t + 0.25);
        return 2 * PI * l * br * (6.0 / (PI * PI) * std::log(2.0 / t) + delta_eps1(l, t));
    }
    if (d == 2) {
        double br = PI / std::tanh(PI * t) - 1.0 / t - 2 * t / (t * t + 1);
        return 2 * PI * l * br * (6.0 / (PI * PI) * std::log(1.5) + delta_eps2(l, t));
    }
    double br = (d % 2 == 1) ? bracket_odd(t, d) : bracket_even(t, d);
    return 2 * PI * l * s_d(l, t, d) * br;
}

double delta_total(double l, double t) {
    if (!(l >= 3600)) throw std::domain_error("delta_total: requires l >= 3600");
    double s = 0;
    for (long d = 1; d <= 59; ++d) s += delta_d(l, t, d);
    return s;
}

BoundBreakdown lemma8_bound(double l, double t) {
    if (!(l >= 3600)) throw std::domain_error("lemma8_bound: requires l >= 3600");
    if (!(t >= 1.0)) throw std::domain_error("lemma8_bound: t must be >= 1");
    BoundBreakdown b;
    b.l = l;
    b.t = t;
    b.kind = BoundKind::Lemma8;
    b.leading = 6.0 * l * std::log(l);
    b.linear_coeff = 3.803 - 6.0 * std::log(t);
    b.sqrt_log_coeff = 17.693;
    b.sqrt_coeff = -58.939;
    b.total = b.recombine();
    return b;
}

BoundBreakdown b1(double l) {
    BoundBreakdown b;
    b.l = l;
    b.kind = BoundKind::B1;
    b.leading = 6.0 * l * std::log(l);
    b.linear_coeff = 26.016;
    b.sqrt_log_coeff = 5.775;
    b.sqrt_coeff = 6.580;
    b.constant = 39.046;
    b.total = b.recombine();
    return b;
}

BoundBreakdown b2(double l) {
    if (!(l >= 3600)) throw std::domain_error("b2: requires l >= 3600");
    BoundBreakdown b;
    b.l = l;
    b.kind = BoundKind::B2;
    b.leading = 6.0 * l * std::log(l);
    b.linear_coeff = 15.929;
    b.sqrt_log_coeff = 20.178;
    b.sqrt_coeff = -58.939;
    b.constant = 39.046;
    b.total = b.recombine();
    return b;
}

double theorem1_bound(double l) {
    return 6.0 * l * std::log(l) + 16.0 * l + 14.0 * std::sqrt(l) * std::log(l);
}

double corollary1_bound(double l) { return 6.0 * l * std::log(l) + 18.0 * l; }

double interp_step(double B, double l) { return B + 2.083 * (l + 1); }

double assembled_bound_at_t(double l, double t) {
    return 6.0 * l * std::log(l) + (18.649 + 2 * PI * t - t - 6 * std::log(t)) * l +
           5.775 * std::sqrt(l) * std::log(l) + 6.580 * std::sqrt(l) + 36.963;
}

double hly_bound(long l, const ComplexPoint& z) {
    if (l < 2 || l > 200) throw std::domain_error("hly_bound: l out of supported range");
    mpfr_prec_t p = 256;
    Real lre(p), lim(p);
    mpfr_mul_si(lre.get(), z.re.get(), l, MPFR_RNDN);
    mpfr_mul_si(lim.get(), z.im.get(), l, MPFR_RNDN);
    double total = eval_j_rel(ComplexPoint(lre, lim), 1e-12).lognorm_upper();
    for (long b = 0; b < l; ++b) {
        Real re(p), im(p);
        mpfr_add_si(re.get(), z.re.get(), b, MPFR_RNDN);
        mpfr_div_si(re.get(), re.get(), l, MPFR_RNDN);
        mpfr_div_si(im.get(), z.im.get(), l, MPFR_RNDN);
        total += eval_j_rel(ComplexPoint(re, im), 1e-12).lognorm_upper();
    }
    return total + std::log(2.0) * static_cast<double>(l);
}

double hly_bound_it(long l, double t) {
    return hly_bound(l, ComplexPoint::of(0.0, t, 256));
}

} // namespace phibound
