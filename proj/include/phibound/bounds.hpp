#ifndef PHIBOUND_BOUNDS_HPP
#define PHIBOUND_BOUNDS_HPP

#include <complex>
#include <string>

#include "phibound/jfunction.hpp"

namespace phibound {

enum class BoundKind { Lemma5, Lemma6, Lemma8, B1, B2, Theorem1, Corollary1 };

/// One evaluated height bound, split into the terms
///   leading + linear_coeff*l + sqrt_log_coeff*sqrt(l)*log l + sqrt_coeff*sqrt(l) + constant
/// where leading is 6 l log l when the bound carries that term.
struct BoundBreakdown {
    long double l = 0;
    double t = 1.0;
    double leading = 0;
    double linear_coeff = 0;
    double sqrt_log_coeff = 0;
    double sqrt_coeff = 0;
    double constant = 0;
    double total = 0;
    BoundKind kind = BoundKind::Theorem1;

    double recombine() const;
};

/// ||y|| = log max(1, |y|)
double lognorm(std::complex<double> y);

/// c(x) = log(e^{2 pi max(x,1/x)} + 1728 - e^{2 pi}) - 2 pi x; < 9.429 on x >= 1/2
double c_of_x(double x);

/// f(alpha, beta) = c(1/(alpha^2+beta^2)); requires alpha^2 + beta^2 <= 2
double f_alpha_beta(double alpha, double beta);

/// quartile constants and the c_1..c_7 / M machinery of the epsilon estimate
struct EpsilonContext {
    static constexpr double C1 = 0.539, C2 = 0.742, C3 = 0.917;
    double t = 1.0;
    double c1, c2, c3, c4, c5, c6, c7;

    static EpsilonContext make(double t);
    double M(double l) const; // 3l/(2 pi^2 t) + (1/8) sqrt(l/t) log(l/t)
};

/// epsilon'(l,t) = c1(M+4) + c2 M + c3 M + c4(M-4) + 0.5 c5 (M+2) + c6 M
///                 + c7 (l - 5.5M - 2)
double epsilon_prime(double l, double t);

/// closed form: (3.066 + 1 - t) l + 2.485 sqrt(l) log l + 36.963
double lemma5_bound(double l, double t);

/// Ramanujan sum c_k(n) via the Hoelder identity mu(k/(k,n)) phi(k)/phi(k/(k,n))
long long ramanujan_ck(long long k, long long n);

/// 6 l log l + (13.889 - 6 log t) l + 3.290 sqrt(l) log l + 6.580 sqrt(l)
BoundBreakdown lemma6_bound(double l, double t);

/// per-l bound on the nonzero-frequency modes: 2 pi^2 e^{-2 pi t}
/// + 3 pi^2 e^{-4 pi t} + 2 pi^2 integral tail; < 0.037 at t = 1
double lemma6_tail_per_l(double t);

/// |LHS - RHS| of sum (t^2+(c-theta)^2)^{-1} = (pi/t) sum e^{-2 pi |nu| t} e^{2 pi i nu theta},
/// RHS truncated at `trunc`, LHS summed far enough (with analytic tail
/// corrections) that its own error is negligible against 1e-12.
double poisson_identity_residual(double t, double theta, long trunc);

/// high-accuracy LHS of the identity (used against pi coth / pi tanh)
double poisson_lhs(double t, double theta);

// ghk-tail machinery
double s_d(double l, double t, long d);
double delta_eps1(double l, double t);
double delta_eps2(double l, double t);
double delta_d(double l, double t, long d);
/// delta_1 + ... + delta_59; requires l >= 3600
double delta_total(double l, double t);

/// 6 l log l + (3.803 - 6 log t) l + 17.693 sqrt(l) log l - 58.939 sqrt(l); l >= 3600
BoundBreakdown lemma8_bound(double l, double t);

BoundBreakdown b1(double l);
BoundBreakdown b2(double l); // requires l >= 3600
double theorem1_bound(double l);
double corollary1_bound(double l);
/// interpolation step: B + 2.083 (l + 1)
double interp_step(double B, double l);

/// bound before interpolation, as a function of t:
/// 6 l log l + (18.649 + 2 pi t - t - 6 log t) l + 5.775 sqrt(l) log l
/// + 6.580 sqrt(l) + 36.963
double assembled_bound_at_t(double l, double t);

/// ||j(lz)|| + sum_b ||j((z+b)/l)|| + l log 2, from certified evaluations
/// (upper interval ends); l <= 200
double hly_bound(long l, const ComplexPoint& z);
double hly_bound_it(long l, double t);

} // namespace phibound

#endif
