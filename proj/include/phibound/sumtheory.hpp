#ifndef PHIBOUND_SUMTHEORY_HPP
#define PHIBOUND_SUMTHEORY_HPP

#include <complex>
#include <gmpxx.h>
#include <string>
#include <vector>

#include "phibound/sieve.hpp"

namespace phibound {

/// Result of one inequality sweep.
struct SweepResult {
    std::string name;
    double x_lo = 0, x_hi = 0;
    bool pass = true;
    long checked = 0;
    std::vector<double> violations; // offending x (capped at 16 entries)
    double worst_x = 0;             // where the margin was smallest
    double worst_margin = 0;        // min over points of bound - |deviation|
    double err_budget = 0;          // certified numeric slack of the sweep

    void record(double x, double margin);
};

/// numeric constant with a certified error bar
struct Constant {
    double value = 0;
    double err = 0;
};

/// gamma' = lim (sum |mu(n)|/n - (6/pi^2) log x), from the sieve tables with
/// the integration-by-parts tail bound 2/(25 sqrt(x_max)); needs x_max >= 1e5
Constant gamma_prime(const SieveTables& t);

/// C = sum mu(n) log n / n^2, streamed to x_max; tail (3 log x + 1)/(900 x)
Constant mobius_C(long x_max = 50000000);

/// |M(x)| <= x/900 and |R(x)| <= sqrt(x)/25 on [1e5, 2160535] (Corollary 10)
std::vector<SweepResult> verify_corollary10(const SieveTables& t);

/// |M(x)| <= x/4345 on [2160535, x_max] and |R(x)| <= 0.02767 sqrt x on
/// [438653, x_max]
std::vector<SweepResult> verify_theorem9(const SieveTables& t);

/// sum 1/n = log x + gamma + eps(1/(2x) + 1/(12x^2)) and
/// sum |mu(n)|/n = (6/pi^2) log x + gamma' + eps(3/(25 sqrt x)), for x in
/// [1, xmax]; checks integers and left limits
std::vector<SweepResult> verify_harmonic(const SieveTables& t, long xmax = 100000);

/// sum mu/n^2 = 6/pi^2 + eps(1/(300x)) and sum mu log n/n^2 = C +
/// eps((3 log x + 1)/(900x)), at x = 1e5 and a log-spaced sample up to
/// sample_max (lemma range starts at 1e5); C comes from the same stream
/// continued to c_xmax
std::vector<SweepResult> verify_mobius_sums(long sample_max = 10000000,
                                            long c_xmax = 50000000);

/// sum phi(n)/n^2 = (6 log x)/pi^2 + 6 gamma/pi^2 - C + eps((log x+1)/(3x)),
/// x in [1, xmax]
std::vector<SweepResult> verify_totient_over_square(const SieveTables& t, const Constant& C,
                                                    long xmax = 100000);

/// sum phi(n) = 3x^2/pi^2 + eps(x log x / 2) swept over [3/2, xmax].
/// The inequality as stated fails in two small windows near x = 3/2 and
/// x = 2; the sweep reports them as violations rather than guessing an
/// intended range.
std::vector<SweepResult> verify_totient_sum(const SieveTables& t, long xmax = 100000);

/// K(C1 x) >= K(x)/4 - 2, K(C2 x) >= K(x)/2 - 2, K(C3 x) >= 3K(x)/4 - 2 with
/// C1 = 0.539, C2 = 0.742, C3 = 0.917: exhaustively (exact rational critical
/// points) for 1 <= x < 300, plus sampled direct and analytic checks above
std::vector<SweepResult> verify_quartiles(const SieveTables& t, long exhaustive_to = 300);

/// |c| <= 2^{n-1} prod max(1, |w_k|) for monic polynomials with these roots
double coeff_product_bound(const std::vector<std::complex<double>>& roots);

/// log|c_k| <= log M + ((log m + 1)/m) n, m = min |root| > 1, M = prod |root|
double height_from_roots_bound(long n, double m, double M);
double height_from_roots_bound_of(const std::vector<std::complex<double>>& roots);

/// h(P) <= B + ((log L + 1)/L + 3 log 2) n for bivariate P sampled on [L, 2L]
double interp_height_bound(double B, double L, long n);

/// exact partial sums kept as rationals (used for the <= 1e4 cross-checks)
mpq_class harmonic_exact(long n);
mpq_class abs_mu_over_n_exact(const SieveTables& t, long n);

} // namespace phibound

#endif
