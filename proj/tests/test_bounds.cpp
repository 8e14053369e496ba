#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <numeric>
#include <cmath>
#include <gmpxx.h>

#include "phibound/bounds.hpp"
#include "phibound/modpoly.hpp"

using namespace phibound;

static const double PI = 3.14159265358979323846;

TEST_CASE("lognorm") {
    CHECK(lognorm({0.5, 0.0}) == 0.0);
    CHECK(lognorm({1728.0, 0.0}) == doctest::Approx(std::log(1728.0)));
    CHECK(lognorm({-std::exp(1.0), 0.0}) == doctest::Approx(1.0));
}

TEST_CASE("c(x) values and the 9.429 cap") {
    CHECK(c_of_x(1.0) == doctest::Approx(std::log(1728.0) - 2 * PI).epsilon(1e-12));
    CHECK(c_of_x(1.0) < 1.172);
    CHECK(c_of_x(0.5) == doctest::Approx(9.42893).epsilon(1e-5));
    CHECK(c_of_x(0.5) < 9.429);
    CHECK(c_of_x(2.0) == doctest::Approx(0.0041501).epsilon(1e-4));
    for (double x = 0.5; x <= 50.0; x += 0.01) CHECK(c_of_x(x) < 9.429);
    CHECK_THROWS_AS(c_of_x(0.0), std::domain_error);
}

TEST_CASE("f(alpha, beta)") {
    CHECK(f_alpha_beta(1, 1) == doctest::Approx(c_of_x(0.5)).epsilon(1e-14));
    CHECK(f_alpha_beta(0, 1) == doctest::Approx(c_of_x(1.0)).epsilon(1e-14));
    CHECK(f_alpha_beta(0.3, 0.8) == doctest::Approx(f_alpha_beta(0.8, 0.3)).epsilon(1e-14));
    CHECK_THROWS_AS(f_alpha_beta(1.2, 1.0), std::domain_error);
}

TEST_CASE("epsilon' against the lemma closed form") {
    // closed form is plain arithmetic
    CHECK(lemma5_bound(100, 1.0) ==
          doctest::Approx(3.066 * 100 + 2.485 * 10 * std::log(100.0) + 36.963).epsilon(1e-14));

    for (long l : {7L, 11L, 41L, 199L, 1009L, 9973L})
        CHECK(epsilon_prime(static_cast<double>(l), 1.0) <=
              lemma5_bound(static_cast<double>(l), 1.0));

    // epsilon'(l,t) <= epsilon'(l,1) + (1-t) l on a t-grid
    for (long l : {7L, 97L, 1009L}) {
        double base = epsilon_prime(static_cast<double>(l), 1.0);
        for (int k = 0; k < 20; ++k) {
            double t = 1.0 + 0.0127 * k;
            CHECK(epsilon_prime(static_cast<double>(l), t) <=
                  base + (1.0 - t) * static_cast<double>(l) + 1e-9);
        }
    }
    CHECK_THROWS_AS(epsilon_prime(5, 1.0), std::domain_error);
    CHECK_THROWS_AS(epsilon_prime(7, 1.3), std::domain_error);
}

TEST_CASE("Ramanujan sums: identities and brute force") {
    for (long n = -5; n <= 5; ++n) CHECK(ramanujan_ck(1, n) == 1);
    // c_k(0) = phi(k)
    CHECK(ramanujan_ck(12, 0) == 4);
    CHECK(ramanujan_ck(7, 0) == 6);
    CHECK(ramanujan_ck(4, 2) == -2);
    CHECK(ramanujan_ck(5, -3) == ramanujan_ck(5, 3));

    // brute-force exponential sums
    for (long k = 1; k <= 40; ++k)
        for (long n = -40; n <= 40; ++n) {
            long double re = 0, im = 0;
            for (long h = 1; h <= k; ++h) {
                if (std::gcd(h, k) != 1) continue;
                long double arg = 2.0L * 3.14159265358979323846264338327950288L *
                                  static_cast<long double>(n) * h / k;
                re += cosl(arg);
                im += sinl(arg);
            }
            CHECK(std::abs(im) < 1e-9);
            CHECK(ramanujan_ck(k, n) == static_cast<long long>(llroundl(re)));
        }
}

TEST_CASE("partial Ramanujan-sum bound: |sum k^{-2} c_k(nu l)| <= zeta(2) sigma(nu)/nu") {
    const double zeta2 = PI * PI / 6.0;
    for (long l : {7L, 11L, 13L}) {
        for (long nu : {1L, 2L, 3L, 5L, 8L}) {
            for (long N : {5L, 20L, 100L}) {
                mpq_class s = 0;
                for (long k = 1; k <= N; ++k)
                    s += mpq_class(static_cast<long>(ramanujan_ck(k, nu * l)),
                                   static_cast<unsigned long>(k * k));
                double sigma = 0;
                for (long d = 1; d <= nu; ++d)
                    if (nu % d == 0) sigma += d;
                CHECK(std::abs(s.get_d()) <= zeta2 * sigma / nu + 1e-12);
            }
        }
    }
}

TEST_CASE("lemma6 bound arithmetic and the 0.037 l tail") {
    BoundBreakdown b = lemma6_bound(11, 1.0);
    double direct = 6 * 11 * std::log(11.0) + 13.889 * 11 +
                    3.290 * std::sqrt(11.0) * std::log(11.0) + 6.580 * std::sqrt(11.0);
    CHECK(b.total == doctest::Approx(direct).epsilon(1e-12));
    CHECK(b.linear_coeff == doctest::Approx(13.889));
    CHECK(b.total == doctest::Approx(b.recombine()).epsilon(1e-12));

    CHECK(lemma6_tail_per_l(1.0) < 0.037);
    CHECK(lemma6_tail_per_l(1.0) > 0.0369); // the paper constant is snug

    CHECK_THROWS_AS(lemma6_bound(3, 1.0), std::domain_error);
}

TEST_CASE("Poisson summation identity") {
    CHECK(poisson_lhs(1.0, 0.0) == doctest::Approx(PI / std::tanh(PI)).epsilon(1e-12));
    CHECK(poisson_lhs(1.0, 0.5) == doctest::Approx(PI * std::tanh(PI)).epsilon(1e-12));
    for (double theta : {0.0, 0.5, 0.3, 0.97})
        CHECK(poisson_identity_residual(1.0, theta, 50) < 1e-10);
    CHECK(poisson_identity_residual(1.13, 0.25, 50) < 1e-10);
    // residual shrinks with the truncation
    CHECK(poisson_identity_residual(1.0, 0.3, 50) <=
          poisson_identity_residual(1.0, 0.3, 3) + 1e-15);
    CHECK_THROWS_AS(poisson_identity_residual(1.0, 0.0, 0), std::domain_error);
}

TEST_CASE("delta machinery") {
    for (double l : {3600.0, 1e4, 1e6}) {
        for (double t : {1.0, 1.1, 1.25}) CHECK(delta_eps1(l, t) < 0.0);
        double dl = delta_total(l, 1.0);
        double rhs = 10.086 * l - 17.693 * std::sqrt(l) * std::log(l) + 58.939 * std::sqrt(l);
        CHECK(dl >= rhs * (1 - 1e-6));
        // minimized at t = 1 over the working range
        for (double t : {1.05, 1.1, 1.2, 1.253})
            CHECK(delta_total(l, t) >= dl - 1e-9 * l);
    }
    CHECK_THROWS_AS(delta_total(1000, 1.0), std::domain_error);
    CHECK_THROWS_AS(delta_d(100, 1.0, 60), std::domain_error);
}

TEST_CASE("lemma8 bound and its assembly from lemma6") {
    BoundBreakdown l8 = lemma8_bound(3600, 1.0);
    CHECK(l8.sqrt_log_coeff == doctest::Approx(17.693));
    CHECK(l8.total < lemma6_bound(3600, 1.0).total);
    // published displays: lemma6's leading + linear parts minus the displayed
    // tail lower bound reproduce lemma8 exactly
    for (double l : {3600.0, 1e5, 1e7}) {
        double six_l = 6 * l * std::log(l);
        double lhs = six_l + 13.889 * l -
                     (10.086 * l - 17.693 * std::sqrt(l) * std::log(l) + 58.939 * std::sqrt(l));
        CHECK(lemma8_bound(l, 1.0).total == doctest::Approx(lhs).epsilon(1e-12));
    }
    CHECK_THROWS_AS(lemma8_bound(100, 1.0), std::domain_error);
}

TEST_CASE("B1/B2/theorem/corollary closed forms") {
    CHECK(theorem1_bound(11) == doctest::Approx(445.6).epsilon(2e-4));
    CHECK(corollary1_bound(2) == doctest::Approx(12 * std::log(2.0) + 36).epsilon(1e-12));
    CHECK(corollary1_bound(2) / (48 * std::log(2.0)) == doctest::Approx(1.33).epsilon(2e-3));
    CHECK(interp_step(100.0, 10) == doctest::Approx(100.0 + 2.083 * 11).epsilon(1e-12));
    CHECK(b1(11).total ==
          doctest::Approx(6 * 11 * std::log(11.0) + 26.016 * 11 +
                          5.775 * std::sqrt(11.0) * std::log(11.0) + 6.580 * std::sqrt(11.0) +
                          39.046)
              .epsilon(1e-12));
    CHECK_THROWS_AS(b2(100), std::domain_error);
}

TEST_CASE("b2 stays below theorem 1 on a log grid to 1e9") {
    for (int k = 0; k <= 220; ++k) {
        double l = 3600.0 * std::pow(1e9 / 3600.0, k / 220.0);
        CHECK(b2(l).total < theorem1_bound(l));
    }
}

TEST_CASE("linear-coefficient assembly identities") {
    double b1_l = 13.889 + 3.066 + 1.0 + std::log(2.0) + 2 * PI - 1.0 + 2.083;
    CHECK(std::abs(b1_l - 26.016) < 0.002);
    double b2_l = 3.803 + 3.066 + 1.0 + std::log(2.0) + 2 * PI - 1.0 + 2.083;
    CHECK(std::abs(b2_l - 15.929) < 0.002);
    // sqrt-log coefficients stack the same way
    CHECK(std::abs(2.485 + 3.290 - 5.775) < 1e-12);
    CHECK(std::abs(2.485 + 17.693 - 20.178) < 1e-12);
}

TEST_CASE("assembled bound is maximized at t = 1") {
    for (long l : {7L, 11L, 41L, 97L}) {
        double base = assembled_bound_at_t(static_cast<double>(l), 1.0);
        for (double t = 1.0; t < 1.254; t += 0.05)
            CHECK(assembled_bound_at_t(static_cast<double>(l), t) <= base + 1e-9);
    }
    // and B1 is that value plus the interpolation step
    for (long l : {7L, 41L}) {
        double lv = static_cast<double>(l);
        CHECK(interp_step(assembled_bound_at_t(lv, 1.0), lv) ==
              doctest::Approx(b1(lv).total).epsilon(2e-5));
    }
}

TEST_CASE("hly bound dominates specialized heights at y = 1728") {
    for (long l : {2L, 3L}) {
        BivariateIntPoly p = compute_phi(l);
        std::vector<mpz_class> c = specialize_at_integer(p, 1728);
        double h = 0;
        for (const mpz_class& v : c)
            if (v != 0) h = std::max(h, std::log(std::abs(v.get_d())));
        double bound = hly_bound_it(l, 1.0);
        CHECK(bound >= h);
        CHECK(bound >= std::log(2.0) * static_cast<double>(l));
    }
}
