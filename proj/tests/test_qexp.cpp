#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "phibound/qexp.hpp"
#include "oracles.hpp"

using phibound::IntSeries;
using phibound::delta_expansion;
using phibound::e4_expansion;
using phibound::j_expansion;
using phibound::substitute_power;

TEST_CASE("delta: leading term and brute-force oracle") {
    IntSeries d = delta_expansion(12);
    CHECK(d.valuation() == 1);
    CHECK(d.coeff(1) == 1);

    // independent expansion of q * prod_{n<=11}(1-q^n)^24
    oracle::Poly p = oracle::eta24(11, 11);
    for (long n = 1; n < 12; ++n)
        CHECK(d.coeff(n) == p[static_cast<size_t>(n - 1)]);
    CHECK(d.coeff(2) == -24);
    CHECK(d.coeff(3) == 252);
}

TEST_CASE("delta rejects prec < 2") {
    CHECK_THROWS_AS(delta_expansion(1), std::invalid_argument);
}

TEST_CASE("e4: divisor-sum oracle") {
    IntSeries e = e4_expansion(10);
    CHECK(e.valuation() == 0);
    CHECK(e.coeff(0) == 1);
    for (long n = 1; n < 10; ++n)
        CHECK(e.coeff(n) == 240 * oracle::sigma3(n));
    CHECK(e.coeff(1) == 240);
    CHECK(e.coeff(2) == 2160);
    CHECK_THROWS_AS(e4_expansion(0), std::invalid_argument);
}

TEST_CASE("j: series-division oracle E4^3/Delta") {
    IntSeries j = j_expansion(8);
    CHECK(j.valuation() == -1);
    CHECK(j.coeff(-1) == 1);
    CHECK(j.coeff(0) == 744);
    CHECK(j.coeff(1) == 196884);

    // oracle: expand E4^3 and Delta/q independently and long-divide
    const size_t T = 9;
    oracle::Poly e4(T, mpz_class(0));
    e4[0] = 1;
    for (long n = 1; n < static_cast<long>(T); ++n) e4[static_cast<size_t>(n)] = 240 * oracle::sigma3(n);
    oracle::Poly num = oracle::mul(oracle::mul(e4, e4, T), e4, T);
    oracle::Poly den = oracle::eta24(static_cast<long>(T), T); // Delta = q * den
    oracle::Poly q = oracle::divide(num, den, T);              // j = q^{-1} * (num/den)
    for (long n = -1; n < 8; ++n)
        CHECK(j.coeff(n) == q[static_cast<size_t>(n + 1)]);
}

TEST_CASE("round trip: E4^3 == j * Delta exactly to shared precision") {
    long prec = 40;
    IntSeries e4 = e4_expansion(prec);
    IntSeries lhs = (e4 * e4 * e4).truncated(prec - 2);
    IntSeries rhs = (j_expansion(prec) * delta_expansion(prec)).truncated(prec - 2);
    CHECK(lhs == rhs);
}

TEST_CASE("substitute_power") {
    IntSeries j = j_expansion(6);
    IntSeries j2 = substitute_power(j, 2);
    CHECK(j2.valuation() == -2);
    CHECK(j2.prec() == 12);
    CHECK(j2.coeff(-2) == 1);
    CHECK(j2.coeff(-1) == 0);
    CHECK(j2.coeff(0) == 744);
    CHECK(j2.coeff(1) == 0);
    CHECK(j2.coeff(2) == 196884);

    IntSeries j3 = substitute_power(j, 3);
    CHECK(j3.coeff(3) == 196884);

    IntSeries z = substitute_power(IntSeries::zero(4), 5);
    CHECK(z.is_zero());
    CHECK(z.prec() == 20);

    CHECK_THROWS_AS(substitute_power(j, 0), std::invalid_argument);
}

TEST_CASE("substitute_power composes multiplicatively") {
    IntSeries j = j_expansion(7);
    CHECK(substitute_power(j, 6) == substitute_power(substitute_power(j, 2), 3));
    CHECK(substitute_power(j, 6) == substitute_power(substitute_power(j, 3), 2));
}
