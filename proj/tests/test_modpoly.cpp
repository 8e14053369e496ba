#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "phibound/modpoly.hpp"

using namespace phibound;

// classical Phi_2, used as frozen reference data
static BivariateIntPoly known_phi2() {
    BivariateIntPoly p(2);
    p.set_coeff(3, 0, 1);
    p.set_coeff(2, 2, -1);
    p.set_coeff(2, 1, 1488);
    p.set_coeff(2, 0, -162000);
    p.set_coeff(1, 1, 40773375);
    p.set_coeff(1, 0, mpz_class("8748000000"));
    p.set_coeff(0, 0, mpz_class("-157464000000000"));
    return p;
}

TEST_CASE("compute_phi(2) matches the classical polynomial, both strategies") {
    BivariateIntPoly a = compute_phi(2, PhiStrategy::LinearSolve);
    BivariateIntPoly b = compute_phi(2, PhiStrategy::JReduction);
    BivariateIntPoly want = known_phi2();
    CHECK(a == want);
    CHECK(b == want);
    CHECK(a.coeff(2, 2) == -1);
    CHECK(a.coeff(0, 0) == mpz_class("-157464000000000"));
    CHECK(a.coeff(0, 3) == 1); // symmetric accessor
}

TEST_CASE("strategies agree for l = 3, 5, 7") {
    for (long l : {3L, 5L, 7L}) {
        BivariateIntPoly a = compute_phi(l, PhiStrategy::LinearSolve);
        BivariateIntPoly b = compute_phi(l, PhiStrategy::JReduction);
        CHECK(a == b);
    }
}

TEST_CASE("compute_phi validates arguments") {
    CHECK_THROWS_AS(compute_phi(4), std::invalid_argument);
    CHECK_THROWS_AS(compute_phi(1), std::invalid_argument);
    CHECK_THROWS_AS(compute_phi(67, PhiStrategy::LinearSolve, 61), std::out_of_range);
}

TEST_CASE("verify_modular_equation and perturbation") {
    BivariateIntPoly p = compute_phi(2);
    CHECK(verify_modular_equation(p, 16));
    p.set_coeff(1, 0, p.coeff(1, 0) + 1);
    CHECK_FALSE(verify_modular_equation(p, 16));
}

TEST_CASE("perturbation is caught for a CRT-range polynomial") {
    BivariateIntPoly p = compute_phi(29);
    CHECK(verify_modular_equation(p, 16));
    CHECK(kronecker_congruence_ok(p));
    p.set_coeff(7, 3, p.coeff(7, 3) + 1);
    CHECK_FALSE(verify_modular_equation(p, 16));
}

TEST_CASE("Kronecker congruence holds and detects corruption") {
    BivariateIntPoly p = compute_phi(5);
    CHECK(kronecker_congruence_ok(p));
    CHECK(degree_structure_ok(p));
    p.set_coeff(2, 1, p.coeff(2, 1) + 1);
    CHECK_FALSE(kronecker_congruence_ok(p));
}

TEST_CASE("heights of l = 2, 3, 5") {
    HeightReport r2 = height(compute_phi(2));
    CHECK(r2.h2 == 48);
    CHECK(std::abs(r2.h - std::log(157464000000000.0)) < 1e-9);

    auto [c2, rr2] = table_stats(r2);
    CHECK(c2 == doctest::Approx(12.48));
    CHECK(rr2 == doctest::Approx(1.33));

    HeightReport r3 = height(compute_phi(3));
    CHECK(r3.h2 == 71);
    auto [c3, rr3] = table_stats(r3);
    CHECK(c3 == doctest::Approx(9.81));
    CHECK(rr3 == doctest::Approx(1.50));

    HeightReport r5 = height(compute_phi(5));
    CHECK(r5.h2 == 157);
    auto [c5, rr5] = table_stats(r5);
    CHECK(c5 == doctest::Approx(12.11));
    CHECK(rr5 == doctest::Approx(1.27));
}

TEST_CASE("exact-log convention for l = 2") {
    HeightReport r = height(compute_phi(2), HeightConvention::ExactLog);
    CHECK(r.c_l == doctest::Approx(12.19).epsilon(5e-4));
}

TEST_CASE("serialize round trip and canonical content") {
    BivariateIntPoly p = compute_phi(2);
    std::string s = serialize(p);
    CHECK(s.find("phi l 2\n") == 0);
    CHECK(s.find("2 2 -1\n") != std::string::npos);
    BivariateIntPoly q = parse_phi(s);
    CHECK(p == q);
    CHECK(serialize(q) == s);
}

TEST_CASE("parse rejects malformed inputs") {
    CHECK_THROWS_AS(parse_phi(""), std::invalid_argument);
    CHECK_THROWS_AS(parse_phi("phi l x\n"), std::invalid_argument);
    CHECK_THROWS_AS(parse_phi("phi l 2\n1 2 5\n"), std::invalid_argument); // i < j
    CHECK_THROWS_AS(parse_phi("phi l 2\n1 0 5\n0 0 3\n"), std::invalid_argument); // order
    CHECK_THROWS_AS(parse_phi("phi l 2\n1 0 0\n"), std::invalid_argument); // zero coeff
    CHECK_THROWS_AS(parse_phi("phi l 2\n1 0 5 7\n"), std::invalid_argument);
    CHECK_THROWS_AS(parse_phi("phi l 2\n9 0 5\n"), std::invalid_argument); // out of range
}

TEST_CASE("specialize_at_integer matches direct evaluation for Phi_2 at Y=1728") {
    BivariateIntPoly p = known_phi2();
    std::vector<mpz_class> c = specialize_at_integer(p, 1728);
    // Phi_2(X, 1728) = X^3 - X^2 1728^2 + 1488 X^2 1728 + ...
    mpz_class y = 1728;
    mpz_class x2 = -y * y + 1488 * y - 162000;
    CHECK(c[3] == 1);
    CHECK(c[2] == x2);
    mpz_class x0 = y * y * y - 162000 * y * y + mpz_class("8748000000") * y +
                   mpz_class("-157464000000000");
    CHECK(c[0] == x0);
}

TEST_CASE("round2_half_up") {
    CHECK(round2_half_up(12.125) == doctest::Approx(12.13)); // exactly representable tie
    CHECK(round2_half_up(12.124) == doctest::Approx(12.12));
    CHECK(round2_half_up(0.125) == doctest::Approx(0.13));
    CHECK(round2_half_up(1.4949) == doctest::Approx(1.49));
}
