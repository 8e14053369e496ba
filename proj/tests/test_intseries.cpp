#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "phibound/intseries.hpp"

using phibound::IntSeries;

static IntSeries make(long val, std::initializer_list<long> cs) {
    std::vector<mpz_class> v;
    for (long c : cs) v.emplace_back(c);
    return IntSeries(val, std::move(v));
}

TEST_CASE("construction normalizes the leading coefficient") {
    IntSeries s = make(-2, {0, 0, 3, 1});
    CHECK(s.valuation() == 0);
    CHECK(s.prec() == 2);
    CHECK(s.coeff(0) == 3);
    CHECK(s.coeff(1) == 1);
    CHECK(s.coeff(-5) == 0);
    CHECK_THROWS_AS((void)s.coeff(2), std::out_of_range);
}

TEST_CASE("zero series bookkeeping") {
    IntSeries z = IntSeries::zero(7);
    CHECK(z.is_zero());
    CHECK(z.prec() == 7);
    CHECK(z.coeff(3) == 0);
    IntSeries s = make(1, {2, 5});
    CHECK((s - s).is_zero());
    CHECK((s - s).prec() == s.prec());
}

TEST_CASE("addition takes min precision") {
    IntSeries a = make(-1, {1, 2, 3});   // prec 2
    IntSeries b = make(0, {10, 20, 30}); // prec 3
    IntSeries c = a + b;
    CHECK(c.valuation() == -1);
    CHECK(c.prec() == 2);
    CHECK(c.coeff(0) == 12);
    CHECK(c.coeff(1) == 23);
}

TEST_CASE("multiplication precision rule") {
    // a known mod q^2, val -1; b known mod q^3, val 0:
    // product valid through min(2+0, 3-1) = 2
    IntSeries a = make(-1, {1, 1, 1});
    IntSeries b = make(0, {1, 1, 1});
    IntSeries p = a * b;
    CHECK(p.valuation() == -1);
    CHECK(p.prec() == 2);
    CHECK(p.coeff(-1) == 1);
    CHECK(p.coeff(0) == 2);
    CHECK(p.coeff(1) == 3);
}

TEST_CASE("multiplication matches schoolbook") {
    IntSeries a = make(0, {1, -3, 2, 7, 0, 0, 0, 0});
    IntSeries b = make(0, {5, 1, -1, 0, 4, 0, 0, 0});
    IntSeries p = a * b;
    // (1-3q+2q^2+7q^3)(5+q-q^2+4q^4)
    CHECK(p.coeff(0) == 5);
    CHECK(p.coeff(1) == -14);
    CHECK(p.coeff(2) == 6);
    CHECK(p.coeff(3) == 40);
    CHECK(p.coeff(4) == 9);
    CHECK(p.coeff(5) == -19);
    CHECK(p.coeff(6) == 8);
    CHECK(p.coeff(7) == 28);
}

TEST_CASE("exact division round-trips") {
    IntSeries d = make(1, {1, -24, 252, -1472, 4830, -6048, -16744, 84480});
    IntSeries q = make(-1, {1, 744, 196884, 21493760, 864299970, 20245856256, 333202640600});
    IntSeries n = (q * d);
    IntSeries q2 = n.divided_exact(d);
    CHECK(q2 == q.truncated(q2.prec()));
}

TEST_CASE("non-exact division throws") {
    IntSeries n = make(0, {1, 1});
    IntSeries d = make(0, {2, 0});
    CHECK_THROWS_AS(n.divided_exact(d), std::runtime_error);
}

TEST_CASE("pow with cap") {
    IntSeries a = make(0, {1, 1, 0, 0, 0, 0});
    IntSeries p = a.pow(4, 5);
    CHECK(p.coeff(0) == 1);
    CHECK(p.coeff(1) == 4);
    CHECK(p.coeff(2) == 6);
    CHECK(p.coeff(3) == 4);
    CHECK(p.coeff(4) == 1);
}
