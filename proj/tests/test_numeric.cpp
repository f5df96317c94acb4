#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "paf/bigint.hpp"
#include "paf/ival.hpp"
#include "paf/rat.hpp"
#include "paf/roots.hpp"

using namespace paf;

TEST_CASE("rational arithmetic is exact and reduced") {
    Rat a(1, 3), b(1, 6);
    CHECK(a + b == Rat(1, 2));
    CHECK(a - b == Rat(1, 6));
    CHECK(a * b == Rat(1, 18));
    CHECK(a / b == Rat(2));
    CHECK(Rat(-4, -8) == Rat(1, 2));
    CHECK(Rat(4, -8) == Rat(-1, 2));
    CHECK(Rat(1, 3) < Rat(1, 2));
    CHECK_THROWS_AS(Rat(1, 0), std::domain_error);
    CHECK_THROWS_AS(Rat(1) / Rat(0), std::domain_error);
    CHECK(Rat::from_decimal("0.00031") == Rat(31, 100000));
    CHECK(Rat::from_decimal("-1.5") == Rat(-3, 2));
    CHECK(Rat::from_decimal("3/4") == Rat(3, 4));
}

TEST_CASE("rational overflow is detected") {
    Rat big(INT64_MAX / 2, 1);
    CHECK_THROWS_AS(big * Rat(8), std::overflow_error);
}

TEST_CASE("interval arithmetic contains the true result") {
    std::mt19937 rng(11);
    std::uniform_real_distribution<double> u(-10.0, 10.0);
    for (int it = 0; it < 2000; ++it) {
        double x = u(rng), y = u(rng);
        Ival ix(x), iy(y);
        CHECK((ix + iy).contains(x + y));
        CHECK((ix - iy).contains(x - y));
        CHECK((ix * iy).contains(x * y));
        if (std::abs(y) > 1e-6) CHECK((ix / iy).contains(x / y));
    }
    CHECK(sqrt(Ival(2.0)).contains(std::sqrt(2.0)));
    CHECK(log(Ival(3.0)).contains(std::log(3.0)));
    CHECK(exp(Ival(1.0)).contains(std::exp(1.0)));
    CHECK(sinh(Ival(2.0)).contains(std::sinh(2.0)));
    CHECK(Ival::pi().contains(3.14159265358979323846));
}

TEST_CASE("interval powers: sinh(5 log 3) matches the algebraic value") {
    // sinh(5 log 3) = (3^5 - 3^-5)/2 = 29524/243 exactly
    Ival v = sinh(Ival(5.0) * Ival::log3());
    double exact = 29524.0 / 243.0;
    CHECK(v.contains(exact));
    CHECK(v.width() < 1e-10);
    Ival p = pow_int(Ival(3.0), 5);
    CHECK(p.contains(243.0));
}

TEST_CASE("bigint agrees with int64 on random small values") {
    std::mt19937_64 rng(7);
    for (int it = 0; it < 4000; ++it) {
        long long a = (long long)(rng() % 2000001) - 1000000;
        long long b = (long long)(rng() % 2000001) - 1000000;
        CHECK((BigInt(a) + BigInt(b)).str() == std::to_string(a + b));
        CHECK((BigInt(a) - BigInt(b)).str() == std::to_string(a - b));
        CHECK((BigInt(a) * BigInt(b)).str() == std::to_string(a * b));
        CHECK((BigInt(a) < BigInt(b)) == (a < b));
    }
    CHECK(BigInt(2).pow(100).str() == "1267650600228229401496703205376");
    CHECK(BigInt(1).shl(64).str() == "18446744073709551616");
    CHECK(BigInt(-3).pow(3).str() == "-27");
}

TEST_CASE("dyadic decomposition is exact") {
    for (double x : {1.5, 2.0, 0.75, 1.0000001, 1099511627776.0, 1.7220838057390459}) {
        long long m;
        unsigned long s;
        dyadic_decompose(x, m, s);
        CHECK(std::ldexp((double)m, -(int)s) == x);
    }
}

TEST_CASE("largest_root brackets closed forms") {
    // x^2 - 3x + 1: largest root (3+sqrt(5))/2 = phi^2
    IntPoly p{{1, -3, 1}};
    Ival r = largest_root(p, 1e-12);
    double phi2 = (3.0 + std::sqrt(5.0)) / 2.0;
    CHECK(r.contains(phi2));
    CHECK(r.width() <= 1e-12);
    CHECK(log(r).contains(2 * std::log((1.0 + std::sqrt(5.0)) / 2.0)));
    // log(phi^2) ~ 0.96242
    CHECK(log(r).lo() > 0.96241);
    CHECK(log(r).hi() < 0.96243);

    // (x - 2): exact root found
    IntPoly lin{{-2, 1}};
    Ival r2 = largest_root(lin, 1e-9);
    CHECK(r2.contains(2.0));
    CHECK(r2.width() <= 1e-9);

    // x^4 - x^3 - x^2 - x + 1: the genus-2 minimum
    IntPoly quart{{1, -1, -1, -1, 1}};
    Ival r3 = largest_root(quart, 1e-12);
    Ival lr3 = log(r3);
    CHECK(lr3.lo() > 0.54352);
    CHECK(lr3.hi() < 0.54355);
}

TEST_CASE("largest_root rejects polynomials without a sign change") {
    IntPoly pos{{1, 0, 1}};  // x^2 + 1
    CHECK_THROWS_AS(largest_root(pos, 1e-9), std::domain_error);
    IntPoly con{{5}};
    CHECK_THROWS_AS(largest_root(con, 1e-9), std::invalid_argument);
}

TEST_CASE("largest_root endpoints carry certified exact signs") {
    std::vector<IntPoly> polys = {
        {{1, -3, 1}},
        {{1, -1, -1, -1, 1}},
        {{1, -1, 0, 0, -1, 0, 0, -1, 1}},                       // L_{3,4}
        {{1, 0, 0, 0, -1, 0, 0, -1, 0, 0, -1, 0, 0, 0, 1}},     // L_{3,7}
    };
    for (const auto& p : polys) {
        Ival r = largest_root(p, 1e-11);
        long long m;
        unsigned long s;
        dyadic_decompose(r.lo(), m, s);
        CHECK(p.exact_sign_dyadic(m, s) <= 0);
        dyadic_decompose(r.hi(), m, s);
        CHECK(p.exact_sign_dyadic(m, s) >= 0);
    }
}
