#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "paf/family.hpp"
#include "paf/thurston.hpp"

using namespace paf;

namespace {

IMat mat(std::initializer_list<std::initializer_list<long long>> rows) {
    IMat m((int)rows.size(), (int)rows.begin()->size());
    int i = 0;
    for (const auto& r : rows) {
        int j = 0;
        for (long long v : r) m.at(i, j++) = v;
        ++i;
    }
    return m;
}

// Oracle: long plain power iteration on M + I, independent of the
// Collatz-Wielandt bracketing path.
double dense_spectral_radius(const IMat& m) {
    int n = m.rows;
    std::vector<double> v(n, 1.0), w(n);
    double lambda = 0;
    for (int it = 0; it < 20000; ++it) {
        for (int i = 0; i < n; ++i) {
            double acc = v[i];
            for (int j = 0; j < n; ++j) acc += (double)m.at(i, j) * v[j];
            w[i] = acc;
        }
        double norm = 0;
        for (double x : w) norm = std::max(norm, std::abs(x));
        for (int i = 0; i < n; ++i) v[i] = w[i] / norm;
        lambda = norm;
    }
    return lambda - 1.0;
}

}  // namespace

TEST_CASE("gram matrix examples") {
    CHECK(gram(mat({{8}})).at(0, 0) == 64);
    IMat f2p = gram(mat({{2, 2}}));
    CHECK(f2p.rows == 1);
    CHECK(f2p.at(0, 0) == 8);
    CHECK(gram(IMat::identity(2)) == IMat::identity(2));
    IMat neg = mat({{-1}});
    CHECK_THROWS_AS(gram(neg), std::invalid_argument);
}

TEST_CASE("pf_eigenvalue is exact on 1x1 matrices") {
    QBracket b = pf_eigenvalue(mat({{64}}), Rat(1, 1000));
    CHECK(b.lower == Rat(64));
    CHECK(b.upper == Rat(64));
    QBracket b8 = pf_eigenvalue(mat({{8}}), Rat(1, 1000));
    CHECK(b8.lower == Rat(8));
    CHECK(b8.upper == Rat(8));
}

TEST_CASE("pf_eigenvalue reports tolerances below the certification floor") {
    IMat m = mat({{1, 2}, {3, 1}});
    CHECK_THROWS_AS(pf_eigenvalue(m, Rat(1, 1000000000000000000LL)), std::runtime_error);
    CHECK_THROWS_AS(pf_eigenvalue(m, Rat(0)), std::invalid_argument);
    CHECK_THROWS_AS(pf_eigenvalue(m, Rat(-1, 2)), std::invalid_argument);
}

TEST_CASE("pf_eigenvalue rejects zero and reducible matrices") {
    CHECK_THROWS_AS(pf_eigenvalue(mat({{0}}), Rat(1, 100)), std::invalid_argument);
    CHECK_THROWS_AS(pf_eigenvalue(mat({{1, 1}, {0, 1}}), Rat(1, 100)), std::invalid_argument);
    CHECK_THROWS_AS(pf_eigenvalue(mat({{1, 0}, {0, 1}}), Rat(1, 100)), std::invalid_argument);
    CHECK_THROWS_AS(pf_eigenvalue(mat({{1, -1}, {1, 1}}), Rat(1, 100)), std::invalid_argument);
}

TEST_CASE("mu_8 fixture lands in the target window (fixture-dependent)") {
    // A failure here indicts the figure transcription, not the solver.
    FamilyBuild g8 = build_family(8);
    QBracket mu = pf_eigenvalue(gram(g8.system.intersections), Rat(1, 1000));
    CHECK(mu.to_ival().lo() >= 61.968);
    CHECK(mu.to_ival().hi() <= 61.988);
    CHECK(mu.width() <= Rat(1, 100));
}

TEST_CASE("generated mu_g stays below 62 on a sample") {
    for (int g : {3, 4, 5, 6, 7, 9, 11, 23, 60}) {
        QBracket mu = pf_eigenvalue(gram(build_family(g).system.intersections), Rat(1, 1000));
        CHECK(mu.to_ival().hi() < 62.0);
    }
}

TEST_CASE("row sum bound examples") {
    CHECK(row_sum_bound(mat({{64}})) == 64);
    for (int g : {6, 9, 12, 30}) {
        long long rs = row_sum_bound(gram(build_family(g).system.intersections));
        CHECK(rs <= 48);
    }
    for (int g : {11, 14, 20}) {
        long long rs = row_sum_bound(gram(build_family(g).system.intersections));
        CHECK(rs <= 52);
    }
    // certified direction: upper bracket never exceeds the row-sum bound
    for (int g : {3, 7, 11}) {
        IMat m = gram(build_family(g).system.intersections);
        QBracket mu = pf_eigenvalue(m, Rat(1, 100000));
        CHECK(mu.upper <= Rat(row_sum_bound(m)));
    }
}

TEST_CASE("entropy_diff matches the closed form") {
    // mu = 62: lambda = (64 + sqrt(4092)) / 2
    Ival h = entropy_diff(Ival(62.0));
    double lambda = (64.0 + std::sqrt(4092.0)) / 2.0;
    CHECK(h.contains(std::log(lambda)));
    CHECK(h.hi() < std::log(64.0));
    // degenerate limit: mu -> 0+ gives lambda -> 1, h -> 0
    Ival h0 = entropy_diff(Ival(1e-9));
    CHECK(h0.hi() < 1e-4);
    CHECK(h0.lo() >= 0 - 1e-12);
    CHECK_THROWS_AS(entropy_diff(Ival(-1.0)), std::invalid_argument);
    // h <= log(mu + 2)
    for (double mu : {0.5, 4.0, 62.0, 1000.0}) CHECK(entropy_diff(Ival(mu)).hi() <= std::log(mu + 2));
}

TEST_CASE("entropy_prod matches the genus-2 closed forms") {
    // f_2: mu = 64, lambda = 31 + sqrt(960), h < log 62
    Ival h2 = entropy_prod(Ival(64.0));
    double lambda2 = 31.0 + std::sqrt(960.0);
    CHECK(h2.contains(std::log(lambda2)));
    CHECK(h2.hi() < std::log(62.0));
    CHECK(h2.lo() > 4.1268 - 1e-3);
    CHECK(h2.hi() < 4.1268 + 1e-3);
    // f_2': mu = 8, lambda = 3 + 2 sqrt(2), h = log(3+2sqrt2) < log 6 < 2
    Ival h2p = entropy_prod(Ival(8.0));
    CHECK(h2p.contains(std::log(3.0 + 2.0 * std::sqrt(2.0))));
    CHECK(h2p.hi() < std::log(6.0));
    CHECK(h2p.hi() < 2.0);
    // parabolic boundary rejected
    CHECK_THROWS_AS(entropy_prod(Ival(4.0)), std::domain_error);
    CHECK_THROWS_AS(entropy_prod(Ival(3.0)), std::domain_error);
}

TEST_CASE("entropy maps are strictly increasing in mu") {
    double prev_d = -1, prev_p = -1;
    for (double mu = 0.5; mu < 200; mu += 3.7) {
        Ival hd = entropy_diff(Ival(mu));
        CHECK(hd.lo() > prev_d);
        prev_d = hd.hi();
    }
    for (double mu = 4.5; mu < 200; mu += 3.7) {
        Ival hp = entropy_prod(Ival(mu));
        CHECK(hp.lo() > prev_p);
        prev_p = hp.hi();
    }
}

TEST_CASE("Collatz-Wielandt brackets contain the dense oracle value") {
    std::mt19937 rng(23);
    int done = 0;
    while (done < 120) {
        int n = 1 + (int)(rng() % 6);
        IMat m(n, n);
        for (auto& v : m.a) v = (long long)(rng() % 5);
        try {
            QBracket mu = pf_eigenvalue(m, Rat(1, 1000000));
            double rho = dense_spectral_radius(m);
            CHECK(mu.to_ival().lo() <= rho + 1e-7);
            CHECK(mu.to_ival().hi() >= rho - 1e-7);
            CHECK(mu.upper <= Rat(row_sum_bound(m)));
            ++done;
        } catch (const std::invalid_argument&) {
            // reducible sample; skip
        }
    }
}

TEST_CASE("label swap: NN^T and N^T N have equal spectral radius") {
    std::vector<IMat> corpus;
    for (int g : {4, 5, 8, 3, 7, 11}) corpus.push_back(build_family(g).system.intersections);
    corpus.push_back(build_f2prime().system.intersections);
    auto [k3, k1] = build_k3_k1_examples();
    corpus.push_back(k3.system.intersections);
    corpus.push_back(k1.system.intersections);
    for (const IMat& n : corpus) {
        QBracket a = pf_eigenvalue(gram(n), Rat(1, 100000));
        QBracket b = pf_eigenvalue(gram(n.transpose()), Rat(1, 100000));
        CHECK(a.lower <= b.upper);
        CHECK(b.lower <= a.upper);
    }
}
