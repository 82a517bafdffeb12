#include <doctest.h>

#include <random>

#include "hciz/expansions.hpp"
#include "hciz/monotone.hpp"
#include "hciz/plancherel.hpp"
#include "hciz/verify.hpp"

using namespace hciz;

namespace {

StringSeries<Rational> random_series(std::mt19937_64& rng, int D, SeriesVariant v,
                                     const Rational& constant) {
    StringSeries<Rational> s(D, v, Rational(1));
    s.set(0, PartitionPair{}, constant);
    std::uniform_int_distribution<int> num(-5, 5), den(1, 3);
    for (int d = 1; d <= D; ++d)
        for (const Partition& beta : enumerate_partitions(d)) {
            if (v == SeriesVariant::Pair) {
                for (const Partition& alpha : enumerate_partitions(d))
                    s.set(d, {alpha, beta}, rat(num(rng), den(rng)));
            } else {
                s.set(d, {Partition(), beta}, rat(num(rng), den(rng)));
            }
        }
    return s;
}

}  // namespace

TEST_CASE("graded product basics") {
    auto one = StringSeries<Rational>::one(3, SeriesVariant::Pair, Rational(1));
    std::mt19937_64 rng(42);
    auto s = random_series(rng, 3, SeriesVariant::Pair, Rational(1));
    CHECK(s * one == s);

    // (z p_(1) p_(1))^2 = z^2 p_(1,1) p_(1,1)
    StringSeries<Rational> lin(3, SeriesVariant::Pair, Rational(1));
    lin.set(1, {Partition({1}), Partition({1})}, Rational(1));
    auto sq = lin * lin;
    CHECK(sq.coefficient(2, {Partition({1, 1}), Partition({1, 1})}) == 1);
    CHECK(sq.level(2).size() == 1);
    CHECK(sq.level(1).empty());
}

TEST_CASE("product is commutative") {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 4; ++trial) {
        auto a = random_series(rng, 4, SeriesVariant::Pair, Rational(trial));
        auto b = random_series(rng, 4, SeriesVariant::Pair, Rational(1 - trial));
        CHECK(a * b == b * a);
    }
    for (int trial = 0; trial < 4; ++trial) {
        auto a = random_series(rng, 5, SeriesVariant::Single, Rational(0));
        auto b = random_series(rng, 5, SeriesVariant::Single, Rational(2));
        CHECK(a * b == b * a);
    }
}

TEST_CASE("variant and degree mismatches are rejected") {
    StringSeries<Rational> p(3, SeriesVariant::Pair, Rational(1));
    StringSeries<Rational> s(3, SeriesVariant::Single, Rational(1));
    StringSeries<Rational> p4(4, SeriesVariant::Pair, Rational(1));
    CHECK_THROWS(p * s);
    CHECK_THROWS(p * p4);
    CHECK_THROWS(s.key(Partition({1}), Partition({1})));
    CHECK_THROWS(p.set(2, {Partition({1}), Partition({1})}, Rational(1)));
}

TEST_CASE("exp and log are mutually inverse") {
    auto zero = StringSeries<Rational>(3, SeriesVariant::Pair, Rational(1));
    CHECK(zero.exp() == StringSeries<Rational>::one(3, SeriesVariant::Pair, Rational(1)));
    CHECK(StringSeries<Rational>::one(3, SeriesVariant::Pair, Rational(1)).log() == zero);

    std::mt19937_64 rng(99);
    for (int trial = 0; trial < 3; ++trial) {
        auto s = random_series(rng, 4, SeriesVariant::Pair, Rational(0));
        CHECK(s.exp().log() == s);
        auto t = random_series(rng, 4, SeriesVariant::Single, Rational(1));
        CHECK(t.log().exp() == t);
    }

    CHECK_THROWS(random_series(rng, 3, SeriesVariant::Pair, Rational(1)).exp());
    CHECK_THROWS(random_series(rng, 3, SeriesVariant::Pair, Rational(0)).log());
}

TEST_CASE("graded division inverts multiplication") {
    std::mt19937_64 rng(1234);
    auto a = random_series(rng, 4, SeriesVariant::Pair, Rational(3));
    auto b = random_series(rng, 4, SeriesVariant::Pair, Rational(1));
    CHECK((a * b).div(b) == a);
}

TEST_CASE("assemble_I coefficients") {
    auto s2 = assemble_I(2, 2);
    CHECK(s2.coefficient(1, {Partition({1}), Partition({1})}) == 1);
    CHECK(s2.coefficient(2, {Partition({2}), Partition({2})}) == rat(2, 3));
    // positivity of the LIS factor keeps diagonal coefficients nonzero
    for (int N = 1; N <= 3; ++N) {
        auto s = assemble_I(N, 3);
        for (int d = 1; d <= 3; ++d)
            CHECK(s.coefficient(d, {Partition::one_column(d), Partition::one_column(d)}) != 0);
    }
}

TEST_CASE("assemble_J coefficients") {
    auto j1 = assemble_J(1, 2);
    CHECK(j1.coefficient(1, {Partition(), Partition({1})}) == 1);
    auto j2 = assemble_J(2, 2);
    CHECK(j2.coefficient(1, {Partition(), Partition({1})}) == 2);
    for (int d = 1; d <= 2; ++d)
        CHECK(j2.coefficient(d, {Partition(), Partition::one_column(d)}) > 0);
}

TEST_CASE("string polynomial truncation") {
    auto s = assemble_I(2, 3);
    auto poly = string_polynomial(s, 2);  // cutoff floor(4/4) = 1
    CHECK(poly.coefficient(1, {Partition({1}), Partition({1})}) == 1);
    for (int d = 2; d <= 3; ++d) CHECK(poly.level(d).empty());

    // N large: cutoff beyond D, only the P factor is stripped
    auto s4 = assemble_I(4, 3);
    auto poly4 = string_polynomial(s4, 4);
    for (int d = 0; d <= 3; ++d)
        for (const auto& [key, c] : s4.level(d))
            CHECK(poly4.coefficient(d, key) == c / lis_probability(d, 4));

    // P(LIS_2 <= 2) = 1 so this coefficient is unchanged
    auto s22 = string_polynomial(assemble_I(2, 2), 2);
    CHECK(assemble_I(2, 2).coefficient(2, {Partition({2}), Partition({2})}) == rat(2, 3));
}

TEST_CASE("free energy coefficients") {
    for (int N : {2, 5}) {
        auto f0 = free_energy(IntegralKind::HCIZ, N, 0, 2);
        CHECK(f0.coefficient(1, {Partition({1}), Partition({1})}) == rat(1, N) * rat(1, N));
        auto f1 = free_energy(IntegralKind::HCIZ, N, 1, 2);
        CHECK(f1.coefficient(1, {Partition({1}), Partition({1})}) == 0);
        auto g0 = free_energy(IntegralKind::BGW, N, 0, 2);
        CHECK(g0.coefficient(1, {Partition(), Partition({1})}) == rat(1, N));
    }
}

TEST_CASE("log coefficients in reporting normalization") {
    for (int N : {3, 5, 8}) {
        auto logI = assemble_I(N, 3).log();
        CHECK(normalized_coefficient(logI, 1, {Partition({1}), Partition({1})}, N) ==
              Rational(N) * Rational(N));

        // trivial fields collapse the logarithm to its degree-one term
        std::vector<GaussianRational> ones(N, GaussianRational(Rational(1)));
        auto terms = evaluate_degree_terms(logI, ones, ones);
        CHECK(terms[1] == GaussianRational(Rational(N * N)));
        for (int d = 2; d <= 3; ++d) CHECK(terms[d] == GaussianRational());
    }
}

TEST_CASE("log coefficient sign pattern") {
    int N = 8;
    auto logI = assemble_I(N, 3).log();
    for (int d = 1; d <= 3; ++d) {
        auto parts = enumerate_partitions(d);
        for (const Partition& alpha : parts)
            for (const Partition& beta : parts) {
                Rational L = normalized_coefficient(logI, d, {alpha, beta}, N);
                int sign = (alpha.rows() + beta.rows()) % 2 == 0 ? 1 : -1;
                CHECK(Rational(sign) * L > 0);
            }
    }
}

TEST_CASE("log table helper matches reporting normalization") {
    int N = 4;
    auto s = assemble_I(N, 2);
    auto table = log_coeffs(s, N, 2);
    auto logI = s.log();
    for (const auto& [key, value] : table)
        CHECK(value == normalized_coefficient(logI, 2, key, N));
}

TEST_CASE("discrepancy vanishes at degree one and shrinks with N") {
    for (int k = 0; k <= 1; ++k) {
        auto d8 = discrepancy(IntegralKind::HCIZ, 8, k, 2);
        CHECK(d8.coefficient(1, {Partition({1}), Partition({1})}) == 0);
    }
    CHECK_THROWS(discrepancy(IntegralKind::HCIZ, 2, 0, 4));  // requires N >= D

    // fixed coefficient ratio across doubling N approaches 1/4
    PartitionPair key{Partition({2}), Partition({2})};
    Rational d16 = normalized_coefficient(discrepancy(IntegralKind::HCIZ, 16, 0, 2), 2, key, 16);
    Rational d32 = normalized_coefficient(discrepancy(IntegralKind::HCIZ, 32, 0, 2), 2, key, 32);
    Rational ratio = d32 / d16;
    CHECK(ratio > rat(1, 5));
    CHECK(ratio < rat(1, 3));
}

TEST_CASE("genus ladder converges to the log coefficients") {
    int N = 6, D = 3;
    auto logI = assemble_I(N, D).log();
    // warm the connected tables to their largest step count up front
    for (int d = 1; d <= D; ++d)
        hurwitz_connected(Partition::one_column(d), Partition::one_column(d), 40);
    for (int d = 1; d <= D; ++d) {
        auto parts = enumerate_partitions(d);
        for (const Partition& alpha : parts)
            for (const Partition& beta : parts) {
                Rational L = normalized_coefficient(logI, d, {alpha, beta}, N);
                Rational sum = 0;
                int sign = (alpha.rows() + beta.rows()) % 2 == 0 ? 1 : -1;
                for (int g = 0; g <= 40; ++g)
                    sum += Rational(sign) * pow_rat(Rational(N), 2 - 2 * g) *
                           Rational(hurwitz_connected(alpha, beta, g));
                Rational err = L - sum;
                if (err < 0) err = -err;
                // tail after genus 40 decays like (pole factor / N^2)^g
                CHECK(err < pow_rat(rat(1, N), 40));
            }
    }
}

TEST_CASE("stable factorization has hbar order at least 2k") {
    const int R = 8;
    for (int D = 1; D <= 3; ++D) {
        auto walks = stable_walk_series(D, R);
        for (int k = 0; k <= 2; ++k) {
            auto expo = stable_genus_exponent(k, D, R).exp();
            auto ratio = walks.div(expo);
            auto defect = StringSeries<HbarPoly>::one(D, SeriesVariant::Pair,
                                                      HbarPoly(R, Rational(1))) -
                          ratio;
            for (int d = 1; d <= D; ++d)
                for (const auto& [key, poly] : defect.level(d))
                    CHECK(poly.low_order() >= 2 * k);
            // and the quotient equals the exponential of the genus tail
            CHECK(ratio == stable_genus_tail(k, D, R).exp());
        }
    }
}

TEST_CASE("stable factorization exposes connected counts just above the cutoff") {
    const int R = 8, D = 3;
    auto walks = stable_walk_series(D, R);
    for (int k = 0; k <= 1; ++k) {
        auto ratio = walks.div(stable_genus_exponent(k, D, R).exp());
        for (int d = 1; d <= D; ++d) {
            Rational dfact(factorial(static_cast<unsigned>(d)));
            auto parts = enumerate_partitions(d);
            for (const Partition& alpha : parts)
                for (const Partition& beta : parts) {
                    HbarPoly poly = ratio.coefficient(d, {alpha, beta});
                    // genus k+1 .. 2k+1 terms must be the connected numbers
                    for (int g = k + 1; g <= 2 * k + 1; ++g) {
                        int r = riemann_hurwitz_steps(g, alpha, beta);
                        if (r < 0 || r > R) continue;
                        CHECK(to_integer(poly[r] * dfact) ==
                              hurwitz_connected(alpha, beta, g));
                    }
                }
        }
    }
}

TEST_CASE("free energy evaluation obeys the coefficient domination bound") {
    Rational eps = rat(1, 20);
    for (int g = 0; g <= 1; ++g) {
        int N = 4, D = 4;
        auto fg = free_energy(IntegralKind::HCIZ, N, g, D);
        Rational bound = 0;
        for (int d = 1; d <= D; ++d) {
            Rational level = 0;
            auto parts = enumerate_partitions(d);
            for (const Partition& alpha : parts)
                for (const Partition& beta : parts)
                    level += Rational(hurwitz_connected(alpha, beta, g));
            bound += pow_rat(eps, d) / Rational(factorial(static_cast<unsigned>(d))) * level;
        }
        for (int m = 0; m < 5; ++m) {
            const auto& pool = verify::unit_pool();
            GaussianRational z = eps * pool[(3 * m + 2) % pool.size()];
            std::vector<GaussianRational> a, b;
            for (int i = 0; i < N; ++i) {
                a.push_back(pool[(m + i) % pool.size()]);
                b.push_back(pool[(2 * m + 3 * i + 1) % pool.size()]);
            }
            GaussianRational value = evaluate(fg, z, a, b);
            CHECK(value.abs2() <= bound * bound);
        }
    }
}
