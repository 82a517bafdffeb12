#include <doctest.h>

#include <vector>

#include "hciz/monotone.hpp"
#include "hciz/plancherel.hpp"

using namespace hciz;

TEST_CASE("restricted plancherel weights sum to one") {
    for (int d = 1; d <= 8; ++d)
        for (int N = 1; N <= d; ++N) {
            Rational total = 0;
            for (const Partition& lam : enumerate_partitions(d, N))
                total += plancherel_weight(lam, N);
            CHECK(total == 1);
        }
}

TEST_CASE("lis probability examples") {
    CHECK(lis_probability(3, 3) == 1);
    CHECK(lis_probability(2, 5) == 1);
    CHECK(lis_probability(3, 2) == rat(5, 6));
    CHECK(lis_probability(2, 1) == rat(1, 2));
    CHECK(lis_bruteforce(3, 2) == rat(5, 6));
    CHECK(lis_bruteforce(4, 1) == rat(1, 24));
    CHECK(lis_bruteforce(1, 1) == 1);
    CHECK_THROWS(lis_bruteforce(10, 2));
}

TEST_CASE("lis distribution equals brute force") {
    for (int d = 1; d <= 6; ++d)
        for (int N = 1; N <= d; ++N) CHECK(lis_probability(d, N) == lis_bruteforce(d, N));
}

TEST_CASE("row restriction equals first-part restriction") {
    for (int d = 1; d <= 8; ++d)
        for (int N = 1; N <= d; ++N) {
            Integer rows = 0, cols = 0;
            for (const Partition& lam : enumerate_partitions(d)) {
                Integer dv = dim_sym(lam);
                if (lam.rows() <= N) rows += dv * dv;
                if (lam.part(0) <= N) cols += dv * dv;
            }
            CHECK(rows == cols);
        }
}

TEST_CASE("content symmetric polynomial values") {
    for (int d = 0; d <= 5; ++d)
        for (const Partition& lam : enumerate_partitions(d))
            CHECK(content_sym(lam, 0, SymKind::Complete) == 1);
    CHECK(content_sym(Partition({2, 1}), 2, SymKind::Complete) == 1);
    CHECK(content_sym(Partition({3}), 2, SymKind::Complete) == 7);
    CHECK(content_sym(Partition({2, 1}), 4, SymKind::Elementary) == 0);  // r > d
    CHECK(content_sym(Partition({3}), 2, SymKind::Elementary) == 2);     // e2(0,1,2)
}

TEST_CASE("psi at hbar = -1/N recovers omega_N") {
    for (int d = 1; d <= 8; ++d)
        for (int N : {d, d + 2}) {
            ContentPoly om = ContentPoly::omega(N);
            ContentPoly psi = ContentPoly::psi(rat(-1, N));
            for (const Partition& lam : enumerate_partitions(d, N)) CHECK(om(lam) == psi(lam));
        }
}

TEST_CASE("psi expands through elementary content polynomials") {
    // Psi_h = sum_r (-h)^r e_r at sampled rational h
    Rational h = rat(2, 7);
    for (const Partition& lam : enumerate_partitions(5)) {
        Rational direct = ContentPoly::psi(h)(lam);
        Rational expanded = 0;
        for (int r = 0; r <= lam.cells(); ++r)
            expanded += pow_rat(-h, r) * Rational(content_sym(lam, r, SymKind::Elementary));
        CHECK(direct == expanded);
    }
}

TEST_CASE("omega_N values") {
    ContentPoly om2 = ContentPoly::omega(2);
    CHECK(om2(Partition({1})) == 1);
    CHECK(om2(Partition({2})) == rat(3, 2));
    ContentPoly om3 = ContentPoly::omega(3);
    CHECK(om3(Partition({2, 1})) == rat(8, 9));
    CHECK_THROWS(om2(Partition({1, 1, 1})));
}

TEST_CASE("expectation orthogonality and examples") {
    for (int d = 1; d <= 7; ++d) {
        auto parts = enumerate_partitions(d);
        for (const Partition& alpha : parts)
            for (const Partition& beta : parts) {
                Rational e = expect(alpha, beta, ContentPoly::one(), d);
                CHECK(e == (alpha == beta ? Rational(class_size(alpha)) : Rational(0)));
            }
    }
    CHECK(expect(Partition({2}), Partition({2}), ContentPoly::omega_inverse(2), 2) == rat(4, 3));
    CHECK(expect(Partition({1, 1, 1}), Partition({1, 1, 1}), ContentPoly::complete(2), 3) == 3);
    CHECK_THROWS(expect(Partition({2}), Partition({1}), ContentPoly::one(), 2));
}

TEST_CASE("expect_split components") {
    for (int d = 1; d <= 5; ++d)
        for (int N = 1; N <= d + 1; ++N) {
            auto parts = enumerate_partitions(d);
            for (const Partition& alpha : parts) {
                auto [narrow, wide] = expect_split(alpha, alpha, N);
                CHECK(narrow + wide ==
                      expect(alpha, alpha, ContentPoly::omega_inverse(N), N));
                if (d <= N) CHECK(wide == 0);
            }
        }
    auto [n5, w5] = expect_split(Partition::one_column(5), Partition::one_column(5), 2);
    CHECK(w5 > 0);
    // qualitative smallness of the wide component at a mid-sized instance
    auto [n54, w54] = expect_split(Partition::one_column(5), Partition::one_column(5), 4);
    CHECK(w54 < n54);
}

TEST_CASE("feynman partial sums converge at the pole-radius rate") {
    // remainders are same-signed tails, so they weakly decrease; the two-step
    // decay rate tends to ((d-1)/N)^2
    for (int d : {3, 4, 5}) {
        auto parts = enumerate_partitions(d);
        for (int N : {d, 2 * d}) {
            for (const Partition& alpha : parts) {
                const Partition& beta = parts[(alpha.rows() * 3) % parts.size()];
                Rational full = expect(alpha, beta, ContentPoly::omega_inverse(N), N);
                std::vector<Rational> rems;
                Rational partial = 0;
                for (int r = 0; r <= 16; ++r) {
                    partial += pow_rat(rat(-1, N), r) * Rational(walks_jm(alpha, beta, r));
                    Rational rem = full - partial;
                    rems.push_back(rem < 0 ? Rational(-rem) : rem);
                }
                for (size_t i = 0; i + 1 < rems.size(); ++i) CHECK(rems[i + 1] <= rems[i]);
                Rational rate = pow_rat(Rational(d - 1), 2) / pow_rat(Rational(N), 2);
                if (rems[14] != 0) {
                    Rational last_ratio = rems[16] / rems[14];
                    CHECK(last_ratio >= rate / 4);
                    CHECK(last_ratio <= 2 * rate);
                }
                // geometric decay at the pole-radius rate, up to a modest
                // constant absorbing the pre-asymptotic terms
                CHECK(rems[16] <= 32 * rems[0] * pow_rat(rate, 8));
            }
        }
    }
}
