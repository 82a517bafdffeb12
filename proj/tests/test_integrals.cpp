#include <doctest.h>

#include <algorithm>
#include <complex>
#include <numbers>
#include <random>
#include <vector>

#include "hciz/haar_mc.hpp"
#include "hciz/integrals.hpp"
#include "hciz/verify.hpp"

using namespace hciz;

namespace {

// throwaway bialternant oracle: s_lambda = det(x_i^{lambda_j + n - j}) / Vandermonde
GaussianRational bialternant(const Partition& lambda, const std::vector<GaussianRational>& x) {
    int n = static_cast<int>(x.size());
    auto det = [&](const std::vector<int>& exps) {
        // Laplace expansion; n <= 5 here
        std::vector<int> idx(n);
        for (int i = 0; i < n; ++i) idx[i] = i;
        GaussianRational total;
        int parity;
        std::vector<int> perm = idx;
        std::sort(perm.begin(), perm.end());
        do {
            parity = 0;
            for (int i = 0; i < n; ++i)
                for (int j = i + 1; j < n; ++j)
                    if (perm[i] > perm[j]) ++parity;
            GaussianRational prod{Rational(1)};
            for (int i = 0; i < n; ++i) {
                GaussianRational p{Rational(1)};
                for (int e = 0; e < exps[perm[i]]; ++e) p *= x[i];
                prod *= p;
            }
            total += parity % 2 == 0 ? prod : GaussianRational() - prod;
        } while (std::next_permutation(perm.begin(), perm.end()));
        return total;
    };
    std::vector<int> num_exps(n), den_exps(n);
    for (int j = 0; j < n; ++j) {
        num_exps[j] = lambda.part(j) + n - 1 - j;
        den_exps[j] = n - 1 - j;
    }
    GaussianRational num = det(num_exps), den = det(den_exps);
    return num * den.inverse();
}

std::vector<GaussianRational> distinct_rationals(std::mt19937_64& rng, int n) {
    std::uniform_int_distribution<int> num(1, 12);
    std::vector<GaussianRational> out;
    while (static_cast<int>(out.size()) < n) {
        GaussianRational cand{rat(num(rng), 5), Rational(0)};
        bool dup = false;
        for (const auto& v : out)
            if (v == cand) dup = true;
        if (!dup) out.push_back(cand);
    }
    return out;
}

}  // namespace

TEST_CASE("schur evaluation basics") {
    std::vector<GaussianRational> x{GaussianRational(rat(1, 2)), GaussianRational(rat(2, 3))};
    GaussianRational s1 = schur_eval(Partition({1}), x);
    CHECK(s1 == GaussianRational(rat(1, 2) + rat(2, 3)));
    GaussianRational s11 = schur_eval(Partition({1, 1}), x);
    CHECK(s11 == GaussianRational(rat(1, 2) * rat(2, 3)));

    std::vector<GaussianRational> ones3(3, GaussianRational(Rational(1)));
    CHECK(schur_eval(Partition({2, 1}), ones3) == GaussianRational(Rational(8)));

    // vanishes when the variable count is below the row count
    CHECK(schur_eval(Partition({1, 1, 1}), x) == GaussianRational());
}

TEST_CASE("schur evaluation agrees with the bialternant oracle") {
    std::mt19937_64 rng(5150);
    for (int n = 2; n <= 5; ++n) {
        auto x = distinct_rationals(rng, n);
        for (int d = 1; d <= 5; ++d)
            for (const Partition& lam : enumerate_partitions(d, n))
                CHECK(schur_eval(lam, x) == bialternant(lam, x));
    }
}

TEST_CASE("hciz trivial fields and N=1 closed forms") {
    for (int N = 1; N <= 4; ++N) {
        std::vector<GaussianRational> ones(N, GaussianRational(Rational(1)));
        auto coeffs = hciz_degree_coefficients(ones, ones, 5);
        for (int d = 0; d <= 5; ++d)
            CHECK(coeffs[d] == GaussianRational(pow_rat(Rational(N), 2 * d) /
                                                Rational(factorial(static_cast<unsigned>(d)))));
    }
    // N = 1: partial sums of exp(z a b)
    std::vector<GaussianRational> a{GaussianRational(rat(2, 3))};
    std::vector<GaussianRational> b{GaussianRational(rat(3, 5))};
    auto coeffs = hciz_degree_coefficients(a, b, 6);
    for (int d = 0; d <= 6; ++d)
        CHECK(coeffs[d] == GaussianRational(pow_rat(rat(2, 3) * rat(3, 5), d) /
                                            Rational(factorial(static_cast<unsigned>(d)))));
}

TEST_CASE("hciz symmetry in the spectra") {
    std::mt19937_64 rng(31337);
    auto a = verify::random_gaussian_spectrum(rng, 4);
    auto b = verify::random_gaussian_spectrum(rng, 4);
    auto ab = hciz_degree_coefficients(a, b, 4);
    auto ba = hciz_degree_coefficients(b, a, 4);
    auto a_perm = a;
    std::rotate(a_perm.begin(), a_perm.begin() + 1, a_perm.end());
    auto pa = hciz_degree_coefficients(a_perm, b, 4);
    for (int d = 0; d <= 4; ++d) {
        CHECK(ab[d] == ba[d]);
        CHECK(ab[d] == pa[d]);
    }
}

TEST_CASE("gessel-rains identity at trivial fields") {
    for (int d = 1; d <= 8; ++d)
        for (int N = 1; N <= d; ++N) {
            std::vector<GaussianRational> ones(N, GaussianRational(Rational(1)));
            auto coeffs = bgw_degree_coefficients(ones, d);
            GaussianRational want{pow_rat(Rational(N), 2 * d) * lis_probability(d, N) /
                                  Rational(factorial(static_cast<unsigned>(d)))};
            CHECK(coeffs[d] == want);
        }
}

TEST_CASE("bgw at N=1 matches angular quadrature") {
    // J_1(z; a, b) = (1/2pi) int exp(z(a e^{i t} + b e^{-i t})) dt
    double a = 0.8, b = 0.55, z = 0.7;
    auto coeffs = bgw_degree_coefficients(std::vector<Cx>{Cx(a * b, 0)}, 10);
    Cx partial(0, 0);
    double zp = 1;
    for (int d = 0; d <= 10; ++d) {
        partial += zp * coeffs[d];
        zp *= z * z;
    }
    const int M = 20000;
    Cx quad(0, 0);
    for (int m = 0; m < M; ++m) {
        double t = 2 * std::numbers::pi * (m + 0.5) / M;
        quad += std::exp(z * (a * Cx(std::cos(t), std::sin(t)) + b * Cx(std::cos(t), -std::sin(t))));
    }
    quad /= static_cast<double>(M);
    CHECK(std::abs(partial - quad) < 1e-8);
}

TEST_CASE("degree bound checks") {
    std::mt19937_64 rng(2222);
    for (int N = 1; N <= 4; ++N) {
        Spectrum spec{verify::random_unit_spectrum(rng, N), verify::random_unit_spectrum(rng, N),
                      verify::random_unit_spectrum(rng, N)};
        for (int d = 1; d <= 4; ++d) CHECK(string_coeff_bound_check(spec, d, N));
    }
    Spectrum bad{{GaussianRational(Rational(2))},
                 {GaussianRational(Rational(1))},
                 {GaussianRational(Rational(1))}};
    CHECK_THROWS(string_coeff_bound_check(bad, 1, 1));
}
