#pragma once

#include <vector>

#include "hciz/characters.hpp"
#include "hciz/plancherel.hpp"
#include "hciz/string_series.hpp"

namespace hciz {

/// Schur polynomial value through the character expansion over power sums,
/// s_lambda = sum_alpha chi_alpha(lambda) p_alpha / z_alpha. Valid in any
/// number of variables; vanishes when ell(lambda) exceeds the variable count.
template <class Scalar>
Scalar schur_eval(const Partition& lambda, const std::vector<Scalar>& x) {
    int d = lambda.cells();
    if (d == 0) return scalar_from_rational<Scalar>(Rational(1));
    auto moments = power_sums(x, d);
    Scalar total = scalar_from_rational<Scalar>(Rational(0));
    for (const Partition& alpha : enumerate_partitions(d)) {
        Integer chi = character(alpha, lambda);
        if (chi == 0) continue;
        Rational coeff(chi);
        coeff /= Rational(centralizer_order(alpha));
        total += scalar_from_rational<Scalar>(coeff) * power_sum_product(alpha, moments);
    }
    return total;
}

/// Degree coefficients of the HCIZ character expansion: entry d is the
/// coefficient of z^d, (1/d!) N^d sum over lambda (at most N rows) of
/// s_lambda(a) s_lambda(b) dim V / dim W. Entry 0 is 1.
template <class Scalar>
std::vector<Scalar> hciz_degree_coefficients(const std::vector<Scalar>& a,
                                             const std::vector<Scalar>& b, int D) {
    if (a.size() != b.size()) throw std::invalid_argument("hciz: spectra length mismatch");
    int N = static_cast<int>(a.size());
    std::vector<Scalar> out{scalar_from_rational<Scalar>(Rational(1))};
    for (int d = 1; d <= D; ++d) {
        Scalar sum = scalar_from_rational<Scalar>(Rational(0));
        for (const Partition& lambda : enumerate_partitions(d, std::min(N, d))) {
            Rational dims(dim_sym(lambda));
            dims /= Rational(dim_gl(lambda, N));
            sum += scalar_from_rational<Scalar>(dims) * schur_eval(lambda, a) *
                   schur_eval(lambda, b);
        }
        Rational pref = pow_rat(Rational(N), d) / Rational(factorial(static_cast<unsigned>(d)));
        out.push_back(scalar_from_rational<Scalar>(pref) * sum);
    }
    return out;
}

/// Degree coefficients of the BGW character expansion: entry d is the
/// coefficient of z^{2d}, (1/d!d!) N^{2d} sum of s_lambda(c) (dim V)^2 / dim W.
template <class Scalar>
std::vector<Scalar> bgw_degree_coefficients(const std::vector<Scalar>& c, int D) {
    int N = static_cast<int>(c.size());
    std::vector<Scalar> out{scalar_from_rational<Scalar>(Rational(1))};
    for (int d = 1; d <= D; ++d) {
        Scalar sum = scalar_from_rational<Scalar>(Rational(0));
        for (const Partition& lambda : enumerate_partitions(d, std::min(N, d))) {
            Integer dv = dim_sym(lambda);
            Rational dims(dv * dv);
            dims /= Rational(dim_gl(lambda, N));
            sum += scalar_from_rational<Scalar>(dims) * schur_eval(lambda, c);
        }
        Rational pref = pow_rat(Rational(N), 2 * d);
        Integer df = factorial(static_cast<unsigned>(d));
        pref /= Rational(df * df);
        out.push_back(scalar_from_rational<Scalar>(pref) * sum);
    }
    return out;
}

/// Partial sum of the character expansion of I_N to degree D.
template <class Scalar>
Scalar hciz_char(const Scalar& z, const std::vector<Scalar>& a, const std::vector<Scalar>& b,
                 int D) {
    auto coeffs = hciz_degree_coefficients(a, b, D);
    Scalar total = scalar_from_rational<Scalar>(Rational(0));
    Scalar zpow = scalar_from_rational<Scalar>(Rational(1));
    for (int d = 0; d <= D; ++d) {
        if (d > 0) zpow = zpow * z;
        total += zpow * coeffs[d];
    }
    return total;
}

/// Partial sum of the character expansion of J_N to degree D (in z^{2d}).
template <class Scalar>
Scalar bgw_char(const Scalar& z, const std::vector<Scalar>& c, int D) {
    auto coeffs = bgw_degree_coefficients(c, D);
    Scalar z2 = z * z;
    Scalar total = scalar_from_rational<Scalar>(Rational(0));
    Scalar zpow = scalar_from_rational<Scalar>(Rational(1));
    for (int d = 0; d <= D; ++d) {
        if (d > 0) zpow = zpow * z2;
        total += zpow * coeffs[d];
    }
    return total;
}

/// External-field eigenvalue lists for the exact paths.
struct Spectrum {
    std::vector<GaussianRational> a;
    std::vector<GaussianRational> b;
    std::vector<GaussianRational> c;
};

/// Prop-style bound check at one degree: |I_N(d)| <= N^{2d} on (a, b) and
/// |J_N(d)| <= P(LIS_d <= N) N^{2d} on c. Requires every entry to have
/// modulus at most one.
bool string_coeff_bound_check(const Spectrum& spec, int d, int N);

}  // namespace hciz
