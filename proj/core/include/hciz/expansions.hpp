#pragma once

#include "hciz/monotone.hpp"
#include "hciz/string_series.hpp"

namespace hciz {

enum class IntegralKind { HCIZ, BGW };

/// String expansion of I_N truncated at degree D: degree-d coefficient at
/// (alpha, beta) is (1/d!) P(LIS_d <= N) < omega_alpha Omega_N^{-1} omega_beta >,
/// so that evaluate() against z and raw power sums reproduces the integral's
/// partial sums.
StringSeries<Rational> assemble_I(int N, int D);

/// Same for J_N (single variant, z-exponent 2d at evaluation): degree-d
/// coefficient at beta is (1/d!) N^d P(LIS_d <= N) < Omega_N^{-1} omega_beta >.
StringSeries<Rational> assemble_J(int N, int D);

/// String polynomial: the LIS factor replaced by the step function, i.e.
/// coefficients divided by P(LIS_d <= N) for d <= floor(N^2/4) and zeroed
/// above the cutoff.
StringSeries<Rational> string_polynomial(const StringSeries<Rational>& s, int N);

/// Genus-g free energy at numeric N: the series whose evaluation is
/// F_N^{(g)} (resp. G_N^{(g)}), with the 1/d!, sign, and 1/N^{ell} weights
/// folded into the coefficients.
StringSeries<Rational> free_energy(IntegralKind kind, int N, int g, int D);

/// Reporting normalization: multiplies a plain series coefficient by
/// d! N^{ell(alpha)+ell(beta)}. Applied to a series logarithm it yields
/// L_N(alpha, beta); applied to a discrepancy series it yields
/// Delta_N^{(k)}(alpha, beta).
Rational normalized_coefficient(const StringSeries<Rational>& s, int d, const PartitionPair& key, int N);

/// L_N table for one degree, canonical key order.
std::map<PartitionPair, Rational, PairRevLexLess> log_coeffs(const StringSeries<Rational>& s,
                                                             int N, int d);

/// Discrepancy series Delta_N^{(k)} assembled to degree D (requires N >= D,
/// where the Feynman expansion converges and the comparison is exact):
/// N^{2k-2} (log of the string expansion minus the genus-<=k candidates).
StringSeries<Rational> discrepancy(IntegralKind kind, int N, int k, int D);

}  // namespace hciz
