#pragma once

#include "hciz/partition.hpp"
#include "hciz/string_series.hpp"

namespace hciz {

/// Search-space guard for the depth-first walk enumerators.
struct WalkGuard {
    int max_cells = 6;
    int max_steps = 8;
};

/// Number of r-step monotone walks on S(d) from C_alpha to C_beta: steps are
/// transpositions (i j), i < j, multiplied left to right, with the larger
/// labels j weakly increasing along the walk. Exponential-time DFS, test
/// oracle only.
Integer walks_bruteforce(const Partition& alpha, const Partition& beta, int r,
                         const WalkGuard& guard = {});

/// Same count through the Jucys-Murphy route: the unrestricted Plancherel
/// expectation < omega_alpha f_r omega_beta >. Production path.
Integer walks_jm(const Partition& alpha, const Partition& beta, int r);

/// Monotone walks whose steps and endpoints together generate a transitive
/// subgroup of S(d) (checked as connectivity of the union of the start
/// cycles, step pairs, and end cycles). DFS oracle, same guards.
Integer hurwitz_bruteforce(const Partition& alpha, const Partition& beta, int r,
                           const WalkGuard& guard = {});

/// Connected count H^r(alpha, beta) extracted from the series logarithm of
/// the walk generating function; cached per degree.
Integer hurwitz_connected_steps(const Partition& alpha, const Partition& beta, int r);

/// Genus parameterization: H_g = H^{r_g} with r_g = 2g - 2 + ell + ell;
/// zero when r_g < 0.
Integer hurwitz_connected(const Partition& alpha, const Partition& beta, int g);

/// Monotone single Hurwitz number H_g(beta) = H_g(1^d, beta).
Integer hurwitz_single(const Partition& beta, int g);

/// Disconnected count H_g^bullet(alpha, beta) = W^{r_g}(alpha, beta);
/// the genus may be negative.
Integer hurwitz_disconnected(const Partition& alpha, const Partition& beta, int g);

/// Stable walk generating function truncated at z-degree D and hbar-order R:
/// degree-d coefficient at (alpha, beta) is (1/d!) sum_r hbar^r W^r(alpha, beta).
StringSeries<HbarPoly> stable_walk_series(int D, int R);

/// exp-ready genus exponent sum_{g<=k} hbar^{2g-2} F^{(g)} truncated at
/// (D, R): degree-d coefficient (1/d!) sum_{g<=k} hbar^{r_g} H_g(alpha, beta).
StringSeries<HbarPoly> stable_genus_exponent(int k, int D, int R);

/// Genus tail sum_{g>k} hbar^{2g-2} F^{(g)} truncated at (D, R).
StringSeries<HbarPoly> stable_genus_tail(int k, int D, int R);

}  // namespace hciz
