#pragma once

#include <utility>

#include "hciz/characters.hpp"
#include "hciz/partition.hpp"

namespace hciz {

/// |S_N(d)|: permutations of d with no increasing subsequence of length N+1,
/// computed as sum of (dim V^lambda)^2 over lambda |- d with at most N rows
/// (RSK). Equals d! once N >= d.
Integer restricted_count(int d, int N);

/// Restricted Plancherel weight (dim V^lambda)^2 / |S_N(d)|.
Rational plancherel_weight(const Partition& lambda, int N);

/// P(LIS_d <= N), exact.
Rational lis_probability(int d, int N);

/// Independent oracle: patience-sorting LIS over all d! permutations.
/// Guarded at d <= 9.
Rational lis_bruteforce(int d, int N);

/// Weight functions on Young diagrams entering Plancherel expectations:
/// the content products Omega_N and Psi_hbar and the elementary/complete
/// symmetric polynomials e_r, f_r evaluated on contents.
class ContentPoly {
  public:
    static ContentPoly one();
    static ContentPoly omega(int N);
    static ContentPoly omega_inverse(int N);
    static ContentPoly psi(Rational hbar);
    static ContentPoly elementary(int r);
    static ContentPoly complete(int r);

    Rational operator()(const Partition& lambda) const;

  private:
    enum class Kind { One, Omega, OmegaInverse, Psi, Elementary, Complete };
    ContentPoly(Kind k, int n, Rational h) : kind_(k), n_(n), hbar_(std::move(h)) {}
    Kind kind_;
    int n_;  // N for Omega variants, r for e_r/f_r
    Rational hbar_;
};

enum class SymKind { Elementary, Complete };

/// e_r or f_r on the content multiset of lambda; exact integer.
/// e_r vanishes for r > d; f_0 = e_0 = 1.
Integer content_sym(const Partition& lambda, int r, SymKind kind);

/// Plancherel expectation < omega_alpha . w . omega_beta > over lambda |- d
/// with at most N rows, against (dim V)^2 / |S_N(d)|.
Rational expect(const Partition& alpha, const Partition& beta, const ContentPoly& w, int N);

/// < Omega_N^{-1} omega_beta > split by lambda_1 <= N versus lambda_1 > N
/// (both within ell(lambda) <= N). Components sum to the full expectation;
/// the second vanishes when d <= N.
std::pair<Rational, Rational> expect_split(const Partition& alpha, const Partition& beta, int N);

}  // namespace hciz
