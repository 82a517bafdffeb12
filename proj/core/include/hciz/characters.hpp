#pragma once

#include <map>
#include <vector>

#include "hciz/partition.hpp"

namespace hciz {

/// Irreducible character chi_alpha(lambda) of S(d), |alpha| = |lambda| = d,
/// by Murnaghan-Nakayama recursion (border strips of the largest part removed
/// first). Values are memoized for the process lifetime; lookups after the
/// first computation are cheap.
Integer character(const Partition& alpha, const Partition& lambda);

/// dim V^lambda = d! / prod hooks; equals the number of standard tableaux.
Integer dim_sym(const Partition& lambda);

/// dim W^lambda = prod (N + c) / h over cells; rejects ell(lambda) > N.
Integer dim_gl(const Partition& lambda, int N);

/// Central character omega_alpha(lambda) = |C_alpha| chi_alpha(lambda) / dim V^lambda.
Rational omega(const Partition& alpha, const Partition& lambda);

/// Full table chi_alpha(lambda) for alpha, lambda |- d in canonical order.
struct CharacterTable {
    int d;
    std::vector<Partition> classes;  // reverse-lexicographic
    std::map<PartitionPair, Integer, PairRevLexLess> values;  // (alpha, lambda) -> chi
};

CharacterTable character_table(int d);

}  // namespace hciz
