#include "hciz/expansions.hpp"

#include <stdexcept>

#include "hciz/plancherel.hpp"

namespace hciz {

StringSeries<Rational> assemble_I(int N, int D) {
    if (D < 1) throw std::invalid_argument("assemble_I: D >= 1");
    auto s = StringSeries<Rational>::one(D, SeriesVariant::Pair, Rational(1));
    for (int d = 1; d <= D; ++d) {
        ContentPoly w = ContentPoly::omega_inverse(N);
        Rational pref = lis_probability(d, N) / Rational(factorial(static_cast<unsigned>(d)));
        auto parts = enumerate_partitions(d);
        for (const Partition& alpha : parts)
            for (const Partition& beta : parts) {
                Rational c = pref * expect(alpha, beta, w, N);
                s.set(d, {alpha, beta}, std::move(c));
            }
    }
    return s;
}

StringSeries<Rational> assemble_J(int N, int D) {
    if (D < 1) throw std::invalid_argument("assemble_J: D >= 1");
    auto s = StringSeries<Rational>::one(D, SeriesVariant::Single, Rational(1));
    Partition empty;
    for (int d = 1; d <= D; ++d) {
        ContentPoly w = ContentPoly::omega_inverse(N);
        Rational pref = lis_probability(d, N) * pow_rat(Rational(N), d);
        pref /= Rational(factorial(static_cast<unsigned>(d)));
        Partition ones = Partition::one_column(d);
        for (const Partition& beta : enumerate_partitions(d)) {
            Rational c = pref * expect(ones, beta, w, N);
            s.set(d, {empty, beta}, std::move(c));
        }
    }
    return s;
}

StringSeries<Rational> string_polynomial(const StringSeries<Rational>& s, int N) {
    int cutoff = (N * N) / 4;
    StringSeries<Rational> out(s.max_degree(), s.variant(), Rational(1));
    for (int d = 0; d <= s.max_degree(); ++d) {
        if (d > cutoff) continue;
        Rational p = lis_probability(d, N);
        for (const auto& [k, c] : s.level(d)) out.set(d, k, c / p);
    }
    return out;
}

StringSeries<Rational> free_energy(IntegralKind kind, int N, int g, int D) {
    if (g < 0) throw std::invalid_argument("free_energy: g >= 0");
    bool pair = kind == IntegralKind::HCIZ;
    StringSeries<Rational> s(D, pair ? SeriesVariant::Pair : SeriesVariant::Single, Rational(1));
    Partition empty;
    for (int d = 1; d <= D; ++d) {
        Rational inv_dfact = Rational(1) / Rational(factorial(static_cast<unsigned>(d)));
        auto parts = enumerate_partitions(d);
        if (pair) {
            for (const Partition& alpha : parts)
                for (const Partition& beta : parts) {
                    Integer h = hurwitz_connected(alpha, beta, g);
                    if (h == 0) continue;
                    int ells = alpha.rows() + beta.rows();
                    Rational c = Rational(h) * inv_dfact / pow_rat(Rational(N), ells);
                    if (ells % 2 != 0) c = -c;
                    s.set(d, {alpha, beta}, std::move(c));
                }
        } else {
            for (const Partition& beta : parts) {
                Integer h = hurwitz_single(beta, g);
                if (h == 0) continue;
                Rational c = Rational(h) * inv_dfact / pow_rat(Rational(N), beta.rows());
                if ((d + beta.rows()) % 2 != 0) c = -c;
                s.set(d, {empty, beta}, std::move(c));
            }
        }
    }
    return s;
}

Rational normalized_coefficient(const StringSeries<Rational>& s, int d, const PartitionPair& key,
                           int N) {
    int ells = key.first.rows() + key.second.rows();
    return s.coefficient(d, key) * Rational(factorial(static_cast<unsigned>(d))) *
           pow_rat(Rational(N), ells);
}

std::map<PartitionPair, Rational, PairRevLexLess> log_coeffs(const StringSeries<Rational>& s,
                                                             int N, int d) {
    StringSeries<Rational> lg = s.log();
    std::map<PartitionPair, Rational, PairRevLexLess> out;
    for (const auto& [k, c] : lg.level(d)) out.emplace(k, normalized_coefficient(lg, d, k, N));
    return out;
}

StringSeries<Rational> discrepancy(IntegralKind kind, int N, int k, int D) {
    if (N < D)
        throw std::invalid_argument("discrepancy: requires N >= D (exact Feynman range)");
    StringSeries<Rational> delta =
        (kind == IntegralKind::HCIZ ? assemble_I(N, D) : assemble_J(N, D)).log();
    for (int g = 0; g <= k; ++g) {
        StringSeries<Rational> fg = free_energy(kind, N, g, D);
        fg *= pow_rat(Rational(N), 2 - 2 * g);
        delta -= fg;
    }
    delta *= pow_rat(Rational(N), 2 * k - 2);
    return delta;
}

}  // namespace hciz
