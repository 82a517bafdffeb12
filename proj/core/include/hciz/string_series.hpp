#pragma once

#include <algorithm>
#include <complex>
#include <map>
#include <stdexcept>
#include <vector>

#include "hciz/hbar_poly.hpp"
#include "hciz/partition.hpp"
#include "hciz/rational.hpp"

namespace hciz {

/// Pair: coefficients indexed by (alpha, beta), both of the grading degree
/// (the HCIZ shape). Single: indexed by beta alone, with the empty partition
/// as placeholder first component (the BGW shape; z-exponent 2d at
/// evaluation time).
enum class SeriesVariant { Pair, Single };

/// Graded series in z with partition-(pair-)indexed coefficients, truncated
/// at a fixed top degree. Multiplication concatenates index partitions
/// (power-sum basis multiplicativity). Coeff is Rational in the numeric-N
/// mode or HbarPoly in the symbolic-hbar mode.
template <class Coeff>
class StringSeries {
  public:
    using Level = std::map<PartitionPair, Coeff, PairRevLexLess>;

    StringSeries(int max_degree, SeriesVariant variant, Coeff unit)
        : levels_(max_degree + 1), variant_(variant), unit_(std::move(unit)) {}

    int max_degree() const { return static_cast<int>(levels_.size()) - 1; }
    SeriesVariant variant() const { return variant_; }
    const Coeff& unit() const { return unit_; }
    const Level& level(int d) const { return levels_.at(d); }

    PartitionPair key(Partition alpha, Partition beta) const {
        if (variant_ == SeriesVariant::Single && !alpha.empty())
            throw std::invalid_argument("single-variant keys carry only beta");
        return {std::move(alpha), std::move(beta)};
    }

    Coeff coefficient(int d, const PartitionPair& k) const {
        auto it = levels_.at(d).find(k);
        return it == levels_.at(d).end() ? zero() : it->second;
    }

    void set(int d, PartitionPair k, Coeff c) {
        check_key(d, k);
        if (is_zero_coeff(c))
            levels_.at(d).erase(k);
        else
            levels_.at(d)[std::move(k)] = std::move(c);
    }

    void add(int d, const PartitionPair& k, const Coeff& c) {
        check_key(d, k);
        auto [it, inserted] = levels_.at(d).try_emplace(k, c);
        if (!inserted) it->second += c;
        if (is_zero_coeff(it->second)) levels_.at(d).erase(it);
    }

    static StringSeries one(int max_degree, SeriesVariant variant, Coeff unit) {
        StringSeries s(max_degree, variant, unit);
        s.levels_[0][PartitionPair{}] = s.unit_;
        return s;
    }

    bool constant_term_is(const Rational& v) const {
        Coeff want = unit_;
        want *= v;
        auto it = levels_[0].find(PartitionPair{});
        if (it == levels_[0].end()) return v == 0;
        Coeff got = it->second;
        got -= want;
        return is_zero_coeff(got);
    }

    StringSeries& operator+=(const StringSeries& o) {
        check_compatible(o);
        for (int d = 0; d <= max_degree(); ++d)
            for (const auto& [k, c] : o.levels_[d]) add(d, k, c);
        return *this;
    }
    StringSeries& operator-=(const StringSeries& o) {
        check_compatible(o);
        for (int d = 0; d <= max_degree(); ++d)
            for (const auto& [k, c] : o.levels_[d]) {
                Coeff neg = c;
                neg *= Rational(-1);
                add(d, k, neg);
            }
        return *this;
    }
    friend StringSeries operator+(StringSeries a, const StringSeries& b) { return a += b; }
    friend StringSeries operator-(StringSeries a, const StringSeries& b) { return a -= b; }

    StringSeries& operator*=(const Rational& s) {
        for (auto& lvl : levels_)
            for (auto it = lvl.begin(); it != lvl.end();) {
                it->second *= s;
                it = is_zero_coeff(it->second) ? lvl.erase(it) : std::next(it);
            }
        return *this;
    }

    friend StringSeries operator*(const StringSeries& a, const StringSeries& b) {
        a.check_compatible(b);
        StringSeries r(a.max_degree(), a.variant_, a.unit_);
        for (int da = 0; da <= a.max_degree(); ++da)
            for (int db = 0; da + db <= b.max_degree(); ++db)
                accumulate_product(r, da + db, a.levels_[da], b.levels_[db]);
        return r;
    }

    /// Graded exponential via the derivative recurrence
    /// d S_d = sum_j j T_j S_{d-j}; requires zero constant term.
    StringSeries exp() const {
        if (!constant_term_is(0)) throw std::domain_error("series exp: constant term must be 0");
        StringSeries s = one(max_degree(), variant_, unit_);
        for (int d = 1; d <= max_degree(); ++d) {
            Level acc;
            for (int j = 1; j <= d; ++j)
                accumulate_scaled_product(acc, levels_[j], s.levels_[d - j], Rational(j));
            for (auto& [k, c] : acc) {
                c /= Rational(d);
                s.set(d, k, std::move(c));
            }
        }
        return s;
    }

    /// Graded logarithm, inverse of exp(); requires constant term 1.
    StringSeries log() const {
        if (!constant_term_is(1)) throw std::domain_error("series log: constant term must be 1");
        StringSeries t(max_degree(), variant_, unit_);
        for (int d = 1; d <= max_degree(); ++d) {
            Level acc;
            for (int j = 1; j < d; ++j)
                accumulate_scaled_product(acc, t.levels_[j], levels_[d - j], Rational(j));
            for (const auto& [k, c] : levels_[d]) t.add(d, k, c);
            for (const auto& [k, c] : acc) {
                Coeff sub = c;
                sub *= Rational(-1, d);
                t.add(d, k, sub);
            }
        }
        return t;
    }

    /// Graded division; requires the divisor to have constant term 1.
    StringSeries div(const StringSeries& b) const {
        check_compatible(b);
        if (!b.constant_term_is(1)) throw std::domain_error("series div: divisor constant term must be 1");
        StringSeries q(max_degree(), variant_, unit_);
        for (int d = 0; d <= max_degree(); ++d) {
            Level acc;
            for (int j = 1; j <= d; ++j)
                accumulate_scaled_product(acc, b.levels_[j], q.levels_[d - j], Rational(1));
            for (const auto& [k, c] : levels_[d]) q.add(d, k, c);
            for (const auto& [k, c] : acc) {
                Coeff sub = c;
                sub *= Rational(-1);
                q.add(d, k, sub);
            }
        }
        return q;
    }

    friend bool operator==(const StringSeries& a, const StringSeries& b) {
        if (a.max_degree() != b.max_degree() || a.variant_ != b.variant_) return false;
        StringSeries diff = a;
        diff -= b;
        for (const auto& lvl : diff.levels_)
            if (!lvl.empty()) return false;
        return true;
    }

  private:
    Coeff zero() const {
        Coeff z = unit_;
        z *= Rational(0);
        return z;
    }

    static bool is_zero_coeff(const Rational& c) { return c == 0; }
    static bool is_zero_coeff(const HbarPoly& c) { return c.is_zero(); }

    void check_key(int d, const PartitionPair& k) const {
        if (k.first.cells() + k.second.cells() != (variant_ == SeriesVariant::Pair ? 2 * d : d) ||
            (variant_ == SeriesVariant::Pair && k.first.cells() != d))
            throw std::invalid_argument("string series: key does not match degree");
        if (variant_ == SeriesVariant::Single && !k.first.empty())
            throw std::invalid_argument("single-variant keys carry only beta");
    }

    void check_compatible(const StringSeries& o) const {
        if (variant_ != o.variant_) throw std::invalid_argument("string series: variant mismatch");
        if (max_degree() != o.max_degree())
            throw std::invalid_argument("string series: max degree mismatch");
    }

    static Partition concat(const Partition& a, const Partition& b) {
        std::vector<int> parts;
        parts.reserve(a.rows() + b.rows());
        std::merge(a.parts().begin(), a.parts().end(), b.parts().begin(), b.parts().end(),
                   std::back_inserter(parts), std::greater<int>());
        return Partition(std::move(parts));
    }

    static void accumulate_product(StringSeries& out, int d, const Level& la, const Level& lb) {
        for (const auto& [ka, ca] : la)
            for (const auto& [kb, cb] : lb)
                out.add(d, {concat(ka.first, kb.first), concat(ka.second, kb.second)}, ca * cb);
    }

    static void accumulate_scaled_product(Level& out, const Level& la, const Level& lb,
                                          const Rational& scale) {
        for (const auto& [ka, ca] : la)
            for (const auto& [kb, cb] : lb) {
                Coeff prod = ca * cb;
                prod *= scale;
                PartitionPair k{concat(ka.first, kb.first), concat(ka.second, kb.second)};
                auto [it, inserted] = out.try_emplace(std::move(k), prod);
                if (!inserted) it->second += prod;
            }
    }

    std::vector<Level> levels_;
    SeriesVariant variant_;
    Coeff unit_;
};

template <class Scalar>
Scalar scalar_from_rational(const Rational& q);

template <>
inline GaussianRational scalar_from_rational<GaussianRational>(const Rational& q) {
    return GaussianRational(q);
}

template <>
inline std::complex<double> scalar_from_rational<std::complex<double>>(const Rational& q) {
    return {q.get_d(), 0.0};
}

/// Moments m_k = sum_i x_i^k for k = 0..kmax.
template <class Scalar>
std::vector<Scalar> power_sums(const std::vector<Scalar>& x, int kmax) {
    std::vector<Scalar> m(kmax + 1, scalar_from_rational<Scalar>(Rational(0)));
    m[0] = scalar_from_rational<Scalar>(Rational(static_cast<long>(x.size())));
    std::vector<Scalar> pw = x;
    for (int k = 1; k <= kmax; ++k) {
        Scalar s = scalar_from_rational<Scalar>(Rational(0));
        for (size_t i = 0; i < x.size(); ++i) {
            if (k > 1) pw[i] = pw[i] * x[i];
            s += pw[i];
        }
        m[k] = s;
    }
    return m;
}

template <class Scalar>
Scalar power_sum_product(const Partition& alpha, const std::vector<Scalar>& moments) {
    Scalar p = scalar_from_rational<Scalar>(Rational(1));
    for (int part : alpha.parts()) p = p * moments.at(part);
    return p;
}

/// Evaluate a numeric-mode series: sum_d z^d (z^{2d} for the single variant)
/// of sum over keys of coeff * p_alpha(a) p_beta(b). For the single variant,
/// pass the spectrum of C as `a`; `b` is ignored.
template <class Scalar>
Scalar evaluate(const StringSeries<Rational>& s, const Scalar& z, const std::vector<Scalar>& a,
                const std::vector<Scalar>& b = {}) {
    bool pair = s.variant() == SeriesVariant::Pair;
    if (pair && a.size() != b.size())
        throw std::invalid_argument("evaluate: eigenvalue list length mismatch");
    auto ma = power_sums(a, s.max_degree());
    auto mb = pair ? power_sums(b, s.max_degree()) : std::vector<Scalar>{};
    Scalar zstep = pair ? z : z * z;
    Scalar total = scalar_from_rational<Scalar>(Rational(0));
    Scalar zpow = scalar_from_rational<Scalar>(Rational(1));
    for (int d = 0; d <= s.max_degree(); ++d) {
        if (d > 0) zpow = zpow * zstep;
        Scalar lvl = scalar_from_rational<Scalar>(Rational(0));
        for (const auto& [k, c] : s.level(d)) {
            Scalar term = scalar_from_rational<Scalar>(c);
            term = term * power_sum_product(pair ? k.first : k.second, ma);
            if (pair) term = term * power_sum_product(k.second, mb);
            lvl += term;
        }
        total += zpow * lvl;
    }
    return total;
}

/// Per-degree values sum over keys of coeff * p p (no z power attached).
template <class Scalar>
std::vector<Scalar> evaluate_degree_terms(const StringSeries<Rational>& s,
                                          const std::vector<Scalar>& a,
                                          const std::vector<Scalar>& b = {}) {
    bool pair = s.variant() == SeriesVariant::Pair;
    if (pair && a.size() != b.size())
        throw std::invalid_argument("evaluate: eigenvalue list length mismatch");
    auto ma = power_sums(a, s.max_degree());
    auto mb = pair ? power_sums(b, s.max_degree()) : std::vector<Scalar>{};
    std::vector<Scalar> out;
    out.reserve(s.max_degree() + 1);
    for (int d = 0; d <= s.max_degree(); ++d) {
        Scalar lvl = scalar_from_rational<Scalar>(Rational(0));
        for (const auto& [k, c] : s.level(d)) {
            Scalar term = scalar_from_rational<Scalar>(c);
            term = term * power_sum_product(pair ? k.first : k.second, ma);
            if (pair) term = term * power_sum_product(k.second, mb);
            lvl += term;
        }
        out.push_back(lvl);
    }
    return out;
}

}  // namespace hciz
