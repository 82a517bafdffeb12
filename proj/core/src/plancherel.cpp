#include "hciz/plancherel.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>
#include <stdexcept>
#include <vector>

namespace hciz {

namespace {
std::map<std::pair<int, int>, Integer> g_sn_memo;
std::mutex g_sn_mutex;
}  // namespace

Integer restricted_count(int d, int N) {
    if (d < 0 || N < 1) throw std::invalid_argument("restricted_count: need d >= 0, N >= 1");
    std::pair<int, int> key{d, std::min(N, d)};
    {
        std::lock_guard<std::mutex> lock(g_sn_mutex);
        auto it = g_sn_memo.find(key);
        if (it != g_sn_memo.end()) return it->second;
    }
    Integer total = 0;
    for (const Partition& lambda : enumerate_partitions(d, key.second)) {
        Integer dv = dim_sym(lambda);
        total += dv * dv;
    }
    std::lock_guard<std::mutex> lock(g_sn_mutex);
    g_sn_memo.emplace(key, total);
    return total;
}

Rational plancherel_weight(const Partition& lambda, int N) {
    if (lambda.rows() > N) throw std::invalid_argument("plancherel_weight: ell(lambda) > N");
    Integer dv = dim_sym(lambda);
    Rational w(dv * dv);
    w /= Rational(restricted_count(lambda.cells(), N));
    return w;
}

Rational lis_probability(int d, int N) {
    if (d < 1) return 1;
    Rational p(restricted_count(d, N));
    p /= Rational(factorial(static_cast<unsigned>(d)));
    return p;
}

namespace {
int patience_lis(const std::vector<int>& perm) {
    std::vector<int> tops;
    for (int x : perm) {
        auto it = std::lower_bound(tops.begin(), tops.end(), x);
        if (it == tops.end())
            tops.push_back(x);
        else
            *it = x;
    }
    return static_cast<int>(tops.size());
}
}  // namespace

Rational lis_bruteforce(int d, int N) {
    if (d > 9) throw std::invalid_argument("lis_bruteforce: guarded at d <= 9");
    if (d < 1) return 1;
    std::vector<int> perm(d);
    std::iota(perm.begin(), perm.end(), 1);
    long hits = 0, total = 0;
    do {
        ++total;
        if (patience_lis(perm) <= N) ++hits;
    } while (std::next_permutation(perm.begin(), perm.end()));
    Rational p(hits, total);
    p.canonicalize();
    return p;
}

ContentPoly ContentPoly::one() { return {Kind::One, 0, Rational(0)}; }
ContentPoly ContentPoly::omega(int N) { return {Kind::Omega, N, Rational(0)}; }
ContentPoly ContentPoly::omega_inverse(int N) { return {Kind::OmegaInverse, N, Rational(0)}; }
ContentPoly ContentPoly::psi(Rational hbar) { return {Kind::Psi, 0, std::move(hbar)}; }
ContentPoly ContentPoly::elementary(int r) { return {Kind::Elementary, r, Rational(0)}; }
ContentPoly ContentPoly::complete(int r) { return {Kind::Complete, r, Rational(0)}; }

Rational ContentPoly::operator()(const Partition& lambda) const {
    switch (kind_) {
        case Kind::One:
            return 1;
        case Kind::Omega:
        case Kind::OmegaInverse: {
            if (lambda.rows() > n_)
                throw std::invalid_argument("Omega_N: ell(lambda) > N would hit a pole");
            Rational prod = 1;
            for (int c : cell_stats(lambda).contents) {
                Rational f(n_ + c, n_);
                f.canonicalize();
                prod *= f;
            }
            return kind_ == Kind::Omega ? prod : Rational(1) / prod;
        }
        case Kind::Psi: {
            Rational prod = 1;
            for (int c : cell_stats(lambda).contents) prod *= Rational(1) - hbar_ * c;
            return prod;
        }
        case Kind::Elementary:
            return Rational(content_sym(lambda, n_, SymKind::Elementary));
        case Kind::Complete:
            return Rational(content_sym(lambda, n_, SymKind::Complete));
    }
    throw std::logic_error("unreachable");
}

Integer content_sym(const Partition& lambda, int r, SymKind kind) {
    if (r < 0) throw std::invalid_argument("content_sym: r must be nonnegative");
    if (r == 0) return 1;
    std::vector<int> contents = cell_stats(lambda).contents;
    if (kind == SymKind::Elementary && r > lambda.cells()) return 0;
    // dynamic programming over the content multiset, O(r d)
    std::vector<Integer> acc(r + 1, 0);
    acc[0] = 1;
    if (kind == SymKind::Elementary) {
        for (int c : contents)
            for (int k = r; k >= 1; --k) acc[k] += Integer(c) * acc[k - 1];
    } else {
        for (int c : contents)
            for (int k = 1; k <= r; ++k) acc[k] += Integer(c) * acc[k - 1];
    }
    return acc[r];
}

Rational expect(const Partition& alpha, const Partition& beta, const ContentPoly& w, int N) {
    if (alpha.cells() != beta.cells()) throw std::invalid_argument("expect: |alpha| != |beta|");
    int d = alpha.cells();
    Rational norm(restricted_count(d, N));
    Rational total = 0;
    for (const Partition& lambda : enumerate_partitions(d, std::min(N, d))) {
        Integer dv = dim_sym(lambda);
        Rational term = omega(alpha, lambda) * w(lambda) * omega(beta, lambda);
        term *= Rational(dv * dv);
        total += term;
    }
    return total / norm;
}

std::pair<Rational, Rational> expect_split(const Partition& alpha, const Partition& beta, int N) {
    if (alpha.cells() != beta.cells()) throw std::invalid_argument("expect_split: |alpha| != |beta|");
    int d = alpha.cells();
    ContentPoly w = ContentPoly::omega_inverse(N);
    Rational norm(restricted_count(d, N));
    Rational narrow = 0, wide = 0;
    for (const Partition& lambda : enumerate_partitions(d, std::min(N, d))) {
        Integer dv = dim_sym(lambda);
        Rational term = omega(alpha, lambda) * w(lambda) * omega(beta, lambda);
        term *= Rational(dv * dv);
        (lambda.part(0) <= N ? narrow : wide) += term;
    }
    return {narrow / norm, wide / norm};
}

}  // namespace hciz
