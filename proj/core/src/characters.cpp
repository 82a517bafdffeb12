#include "hciz/characters.hpp"

#include <algorithm>
#include <mutex>
#include <set>
#include <stdexcept>

namespace hciz {

namespace {

// First-column hook lengths ("beta numbers"): b_i = lambda_i + (ell - 1 - i).
// Removing a border strip of length k is replacing some b with b - k when
// b - k is free; the strip height is the number of betas passed over.
std::vector<int> beta_numbers(const Partition& lambda) {
    std::vector<int> b(lambda.rows());
    int ell = lambda.rows();
    for (int i = 0; i < ell; ++i) b[i] = lambda.parts()[i] + (ell - 1 - i);
    return b;
}

Partition from_beta(std::vector<int> b) {
    std::sort(b.begin(), b.end(), std::greater<int>());
    int ell = static_cast<int>(b.size());
    std::vector<int> parts;
    for (int i = 0; i < ell; ++i) {
        int p = b[i] - (ell - 1 - i);
        if (p > 0) parts.push_back(p);
    }
    return Partition(std::move(parts));
}

struct CharKey {
    std::vector<int> alpha;
    std::vector<int> lambda;
    bool operator<(const CharKey& o) const {
        if (alpha != o.alpha) return alpha < o.alpha;
        return lambda < o.lambda;
    }
};

std::map<CharKey, Integer> g_char_memo;
std::mutex g_char_mutex;

Integer mn_character(const Partition& alpha, const Partition& lambda) {
    if (alpha.cells() == 0) return 1;
    CharKey key{alpha.parts(), lambda.parts()};
    {
        std::lock_guard<std::mutex> lock(g_char_mutex);
        auto it = g_char_memo.find(key);
        if (it != g_char_memo.end()) return it->second;
    }

    int k = alpha.parts().front();
    std::vector<int> rest(alpha.parts().begin() + 1, alpha.parts().end());
    Partition alpha_rest{std::move(rest)};

    std::vector<int> betas = beta_numbers(lambda);
    std::set<int> occupied(betas.begin(), betas.end());

    Integer total = 0;
    for (size_t i = 0; i < betas.size(); ++i) {
        int b = betas[i];
        int t = b - k;
        if (t < 0 || occupied.count(t)) continue;
        int height = 0;
        for (int other : betas)
            if (t < other && other < b) ++height;
        std::vector<int> nb = betas;
        nb[i] = t;
        Integer sub = mn_character(alpha_rest, from_beta(std::move(nb)));
        total += (height % 2 == 0) ? sub : -sub;
    }

    std::lock_guard<std::mutex> lock(g_char_mutex);
    g_char_memo.emplace(std::move(key), total);
    return total;
}

}  // namespace

Integer character(const Partition& alpha, const Partition& lambda) {
    if (alpha.cells() != lambda.cells())
        throw std::invalid_argument("character: |alpha| != |lambda|");
    return mn_character(alpha, lambda);
}

Integer dim_sym(const Partition& lambda) {
    Integer hooks = 1;
    for (int h : cell_stats(lambda).hooks) hooks *= h;
    Integer d = factorial(static_cast<unsigned>(lambda.cells()));
    // hook product divides d!
    return d / hooks;
}

Integer dim_gl(const Partition& lambda, int N) {
    if (lambda.rows() > N) throw std::invalid_argument("dim_gl: ell(lambda) > N");
    CellStats cs = cell_stats(lambda);
    Rational dim = 1;
    for (size_t i = 0; i < cs.contents.size(); ++i) {
        Rational term(N + cs.contents[i], cs.hooks[i]);
        term.canonicalize();
        dim *= term;
    }
    return to_integer(dim);
}

Rational omega(const Partition& alpha, const Partition& lambda) {
    if (alpha.cells() != lambda.cells()) throw std::invalid_argument("omega: |alpha| != |lambda|");
    Rational w(class_size(alpha) * character(alpha, lambda));
    w /= Rational(dim_sym(lambda));
    w.canonicalize();
    return w;
}

CharacterTable character_table(int d) {
    CharacterTable t;
    t.d = d;
    t.classes = enumerate_partitions(d);
    for (const Partition& alpha : t.classes)
        for (const Partition& lambda : t.classes)
            t.values.emplace(PartitionPair{alpha, lambda}, character(alpha, lambda));
    return t;
}

}  // namespace hciz
