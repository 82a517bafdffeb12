#include "hciz/monotone.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>
#include <stdexcept>
#include <vector>

#include "hciz/plancherel.hpp"

namespace hciz {

namespace {

using Perm = std::vector<int>;  // p[x] = image of x, 0-based

Partition cycle_type(const Perm& p) {
    int d = static_cast<int>(p.size());
    std::vector<bool> seen(d, false);
    std::vector<int> lens;
    for (int x = 0; x < d; ++x) {
        if (seen[x]) continue;
        int len = 0, y = x;
        while (!seen[y]) {
            seen[y] = true;
            y = p[y];
            ++len;
        }
        lens.push_back(len);
    }
    std::sort(lens.begin(), lens.end(), std::greater<int>());
    return Partition(std::move(lens));
}

struct UnionFind {
    std::vector<int> parent;
    explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    int find(int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    }
    void unite(int a, int b) { parent[find(a)] = find(b); }
    int components() {
        int c = 0;
        for (int x = 0; x < static_cast<int>(parent.size()); ++x)
            if (find(x) == x) ++c;
        return c;
    }
};

// Per-degree tally of all monotone walks up to rmax steps, bucketed by
// (start class, end class, step count), plus the transitive subcounts.
struct WalkTables {
    int rmax = -1;
    std::map<Partition, int, RevLexLess> class_index;
    std::vector<Partition> classes;
    // [start][end][r]
    std::vector<std::vector<std::vector<Integer>>> all;
    std::vector<std::vector<std::vector<Integer>>> transitive;
};

bool is_transitive(const Perm& start, const std::vector<std::pair<int, int>>& steps,
                   const Perm& end) {
    int d = static_cast<int>(start.size());
    UnionFind uf(d);
    for (int x = 0; x < d; ++x) {
        uf.unite(x, start[x]);
        uf.unite(x, end[x]);
    }
    for (auto [i, j] : steps) uf.unite(i, j);
    return uf.components() == 1;
}

void dfs_walks(Perm& cur, std::vector<std::pair<int, int>>& steps, int start_idx, int rmax,
               int min_j, const Perm& start, WalkTables& t) {
    int r = static_cast<int>(steps.size());
    Partition end_type = cycle_type(cur);
    int end_idx = t.class_index.at(end_type);
    t.all[start_idx][end_idx][r] += 1;
    if (is_transitive(start, steps, cur)) t.transitive[start_idx][end_idx][r] += 1;
    if (r == rmax) return;
    int d = static_cast<int>(cur.size());
    for (int j = min_j; j < d; ++j) {
        for (int i = 0; i < j; ++i) {
            // right-multiply by (i j): swap the preimages of i and j
            int xi = -1, xj = -1;
            for (int x = 0; x < d; ++x) {
                if (cur[x] == i) xi = x;
                if (cur[x] == j) xj = x;
            }
            std::swap(cur[xi], cur[xj]);
            steps.emplace_back(i, j);
            dfs_walks(cur, steps, start_idx, rmax, j, start, t);
            steps.pop_back();
            std::swap(cur[xi], cur[xj]);
        }
    }
}

std::map<int, WalkTables> g_walk_tables;
std::mutex g_walk_mutex;

const WalkTables& walk_tables(int d, int rmax) {
    std::lock_guard<std::mutex> lock(g_walk_mutex);
    WalkTables& t = g_walk_tables[d];
    if (t.rmax >= rmax) return t;
    t = WalkTables{};
    t.rmax = rmax;
    t.classes = enumerate_partitions(d);
    for (size_t i = 0; i < t.classes.size(); ++i)
        t.class_index.emplace(t.classes[i], static_cast<int>(i));
    size_t nc = t.classes.size();
    t.all.assign(nc, std::vector<std::vector<Integer>>(nc, std::vector<Integer>(rmax + 1, 0)));
    t.transitive = t.all;

    Perm p(d);
    std::iota(p.begin(), p.end(), 0);
    do {
        int start_idx = t.class_index.at(cycle_type(p));
        Perm cur = p;
        std::vector<std::pair<int, int>> steps;
        dfs_walks(cur, steps, start_idx, rmax, 1, p, t);
    } while (std::next_permutation(p.begin(), p.end()));
    return t;
}

void check_guard(const Partition& alpha, const Partition& beta, int r, const WalkGuard& guard) {
    if (alpha.cells() != beta.cells())
        throw std::invalid_argument("walk counts: |alpha| != |beta|");
    if (r < 0) throw std::invalid_argument("walk counts: r must be nonnegative");
    if (alpha.cells() > guard.max_cells || r > guard.max_steps)
        throw std::invalid_argument(
            "walk enumeration guarded at d <= " + std::to_string(guard.max_cells) + ", r <= " +
            std::to_string(guard.max_steps) + "; use jm route for larger instances");
}

}  // namespace

Integer walks_bruteforce(const Partition& alpha, const Partition& beta, int r,
                         const WalkGuard& guard) {
    check_guard(alpha, beta, r, guard);
    if (alpha.cells() == 0) return r == 0 ? 1 : 0;
    const WalkTables& t = walk_tables(alpha.cells(), r);
    return t.all[t.class_index.at(alpha)][t.class_index.at(beta)][r];
}

Integer hurwitz_bruteforce(const Partition& alpha, const Partition& beta, int r,
                           const WalkGuard& guard) {
    check_guard(alpha, beta, r, guard);
    if (alpha.cells() == 0) return 0;  // no cover of degree zero
    const WalkTables& t = walk_tables(alpha.cells(), r);
    return t.transitive[t.class_index.at(alpha)][t.class_index.at(beta)][r];
}

Integer walks_jm(const Partition& alpha, const Partition& beta, int r) {
    if (alpha.cells() != beta.cells()) throw std::invalid_argument("walks_jm: |alpha| != |beta|");
    if (r < 0) throw std::invalid_argument("walks_jm: r must be nonnegative");
    int d = alpha.cells();
    if (d == 0) return r == 0 ? 1 : 0;
    // at N = d the row restriction is vacuous and the normalizer is d!
    return to_integer(expect(alpha, beta, ContentPoly::complete(r), d));
}

namespace {

struct ConnectedTable {
    int rmax = -1;
    // per degree: (alpha, beta) -> vector over r of H^r
    std::map<PartitionPair, std::vector<Integer>, PairRevLexLess> counts;
};

std::map<int, ConnectedTable> g_connected;
std::mutex g_connected_mutex;

const ConnectedTable& connected_table(int d, int rmax) {
    std::lock_guard<std::mutex> lock(g_connected_mutex);
    ConnectedTable& t = g_connected[d];
    if (t.rmax >= rmax) return t;
    StringSeries<HbarPoly> walks = stable_walk_series(d, rmax);
    StringSeries<HbarPoly> connected = walks.log();
    t = ConnectedTable{};
    t.rmax = rmax;
    Rational dfact(factorial(static_cast<unsigned>(d)));
    for (const auto& [key, poly] : connected.level(d)) {
        std::vector<Integer> row(rmax + 1);
        for (int r = 0; r <= rmax; ++r) row[r] = to_integer(poly[r] * dfact);
        t.counts.emplace(key, std::move(row));
    }
    return t;
}

}  // namespace

Integer hurwitz_connected_steps(const Partition& alpha, const Partition& beta, int r) {
    if (alpha.cells() != beta.cells())
        throw std::invalid_argument("hurwitz_connected: |alpha| != |beta|");
    if (r < 0) return 0;
    int d = alpha.cells();
    if (d == 0) return 0;
    const ConnectedTable& t = connected_table(d, std::max(r, 2 * d));
    auto it = t.counts.find(PartitionPair{alpha, beta});
    if (it == t.counts.end()) return 0;
    return it->second.at(r);
}

Integer hurwitz_connected(const Partition& alpha, const Partition& beta, int g) {
    int r = riemann_hurwitz_steps(g, alpha, beta);
    if (r < 0) return 0;
    return hurwitz_connected_steps(alpha, beta, r);
}

Integer hurwitz_single(const Partition& beta, int g) {
    return hurwitz_connected(Partition::one_column(beta.cells()), beta, g);
}

Integer hurwitz_disconnected(const Partition& alpha, const Partition& beta, int g) {
    int r = riemann_hurwitz_steps(g, alpha, beta);
    if (r < 0) return 0;
    return walks_jm(alpha, beta, r);
}

StringSeries<HbarPoly> stable_walk_series(int D, int R) {
    HbarPoly unit(R, Rational(1));
    auto s = StringSeries<HbarPoly>::one(D, SeriesVariant::Pair, unit);
    for (int d = 1; d <= D; ++d) {
        Rational inv_dfact = Rational(1) / Rational(factorial(static_cast<unsigned>(d)));
        auto parts = enumerate_partitions(d);
        for (const Partition& alpha : parts)
            for (const Partition& beta : parts) {
                HbarPoly poly(R);
                bool nonzero = false;
                for (int r = 0; r <= R; ++r) {
                    Integer w = walks_jm(alpha, beta, r);
                    if (w != 0) {
                        poly[r] = Rational(w) * inv_dfact;
                        nonzero = true;
                    }
                }
                if (nonzero) s.set(d, {alpha, beta}, std::move(poly));
            }
    }
    return s;
}

namespace {
StringSeries<HbarPoly> genus_series(int gmin, int gmax, int D, int R) {
    HbarPoly unit(R, Rational(1));
    StringSeries<HbarPoly> s(D, SeriesVariant::Pair, unit);
    for (int d = 1; d <= D; ++d) {
        Rational inv_dfact = Rational(1) / Rational(factorial(static_cast<unsigned>(d)));
        auto parts = enumerate_partitions(d);
        for (const Partition& alpha : parts)
            for (const Partition& beta : parts) {
                HbarPoly poly(R);
                bool nonzero = false;
                for (int g = gmin; g <= gmax; ++g) {
                    int r = riemann_hurwitz_steps(g, alpha, beta);
                    if (r < 0 || r > R) continue;
                    Integer h = hurwitz_connected(alpha, beta, g);
                    if (h != 0) {
                        poly[r] = Rational(h) * inv_dfact;
                        nonzero = true;
                    }
                }
                if (nonzero) s.set(d, {alpha, beta}, std::move(poly));
            }
    }
    return s;
}
}  // namespace

StringSeries<HbarPoly> stable_genus_exponent(int k, int D, int R) { return genus_series(0, k, D, R); }

StringSeries<HbarPoly> stable_genus_tail(int k, int D, int R) {
    // r_g <= R bounds the genus range that can contribute at truncation
    int gmax = (R + 2) / 2;
    return genus_series(k + 1, gmax, D, R);
}

}  // namespace hciz
