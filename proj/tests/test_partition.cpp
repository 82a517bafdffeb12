#include <doctest.h>

#include <algorithm>
#include <map>
#include <numeric>
#include <vector>

#include "hciz/partition.hpp"

using namespace hciz;

namespace {

// brute-force class sizes by cycle type over all of S(d)
std::map<std::vector<int>, long> class_sizes_by_enumeration(int d) {
    std::vector<int> p(d);
    std::iota(p.begin(), p.end(), 0);
    std::map<std::vector<int>, long> out;
    do {
        std::vector<bool> seen(d, false);
        std::vector<int> type;
        for (int x = 0; x < d; ++x) {
            if (seen[x]) continue;
            int len = 0, y = x;
            while (!seen[y]) {
                seen[y] = true;
                y = p[y];
                ++len;
            }
            type.push_back(len);
        }
        std::sort(type.begin(), type.end(), std::greater<int>());
        out[type] += 1;
    } while (std::next_permutation(p.begin(), p.end()));
    return out;
}

}  // namespace

TEST_CASE("enumerate_partitions small cases") {
    auto p0 = enumerate_partitions(0);
    REQUIRE(p0.size() == 1);
    CHECK(p0[0].empty());

    auto p3 = enumerate_partitions(3);
    REQUIRE(p3.size() == 3);
    CHECK(p3[0].parts() == std::vector<int>{3});
    CHECK(p3[1].parts() == std::vector<int>{2, 1});
    CHECK(p3[2].parts() == std::vector<int>{1, 1, 1});

    auto p3r = enumerate_partitions(3, 2);
    REQUIRE(p3r.size() == 2);
    CHECK(p3r[0].parts() == std::vector<int>{3});
    CHECK(p3r[1].parts() == std::vector<int>{2, 1});
}

TEST_CASE("partition invariants enforced") {
    CHECK_THROWS(Partition({1, 2}));
    CHECK_THROWS(Partition({2, 0}));
    CHECK(Partition({2, 1}).cells() == 3);
    CHECK(Partition({2, 1}).rows() == 2);
}

TEST_CASE("cell stats") {
    CellStats s21 = cell_stats(Partition({2, 1}));
    std::vector<int> c = s21.contents, h = s21.hooks;
    std::sort(c.begin(), c.end());
    std::sort(h.begin(), h.end());
    CHECK(c == std::vector<int>{-1, 0, 1});
    CHECK(h == std::vector<int>{1, 1, 3});

    CellStats row = cell_stats(Partition({5}));
    CHECK(row.contents == std::vector<int>{0, 1, 2, 3, 4});

    CellStats s11 = cell_stats(Partition({1, 1}));
    std::vector<int> c2 = s11.contents, h2 = s11.hooks;
    std::sort(c2.begin(), c2.end());
    std::sort(h2.begin(), h2.end());
    CHECK(c2 == std::vector<int>{-1, 0});
    CHECK(h2 == std::vector<int>{1, 2});
}

TEST_CASE("conjugate") {
    CHECK(Partition({3}).conjugate() == Partition({1, 1, 1}));
    CHECK(Partition({2, 1}).conjugate() == Partition({2, 1}));
    CHECK(Partition({2, 2, 1}).conjugate() == Partition({3, 2}));

    for (int d = 0; d <= 9; ++d)
        for (const Partition& p : enumerate_partitions(d)) {
            CHECK(p.conjugate().conjugate() == p);
            // content multiset negates under transposition
            auto c1 = cell_stats(p).contents;
            auto c2 = cell_stats(p.conjugate()).contents;
            long s1 = std::accumulate(c1.begin(), c1.end(), 0L);
            long s2 = std::accumulate(c2.begin(), c2.end(), 0L);
            CHECK(s1 == -s2);
        }
}

TEST_CASE("class sizes against S(3) and S(4) enumeration") {
    for (int d : {1, 2, 3, 4, 5}) {
        auto brute = class_sizes_by_enumeration(d);
        for (const Partition& alpha : enumerate_partitions(d))
            CHECK(class_size(alpha) == brute.at(alpha.parts()));
    }
    CHECK(class_size(Partition({1, 1, 1})) == 1);
    CHECK(class_size(Partition({2, 1})) == 3);
    CHECK(class_size(Partition({3})) == 2);
}

TEST_CASE("class sizes sum to d!") {
    for (int d = 0; d <= 9; ++d) {
        Integer total = 0;
        for (const Partition& alpha : enumerate_partitions(d)) total += class_size(alpha);
        CHECK(total == factorial(static_cast<unsigned>(d)));
    }
}

TEST_CASE("hook product divides d!") {
    for (int d = 0; d <= 9; ++d) {
        Integer dfact = factorial(static_cast<unsigned>(d));
        for (const Partition& p : enumerate_partitions(d)) {
            Integer hooks = 1;
            for (int h : cell_stats(p).hooks) hooks *= h;
            CHECK(dfact % hooks == 0);
        }
    }
}

TEST_CASE("riemann-hurwitz step counts") {
    CHECK(riemann_hurwitz_steps(0, Partition({1}), Partition({1})) == 0);
    CHECK(riemann_hurwitz_steps(0, Partition({1, 1}), Partition({2})) == 1);
    CHECK(riemann_hurwitz_steps(1, Partition({1, 1, 1}), Partition({1, 1, 1})) == 6);
    CHECK(riemann_hurwitz_steps(-1, Partition({1}), Partition({1})) == -2);
    CHECK_THROWS(riemann_hurwitz_steps(0, Partition({2}), Partition({1})));
}

TEST_CASE("canonical order is reverse-lexicographic") {
    auto parts = enumerate_partitions(6);
    for (size_t i = 0; i + 1 < parts.size(); ++i) {
        CHECK(revlex_less(parts[i], parts[i + 1]));
        CHECK(!revlex_less(parts[i + 1], parts[i]));
    }
}
