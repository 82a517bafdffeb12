#include "hciz/partition.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

namespace hciz {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] < 1) throw std::invalid_argument("partition parts must be positive");
        if (i + 1 < parts_.size() && parts_[i] < parts_[i + 1])
            throw std::invalid_argument("partition parts must be weakly decreasing");
        cells_ += parts_[i];
    }
}

Partition Partition::one_column(int d) { return Partition(std::vector<int>(d, 1)); }

Partition Partition::one_row(int d) {
    if (d == 0) return Partition();
    return Partition(std::vector<int>{d});
}

Partition Partition::conjugate() const {
    std::vector<int> t;
    t.reserve(part(0));
    for (int col = 0; col < part(0); ++col) {
        int n = 0;
        while (n < rows() && parts_[n] > col) ++n;
        t.push_back(n);
    }
    return Partition(std::move(t));
}

bool revlex_less(const Partition& a, const Partition& b) {
    if (a.cells() != b.cells()) return a.cells() < b.cells();
    return std::lexicographical_compare(b.parts().begin(), b.parts().end(),
                                        a.parts().begin(), a.parts().end());
}

std::vector<Partition> enumerate_partitions(int d, std::optional<int> max_rows) {
    if (d < 0) throw std::invalid_argument("enumerate_partitions: d must be nonnegative");
    int rcap = max_rows.value_or(d);
    std::vector<Partition> out;
    std::vector<int> cur;
    // descending first parts yield reverse-lexicographic order
    auto rec = [&](auto&& self, int rest, int maxpart) -> void {
        if (rest == 0) {
            out.emplace_back(cur);
            return;
        }
        if (static_cast<int>(cur.size()) >= rcap) return;
        for (int p = std::min(rest, maxpart); p >= 1; --p) {
            cur.push_back(p);
            self(self, rest - p, p);
            cur.pop_back();
        }
    };
    rec(rec, d, d);
    return out;
}

CellStats cell_stats(const Partition& lambda) {
    CellStats cs;
    cs.contents.reserve(lambda.cells());
    cs.hooks.reserve(lambda.cells());
    Partition conj = lambda.conjugate();
    for (int i = 0; i < lambda.rows(); ++i) {
        for (int j = 0; j < lambda.parts()[i]; ++j) {
            cs.contents.push_back(j - i);
            int arm = lambda.parts()[i] - 1 - j;
            int leg = conj.parts()[j] - 1 - i;
            cs.hooks.push_back(arm + leg + 1);
        }
    }
    return cs;
}

Integer centralizer_order(const Partition& alpha) {
    std::map<int, int> mult;
    for (int p : alpha.parts()) mult[p]++;
    Integer z = 1;
    for (auto [k, m] : mult) {
        Integer kpow;
        mpz_ui_pow_ui(kpow.get_mpz_t(), static_cast<unsigned long>(k), static_cast<unsigned long>(m));
        z *= kpow * factorial(static_cast<unsigned>(m));
    }
    return z;
}

Integer class_size(const Partition& alpha) {
    return factorial(static_cast<unsigned>(alpha.cells())) / centralizer_order(alpha);
}

int riemann_hurwitz_steps(int g, const Partition& alpha, const Partition& beta) {
    if (alpha.cells() != beta.cells())
        throw std::invalid_argument("riemann_hurwitz_steps: |alpha| != |beta|");
    return 2 * g - 2 + alpha.rows() + beta.rows();
}

std::string to_string(const Partition& p) {
    std::string s = "[";
    for (int i = 0; i < p.rows(); ++i) {
        if (i) s += ",";
        s += std::to_string(p.parts()[i]);
    }
    return s + "]";
}

}  // namespace hciz
