#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "hciz/rational.hpp"

namespace hciz {

/// Integer partition: weakly decreasing positive parts. Immutable; the cell
/// count is cached at construction since partitions key every memo table.
class Partition {
  public:
    Partition() = default;  // empty partition, d = 0

    explicit Partition(std::vector<int> parts);

    static Partition one_column(int d);  // (1^d)
    static Partition one_row(int d);     // (d)

    const std::vector<int>& parts() const { return parts_; }
    int cells() const { return cells_; }                          // d
    int rows() const { return static_cast<int>(parts_.size()); }  // ell
    bool empty() const { return parts_.empty(); }

    int part(int i) const { return i < rows() ? parts_[i] : 0; }

    Partition conjugate() const;

    friend bool operator==(const Partition& a, const Partition& b) { return a.parts_ == b.parts_; }
    friend bool operator!=(const Partition& a, const Partition& b) { return !(a == b); }

  private:
    std::vector<int> parts_;
    int cells_ = 0;
};

/// Canonical order: by cell count, then reverse-lexicographic within a degree
/// ((3) before (2,1) before (1,1,1)). Partition-indexed maps all use it so
/// that CSV/JSON output is reproducible.
bool revlex_less(const Partition& a, const Partition& b);

struct RevLexLess {
    bool operator()(const Partition& a, const Partition& b) const { return revlex_less(a, b); }
};

using PartitionPair = std::pair<Partition, Partition>;

struct PairRevLexLess {
    bool operator()(const PartitionPair& a, const PartitionPair& b) const {
        if (a.first != b.first) return revlex_less(a.first, b.first);
        return revlex_less(a.second, b.second);
    }
};

/// All partitions of d with at most max_rows rows, reverse-lexicographic.
std::vector<Partition> enumerate_partitions(int d, std::optional<int> max_rows = std::nullopt);

/// Contents c = column - row and hook lengths of every cell, row-major.
struct CellStats {
    std::vector<int> contents;
    std::vector<int> hooks;
};

CellStats cell_stats(const Partition& lambda);

/// z_alpha = prod k^{m_k} m_k!, the centralizer order of the class.
Integer centralizer_order(const Partition& alpha);

/// |C_alpha| = d!/z_alpha.
Integer class_size(const Partition& alpha);

/// r_g(alpha, beta) = 2g - 2 + ell(alpha) + ell(beta); may be negative, in
/// which case the associated walk counts are zero.
int riemann_hurwitz_steps(int g, const Partition& alpha, const Partition& beta);

std::string to_string(const Partition& p);

}  // namespace hciz
