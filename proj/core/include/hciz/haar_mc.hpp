#pragma once

#include <complex>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "hciz/partition.hpp"

namespace hciz {

using Cx = std::complex<double>;

/// Dense complex matrix, row-major; sized for the small-N oracle only.
class CMatrix {
  public:
    CMatrix() = default;
    explicit CMatrix(int n) : n_(n), a_(static_cast<size_t>(n) * n, Cx(0, 0)) {}

    static CMatrix identity(int n);
    static CMatrix diagonal(const std::vector<Cx>& entries);

    int size() const { return n_; }
    Cx& operator()(int i, int j) { return a_[static_cast<size_t>(i) * n_ + j]; }
    const Cx& operator()(int i, int j) const { return a_[static_cast<size_t>(i) * n_ + j]; }

    CMatrix adjoint() const;
    Cx trace() const;
    friend CMatrix operator*(const CMatrix& x, const CMatrix& y);

    /// max |(U U^dagger - I)_{ij}|
    double unitarity_defect() const;

  private:
    int n_ = 0;
    std::vector<Cx> a_;
};

/// Haar-distributed unitary: complex Ginibre sample, Householder QR, then
/// each Q column divided by the phase of the matching R diagonal entry.
/// Guarded at N <= 16.
CMatrix sample_haar(int N, std::mt19937_64& rng);

struct MCEstimate {
    Cx mean{0, 0};
    double stderr_re = 0;  // sample standard deviation / sqrt(samples), per component
    double stderr_im = 0;
    long samples = 0;
    std::uint64_t seed = 0;
    std::string rng = "mt19937_64";
};

enum class MCKind { HCIZ, BGW, SchurPair, SchurConj };

/// Monte Carlo mean of the requested Haar integrand. lambda/mu are used by
/// the Schur kinds only. Guards: N <= 16, samples >= 1000.
MCEstimate mc_integral(MCKind kind, Cx z, const CMatrix& A, const CMatrix& B,
                       const Partition& lambda, const Partition& mu, long samples,
                       std::uint64_t seed);

MCEstimate mc_integral(MCKind kind, Cx z, const CMatrix& A, const CMatrix& B, long samples,
                       std::uint64_t seed);

/// Power sums of a matrix argument: p_k = Tr(M^k), k = 1..kmax.
std::vector<Cx> matrix_power_traces(const CMatrix& m, int kmax);

/// Schur polynomial of a matrix argument via traces of powers.
Cx schur_of_matrix(const Partition& lambda, const CMatrix& m);

/// Truncation tail bound for the degree-D partial sums at spectra of modulus
/// at most one: sum_{d>D} x^d/d! with x = |z| N^2 (HCIZ) or |z|^2 N^2 (BGW).
double char_expansion_tail_bound(double z_abs, int N, int D, bool bgw);

}  // namespace hciz
