#include "hciz/haar_mc.hpp"

#include <cmath>
#include <stdexcept>

#include "hciz/characters.hpp"

namespace hciz {

CMatrix CMatrix::identity(int n) {
    CMatrix m(n);
    for (int i = 0; i < n; ++i) m(i, i) = Cx(1, 0);
    return m;
}

CMatrix CMatrix::diagonal(const std::vector<Cx>& entries) {
    CMatrix m(static_cast<int>(entries.size()));
    for (int i = 0; i < m.size(); ++i) m(i, i) = entries[i];
    return m;
}

CMatrix CMatrix::adjoint() const {
    CMatrix m(n_);
    for (int i = 0; i < n_; ++i)
        for (int j = 0; j < n_; ++j) m(j, i) = std::conj((*this)(i, j));
    return m;
}

Cx CMatrix::trace() const {
    Cx t(0, 0);
    for (int i = 0; i < n_; ++i) t += (*this)(i, i);
    return t;
}

CMatrix operator*(const CMatrix& x, const CMatrix& y) {
    if (x.size() != y.size()) throw std::invalid_argument("CMatrix: size mismatch");
    int n = x.size();
    CMatrix r(n);
    for (int i = 0; i < n; ++i)
        for (int k = 0; k < n; ++k) {
            Cx xv = x(i, k);
            if (xv == Cx(0, 0)) continue;
            for (int j = 0; j < n; ++j) r(i, j) += xv * y(k, j);
        }
    return r;
}

double CMatrix::unitarity_defect() const {
    CMatrix p = (*this) * adjoint();
    double worst = 0;
    for (int i = 0; i < n_; ++i)
        for (int j = 0; j < n_; ++j) {
            Cx want = i == j ? Cx(1, 0) : Cx(0, 0);
            worst = std::max(worst, std::abs(p(i, j) - want));
        }
    return worst;
}

namespace {

// In-place Householder QR; returns Q (n x n), leaves R in a.
CMatrix householder_q(CMatrix& a) {
    int n = a.size();
    CMatrix q = CMatrix::identity(n);
    std::vector<Cx> v(n);
    for (int k = 0; k < n; ++k) {
        double norm = 0;
        for (int i = k; i < n; ++i) norm += std::norm(a(i, k));
        norm = std::sqrt(norm);
        if (norm == 0) continue;
        Cx x0 = a(k, k);
        Cx phase = std::abs(x0) > 0 ? x0 / std::abs(x0) : Cx(1, 0);
        Cx alpha = -phase * norm;
        double vnorm2 = 0;
        for (int i = k; i < n; ++i) {
            v[i] = a(i, k);
            if (i == k) v[i] -= alpha;
            vnorm2 += std::norm(v[i]);
        }
        if (vnorm2 == 0) continue;
        // apply H = I - 2 v v* / |v|^2 on the left of a, accumulate into q
        for (int j = k; j < n; ++j) {
            Cx dot(0, 0);
            for (int i = k; i < n; ++i) dot += std::conj(v[i]) * a(i, j);
            dot *= 2.0 / vnorm2;
            for (int i = k; i < n; ++i) a(i, j) -= dot * v[i];
        }
        for (int j = 0; j < n; ++j) {
            Cx dot(0, 0);
            for (int i = k; i < n; ++i) dot += std::conj(v[i]) * q(i, j);
            dot *= 2.0 / vnorm2;
            for (int i = k; i < n; ++i) q(i, j) -= dot * v[i];
        }
    }
    // q currently holds H_{n-1}...H_0; Q = q^dagger
    return q.adjoint();
}

}  // namespace

CMatrix sample_haar(int N, std::mt19937_64& rng) {
    if (N < 1 || N > 16) throw std::invalid_argument("sample_haar: guarded at 1 <= N <= 16");
    std::normal_distribution<double> gauss(0.0, 1.0);
    CMatrix g(N);
    for (int i = 0; i < N; ++i)
        for (int j = 0; j < N; ++j) g(i, j) = Cx(gauss(rng), gauss(rng));
    CMatrix r = g;
    CMatrix q = householder_q(r);
    // divide each Q column by the phase of the matching R diagonal entry
    for (int j = 0; j < N; ++j) {
        Cx d = r(j, j);
        double ad = std::abs(d);
        Cx phase = ad > 0 ? d / ad : Cx(1, 0);
        for (int i = 0; i < N; ++i) q(i, j) /= phase;
    }
    return q;
}

std::vector<Cx> matrix_power_traces(const CMatrix& m, int kmax) {
    std::vector<Cx> tr(kmax + 1);
    tr[0] = Cx(static_cast<double>(m.size()), 0);
    CMatrix p = m;
    for (int k = 1; k <= kmax; ++k) {
        if (k > 1) p = p * m;
        tr[k] = p.trace();
    }
    return tr;
}

Cx schur_of_matrix(const Partition& lambda, const CMatrix& m) {
    int d = lambda.cells();
    if (d == 0) return Cx(1, 0);
    std::vector<Cx> tr = matrix_power_traces(m, d);
    Cx total(0, 0);
    for (const Partition& alpha : enumerate_partitions(d)) {
        Integer chi = character(alpha, lambda);
        if (chi == 0) continue;
        Rational coeff(chi);
        coeff /= Rational(centralizer_order(alpha));
        Cx p(1, 0);
        for (int part : alpha.parts()) p *= tr[part];
        total += coeff.get_d() * p;
    }
    return total;
}

MCEstimate mc_integral(MCKind kind, Cx z, const CMatrix& A, const CMatrix& B,
                       const Partition& lambda, const Partition& mu, long samples,
                       std::uint64_t seed) {
    int N = A.size();
    if (N != B.size()) throw std::invalid_argument("mc_integral: matrix size mismatch");
    if (N < 1 || N > 16) throw std::invalid_argument("mc_integral: guarded at N <= 16");
    if (samples < 1000) throw std::invalid_argument("mc_integral: need at least 1000 samples");

    std::mt19937_64 rng(seed);
    double mean_re = 0, mean_im = 0, m2_re = 0, m2_im = 0;
    for (long s = 0; s < samples; ++s) {
        CMatrix u = sample_haar(N, rng);
        Cx value;
        switch (kind) {
            case MCKind::HCIZ: {
                Cx t = (A * u * B * u.adjoint()).trace();
                value = std::exp(z * static_cast<double>(N) * t);
                break;
            }
            case MCKind::BGW: {
                Cx t = (A * u).trace() + (B * u.adjoint()).trace();
                value = std::exp(z * static_cast<double>(N) * t);
                break;
            }
            case MCKind::SchurConj:
                value = schur_of_matrix(lambda, A * u * B * u.adjoint());
                break;
            case MCKind::SchurPair:
                value = schur_of_matrix(lambda, A * u) * schur_of_matrix(mu, B * u.adjoint());
                break;
        }
        // Welford, per component
        double n1 = static_cast<double>(s + 1);
        double dre = value.real() - mean_re;
        mean_re += dre / n1;
        m2_re += dre * (value.real() - mean_re);
        double dim_ = value.imag() - mean_im;
        mean_im += dim_ / n1;
        m2_im += dim_ * (value.imag() - mean_im);
    }

    MCEstimate est;
    est.mean = Cx(mean_re, mean_im);
    if (samples > 1) {
        est.stderr_re = std::sqrt(m2_re / (samples - 1) / samples);
        est.stderr_im = std::sqrt(m2_im / (samples - 1) / samples);
    }
    est.samples = samples;
    est.seed = seed;
    return est;
}

MCEstimate mc_integral(MCKind kind, Cx z, const CMatrix& A, const CMatrix& B, long samples,
                       std::uint64_t seed) {
    return mc_integral(kind, z, A, B, Partition(), Partition(), samples, seed);
}

double char_expansion_tail_bound(double z_abs, int N, int D, bool bgw) {
    double x = (bgw ? z_abs * z_abs : z_abs) * N * N;
    // sum_{d>D} x^d/d!, summed until terms vanish
    double term = 1;
    for (int d = 1; d <= D; ++d) term *= x / d;
    double tail = 0;
    for (int d = D + 1; d < D + 400; ++d) {
        term *= x / d;
        double prev = tail;
        tail += term;
        if (tail == prev) break;
    }
    return tail;
}

}  // namespace hciz
