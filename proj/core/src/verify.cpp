#include "hciz/verify.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <sstream>
#include <stdexcept>

#include "hciz/expansions.hpp"
#include "hciz/haar_mc.hpp"
#include "hciz/integrals.hpp"
#include "hciz/monotone.hpp"
#include "hciz/plancherel.hpp"

namespace hciz::verify {

namespace {

Rational rational_abs(const Rational& q) { return q < 0 ? Rational(-q) : q; }

std::string dbl(const Rational& q) {
    std::ostringstream os;
    os << q.get_d();
    return os.str();
}

CheckResult result(int id, std::string name, bool pass, std::string detail) {
    return CheckResult{id, std::move(name), pass, std::move(detail)};
}

}  // namespace

const std::vector<GaussianRational>& unit_pool() {
    static const std::vector<GaussianRational> pool = [] {
        std::vector<GaussianRational> p;
        auto add = [&](long re_n, long re_d, long im_n, long im_d) {
            p.emplace_back(rat(re_n, re_d), rat(im_n, im_d));
        };
        add(1, 1, 0, 1);
        add(0, 1, 1, 1);
        add(-1, 1, 0, 1);
        add(0, 1, -1, 1);
        add(3, 5, 4, 5);
        add(3, 5, -4, 5);
        add(-4, 5, 3, 5);
        add(4, 5, 3, 5);
        add(5, 13, 12, 13);
        add(12, 13, -5, 13);
        add(8, 17, 15, 17);
        add(-15, 17, 8, 17);
        add(7, 25, 24, 25);
        add(20, 29, 21, 29);
        add(9, 41, 40, 41);
        add(-20, 29, 21, 29);
        for (const GaussianRational& z : p)
            if (z.abs2() != 1) throw std::logic_error("unit pool entry not unit modulus");
        return p;
    }();
    return pool;
}

std::vector<GaussianRational> random_gaussian_spectrum(std::mt19937_64& rng, int n) {
    std::uniform_int_distribution<int> num(-3, 3), den(1, 4);
    std::vector<GaussianRational> out;
    out.reserve(n);
    for (int i = 0; i < n; ++i) out.emplace_back(rat(num(rng), den(rng)), rat(num(rng), den(rng)));
    return out;
}

std::vector<GaussianRational> random_unit_spectrum(std::mt19937_64& rng, int n) {
    const auto& pool = unit_pool();
    std::uniform_int_distribution<size_t> pick(0, pool.size() - 1);
    std::vector<GaussianRational> out;
    out.reserve(n);
    for (int i = 0; i < n; ++i) out.push_back(pool[pick(rng)]);
    return out;
}

std::vector<TrendRow> radius_trend(int d_max) {
    if (d_max > 8) throw std::invalid_argument("radius_trend: d_max <= 8");
    std::vector<TrendRow> rows;
    Rational prev;
    for (int d = 1; d <= d_max; ++d) {
        Partition ones = Partition::one_column(d);
        Rational norm(hurwitz_connected(ones, ones, 0));
        norm /= Rational(factorial(static_cast<unsigned>(d)));
        TrendRow row{d, norm, d == 1 ? Rational(0) : norm / prev};
        prev = norm;
        rows.push_back(std::move(row));
    }
    return rows;
}

namespace {

// 1. Gessel-Rains / RSK: exact LIS distribution against brute force.
CheckResult c1() {
    int cases = 0;
    for (int d = 1; d <= 7; ++d)
        for (int N = 1; N <= d; ++N) {
            ++cases;
            if (lis_probability(d, N) != lis_bruteforce(d, N))
                return result(1, "lis distribution vs brute force", false,
                              "mismatch at d=" + std::to_string(d) + " N=" + std::to_string(N));
        }
    return result(1, "lis distribution vs brute force", true,
                  std::to_string(cases) + " cases exact");
}

// 2. Feynman expansion: JM route equals DFS enumeration, plus parity.
CheckResult c2() {
    int checked = 0;
    for (int d = 1; d <= 5; ++d) {
        auto parts = enumerate_partitions(d);
        for (const Partition& alpha : parts)
            for (const Partition& beta : parts) {
                for (int r = 0; r <= 6; ++r) {
                    ++checked;
                    if (walks_jm(alpha, beta, r) != walks_bruteforce(alpha, beta, r))
                        return result(2, "monotone walks jm vs dfs", false,
                                      "mismatch at d=" + std::to_string(d) + " (" +
                                          to_string(alpha) + "," + to_string(beta) +
                                          ") r=" + std::to_string(r));
                }
                for (int r = 0; r <= 8; ++r) {
                    if ((r + alpha.rows() + beta.rows()) % 2 != 0 &&
                        walks_jm(alpha, beta, r) != 0)
                        return result(2, "monotone walks jm vs dfs", false,
                                      "off-parity W^r nonzero at d=" + std::to_string(d));
                }
            }
    }
    return result(2, "monotone walks jm vs dfs", true,
                  std::to_string(checked) + " walk counts exact, off-parity vanishing holds");
}

// 3. Exponential Formula: series-log extraction equals transitive DFS counts.
CheckResult c3() {
    int checked = 0;
    for (int d = 1; d <= 4; ++d) {
        auto parts = enumerate_partitions(d);
        for (const Partition& alpha : parts)
            for (const Partition& beta : parts)
                for (int r = 0; r <= 6; ++r) {
                    ++checked;
                    if (hurwitz_connected_steps(alpha, beta, r) !=
                        hurwitz_bruteforce(alpha, beta, r))
                        return result(3, "exponential formula (connected walks)", false,
                                      "mismatch at d=" + std::to_string(d) + " (" +
                                          to_string(alpha) + "," + to_string(beta) +
                                          ") r=" + std::to_string(r));
                }
    }
    return result(3, "exponential formula (connected walks)", true,
                  std::to_string(checked) + " connected counts exact");
}

// 4. Cross-path: string series evaluation equals character expansion.
CheckResult c4() {
    std::mt19937_64 rng(20260809);
    int checked = 0;
    for (int N = 1; N <= 6; ++N) {
        auto series = assemble_I(N, 6);
        for (int t = 0; t < 5; ++t) {
            auto a = random_gaussian_spectrum(rng, N);
            auto b = random_gaussian_spectrum(rng, N);
            auto lhs = evaluate_degree_terms(series, a, b);
            auto rhs = hciz_degree_coefficients(a, b, 6);
            for (int d = 0; d <= 6; ++d, ++checked)
                if (!(lhs[d] == rhs[d]))
                    return result(4, "string vs character expansion", false,
                                  "hciz mismatch at N=" + std::to_string(N) +
                                      " d=" + std::to_string(d));
        }
    }
    for (int N = 1; N <= 4; ++N) {
        auto series = assemble_J(N, 6);
        for (int t = 0; t < 5; ++t) {
            auto c = random_gaussian_spectrum(rng, N);
            auto lhs = evaluate_degree_terms(series, c);
            auto rhs = bgw_degree_coefficients(c, 6);
            for (int d = 0; d <= 6; ++d, ++checked)
                if (!(lhs[d] == rhs[d]))
                    return result(4, "string vs character expansion", false,
                                  "bgw mismatch at N=" + std::to_string(N) +
                                      " d=" + std::to_string(d));
        }
    }
    return result(4, "string vs character expansion", true,
                  std::to_string(checked) + " degree terms exactly equal");
}

// 5. Trivial external fields: closed forms for both expansions.
CheckResult c5() {
    for (int N = 1; N <= 8; ++N) {
        std::vector<GaussianRational> ones(N, GaussianRational(Rational(1)));
        auto hc = hciz_degree_coefficients(ones, ones, 8);
        auto bc = bgw_degree_coefficients(ones, 8);
        auto hs = evaluate_degree_terms(assemble_I(N, 8), ones, ones);
        auto bs = evaluate_degree_terms(assemble_J(N, 8), ones);
        for (int d = 0; d <= 8; ++d) {
            Rational dfact(factorial(static_cast<unsigned>(d)));
            GaussianRational iwant{pow_rat(Rational(N), 2 * d) / dfact};
            GaussianRational jwant{pow_rat(Rational(N), 2 * d) * lis_probability(d, N) / dfact};
            if (!(hc[d] == iwant) || !(hs[d] == iwant))
                return result(5, "trivial-field closed forms", false,
                              "hciz at N=" + std::to_string(N) + " d=" + std::to_string(d));
            if (!(bc[d] == jwant) || !(bs[d] == jwant))
                return result(5, "trivial-field closed forms", false,
                              "bgw at N=" + std::to_string(N) + " d=" + std::to_string(d));
        }
    }
    return result(5, "trivial-field closed forms", true,
                  "d <= 8, N <= 8, both paths, exact");
}

// 6. Prop-style bounds on 20 unit-modulus spectra, equality at trivial fields.
CheckResult c6() {
    std::mt19937_64 rng(777001);
    for (int t = 0; t < 20; ++t) {
        int N = t % 4 + 1;
        Spectrum spec{random_unit_spectrum(rng, N), random_unit_spectrum(rng, N),
                      random_unit_spectrum(rng, N)};
        for (int d = 1; d <= 5; ++d)
            if (!string_coeff_bound_check(spec, d, N))
                return result(6, "basic modulus bounds", false,
                              "bound violated at N=" + std::to_string(N) +
                                  " d=" + std::to_string(d));
    }
    for (int N = 1; N <= 4; ++N) {
        std::vector<GaussianRational> ones(N, GaussianRational(Rational(1)));
        for (int d = 1; d <= 5; ++d) {
            GaussianRational id = hciz_degree_coefficients(ones, ones, d).at(d);
            id = Rational(factorial(static_cast<unsigned>(d))) * id;
            if (id.abs2() != pow_rat(Rational(N), 4 * d))
                return result(6, "basic modulus bounds", false,
                              "no equality at unit spectra, N=" + std::to_string(N));
        }
    }
    return result(6, "basic modulus bounds", true,
                  "20 spectra, d <= 5, N <= 4; equality at unit spectra");
}

// 7. Bridge between log string coefficients and the genus ladder.
CheckResult c7() {
    const std::vector<int> grid{8, 16, 32};
    std::map<int, StringSeries<Rational>> logs;
    for (int N : grid) logs.emplace(N, assemble_I(N, 4).log());

    double ratio_min = 1e300, ratio_max = 0;
    int pairs_checked = 0, ratios_checked = 0;
    for (int d = 1; d <= 4; ++d) {
        auto parts = enumerate_partitions(d);
        for (const Partition& alpha : parts)
            for (const Partition& beta : parts) {
                PartitionPair key{alpha, beta};
                int sign = (alpha.rows() + beta.rows()) % 2 == 0 ? 1 : -1;
                std::map<int, Rational> delta2;  // N -> |Delta_N^{(2)}|
                for (int N : grid) {
                    Rational L = normalized_coefficient(logs.at(N), d, key, N);
                    Rational partial = 0;
                    std::vector<Rational> remainders;
                    for (int g = 0; g <= 2; ++g) {
                        partial += Rational(sign) * pow_rat(Rational(N), 2 - 2 * g) *
                                   Rational(hurwitz_connected(alpha, beta, g));
                        remainders.push_back(rational_abs(L - partial));
                    }
                    for (size_t i = 0; i + 1 < remainders.size(); ++i)
                        if (remainders[i] < remainders[i + 1])
                            return result(7, "log-coefficient genus ladder", false,
                                          "remainder not decreasing in G at d=" +
                                              std::to_string(d) + " N=" + std::to_string(N));
                    delta2.emplace(N, pow_rat(Rational(N), 2) * remainders.back());
                }
                ++pairs_checked;
                for (size_t i = 0; i + 1 < grid.size(); ++i) {
                    const Rational& hi = delta2.at(grid[i]);
                    const Rational& lo = delta2.at(grid[i + 1]);
                    if (hi == 0 && lo == 0) continue;
                    if (lo == 0 || hi == 0)
                        return result(7, "log-coefficient genus ladder", false,
                                      "degenerate shrink at d=" + std::to_string(d));
                    Rational ratio = hi / lo;
                    ++ratios_checked;
                    ratio_min = std::min(ratio_min, ratio.get_d());
                    ratio_max = std::max(ratio_max, ratio.get_d());
                    if (ratio < rat(5, 2) || ratio > 6)
                        return result(7, "log-coefficient genus ladder", false,
                                      "shrink factor " + dbl(ratio) + " outside [2.5, 6] at d=" +
                                          std::to_string(d) + " (" + to_string(alpha) + "," +
                                          to_string(beta) + ") N=" + std::to_string(grid[i]));
                }
            }
    }
    std::ostringstream os;
    os << pairs_checked << " pairs; " << ratios_checked
       << " doubling ratios in [" << ratio_min << ", " << ratio_max << "] (theory 4)";
    return result(7, "log-coefficient genus ladder", true, os.str());
}

// Deterministic grid point m for criterion 8.
struct GridPoint {
    GaussianRational z;
    std::vector<GaussianRational> a, b, c;
};

GridPoint grid_point(int m, int N) {
    const auto& pool = unit_pool();
    auto at = [&](size_t i) { return pool[i % pool.size()]; };
    GridPoint p;
    p.z = rat(1, 20) * at(5 * m + 1);
    for (int i = 0; i < N; ++i) {
        p.a.push_back(at(m + 3 * i + 1));
        p.b.push_back(at(2 * m + 5 * i + 2));
        p.c.push_back(at(m + 4 * i + 3));
    }
    return p;
}

// 8. Delta decay on the 10-point grid, k in {0,1}, N in {4,8,16}.
CheckResult c8() {
    std::ostringstream os;
    for (IntegralKind kind : {IntegralKind::HCIZ, IntegralKind::BGW}) {
        bool pair = kind == IntegralKind::HCIZ;
        for (int k = 0; k <= 1; ++k) {
            std::vector<Rational> maxima;
            for (int N : {4, 8, 16}) {
                auto delta = discrepancy(kind, N, k, 4);
                Rational worst = 0;
                for (int m = 0; m < 10; ++m) {
                    GridPoint p = grid_point(m, N);
                    GaussianRational v = pair ? evaluate(delta, p.z, p.a, p.b)
                                              : evaluate(delta, p.z, p.c);
                    worst = std::max(worst, v.abs2());
                }
                maxima.push_back(worst);
            }
            for (size_t i = 0; i + 1 < maxima.size(); ++i)
                if (!(maxima[i] > maxima[i + 1]))
                    return result(8, "Delta_N^(k) decay", false,
                                  std::string(pair ? "hciz" : "bgw") + " k=" + std::to_string(k) +
                                      " not decreasing over N in {4,8,16}");
            os << (pair ? "hciz" : "bgw") << " k=" << k << ": max|Delta| "
               << std::sqrt(maxima[0].get_d()) << " -> " << std::sqrt(maxima[1].get_d())
               << " -> " << std::sqrt(maxima[2].get_d()) << "; ";
        }
    }
    return result(8, "Delta_N^(k) decay", true, os.str());
}

// 9. Monte Carlo oracle against the exact character partial sums.
CheckResult c9(const Options& opt) {
    const int D = 12;
    std::uint64_t seed = opt.mc_seed;
    std::ostringstream os;

    auto to_cx = [](const std::vector<GaussianRational>& v) {
        std::vector<Cx> out;
        out.reserve(v.size());
        for (const auto& g : v) out.push_back(g.to_complex());
        return out;
    };

    int run = 0;
    for (int N : {2, 3}) {
        std::mt19937_64 spec_rng(9100 + N);
        auto da = random_unit_spectrum(spec_rng, N);
        auto db = random_unit_spectrum(spec_rng, N);
        auto da_cx = to_cx(da), db_cx = to_cx(db);

        std::mt19937_64 conj_rng(4200 + N);
        CMatrix V = sample_haar(N, conj_rng);
        CMatrix W = sample_haar(N, conj_rng);
        CMatrix A_h = V * CMatrix::diagonal(da_cx) * V.adjoint();
        CMatrix B_h = W * CMatrix::diagonal(db_cx) * W.adjoint();
        CMatrix A_b = V * CMatrix::diagonal(da_cx) * V.adjoint();
        CMatrix B_b = V * CMatrix::diagonal(db_cx) * V.adjoint();
        std::vector<Cx> c_cx;
        for (int i = 0; i < N; ++i) c_cx.push_back(da_cx[i] * db_cx[i]);

        for (Cx z : {Cx(0.1, 0), Cx(0, 0.1)}) {
            Cx exact_i = hciz_char(z, da_cx, db_cx, D);
            double tail_i = char_expansion_tail_bound(std::abs(z), N, D, false);
            MCEstimate mi = mc_integral(MCKind::HCIZ, z, A_h, B_h, opt.mc_samples, seed + run++);
            if (std::abs(mi.mean.real() - exact_i.real()) > 4 * mi.stderr_re + tail_i ||
                std::abs(mi.mean.imag() - exact_i.imag()) > 4 * mi.stderr_im + tail_i)
                return result(9, "haar monte carlo oracle", false,
                              "hciz outside 4 sigma at N=" + std::to_string(N));

            Cx exact_j = bgw_char(z, c_cx, D);
            double tail_j = char_expansion_tail_bound(std::abs(z), N, D, true);
            MCEstimate mj = mc_integral(MCKind::BGW, z, A_b, B_b, opt.mc_samples, seed + run++);
            if (std::abs(mj.mean.real() - exact_j.real()) > 4 * mj.stderr_re + tail_j ||
                std::abs(mj.mean.imag() - exact_j.imag()) > 4 * mj.stderr_im + tail_j)
                return result(9, "haar monte carlo oracle", false,
                              "bgw outside 4 sigma at N=" + std::to_string(N));
        }
    }

    // Lemma orthogonality: off-diagonal schur pairs vanish.
    {
        int N = 3;
        std::mt19937_64 spec_rng(9300);
        auto da = to_cx(random_unit_spectrum(spec_rng, N));
        auto db = to_cx(random_unit_spectrum(spec_rng, N));
        std::mt19937_64 conj_rng(4300);
        CMatrix V = sample_haar(N, conj_rng);
        CMatrix W = sample_haar(N, conj_rng);
        CMatrix A = V * CMatrix::diagonal(da) * V.adjoint();
        CMatrix B = W * CMatrix::diagonal(db) * W.adjoint();
        long pair_samples = std::max(10000L, opt.mc_samples / 10);
        for (int d = 2; d <= 3; ++d) {
            auto parts = enumerate_partitions(d);
            for (const Partition& lam : parts)
                for (const Partition& mu : parts) {
                    if (lam == mu) continue;
                    MCEstimate e = mc_integral(MCKind::SchurPair, Cx(0, 0), A, B, lam, mu,
                                               pair_samples, seed + run++);
                    if (std::abs(e.mean.real()) > 4 * e.stderr_re ||
                        std::abs(e.mean.imag()) > 4 * e.stderr_im)
                        return result(9, "haar monte carlo oracle", false,
                                      "schur_pair (" + to_string(lam) + "," + to_string(mu) +
                                          ") not within 4 sigma of 0");
                }
        }
    }
    os << run << " monte carlo runs within 4 sigma bands, seed " << seed;
    return result(9, "haar monte carlo oracle", true, os.str());
}

// 10. Genus-zero simple coefficient ratio trend.
CheckResult c10() {
    auto rows = radius_trend(7);
    std::ostringstream os;
    os << "ratios";
    Rational prev = 0;
    for (const TrendRow& row : rows) {
        if (row.d == 1) continue;
        if (row.ratio >= rat(27, 2))
            return result(10, "radius trend", false,
                          "ratio at d=" + std::to_string(row.d) + " not below 13.5");
        if (row.d > 2 && !(row.ratio > prev))
            return result(10, "radius trend", false,
                          "ratios not monotone at d=" + std::to_string(row.d));
        prev = row.ratio;
        os << " " << row.ratio.get_d();
    }
    os << " (reference 13.5)";
    return result(10, "radius trend", true, os.str());
}

}  // namespace

Suite suite_from_string(const std::string& name) {
    if (name == "exact") return Suite::Exact;
    if (name == "asymptotic") return Suite::Asymptotic;
    if (name == "mc") return Suite::MC;
    if (name == "all") return Suite::All;
    throw std::invalid_argument("unknown suite '" + name + "' (exact|asymptotic|mc|all)");
}

CheckResult run_criterion(int id, const Options& opt) {
    switch (id) {
        case 1: return c1();
        case 2: return c2();
        case 3: return c3();
        case 4: return c4();
        case 5: return c5();
        case 6: return c6();
        case 7: return c7();
        case 8: return c8();
        case 9: return c9(opt);
        case 10: return c10();
        default: throw std::invalid_argument("criterion id must be in 1..10");
    }
}

Report run_suite(Suite suite, const Options& opt) {
    std::vector<int> ids;
    switch (suite) {
        case Suite::Exact: ids = {1, 2, 3, 4, 5, 6}; break;
        case Suite::Asymptotic: ids = {7, 8, 10}; break;
        case Suite::MC: ids = {9}; break;
        case Suite::All: ids = {1, 2, 3, 4, 5, 6, 7, 8, 9, 10}; break;
    }
    Report rep;
    for (int id : ids) rep.items.push_back(run_criterion(id, opt));
    return rep;
}

}  // namespace hciz::verify
