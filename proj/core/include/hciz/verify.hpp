#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "hciz/rational.hpp"

namespace hciz::verify {

struct CheckResult {
    int id = 0;
    std::string name;
    bool pass = false;
    std::string detail;
};

struct Report {
    std::vector<CheckResult> items;
    bool all_pass() const {
        for (const CheckResult& r : items)
            if (!r.pass) return false;
        return true;
    }
};

struct Options {
    std::uint64_t mc_seed = 7;
    long mc_samples = 100000;
};

enum class Suite { Exact, Asymptotic, MC, All };

Suite suite_from_string(const std::string& name);

/// Runs one numbered acceptance check (1..10).
CheckResult run_criterion(int id, const Options& opt = {});

/// Exact: 1-6. Asymptotic: 7, 8, 10. MC: 9.
Report run_suite(Suite suite, const Options& opt = {});

/// Deterministic exact spectra used by the verification suites and tests.
std::vector<GaussianRational> random_gaussian_spectrum(std::mt19937_64& rng, int n);
std::vector<GaussianRational> random_unit_spectrum(std::mt19937_64& rng, int n);
const std::vector<GaussianRational>& unit_pool();

/// Genus-0 simple-coefficient trend row: ratio of d!-normalized coefficients.
struct TrendRow {
    int d;
    Rational normalized;  // H_0(1^d, 1^d) / d!
    Rational ratio;       // normalized(d) / normalized(d-1), 0 for d = 1
};
std::vector<TrendRow> radius_trend(int d_max);

}  // namespace hciz::verify
