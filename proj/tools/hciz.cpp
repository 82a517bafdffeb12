// Command-line front end: exact expansion tables, decay diagnostics, and the
// verification suites, with machine-readable JSON/CSV output.

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "hciz/characters.hpp"
#include "hciz/expansions.hpp"
#include "hciz/haar_mc.hpp"
#include "hciz/integrals.hpp"
#include "hciz/monotone.hpp"
#include "hciz/plancherel.hpp"
#include "hciz/verify.hpp"

using nlohmann::json;
using namespace hciz;

namespace {

struct RunConfig {
    int d_max = 9;
    int D = 6;
    int hbar_order = 8;
    std::vector<int> n_grid{4, 8, 16};
    std::string epsilon = "1/20";  // evaluation radius for |z|
    long samples = 100000;
    std::uint64_t seed = 7;
    std::string format = "json";
    std::string output;

    void validate() const {
        if (d_max < 0 || d_max > 9) throw CLI::ValidationError("--d-max must be in 0..9");
        if (D > d_max) throw CLI::ValidationError("--D must be at most --d-max");
        Rational eps = rational_from_string(epsilon);
        if (!(eps > 0) || eps > rat(1, 2))
            throw CLI::ValidationError("--epsilon must lie in (0, 1/2]");
    }
};

std::string cache_dir() {
    const char* dir = std::getenv("HCIZ_CACHE_DIR");
    return dir ? std::string(dir) : std::string();
}

void emit(const RunConfig& cfg, const std::string& text, const std::string& cache_name = "") {
    if (!cache_name.empty() && !cache_dir().empty()) {
        std::filesystem::create_directories(cache_dir());
        std::ofstream f(std::filesystem::path(cache_dir()) / cache_name);
        f << text;
    }
    if (cfg.output.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream f(cfg.output);
    if (!f) throw std::runtime_error("cannot open output path " + cfg.output);
    f << text;
}

bool emit_cached(const RunConfig& cfg, const std::string& cache_name) {
    if (cache_name.empty() || cache_dir().empty()) return false;
    std::ifstream f(std::filesystem::path(cache_dir()) / cache_name);
    if (!f) return false;
    std::stringstream ss;
    ss << f.rdbuf();
    emit(cfg, ss.str());
    return true;
}

json partition_json(const Partition& p) { return json(p.parts()); }

Partition partition_from_string(const std::string& s) {
    std::vector<int> parts;
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ','))
        if (!tok.empty()) parts.push_back(std::stoi(tok));
    return Partition(std::move(parts));
}

std::vector<int> parse_grid(const std::string& s) {
    std::vector<int> out;
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ',')) out.push_back(std::stoi(tok));
    if (out.empty()) throw CLI::ValidationError("empty N grid");
    return out;
}

std::pair<int, int> parse_genus_range(const std::string& s) {
    auto dots = s.find("..");
    if (dots != std::string::npos)
        return {std::stoi(s.substr(0, dots)), std::stoi(s.substr(dots + 2))};
    int g = std::stoi(s);
    return {g, g};
}

json complex_json(Cx z) { return json{{"re", z.real()}, {"im", z.imag()}}; }

// Accepts decimal or rational parts: "0.1", "0.1i", "1e-2+0.3i", "1/10+1/5i".
Cx parse_complex(const std::string& s) {
    std::string t;
    for (char c : s)
        if (!std::isspace(static_cast<unsigned char>(c))) t.push_back(c);
    if (t.empty()) throw std::invalid_argument("empty complex literal");
    auto part = [](std::string u) -> double {
        if (!u.empty() && u.back() == '*') u.pop_back();
        if (u.empty() || u == "+") return 1.0;
        if (u == "-") return -1.0;
        auto slash = u.find('/');
        if (slash != std::string::npos)
            return std::stod(u.substr(0, slash)) / std::stod(u.substr(slash + 1));
        return std::stod(u);
    };
    if (t.back() == 'i') {
        t.pop_back();
        for (size_t k = t.size(); k-- > 1;) {
            if ((t[k] == '+' || t[k] == '-') && t[k - 1] != 'e' && t[k - 1] != 'E' &&
                t[k - 1] != '/')
                return {part(t.substr(0, k)), part(t[k] == '+' ? t.substr(k + 1) : t.substr(k))};
        }
        return {0.0, part(t)};
    }
    return {part(t), 0.0};
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

std::vector<GaussianRational> spectrum_from_json(const json& arr) {
    std::vector<GaussianRational> out;
    for (const auto& e : arr) {
        if (e.is_string())
            out.push_back(gaussian_from_string(e.get<std::string>()));
        else
            out.emplace_back(rational_from_string(e.at("re").get<std::string>()),
                             rational_from_string(e.at("im").get<std::string>()));
    }
    return out;
}

// ---------------------------------------------------------------- commands

int cmd_partitions(const RunConfig& cfg, int d, std::optional<int> max_rows) {
    json rows = json::array();
    for (const Partition& p : enumerate_partitions(d, max_rows)) rows.push_back(partition_json(p));
    emit(cfg, dump(json{{"d", d}, {"partitions", rows}}));
    return 0;
}

int cmd_char(const RunConfig& cfg, int d) {
    if (d > cfg.d_max) throw CLI::ValidationError("char: --d exceeds --d-max");
    std::string cache_name = "char_d" + std::to_string(d) + "." + cfg.format;
    if (emit_cached(cfg, cache_name)) return 0;
    CharacterTable t = character_table(d);
    if (cfg.format == "csv") {
        std::ostringstream os;
        os << "\"alpha\\lambda\"";
        for (const Partition& lam : t.classes) os << ",\"" << to_string(lam) << "\"";
        os << "\n";
        for (const Partition& alpha : t.classes) {
            os << "\"" << to_string(alpha) << "\"";
            for (const Partition& lam : t.classes)
                os << "," << t.values.at({alpha, lam}).get_str();
            os << "\n";
        }
        emit(cfg, os.str(), cache_name);
    } else {
        json classes = json::array(), table = json::array();
        for (const Partition& p : t.classes) classes.push_back(partition_json(p));
        for (const Partition& alpha : t.classes) {
            json row = json::array();
            for (const Partition& lam : t.classes) row.push_back(t.values.at({alpha, lam}).get_str());
            table.push_back(row);
        }
        emit(cfg, dump(json{{"d", d}, {"classes", classes}, {"chi", table}}), cache_name);
    }
    return 0;
}

int cmd_lis(const RunConfig& cfg, int d) {
    json rows = json::array();
    Rational prev(0);
    for (int N = 1; N <= d; ++N) {
        Rational cdf = lis_probability(d, N);
        rows.push_back(json{{"N", N}, {"cdf", to_string(cdf)}, {"pmf", to_string(cdf - prev)}});
        prev = cdf;
    }
    emit(cfg, dump(json{{"d", d}, {"distribution", rows}}));
    return 0;
}

int cmd_walks(const RunConfig& cfg, int d, int rmax, const std::string& route) {
    std::ostringstream os;
    os << "alpha,beta,r,count\n";
    auto parts = enumerate_partitions(d);
    for (const Partition& alpha : parts)
        for (const Partition& beta : parts)
            for (int r = 0; r <= rmax; ++r) {
                Integer w = route == "bruteforce" ? walks_bruteforce(alpha, beta, r)
                                                  : walks_jm(alpha, beta, r);
                os << "\"" << to_string(alpha) << "\",\"" << to_string(beta) << "\"," << r << ","
                   << w.get_str() << "\n";
            }
    emit(cfg, os.str());
    return 0;
}

int cmd_hurwitz(const RunConfig& cfg, int d, const std::string& genus, const std::string& kind) {
    auto [glo, ghi] = parse_genus_range(genus);
    std::string cache_name =
        "hurwitz_d" + std::to_string(d) + "_g" + std::to_string(glo) + "-" + std::to_string(ghi) +
        "_" + kind + ".csv";
    if (emit_cached(cfg, cache_name)) return 0;
    std::ostringstream os;
    auto parts = enumerate_partitions(d);
    if (kind == "single") {
        os << "beta,g,value\n";
        for (const Partition& beta : parts)
            for (int g = glo; g <= ghi; ++g)
                os << "\"" << to_string(beta) << "\"," << g << ","
                   << hurwitz_single(beta, g).get_str() << "\n";
    } else {
        bool connected = kind == "double";
        os << "alpha,beta,g,value\n";
        for (const Partition& alpha : parts)
            for (const Partition& beta : parts)
                for (int g = glo; g <= ghi; ++g) {
                    Integer h = connected ? hurwitz_connected(alpha, beta, g)
                                          : hurwitz_disconnected(alpha, beta, g);
                    os << "\"" << to_string(alpha) << "\",\"" << to_string(beta) << "\"," << g
                       << "," << h.get_str() << "\n";
                }
    }
    emit(cfg, os.str(), cache_name);
    return 0;
}

int cmd_expand(const RunConfig& cfg, const std::string& kind, int N, int D) {
    json rows = json::array();
    if (kind == "hciz") {
        auto s = assemble_I(N, D);
        for (int d = 1; d <= D; ++d)
            for (const auto& [key, c] : s.level(d))
                rows.push_back(json{{"d", d},
                                    {"alpha", partition_json(key.first)},
                                    {"beta", partition_json(key.second)},
                                    {"value", to_string(c)}});
    } else {
        auto s = assemble_J(N, D);
        for (int d = 1; d <= D; ++d)
            for (const auto& [key, c] : s.level(d))
                rows.push_back(json{
                    {"d", d}, {"beta", partition_json(key.second)}, {"value", to_string(c)}});
    }
    emit(cfg, dump(json{{"kind", kind}, {"N", N}, {"D", D}, {"coefficients", rows}}));
    return 0;
}

int cmd_delta(const RunConfig& cfg, const std::string& kind_s, int k, const std::string& grid,
              int D) {
    IntegralKind kind = kind_s == "bgw" ? IntegralKind::BGW : IntegralKind::HCIZ;
    std::vector<int> ns = parse_grid(grid);
    json rows = json::array();
    double prev = 0;
    for (int N : ns) {
        auto delta = discrepancy(kind, N, k, D);
        Rational worst = 0;
        for (int m = 0; m < 10; ++m) {
            // same deterministic grid the verification suite uses
            std::mt19937_64 rng(1000 + 16 * m);
            auto z = rat(1, 20) * verify::unit_pool()[(5 * m + 1) % verify::unit_pool().size()];
            auto a = verify::random_unit_spectrum(rng, N);
            auto b = verify::random_unit_spectrum(rng, N);
            GaussianRational v = kind == IntegralKind::HCIZ ? evaluate(delta, z, a, b)
                                                            : evaluate(delta, z, a);
            worst = std::max(worst, v.abs2());
        }
        double max_abs = std::sqrt(worst.get_d());
        json row{{"N", N}, {"max_abs_delta", max_abs}};
        if (prev > 0) row["ratio_to_prev"] = max_abs / prev;
        prev = max_abs;
        rows.push_back(row);
    }
    emit(cfg, dump(json{{"kind", kind_s}, {"k", k}, {"D", D}, {"grid_points", 10}, {"decay", rows}}));
    return 0;
}

int cmd_eval(const RunConfig& cfg, const std::string& kind, const std::string& z_str,
             const std::string& spectrum_path, int D) {
    std::ifstream f(spectrum_path);
    if (!f) throw std::runtime_error("cannot read spectrum file " + spectrum_path);
    json spec = json::parse(f);
    GaussianRational z = gaussian_from_string(z_str);

    std::vector<GaussianRational> terms;
    GaussianRational zstep = kind == "bgw" ? z * z : z;
    if (kind == "hciz") {
        auto a = spectrum_from_json(spec.at("a"));
        auto b = spectrum_from_json(spec.at("b"));
        terms = hciz_degree_coefficients(a, b, D);
    } else {
        auto c = spectrum_from_json(spec.at("c"));
        terms = bgw_degree_coefficients(c, D);
    }
    GaussianRational total, zpow{Rational(1)};
    json per_degree = json::array();
    for (int d = 0; d <= D; ++d) {
        if (d > 0) zpow *= zstep;
        GaussianRational term = zpow * terms[d];
        total += term;
        per_degree.push_back(json{{"d", d},
                                  {"coefficient", to_string(terms[d])},
                                  {"term", to_string(term)}});
    }
    emit(cfg, dump(json{{"kind", kind},
                        {"z", z_str},
                        {"D", D},
                        {"partial_sum", to_string(total)},
                        {"per_degree_terms", per_degree}}));
    return 0;
}

int cmd_mc(const RunConfig& cfg, const std::string& kind_s, int N, const std::string& z_str,
           const std::string& lambda_s, const std::string& mu_s) {
    Cx z = parse_complex(z_str);
    MCKind kind = MCKind::HCIZ;
    if (kind_s == "bgw") kind = MCKind::BGW;
    if (kind_s == "schur_pair") kind = MCKind::SchurPair;
    if (kind_s == "schur_conj") kind = MCKind::SchurConj;

    // deterministic unit-modulus spectra and conjugating unitaries from the seed
    std::mt19937_64 spec_rng(cfg.seed * 2654435761u + N);
    auto da = verify::random_unit_spectrum(spec_rng, N);
    auto db = verify::random_unit_spectrum(spec_rng, N);
    std::vector<Cx> da_cx, db_cx, c_cx;
    for (int i = 0; i < N; ++i) {
        da_cx.push_back(da[i].to_complex());
        db_cx.push_back(db[i].to_complex());
        c_cx.push_back(da_cx.back() * db_cx.back());
    }
    std::mt19937_64 conj_rng(cfg.seed * 0x9e3779b97f4a7c15ull + N);
    CMatrix V = sample_haar(N, conj_rng);
    CMatrix W = sample_haar(N, conj_rng);
    bool same_basis = kind == MCKind::BGW;  // keeps the spectrum of AB known
    CMatrix A = V * CMatrix::diagonal(da_cx) * V.adjoint();
    CMatrix B = (same_basis ? V : W) * CMatrix::diagonal(db_cx) * (same_basis ? V : W).adjoint();

    Partition lambda = lambda_s.empty() ? Partition() : partition_from_string(lambda_s);
    Partition mu = mu_s.empty() ? Partition() : partition_from_string(mu_s);
    MCEstimate est = mc_integral(kind, z, A, B, lambda, mu, cfg.samples, cfg.seed);

    json out{{"kind", kind_s},   {"N", N},
             {"z", complex_json(z)}, {"samples", est.samples},
             {"seed", est.seed}, {"rng", est.rng},
             {"estimate", complex_json(est.mean)},
             {"stderr", json{{"re", est.stderr_re}, {"im", est.stderr_im}}}};

    if (kind == MCKind::HCIZ || kind == MCKind::BGW) {
        int D = 12;
        Cx exact = kind == MCKind::HCIZ ? hciz_char(z, da_cx, db_cx, D) : bgw_char(z, c_cx, D);
        double tail = char_expansion_tail_bound(std::abs(z), N, D, kind == MCKind::BGW);
        bool ok = std::abs(est.mean.real() - exact.real()) <= 4 * est.stderr_re + tail &&
                  std::abs(est.mean.imag() - exact.imag()) <= 4 * est.stderr_im + tail;
        out["exact"] = complex_json(exact);
        out["exact_truncation_D"] = D;
        out["tail_bound"] = tail;
        out["within_4sigma"] = ok;
        out["spectrum_a"] = json::array();
        out["spectrum_b"] = json::array();
        for (int i = 0; i < N; ++i) {
            out["spectrum_a"].push_back(to_string(da[i]));
            out["spectrum_b"].push_back(to_string(db[i]));
        }
    }
    emit(cfg, dump(out));
    return 0;
}

int cmd_verify(const RunConfig& cfg, const std::string& suite_s, int k, const std::string& grid) {
    verify::Options opt;
    opt.mc_seed = cfg.seed;
    opt.mc_samples = cfg.samples;
    verify::Suite suite = verify::suite_from_string(suite_s);
    verify::Report rep = verify::run_suite(suite, opt);
    for (const auto& item : rep.items)
        std::cout << (item.pass ? "PASS" : "FAIL") << " criterion " << item.id << " (" << item.name
                  << "): " << item.detail << "\n";

    if (suite == verify::Suite::Asymptotic || suite == verify::Suite::All) {
        // informational decay table at the requested k over the N grid
        std::cout << "delta decay (hciz, k=" << k << ", D=4):\n";
        double prev = 0;
        for (int N : parse_grid(grid)) {
            auto delta = discrepancy(IntegralKind::HCIZ, N, k, 4);
            Rational worst = 0;
            for (int m = 0; m < 10; ++m) {
                std::mt19937_64 rng(1000 + 16 * m);
                auto z = rat(1, 20) * verify::unit_pool()[(5 * m + 1) % verify::unit_pool().size()];
                auto a = verify::random_unit_spectrum(rng, N);
                auto b = verify::random_unit_spectrum(rng, N);
                worst = std::max(worst, evaluate(delta, z, a, b).abs2());
            }
            double max_abs = std::sqrt(worst.get_d());
            std::cout << "  N=" << N << " max|Delta|=" << max_abs;
            if (prev > 0) std::cout << " ratio=" << max_abs / prev;
            std::cout << "\n";
            prev = max_abs;
        }
    }
    return rep.all_pass() ? 0 : 1;
}

int cmd_radius_trend(const RunConfig& cfg, int d_max) {
    if (d_max > 8) throw CLI::ValidationError("radius-trend: --d-max at most 8");
    std::string cache_name = "radius-trend_d" + std::to_string(d_max) + "." + cfg.format;
    if (emit_cached(cfg, cache_name)) return 0;
    auto rows = verify::radius_trend(d_max);
    bool monotone = true;
    for (size_t i = 2; i + 1 <= rows.size(); ++i)
        if (!(rows[i].ratio > rows[i - 1].ratio)) monotone = false;
    if (cfg.format == "csv") {
        std::ostringstream os;
        os << "d,normalized_coeff,ratio,reference\n";
        for (const auto& r : rows)
            os << r.d << "," << to_string(r.normalized) << ","
               << (r.d == 1 ? std::string() : to_string(r.ratio)) << ",13.5\n";
        os << "monotone," << (monotone ? "true" : "false") << ",,\n";
        emit(cfg, os.str(), cache_name);
    } else {
        json jrows = json::array();
        for (const auto& r : rows) {
            json row{{"d", r.d}, {"normalized_coeff", to_string(r.normalized)}};
            if (r.d > 1) {
                row["ratio"] = to_string(r.ratio);
                row["ratio_float"] = r.ratio.get_d();
            }
            jrows.push_back(row);
        }
        emit(cfg,
             dump(json{{"reference", 13.5}, {"monotone", monotone}, {"rows", jrows}}),
             cache_name);
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact string/character expansions of the HCIZ and BGW unitary integrals,\n"
                 "monotone Hurwitz enumeration, and asymptotic decay diagnostics"};
    app.require_subcommand(1);
    app.fallthrough();  // shared flags may follow the subcommand name

    RunConfig cfg;
    app.set_config("--config")->description("key=value config file; flags take precedence");
    app.add_option("--d-max", cfg.d_max, "largest degree for full tables (<= 9)");
    app.add_option("--samples", cfg.samples, "monte carlo sample count");
    app.add_option("--seed", cfg.seed, "master RNG seed");
    app.add_option("--format", cfg.format, "output format: json or csv")
        ->check(CLI::IsMember({"json", "csv"}));
    app.add_option("--output", cfg.output, "write output to this path instead of stdout");
    app.add_option("--epsilon", cfg.epsilon, "evaluation radius for |z| as a rational");
    app.add_option("--R", cfg.hbar_order, "hbar truncation order for symbolic-mode series");

    // partitions
    int p_d = 4;
    std::optional<int> p_rows;
    auto* sc_part = app.add_subcommand("partitions", "enumerate partitions of d");
    sc_part->add_option("--d", p_d, "cell count")->required();
    sc_part->add_option("--max-rows", p_rows, "row bound");

    // char
    int ch_d = 4;
    auto* sc_char = app.add_subcommand("char", "dump the full character table of S(d)");
    sc_char->add_option("--d", ch_d, "degree")->required();

    // lis
    int lis_d = 6;
    auto* sc_lis = app.add_subcommand("lis", "exact LIS distribution for S(d)");
    sc_lis->add_option("--d", lis_d, "degree")->required();

    // walks
    int w_d = 3, w_r = 4;
    std::string w_route = "jm";
    auto* sc_walks = app.add_subcommand("walks", "monotone walk counts W^r(alpha,beta)");
    sc_walks->add_option("--d", w_d, "degree")->required();
    sc_walks->add_option("--r", w_r, "max step count");
    sc_walks->add_option("--route", w_route, "jm or bruteforce")
        ->check(CLI::IsMember({"jm", "bruteforce"}));

    // hurwitz
    int h_d = 4;
    std::string h_genus = "0..2", h_kind = "double";
    auto* sc_hur = app.add_subcommand("hurwitz", "monotone Hurwitz numbers");
    sc_hur->add_option("--d", h_d, "degree")->required();
    sc_hur->add_option("--genus", h_genus, "genus or range g0..g1");
    sc_hur->add_option("--kind", h_kind, "double, single, or disconnected")
        ->check(CLI::IsMember({"double", "single", "disconnected"}));

    // expand
    std::string e_kind = "hciz";
    int e_N = 4, e_D = 5;
    auto* sc_exp = app.add_subcommand("expand", "string expansion coefficients");
    sc_exp->add_option("--kind", e_kind, "hciz or bgw")->check(CLI::IsMember({"hciz", "bgw"}));
    sc_exp->add_option("--N", e_N, "matrix dimension")->required();
    sc_exp->add_option("--D", e_D, "truncation degree")->required();

    // delta
    std::string dl_kind = "hciz", dl_grid = "4,8,16";
    int dl_k = 1, dl_D = 4;
    auto* sc_delta = app.add_subcommand("delta", "discrepancy decay table");
    sc_delta->add_option("--kind", dl_kind, "hciz or bgw")->check(CLI::IsMember({"hciz", "bgw"}));
    sc_delta->add_option("--k", dl_k, "genus cutoff");
    sc_delta->add_option("--N", dl_grid, "comma-separated N grid");
    sc_delta->add_option("--D", dl_D, "truncation degree");

    // eval
    std::string ev_kind = "hciz", ev_z = "1/10", ev_spec;
    int ev_D = 6;
    auto* sc_eval = app.add_subcommand("eval", "character-expansion partial sums at a spectrum");
    sc_eval->add_option("--kind", ev_kind, "hciz or bgw")->check(CLI::IsMember({"hciz", "bgw"}));
    sc_eval->add_option("--z", ev_z, "coupling, exact rational or a+b*i");
    sc_eval->add_option("--spectrum", ev_spec, "JSON file with a/b (hciz) or c (bgw) lists")
        ->required();
    sc_eval->add_option("--D", ev_D, "truncation degree");

    // mc
    std::string mc_kind = "hciz", mc_z = "1/10", mc_lambda, mc_mu;
    int mc_N = 2;
    auto* sc_mc = app.add_subcommand("mc", "haar monte carlo estimate and exact comparison");
    sc_mc->add_option("--kind", mc_kind, "hciz, bgw, schur_pair, schur_conj")
        ->check(CLI::IsMember({"hciz", "bgw", "schur_pair", "schur_conj"}));
    sc_mc->add_option("--N", mc_N, "matrix dimension")->required();
    sc_mc->add_option("--z", mc_z, "coupling (ignored by schur kinds)");
    sc_mc->add_option("--lambda", mc_lambda, "partition for schur kinds, e.g. 2,1");
    sc_mc->add_option("--mu", mc_mu, "second partition for schur_pair");

    // verify
    std::string v_suite = "all", v_grid = "4,8,16";
    int v_k = 1;
    auto* sc_ver = app.add_subcommand("verify", "run an acceptance suite; exit 0 iff all pass");
    sc_ver->add_option("suite", v_suite, "exact, asymptotic, mc, or all");
    sc_ver->add_option("--k", v_k, "genus cutoff for the decay table");
    sc_ver->add_option("--N", v_grid, "N grid for the decay table");

    // radius-trend
    int rt_dmax = 7;
    auto* sc_rt = app.add_subcommand("radius-trend", "genus-0 simple coefficient ratio trend");
    sc_rt->add_option("--d-max", rt_dmax, "largest degree (<= 8)");

    CLI11_PARSE(app, argc, argv);

    try {
        cfg.validate();
        // table-style commands default to CSV unless a format was requested
        RunConfig tab = cfg;
        if (app.get_option("--format")->count() == 0) tab.format = "csv";
        if (sc_part->parsed()) return cmd_partitions(cfg, p_d, p_rows);
        if (sc_char->parsed()) return cmd_char(tab, ch_d);
        if (sc_lis->parsed()) return cmd_lis(cfg, lis_d);
        if (sc_walks->parsed()) return cmd_walks(tab, w_d, w_r, w_route);
        if (sc_hur->parsed()) return cmd_hurwitz(tab, h_d, h_genus, h_kind);
        if (sc_exp->parsed()) {
            if (e_D > cfg.d_max) throw CLI::ValidationError("expand: --D exceeds --d-max");
            return cmd_expand(cfg, e_kind, e_N, e_D);
        }
        if (sc_delta->parsed()) {
            if (dl_D > cfg.d_max) throw CLI::ValidationError("delta: --D exceeds --d-max");
            return cmd_delta(cfg, dl_kind, dl_k, dl_grid, dl_D);
        }
        if (sc_eval->parsed()) return cmd_eval(cfg, ev_kind, ev_z, ev_spec, ev_D);
        if (sc_mc->parsed()) return cmd_mc(cfg, mc_kind, mc_N, mc_z, mc_lambda, mc_mu);
        if (sc_ver->parsed()) return cmd_verify(cfg, v_suite, v_k, v_grid);
        if (sc_rt->parsed()) return cmd_radius_trend(cfg, rt_dmax);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
