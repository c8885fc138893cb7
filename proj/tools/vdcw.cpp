// Command-line front door for the workbench: verification suites, the two
// extremal constants, the end-to-end construction, and the data-driven
// checks.  Every subcommand prints a single PASS/FAIL summary line and exits
// 0 only when all its checks pass; unknown flags exit 2 with usage.

#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "vdc/construct.hpp"
#include "vdc/optimize.hpp"
#include "vdc/parallel.hpp"
#include "vdc/suites.hpp"
#include "vdc/zeros.hpp"

namespace {

using namespace vdc;

void write_file(const std::string &path, const std::string &text) {
    if (path.empty()) return;
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << text;
}

int report_checks(const CheckList &checks, const std::string &label) {
    size_t failed = 0;
    for (const auto &c : checks) {
        std::cout << (c.pass ? "  ok   " : "  FAIL ") << c.name;
        if (!c.detail.empty()) std::cout << "  [" << c.detail << "]";
        std::cout << "  (" << c.seconds << " s)\n";
        if (!c.pass) failed++;
    }
    if (failed == 0) {
        std::cout << "PASS " << label << " (" << checks.size() << " checks)\n";
        return 0;
    }
    std::cout << "FAIL " << label << " (" << failed << "/" << checks.size() << " checks failed)\n";
    return 1;
}

} // namespace

int main(int argc, char **argv) {
    CLI::App app{"workbench for shifted-prime difference avoidance: exact Fourier algebra, "
                 "character machinery, damping, archimedean weights, and the recurrence constants"};
    app.require_subcommand(1);
    int threads = 0;
    app.add_option("--threads", threads, "worker threads (default: logical cores)");
    unsigned seed = 2026;
    app.add_option("--seed", seed, "seed for randomised checks");
    std::string data_dir = "data";
    app.add_option("--data-dir", data_dir, "directory holding bundled zero tables");
    std::string out_dir = ".";
    app.add_option("--out-dir", out_dir, "directory for CSV / JSON emission");

    // verify
    auto *verify = app.add_subcommand("verify", "run a module invariant suite");
    std::string suite = "all";
    verify->add_option("--suite", suite,
                       "periodic|characters|approximants|correlations|damping|expweight|zeros|all");

    // gamma
    auto *gamma = app.add_subcommand("gamma", "least constant term of a normalised nonnegative "
                                              "cosine polynomial on shifted-prime frequencies");
    i64 gamma_n = 2;
    double gamma_tol = 1e-9;
    std::string gamma_out;
    gamma->add_option("--n", gamma_n, "scale N")->required();
    gamma->add_option("--tol", gamma_tol, "certificate tolerance");
    gamma->add_option("--out", gamma_out, "CSV output path for the polynomial");

    // delta
    auto *delta = app.add_subcommand("delta", "largest subset of 1..N avoiding shifted-prime "
                                              "differences");
    i64 delta_n = 10;
    bool delta_exact_flag = false;
    std::string delta_out;
    delta->add_option("--n", delta_n, "scale N")->required();
    delta->add_flag("--exact", delta_exact_flag, "exact branch-and-bound (N <= 64)");
    delta->add_option("--out", delta_out, "JSON output path for the witness");

    // compare
    auto *compare = app.add_subcommand("compare", "density against twice the constant term");
    i64 compare_max = 20;
    std::string compare_out;
    compare->add_option("--n-max", compare_max, "largest N in the sweep")->required();
    compare->add_option("--out", compare_out, "CSV output path");

    // build-psi
    auto *bp = app.add_subcommand("build-psi", "assemble the weighted shifted-prime mass and "
                                               "profile its spectrum");
    i64 bp_n = 10000;
    double bp_t = 30;
    std::vector<double> bp_exps;
    std::string bp_zeros, bp_report;
    bool bp_sharp = false;
    double bp_meff = 10;
    bp->add_option("--n", bp_n, "scale N")->required();
    bp->add_option("--t", bp_t, "threshold base");
    bp->add_option("--exponents", bp_exps, "threshold exponents c1 c2 c3 (overrides defaults)")
        ->expected(3);
    bp->add_option("--zeros", bp_zeros, "zero data file (omit for the no-zero mode)");
    bp->add_flag("--sharp", bp_sharp, "replace the prime indicator by the zero-aware approximant");
    bp->add_option("--m-eff", bp_meff, "effective stand-in for the huge damping constant");
    bp->add_option("--report", bp_report, "JSON report path");

    // postnikov
    auto *post = app.add_subcommand("postnikov", "polynomial phase of a character on 1 + p^m Z");
    i64 post_p = 3;
    int post_n = 2, post_m = 1;
    int post_index = 0;
    post->add_option("--p", post_p, "prime")->required();
    post->add_option("--n", post_n, "conductor exponent")->required();
    post->add_option("--m", post_m, "progression depth")->required();
    post->add_option("--index", post_index, "which primitive character (enumeration order)");

    // explicit-formula
    auto *ef = app.add_subcommand("explicit-formula", "truncated explicit formula residual");
    double ef_x = 1000;
    std::string ef_zeros;
    i64 ef_q = 1;
    ef->add_option("--x", ef_x, "summation endpoint")->required();
    ef->add_option("--zeros", ef_zeros, "zero data file")->required();
    ef->add_option("--q", ef_q, "character modulus (principal character used)");

    CLI11_PARSE(app, argc, argv);
    set_threads(threads);
    SuitePaths paths{data_dir, out_dir};

    try {
        if (*verify) {
            return report_checks(run_suite(suite, paths), "verify --suite " + suite);
        }
        if (*gamma) {
            auto res = gamma_lp(gamma_n, 0, gamma_tol);
            std::ostringstream csv;
            csv.precision(17);
            csv << "shift,coefficient\n0," << res.poly.a0 << "\n";
            for (auto &[s, c] : res.poly.coeffs) csv << s << "," << c << "\n";
            write_file(gamma_out, csv.str());
            std::cout << "gamma(" << gamma_n << ") = " << res.gamma
                      << "  certified_min = " << res.certified_min
                      << "  duality_gap = " << res.duality_gap << "  cuts = " << res.cut_rounds
                      << "\n";
            bool ok = res.certified && res.duality_gap <= 1e-7;
            std::cout << (ok ? "PASS" : "FAIL") << " gamma --n " << gamma_n << "\n";
            return ok ? 0 : 1;
        }
        if (*delta) {
            IndependentSetResult res =
                (delta_exact_flag || delta_n <= 64) ? delta_exact(delta_n) : delta_heuristic(delta_n);
            nlohmann::json j{{"N", delta_n},
                             {"size", res.size},
                             {"density", static_cast<double>(res.size) / static_cast<double>(delta_n)},
                             {"witness", res.witness},
                             {"exact", delta_exact_flag || delta_n <= 64}};
            write_file(delta_out, j.dump(2));
            std::cout << "delta(" << delta_n << ") size = " << res.size << "  witness = {";
            for (size_t i = 0; i < res.witness.size(); i++)
                std::cout << (i ? "," : "") << res.witness[i];
            std::cout << "}\n";
            bool ok = DifferenceGraph::build(delta_n).independent(res.witness);
            std::cout << (ok ? "PASS" : "FAIL") << " delta --n " << delta_n << "\n";
            return ok ? 0 : 1;
        }
        if (*compare) {
            std::vector<CompareRow> rows;
            bool ok = true;
            for (i64 N = 2; N <= compare_max; N++) {
                auto row = compare_delta_gamma(N);
                ok = ok && row.margin >= 0;
                rows.push_back(row);
            }
            std::string csv = compare_csv(rows);
            write_file(compare_out.empty() ? out_dir + "/compare.csv" : compare_out, csv);
            std::cout << (ok ? "PASS" : "FAIL") << " compare --n-max " << compare_max << "\n";
            return ok ? 0 : 1;
        }
        if (*bp) {
            PsiConfig cfg;
            cfg.N = bp_n;
            cfg.T = bp_t;
            cfg.m_eff = bp_meff;
            if (!bp_exps.empty()) {
                cfg.c1 = bp_exps[0];
                cfg.c2 = bp_exps[1];
                cfg.c3 = bp_exps[2];
                cfg.exponents_overridden = true;
            }
            if (!bp_zeros.empty()) {
                ZeroSet zs = ZeroSet::load(bp_zeros);
                cfg.zeros = zs;
                if (!zs.empty()) {
                    auto cert = scale_select(static_cast<double>(bp_n), 0.5, zs, bp_meff);
                    cfg.exceptional = cert.branch == ScaleBranch::exceptional;
                    if (cfg.exceptional) cfg.q1 = cert.exceptional_zero->conductor;
                }
            }
            auto b = build_psi(cfg, bp_sharp ? PsiVariant::lambda_sharp : PsiVariant::lambda_prime);
            auto cert = cosine_certificate(b);
            nlohmann::json j = nlohmann::json::parse(b.to_json());
            j["certified"] = cert.certified;
            j["certified_min"] = cert.certified_min;
            j["certificate_grid_log2"] = cert.grid_log2;
            write_file(bp_report.empty() ? out_dir + "/psi_report.json" : bp_report, j.dump(2));
            write_file(out_dir + "/psi_polynomial.csv", cert.to_csv());
            std::cout << "delta1 = " << b.spectral.delta1 << "  delta2 = " << b.spectral.delta2
                      << "  a0 = " << cert.poly.a0 << "  certified = " << (cert.certified ? "yes" : "no")
                      << "\n";
            bool ok = cert.certified && b.spectral.delta2 > 0;
            std::cout << (ok ? "PASS" : "FAIL") << " build-psi --n " << bp_n << "\n";
            return ok ? 0 : 1;
        }
        if (*post) {
            i64 pn = 1;
            for (int i = 0; i < post_n; i++) pn *= post_p;
            auto prims = primitive_characters(pn);
            if (prims.empty()) throw std::invalid_argument("no primitive character at that conductor");
            if (post_index < 0 || post_index >= static_cast<int>(prims.size()))
                throw std::invalid_argument("character index out of range");
            auto poly = postnikov(prims[static_cast<size_t>(post_index)], post_m);
            std::cout << "f(x) =";
            for (size_t i = 0; i < poly.coeffs.size(); i++) {
                if (i) std::cout << " +";
                std::cout << " " << poly.coeffs[i] << " x^" << (i + 1);
            }
            std::cout << "  (mod " << poly.mod << ")\n";
            std::cout << "PASS postnikov --p " << post_p << " --n " << post_n << " --m " << post_m
                      << "\n";
            return 0;
        }
        if (*ef) {
            ZeroSet zs = ZeroSet::load(ef_zeros);
            auto res = explicit_formula_check(principal_character(ef_q), ef_x, zs,
                                              zs.threshold() > 0 ? zs.threshold() : ef_x);
            std::cout << "prime-power sum = " << res.psi_sum << "  zero-side = " << res.zero_sum
                      << "  residual = " << res.residual << "  scale = " << res.scale << "\n";
            bool ok = std::isfinite(res.residual);
            std::cout << (ok ? "PASS" : "FAIL") << " explicit-formula --x " << ef_x << "\n";
            return ok ? 0 : 1;
        }
    } catch (const std::exception &e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
