// Acceptance suite: runs every release criterion at its stated tolerance and
// prints one PASS/FAIL line per criterion. The CLI binary path must be passed
// as argv[1] (used by the byte-identical-output criterion).

#include <cmath>
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "hnoma/analytic.hpp"
#include "hnoma/asymptotic.hpp"
#include "hnoma/channel.hpp"
#include "hnoma/montecarlo.hpp"
#include "hnoma/params.hpp"
#include "hnoma/rates.hpp"

using namespace hnoma;

namespace {

int g_failures = 0;

void report(int criterion, bool pass, const std::string& what,
            const std::string& detail) {
    std::printf("[%s] C%-2d %s (%s)\n", pass ? "PASS" : "FAIL", criterion,
                what.c_str(), detail.c_str());
    if (!pass) ++g_failures;
}

SystemParams at(double beta, double eta, double rm, double snr_db) {
    const double rho_n = snr_db_to_rho(snr_db);
    return derive_params(rho_n, rho_n / eta, beta, rm);
}

struct Regime {
    double rm;
    double eta;
};
const std::vector<Regime> kRegimes = {
    {0.2, 5.0}, {1.0, 5.0}, {0.1, 1.0}, {1.0, 10.0}, {0.1, 10.0}};
const std::vector<double> kBetas = {0.25, 1.0 / 3.0};
const std::vector<double> kSnrs = {10.0, 20.0, 30.0, 40.0};
constexpr std::uint64_t kSeed = 1;

std::string fmt(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.3e", v);
    return buf;
}

// C1: |p_mc - p_analytic| <= max(3 stderr, 1e-4) for all schemes over the grid
void criterion_1() {
    const QuadratureSpec quad = QuadratureSpec::chebyshev(100);
    double worst_excess = -1e9;
    int points = 0;
    bool pass = true;
    for (double beta : kBetas)
        for (const Regime& r : kRegimes)
            for (double snr : kSnrs) {
                const SystemParams p = at(beta, r.eta, r.rm, snr);
                const McReport mc = estimate(p, 1000000, kSeed);
                const double exact[3] = {p_fsic_exact(p), p_hsic_npa_exact(p),
                                         p_hsic_pa_exact(p, quad)};
                const ProbabilityEstimate est[3] = {mc.fsic, mc.npa, mc.pa};
                for (int s = 0; s < 3; ++s) {
                    const double tol = std::max(3.0 * est[s].std_error, 1e-4);
                    const double err = std::abs(est[s].p_hat - exact[s]);
                    worst_excess = std::max(worst_excess, err - tol);
                    if (err > tol) pass = false;
                }
                ++points;
            }
    report(1, pass, "MC/analytic agreement over the 40-point grid, N=1e6",
           "worst err-tol margin " + fmt(worst_excess) + " over " +
               std::to_string(points) + " points x 3 schemes");
}

void criterion_2() {
    bool pass = true;
    double worst = 0.0;
    for (const auto& [beta, eta] :
         std::vector<std::pair<double, double>>{
             {0.25, 5.0}, {0.25, 10.0}, {1.0 / 3.0, 1.0}}) {
        const SystemParams p = at(beta, eta, 0.2, 60.0);
        const double floor = p_fsic_asymptotic(p);
        const double rel = std::abs(p_fsic_exact(p) - floor) / floor;
        worst = std::max(worst, rel);
        if (rel > 0.005) pass = false;
    }
    const double ref = p_fsic_asymptotic(at(0.25, 5.0, 0.2, 60.0));
    const bool ref_ok = std::abs(ref - 0.705882) < 1e-6;
    report(2, pass && ref_ok, "FSIC floor at 60 dB within 0.5% relative",
           "worst rel gap " + fmt(worst) + ", floor(1/4,5)=" + fmt(ref));
}

void criterion_3() {
    const double e_r = 1.0 / 1.4 - 1.0 / 2.2;  // 0.259740...
    const SystemParams p60 = at(0.25, 10.0, 1.0, 60.0);
    const double rel = std::abs(p_hsic_npa_exact(p60) - e_r) / e_r;
    const SystemParams p50 = at(0.25, 10.0, 1.0, 50.0);
    const McReport mc = estimate(p50, 10000000, kSeed);
    const double mc_err = std::abs(mc.npa.p_hat - e_r);
    const bool pass = rel <= 0.02 && mc_err <= 3.0 * mc.npa.std_error;
    report(3, pass, "HSIC-NPA floor E_r=0.259740 (exact 60 dB, MC 50 dB N=1e7)",
           "exact rel gap " + fmt(rel) + ", |mc-E_r|=" + fmt(mc_err) +
               " vs 3se=" + fmt(3.0 * mc.npa.std_error));
}

void criterion_4() {
    const double p60 = p_hsic_npa_exact(at(1.0 / 3.0, 10.0, 0.1, 60.0));
    const double p50 = p_hsic_npa_exact(at(1.0 / 3.0, 10.0, 0.1, 50.0));
    const double ratio = p50 / p60;
    const bool pass = p60 < 1e-4 && ratio >= 8.0 && ratio <= 12.0;
    report(4, pass, "HSIC-NPA vanishing branch at (1/3, 10, 0.1)",
           "p(60dB)=" + fmt(p60) + ", decade ratio " + fmt(ratio));
}

void criterion_5() {
    const QuadratureSpec quad = QuadratureSpec::chebyshev(100);
    bool pass = true;
    std::string detail;
    const struct {
        double beta, rm, threshold;
    } cases[2] = {{0.25, 1.0, 1e-3}, {1.0 / 3.0, 0.1, 1e-4}};
    for (const auto& c : cases) {
        const double p60 = p_hsic_pa_exact(at(c.beta, 10.0, c.rm, 60.0), quad);
        const double p50 = p_hsic_pa_exact(at(c.beta, 10.0, c.rm, 50.0), quad);
        const double ratio = p50 / p60;
        if (!(p60 < c.threshold && ratio >= 8.0 && ratio <= 12.0)) pass = false;
        detail += "p60=" + fmt(p60) + " ratio=" + fmt(ratio) + "; ";
    }
    report(5, pass, "HSIC-PA vanishes in both regimes at 60 dB", detail);
}

void criterion_6() {
    const struct {
        double beta, eta, rm, snr;
    } pts[5] = {{0.25, 5.0, 0.2, 10.0},
                {0.25, 5.0, 1.0, 20.0},
                {0.25, 10.0, 1.0, 30.0},
                {1.0 / 3.0, 1.0, 0.1, 40.0},
                {1.0 / 3.0, 10.0, 0.1, 50.0}};
    std::uint64_t violations = 0;
    for (const auto& pt : pts) {
        const SystemParams p = at(pt.beta, pt.eta, pt.rm, pt.snr);
        RandomStream stream = split_stream(kSeed, 0);
        for (std::uint64_t i = 0; i < 10000000; ++i) {
            const ChannelRealization ch = sample_channel(stream);
            const CoupledIndicators ind = coupled_indicators(p, ch);
            violations += ind.fail_pa > ind.fail_npa;
            violations += ind.fail_npa > ind.fail_fsic;
        }
    }
    report(6, violations == 0,
           "per-draw indicator ordering PA <= NPA <= FSIC, 5 x 1e7 draws",
           std::to_string(violations) + " violations");
}

void criterion_7() {
    const QuadratureSpec quad = QuadratureSpec::chebyshev(100);
    double worst_npa = 0.0, worst_pa = 0.0;
    for (double beta : kBetas)
        for (const Regime& r : kRegimes)
            for (double snr : kSnrs) {
                const SystemParams p = at(beta, r.eta, r.rm, snr);
                const NpaParts np = p_hsic_npa_parts(p);
                const double nsum = np.p_i1 + np.p_i2 + np.p_ii1 + np.p_ii2;
                const double nex = p_hsic_npa_exact(p);
                worst_npa = std::max(worst_npa,
                                     std::abs(nsum - nex) / std::abs(nex));
                const PaParts pp = p_hsic_pa_parts(p, quad);
                const double psum =
                    pp.p_i + pp.p_b1 + pp.p_b21 + pp.p_b221 + pp.p_b222;
                worst_pa = std::max(
                    worst_pa, std::abs(psum - p_hsic_pa_exact(p, quad)));
            }
    const bool pass = worst_npa <= 1e-12 && worst_pa <= 1e-7;
    report(7, pass, "decomposition identities across the grid",
           "NPA rel " + fmt(worst_npa) + " (<=1e-12), PA abs " + fmt(worst_pa) +
               " (<=1e-7)");
}

void criterion_8() {
    const QuadratureSpec q50 = QuadratureSpec::chebyshev(50);
    const QuadratureSpec q200 = QuadratureSpec::chebyshev(200);
    double worst = 0.0;
    for (double beta : kBetas)
        for (const Regime& r : kRegimes)
            for (double snr : kSnrs) {
                const SystemParams p = at(beta, r.eta, r.rm, snr);
                worst = std::max(worst, std::abs(p_hsic_pa_exact(p, q50) -
                                                 p_hsic_pa_exact(p, q200)));
            }
    auto one = [](double) { return 1.0; };
    const double gc = gauss_chebyshev_integrate(one, 0.0, 2.0, 200);
    const bool pass = worst < 1e-8 && std::abs(gc - 2.0) <= 1e-4;
    report(8, pass, "quadrature stability",
           "worst |nc50-nc200| " + fmt(worst) + " (<1e-8), GC(1,[0,2],200)=" +
               fmt(gc));
}

void criterion_9() {
    // series oracle at x = 1
    double term = 1.0, sum = 1.0;
    for (int n = 1; n < 60; ++n) {
        term *= -1.0 / n;
        sum += term / (2.0 * n + 1.0);
    }
    const double series = 1.1283791670955125739 * sum;
    const double impl = hnoma::erf(1.0);
    bool odd_ok = true;
    for (double x = 0.0; x <= 6.5; x += 0.173)
        odd_ok = odd_ok && hnoma::erf(-x) == -hnoma::erf(x);
    const bool pass = std::abs(impl - 0.84270079) <= 1e-8 &&
                      std::abs(impl - series) <= 1e-8 && odd_ok;
    report(9, pass, "erf accuracy and odd symmetry",
           "erf(1)=" + fmt(impl) + ", |impl-series|=" +
               fmt(std::abs(impl - series)));
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void criterion_10(const char* cli_path) {
    if (cli_path == nullptr) {
        report(10, false, "CLI byte-identical across worker counts",
               "no CLI path given on the command line");
        return;
    }
    namespace fs = std::filesystem;
    const fs::path dir = fs::temp_directory_path();
    const std::string a = (dir / "hnoma_accept_a.csv").string();
    const std::string b = (dir / "hnoma_accept_b.csv").string();
    const std::string base = std::string("\"") + cli_path +
                             "\" figure fig4a --samples 1000000 --seed 7";
    const int rc1 =
        std::system((base + " --threads 1 --out \"" + a + "\"").c_str());
    const int rc2 =
        std::system((base + " --threads 3 --out \"" + b + "\"").c_str());
    const std::string ca = read_file(a);
    const std::string cb = read_file(b);
    std::remove(a.c_str());
    std::remove(b.c_str());
    const bool pass =
        rc1 == 0 && rc2 == 0 && !ca.empty() && ca == cb;
    report(10, pass, "CLI byte-identical across worker counts (fig4a, seed 7)",
           "exit codes " + std::to_string(rc1) + "/" + std::to_string(rc2) +
               ", bytes " + std::to_string(ca.size()) + "/" +
               std::to_string(cb.size()) +
               (ca == cb ? ", identical" : ", DIFFER"));
}

void criterion_11() {
    const QuadratureSpec quad = QuadratureSpec::chebyshev(100);
    double worst = 0.0;
    int checked = 0;
    bool pass = true;
    for (double beta : kBetas)
        for (const Regime& r : kRegimes) {
            const SystemParams p = at(beta, r.eta, r.rm, 60.0);
            const double pairs[3][2] = {
                {p_fsic_exact(p), p_fsic_asymptotic(p)},
                {p_hsic_npa_exact(p), p_hsic_npa_asymptotic(p)},
                {p_hsic_pa_exact(p, quad), p_hsic_pa_asymptotic(p)}};
            for (const auto& pr : pairs) {
                if (pr[0] > 1e-6 && pr[1] > 1e-6) {
                    const double rel = std::abs(pr[0] - pr[1]) / pr[0];
                    worst = std::max(worst, rel);
                    if (rel > 0.10) pass = false;
                    ++checked;
                }
            }
        }
    report(11, pass, "asymptotic fidelity at 60 dB (both values > 1e-6)",
           "worst rel gap " + fmt(worst) + " over " + std::to_string(checked) +
               " scheme/regime pairs");
}

}  // namespace

int main(int argc, char** argv) {
    const char* cli_path = argc > 1 ? argv[1] : nullptr;
    criterion_1();
    criterion_2();
    criterion_3();
    criterion_4();
    criterion_5();
    criterion_6();
    criterion_7();
    criterion_8();
    criterion_9();
    criterion_10(cli_path);
    criterion_11();
    if (g_failures == 0) {
        std::printf("all acceptance criteria passed\n");
        return 0;
    }
    std::printf("%d acceptance criteria FAILED\n", g_failures);
    return 1;
}
